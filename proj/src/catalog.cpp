#include "assoc/catalog.hpp"

#include "assoc/errors.hpp"

namespace assoc {

namespace {

std::string path_in(const std::string& dir, const std::string& file) { return dir + "/" + file; }

std::string optional_string(const Json& j, const char* key) {
    return j.contains(key) && j.at(key).is_string() ? j.at(key).get<std::string>() : std::string();
}

}  // namespace

std::string default_catalog_dir() {
#ifdef ASSOC_DEFAULT_CATALOG_DIR
    return ASSOC_DEFAULT_CATALOG_DIR;
#else
    return "catalog";
#endif
}

std::vector<CatalogEntry> load_catalog_index(const std::string& dir) {
    const Json j = parse_json_text(read_text_file(path_in(dir, "index.json")));
    if (!j.contains("entries") || !j.at("entries").is_array()) throw ParseError(0, "index.json needs an 'entries' array");
    std::vector<CatalogEntry> out;
    for (const auto& e : j.at("entries")) {
        CatalogEntry c{optional_string(e, "name"),  optional_string(e, "scheme"),     optional_string(e, "eigen"),
                       optional_string(e, "group"), optional_string(e, "characters"), optional_string(e, "note")};
        if (c.name.empty() || c.scheme_file.empty()) throw ParseError(0, "catalog entries need 'name' and 'scheme'");
        out.push_back(std::move(c));
    }
    return out;
}

Json catalog_index_to_json(const std::vector<CatalogEntry>& entries) {
    Json list = Json::array();
    for (const auto& e : entries) {
        Json row{{"name", e.name}, {"scheme", e.scheme_file}, {"note", e.note}};
        if (!e.eigen_file.empty()) row["eigen"] = e.eigen_file;
        if (!e.group_file.empty()) row["group"] = e.group_file;
        if (!e.characters_file.empty()) row["characters"] = e.characters_file;
        list.push_back(std::move(row));
    }
    return Json{{"entries", list}};
}

LoadedEntry load_catalog_entry(const std::string& dir, const CatalogEntry& entry) {
    LoadedEntry L{entry, parse_scheme_file(read_text_file(path_in(dir, entry.scheme_file))), {}, {}, {}, {}};
    std::optional<CycMatrix> Q;
    if (!entry.eigen_file.empty()) Q = parse_eigen_file(read_text_file(path_in(dir, entry.eigen_file)));
    if (!entry.group_file.empty()) {
        L.group = parse_group_file(read_text_file(path_in(dir, entry.group_file)));
        L.classes = conjugacy_classes(*L.group);
        if (scheme_from_classes(*L.group, *L.classes).relation != L.scheme.relation) {
            throw ValidationError(entry.name + ": scheme file differs from the conjugacy class scheme of the group");
        }
    }
    if (!entry.characters_file.empty()) {
        if (!L.group) throw ValidationError(entry.name + ": character table without a group");
        L.characters = parse_character_file(read_text_file(path_in(dir, entry.characters_file)));
        L.eigen = eigendata_from_characters(*L.group, *L.classes, *L.characters);
        if (Q && !(L.eigen->Q == *Q)) throw ValidationError(entry.name + ": eigen file differs from the character-table eigenmatrix");
    } else if (Q) {
        L.eigen = attach_eigendata(L.scheme, *Q);
    }
    return L;
}

LoadedEntry load_catalog_entry(const std::string& dir, const std::string& name) {
    for (const auto& e : load_catalog_index(dir)) {
        if (e.name == name) return load_catalog_entry(dir, e);
    }
    throw PreconditionError("no catalog entry named '" + name + "'");
}

}  // namespace assoc

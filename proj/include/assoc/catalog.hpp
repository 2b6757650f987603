#pragma once

#include "assoc/io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace assoc {

/// One row of catalog/index.json. File names are relative to the catalog
/// directory; group and character files are empty for non-group schemes.
struct CatalogEntry {
    std::string name;
    std::string scheme_file;
    std::string eigen_file;
    std::string group_file;
    std::string characters_file;
    std::string note;
};

struct LoadedEntry {
    CatalogEntry entry;
    SchemeData scheme;
    std::optional<EigenData> eigen;
    std::optional<GroupTable> group;
    std::optional<ConjClassData> classes;
    std::optional<CharacterTable> characters;
};

/// Directory baked in at build time.
std::string default_catalog_dir();

std::vector<CatalogEntry> load_catalog_index(const std::string& dir);
Json catalog_index_to_json(const std::vector<CatalogEntry>& entries);

/// Loads and verifies every file of the entry. For group entries the scheme
/// rebuilt from the multiplication table must equal the scheme file, and the
/// eigen file must equal the eigenmatrix derived from the characters; a
/// mismatch raises ValidationError.
LoadedEntry load_catalog_entry(const std::string& dir, const CatalogEntry& entry);
LoadedEntry load_catalog_entry(const std::string& dir, const std::string& name);

}  // namespace assoc

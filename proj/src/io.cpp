#include "assoc/io.hpp"

#include "assoc/errors.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace assoc {

namespace {

using std::size_t;

[[noreturn]] void invalid(const std::string& reason) { throw ParseError(0, reason); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) invalid(std::string("missing field '") + key + "'");
    return j.at(key);
}

long as_long(const Json& j, const char* what) {
    if (!j.is_number_integer()) invalid(std::string(what) + " must be an integer");
    return j.get<long>();
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    invalid("expected a rational as \"p/q\" or an integer");
}

std::vector<std::vector<int>> int_grid(const Json& j, const char* what) {
    if (!j.is_array()) invalid(std::string(what) + " must be an array of rows");
    std::vector<std::vector<int>> out;
    for (const auto& row : j) {
        if (!row.is_array()) invalid(std::string(what) + " rows must be arrays");
        std::vector<int> r;
        for (const auto& v : row) r.push_back(static_cast<int>(as_long(v, what)));
        out.push_back(std::move(r));
    }
    return out;
}

Json term_list(const Cyclotomic& x) {
    Json terms = Json::array();
    for (const auto& [e, c] : x.terms()) terms.push_back(Json::array({e, to_string(c)}));
    return terms;
}

Cyclotomic entry_from_json(const Json& j, long conductor) {
    if (j.is_array()) {
        std::vector<Cyclotomic::Term> terms;
        for (const auto& t : j) {
            if (!t.is_array() || t.size() != 2) invalid("cyclotomic terms must be [exponent, coefficient] pairs");
            terms.emplace_back(as_long(t[0], "exponent"), rational_from_json(t[1]));
        }
        return Cyclotomic::from_terms(conductor, terms);
    }
    if (j.is_object()) return cyclotomic_from_json(j, conductor);
    return Cyclotomic(rational_from_json(j)).embed(conductor);
}

std::vector<std::vector<Cyclotomic>> cyclotomic_grid(const Json& j, long conductor, const char* what) {
    if (!j.is_array()) invalid(std::string(what) + " must be an array of rows");
    std::vector<std::vector<Cyclotomic>> out;
    for (const auto& row : j) {
        if (!row.is_array()) invalid(std::string(what) + " rows must be arrays");
        std::vector<Cyclotomic> r;
        for (const auto& v : row) r.push_back(entry_from_json(v, conductor));
        out.push_back(std::move(r));
    }
    return out;
}

long conductor_field(const Json& j) {
    const long n = as_long(field(j, "conductor"), "conductor");
    if (n < 1) invalid("conductor must be positive");
    return n;
}

}  // namespace

Json cyclotomic_to_json(const Cyclotomic& x) { return Json{{"conductor", x.conductor()}, {"terms", term_list(x)}}; }

Cyclotomic cyclotomic_from_json(const Json& j, long default_conductor) {
    if (j.is_object()) {
        const long n = conductor_field(j);
        const Cyclotomic x = entry_from_json(field(j, "terms"), n);
        return default_conductor % n == 0 ? x.embed(default_conductor) : x;
    }
    return entry_from_json(j, default_conductor);
}

Json parse_json_text(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& err) {
        const size_t upto = std::min(err.byte, text.size());
        const int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n'));
        throw ParseError(line, err.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json scheme_to_json(const SchemeData& s) {
    return Json{{"size", s.size}, {"classes", s.classes}, {"relation", s.relation_rows()}};
}

SchemeData scheme_from_json(const Json& j) {
    const auto grid = int_grid(field(j, "relation"), "relation");
    if (j.contains("size") && as_long(j.at("size"), "size") != static_cast<long>(grid.size())) {
        invalid("size does not match the relation matrix");
    }
    SchemeData s = verify_scheme(grid);
    if (j.contains("classes") && as_long(j.at("classes"), "classes") != s.classes) invalid("classes does not match the relation matrix");
    return s;
}

SchemeData parse_scheme_file(std::string_view text) { return scheme_from_json(parse_json_text(text)); }
std::string serialize_scheme(const SchemeData& s) { return canonical_dump(scheme_to_json(s)); }

Json eigen_to_json(const CycMatrix& Q) {
    Json rows = Json::array();
    for (int i = 0; i < Q.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < Q.cols(); ++j) row.push_back(term_list(Q(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"conductor", Q.conductor()}, {"Q", rows}};
}

CycMatrix eigen_from_json(const Json& j) {
    const long n = conductor_field(j);
    const auto grid = cyclotomic_grid(field(j, "Q"), n, "Q");
    for (const auto& row : grid) {
        if (row.size() != grid.size()) invalid("Q must be square");
    }
    return CycMatrix::from_rows(grid).embedded(n);
}

CycMatrix parse_eigen_file(std::string_view text) { return eigen_from_json(parse_json_text(text)); }
std::string serialize_eigen(const CycMatrix& Q) { return canonical_dump(eigen_to_json(Q)); }

Json group_to_json(const GroupTable& G) { return Json{{"order", G.order}, {"mult", G.rows()}}; }

GroupTable group_from_json(const Json& j) {
    const auto grid = int_grid(field(j, "mult"), "mult");
    if (j.contains("order") && as_long(j.at("order"), "order") != static_cast<long>(grid.size())) invalid("order does not match mult");
    return make_group_table(grid);
}

GroupTable parse_group_file(std::string_view text) { return group_from_json(parse_json_text(text)); }
std::string serialize_group(const GroupTable& G) { return canonical_dump(group_to_json(G)); }

Json characters_to_json(const CharacterTable& T) {
    long n = 1;
    for (const auto& row : T.rows)
        for (const auto& v : row) n = std::lcm(n, v.conductor());
    Json rows = Json::array();
    for (const auto& row : T.rows) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(term_list(v.embed(n)));
        rows.push_back(std::move(r));
    }
    return Json{{"conductor", n}, {"rows", rows}, {"degrees", T.degrees}};
}

CharacterTable characters_from_json(const Json& j) {
    const long n = conductor_field(j);
    CharacterTable T;
    T.rows = cyclotomic_grid(field(j, "rows"), n, "rows");
    const Json& deg = field(j, "degrees");
    if (!deg.is_array()) invalid("degrees must be an array");
    for (const auto& d : deg) T.degrees.push_back(as_long(d, "degree"));
    return T;
}

CharacterTable parse_character_file(std::string_view text) { return characters_from_json(parse_json_text(text)); }
std::string serialize_characters(const CharacterTable& T) { return canonical_dump(characters_to_json(T)); }

WeightedSubset design_from_json(const Json& j, int size) {
    if (j.is_object() && j.contains("weights")) {
        WeightedSubset w;
        for (const auto& v : j.at("weights")) w.weights.push_back(rational_from_json(v));
        if (static_cast<int>(w.weights.size()) != size) invalid("weights length differs from |X|");
        return w;
    }
    if (j.is_object() && j.contains("subset")) {
        std::vector<int> vs;
        for (const auto& v : j.at("subset")) {
            const long x = as_long(v, "subset vertex");
            if (x < 1 || x > size) invalid("subset vertex " + std::to_string(x) + " out of range 1.." + std::to_string(size));
            vs.push_back(static_cast<int>(x - 1));
        }
        return WeightedSubset::from_subset(size, vs);
    }
    invalid("design file needs 'weights' or 'subset'");
}

WeightedSubset parse_design_file(std::string_view text, int size) { return design_from_json(parse_json_text(text), size); }

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw PreconditionError("bad index '" + item + "'");
        out.push_back(v);
    }
    return out;
}

std::string render_table(const std::vector<std::vector<std::string>>& cells) {
    std::vector<size_t> width;
    for (const auto& row : cells) {
        if (row.size() > width.size()) width.resize(row.size(), 0);
        for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    for (const auto& row : cells) {
        std::string line;
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) line += "  ";
            line += std::string(width[c] - row[c].size(), ' ') + row[c];
        }
        out += line + "\n";
    }
    return out;
}

std::string render_matrix(const CycMatrix& M) {
    std::vector<std::vector<std::string>> cells;
    for (int r = 0; r < M.rows(); ++r) {
        std::vector<std::string> row;
        for (int c = 0; c < M.cols(); ++c) row.push_back(M(r, c).to_string());
        cells.push_back(std::move(row));
    }
    return render_table(cells);
}

}  // namespace assoc

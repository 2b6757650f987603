// Command-line front end for the association scheme toolkit.
#include "assoc/builtin_groups.hpp"
#include "assoc/catalog.hpp"
#include "assoc/delsarte_lp.hpp"
#include "assoc/dicyclic.hpp"
#include "assoc/errors.hpp"
#include "assoc/krein.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

using namespace assoc;

namespace {

struct Inputs {
    std::string catalog = default_catalog_dir();
    std::string entry;
    std::string scheme_file;
    std::string eigen_file;
};

struct Options {
    Inputs in;
    bool json = false;
    int threads = 1;
    std::string field = "Q";
    std::string subset;
    std::string design_file;
    std::string T;
    std::string S;
    int min_size = 1;
    int max_size = 0;
    std::string group;
    std::string group_file;
    std::string characters_file;
    int n = 3;
    std::string fuse = "none";
};

void add_inputs(CLI::App* cmd, Inputs& in, bool needs_eigen) {
    cmd->add_option("--entry", in.entry, "catalog entry name");
    cmd->add_option("--scheme", in.scheme_file, "scheme file (JSON)");
    if (needs_eigen) cmd->add_option("--eigen", in.eigen_file, "eigenmatrix file (JSON)");
}

struct Loaded {
    SchemeData scheme;
    std::optional<EigenData> eigen;
};

Loaded load(const Inputs& in, bool needs_eigen) {
    Loaded L;
    if (!in.entry.empty()) {
        auto e = load_catalog_entry(in.catalog, in.entry);
        L.scheme = std::move(e.scheme);
        L.eigen = std::move(e.eigen);
    } else {
        if (in.scheme_file.empty()) throw CLI::ValidationError("--scheme or --entry is required");
        L.scheme = parse_scheme_file(read_text_file(in.scheme_file));
        if (!in.eigen_file.empty()) L.eigen = attach_eigendata(L.scheme, parse_eigen_file(read_text_file(in.eigen_file)));
    }
    if (needs_eigen && !L.eigen) throw CLI::ValidationError("--eigen is required (or an --entry with an eigen file)");
    return L;
}

Json rationals_json(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& r : v) out.push_back(to_string(r));
    return out;
}

Json cyclotomics_json(const std::vector<Cyclotomic>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(cyclotomic_to_json(x));
    return out;
}

Json one_based(const std::vector<int>& v) {
    Json out = Json::array();
    for (int x : v) out.push_back(x + 1);
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::string show_ints(const std::vector<int>& v, int shift = 0) {
    std::vector<std::string> parts;
    for (int x : v) parts.push_back(std::to_string(x + shift));
    return "{" + join(parts) + "}";
}

std::string show_partition(const Partition& p) {
    std::vector<std::string> parts;
    for (const auto& cell : p) parts.push_back(show_ints(cell));
    return join(parts, " ");
}

std::string show(const std::vector<Rational>& v) {
    std::vector<std::string> parts;
    for (const auto& r : v) parts.push_back(to_string(r));
    return "[" + join(parts) + "]";
}

std::string show(const std::vector<Cyclotomic>& v) {
    std::vector<std::string> parts;
    for (const auto& x : v) parts.push_back(x.to_string());
    return "[" + join(parts) + "]";
}

SubfieldSpec parse_field(const std::string& text, long conductor) {
    if (text == "Q") return SubfieldSpec::rationals(conductor);
    if (text == "real") return SubfieldSpec::real(conductor);
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw CLI::ValidationError("--field must be Q, real or n:k1,k2,...");
    const long n = std::stol(text.substr(0, colon));
    std::vector<long> gens;
    for (int k : parse_index_list(text.substr(colon + 1))) gens.push_back(k);
    return SubfieldSpec(n, gens);
}

void emit(const Options& o, const Json& j, const std::string& text) {
    if (o.json) std::cout << j.dump(2) << "\n";
    else std::cout << text;
}

int cmd_scheme_verify(const Options& o) {
    const auto L = load(o.in, false);
    const auto& s = L.scheme;
    Json j{{"size", s.size}, {"classes", s.classes}, {"valencies", s.valencies}, {"transpose_map", s.transpose_map},
           {"symmetric", s.is_symmetric()}};
    std::vector<std::string> val;
    for (long v : s.valencies) val.push_back(std::to_string(v));
    emit(o, j,
         "scheme on " + std::to_string(s.size) + " points with " + std::to_string(s.classes - 1) + " classes\n" +
             "valencies: " + join(val) + "\n" + "transpose map: " + show_ints(s.transpose_map) + "\n" +
             "symmetric: " + (s.is_symmetric() ? "yes" : "no") + "\n");
    return 0;
}

int cmd_scheme_eigen(const Options& o) {
    const auto L = load(o.in, true);
    const auto& E = *L.eigen;
    const KreinData K = krein_parameters(E);
    Json j{{"P", eigen_to_json(E.P)["Q"]}, {"Q", eigen_to_json(E.Q)["Q"]}, {"conductor", E.Q.conductor()},
           {"multiplicities", E.multiplicities}, {"dual_map", E.dual_map}, {"splitting_conductor", E.splitting_conductor},
           {"krein_conductor", K.krein_conductor}, {"krein_nonnegative", true}};
    std::vector<std::string> mult;
    for (long m : E.multiplicities) mult.push_back(std::to_string(m));
    emit(o, j,
         "P =\n" + render_matrix(E.P) + "Q =\n" + render_matrix(E.Q) + "multiplicities: " + join(mult) + "\n" +
             "dual map: " + show_ints(E.dual_map) + "\n" + "splitting field: Q(zeta_" + std::to_string(E.splitting_conductor) +
             ")\nKrein parameters: real and nonnegative\n");
    return 0;
}

int cmd_fusion(const Options& o) {
    const auto L = load(o.in, true);
    const auto& E = *L.eigen;
    const SubfieldSpec K = parse_field(o.field, E.Q.conductor());
    const GaloisOrbitData G = orbit_merge(E, K);
    const auto verdict = bannai_muzychuk_idempotent(G);
    if (!verdict.passes) throw NotClosed(verdict.distinct_rows, G.merged_classes());
    const FusionScheme F = galois_fusion(L.scheme, E, K);
    Json j{{"passes", true},
           {"field", K.describe()},
           {"orbits", G.orbits},
           {"iota", G.iota},
           {"row_classes", verdict.row_classes},
           {"relation", F.fused.relation_rows()},
           {"P_F", eigen_to_json(F.P_F)["Q"]},
           {"Q_F", eigen_to_json(F.Q_F)["Q"]}};
    std::string rel;
    for (const auto& row : F.fused.relation_rows()) {
        std::vector<std::string> cells;
        for (int v : row) cells.push_back(std::to_string(v));
        rel += join(cells, " ") + "\n";
    }
    emit(o, j,
         "field: " + K.describe() + "\nBannai-Muzychuk: passes\norbits: " + show_partition(G.orbits) +
             "\nrow classes: " + show_partition(verdict.row_classes) + "\nQbar =\n" + render_matrix(G.Qbar) +
             "fused relation =\n" + rel + "P_F =\n" + render_matrix(F.P_F) + "Q_F =\n" + render_matrix(F.Q_F));
    return 0;
}

WeightedSubset subset_from(const Options& o, int size) {
    if (!o.design_file.empty()) return parse_design_file(read_text_file(o.design_file), size);
    if (o.subset.empty()) throw CLI::ValidationError("--subset or --design is required");
    std::vector<int> vs;
    for (int v : parse_index_list(o.subset)) {
        if (v < 1 || v > size) throw PreconditionError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(size));
        vs.push_back(v - 1);
    }
    return WeightedSubset::from_subset(size, vs);
}

int cmd_design_report(const Options& o) {
    const auto L = load(o.in, true);
    const auto R = design_report(L.scheme, *L.eigen, subset_from(o, L.scheme.size));
    Json j{{"a", rationals_json(R.a)}, {"b", cyclotomics_json(R.b)}, {"T", R.T}, {"orbit_closed", R.orbit_closed}};
    emit(o, j, "a = " + show(R.a) + "\nb = " + show(R.b) + "\nT = " + show_ints(R.T) + "\n");
    return 0;
}

int cmd_design_enum(const Options& o) {
    const auto L = load(o.in, true);
    const int max_size = o.max_size > 0 ? o.max_size : L.scheme.size;
    const auto R = enumerate_T_designs_checked(L.scheme, *L.eigen, parse_index_list(o.T), o.min_size, max_size, o.threads);
    Json list = Json::array();
    std::string text;
    for (const auto& c : R.designs) {
        list.push_back(one_based(c));
        text += show_ints(c, 1) + "\n";
    }
    Json j{{"count", R.designs.size()}, {"designs", list}, {"cross_checked", R.cross_checked}};
    emit(o, j,
         text + std::to_string(R.designs.size()) + " designs" + (R.cross_checked ? " (fused enumeration agrees)" : "") + "\n");
    return 0;
}

struct GroupInput {
    GroupTable G;
    ConjClassData C;
    std::optional<CharacterTable> T;
};

GroupInput load_group(const Options& o) {
    GroupInput g;
    if (!o.group.empty()) {
        BuiltinGroup B = builtin_group(BuiltinGroupSpec::parse(o.group));
        g.G = std::move(B.table);
        g.C = std::move(B.classes);
        g.T = std::move(B.characters);
        return g;
    }
    if (!o.in.entry.empty()) {
        auto e = load_catalog_entry(o.in.catalog, o.in.entry);
        if (!e.group) throw PreconditionError("catalog entry '" + o.in.entry + "' is not a group scheme");
        g.G = std::move(*e.group);
        g.C = std::move(*e.classes);
        g.T = std::move(e.characters);
        return g;
    }
    if (o.group_file.empty()) throw CLI::ValidationError("--group, --group-file or --entry is required");
    g.G = parse_group_file(read_text_file(o.group_file));
    g.C = conjugacy_classes(g.G);
    if (!o.characters_file.empty()) g.T = parse_character_file(read_text_file(o.characters_file));
    return g;
}

int cmd_group_build(const Options& o) {
    const GroupInput g = load_group(o);
    std::vector<long> sizes;
    for (int i = 0; i < g.C.count(); ++i) sizes.push_back(g.C.size(i));
    Json j{{"order", g.G.order}, {"classes", g.C.classes}, {"class_sizes", sizes}, {"class_inverse_map", g.C.class_inverse_map}};
    std::string text = "group of order " + std::to_string(g.G.order) + " with " + std::to_string(g.C.count()) + " classes\n";
    for (int i = 0; i < g.C.count(); ++i) text += "C_" + std::to_string(i) + " = " + show_ints(g.C.classes[static_cast<std::size_t>(i)]) + "\n";
    if (g.T) {
        const EigenData E = eigendata_from_characters(g.G, g.C, *g.T);
        j["characters"] = characters_to_json(*g.T);
        j["Q"] = eigen_to_json(E.Q)["Q"];
        j["P"] = eigen_to_json(E.P)["Q"];
        j["multiplicities"] = E.multiplicities;
        std::vector<std::vector<Cyclotomic>> rows = g.T->rows;
        text += "character table =\n" + render_matrix(CycMatrix::from_rows(rows)) + "P =\n" + render_matrix(E.P) + "Q =\n" + render_matrix(E.Q);
    }
    emit(o, j, text);
    return 0;
}

int cmd_group_rational_fusion(const Options& o) {
    const GroupInput g = load_group(o);
    if (!g.T) throw PreconditionError("rational fusion needs a character table");
    const EigenData E = eigendata_from_characters(g.G, g.C, *g.T);
    const auto [cells, F] = rational_class_fusion(g.G, g.C, E);
    Json j{{"rational_classes", cells}, {"P_F", eigen_to_json(F.P_F)["Q"]}, {"Q_F", eigen_to_json(F.Q_F)["Q"]},
           {"agrees_with_galois_fusion", true}};
    emit(o, j,
         "rational classes: " + show_partition(cells) + "\nP_F =\n" + render_matrix(F.P_F) + "Q_F =\n" + render_matrix(F.Q_F) +
             "agrees with the Galois fusion over Q\n");
    return 0;
}

int cmd_dicyclic_table(const Options& o) {
    const auto rows = dicyclic_subgroup_table(o.n);
    Json list = Json::array();
    std::vector<std::vector<std::string>> cells{{"subgroup", "order", "a", "b", "T"}};
    for (const auto& r : rows) {
        std::vector<Rational> b;
        for (const auto& x : r.b) b.push_back(x.to_rational());
        list.push_back(Json{{"subgroup", r.descriptor}, {"order", r.elements.size()}, {"a", rationals_json(r.a)},
                            {"b", rationals_json(b)}, {"T", r.T}});
        cells.push_back({r.descriptor, std::to_string(r.elements.size()), show(r.a), show(b), show_ints(r.T)});
    }
    emit(o, Json{{"n", o.n}, {"subgroups", list}}, render_table(cells));
    return 0;
}

Json lp_json(const LPResult& r) {
    return Json{{"status", to_string(r.status)}, {"value", to_string(r.value)}, {"solution", rationals_json(r.solution)}};
}

std::string lp_text(const LPResult& r) {
    if (r.status != LPStatus::Optimal) return "status: " + to_string(r.status) + "\n";
    return "status: optimal\nvalue: " + to_string(r.value) + "\nsolution: " + show(r.solution) + "\n";
}

int cmd_lp(const Options& o, bool design) {
    const auto L = load(o.in, true);
    const EigenData& E = *L.eigen;
    const std::vector<int> idx = parse_index_list(design ? o.T : o.S);
    LPResult r;
    if (o.fuse == "none") {
        r = design ? delsarte_design_lp(E, idx) : delsarte_code_lp(E, idx);
    } else if (o.fuse == "merged") {
        if (!design) throw CLI::ValidationError("--fuse merged applies to design-bound only");
        r = delsarte_design_lp_merged(E, idx);
    } else if (o.fuse == "rational" || o.fuse == "real") {
        const SubfieldSpec K = o.fuse == "rational" ? SubfieldSpec::rationals(E.Q.conductor()) : SubfieldSpec::real(E.Q.conductor());
        const FusionScheme F = galois_fusion(L.scheme, E, K);
        const EigenData EF = fused_eigendata(F);
        std::vector<int> mapped;
        if (design) {
            if (!is_union_of_orbits(idx, F.idempotent_partition)) throw IncompatibleT("T is not a union of Galois orbits");
            for (int l : merged_index_set(idx, cell_index(F.idempotent_partition, E.classes()))) mapped.push_back(l);
            r = delsarte_design_lp(EF, mapped);
        } else {
            const auto cell_of = cell_index(F.relation_partition, L.scheme.classes);
            for (int i : idx) mapped.push_back(cell_of.at(static_cast<std::size_t>(i)));
            r = delsarte_code_lp(EF, mapped);
        }
    } else {
        throw CLI::ValidationError("--fuse must be none, rational, real or merged");
    }
    emit(o, lp_json(r), lp_text(r));
    return 0;
}

int cmd_catalog_list(const Options& o) {
    const auto entries = load_catalog_index(o.in.catalog);
    std::size_t width = 0;
    for (const auto& e : entries) width = std::max(width, e.name.size());
    std::string text;
    for (const auto& e : entries) text += e.name + std::string(width - e.name.size() + 2, ' ') + e.note + "\n";
    emit(o, catalog_index_to_json(entries), text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact association scheme toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "emit JSON");
    app.add_option("--threads", o.threads, "worker threads for enumeration (0 = all cores)");
    app.add_option("--catalog", o.in.catalog, "catalog directory");

    auto* scheme = app.add_subcommand("scheme", "scheme verification and eigenstructure");
    scheme->require_subcommand(1);
    auto* verify = scheme->add_subcommand("verify", "check the scheme axioms");
    add_inputs(verify, o.in, false);
    auto* eigen = scheme->add_subcommand("eigen", "verify eigenmatrices and Krein parameters");
    add_inputs(eigen, o.in, true);

    auto* fusion = app.add_subcommand("fusion", "Galois fusion over a subfield");
    add_inputs(fusion, o.in, true);
    fusion->add_option("--field", o.field, "Q, real, or n:k1,k2 (fixing group generators mod n)");

    auto* design = app.add_subcommand("design", "Delsarte designs");
    design->require_subcommand(1);
    auto* report = design->add_subcommand("report", "inner and dual distribution of a subset");
    add_inputs(report, o.in, true);
    report->add_option("--subset", o.subset, "vertices, 1-based, comma separated");
    report->add_option("--design", o.design_file, "design file (JSON)");
    auto* enumerate = design->add_subcommand("enum", "enumerate T-designs exhaustively");
    add_inputs(enumerate, o.in, true);
    enumerate->add_option("--T", o.T, "eigenspace indices, comma separated")->required();
    enumerate->add_option("--min", o.min_size, "smallest size");
    enumerate->add_option("--max", o.max_size, "largest size (default |X|)");

    auto* group = app.add_subcommand("group", "conjugacy class schemes");
    group->require_subcommand(1);
    auto* build = group->add_subcommand("build", "classes, characters and eigenmatrices");
    auto* rational = group->add_subcommand("rational-fusion", "fusion by rational conjugacy classes");
    for (auto* cmd : {build, rational}) {
        cmd->add_option("--group", o.group, "cyclic:n, abelian:n1,n2,... or dicyclic:n");
        cmd->add_option("--group-file", o.group_file, "group file (JSON)");
        cmd->add_option("--characters", o.characters_file, "character table file (JSON)");
        cmd->add_option("--entry", o.in.entry, "catalog entry name");
    }

    auto* dicyclic = app.add_subcommand("dicyclic", "dicyclic group case study");
    dicyclic->require_subcommand(1);
    auto* table = dicyclic->add_subcommand("table", "subgroup distributions of Dic_n");
    table->add_option("--n", o.n, "odd n >= 3")->required();

    auto* lp = app.add_subcommand("lp", "Delsarte linear programming bounds");
    lp->require_subcommand(1);
    auto* dbound = lp->add_subcommand("design-bound", "lower bound on T-design size");
    add_inputs(dbound, o.in, true);
    dbound->add_option("--T", o.T, "eigenspace indices");
    dbound->add_option("--fuse", o.fuse, "none, rational, real or merged");
    auto* cbound = lp->add_subcommand("code-bound", "upper bound on codes avoiding relations S");
    add_inputs(cbound, o.in, true);
    cbound->add_option("--S", o.S, "forbidden relation indices");
    cbound->add_option("--fuse", o.fuse, "none, rational or real");

    auto* catalog = app.add_subcommand("catalog", "bundled examples");
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "list catalog entries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) return cmd_scheme_verify(o);
        if (*eigen) return cmd_scheme_eigen(o);
        if (*fusion) return cmd_fusion(o);
        if (*report) return cmd_design_report(o);
        if (*enumerate) return cmd_design_enum(o);
        if (*build) return cmd_group_build(o);
        if (*rational) return cmd_group_rational_fusion(o);
        if (*table) return cmd_dicyclic_table(o);
        if (*dbound) return cmd_lp(o, true);
        if (*cbound) return cmd_lp(o, false);
        if (*list) return cmd_catalog_list(o);
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const assoc::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

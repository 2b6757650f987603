// Writes the bundled example catalog: scheme, eigenmatrix, group and
// character files plus index.json.
#include "assoc/builtin_groups.hpp"
#include "assoc/catalog.hpp"
#include "assoc/errors.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <queue>

using namespace assoc;

namespace {

void write_file(const std::string& dir, const std::string& name, const std::string& text) {
    std::ofstream out(dir + "/" + name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + dir + "/" + name);
    out << text;
}

Cyclotomic I() { return zeta(4, 1); }
Cyclotomic sqrt2() { return zeta(8, 1) + zeta(8, 7); }

CatalogEntry plain_entry(const std::string& dir, const std::string& name, const std::vector<std::vector<int>>& relation,
                         const CycMatrix& Q, const std::string& note) {
    const SchemeData s = verify_scheme(relation);
    attach_eigendata(s, Q);
    write_file(dir, name + ".scheme.json", serialize_scheme(s));
    write_file(dir, name + ".eigen.json", serialize_eigen(Q));
    return {name, name + ".scheme.json", name + ".eigen.json", "", "", note};
}

CatalogEntry group_entry(const std::string& dir, const std::string& name, const GroupTable& G, const CharacterTable& T,
                         const std::string& note) {
    const ConjClassData C = conjugacy_classes(G);
    const EigenData E = eigendata_from_characters(G, C, T);
    write_file(dir, name + ".scheme.json", serialize_scheme(E.scheme));
    write_file(dir, name + ".eigen.json", serialize_eigen(E.Q));
    write_file(dir, name + ".group.json", serialize_group(G));
    write_file(dir, name + ".characters.json", serialize_characters(T));
    return {name, name + ".scheme.json", name + ".eigen.json", name + ".group.json", name + ".characters.json", note};
}

CatalogEntry builtin_entry(const std::string& dir, const std::string& name, const BuiltinGroupSpec& spec, const std::string& note) {
    const BuiltinGroup B = builtin_group(spec);
    return group_entry(dir, name, B.table, B.characters, note);
}

std::vector<std::vector<int>> coxeter_relation() {
    std::vector<std::array<int, 3>> vertices;
    auto is_line = [](const std::array<int, 3>& s) {
        for (int t = 0; t < 7; ++t) {
            std::array<int, 3> line{t, (t + 1) % 7, (t + 3) % 7};
            std::sort(line.begin(), line.end());
            if (line == s) return true;
        }
        return false;
    };
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b)
            for (int c = b + 1; c < 7; ++c) {
                if (!is_line({a, b, c})) vertices.push_back({a, b, c});
            }
    const int n = static_cast<int>(vertices.size());
    auto disjoint = [&](int u, int v) {
        for (int p : vertices[static_cast<std::size_t>(u)])
            for (int q : vertices[static_cast<std::size_t>(v)])
                if (p == q) return false;
        return true;
    };
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int s = 0; s < n; ++s) {
        std::queue<int> q;
        dist[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)] = 0;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v = 0; v < n; ++v) {
                if (dist[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)] < 0 && disjoint(u, v)) {
                    dist[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(s)][static_cast<std::size_t>(u)] + 1;
                    q.push(v);
                }
            }
        }
    }
    return dist;
}

/// A4 on {0,1,2,3}: identity, the three double transpositions, then the
/// 3-cycles, so the classes come out with sizes 1, 3, 4, 4.
GroupTable a4_table() {
    std::vector<std::array<int, 4>> perms;
    std::array<int, 4> p{0, 1, 2, 3};
    std::vector<std::array<int, 4>> even;
    do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) inversions += p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)];
        if (inversions % 2 == 0) even.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto fixed = [](const std::array<int, 4>& q) {
        int f = 0;
        for (int i = 0; i < 4; ++i) f += q[static_cast<std::size_t>(i)] == i;
        return f;
    };
    std::stable_sort(even.begin(), even.end(), [&](const auto& a, const auto& b) {
        auto rank = [&](const auto& q) { return fixed(q) == 4 ? 0 : fixed(q) == 0 ? 1 : 2; };
        return rank(a) < rank(b);
    });
    const int n = static_cast<int>(even.size());
    std::vector<std::vector<int>> mult(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            std::array<int, 4> c{};
            for (int i = 0; i < 4; ++i) c[static_cast<std::size_t>(i)] = even[static_cast<std::size_t>(a)][static_cast<std::size_t>(even[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)])];
            mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                static_cast<int>(std::find(even.begin(), even.end(), c) - even.begin());
        }
    }
    return make_group_table(mult);
}

CharacterTable a4_characters() {
    const Cyclotomic w = zeta(3, 1);
    const Cyclotomic w2 = zeta(3, 2);
    CharacterTable T;
    T.rows = {{1L, 1L, 1L, 1L}, {1L, 1L, w, w2}, {1L, 1L, w2, w}, {3L, -1L, 0L, 0L}};
    T.degrees = {1, 1, 1, 3};
    return T;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regenerate the bundled scheme catalog"};
    std::string dir = default_catalog_dir();
    app.add_option("dir", dir, "output directory");
    CLI11_PARSE(app, argc, argv);

    try {
        const Cyclotomic i = I();
        const Cyclotomic r2 = sqrt2();
        const Rational third(1, 3);
        std::vector<CatalogEntry> entries;

        entries.push_back(plain_entry(dir, "x8",
                                      {{0, 1, 2, 3, 4, 4, 4, 4}, {1, 0, 3, 2, 4, 4, 4, 4}, {3, 2, 0, 1, 4, 4, 4, 4}, {2, 3, 1, 0, 4, 4, 4, 4},
                                       {4, 4, 4, 4, 0, 1, 2, 3}, {4, 4, 4, 4, 1, 0, 3, 2}, {4, 4, 4, 4, 3, 2, 0, 1}, {4, 4, 4, 4, 2, 3, 1, 0}},
                                      CycMatrix{{1L, 1L, 2L, 2L, 2L},
                                                {1L, 1L, -2L, -2L, 2L},
                                                {1L, 1L, -i - i, i + i, -2L},
                                                {1L, 1L, i + i, -i - i, -2L},
                                                {1L, -1L, 0L, 0L, 0L}},
                                      "8-vertex non-symmetric scheme X with splitting field Q(i)"));
        entries.push_back(plain_entry(dir, "y8",
                                      {{0, 1, 2, 2, 3, 3, 4, 4}, {1, 0, 2, 2, 3, 3, 4, 4}, {2, 2, 0, 1, 4, 4, 3, 3}, {2, 2, 1, 0, 4, 4, 3, 3},
                                       {4, 4, 3, 3, 0, 1, 2, 2}, {4, 4, 3, 3, 1, 0, 2, 2}, {3, 3, 4, 4, 2, 2, 0, 1}, {3, 3, 4, 4, 2, 2, 1, 0}},
                                      CycMatrix{{1L, 1L, 1L, 1L, 4L},
                                                {1L, 1L, 1L, 1L, -4L},
                                                {1L, -1L, -1L, 1L, 0L},
                                                {1L, -i, i, -1L, 0L},
                                                {1L, i, -i, -1L, 0L}},
                                      "8-vertex scheme Y sharing its rational fusion with x8"));
        entries.push_back(plain_entry(dir, "coxeter", coxeter_relation(),
                                      CycMatrix{{1L, 8L, 6L, 7L, 6L},
                                                {1L, Rational(16, 3), -2L + r2 + r2, Rational(-7, 3), -2L - r2 - r2},
                                                {1L, Rational(4, 3), -r2 - r2, Rational(-7, 3), r2 + r2},
                                                {1L, Rational(-4, 3), -1L, Rational(7, 3), -1L},
                                                {1L, Rational(-8, 3), 2L + r2, Rational(-7, 3), 2L - r2}},
                                      "distance scheme of the Coxeter graph on the 28 non-collinear triples of a Fano plane"));
        entries.push_back(builtin_entry(dir, "z12", BuiltinGroupSpec::cyclic(12), "conjugacy class scheme of Z_12"));
        entries.push_back(group_entry(dir, "a4", a4_table(), a4_characters(), "conjugacy class scheme of A_4"));
        for (int n : {3, 5, 7}) {
            entries.push_back(builtin_entry(dir, "dic" + std::to_string(n), BuiltinGroupSpec::dicyclic(n),
                                            "conjugacy class scheme of the dicyclic group Dic_" + std::to_string(n)));
        }
        write_file(dir, "index.json", canonical_dump(catalog_index_to_json(entries)));
        for (const auto& e : entries) load_catalog_entry(dir, e);
        std::cout << "wrote " << entries.size() << " entries to " << dir << "\n";
    } catch (const std::exception& err) {
        std::cerr << err.what() << "\n";
        return 1;
    }
    return 0;
}

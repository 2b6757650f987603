#include "assoc/builtin_groups.hpp"
#include "assoc/errors.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

#include <numeric>
#include <set>

using namespace assoc;
using namespace testing_support;

namespace {

/// classes by brute conjugation, as sorted sets
std::set<std::vector<int>> brute_classes(const GroupTable& G) {
    std::set<std::vector<int>> out;
    for (int g = 0; g < G.order; ++g) {
        std::set<int> c;
        for (int h = 0; h < G.order; ++h) c.insert(G.mul(G.mul(G.inverse[static_cast<std::size_t>(h)], g), h));
        out.insert({c.begin(), c.end()});
    }
    return out;
}

/// rational classes: g ~ g^m with gcd(m, |G|) = 1, then conjugates
Partition brute_rational_classes(const GroupTable& G, const ConjClassData& C) {
    std::vector<std::set<int>> merged(static_cast<std::size_t>(C.count()));
    for (int i = 0; i < C.count(); ++i) {
        const int g = C.classes[static_cast<std::size_t>(i)].front();
        for (int m = 1; m <= G.order; ++m) {
            if (std::gcd(m, G.order) != 1) continue;
            int p = 0;
            for (int t = 0; t < m; ++t) p = G.mul(p, g);
            merged[static_cast<std::size_t>(i)].insert(C.class_of[static_cast<std::size_t>(p)]);
        }
    }
    std::set<std::vector<int>> cells;
    for (const auto& s : merged) cells.insert({s.begin(), s.end()});
    return canonical_partition({cells.begin(), cells.end()});
}

std::vector<BuiltinGroup> sample_groups() {
    return {builtin_group(BuiltinGroupSpec::cyclic(12)), builtin_group(BuiltinGroupSpec::abelian({2, 4})),
            builtin_group(BuiltinGroupSpec::dicyclic(3)), builtin_group(BuiltinGroupSpec::dicyclic(5)),
            builtin_group(BuiltinGroupSpec::dicyclic(7))};
}

}  // namespace

TEST_CASE("group tables are validated", "[group]") {
    const GroupTable z3 = make_group_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    CHECK(z3.inverse == std::vector<int>{0, 2, 1});
    CHECK(z3.element_order(1) == 3);
    CHECK_THROWS_AS(make_group_table({{0, 1}, {1, 1}}), BadGroupTable);
    CHECK_THROWS_AS(make_group_table({{1, 0}, {0, 1}}), BadGroupTable);
    CHECK_THROWS_AS(make_group_table({{0, 1}, {1}}), BadGroupTable);
    CHECK_THROWS_AS(make_group_table({{0, 1}, {1, 2}}), BadGroupTable);
    // smallest non-associative loop
    CHECK_THROWS_AS(make_group_table({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}}),
                    BadGroupTable);
}

TEST_CASE("conjugacy classes match brute conjugation", "[group]") {
    for (const auto& B : sample_groups()) {
        const auto C = conjugacy_classes(B.table);
        CHECK(std::set<std::vector<int>>(C.classes.begin(), C.classes.end()) == brute_classes(B.table));
        CHECK(C.classes.front() == std::vector<int>{0});
        for (int i = 0; i < C.count(); ++i) {
            const int g = C.classes[static_cast<std::size_t>(i)].front();
            CHECK(C.class_of[static_cast<std::size_t>(B.table.inverse[static_cast<std::size_t>(g)])] ==
                  C.class_inverse_map[static_cast<std::size_t>(i)]);
        }
        CHECK(C.count() == static_cast<int>(B.characters.rows.size()));
        long sum = 0;
        for (long f : B.characters.degrees) sum += f * f;
        CHECK(sum == B.table.order);
    }
    const auto A = entry("a4");
    std::vector<long> sizes;
    for (int i = 0; i < A.classes->count(); ++i) sizes.push_back(A.classes->size(i));
    CHECK(sizes == std::vector<long>{1, 3, 4, 4});
    CHECK(conjugacy_classes(dicyclic_table(5)).count() == 8);
}

TEST_CASE("A4 eigenmatrices against reference tables", "[group][a4]") {
    const auto L = entry("a4");
    const EigenData& E = *L.eigen;
    const Cyclotomic z = zeta(3, 1);
    const Cyclotomic z2 = zeta(3, 2);
    const CycMatrix T{{1L, 1L, 1L, 1L}, {1L, 1L, z, z2}, {1L, 1L, z2, z}, {3L, -1L, 0L, 0L}};
    CHECK(CycMatrix::from_rows(L.characters->rows) == T);
    const CycMatrix reference_Q{{1L, 1L, 1L, 9L}, {1L, 1L, 1L, -3L}, {1L, z, z2, 0L}, {1L, z2, z, 0L}};
    const CycMatrix reference_P{{1L, 3L, 4L, 4L}, {1L, 3L, 4L * z, 4L * z2}, {1L, 3L, 4L * z2, 4L * z}, {1L, -1L, 0L, 0L}};
    CHECK(E.P == reference_P);
    // the reference Q is the conjugate of Q_ij = f_j conj(chi_j(g_i)) and does not invert the reference P
    CycMatrix conj_Q(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) conj_Q.set(i, j, reference_Q(i, j).conj());
    CHECK(E.Q == conj_Q);
    CHECK_FALSE(reference_P * reference_Q == Cyclotomic(12L) * CycMatrix::identity(4));
    CHECK(E.P * E.Q == Cyclotomic(12L) * CycMatrix::identity(4));
    CHECK(E.multiplicities == std::vector<long>{1, 1, 1, 9});
    // the same Q up to swapping the two conjugate linear characters
    for (int i = 0; i < 4; ++i) {
        CHECK(E.Q(i, 1) == reference_Q(i, 2));
        CHECK(E.Q(i, 2) == reference_Q(i, 1));
    }
}

TEST_CASE("eigen data from characters", "[group][property]") {
    for (const auto& B : sample_groups()) {
        const EigenData E = eigendata_from_characters(B.table, B.classes, B.characters);
        for (int j = 0; j < E.classes(); ++j) CHECK(E.multiplicities[static_cast<std::size_t>(j)] == B.characters.degrees[static_cast<std::size_t>(j)] * B.characters.degrees[static_cast<std::size_t>(j)]);
        for (int j = 0; j < E.classes(); ++j)
            for (int i = 0; i < E.classes(); ++i)
                CHECK(E.P(j, i) * Cyclotomic(B.characters.degrees[static_cast<std::size_t>(j)]) ==
                      Cyclotomic(B.classes.size(i)) * B.characters.rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
    }
    auto B = builtin_group(BuiltinGroupSpec::dicyclic(3));
    B.characters.rows[4][1] = B.characters.rows[4][1] + Cyclotomic(1L);
    CHECK_THROWS_AS(verify_character_table(B.characters, B.classes, B.table.order), BadCharacterTable);
}

TEST_CASE("tensor multiplicities", "[group]") {
    const auto L = entry("a4");
    const auto r = tensor_multiplicities(*L.characters, *L.classes, 12);
    const auto at = [&](int i, int j, int k) { return r[static_cast<std::size_t>((i * 4 + j) * 4 + k)]; };
    CHECK(at(3, 3, 0) == 1);
    CHECK(at(3, 3, 1) == 1);
    CHECK(at(3, 3, 2) == 1);
    CHECK(at(3, 3, 3) == 2);
    CHECK(at(1, 1, 2) == 1);
    CHECK(at(1, 2, 0) == 1);
}

TEST_CASE("representations diagonalize the class scheme", "[group]") {
    for (const auto& B : sample_groups()) {
        const SchemeData s = scheme_from_classes(B.table, B.classes);
        REQUIRE(B.representations.size() == B.characters.rows.size());
        for (std::size_t j = 0; j < B.representations.size(); ++j) {
            const Representation& rho = B.representations[j];
            verify_representation(B.table, rho);
            CHECK(representation_character(rho, B.classes) == B.characters.rows[j]);
            const CycMatrix U = representation_eigenvectors(B.table, rho, s, B.classes);
            CHECK(U.cols() == rho.degree * rho.degree);
            for (int i = 0; i < s.classes; ++i) {
                const Cyclotomic lambda = Cyclotomic(B.classes.size(i)) * B.characters.rows[j][static_cast<std::size_t>(i)] /
                                          Cyclotomic(static_cast<long>(rho.degree));
                CHECK(adjacency_matrix(s, i) * U == lambda * U);
            }
        }
    }
    auto B = builtin_group(BuiltinGroupSpec::dicyclic(3));
    Representation broken = B.representations[4];
    broken.images[1] = broken.images[2];
    CHECK_THROWS_AS(verify_representation(B.table, broken), ValidationError);
}

TEST_CASE("rational class fusion equals Galois fusion over Q", "[group]") {
    for (const char* name : {"z12", "a4", "dic3", "dic5", "dic7"}) {
        const auto L = entry(name);
        const auto [partition, fusion] = rational_class_fusion(*L.group, *L.classes, *L.eigen);
        CHECK(partition == brute_rational_classes(*L.group, *L.classes));
        const FusionScheme G = galois_fusion(L.scheme, *L.eigen, SubfieldSpec::rationals(1));
        CHECK(fusion.relation_partition == G.relation_partition);
        CHECK(fusion.fused.relation == G.fused.relation);
        CHECK(fusion.Q_F == G.Q_F);
    }
    const auto A = entry("a4");
    CHECK(rational_class_fusion(*A.group, *A.classes, *A.eigen).first == Partition{{0}, {1}, {2, 3}});
    const auto Z = entry("z12");
    CHECK(rational_class_fusion(*Z.group, *Z.classes, *Z.eigen).first == Partition{{0}, {1, 5, 7, 11}, {2, 10}, {3, 9}, {4, 8}, {6}});
}

TEST_CASE("built-in group specs", "[group]") {
    CHECK(BuiltinGroupSpec::parse("cyclic:12").name() == "cyclic:12");
    CHECK(BuiltinGroupSpec::parse("abelian:2,4").params == std::vector<int>{2, 4});
    CHECK(BuiltinGroupSpec::parse("dicyclic:5").family == BuiltinGroupSpec::Family::Dicyclic);
    CHECK_THROWS_AS(BuiltinGroupSpec::parse("cyclic"), PreconditionError);
    CHECK_THROWS_AS(BuiltinGroupSpec::parse("free:2"), PreconditionError);
    CHECK_THROWS_AS(BuiltinGroupSpec::parse("cyclic:x"), PreconditionError);
    CHECK_THROWS_AS(builtin_group(BuiltinGroupSpec::dicyclic(4)), UnsupportedFamily);

    // Dic_n: order 4n, unique involution x^n, y^2 = x^n, y^-1 x y = x^-1
    for (int n : {2, 3, 4, 5}) {
        const GroupTable G = dicyclic_table(n);
        CHECK(G.order == 4 * n);
        int involutions = 0;
        for (int g = 1; g < G.order; ++g) involutions += G.element_order(g) == 2;
        CHECK(involutions == 1);
        const int y = 2 * n;
        CHECK(G.mul(y, y) == n);
        CHECK(G.mul(G.mul(G.inverse[static_cast<std::size_t>(y)], 1), y) == G.inverse[1]);
    }
    const auto Z = builtin_group(BuiltinGroupSpec::abelian({2, 4}));
    CHECK(Z.table.order == 8);
    CHECK(Z.table.mul(1, 4) == 5);  // (0,1) + (1,0) = (1,1)
    CHECK(Z.table.mul(3, 1) == 0);
}

#include "assoc/cyc_matrix.hpp"
#include "assoc/errors.hpp"
#include "assoc/real_sign.hpp"
#include "assoc/subfield.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace assoc;
using testing_support::close;
using testing_support::numeric;
using testing_support::random_cyclotomic;

TEST_CASE("rationals stay canonical", "[rational]") {
    CHECK(to_string(ratio(4, 6)) == "2/3");
    CHECK(to_string(ratio(-3, -1)) == "3");
    CHECK(parse_rational("-6/4") == ratio(-3, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), DivisionByZero);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("canonical form", "[cyclotomic]") {
    CHECK(Cyclotomic::from_terms(4, {{2, 1}}) == Cyclotomic(-1L));
    CHECK(Cyclotomic::from_terms(3, {{1, 1}, {2, 1}}) == Cyclotomic(-1L));
    const Cyclotomic z = Cyclotomic::from_terms(8, {{1, 1}, {7, 1}});
    CHECK(z * z == Cyclotomic(2L));
    CHECK_FALSE(z.is_rational());
    CHECK(Cyclotomic::from_terms(5, {{-1, 1}}) == zeta(5, 4));
    CHECK(Cyclotomic::from_terms(6, {{1, 1}, {6, 2}}) == zeta(6, 1) + Cyclotomic(2L));
    // reduced coordinates have phi(n) entries
    CHECK(zeta(12, 5).degree() == 4);
    CHECK(zeta(7).degree() == 6);
}

TEST_CASE("field operations", "[cyclotomic]") {
    CHECK(zeta(4) * zeta(4) == Cyclotomic(-1L));
    const Cyclotomic one_plus = Cyclotomic(1L) + zeta(3);
    CHECK(one_plus.inverse() == -zeta(3));
    CHECK(one_plus * one_plus.inverse() == Cyclotomic(1L));
    CHECK(zeta(12, 3).conj() == -zeta(12, 3));
    CHECK_THROWS_AS(Cyclotomic().inverse(), DivisionByZero);
    CHECK_THROWS_AS(Cyclotomic(1L) / Cyclotomic(), DivisionByZero);
    // mixed conductors meet in the lcm
    const Cyclotomic s = zeta(4) + zeta(3);
    CHECK(s.conductor() == 12);
    CHECK(close(numeric(s), numeric(zeta(4)) + numeric(zeta(3))));
}

TEST_CASE("sums of roots of unity vanish", "[cyclotomic]") {
    for (long n : {1L, 2L, 5L, 9L, 12L, 15L, 16L}) {
        Cyclotomic s;
        for (long k = 0; k < n; ++k) s += zeta(n, k);
        CHECK(s == Cyclotomic(n == 1 ? 1L : 0L));
    }
}

TEST_CASE("arithmetic agrees with complex evaluation", "[cyclotomic][property]") {
    std::mt19937 rng(7);
    for (long n : {3L, 8L, 12L, 20L, 28L, 15L}) {
        for (int trial = 0; trial < 30; ++trial) {
            const Cyclotomic x = random_cyclotomic(rng, n);
            const Cyclotomic y = random_cyclotomic(rng, n);
            CHECK(close(numeric(x + y), numeric(x) + numeric(y)));
            CHECK(close(numeric(x * y), numeric(x) * numeric(y)));
            CHECK(close(numeric(x.conj()), std::conj(numeric(x))));
            CHECK((x + y) - y == x);
            if (!x.is_zero()) {
                CHECK(x.inverse().inverse() == x);
                CHECK(x * x.inverse() == Cyclotomic(1L));
            }
        }
    }
}

TEST_CASE("galois automorphisms", "[cyclotomic]") {
    CHECK(zeta(4).galois(3) == -zeta(4));
    const Cyclotomic kappa1 = zeta(12, 2) + zeta(12, 10);
    CHECK(kappa1.galois(5) == zeta(12, 10) + zeta(12, 2));  // kappa^(5) = kappa^(1)
    CHECK_THROWS_AS(zeta(12).galois(4), NotAUnit);

    std::mt19937 rng(11);
    for (long n : {8L, 12L, 20L}) {
        for (int trial = 0; trial < 10; ++trial) {
            const Cyclotomic x = random_cyclotomic(rng, n);
            const Cyclotomic y = random_cyclotomic(rng, n);
            CHECK(x.galois(1) == x);
            CHECK(x.conj() == x.galois(n - 1));
            for (long k = 1; k < n; ++k) {
                if (std::gcd(k, n) != 1) continue;
                CHECK((x * y).galois(k) == x.galois(k) * y.galois(k));
                CHECK((x + y).galois(k) == x.galois(k) + y.galois(k));
                for (long k2 : {1L, n - 1}) CHECK(x.galois(k).galois(k2) == x.galois((k * k2) % n));
            }
        }
    }
}

TEST_CASE("embedding is transparent", "[cyclotomic]") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const Cyclotomic x = random_cyclotomic(rng, 6);
        const Cyclotomic big = x.embed(24);
        CHECK(big.conductor() == 24);
        CHECK(big == x);
        CHECK(close(numeric(big), numeric(x)));
    }
    CHECK_THROWS_AS(zeta(6).embed(9), ConductorMismatch);
    CHECK(minimal_conductor(testing_support::sqrt2().embed(24)) == 8);
    CHECK(minimal_conductor(zeta(12, 3)) == 4);
    CHECK(minimal_conductor(zeta(12, 4) - zeta(12, 8)) == 3);
    CHECK(minimal_conductor(Cyclotomic(5L).embed(20)) == 1);
}

TEST_CASE("oversized conductors are rejected", "[cyclotomic]") {
    CHECK_THROWS_AS(zeta(10007), ConductorTooLarge);
    CHECK_NOTHROW(zeta(10001));  // phi(10001) = 9792
}

TEST_CASE("rendering", "[cyclotomic]") {
    CHECK(Cyclotomic().to_string() == "0");
    CHECK(Cyclotomic(ratio(-2, 3)).to_string() == "-2/3");
    CHECK(zeta(8, 3).to_string() == "E(8)^3");
    CHECK((zeta(4) + zeta(4)).to_string() == "2*E(4)");
}

TEST_CASE("subfield membership", "[subfield]") {
    CHECK(subfield_membership(zeta(3) + zeta(3, 2), SubfieldSpec::rationals(3)));
    const SubfieldSpec k7(12, {7});
    const Cyclotomic root = Cyclotomic(2L) * zeta(3) + Cyclotomic(1L);
    CHECK(root * root == Cyclotomic(-3L));
    CHECK(subfield_membership(root, k7));
    CHECK_FALSE(subfield_membership(zeta(12, 3), SubfieldSpec(12, {11})));
    CHECK_THROWS_AS(subfield_membership(zeta(5), SubfieldSpec::rationals(12)), ConductorMismatch);
    CHECK_THROWS_AS(SubfieldSpec(12, {2}), NotAUnit);

    CHECK(k7.fixing_group() == std::vector<long>{1, 7});
    CHECK(SubfieldSpec::rationals(12).fixing_group() == std::vector<long>{1, 5, 7, 11});
    CHECK(SubfieldSpec::real(12).fixes(11));
    const auto both = SubfieldSpec::intersection(k7, SubfieldSpec(12, {5}));
    CHECK(both.fixing_group() == std::vector<long>{1, 5, 7, 11});
    CHECK(SubfieldSpec(4, {3}).lifted(12).fixing_group() == std::vector<long>{1, 5, 7, 11});
    CHECK(SubfieldSpec(4, {1}).lifted(12).fixing_group() == std::vector<long>{1, 5});
}

TEST_CASE("membership under trivial and full groups", "[subfield][property]") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const Cyclotomic x = random_cyclotomic(rng, 12, 2);
        CHECK(subfield_membership(x, SubfieldSpec::whole(12)));
        CHECK(subfield_membership(x, SubfieldSpec::rationals(12)) == x.is_rational());
    }
}

TEST_CASE("real sign", "[real_sign]") {
    const Cyclotomic r2 = testing_support::sqrt2();
    CHECK(real_sign(r2) == 1);
    CHECK(real_sign(Cyclotomic(-2L) + r2) == -1);
    CHECK(real_sign(r2 * r2 - Cyclotomic(2L)) == 0);
    CHECK(real_sign(Cyclotomic(ratio(-1, 7))) == -1);
    CHECK_THROWS_AS(real_sign(zeta(4)), PreconditionError);
    // convergents of sqrt 2 alternate around it
    CHECK(real_sign(Cyclotomic(ratio(1393, 985)) - r2) == -1);
    CHECK(real_sign(Cyclotomic(ratio(3363, 2378)) - r2) == 1);
    CHECK(real_sign(Cyclotomic(ratio(577, 408)) - r2) == 1);
    CHECK(real_sign(Cyclotomic(ratio(816, 577)) - r2) == -1);

    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const Cyclotomic x = random_cyclotomic(rng, 20);
        const Cyclotomic re = x + x.conj();
        const double v = numeric(re).real();
        if (std::abs(v) > 1e-6) CHECK(real_sign(re) == (v > 0 ? 1 : -1));
    }
}

TEST_CASE("matrix inverse", "[cyc_matrix]") {
    CHECK(mat_inverse(CycMatrix::identity(5)) == CycMatrix::identity(5));
    CHECK_THROWS_AS(mat_inverse(CycMatrix{{1L, 1L}, {1L, 1L}}), Singular);
    CHECK_THROWS_AS(mat_inverse(CycMatrix(2, 3)), DimensionMismatch);

    const CycMatrix Q = testing_support::x8_Q();
    const CycMatrix P = Cyclotomic(8L) * mat_inverse(Q);
    CHECK(P * Q == Cyclotomic(8L) * CycMatrix::identity(5));
    CHECK(Q * P == Cyclotomic(8L) * CycMatrix::identity(5));

    std::mt19937 rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Cyclotomic> e;
        for (int k = 0; k < 9; ++k) e.push_back(random_cyclotomic(rng, 8, 2));
        const CycMatrix M(3, 3, e);
        try {
            const CycMatrix inv = mat_inverse(M);
            CHECK(M * inv == CycMatrix::identity(3));
            CHECK(inv * M == CycMatrix::identity(3));
        } catch (const Singular&) {
            SUCCEED("random matrix happened to be singular");
        }
    }
}

TEST_CASE("matrix companions", "[cyc_matrix]") {
    const CycMatrix A{{1L, zeta(4)}, {2L, 3L}};
    const CycMatrix H = adjoint(A);
    CHECK(H(0, 1) == Cyclotomic(2L));
    CHECK(H(1, 0) == -zeta(4));
    CHECK(adjoint(H) == A);
    CHECK(transpose(A)(0, 1) == Cyclotomic(2L));
    CHECK(schur_product(A, A)(0, 1) == Cyclotomic(-1L));
    CHECK(galois_apply(A, 3)(0, 1) == -zeta(4));
    const CycMatrix herm = A + adjoint(A);
    CHECK(adjoint(herm) == herm);
    CHECK_THROWS_AS(A * CycMatrix(3, 1), DimensionMismatch);
}

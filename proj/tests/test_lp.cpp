#include "assoc/delsarte_lp.hpp"
#include "assoc/designs.hpp"
#include "assoc/errors.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

#include <optional>

using namespace assoc;
using namespace testing_support;

namespace {

LPConstraint row(std::vector<long> c, Relation r, long rhs) {
    LPConstraint out;
    for (long v : c) out.coeffs.emplace_back(v);
    out.relation = r;
    out.rhs = rhs;
    return out;
}

/// Solve a square rational system; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && A[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(A[p], A[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || A[r][c] == 0) continue;
            const Rational f = A[r][c] / A[c][c];
            for (std::size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
            b[r] -= f * b[c];
        }
    }
    for (std::size_t r = 0; r < n; ++r) b[r] /= A[r][r];
    return b;
}

/// Best objective over all basic feasible points (problem assumed bounded).
std::optional<Rational> vertex_oracle(const LPProblem& p) {
    const int n = p.variables();
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (const auto& c : p.constraints) {
        rows.push_back(c.coeffs);
        rhs.push_back(c.rhs);
    }
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> e(static_cast<std::size_t>(n), Rational(0));
        e[static_cast<std::size_t>(i)] = 1;
        rows.push_back(e);
        rhs.emplace_back(0);
    }
    const int m = static_cast<int>(rows.size());
    std::optional<Rational> best;
    for (int mask = 0; mask < (1 << m); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) != n) continue;
        std::vector<std::vector<Rational>> A;
        std::vector<Rational> b;
        for (int r = 0; r < m; ++r)
            if (mask >> r & 1) {
                A.push_back(rows[static_cast<std::size_t>(r)]);
                b.push_back(rhs[static_cast<std::size_t>(r)]);
            }
        const auto x = solve_square(A, b);
        if (!x || !lp_feasible(p, *x)) continue;
        Rational v = 0;
        for (int i = 0; i < n; ++i) v += p.objective[static_cast<std::size_t>(i)] * (*x)[static_cast<std::size_t>(i)];
        if (!best || (p.maximize ? v > *best : v < *best)) best = v;
    }
    return best;
}

EigenData complete_graph(int n) {
    std::vector<std::vector<int>> r(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 1));
    for (int x = 0; x < n; ++x) r[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)] = 0;
    return attach_eigendata(verify_scheme(r), rational_matrix({{1, n - 1}, {1, -1}}));
}

EigenData x8_fused() {
    const auto L = entry("x8");
    return fused_eigendata(galois_fusion(L.scheme, *L.eigen, SubfieldSpec::rationals(1)));
}

}  // namespace

TEST_CASE("simplex on small problems", "[lp]") {
    LPProblem p;
    p.objective = {Rational(1)};
    p.maximize = true;
    p.constraints = {row({1}, Relation::LessEqual, 3)};
    LPResult r = simplex_solve(p);
    CHECK(r.status == LPStatus::Optimal);
    CHECK(r.value == 3);

    p.constraints = {row({1}, Relation::LessEqual, -1)};
    CHECK(simplex_solve(p).status == LPStatus::Infeasible);

    p.constraints = {row({1}, Relation::GreaterEqual, 2)};
    CHECK(simplex_solve(p).status == LPStatus::Unbounded);

    // max 3x + 2y, x + y <= 4, x + 3y <= 6, x <= 3
    LPProblem q;
    q.objective = {Rational(3), Rational(2)};
    q.maximize = true;
    q.constraints = {row({1, 1}, Relation::LessEqual, 4), row({1, 3}, Relation::LessEqual, 6), row({1, 0}, Relation::LessEqual, 3)};
    r = simplex_solve(q);
    CHECK(r.value == 11);
    CHECK(r.solution == std::vector<Rational>{Rational(3), Rational(1)});

    // min x + y, 2x + 3y = 7, 3x - 3y >= 1: y = 19/15 at the optimum
    LPProblem e;
    e.objective = {Rational(1), Rational(1)};
    e.constraints = {row({2, 3}, Relation::Equal, 7), row({3, -3}, Relation::GreaterEqual, 1)};
    r = simplex_solve(e);
    CHECK(r.status == LPStatus::Optimal);
    CHECK(r.value == ratio(43, 15));
    CHECK(lp_feasible(e, r.solution));

    // redundant equalities
    LPProblem d;
    d.objective = {Rational(1), Rational(0)};
    d.constraints = {row({1, 1}, Relation::Equal, 2), row({2, 2}, Relation::Equal, 4)};
    CHECK(simplex_solve(d).value == 0);

    LPProblem bad;
    bad.objective = {Rational(1), Rational(1)};
    bad.constraints = {row({1}, Relation::LessEqual, 1)};
    CHECK_THROWS_AS(simplex_solve(bad), DimensionMismatch);
}

TEST_CASE("simplex agrees with vertex enumeration", "[lp][property]") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> coef(-4, 6);
    std::uniform_int_distribution<int> rel(0, 5);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + trial % 3;
        LPProblem p;
        p.maximize = trial % 2 == 0;
        for (int i = 0; i < n; ++i) p.objective.emplace_back(coef(rng));
        const int m = 2 + trial % 3;
        for (int c = 0; c < m; ++c) {
            std::vector<long> a;
            for (int i = 0; i < n; ++i) a.push_back(coef(rng));
            const int k = rel(rng);
            p.constraints.push_back(row(a, k < 3 ? Relation::LessEqual : (k < 5 ? Relation::GreaterEqual : Relation::Equal), coef(rng) + 3));
        }
        for (int i = 0; i < n; ++i) {
            std::vector<long> a(static_cast<std::size_t>(n), 0);
            a[static_cast<std::size_t>(i)] = 1;
            p.constraints.push_back(row(a, Relation::LessEqual, 8));  // keeps it bounded
        }
        const LPResult r = simplex_solve(p);
        const auto oracle = vertex_oracle(p);
        if (!oracle) {
            CHECK(r.status == LPStatus::Infeasible);
            continue;
        }
        REQUIRE(r.status == LPStatus::Optimal);
        CHECK(r.value == *oracle);
        CHECK(lp_feasible(p, r.solution));
    }
}

TEST_CASE("Delsarte design bound", "[lp][delsarte]") {
    const EigenData F = x8_fused();
    const LPResult r = delsarte_design_lp(F, {1, 2});
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.value <= 4);
    CHECK(r.value == 4);
    const auto designs = enumerate_T_designs(F.scheme, F, {1, 2}, 1, 8);
    REQUIRE_FALSE(designs.empty());
    std::size_t smallest = 8;
    for (const auto& C : designs) smallest = std::min(smallest, C.size());
    CHECK(r.value <= Rational(static_cast<long>(smallest)));
    CHECK(lp_feasible(delsarte_design_problem(F.Q, F.scheme.transpose_map, {1, 2}), r.solution));
    CHECK(delsarte_design_lp(F, {}).value == 1);

    const auto X = entry("x8");
    CHECK_THROWS_AS(delsarte_design_lp(*X.eigen, {1, 2, 3}), IrrationalData);
    const LPResult merged = delsarte_design_lp_merged(*X.eigen, {1, 2, 3});
    CHECK(merged.value == r.value);
    CHECK_THROWS_AS(delsarte_design_lp_merged(*X.eigen, {2}), PreconditionError);

    // a4 through its rational fusion, every Galois-closed T
    const auto A = entry("a4");
    const FusionScheme AF = galois_fusion(A.scheme, *A.eigen, SubfieldSpec::rationals(1));
    const EigenData AE = fused_eigendata(AF);
    const std::vector<std::vector<int>> Ts = {{1, 2}, {3}, {1, 2, 3}};
    for (const auto& T : Ts) {
        std::vector<int> iT;
        for (int j : T) iT.push_back(j == 3 ? 2 : 1);
        iT.erase(std::unique(iT.begin(), iT.end()), iT.end());
        CHECK(delsarte_design_lp_merged(*A.eigen, T).value == delsarte_design_lp(AE, iT).value);
    }
}

TEST_CASE("Delsarte code bound", "[lp][delsarte]") {
    const EigenData K = complete_graph(6);
    CHECK(delsarte_code_lp(K, {}).value == 6);
    CHECK(delsarte_code_lp(K, {1}).value == 1);

    const EigenData F = x8_fused();
    for (int s = 1; s < 4; ++s) {
        const LPResult r = delsarte_code_lp(F, {s});
        REQUIRE(r.status == LPStatus::Optimal);
        long best = 0;
        for (int mask = 1; mask < 256; ++mask) {
            bool ok = true;
            for (int x = 0; x < 8 && ok; ++x)
                for (int y = 0; y < 8 && ok; ++y)
                    if ((mask >> x & 1) && (mask >> y & 1) && F.scheme.rel(x, y) == s) ok = false;
            if (ok) best = std::max<long>(best, __builtin_popcount(static_cast<unsigned>(mask)));
        }
        CHECK(r.value >= Rational(best));
        CHECK(lp_feasible(delsarte_code_problem(F.Q, F.scheme.transpose_map, {s}), r.solution));
    }
    CHECK(delsarte_code_lp(F, {3}).value == 4);
    CHECK(delsarte_code_lp(F, {1, 2, 3}).value == 1);
    CHECK_THROWS_AS(delsarte_code_lp(*entry("coxeter").eigen, {}), IrrationalData);
}

#include "assoc/delsarte_lp.hpp"

#include "assoc/designs.hpp"
#include "assoc/errors.hpp"

#include <set>

namespace assoc {

namespace {

using std::size_t;

std::vector<std::vector<Rational>> rational_matrix(const CycMatrix& Q) {
    if (!Q.is_rational()) {
        throw IrrationalData("eigenmatrix has irrational entries; pass the Galois fusion over Q instead");
    }
    std::vector<std::vector<Rational>> out(static_cast<size_t>(Q.rows()), std::vector<Rational>(static_cast<size_t>(Q.cols())));
    for (int i = 0; i < Q.rows(); ++i)
        for (int j = 0; j < Q.cols(); ++j) out[static_cast<size_t>(i)][static_cast<size_t>(j)] = Q(i, j).to_rational();
    return out;
}

LPProblem base_problem(const std::vector<std::vector<Rational>>& q, const std::vector<int>& transpose_map,
                       const std::set<int>& zero_columns) {
    const int d1 = static_cast<int>(q.size());
    LPProblem p;
    p.objective.assign(static_cast<size_t>(d1), Rational(1));
    LPConstraint a0{std::vector<Rational>(static_cast<size_t>(d1), Rational(0)), Relation::Equal, 1};
    a0.coeffs[0] = 1;
    p.constraints.push_back(a0);
    for (int i = 0; i < d1; ++i) {
        const int ip = transpose_map[static_cast<size_t>(i)];
        if (ip <= i) continue;
        LPConstraint c{std::vector<Rational>(static_cast<size_t>(d1), Rational(0)), Relation::Equal, 0};
        c.coeffs[static_cast<size_t>(i)] = 1;
        c.coeffs[static_cast<size_t>(ip)] = -1;
        p.constraints.push_back(c);
    }
    const int cols = static_cast<int>(q.front().size());
    for (int j = 1; j < cols; ++j) {
        LPConstraint c{{}, zero_columns.count(j) ? Relation::Equal : Relation::GreaterEqual, 0};
        for (int i = 0; i < d1; ++i) c.coeffs.push_back(q[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        p.constraints.push_back(c);
    }
    return p;
}

std::set<int> index_set(const std::vector<int>& T, int bound, const char* what) {
    std::set<int> out;
    for (int j : T) {
        if (j < 1 || j >= bound) throw PreconditionError(std::string(what) + " index " + std::to_string(j) + " out of range");
        out.insert(j);
    }
    return out;
}

}  // namespace

LPProblem delsarte_design_problem(const CycMatrix& Q, const std::vector<int>& transpose_map, const std::vector<int>& T) {
    return base_problem(rational_matrix(Q), transpose_map, index_set(T, Q.cols(), "T"));
}

LPResult delsarte_design_lp(const EigenData& E, const std::vector<int>& T) {
    return simplex_solve(delsarte_design_problem(E.Q, E.scheme.transpose_map, T));
}

LPProblem delsarte_code_problem(const CycMatrix& Q, const std::vector<int>& transpose_map, const std::vector<int>& S) {
    LPProblem p = base_problem(rational_matrix(Q), transpose_map, {});
    p.maximize = true;
    const int d1 = Q.rows();
    for (int i : index_set(S, d1, "S")) {
        LPConstraint c{std::vector<Rational>(static_cast<size_t>(d1), Rational(0)), Relation::Equal, 0};
        c.coeffs[static_cast<size_t>(i)] = 1;
        p.constraints.push_back(c);
    }
    return p;
}

LPResult delsarte_code_lp(const EigenData& E, const std::vector<int>& S) {
    return simplex_solve(delsarte_code_problem(E.Q, E.scheme.transpose_map, S));
}

LPResult delsarte_design_lp_merged(const EigenData& E, const std::vector<int>& T) {
    const GaloisOrbitData G = orbit_merge(E, SubfieldSpec::rationals(E.Q.conductor()));
    index_set(T, E.classes(), "T");
    if (!is_union_of_orbits(T, G.orbits)) throw PreconditionError("T is not a union of Galois orbits");
    std::vector<int> merged;
    for (int l : merged_index_set(T, G.iota)) merged.push_back(l);
    return simplex_solve(delsarte_design_problem(G.Qbar, E.scheme.transpose_map, merged));
}

}  // namespace assoc

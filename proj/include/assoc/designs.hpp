#pragma once

#include "assoc/galois_fusion.hpp"

#include <vector>

namespace assoc {

/// Nonnegative rational weights on the vertices; 0/1 weights are subsets.
struct WeightedSubset {
    std::vector<Rational> weights;

    /// Vertices are 0-based here.
    static WeightedSubset from_subset(int size, const std::vector<int>& vertices);
    bool is_characteristic() const;
};

/// a_i = x^T A_i x / x^T x. Throws ZeroVector for the zero vector and
/// PreconditionError for negative weights or a length mismatch.
std::vector<Rational> inner_distribution(const SchemeData& scheme, const WeightedSubset& w);

/// b = aQ, against any eigenmatrix whose rows are indexed like a (Q or Qbar).
std::vector<Cyclotomic> dual_distribution(const CycMatrix& Q, const std::vector<Rational>& a);
std::vector<Cyclotomic> dual_distribution(const EigenData& E, const std::vector<Rational>& a);

struct DesignReport {
    std::vector<Rational> a;
    std::vector<Cyclotomic> b;
    std::vector<int> T;
    bool orbit_closed = true;
};

/// Orbits of Sigma_Q on the idempotent indices.
Partition rational_orbits(const EigenData& E);

/// Throws OrbitClosureViolation when T(C) is not a union of the given orbits,
/// and InternalAssertion when some b_j is not real and nonnegative.
DesignReport design_report(const SchemeData& scheme, const EigenData& E, const WeightedSubset& w);
DesignReport design_report(const SchemeData& scheme, const EigenData& E, const WeightedSubset& w, const Partition& orbits);

bool is_T_design(const SchemeData& scheme, const EigenData& E, const WeightedSubset& w, const std::vector<int>& T);
/// Same test through F_{iota(i)} x = 0, using the merged idempotents of G.
bool is_T_design_merged(const GaloisOrbitData& G, const WeightedSubset& w, const std::vector<int>& T);

/// True iff T is a union of cells of `orbits` (index 0 excluded).
bool is_union_of_orbits(const std::vector<int>& T, const Partition& orbits);
/// iota(T) as a sorted set.
std::vector<int> merged_index_set(const std::vector<int>& T, const std::vector<int>& iota);

inline constexpr int kMaxEnumerationVertices = 40;

/// Every 0/1 subset C with T contained in T(C) and min_size <= |C| <= max_size, as
/// 0-based sorted vertex lists in lexicographic order. threads <= 0 means
/// hardware concurrency. Throws TooLarge when |X| exceeds the cap.
std::vector<std::vector<int>> enumerate_T_designs(const SchemeData& scheme, const EigenData& E, const std::vector<int>& T,
                                                  int min_size, int max_size, int threads = 1);

struct EnumerationResult {
    std::vector<std::vector<int>> designs;
    bool cross_checked = false;  // fused-scheme enumeration also ran and agreed
};

/// enumerate_T_designs, plus the run on X down Q with iota(T) when Property
/// M_Q holds and T is a union of Sigma_Q orbits. Disagreement raises
/// InternalAssertion.
EnumerationResult enumerate_T_designs_checked(const SchemeData& scheme, const EigenData& E, const std::vector<int>& T,
                                              int min_size, int max_size, int threads = 1);

/// Pairing of two schemes whose rational fusions coincide after relabeling.
struct DesignTransfer {
    std::vector<int> vertex_map;    // X -> Y
    std::vector<int> relation_map;  // fused classes of X -> fused classes of Y
    std::vector<int> eigen_match;   // fused idempotents of X -> fused idempotents of Y
    Partition x_orbits;
    Partition y_orbits;
    SchemeData y_scheme;
    EigenData y_eigen;
};

/// Both eigen data are fused over Q. The vertex map must carry fused
/// relations to fused relations; fused idempotents are matched by equal
/// columns of Q_F (after the relation relabeling) with equal multiplicity.
/// Throws NotClosed, ValidationError or IncompatibleT.
DesignTransfer make_design_transfer(const EigenData& EX, const EigenData& EY, const std::vector<int>& vertex_map);

struct TransferredDesign {
    std::vector<int> subset;  // 0-based, sorted
    std::vector<int> T;
};

/// (C^sigma, T') with T' the union of Y orbits matched to iota_X(T). T must
/// be a union of Sigma_Q orbits of X, else IncompatibleT. The image is
/// checked to be a T'-design of Y.
TransferredDesign transfer_design(const DesignTransfer& TX, const std::vector<int>& C, const std::vector<int>& T);
/// As above, additionally requiring T' to equal `expected_T`.
TransferredDesign transfer_design(const DesignTransfer& TX, const std::vector<int>& C, const std::vector<int>& T,
                                  const std::vector<int>& expected_T);

}  // namespace assoc

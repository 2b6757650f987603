#pragma once

#include "assoc/eigen.hpp"
#include "assoc/subfield.hpp"

#include <optional>
#include <vector>

namespace assoc {

using Permutation = std::vector<int>;
/// Cells are sorted ascending and ordered by their smallest element.
using Partition = std::vector<std::vector<int>>;

/// Sort cells and order them by minimum element.
Partition canonical_partition(Partition p);
/// Finest common coarsening of two partitions of the same set.
Partition partition_join(const Partition& a, const Partition& b);
/// cell index of every element.
std::vector<int> cell_index(const Partition& p, int n);

/// The group Sigma_K: for each generator k of K's fixing group, E_j maps to
/// E_{j^sigma} under zeta -> zeta^k applied entrywise; the generated
/// permutation group is returned as a sorted explicit set (identity first).
/// Throws NotPermutation when an image is not a primitive idempotent.
std::vector<Permutation> sigma_permutations(const EigenData& E, const SubfieldSpec& K);

/// Permutation induced by a single Galois element k (a unit modulo the
/// ambient conductor of the lifted spec).
Permutation induced_permutation(const EigenData& E, long k, long conductor);

struct GaloisOrbitData {
    SubfieldSpec subfield;
    std::vector<Permutation> perms;
    Partition orbits;
    std::vector<int> iota;
    std::vector<std::vector<int>> O;  // (d+1) x (e+1) 0/1 matrix
    std::vector<CycMatrix> F;         // merged idempotents, dense
    CycMatrix Qbar;                   // Q O

    int merged_classes() const noexcept { return static_cast<int>(orbits.size()); }
};

GaloisOrbitData orbit_merge(const EigenData& E, const SubfieldSpec& K);

struct BannaiMuzychukVerdict {
    bool passes = false;
    int distinct_rows = 0;
    Partition row_classes;
};

/// Criterion in idempotent form: Qbar has exactly e+1 distinct rows.
BannaiMuzychukVerdict bannai_muzychuk_idempotent(const GaloisOrbitData& G);

/// Groups equal rows of a matrix; classes ordered by first occurrence.
Partition equal_row_classes(const CycMatrix& M);

struct FusionScheme {
    SchemeData parent;
    Partition relation_partition;
    Partition idempotent_partition;  // row classes of PO: the fused idempotents
    SchemeData fused;
    CycMatrix P_F;
    CycMatrix Q_F;
    CycMatrix S;  // (d+1) x (e+1), PO = S P_F
    std::optional<SubfieldSpec> field;
};

/// Criterion in relation form. Throws PreconditionError when the partition
/// is malformed or does not isolate class 0, NotAFusion when PO has more
/// distinct rows than cells.
FusionScheme fuse_by_relation_partition(const SchemeData& scheme, const EigenData& E, const Partition& partition);

/// X down K. Throws NotClosed when Property M_K fails.
FusionScheme galois_fusion(const SchemeData& scheme, const EigenData& E, const SubfieldSpec& K);

/// Fusion by the join of two partitions that are each fusions.
FusionScheme common_fusion(const SchemeData& scheme, const EigenData& E, const Partition& p1, const Partition& p2);

/// Eigen data of the fused scheme (attach_eigendata on Q_F).
EigenData fused_eigendata(const FusionScheme& fusion);

}  // namespace assoc

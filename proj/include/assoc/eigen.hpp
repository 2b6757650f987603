#pragma once

#include "assoc/cyc_matrix.hpp"
#include "assoc/scheme.hpp"

#include <vector>

namespace assoc {

/// Verified eigenstructure of a scheme. Q is supplied by the caller (or by a
/// character table); P = |X| Q^{-1} and the primitive idempotents
/// E_j = (1/|X|) sum_i Q_ij A_i are derived from it.
struct EigenData {
    SchemeData scheme;
    CycMatrix Q;  // rows: relations i, columns: idempotents j
    CycMatrix P;  // rows: idempotents j, columns: relations i
    std::vector<long> multiplicities;
    std::vector<CycMatrix> idempotents;
    /// j -> j^ with E_{j^} = E_j^T, the entrywise conjugate of E_j.
    std::vector<int> dual_map;
    long splitting_conductor = 1;

    int classes() const noexcept { return scheme.classes; }
    /// Coordinates of E_j on the adjacency basis: Q_ij / |X|.
    std::vector<Cyclotomic> idempotent_coordinates(int j) const;
};

/// Builds P and the idempotents from Q and checks every orthogonality and
/// idempotency identity exactly. Throws BadEigenbasis(invariant) on failure.
EigenData attach_eigendata(const SchemeData& scheme, const CycMatrix& Q);

/// Dense adjacency matrix A_i.
CycMatrix adjacency_matrix(const SchemeData& scheme, int i);

/// Expand a vector of adjacency-basis coordinates into a dense matrix.
CycMatrix expand_coordinates(const SchemeData& scheme, const std::vector<Cyclotomic>& coords);

/// Conductor of Q(Q_ij : all i, j), the smallest cyclotomic field holding Q.
long splitting_field_conductor(const EigenData& E);

}  // namespace assoc

#pragma once

#include "assoc/eigen.hpp"
#include "assoc/simplex.hpp"

#include <vector>

namespace assoc {

/// Design bound: minimise sum a_i subject to a_0 = 1, a >= 0, a_i = a_i',
/// (aQ)_j = 0 for j in T and (aQ)_j >= 0 otherwise. Throws IrrationalData
/// unless Q is rational (fuse first with galois_fusion).
LPProblem delsarte_design_problem(const CycMatrix& Q, const std::vector<int>& transpose_map, const std::vector<int>& T);
LPResult delsarte_design_lp(const EigenData& E, const std::vector<int>& T);

/// Code bound: maximise sum a_i subject to a_0 = 1, a_i = 0 for i in S,
/// a_i = a_i', (aQ)_j >= 0 for all j.
LPProblem delsarte_code_problem(const CycMatrix& Q, const std::vector<int>& transpose_map, const std::vector<int>& S);
LPResult delsarte_code_lp(const EigenData& E, const std::vector<int>& S);

/// The design LP on the unfused scheme posed over the rational merged
/// idempotents: columns of Qbar for K = Q and iota(T). T must be a union of
/// Galois orbits (PreconditionError otherwise).
LPResult delsarte_design_lp_merged(const EigenData& E, const std::vector<int>& T);

}  // namespace assoc

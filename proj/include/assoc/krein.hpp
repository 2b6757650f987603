#pragma once

#include "assoc/eigen.hpp"

#include <vector>

namespace assoc {

/// Krein parameters q_ij^k, defined by E_i o E_j = (1/|X|) sum_k q_ij^k E_k.
struct KreinData {
    int classes = 0;
    std::vector<Cyclotomic> q;  // flattened (i, j, k)
    long krein_conductor = 1;

    const Cyclotomic& operator()(int i, int j, int k) const {
        return q[(static_cast<std::size_t>(i) * static_cast<std::size_t>(classes) + static_cast<std::size_t>(j)) *
                     static_cast<std::size_t>(classes) +
                 static_cast<std::size_t>(k)];
    }
};

/// Expands every Schur product E_i o E_j in the idempotent basis, checks
/// each parameter is real and nonnegative (exact zero test, then interval
/// sign evaluation) and reports the conductor of the Krein field.
/// Throws KreinViolation(i, j, k) on a negative or non-real parameter.
KreinData krein_parameters(const EigenData& E);

}  // namespace assoc

#pragma once

#include "assoc/cyclotomic.hpp"

#include <string>
#include <vector>

namespace assoc {

/// One subgroup of Dic_n (n odd). Cyclic rows are <x^k> with k | 2n;
/// dicyclic rows are <x^k, y x^j> with k | n and 0 <= j < k.
struct DicyclicSubgroupRow {
    std::string descriptor;
    bool dicyclic = false;
    int k = 1;
    int j = 0;
    std::vector<int> elements;  // 0-based element indices, sorted
    std::vector<Rational> a;
    std::vector<Cyclotomic> b;  // indexed chi_0..chi_3, psi_1..psi_{n-1}
    std::vector<int> T;
};

/// Every subgroup of Dic_n with its inner distribution, dual distribution
/// and annihilated set. Computed values are compared against the closed
/// forms below; a mismatch raises InternalAssertion. UnsupportedFamily for
/// even n.
std::vector<DicyclicSubgroupRow> dicyclic_subgroup_table(int n);

/// Closed forms. Cyclic <x^k>, l = 2n/k: b = l at chi_0, chi_1; l at chi_2,
/// chi_3 when l is odd, else 0; 4l at psi_r when l | r, else 0.
/// Dicyclic <x^k, y x^j>: b_0 = 4n/k, 0 at chi_1..chi_3, psi entries as for <x^k>.
std::vector<Rational> dicyclic_closed_form_a(int n, bool dicyclic, int k);
std::vector<Rational> dicyclic_closed_form_b(int n, bool dicyclic, int k);

}  // namespace assoc

#pragma once

#include "assoc/group.hpp"

#include <string>
#include <vector>

namespace assoc {

struct BuiltinGroupSpec {
    enum class Family { Cyclic, Abelian, Dicyclic };
    Family family = Family::Cyclic;
    std::vector<int> params;

    static BuiltinGroupSpec cyclic(int n) { return {Family::Cyclic, {n}}; }
    static BuiltinGroupSpec abelian(std::vector<int> factors) { return {Family::Abelian, std::move(factors)}; }
    static BuiltinGroupSpec dicyclic(int n) { return {Family::Dicyclic, {n}}; }
    /// "cyclic:12", "abelian:2,4", "dicyclic:5".
    static BuiltinGroupSpec parse(const std::string& text);
    std::string name() const;
};

/// One irreducible representation per character, in table order.
struct BuiltinGroup {
    BuiltinGroupSpec spec;
    GroupTable table;
    ConjClassData classes;
    CharacterTable characters;
    std::vector<Representation> representations;
};

/// Abelian groups: element index is mixed radix with the first factor most
/// significant; chi_j(g_i) = prod_t zeta_{n_t}^{j_t i_t}.
///
/// Dicyclic, n odd: x^k is element k and y x^k is element 2n + k. Characters
/// are chi_0..chi_3 then psi_1..psi_{n-1}; with zeta = zeta_{4n},
/// chi_2(x) = -1, chi_2(y) = i = zeta^n, psi_r(x^k) = zeta^{2rk} + zeta^{-2rk}.
/// rho_r sends x to diag(zeta_{2n}^r, zeta_{2n}^-r) and y to [[0,1],[(-1)^r,0]].
/// Throws UnsupportedFamily for even n.
BuiltinGroup builtin_group(const BuiltinGroupSpec& spec);

/// Multiplication table of Dic_n for any n >= 1 (no character data).
GroupTable dicyclic_table(int n);

}  // namespace assoc

#pragma once

#include "assoc/eigen.hpp"
#include "assoc/galois_fusion.hpp"

#include <utility>
#include <vector>

namespace assoc {

/// Finite group given by its multiplication table; element 0 is the identity.
struct GroupTable {
    int order = 0;
    std::vector<int> mult;  // row-major order x order
    std::vector<int> inverse;

    int mul(int a, int b) const {
        return mult[static_cast<std::size_t>(a) * static_cast<std::size_t>(order) + static_cast<std::size_t>(b)];
    }
    int element_order(int g) const;
    std::vector<std::vector<int>> rows() const;
};

/// Associativity is checked on every triple up to this order and on a fixed
/// pseudo-random sample of triples beyond it.
inline constexpr int kFullAssociativityCheck = 128;

/// Throws BadGroupTable when any group law fails.
GroupTable make_group_table(const std::vector<std::vector<int>>& mult);

struct ConjClassData {
    Partition classes;  // classes[0] == {0}
    std::vector<int> class_of;
    std::vector<int> class_inverse_map;

    int count() const noexcept { return static_cast<int>(classes.size()); }
    long size(int i) const { return static_cast<long>(classes[static_cast<std::size_t>(i)].size()); }
};

/// Classes ordered by their smallest element.
ConjClassData conjugacy_classes(const GroupTable& G);

/// (g, h) lies in relation i iff g^-1 h is in class i.
std::pair<SchemeData, ConjClassData> conj_class_scheme(const GroupTable& G);
SchemeData scheme_from_classes(const GroupTable& G, const ConjClassData& classes);

/// rows[j][i] = chi_j(g_i) for a representative g_i of class i.
struct CharacterTable {
    std::vector<std::vector<Cyclotomic>> rows;
    std::vector<long> degrees;
};

/// Row and column orthogonality, first row trivial, degrees matching
/// chi_j(1). Throws BadCharacterTable.
void verify_character_table(const CharacterTable& T, const ConjClassData& classes, int order);

/// Q_ij = f_j conj(chi_j(g_i)); checked through attach_eigendata and m_j = f_j^2.
EigenData eigendata_from_characters(const GroupTable& G, const ConjClassData& classes, const CharacterTable& T);

/// r[i][j][k] with chi_i chi_j = sum_k r_ij^k chi_k, flattened.
/// Throws BadCharacterTable if some r is not a nonnegative integer.
std::vector<long> tensor_multiplicities(const CharacterTable& T, const ConjClassData& classes, int order);

struct Representation {
    int degree = 1;
    std::vector<CycMatrix> images;  // indexed by element
};

/// Checks rho(g) rho(h) = rho(gh) for all pairs. Throws ValidationError.
void verify_representation(const GroupTable& G, const Representation& rho);

/// Character of rho on class representatives.
std::vector<Cyclotomic> representation_character(const Representation& rho, const ConjClassData& classes);

/// U has |G| rows and f^2 columns; row g is rho(g) read row by row. Checks
/// A_i U = (|C_i| chi(g_i) / f) U for every class i, throwing NotEigen(i).
CycMatrix representation_eigenvectors(const GroupTable& G, const Representation& rho, const SchemeData& scheme,
                                      const ConjClassData& classes);

/// Partition of class indices into rational classes (closure under g -> g^m,
/// gcd(m, ord g) = 1), together with the induced fusion. The fusion is
/// checked against galois_fusion over Q; a mismatch raises InternalAssertion.
std::pair<Partition, FusionScheme> rational_class_fusion(const GroupTable& G, const ConjClassData& classes,
                                                         const EigenData& E);

}  // namespace assoc

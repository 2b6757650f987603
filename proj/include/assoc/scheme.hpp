#pragma once

#include <vector>

namespace assoc {

/// Dense (i, j, k) tensor of intersection numbers p_ij^k.
class IntersectionTensor {
public:
    IntersectionTensor() = default;
    explicit IntersectionTensor(int classes)
        : n_(classes), data_(static_cast<std::size_t>(classes) * classes * classes, 0) {}

    int classes() const noexcept { return n_; }
    long operator()(int i, int j, int k) const { return data_[idx(i, j, k)]; }
    long& at(int i, int j, int k) { return data_[idx(i, j, k)]; }

    friend bool operator==(const IntersectionTensor&, const IntersectionTensor&) = default;

private:
    std::size_t idx(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
    }
    int n_ = 0;
    std::vector<long> data_;
};

/// A verified commutative association scheme on {0, ..., size-1}.
/// Class 0 is the identity relation; other classes keep their input labels.
struct SchemeData {
    int size = 0;
    int classes = 0;  // d + 1
    std::vector<int> relation;       // row-major size x size grid of class indices
    std::vector<int> transpose_map;  // i -> i'
    std::vector<long> valencies;
    IntersectionTensor intersection;

    int rel(int x, int y) const {
        return relation[static_cast<std::size_t>(x) * static_cast<std::size_t>(size) + static_cast<std::size_t>(y)];
    }
    long p(int i, int j, int k) const { return intersection(i, j, k); }
    bool is_symmetric() const;
    std::vector<std::vector<int>> relation_rows() const;
};

/// Checks the four scheme axioms by direct counting and fills in the
/// transpose map, valencies and intersection numbers. Throws NotAScheme
/// naming the first violated axiom and a witness.
SchemeData verify_scheme(const std::vector<std::vector<int>>& relation);

/// The intersection tensor of an already verified scheme.
const IntersectionTensor& intersection_numbers(const SchemeData& scheme);

/// The n-cycle scheme: (x, y) in R_i iff y = x +- i (mod n).
SchemeData cycle_scheme(int n);

/// Relation grid obtained by sending each parent class through `cell_of`.
std::vector<std::vector<int>> merged_relation(const SchemeData& scheme, const std::vector<int>& cell_of);

}  // namespace assoc

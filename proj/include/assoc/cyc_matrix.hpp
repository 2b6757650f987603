#pragma once

#include "assoc/cyclotomic.hpp"

#include <initializer_list>
#include <vector>

namespace assoc {

/// Dense matrix over a cyclotomic field. All entries share one conductor;
/// construction embeds every entry into the lcm of the input conductors.
class CycMatrix {
public:
    CycMatrix() = default;
    CycMatrix(int rows, int cols);
    CycMatrix(int rows, int cols, std::vector<Cyclotomic> entries);
    CycMatrix(std::initializer_list<std::initializer_list<Cyclotomic>> rows);

    static CycMatrix identity(int n);
    static CycMatrix from_rows(const std::vector<std::vector<Cyclotomic>>& rows);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    long conductor() const noexcept { return conductor_; }

    const Cyclotomic& operator()(int r, int c) const { return entries_[index(r, c)]; }
    /// Writes must go through set() so the shared conductor is maintained.
    void set(int r, int c, const Cyclotomic& v);

    std::vector<Cyclotomic> row(int r) const;
    std::vector<Cyclotomic> column(int c) const;

    /// Re-embed every entry into Q(zeta_m).
    CycMatrix embedded(long m) const;

    bool is_rational() const;

    friend bool operator==(const CycMatrix& a, const CycMatrix& b);

private:
    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
    }
    void unify();

    int rows_ = 0;
    int cols_ = 0;
    long conductor_ = 1;
    std::vector<Cyclotomic> entries_;
};

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
CycMatrix operator+(const CycMatrix& a, const CycMatrix& b);
CycMatrix operator-(const CycMatrix& a, const CycMatrix& b);
CycMatrix operator*(const Cyclotomic& s, const CycMatrix& a);

CycMatrix schur_product(const CycMatrix& a, const CycMatrix& b);
CycMatrix adjoint(const CycMatrix& a);
CycMatrix transpose(const CycMatrix& a);
/// Entrywise Galois image zeta -> zeta^k.
CycMatrix galois_apply(const CycMatrix& a, long k);

/// Exact inverse by Gauss-Jordan elimination over the field. Throws
/// Singular when rank deficient and DimensionMismatch when not square.
CycMatrix mat_inverse(const CycMatrix& m);

}  // namespace assoc

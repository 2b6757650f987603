#include "assoc/cyc_matrix.hpp"

#include "assoc/errors.hpp"

#include <numeric>

namespace assoc {

CycMatrix::CycMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
}

CycMatrix::CycMatrix(int rows, int cols, std::vector<Cyclotomic> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        throw DimensionMismatch("entry count does not match " + std::to_string(rows) + "x" + std::to_string(cols));
    }
    unify();
}

CycMatrix::CycMatrix(std::initializer_list<std::initializer_list<Cyclotomic>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw DimensionMismatch("ragged matrix literal");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
    unify();
}

CycMatrix CycMatrix::identity(int n) {
    CycMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.entries_[m.index(i, i)] = Cyclotomic(1);
    return m;
}

CycMatrix CycMatrix::from_rows(const std::vector<std::vector<Cyclotomic>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    std::vector<Cyclotomic> entries;
    entries.reserve(static_cast<std::size_t>(r) * static_cast<std::size_t>(c));
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c) throw DimensionMismatch("ragged matrix rows");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return CycMatrix(r, c, std::move(entries));
}

void CycMatrix::unify() {
    long m = 1;
    for (const auto& e : entries_) m = std::lcm(m, e.conductor());
    conductor_ = m;
    for (auto& e : entries_) {
        if (e.conductor() != m) e = e.embed(m);
    }
}

void CycMatrix::set(int r, int c, const Cyclotomic& v) {
    if (v.conductor() == conductor_) {
        entries_[index(r, c)] = v;
        return;
    }
    if (conductor_ % v.conductor() == 0) {
        entries_[index(r, c)] = v.embed(conductor_);
        return;
    }
    entries_[index(r, c)] = v;
    unify();
}

std::vector<Cyclotomic> CycMatrix::row(int r) const {
    return {entries_.begin() + static_cast<std::ptrdiff_t>(index(r, 0)),
            entries_.begin() + static_cast<std::ptrdiff_t>(index(r, 0) + static_cast<std::size_t>(cols_))};
}

std::vector<Cyclotomic> CycMatrix::column(int c) const {
    std::vector<Cyclotomic> out;
    out.reserve(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
}

CycMatrix CycMatrix::embedded(long m) const {
    CycMatrix out = *this;
    for (auto& e : out.entries_) e = e.embed(m);
    out.conductor_ = m;
    return out;
}

bool CycMatrix::is_rational() const {
    for (const auto& e : entries_) {
        if (!e.is_rational()) return false;
    }
    return true;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
        if (!(a.entries_[k] == b.entries_[k])) return false;
    }
    return true;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
    std::vector<Cyclotomic> out(static_cast<std::size_t>(a.rows()) * static_cast<std::size_t>(b.cols()));
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const Cyclotomic& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const Cyclotomic& bkj = b(k, j);
                if (bkj.is_zero()) continue;
                out[static_cast<std::size_t>(i) * static_cast<std::size_t>(b.cols()) + static_cast<std::size_t>(j)] +=
                    aik * bkj;
            }
        }
    }
    return CycMatrix(a.rows(), b.cols(), std::move(out));
}

CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum shape mismatch");
    std::vector<Cyclotomic> out;
    out.reserve(static_cast<std::size_t>(a.rows()) * static_cast<std::size_t>(a.cols()));
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out.push_back(a(i, j) + b(i, j));
    }
    return CycMatrix(a.rows(), a.cols(), std::move(out));
}

CycMatrix operator-(const CycMatrix& a, const CycMatrix& b) { return a + Cyclotomic(-1) * b; }

CycMatrix operator*(const Cyclotomic& s, const CycMatrix& a) {
    std::vector<Cyclotomic> out;
    out.reserve(static_cast<std::size_t>(a.rows()) * static_cast<std::size_t>(a.cols()));
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out.push_back(s * a(i, j));
    }
    return CycMatrix(a.rows(), a.cols(), std::move(out));
}

CycMatrix schur_product(const CycMatrix& a, const CycMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("Schur product shape mismatch");
    std::vector<Cyclotomic> out;
    out.reserve(static_cast<std::size_t>(a.rows()) * static_cast<std::size_t>(a.cols()));
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out.push_back(a(i, j) * b(i, j));
    }
    return CycMatrix(a.rows(), a.cols(), std::move(out));
}

CycMatrix transpose(const CycMatrix& a) {
    std::vector<Cyclotomic> out;
    out.reserve(static_cast<std::size_t>(a.rows()) * static_cast<std::size_t>(a.cols()));
    for (int j = 0; j < a.cols(); ++j) {
        for (int i = 0; i < a.rows(); ++i) out.push_back(a(i, j));
    }
    return CycMatrix(a.cols(), a.rows(), std::move(out));
}

CycMatrix adjoint(const CycMatrix& a) {
    std::vector<Cyclotomic> out;
    out.reserve(static_cast<std::size_t>(a.rows()) * static_cast<std::size_t>(a.cols()));
    for (int j = 0; j < a.cols(); ++j) {
        for (int i = 0; i < a.rows(); ++i) out.push_back(a(i, j).conj());
    }
    return CycMatrix(a.cols(), a.rows(), std::move(out));
}

CycMatrix galois_apply(const CycMatrix& a, long k) {
    std::vector<Cyclotomic> out;
    out.reserve(static_cast<std::size_t>(a.rows()) * static_cast<std::size_t>(a.cols()));
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out.push_back(a(i, j).galois(k));
    }
    return CycMatrix(a.rows(), a.cols(), std::move(out));
}

CycMatrix mat_inverse(const CycMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
    const int n = m.rows();
    std::vector<std::vector<Cyclotomic>> a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto& row = a[static_cast<std::size_t>(i)];
        row = m.row(i);
        for (int j = 0; j < n; ++j) row.push_back(Cyclotomic(i == j ? 1 : 0));
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) throw Singular("matrix is rank deficient at column " + std::to_string(col));
        std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(col)]);
        auto& prow = a[static_cast<std::size_t>(col)];
        const Cyclotomic inv = prow[static_cast<std::size_t>(col)].inverse();
        for (auto& e : prow) e *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            auto& row = a[static_cast<std::size_t>(r)];
            const Cyclotomic factor = row[static_cast<std::size_t>(col)];
            if (factor.is_zero()) continue;
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (!prow[j].is_zero()) row[j] -= factor * prow[j];
            }
        }
    }
    std::vector<Cyclotomic> out;
    out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto& row = a[static_cast<std::size_t>(i)];
        out.insert(out.end(), row.begin() + n, row.end());
    }
    CycMatrix inv(n, n, std::move(out));
    return inv.embedded(std::lcm(inv.conductor(), m.conductor()));
}

}  // namespace assoc

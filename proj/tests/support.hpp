#pragma once

#include "assoc/catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <random>

namespace testing_support {

using assoc::Cyclotomic;
using assoc::Rational;

inline std::complex<double> numeric(const Cyclotomic& x) {
    const double pi = std::acos(-1.0);
    std::complex<double> s = 0;
    for (const auto& [e, c] : x.terms()) s += c.get_d() * std::polar(1.0, 2 * pi * static_cast<double>(e) / static_cast<double>(x.conductor()));
    return s;
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) { return std::abs(a - b) < tol; }

inline Cyclotomic random_cyclotomic(std::mt19937& rng, long n, int terms = 4) {
    std::uniform_int_distribution<long> exp(0, n - 1);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Cyclotomic::Term> t;
    for (int k = 0; k < terms; ++k) t.emplace_back(exp(rng), assoc::ratio(num(rng), den(rng)));
    return Cyclotomic::from_terms(n, t);
}

inline std::string catalog_dir() { return ASSOC_TEST_CATALOG_DIR; }

inline assoc::LoadedEntry entry(const std::string& name) { return assoc::load_catalog_entry(catalog_dir(), name); }

inline const std::vector<std::vector<int>>& x8_relation() {
    static const std::vector<std::vector<int>> r = {{0, 1, 2, 3, 4, 4, 4, 4}, {1, 0, 3, 2, 4, 4, 4, 4}, {3, 2, 0, 1, 4, 4, 4, 4},
                                                    {2, 3, 1, 0, 4, 4, 4, 4}, {4, 4, 4, 4, 0, 1, 2, 3}, {4, 4, 4, 4, 1, 0, 3, 2},
                                                    {4, 4, 4, 4, 3, 2, 0, 1}, {4, 4, 4, 4, 2, 3, 1, 0}};
    return r;
}

inline const std::vector<std::vector<int>>& x8_fused_relation() {
    static const std::vector<std::vector<int>> r = {{0, 1, 2, 2, 3, 3, 3, 3}, {1, 0, 2, 2, 3, 3, 3, 3}, {2, 2, 0, 1, 3, 3, 3, 3},
                                                    {2, 2, 1, 0, 3, 3, 3, 3}, {3, 3, 3, 3, 0, 1, 2, 2}, {3, 3, 3, 3, 1, 0, 2, 2},
                                                    {3, 3, 3, 3, 2, 2, 0, 1}, {3, 3, 3, 3, 2, 2, 1, 0}};
    return r;
}

inline const std::vector<std::vector<int>>& y8_relation() {
    static const std::vector<std::vector<int>> r = {{0, 1, 2, 2, 3, 3, 4, 4}, {1, 0, 2, 2, 3, 3, 4, 4}, {2, 2, 0, 1, 4, 4, 3, 3},
                                                    {2, 2, 1, 0, 4, 4, 3, 3}, {4, 4, 3, 3, 0, 1, 2, 2}, {4, 4, 3, 3, 1, 0, 2, 2},
                                                    {3, 3, 4, 4, 2, 2, 0, 1}, {3, 3, 4, 4, 2, 2, 1, 0}};
    return r;
}

inline assoc::CycMatrix x8_Q() {
    const Cyclotomic i = assoc::zeta(4, 1);
    return {{1L, 1L, 2L, 2L, 2L}, {1L, 1L, -2L, -2L, 2L}, {1L, 1L, -i - i, i + i, -2L}, {1L, 1L, i + i, -i - i, -2L}, {1L, -1L, 0L, 0L, 0L}};
}

inline Cyclotomic sqrt2() { return assoc::zeta(8, 1) + assoc::zeta(8, 7); }

inline assoc::CycMatrix coxeter_Q() {
    const Cyclotomic r = sqrt2();
    return {{1L, 8L, 6L, 7L, 6L},
            {1L, Rational(16, 3), -2L + r + r, Rational(-7, 3), -2L - r - r},
            {1L, Rational(4, 3), -r - r, Rational(-7, 3), r + r},
            {1L, Rational(-4, 3), -1L, Rational(7, 3), -1L},
            {1L, Rational(-8, 3), 2L + r, Rational(-7, 3), 2L - r}};
}

/// The 28 vertices: 3-subsets of {0..6}, lexicographic, minus the lines
/// {t, t+1, t+3} of a Fano plane.
inline std::vector<std::array<int, 3>> coxeter_vertices() {
    std::vector<std::array<int, 3>> lines;
    for (int t = 0; t < 7; ++t) {
        std::array<int, 3> l{t, (t + 1) % 7, (t + 3) % 7};
        std::sort(l.begin(), l.end());
        lines.push_back(l);
    }
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b)
            for (int c = b + 1; c < 7; ++c) {
                const std::array<int, 3> v{a, b, c};
                if (std::find(lines.begin(), lines.end(), v) == lines.end()) out.push_back(v);
            }
    return out;
}

/// Lines of a second Fano plane, disjoint from the first: a 7-vertex subset.
inline std::vector<int> coxeter_fano_subset() {
    const std::vector<std::array<int, 3>> plane = {{0, 1, 4}, {0, 2, 3}, {0, 5, 6}, {1, 2, 5}, {1, 3, 6}, {2, 4, 6}, {3, 4, 5}};
    const auto vs = coxeter_vertices();
    std::vector<int> out;
    for (const auto& l : plane) out.push_back(static_cast<int>(std::find(vs.begin(), vs.end(), l) - vs.begin()));
    std::sort(out.begin(), out.end());
    return out;
}

inline assoc::CycMatrix rational_matrix(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Cyclotomic>> r;
    for (const auto& row : rows) {
        std::vector<Cyclotomic> c;
        for (long v : row) c.emplace_back(v);
        r.push_back(std::move(c));
    }
    return assoc::CycMatrix::from_rows(r);
}

}  // namespace testing_support

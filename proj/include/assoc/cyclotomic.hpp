#pragma once

#include "assoc/rational.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace assoc {

namespace detail {
struct CyclotomicField;
}

/// Largest Euler totient accepted for a conductor.
inline constexpr long kMaxCyclotomicDegree = 10000;

long euler_phi(long n);
long lcm_conductor(long a, long b);

/// An exact element of Q(zeta_n), stored as coordinates on the power basis
/// 1, zeta_n, ..., zeta_n^{phi(n)-1} modulo the n-th cyclotomic polynomial.
///
/// zeta_n is identified with exp(2*pi*i/n) whenever a complex embedding is
/// needed (sign evaluation). Elements of different conductors are compared
/// and combined inside Q(zeta_lcm). The conductor is not minimised
/// automatically; see minimal_conductor().
class Cyclotomic {
public:
    using Term = std::pair<long, Rational>;

    Cyclotomic();
    Cyclotomic(const Rational& r);  // NOLINT(google-explicit-constructor)
    Cyclotomic(long v);             // NOLINT(google-explicit-constructor)

    /// sum of c * zeta_n^e over the given terms; exponents are reduced mod n.
    static Cyclotomic from_terms(long conductor, std::span<const Term> terms);
    static Cyclotomic from_terms(long conductor, std::initializer_list<Term> terms);
    static Cyclotomic zeta(long conductor, long exponent = 1);

    long conductor() const noexcept;
    long degree() const noexcept { return static_cast<long>(coeffs_.size()); }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    /// Nonzero coordinates as (exponent, coefficient), exponent ascending.
    std::vector<Term> terms() const;

    bool is_zero() const;
    bool is_rational() const;
    /// Throws IrrationalData unless is_rational().
    Rational to_rational() const;

    /// Same element viewed in Q(zeta_m); m must be a multiple of conductor().
    Cyclotomic embed(long m) const;

    /// Image under zeta_n -> zeta_n^k. Throws NotAUnit when gcd(k, n) != 1.
    Cyclotomic galois(long k) const;
    /// Complex conjugation, the automorphism with k = n - 1.
    Cyclotomic conj() const;
    /// Throws DivisionByZero on zero.
    Cyclotomic inverse() const;

    bool is_real() const { return conj() == *this; }

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    /// Multiply by a rational without touching the conductor.
    Cyclotomic scaled(const Rational& r) const;

    /// GAP-style rendering, e.g. "-2/3+2*E(8)-E(8)^3".
    std::string to_string() const;

private:
    Cyclotomic(const detail::CyclotomicField* field, std::vector<Rational> coeffs);

    const detail::CyclotomicField* field_;
    std::vector<Rational> coeffs_;

    friend Cyclotomic reduce_exponents(const detail::CyclotomicField*, const std::vector<Rational>&);
};

/// Smallest m dividing conductor() with the element in Q(zeta_m).
long minimal_conductor(const Cyclotomic& x);

/// Sum c * zeta_n^k written as a convenient shorthand for literals in tests.
Cyclotomic zeta(long n, long k = 1);

}  // namespace assoc

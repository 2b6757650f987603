#include "assoc/cyclotomic.hpp"

#include "assoc/errors.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace assoc {

namespace detail {

/// Per-conductor tables: phi(n) and the reduced power basis image of every
/// zeta_n^m, 0 <= m < n, stored sparsely.
struct CyclotomicField {
    long n = 1;
    long phi = 1;
    std::vector<std::vector<std::pair<int, long>>> power;
    std::vector<long> units;
};

namespace {

std::vector<long> cyclotomic_polynomial(long n) {
    // Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}
    auto mobius = [](long m) {
        int sign = 1;
        for (long p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                m /= p;
                if (m % p == 0) return 0;
                sign = -sign;
            }
        }
        if (m > 1) sign = -sign;
        return sign;
    };
    std::vector<long> divisors;
    for (long d = 1; d <= n; ++d) {
        if (n % d == 0) divisors.push_back(d);
    }
    std::vector<__int128> poly{1};
    for (long d : divisors) {
        if (mobius(n / d) != 1) continue;
        std::vector<__int128> next(poly.size() + static_cast<std::size_t>(d), 0);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + static_cast<std::size_t>(d)] += poly[k];
            next[k] -= poly[k];
        }
        poly = std::move(next);
    }
    for (long d : divisors) {
        if (mobius(n / d) != -1) continue;
        auto du = static_cast<std::size_t>(d);
        std::vector<__int128> q(poly.size() - du, 0);
        for (std::size_t k = 0; k < q.size(); ++k) {
            q[k] = (k >= du ? q[k - du] : 0) - poly[k];
        }
        poly = std::move(q);
    }
    std::vector<long> out;
    out.reserve(poly.size());
    for (auto c : poly) {
        if (c > std::numeric_limits<long>::max() || c < std::numeric_limits<long>::min()) {
            throw ConductorTooLarge("cyclotomic polynomial coefficients overflow for n = " + std::to_string(n));
        }
        out.push_back(static_cast<long>(c));
    }
    return out;
}

std::unique_ptr<CyclotomicField> build_field(long n) {
    auto f = std::make_unique<CyclotomicField>();
    f->n = n;
    f->phi = euler_phi(n);
    for (long k = 1; k <= n; ++k) {
        if (std::gcd(k % n, n) == 1) f->units.push_back(k % n);
    }
    if (n == 1) f->units = {0};
    const auto phi = static_cast<std::size_t>(f->phi);
    const auto cyc = cyclotomic_polynomial(n);  // monic, degree phi

    std::vector<__int128> cur(phi, 0);
    cur[0] = 1;
    f->power.resize(static_cast<std::size_t>(n));
    for (long m = 0; m < n; ++m) {
        if (m > 0) {
            // multiply by zeta and reduce x^phi = -sum cyc[k] x^k
            __int128 top = cur[phi - 1];
            for (std::size_t k = phi - 1; k > 0; --k) cur[k] = cur[k - 1];
            cur[0] = 0;
            if (top != 0) {
                for (std::size_t k = 0; k < phi; ++k) cur[k] -= top * cyc[k];
            }
        }
        auto& sparse = f->power[static_cast<std::size_t>(m)];
        for (std::size_t k = 0; k < phi; ++k) {
            if (cur[k] == 0) continue;
            if (cur[k] > std::numeric_limits<long>::max() || cur[k] < std::numeric_limits<long>::min()) {
                throw ConductorTooLarge("power table overflow for n = " + std::to_string(n));
            }
            sparse.emplace_back(static_cast<int>(k), static_cast<long>(cur[k]));
        }
    }
    return f;
}

}  // namespace

const CyclotomicField* field_for(long n) {
    if (n < 1) throw PreconditionError("conductor must be positive, got " + std::to_string(n));
    static std::mutex mutex;
    static std::map<long, std::unique_ptr<CyclotomicField>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second.get();
    if (euler_phi(n) > kMaxCyclotomicDegree) {
        throw ConductorTooLarge("phi(" + std::to_string(n) + ") = " + std::to_string(euler_phi(n)) +
                                " exceeds the supported degree " + std::to_string(kMaxCyclotomicDegree));
    }
    auto [pos, inserted] = cache.emplace(n, build_field(n));
    return pos->second.get();
}

}  // namespace detail

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

long lcm_conductor(long a, long b) { return std::lcm(a, b); }

namespace {

long mod(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace

/// Collapse exponent-indexed coefficients (length n) onto the power basis.
Cyclotomic reduce_exponents(const detail::CyclotomicField* f, const std::vector<Rational>& raw) {
    std::vector<Rational> out(static_cast<std::size_t>(f->phi));
    for (std::size_t m = 0; m < raw.size(); ++m) {
        if (sgn(raw[m]) == 0) continue;
        for (const auto& [k, c] : f->power[m % static_cast<std::size_t>(f->n)]) {
            out[static_cast<std::size_t>(k)] += raw[m] * c;
        }
    }
    return Cyclotomic(f, std::move(out));
}

Cyclotomic::Cyclotomic() : field_(detail::field_for(1)), coeffs_(1) {}

Cyclotomic::Cyclotomic(const Rational& r) : field_(detail::field_for(1)), coeffs_{r} {}

Cyclotomic::Cyclotomic(long v) : Cyclotomic(Rational(v)) {}

Cyclotomic::Cyclotomic(const detail::CyclotomicField* field, std::vector<Rational> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::from_terms(long conductor, std::span<const Term> terms) {
    const auto* f = detail::field_for(conductor);
    std::vector<Rational> raw(static_cast<std::size_t>(conductor));
    for (const auto& [e, c] : terms) raw[static_cast<std::size_t>(mod(e, conductor))] += c;
    return reduce_exponents(f, raw);
}

Cyclotomic Cyclotomic::from_terms(long conductor, std::initializer_list<Term> terms) {
    return from_terms(conductor, std::span<const Term>(terms.begin(), terms.size()));
}

Cyclotomic Cyclotomic::zeta(long conductor, long exponent) {
    return from_terms(conductor, {Term{exponent, Rational(1)}});
}

Cyclotomic zeta(long n, long k) { return Cyclotomic::zeta(n, k); }

long Cyclotomic::conductor() const noexcept { return field_->n; }

std::vector<Cyclotomic::Term> Cyclotomic::terms() const {
    std::vector<Term> out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (sgn(coeffs_[k]) != 0) out.emplace_back(static_cast<long>(k), coeffs_[k]);
    }
    return out;
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_) {
        if (sgn(c) != 0) return false;
    }
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        if (sgn(coeffs_[k]) != 0) return false;
    }
    return true;
}

Rational Cyclotomic::to_rational() const {
    if (!is_rational()) throw IrrationalData("value " + to_string() + " is not rational");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::embed(long m) const {
    const long n = conductor();
    if (m == n) return *this;
    if (m % n != 0) {
        throw ConductorMismatch("cannot embed Q(zeta_" + std::to_string(n) + ") into Q(zeta_" +
                                std::to_string(m) + ")");
    }
    const auto* target = detail::field_for(m);
    const long step = m / n;
    std::vector<Rational> raw(static_cast<std::size_t>(m));
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        if (sgn(coeffs_[e]) != 0) raw[static_cast<std::size_t>(static_cast<long>(e) * step % m)] = coeffs_[e];
    }
    return reduce_exponents(target, raw);
}

Cyclotomic Cyclotomic::galois(long k) const {
    const long n = conductor();
    const long kk = mod(k, n);
    if (std::gcd(kk, n) != 1 && n != 1) {
        throw NotAUnit(std::to_string(k) + " is not a unit modulo " + std::to_string(n));
    }
    if (kk == 1 % n || is_rational()) return *this;
    std::vector<Rational> raw(static_cast<std::size_t>(n));
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        if (sgn(coeffs_[e]) != 0) raw[static_cast<std::size_t>(static_cast<long>(e) * kk % n)] += coeffs_[e];
    }
    return reduce_exponents(field_, raw);
}

Cyclotomic Cyclotomic::conj() const { return galois(conductor() - 1); }

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (is_rational()) return Cyclotomic(field_, [&] {
            std::vector<Rational> c(coeffs_.size());
            c[0] = 1 / coeffs_[0];
            return c;
        }());
    // x^{-1} = (prod_{sigma != 1} sigma(x)) / N(x)
    Cyclotomic others(Rational(1));
    for (long k : field_->units) {
        if (k == 1) continue;
        others *= galois(k);
    }
    const Cyclotomic norm = *this * others;
    if (!norm.is_rational()) throw InternalAssertion("field norm is not rational");
    return others.scaled(1 / norm.coeffs_[0]).embed(conductor());
}

Cyclotomic Cyclotomic::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = -coeffs_[k];
    return Cyclotomic(field_, std::move(c));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (o.field_ == field_) {
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        return *this;
    }
    const long m = std::lcm(conductor(), o.conductor());
    *this = embed(m);
    const Cyclotomic other = o.embed(m);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.field_ != b.field_) {
        if (b.is_rational()) return a.scaled(b.coeffs_[0]).embed(std::lcm(a.conductor(), b.conductor()));
        if (a.is_rational()) return b.scaled(a.coeffs_[0]).embed(std::lcm(a.conductor(), b.conductor()));
        const long m = std::lcm(a.conductor(), b.conductor());
        return a.embed(m) * b.embed(m);
    }
    const auto* f = a.field_;
    const std::size_t phi = a.coeffs_.size();
    std::vector<Rational> raw(2 * phi);
    std::vector<std::size_t> nz_b;
    for (std::size_t j = 0; j < phi; ++j) {
        if (sgn(b.coeffs_[j]) != 0) nz_b.push_back(j);
    }
    for (std::size_t i = 0; i < phi; ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j : nz_b) raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    std::vector<Rational> out(phi);
    for (std::size_t m = 0; m < raw.size(); ++m) {
        if (sgn(raw[m]) == 0) continue;
        if (m < phi) {
            out[m] += raw[m];
            continue;
        }
        for (const auto& [k, c] : f->power[m % static_cast<std::size_t>(f->n)]) {
            out[static_cast<std::size_t>(k)] += raw[m] * c;
        }
    }
    return Cyclotomic(f, std::move(out));
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) { return *this = *this * o; }

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this = *this * o.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.field_ == b.field_) return a.coeffs_ == b.coeffs_;
    const long m = std::lcm(a.conductor(), b.conductor());
    return a.embed(m).coeffs_ == b.embed(m).coeffs_;
}

Cyclotomic Cyclotomic::scaled(const Rational& r) const {
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeffs_[k] * r;
    return Cyclotomic(field_, std::move(c));
}

std::string Cyclotomic::to_string() const {
    const auto ts = terms();
    if (ts.empty()) return "0";
    std::string out;
    const std::string z = "E(" + std::to_string(conductor()) + ")";
    for (const auto& [e, c] : ts) {
        std::string piece;
        Rational mag = abs(c);
        const bool negative = sgn(c) < 0;
        if (e == 0) {
            piece = assoc::to_string(mag);
        } else {
            std::string power = e == 1 ? z : z + "^" + std::to_string(e);
            piece = mag == 1 ? power : assoc::to_string(mag) + "*" + power;
        }
        if (out.empty()) {
            out = negative ? "-" + piece : piece;
        } else {
            out += (negative ? "-" : "+") + piece;
        }
    }
    return out;
}

long minimal_conductor(const Cyclotomic& x) {
    const long n = x.conductor();
    if (x.is_rational()) return 1;
    for (long m = 1; m < n; ++m) {
        if (n % m != 0) continue;
        bool fixed = true;
        for (long k = 1; k < n && fixed; ++k) {
            if (std::gcd(k, n) != 1 || k % m != 1 % m) continue;
            fixed = x.galois(k) == x;
        }
        if (fixed) return m;
    }
    return n;
}

}  // namespace assoc

#include "assoc/subfield.hpp"

#include "assoc/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace assoc {

namespace {

long reduce(long k, long n) {
    long r = k % n;
    return r < 0 ? r + n : r;
}

std::vector<long> close_group(long n, const std::vector<long>& gens) {
    std::set<long> group{1 % n};
    std::vector<long> frontier{1 % n};
    while (!frontier.empty()) {
        std::vector<long> next;
        for (long g : frontier) {
            for (long h : gens) {
                long p = g * h % n;
                if (group.insert(p).second) next.push_back(p);
            }
        }
        frontier = std::move(next);
    }
    return {group.begin(), group.end()};
}

}  // namespace

SubfieldSpec::SubfieldSpec(long ambient_conductor, std::vector<long> generators) : ambient_(ambient_conductor) {
    if (ambient_ < 1) throw PreconditionError("ambient conductor must be positive");
    for (long g : generators) {
        long r = reduce(g, ambient_);
        if (ambient_ > 1 && std::gcd(r, ambient_) != 1) {
            throw NotAUnit(std::to_string(g) + " is not a unit modulo " + std::to_string(ambient_));
        }
        generators_.push_back(ambient_ == 1 ? 0 : r);
    }
    std::sort(generators_.begin(), generators_.end());
    generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
    group_ = close_group(ambient_, generators_);
}

SubfieldSpec SubfieldSpec::rationals(long ambient_conductor) {
    std::vector<long> units;
    for (long k = 1; k < ambient_conductor; ++k) {
        if (std::gcd(k, ambient_conductor) == 1) units.push_back(k);
    }
    return SubfieldSpec(ambient_conductor, units);
}

SubfieldSpec SubfieldSpec::real(long ambient_conductor, std::vector<long> extra) {
    extra.push_back(ambient_conductor - 1);
    return SubfieldSpec(ambient_conductor, extra);
}

SubfieldSpec SubfieldSpec::whole(long ambient_conductor) { return SubfieldSpec(ambient_conductor, {}); }

SubfieldSpec SubfieldSpec::intersection(const SubfieldSpec& a, const SubfieldSpec& b) {
    const long m = std::lcm(a.ambient_, b.ambient_);
    SubfieldSpec la = a.lifted(m);
    SubfieldSpec lb = b.lifted(m);
    std::vector<long> gens = la.generators_;
    gens.insert(gens.end(), lb.generators_.begin(), lb.generators_.end());
    return SubfieldSpec(m, gens);
}

bool SubfieldSpec::fixes(long k) const {
    return std::binary_search(group_.begin(), group_.end(), reduce(k, ambient_));
}

SubfieldSpec SubfieldSpec::lifted(long m) const {
    if (m == ambient_) return *this;
    if (m % ambient_ != 0) {
        throw ConductorMismatch("cannot lift a subfield of Q(zeta_" + std::to_string(ambient_) + ") to conductor " +
                                std::to_string(m));
    }
    std::vector<long> gens;
    for (long k = 1; k < m; ++k) {
        if (std::gcd(k, m) == 1 && fixes(k % ambient_)) gens.push_back(k);
    }
    return SubfieldSpec(m, gens);
}

std::string SubfieldSpec::describe() const {
    std::string out = "fixed field of <";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(generators_[i]);
    }
    return out + "> in (Z/" + std::to_string(ambient_) + ")^x";
}

bool subfield_membership(const Cyclotomic& x, const SubfieldSpec& K) {
    const long n = K.ambient_conductor();
    if (n % x.conductor() != 0) {
        throw ConductorMismatch("element of conductor " + std::to_string(x.conductor()) +
                                " does not embed in Q(zeta_" + std::to_string(n) + ")");
    }
    const Cyclotomic y = x.embed(n);
    for (long g : K.generators()) {
        if (!(y.galois(g) == y)) return false;
    }
    return true;
}

}  // namespace assoc

#include "assoc/designs.hpp"

#include "assoc/errors.hpp"
#include "assoc/real_sign.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <thread>

namespace assoc {

namespace {

using std::size_t;

/// Integer linear forms in the ordered pair counts n_i whose common zero set
/// is {b_j = 0 for all j in T}.
std::vector<std::vector<long>> annihilator_forms(const CycMatrix& Q, const std::vector<int>& T) {
    std::vector<std::vector<long>> forms;
    const int d1 = Q.rows();
    for (int j : T) {
        if (j < 1 || j >= Q.cols()) throw PreconditionError("T index " + std::to_string(j) + " out of range");
        const long deg = Q(0, j).degree();
        for (long t = 0; t < deg; ++t) {
            Integer den = 1;
            for (int i = 0; i < d1; ++i) den = lcm(den, Integer(Q(i, j).coeffs()[static_cast<size_t>(t)].get_den()));
            std::vector<long> form;
            bool nonzero = false;
            for (int i = 0; i < d1; ++i) {
                const Rational c = Q(i, j).coeffs()[static_cast<size_t>(t)] * den;
                if (!c.get_num().fits_slong_p()) throw TooLarge("eigenmatrix coefficient too large for enumeration");
                form.push_back(c.get_num().get_si());
                nonzero = nonzero || form.back() != 0;
            }
            if (nonzero) forms.push_back(std::move(form));
        }
    }
    return forms;
}

struct Searcher {
    const SchemeData& scheme;
    const std::vector<std::vector<long>>& forms;
    int min_size;
    int max_size;
    std::vector<int> current;
    std::vector<long> counts;
    std::vector<std::vector<int>> found;

    bool accepts() const {
        for (const auto& form : forms) {
            __int128 s = 0;
            for (size_t i = 0; i < form.size(); ++i) s += static_cast<__int128>(form[i]) * counts[i];
            if (s != 0) return false;
        }
        return true;
    }

    void add(int v, int sign) {
        counts[0] += sign;
        for (int u : current) {
            counts[static_cast<size_t>(scheme.rel(v, u))] += sign;
            counts[static_cast<size_t>(scheme.rel(u, v))] += sign;
        }
    }

    void visit(int v) {
        add(v, 1);
        current.push_back(v);
        const int size = static_cast<int>(current.size());
        if (size >= min_size && accepts()) found.push_back(current);
        if (size < max_size) {
            for (int w = v + 1; w < scheme.size; ++w) visit(w);
        }
        current.pop_back();
        add(v, -1);
    }
};

}  // namespace

WeightedSubset WeightedSubset::from_subset(int size, const std::vector<int>& vertices) {
    WeightedSubset w;
    w.weights.assign(static_cast<size_t>(size), Rational(0));
    for (int v : vertices) {
        if (v < 0 || v >= size) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
        w.weights[static_cast<size_t>(v)] = 1;
    }
    return w;
}

bool WeightedSubset::is_characteristic() const {
    return std::all_of(weights.begin(), weights.end(), [](const Rational& r) { return r == 0 || r == 1; });
}

std::vector<Rational> inner_distribution(const SchemeData& scheme, const WeightedSubset& w) {
    if (static_cast<int>(w.weights.size()) != scheme.size) throw PreconditionError("weight vector length differs from |X|");
    Rational norm = 0;
    std::vector<int> support;
    for (int x = 0; x < scheme.size; ++x) {
        const Rational& wx = w.weights[static_cast<size_t>(x)];
        if (wx < 0) throw PreconditionError("negative weight at vertex " + std::to_string(x));
        if (wx != 0) support.push_back(x);
        norm += wx * wx;
    }
    if (norm == 0) throw ZeroVector("weighted subset is identically zero");
    std::vector<Rational> a(static_cast<size_t>(scheme.classes), Rational(0));
    for (int x : support) {
        for (int y : support) {
            a[static_cast<size_t>(scheme.rel(x, y))] += w.weights[static_cast<size_t>(x)] * w.weights[static_cast<size_t>(y)];
        }
    }
    for (auto& v : a) v /= norm;
    return a;
}

std::vector<Cyclotomic> dual_distribution(const CycMatrix& Q, const std::vector<Rational>& a) {
    if (static_cast<int>(a.size()) != Q.rows()) throw DimensionMismatch("distribution length differs from eigenmatrix rows");
    std::vector<Cyclotomic> b;
    for (int j = 0; j < Q.cols(); ++j) {
        Cyclotomic s;
        for (int i = 0; i < Q.rows(); ++i) {
            if (a[static_cast<size_t>(i)] != 0) s += Q(i, j).scaled(a[static_cast<size_t>(i)]);
        }
        b.push_back(s);
    }
    return b;
}

std::vector<Cyclotomic> dual_distribution(const EigenData& E, const std::vector<Rational>& a) { return dual_distribution(E.Q, a); }

Partition rational_orbits(const EigenData& E) {
    const auto perms = sigma_permutations(E, SubfieldSpec::rationals(E.Q.conductor()));
    Partition orbits;
    std::vector<char> seen(static_cast<size_t>(E.classes()), 0);
    for (int j = 0; j < E.classes(); ++j) {
        if (seen[static_cast<size_t>(j)]) continue;
        std::set<int> orbit;
        for (const auto& p : perms) orbit.insert(p[static_cast<size_t>(j)]);
        for (int x : orbit) seen[static_cast<size_t>(x)] = 1;
        orbits.emplace_back(orbit.begin(), orbit.end());
    }
    return canonical_partition(std::move(orbits));
}

bool is_union_of_orbits(const std::vector<int>& T, const Partition& orbits) {
    const std::set<int> t(T.begin(), T.end());
    for (const auto& cell : orbits) {
        const auto hits = std::count_if(cell.begin(), cell.end(), [&](int j) { return t.count(j) > 0; });
        if (hits != 0 && hits != static_cast<long>(cell.size())) return false;
    }
    return true;
}

std::vector<int> merged_index_set(const std::vector<int>& T, const std::vector<int>& iota) {
    std::set<int> out;
    for (int j : T) out.insert(iota.at(static_cast<size_t>(j)));
    return {out.begin(), out.end()};
}

DesignReport design_report(const SchemeData& scheme, const EigenData& E, const WeightedSubset& w, const Partition& orbits) {
    DesignReport R;
    R.a = inner_distribution(scheme, w);
    R.b = dual_distribution(E, R.a);
    for (int j = 0; j < E.classes(); ++j) {
        const Cyclotomic& bj = R.b[static_cast<size_t>(j)];
        if (!bj.is_real()) throw InternalAssertion("dual distribution entry " + std::to_string(j) + " is not real");
        const int s = real_sign(bj);
        if (s < 0 || (j == 0 && s == 0)) throw InternalAssertion("dual distribution entry " + std::to_string(j) + " has the wrong sign");
        if (j > 0 && s == 0) R.T.push_back(j);
    }
    R.orbit_closed = is_union_of_orbits(R.T, orbits);
    if (!R.orbit_closed) throw OrbitClosureViolation("T(C) is not a union of Galois orbits");
    return R;
}

DesignReport design_report(const SchemeData& scheme, const EigenData& E, const WeightedSubset& w) {
    return design_report(scheme, E, w, rational_orbits(E));
}

bool is_T_design(const SchemeData& scheme, const EigenData& E, const WeightedSubset& w, const std::vector<int>& T) {
    const auto b = dual_distribution(E, inner_distribution(scheme, w));
    for (int j : T) {
        if (j < 1 || j >= E.classes()) throw PreconditionError("T index " + std::to_string(j) + " out of range");
        if (!b[static_cast<size_t>(j)].is_zero()) return false;
    }
    return true;
}

bool is_T_design_merged(const GaloisOrbitData& G, const WeightedSubset& w, const std::vector<int>& T) {
    for (int l : merged_index_set(T, G.iota)) {
        const CycMatrix& F = G.F[static_cast<size_t>(l)];
        if (static_cast<int>(w.weights.size()) != F.cols()) throw PreconditionError("weight vector length differs from |X|");
        for (int r = 0; r < F.rows(); ++r) {
            Cyclotomic s;
            for (int c = 0; c < F.cols(); ++c) {
                if (w.weights[static_cast<size_t>(c)] != 0) s += F(r, c).scaled(w.weights[static_cast<size_t>(c)]);
            }
            if (!s.is_zero()) return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> enumerate_T_designs(const SchemeData& scheme, const EigenData& E, const std::vector<int>& T,
                                                  int min_size, int max_size, int threads) {
    if (scheme.size > kMaxEnumerationVertices) {
        throw TooLarge("exhaustive enumeration is capped at " + std::to_string(kMaxEnumerationVertices) + " vertices");
    }
    min_size = std::max(min_size, 1);
    max_size = std::min(max_size, scheme.size);
    if (min_size > max_size) return {};
    const auto forms = annihilator_forms(E.Q, T);

    if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = std::min(threads, scheme.size);
    std::vector<std::vector<std::vector<int>>> per_lead(static_cast<size_t>(scheme.size));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int v = next++; v < scheme.size; v = next++) {
            Searcher s{scheme, forms, min_size, max_size, {}, std::vector<long>(static_cast<size_t>(scheme.classes), 0), {}};
            s.visit(v);
            per_lead[static_cast<size_t>(v)] = std::move(s.found);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::vector<std::vector<int>> out;
    for (auto& part : per_lead) {
        for (auto& c : part) out.push_back(std::move(c));
    }
    return out;
}

EnumerationResult enumerate_T_designs_checked(const SchemeData& scheme, const EigenData& E, const std::vector<int>& T,
                                              int min_size, int max_size, int threads) {
    EnumerationResult R;
    R.designs = enumerate_T_designs(scheme, E, T, min_size, max_size, threads);
    const Partition orbits = rational_orbits(E);
    if (!is_union_of_orbits(T, orbits)) return R;
    FusionScheme F;
    try {
        F = galois_fusion(scheme, E, SubfieldSpec::rationals(E.Q.conductor()));
    } catch (const NotClosed&) {
        return R;
    }
    const EigenData EF = fused_eigendata(F);
    const auto iota = cell_index(F.idempotent_partition, E.classes());
    std::vector<int> fused_T;
    for (int l : merged_index_set(T, iota)) {
        if (l != 0) fused_T.push_back(l);
    }
    const auto fused = enumerate_T_designs(F.fused, EF, fused_T, min_size, max_size, threads);
    if (fused != R.designs) throw InternalAssertion("fused-scheme enumeration disagrees with the original scheme");
    R.cross_checked = true;
    return R;
}

DesignTransfer make_design_transfer(const EigenData& EX, const EigenData& EY, const std::vector<int>& vertex_map) {
    const int n = EX.scheme.size;
    if (EY.scheme.size != n || static_cast<int>(vertex_map.size()) != n) throw ValidationError("vertex map size differs from |X|");
    {
        std::vector<int> sorted = vertex_map;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < n; ++i) {
            if (sorted[static_cast<size_t>(i)] != i) throw ValidationError("vertex map is not a bijection");
        }
    }
    const auto FX = galois_fusion(EX.scheme, EX, SubfieldSpec::rationals(EX.Q.conductor()));
    const auto FY = galois_fusion(EY.scheme, EY, SubfieldSpec::rationals(EY.Q.conductor()));
    const int e1 = FX.fused.classes;
    if (FY.fused.classes != e1) throw ValidationError("rational fusions have different class counts");

    DesignTransfer TX;
    TX.vertex_map = vertex_map;
    TX.relation_map.assign(static_cast<size_t>(e1), -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            const int cx = FX.fused.rel(x, y);
            const int cy = FY.fused.rel(vertex_map[static_cast<size_t>(x)], vertex_map[static_cast<size_t>(y)]);
            int& slot = TX.relation_map[static_cast<size_t>(cx)];
            if (slot < 0) slot = cy;
            if (slot != cy) throw ValidationError("vertex map does not carry fused relations onto fused relations");
        }
    }
    TX.eigen_match.assign(static_cast<size_t>(e1), -1);
    std::vector<char> taken(static_cast<size_t>(e1), 0);
    for (int a = 0; a < e1; ++a) {
        for (int b = 0; b < e1; ++b) {
            if (!(FX.Q_F(0, a) == FY.Q_F(0, b))) continue;
            bool same = true;
            for (int i = 0; i < e1 && same; ++i) same = FX.Q_F(i, a) == FY.Q_F(TX.relation_map[static_cast<size_t>(i)], b);
            if (!same) continue;
            if (TX.eigen_match[static_cast<size_t>(a)] >= 0) throw ValidationError("ambiguous fused eigenspace match");
            TX.eigen_match[static_cast<size_t>(a)] = b;
        }
        if (TX.eigen_match[static_cast<size_t>(a)] < 0 || taken[static_cast<size_t>(TX.eigen_match[static_cast<size_t>(a)])]++) {
            throw ValidationError("fused eigenspace " + std::to_string(a) + " has no match");
        }
    }
    TX.x_orbits = FX.idempotent_partition;
    TX.y_orbits = FY.idempotent_partition;
    TX.y_scheme = EY.scheme;
    TX.y_eigen = EY;
    return TX;
}

TransferredDesign transfer_design(const DesignTransfer& TX, const std::vector<int>& C, const std::vector<int>& T) {
    if (!is_union_of_orbits(T, TX.x_orbits)) throw IncompatibleT("T is not a union of Galois orbits of X");
    int max_index = 0;
    for (const auto& cell : TX.x_orbits) max_index = std::max(max_index, cell.back());
    const auto x_iota = cell_index(TX.x_orbits, max_index + 1);

    std::set<int> t_prime;
    for (int l : merged_index_set(T, x_iota)) {
        for (int j : TX.y_orbits[static_cast<size_t>(TX.eigen_match[static_cast<size_t>(l)])]) {
            if (j != 0) t_prime.insert(j);
        }
    }
    TransferredDesign out;
    out.T.assign(t_prime.begin(), t_prime.end());
    for (int v : C) {
        if (v < 0 || v >= static_cast<int>(TX.vertex_map.size())) throw PreconditionError("vertex out of range");
        out.subset.push_back(TX.vertex_map[static_cast<size_t>(v)]);
    }
    std::sort(out.subset.begin(), out.subset.end());
    const auto w = WeightedSubset::from_subset(TX.y_scheme.size, out.subset);
    if (!is_T_design(TX.y_scheme, TX.y_eigen, w, out.T)) {
        throw IncompatibleT("image of C is not a T'-design of Y; C was not a T-design of X");
    }
    return out;
}

TransferredDesign transfer_design(const DesignTransfer& TX, const std::vector<int>& C, const std::vector<int>& T,
                                  const std::vector<int>& expected_T) {
    TransferredDesign out = transfer_design(TX, C, T);
    std::vector<int> want = expected_T;
    std::sort(want.begin(), want.end());
    if (out.T != want) throw IncompatibleT("iota images of T and T' do not correspond under the eigenspace match");
    return out;
}

}  // namespace assoc

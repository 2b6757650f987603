#include "assoc/galois_fusion.hpp"

#include "assoc/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace assoc {

namespace {

using std::size_t;

void validate_partition(const Partition& p, int n) {
    std::vector<int> seen(static_cast<size_t>(n), 0);
    for (const auto& cell : p) {
        if (cell.empty()) throw PreconditionError("partition has an empty cell");
        for (int x : cell) {
            if (x < 0 || x >= n) throw PreconditionError("partition element " + std::to_string(x) + " out of range");
            if (seen[static_cast<size_t>(x)]++) throw PreconditionError("partition element " + std::to_string(x) + " repeated");
        }
    }
    for (int x = 0; x < n; ++x) {
        if (!seen[static_cast<size_t>(x)]) throw PreconditionError("partition misses element " + std::to_string(x));
    }
}

Permutation compose(const Permutation& a, const Permutation& b) {
    // apply a then b
    Permutation out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = b[static_cast<size_t>(a[i])];
    return out;
}

}  // namespace

Partition canonical_partition(Partition p) {
    for (auto& cell : p) std::sort(cell.begin(), cell.end());
    std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return p;
}

std::vector<int> cell_index(const Partition& p, int n) {
    std::vector<int> out(static_cast<size_t>(n), -1);
    for (size_t c = 0; c < p.size(); ++c) {
        for (int x : p[c]) out[static_cast<size_t>(x)] = static_cast<int>(c);
    }
    return out;
}

Partition partition_join(const Partition& a, const Partition& b) {
    int n = 0;
    for (const auto& cell : a) n += static_cast<int>(cell.size());
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    };
    for (const auto* part : {&a, &b}) {
        for (const auto& cell : *part) {
            for (int x : cell) parent[static_cast<size_t>(find(x))] = find(cell.front());
        }
    }
    std::map<int, std::vector<int>> groups;
    for (int x = 0; x < n; ++x) groups[find(x)].push_back(x);
    Partition out;
    for (auto& [root, cell] : groups) out.push_back(std::move(cell));
    return canonical_partition(std::move(out));
}

Permutation induced_permutation(const EigenData& E, long k, long conductor) {
    const CycMatrix Q = E.Q.embedded(std::lcm(conductor, E.Q.conductor()));
    const int d1 = E.classes();
    Permutation perm(static_cast<size_t>(d1), -1);
    std::vector<char> used(static_cast<size_t>(d1), 0);
    for (int j = 0; j < d1; ++j) {
        std::vector<Cyclotomic> image;
        image.reserve(static_cast<size_t>(d1));
        for (int i = 0; i < d1; ++i) image.push_back(Q(i, j).galois(k));
        for (int h = 0; h < d1; ++h) {
            bool match = true;
            for (int i = 0; i < d1 && match; ++i) match = image[static_cast<size_t>(i)] == Q(i, h);
            if (match) {
                perm[static_cast<size_t>(j)] = h;
                break;
            }
        }
        if (perm[static_cast<size_t>(j)] < 0 || used[static_cast<size_t>(perm[static_cast<size_t>(j)])]++) {
            throw NotPermutation("Galois image of E_" + std::to_string(j) + " under zeta -> zeta^" + std::to_string(k) +
                                 " is not a distinct primitive idempotent");
        }
    }
    return perm;
}

std::vector<Permutation> sigma_permutations(const EigenData& E, const SubfieldSpec& K) {
    const long m = std::lcm(K.ambient_conductor(), E.Q.conductor());
    const SubfieldSpec lifted = K.lifted(m);
    std::vector<Permutation> gens;
    for (long k : lifted.generators()) gens.push_back(induced_permutation(E, k, m));

    Permutation id(static_cast<size_t>(E.classes()));
    std::iota(id.begin(), id.end(), 0);
    std::set<Permutation> group{id};
    std::vector<Permutation> frontier{id};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& g : frontier) {
            for (const auto& h : gens) {
                auto p = compose(g, h);
                if (group.insert(p).second) next.push_back(std::move(p));
            }
        }
        frontier = std::move(next);
    }
    std::vector<Permutation> out(group.begin(), group.end());
    // std::set order puts the identity first since it is lexicographically least.
    return out;
}

GaloisOrbitData orbit_merge(const EigenData& E, const SubfieldSpec& K) {
    const int d1 = E.classes();
    GaloisOrbitData G{K, sigma_permutations(E, K), {}, {}, {}, {}, {}};

    std::vector<int> orbit_of(static_cast<size_t>(d1), -1);
    for (int j = 0; j < d1; ++j) {
        if (orbit_of[static_cast<size_t>(j)] >= 0) continue;
        std::set<int> orbit;
        for (const auto& p : G.perms) orbit.insert(p[static_cast<size_t>(j)]);
        for (int x : orbit) orbit_of[static_cast<size_t>(x)] = static_cast<int>(G.orbits.size());
        G.orbits.emplace_back(orbit.begin(), orbit.end());
    }
    G.orbits = canonical_partition(std::move(G.orbits));
    G.iota = cell_index(G.orbits, d1);
    const int e1 = G.merged_classes();
    G.O.assign(static_cast<size_t>(d1), std::vector<int>(static_cast<size_t>(e1), 0));
    for (int j = 0; j < d1; ++j) G.O[static_cast<size_t>(j)][static_cast<size_t>(G.iota[static_cast<size_t>(j)])] = 1;

    std::vector<Cyclotomic> qbar;
    qbar.reserve(static_cast<size_t>(d1) * static_cast<size_t>(e1));
    for (int i = 0; i < d1; ++i) {
        std::vector<Cyclotomic> row(static_cast<size_t>(e1));
        for (int j = 0; j < d1; ++j) row[static_cast<size_t>(G.iota[static_cast<size_t>(j)])] += E.Q(i, j);
        qbar.insert(qbar.end(), row.begin(), row.end());
    }
    G.Qbar = CycMatrix(d1, e1, std::move(qbar));

    const SubfieldSpec lifted = K.lifted(std::lcm(K.ambient_conductor(), G.Qbar.conductor()));
    for (int i = 0; i < d1; ++i) {
        for (int l = 0; l < e1; ++l) {
            if (!subfield_membership(G.Qbar(i, l).embed(lifted.ambient_conductor()), lifted)) {
                throw InternalAssertion("merged idempotent F_" + std::to_string(l) + " has an entry outside K");
            }
        }
    }
    const Rational inv_size(1, E.scheme.size);
    for (int l = 0; l < e1; ++l) {
        std::vector<Cyclotomic> coords;
        for (int i = 0; i < d1; ++i) coords.push_back(G.Qbar(i, l).scaled(inv_size));
        G.F.push_back(expand_coordinates(E.scheme, coords));
    }
    return G;
}

Partition equal_row_classes(const CycMatrix& M) {
    Partition classes;
    std::vector<int> reps;
    for (int r = 0; r < M.rows(); ++r) {
        bool placed = false;
        for (size_t c = 0; c < reps.size() && !placed; ++c) {
            bool same = true;
            for (int j = 0; j < M.cols() && same; ++j) same = M(r, j) == M(reps[c], j);
            if (same) {
                classes[c].push_back(r);
                placed = true;
            }
        }
        if (!placed) {
            reps.push_back(r);
            classes.push_back({r});
        }
    }
    return classes;
}

BannaiMuzychukVerdict bannai_muzychuk_idempotent(const GaloisOrbitData& G) {
    BannaiMuzychukVerdict v;
    v.row_classes = equal_row_classes(G.Qbar);
    v.distinct_rows = static_cast<int>(v.row_classes.size());
    v.passes = v.distinct_rows == G.merged_classes();
    return v;
}

FusionScheme fuse_by_relation_partition(const SchemeData& scheme, const EigenData& E, const Partition& partition) {
    const int d1 = scheme.classes;
    if (E.scheme.relation != scheme.relation) throw PreconditionError("eigen data belongs to a different scheme");
    validate_partition(partition, d1);
    FusionScheme F;
    F.parent = scheme;
    F.relation_partition = canonical_partition(partition);
    if (F.relation_partition.front() != std::vector<int>{0}) {
        throw PreconditionError("relation partition must keep class 0 in a cell of its own");
    }
    const int e1 = static_cast<int>(F.relation_partition.size());
    const auto cell_of = cell_index(F.relation_partition, d1);

    std::vector<Cyclotomic> po;
    po.reserve(static_cast<size_t>(d1) * static_cast<size_t>(e1));
    for (int j = 0; j < d1; ++j) {
        std::vector<Cyclotomic> row(static_cast<size_t>(e1));
        for (int i = 0; i < d1; ++i) row[static_cast<size_t>(cell_of[static_cast<size_t>(i)])] += E.P(j, i);
        po.insert(po.end(), row.begin(), row.end());
    }
    const CycMatrix PO(d1, e1, std::move(po));
    F.idempotent_partition = equal_row_classes(PO);
    if (static_cast<int>(F.idempotent_partition.size()) != e1) {
        throw NotAFusion("PO has " + std::to_string(F.idempotent_partition.size()) + " distinct rows for " +
                         std::to_string(e1) + " cells");
    }

    try {
        F.fused = verify_scheme(merged_relation(scheme, cell_of));
    } catch (const NotAScheme& err) {
        throw NotAFusion(std::string("merged relations fail verification: ") + err.what());
    }

    std::vector<Cyclotomic> pf;
    F.S = CycMatrix(d1, e1);
    for (int r = 0; r < e1; ++r) {
        const auto& cls = F.idempotent_partition[static_cast<size_t>(r)];
        for (int c = 0; c < e1; ++c) pf.push_back(PO(cls.front(), c));
        for (int j : cls) F.S.set(j, r, Cyclotomic(1));
    }
    F.P_F = CycMatrix(e1, e1, std::move(pf));
    if (!(F.S * F.P_F == PO)) throw InternalAssertion("PO != S P_F");
    F.Q_F = Cyclotomic(static_cast<long>(scheme.size)) * mat_inverse(F.P_F);
    return F;
}

FusionScheme galois_fusion(const SchemeData& scheme, const EigenData& E, const SubfieldSpec& K) {
    const GaloisOrbitData G = orbit_merge(E, K);
    const BannaiMuzychukVerdict v = bannai_muzychuk_idempotent(G);
    if (!v.passes) throw NotClosed(v.distinct_rows, G.merged_classes());

    FusionScheme F = fuse_by_relation_partition(scheme, E, v.row_classes);
    F.field = K;
    if (F.idempotent_partition != G.orbits) {
        throw InternalAssertion("relation-side criterion merges idempotents differently from the Galois orbits");
    }
    const int e1 = G.merged_classes();
    for (int r = 0; r < e1; ++r) {
        for (int l = 0; l < e1; ++l) {
            if (!(F.Q_F(r, l) == G.Qbar(v.row_classes[static_cast<size_t>(r)].front(), l))) {
                throw InternalAssertion("Q_F from P_F inversion disagrees with the distinct rows of Qbar");
            }
        }
    }
    return F;
}

FusionScheme common_fusion(const SchemeData& scheme, const EigenData& E, const Partition& p1, const Partition& p2) {
    fuse_by_relation_partition(scheme, E, p1);
    fuse_by_relation_partition(scheme, E, p2);
    const Partition join = partition_join(p1, p2);
    try {
        return fuse_by_relation_partition(scheme, E, join);
    } catch (const NotAFusion& err) {
        throw NotAFusion(std::string("join of two fusions is not a fusion (unexpected): ") + err.what());
    }
}

EigenData fused_eigendata(const FusionScheme& fusion) { return attach_eigendata(fusion.fused, fusion.Q_F); }

}  // namespace assoc

#include "assoc/dicyclic.hpp"

#include "assoc/builtin_groups.hpp"
#include "assoc/designs.hpp"
#include "assoc/errors.hpp"

#include <algorithm>

namespace assoc {

namespace {

void require_odd(int n) {
    if (n % 2 == 0) throw UnsupportedFamily("dicyclic subgroup table needs odd n (got " + std::to_string(n) + ")");
    if (n < 3) throw PreconditionError("dicyclic subgroup table needs n >= 3");
}

}  // namespace

std::vector<Rational> dicyclic_closed_form_a(int n, bool dicyclic, int k) {
    std::vector<Rational> a(static_cast<std::size_t>(n + 3), Rational(0));
    a[0] = 1;
    for (int i = 1; i < n; ++i) {
        if (i % k == 0) a[static_cast<std::size_t>(i)] = 2;
    }
    if (k % 2 == 1) a[static_cast<std::size_t>(n)] = 1;
    if (dicyclic) {
        a[static_cast<std::size_t>(n + 1)] = n / k;
        a[static_cast<std::size_t>(n + 2)] = n / k;
    }
    return a;
}

std::vector<Rational> dicyclic_closed_form_b(int n, bool dicyclic, int k) {
    const int l = 2 * n / k;
    std::vector<Rational> b(static_cast<std::size_t>(n + 3), Rational(0));
    if (dicyclic) {
        b[0] = 2 * l;
    } else {
        b[0] = b[1] = l;
        if (l % 2 == 1) b[2] = b[3] = l;
    }
    for (int r = 1; r < n; ++r) {
        if (r % l == 0) b[static_cast<std::size_t>(r + 3)] = 4 * l;
    }
    return b;
}

std::vector<DicyclicSubgroupRow> dicyclic_subgroup_table(int n) {
    require_odd(n);
    const BuiltinGroup G = builtin_group(BuiltinGroupSpec::dicyclic(n));
    const EigenData E = eigendata_from_characters(G.table, G.classes, G.characters);
    const Partition orbits = rational_orbits(E);
    const int m = 2 * n;

    std::vector<DicyclicSubgroupRow> rows;
    for (int k = 1; k <= m; ++k) {
        if (m % k == 0) {
            DicyclicSubgroupRow r;
            r.descriptor = "<x^" + std::to_string(k) + ">";
            r.k = k;
            for (int t = 0; t < m; t += k) r.elements.push_back(t);
            rows.push_back(std::move(r));
        }
    }
    for (int k = 1; k <= n; ++k) {
        if (n % k != 0) continue;
        for (int j = 0; j < k; ++j) {
            DicyclicSubgroupRow r;
            r.descriptor = "<x^" + std::to_string(k) + ", yx^" + std::to_string(j) + ">";
            r.dicyclic = true;
            r.k = k;
            r.j = j;
            for (int t = 0; t < m; t += k) {
                r.elements.push_back(t);
                r.elements.push_back(m + (j + t) % m);
            }
            std::sort(r.elements.begin(), r.elements.end());
            rows.push_back(std::move(r));
        }
    }

    for (auto& r : rows) {
        const auto report = design_report(E.scheme, E, WeightedSubset::from_subset(G.table.order, r.elements), orbits);
        r.a = report.a;
        r.b = report.b;
        r.T = report.T;
        if (r.a != dicyclic_closed_form_a(n, r.dicyclic, r.k)) {
            throw InternalAssertion("inner distribution of " + r.descriptor + " differs from the closed form");
        }
        const auto expect = dicyclic_closed_form_b(n, r.dicyclic, r.k);
        for (std::size_t i = 0; i < expect.size(); ++i) {
            if (!(r.b[i] == Cyclotomic(expect[i]))) {
                throw InternalAssertion("dual distribution of " + r.descriptor + " differs from the closed form");
            }
        }
    }
    return rows;
}

}  // namespace assoc

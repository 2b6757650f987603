#include "assoc/builtin_groups.hpp"

#include "assoc/errors.hpp"

#include <numeric>
#include <sstream>

namespace assoc {

namespace {

using std::size_t;

int mod(long a, long m) { return static_cast<int>(((a % m) + m) % m); }

BuiltinGroup abelian_group(const BuiltinGroupSpec& spec) {
    const auto& ns = spec.params;
    if (ns.empty()) throw PreconditionError("abelian group needs at least one factor");
    int order = 1;
    long conductor = 1;
    for (int n : ns) {
        if (n < 1) throw PreconditionError("factor orders must be positive");
        order *= n;
        conductor = std::lcm(conductor, static_cast<long>(n));
    }
    auto digits = [&](int g) {
        std::vector<int> d(ns.size());
        for (size_t t = ns.size(); t-- > 0;) {
            d[t] = g % ns[t];
            g /= ns[t];
        }
        return d;
    };
    auto index = [&](const std::vector<int>& d) {
        int g = 0;
        for (size_t t = 0; t < ns.size(); ++t) g = g * ns[t] + d[t];
        return g;
    };
    std::vector<std::vector<int>> mult(static_cast<size_t>(order), std::vector<int>(static_cast<size_t>(order)));
    for (int a = 0; a < order; ++a) {
        const auto da = digits(a);
        for (int b = 0; b < order; ++b) {
            auto db = digits(b);
            for (size_t t = 0; t < ns.size(); ++t) db[t] = (da[t] + db[t]) % ns[t];
            mult[static_cast<size_t>(a)][static_cast<size_t>(b)] = index(db);
        }
    }
    BuiltinGroup B;
    B.spec = spec;
    B.table = make_group_table(mult);
    B.classes = conjugacy_classes(B.table);
    for (int j = 0; j < order; ++j) {
        const auto dj = digits(j);
        std::vector<Cyclotomic> row;
        Representation rho;
        for (int i = 0; i < order; ++i) {
            const auto di = digits(i);
            long e = 0;
            for (size_t t = 0; t < ns.size(); ++t) e += static_cast<long>(dj[t]) * di[t] * (conductor / ns[t]);
            row.push_back(zeta(conductor, e % conductor));
            rho.images.push_back(CycMatrix{{row.back()}});
        }
        B.characters.rows.push_back(std::move(row));
        B.characters.degrees.push_back(1);
        B.representations.push_back(std::move(rho));
    }
    return B;
}

BuiltinGroup dicyclic_group(const BuiltinGroupSpec& spec) {
    const int n = spec.params.at(0);
    if (n % 2 == 0) throw UnsupportedFamily("dicyclic groups are supported for odd n only (got n = " + std::to_string(n) + ")");
    if (n < 3) throw PreconditionError("dicyclic needs n >= 3");
    const long N = 4L * n;
    BuiltinGroup B;
    B.spec = spec;
    B.table = dicyclic_table(n);
    B.classes = conjugacy_classes(B.table);
    const int d1 = B.classes.count();
    if (d1 != n + 3) throw InternalAssertion("Dic_n should have n + 3 classes");

    // Linear characters on generators: (value at x, value at y) as powers of zeta_{4n}.
    const long half = 2L * n;
    const std::vector<std::pair<long, long>> linear = {{0, 0}, {0, half}, {half, n}, {half, 3L * n}};
    for (const auto& [ex, ey] : linear) {
        Representation rho;
        for (int g = 0; g < 4 * n; ++g) {
            const long k = g < 2 * n ? g : g - 2 * n;
            const long e = (g < 2 * n ? 0 : ey) + ex * k;
            rho.images.push_back(CycMatrix{{zeta(N, e % N)}});
        }
        B.characters.rows.push_back(representation_character(rho, B.classes));
        B.characters.degrees.push_back(1);
        B.representations.push_back(std::move(rho));
    }
    for (int r = 1; r < n; ++r) {
        Representation rho;
        rho.degree = 2;
        const Cyclotomic sign(r % 2 == 0 ? 1L : -1L);
        for (int g = 0; g < 4 * n; ++g) {
            const long k = g < 2 * n ? g : g - 2 * n;
            const Cyclotomic a = zeta(N, mod(2L * r * k, N));
            const Cyclotomic b = zeta(N, mod(-2L * r * k, N));
            if (g < 2 * n) {
                rho.images.push_back(CycMatrix{{a, 0L}, {0L, b}});
            } else {
                // [[0,1],[s,0]] * diag(a, b)
                rho.images.push_back(CycMatrix{{0L, b}, {sign * a, 0L}});
            }
        }
        B.characters.rows.push_back(representation_character(rho, B.classes));
        B.characters.degrees.push_back(2);
        B.representations.push_back(std::move(rho));
    }
    return B;
}

}  // namespace

GroupTable dicyclic_table(int n) {
    if (n < 1) throw PreconditionError("dicyclic needs n >= 1");
    const int m = 2 * n;
    std::vector<std::vector<int>> mult(static_cast<size_t>(2 * m), std::vector<int>(static_cast<size_t>(2 * m)));
    for (int g = 0; g < 2 * m; ++g) {
        for (int h = 0; h < 2 * m; ++h) {
            const bool gy = g >= m;
            const bool hy = h >= m;
            const int k = g % m;
            const int l = h % m;
            int out;
            if (!gy && !hy) out = mod(k + l, m);
            else if (!gy && hy) out = m + mod(l - k, m);
            else if (gy && !hy) out = m + mod(k + l, m);
            else out = mod(n + l - k, m);
            mult[static_cast<size_t>(g)][static_cast<size_t>(h)] = out;
        }
    }
    return make_group_table(mult);
}

BuiltinGroupSpec BuiltinGroupSpec::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw PreconditionError("group spec must look like family:params, got '" + text + "'");
    const std::string family = text.substr(0, colon);
    std::vector<int> params;
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            params.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw PreconditionError("bad group parameter '" + item + "'");
        }
    }
    if (params.empty()) throw PreconditionError("group spec has no parameters");
    if (family == "cyclic" && params.size() == 1) return cyclic(params[0]);
    if (family == "abelian") return abelian(params);
    if (family == "dicyclic" && params.size() == 1) return dicyclic(params[0]);
    throw PreconditionError("unknown group family '" + family + "'");
}

std::string BuiltinGroupSpec::name() const {
    std::string out;
    switch (family) {
        case Family::Cyclic: out = "cyclic:"; break;
        case Family::Abelian: out = "abelian:"; break;
        case Family::Dicyclic: out = "dicyclic:"; break;
    }
    for (size_t i = 0; i < params.size(); ++i) out += (i ? "," : "") + std::to_string(params[i]);
    return out;
}

BuiltinGroup builtin_group(const BuiltinGroupSpec& spec) {
    BuiltinGroup B = spec.family == BuiltinGroupSpec::Family::Dicyclic ? dicyclic_group(spec) : abelian_group(spec);
    verify_character_table(B.characters, B.classes, B.table.order);
    return B;
}

}  // namespace assoc

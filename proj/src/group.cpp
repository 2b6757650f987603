#include "assoc/group.hpp"

#include "assoc/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace assoc {

namespace {

using std::size_t;

std::string triple(int a, int b, int c) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

}  // namespace

int GroupTable::element_order(int g) const {
    int k = 1;
    for (int x = g; x != 0; x = mul(x, g)) ++k;
    return k;
}

std::vector<std::vector<int>> GroupTable::rows() const {
    std::vector<std::vector<int>> out(static_cast<size_t>(order));
    for (int a = 0; a < order; ++a) {
        out[static_cast<size_t>(a)].assign(mult.begin() + static_cast<long>(a) * order,
                                           mult.begin() + static_cast<long>(a + 1) * order);
    }
    return out;
}

GroupTable make_group_table(const std::vector<std::vector<int>>& mult) {
    GroupTable G;
    G.order = static_cast<int>(mult.size());
    if (G.order == 0) throw BadGroupTable("empty table");
    for (const auto& row : mult) {
        if (static_cast<int>(row.size()) != G.order) throw BadGroupTable("table is not square");
        for (int v : row) {
            if (v < 0 || v >= G.order) throw BadGroupTable("entry " + std::to_string(v) + " out of range");
            G.mult.push_back(v);
        }
    }
    const int n = G.order;
    for (int a = 0; a < n; ++a) {
        if (G.mul(0, a) != a || G.mul(a, 0) != a) throw BadGroupTable("element 0 is not the identity at " + std::to_string(a));
    }
    G.inverse.assign(static_cast<size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
        std::vector<char> row_seen(static_cast<size_t>(n), 0);
        std::vector<char> col_seen(static_cast<size_t>(n), 0);
        for (int b = 0; b < n; ++b) {
            if (row_seen[static_cast<size_t>(G.mul(a, b))]++ || col_seen[static_cast<size_t>(G.mul(b, a))]++) {
                throw BadGroupTable("row or column " + std::to_string(a) + " repeats an element");
            }
            if (G.mul(a, b) == 0) G.inverse[static_cast<size_t>(a)] = b;
        }
        const int inv = G.inverse[static_cast<size_t>(a)];
        if (G.mul(inv, a) != 0) throw BadGroupTable("left and right inverses differ at " + std::to_string(a));
    }
    auto check = [&](int a, int b, int c) {
        if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c))) throw BadGroupTable("associativity fails at " + triple(a, b, c));
    };
    if (n <= kFullAssociativityCheck) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) check(a, b, c);
    } else {
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int t = 0; t < 200000; ++t) check(pick(rng), pick(rng), pick(rng));
    }
    return G;
}

ConjClassData conjugacy_classes(const GroupTable& G) {
    const int n = G.order;
    ConjClassData C;
    C.class_of.assign(static_cast<size_t>(n), -1);
    for (int g = 0; g < n; ++g) {
        if (C.class_of[static_cast<size_t>(g)] >= 0) continue;
        std::set<int> cls;
        for (int h = 0; h < n; ++h) cls.insert(G.mul(G.mul(G.inverse[static_cast<size_t>(h)], g), h));
        const int idx = static_cast<int>(C.classes.size());
        for (int x : cls) C.class_of[static_cast<size_t>(x)] = idx;
        C.classes.emplace_back(cls.begin(), cls.end());
    }
    // Scanning g upward already yields classes ordered by minimum element.
    for (const auto& cls : C.classes) {
        C.class_inverse_map.push_back(C.class_of[static_cast<size_t>(G.inverse[static_cast<size_t>(cls.front())])]);
    }
    return C;
}

SchemeData scheme_from_classes(const GroupTable& G, const ConjClassData& classes) {
    std::vector<std::vector<int>> rel(static_cast<size_t>(G.order), std::vector<int>(static_cast<size_t>(G.order)));
    for (int g = 0; g < G.order; ++g) {
        for (int h = 0; h < G.order; ++h) {
            rel[static_cast<size_t>(g)][static_cast<size_t>(h)] =
                classes.class_of[static_cast<size_t>(G.mul(G.inverse[static_cast<size_t>(g)], h))];
        }
    }
    return verify_scheme(rel);
}

std::pair<SchemeData, ConjClassData> conj_class_scheme(const GroupTable& G) {
    ConjClassData C = conjugacy_classes(G);
    SchemeData S = scheme_from_classes(G, C);
    return {std::move(S), std::move(C)};
}

void verify_character_table(const CharacterTable& T, const ConjClassData& classes, int order) {
    const int d1 = classes.count();
    if (static_cast<int>(T.rows.size()) != d1 || static_cast<int>(T.degrees.size()) != d1) {
        throw BadCharacterTable("expected " + std::to_string(d1) + " characters");
    }
    for (const auto& row : T.rows) {
        if (static_cast<int>(row.size()) != d1) throw BadCharacterTable("row length differs from class count");
    }
    for (int i = 0; i < d1; ++i) {
        if (!(T.rows[0][static_cast<size_t>(i)] == Cyclotomic(1))) throw BadCharacterTable("first row is not trivial");
    }
    for (int j = 0; j < d1; ++j) {
        if (T.degrees[static_cast<size_t>(j)] <= 0 || !(T.rows[static_cast<size_t>(j)][0] == Cyclotomic(T.degrees[static_cast<size_t>(j)]))) {
            throw BadCharacterTable("degree of character " + std::to_string(j) + " does not match its value at 1");
        }
    }
    for (int j = 0; j < d1; ++j) {
        for (int k = j; k < d1; ++k) {
            Cyclotomic s;
            for (int i = 0; i < d1; ++i) {
                s += (T.rows[static_cast<size_t>(j)][static_cast<size_t>(i)] * T.rows[static_cast<size_t>(k)][static_cast<size_t>(i)].conj())
                         .scaled(Rational(classes.size(i)));
            }
            if (!(s == Cyclotomic(j == k ? order : 0))) {
                throw BadCharacterTable("row orthogonality fails for characters " + std::to_string(j) + ", " + std::to_string(k));
            }
        }
    }
    for (int a = 0; a < d1; ++a) {
        for (int b = a; b < d1; ++b) {
            Cyclotomic s;
            for (int j = 0; j < d1; ++j) {
                s += T.rows[static_cast<size_t>(j)][static_cast<size_t>(a)] * T.rows[static_cast<size_t>(j)][static_cast<size_t>(b)].conj();
            }
            const Rational expect = a == b ? ratio(order, classes.size(a)) : Rational(0);
            if (!(s == Cyclotomic(expect))) {
                throw BadCharacterTable("column orthogonality fails for classes " + std::to_string(a) + ", " + std::to_string(b));
            }
        }
    }
}

EigenData eigendata_from_characters(const GroupTable& G, const ConjClassData& classes, const CharacterTable& T) {
    verify_character_table(T, classes, G.order);
    const int d1 = classes.count();
    std::vector<Cyclotomic> q;
    for (int i = 0; i < d1; ++i) {
        for (int j = 0; j < d1; ++j) {
            q.push_back(T.rows[static_cast<size_t>(j)][static_cast<size_t>(i)].conj().scaled(Rational(T.degrees[static_cast<size_t>(j)])));
        }
    }
    EigenData E = attach_eigendata(scheme_from_classes(G, classes), CycMatrix(d1, d1, std::move(q)));
    for (int j = 0; j < d1; ++j) {
        const long f = T.degrees[static_cast<size_t>(j)];
        if (E.multiplicities[static_cast<size_t>(j)] != f * f) {
            throw BadEigenbasis("multiplicity of character " + std::to_string(j) + " is not its degree squared");
        }
    }
    return E;
}

std::vector<long> tensor_multiplicities(const CharacterTable& T, const ConjClassData& classes, int order) {
    const int d1 = classes.count();
    std::vector<long> r;
    r.reserve(static_cast<size_t>(d1) * static_cast<size_t>(d1) * static_cast<size_t>(d1));
    const Rational inv(1, order);
    for (int i = 0; i < d1; ++i) {
        for (int j = 0; j < d1; ++j) {
            for (int k = 0; k < d1; ++k) {
                Cyclotomic s;
                for (int a = 0; a < d1; ++a) {
                    s += (T.rows[static_cast<size_t>(i)][static_cast<size_t>(a)] * T.rows[static_cast<size_t>(j)][static_cast<size_t>(a)] *
                          T.rows[static_cast<size_t>(k)][static_cast<size_t>(a)].conj())
                             .scaled(Rational(classes.size(a)));
                }
                s = s.scaled(inv);
                if (!s.is_rational() || !is_integer(s.to_rational()) || s.to_rational() < 0) {
                    throw BadCharacterTable("tensor multiplicity r_" + std::to_string(i) + std::to_string(j) + "^" +
                                            std::to_string(k) + " is not a nonnegative integer");
                }
                r.push_back(s.to_rational().get_num().get_si());
            }
        }
    }
    return r;
}

void verify_representation(const GroupTable& G, const Representation& rho) {
    if (static_cast<int>(rho.images.size()) != G.order) throw ValidationError("representation needs one image per element");
    for (const auto& M : rho.images) {
        if (M.rows() != rho.degree || M.cols() != rho.degree) throw ValidationError("image has the wrong degree");
    }
    for (int a = 0; a < G.order; ++a) {
        for (int b = 0; b < G.order; ++b) {
            if (!(rho.images[static_cast<size_t>(a)] * rho.images[static_cast<size_t>(b)] == rho.images[static_cast<size_t>(G.mul(a, b))])) {
                throw ValidationError("rho(g) rho(h) != rho(gh) at g=" + std::to_string(a) + ", h=" + std::to_string(b));
            }
        }
    }
}

std::vector<Cyclotomic> representation_character(const Representation& rho, const ConjClassData& classes) {
    std::vector<Cyclotomic> chi;
    for (const auto& cls : classes.classes) {
        const CycMatrix& M = rho.images[static_cast<size_t>(cls.front())];
        Cyclotomic t;
        for (int r = 0; r < rho.degree; ++r) t += M(r, r);
        chi.push_back(t);
    }
    return chi;
}

CycMatrix representation_eigenvectors(const GroupTable& G, const Representation& rho, const SchemeData& scheme,
                                      const ConjClassData& classes) {
    verify_representation(G, rho);
    if (scheme.size != G.order || scheme.classes != classes.count()) throw PreconditionError("scheme does not match the group");
    const int f = rho.degree;
    const int cols = f * f;
    std::vector<Cyclotomic> u;
    u.reserve(static_cast<size_t>(G.order) * static_cast<size_t>(cols));
    for (int g = 0; g < G.order; ++g) {
        const CycMatrix& M = rho.images[static_cast<size_t>(g)];
        for (int r = 0; r < f; ++r)
            for (int c = 0; c < f; ++c) u.push_back(M(r, c));
    }
    CycMatrix U(G.order, cols, std::move(u));
    const auto chi = representation_character(rho, classes);
    for (int i = 0; i < classes.count(); ++i) {
        const Cyclotomic theta = chi[static_cast<size_t>(i)].scaled(ratio(classes.size(i), f));
        for (int g = 0; g < G.order; ++g) {
            for (int c = 0; c < cols; ++c) {
                Cyclotomic s;
                for (int h = 0; h < G.order; ++h) {
                    if (scheme.rel(g, h) == i) s += U(h, c);
                }
                if (!(s == theta * U(g, c))) throw NotEigen("A_" + std::to_string(i) + " U != theta_" + std::to_string(i) + " U");
            }
        }
    }
    return U;
}

std::pair<Partition, FusionScheme> rational_class_fusion(const GroupTable& G, const ConjClassData& classes, const EigenData& E) {
    const int d1 = classes.count();
    std::vector<int> parent(static_cast<size_t>(d1));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
        return x;
    };
    for (int i = 0; i < d1; ++i) {
        const int g = classes.classes[static_cast<size_t>(i)].front();
        const int ord = G.element_order(g);
        int power = g;
        for (int m = 1; m <= ord; ++m, power = G.mul(power, g)) {
            if (std::gcd(m, ord) != 1) continue;
            const int a = find(i);
            const int b = find(classes.class_of[static_cast<size_t>(power)]);
            if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
        }
    }
    Partition rational(static_cast<size_t>(d1));
    for (int i = 0; i < d1; ++i) rational[static_cast<size_t>(find(i))].push_back(i);
    rational.erase(std::remove_if(rational.begin(), rational.end(), [](const auto& c) { return c.empty(); }), rational.end());
    rational = canonical_partition(std::move(rational));

    FusionScheme F = fuse_by_relation_partition(E.scheme, E, rational);
    const FusionScheme galois = galois_fusion(E.scheme, E, SubfieldSpec::rationals(E.Q.conductor()));
    if (galois.relation_partition != F.relation_partition || !(galois.Q_F == F.Q_F)) {
        throw InternalAssertion("rational class fusion differs from the Galois fusion over Q");
    }
    return {std::move(rational), std::move(F)};
}

}  // namespace assoc

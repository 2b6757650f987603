#include "assoc/scheme.hpp"

#include "assoc/errors.hpp"

#include <algorithm>
#include <string>

namespace assoc {

bool SchemeData::is_symmetric() const {
    for (int i = 0; i < classes; ++i) {
        if (transpose_map[static_cast<std::size_t>(i)] != i) return false;
    }
    return true;
}

std::vector<std::vector<int>> SchemeData::relation_rows() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(size));
    for (int x = 0; x < size; ++x) {
        out[static_cast<std::size_t>(x)].assign(relation.begin() + static_cast<std::ptrdiff_t>(x) * size,
                                                relation.begin() + static_cast<std::ptrdiff_t>(x + 1) * size);
    }
    return out;
}

SchemeData verify_scheme(const std::vector<std::vector<int>>& relation) {
    SchemeData s;
    s.size = static_cast<int>(relation.size());
    if (s.size == 0) throw NotAScheme("shape", {-1, -1, -1}, "empty vertex set");
    int max_class = 0;
    for (int x = 0; x < s.size; ++x) {
        const auto& row = relation[static_cast<std::size_t>(x)];
        if (static_cast<int>(row.size()) != s.size) {
            throw NotAScheme("shape", {x, -1, -1}, "relation matrix is not square");
        }
        for (int y = 0; y < s.size; ++y) {
            const int c = row[static_cast<std::size_t>(y)];
            if (c < 0) throw NotAScheme("shape", {x, y, -1}, "negative class index");
            max_class = std::max(max_class, c);
        }
    }
    s.classes = max_class + 1;
    const int n = s.size;
    const int d1 = s.classes;
    s.relation.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (const auto& row : relation) s.relation.insert(s.relation.end(), row.begin(), row.end());

    std::vector<long> occurrences(static_cast<std::size_t>(d1), 0);
    for (int c : s.relation) ++occurrences[static_cast<std::size_t>(c)];
    for (int c = 0; c < d1; ++c) {
        if (occurrences[static_cast<std::size_t>(c)] == 0) {
            throw NotAScheme("shape", {c, -1, -1}, "class " + std::to_string(c) + " never occurs");
        }
    }

    // (i) R_0 is the identity relation
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if ((x == y) != (s.rel(x, y) == 0)) {
                throw NotAScheme("i", {x, y, -1}, "R_0 must be exactly the diagonal");
            }
        }
    }

    // (ii) the transpose of every class is a class
    s.transpose_map.assign(static_cast<std::size_t>(d1), -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            const int i = s.rel(x, y);
            const int t = s.rel(y, x);
            int& slot = s.transpose_map[static_cast<std::size_t>(i)];
            if (slot < 0) {
                slot = t;
            } else if (slot != t) {
                throw NotAScheme("ii", {x, y, -1},
                                 "transpose of class " + std::to_string(i) + " meets classes " +
                                     std::to_string(slot) + " and " + std::to_string(t));
            }
        }
    }

    // (iii) p_ij^k = |{c : (a,c) in R_i, (c,b) in R_j}| constant over (a,b) in R_k
    s.intersection = IntersectionTensor(d1);
    std::vector<char> seen(static_cast<std::size_t>(d1), 0);
    std::vector<long> counts(static_cast<std::size_t>(d1) * static_cast<std::size_t>(d1));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const int k = s.rel(a, b);
            std::fill(counts.begin(), counts.end(), 0);
            for (int c = 0; c < n; ++c) {
                ++counts[static_cast<std::size_t>(s.rel(a, c)) * static_cast<std::size_t>(d1) +
                         static_cast<std::size_t>(s.rel(c, b))];
            }
            if (!seen[static_cast<std::size_t>(k)]) {
                seen[static_cast<std::size_t>(k)] = 1;
                for (int i = 0; i < d1; ++i) {
                    for (int j = 0; j < d1; ++j) {
                        s.intersection.at(i, j, k) =
                            counts[static_cast<std::size_t>(i) * static_cast<std::size_t>(d1) + static_cast<std::size_t>(j)];
                    }
                }
                continue;
            }
            for (int i = 0; i < d1; ++i) {
                for (int j = 0; j < d1; ++j) {
                    if (s.intersection(i, j, k) !=
                        counts[static_cast<std::size_t>(i) * static_cast<std::size_t>(d1) + static_cast<std::size_t>(j)]) {
                        throw NotAScheme("iii", {a, b, k},
                                         "p_" + std::to_string(i) + std::to_string(j) + "^" + std::to_string(k) +
                                             " is not constant over R_" + std::to_string(k));
                    }
                }
            }
        }
    }

    // (iv) commutativity
    for (int i = 0; i < d1; ++i) {
        for (int j = 0; j < d1; ++j) {
            for (int k = 0; k < d1; ++k) {
                if (s.intersection(i, j, k) != s.intersection(j, i, k)) {
                    throw NotAScheme("iv", {i, j, k}, "p_ij^k != p_ji^k");
                }
            }
        }
    }

    s.valencies.resize(static_cast<std::size_t>(d1));
    for (int i = 0; i < d1; ++i) s.valencies[static_cast<std::size_t>(i)] = s.intersection(i, s.transpose_map[static_cast<std::size_t>(i)], 0);
    return s;
}

const IntersectionTensor& intersection_numbers(const SchemeData& scheme) { return scheme.intersection; }

SchemeData cycle_scheme(int n) {
    if (n < 2) throw PreconditionError("cycle scheme needs n >= 2");
    std::vector<std::vector<int>> rel(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            const int diff = ((y - x) % n + n) % n;
            rel[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = std::min(diff, n - diff);
        }
    }
    return verify_scheme(rel);
}

std::vector<std::vector<int>> merged_relation(const SchemeData& scheme, const std::vector<int>& cell_of) {
    auto rows = scheme.relation_rows();
    for (auto& row : rows) {
        for (int& c : row) c = cell_of[static_cast<std::size_t>(c)];
    }
    return rows;
}

}  // namespace assoc

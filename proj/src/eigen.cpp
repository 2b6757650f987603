#include "assoc/eigen.hpp"

#include "assoc/errors.hpp"

#include <numeric>
#include <string>

namespace assoc {

namespace {

using std::size_t;

std::string ij(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

std::vector<Cyclotomic> EigenData::idempotent_coordinates(int j) const {
    const Rational inv_size(1, scheme.size);
    std::vector<Cyclotomic> out;
    out.reserve(static_cast<size_t>(classes()));
    for (int i = 0; i < classes(); ++i) out.push_back(Q(i, j).scaled(inv_size));
    return out;
}

CycMatrix adjacency_matrix(const SchemeData& scheme, int i) {
    CycMatrix a(scheme.size, scheme.size);
    for (int x = 0; x < scheme.size; ++x) {
        for (int y = 0; y < scheme.size; ++y) {
            if (scheme.rel(x, y) == i) a.set(x, y, Cyclotomic(1));
        }
    }
    return a;
}

CycMatrix expand_coordinates(const SchemeData& scheme, const std::vector<Cyclotomic>& coords) {
    std::vector<Cyclotomic> entries;
    entries.reserve(static_cast<size_t>(scheme.size) * static_cast<size_t>(scheme.size));
    for (int c : scheme.relation) entries.push_back(coords[static_cast<size_t>(c)]);
    return CycMatrix(scheme.size, scheme.size, std::move(entries));
}

EigenData attach_eigendata(const SchemeData& scheme, const CycMatrix& Q) {
    const int d1 = scheme.classes;
    if (Q.rows() != d1 || Q.cols() != d1) {
        throw BadEigenbasis("shape: Q must be " + std::to_string(d1) + "x" + std::to_string(d1));
    }
    for (int i = 0; i < d1; ++i) {
        if (!(Q(i, 0) == Cyclotomic(1))) throw BadEigenbasis("E0: column 0 of Q must be all ones, row " + std::to_string(i));
    }

    EigenData E;
    E.scheme = scheme;
    E.Q = Q;
    E.splitting_conductor = Q.conductor();
    const Cyclotomic size(static_cast<long>(scheme.size));
    try {
        E.P = size * mat_inverse(Q);
    } catch (const Singular&) {
        throw BadEigenbasis("invertible: Q is singular");
    }
    if (!(E.P * E.Q == size * CycMatrix::identity(d1)) || !(E.Q * E.P == size * CycMatrix::identity(d1))) {
        throw BadEigenbasis("first_orthogonality: PQ != |X| I");
    }

    for (int j = 0; j < d1; ++j) {
        const Cyclotomic& m = Q(0, j);
        if (!m.is_rational() || !is_integer(m.to_rational()) || sgn(m.to_rational()) <= 0) {
            throw BadEigenbasis("multiplicity: m_" + std::to_string(j) + " = " + m.to_string() +
                                " is not a positive integer");
        }
        E.multiplicities.push_back(m.to_rational().get_num().get_si());
    }
    if (std::accumulate(E.multiplicities.begin(), E.multiplicities.end(), 0L) != scheme.size) {
        throw BadEigenbasis("multiplicity: multiplicities do not sum to |X|");
    }

    // sum_j E_j = I  <=>  sum_j Q_ij = |X| delta_i0
    for (int i = 0; i < d1; ++i) {
        Cyclotomic s;
        for (int j = 0; j < d1; ++j) s += Q(i, j);
        if (!(s == Cyclotomic(i == 0 ? scheme.size : 0))) throw BadEigenbasis("sum_identity: row " + std::to_string(i));
    }

    // E_j E_k = delta_jk E_j, on adjacency coordinates:
    // sum_l (sum_i Q_ij p_il^m) Q_lk = delta_jk |X| Q_mj
    for (int j = 0; j < d1; ++j) {
        std::vector<Cyclotomic> M(static_cast<size_t>(d1) * static_cast<size_t>(d1));
        for (int i = 0; i < d1; ++i) {
            const Cyclotomic& qij = Q(i, j);
            if (qij.is_zero()) continue;
            for (int l = 0; l < d1; ++l) {
                for (int m = 0; m < d1; ++m) {
                    const long p = scheme.p(i, l, m);
                    if (p != 0) M[static_cast<size_t>(l) * static_cast<size_t>(d1) + static_cast<size_t>(m)] += qij.scaled(Rational(p));
                }
            }
        }
        for (int k = 0; k < d1; ++k) {
            for (int m = 0; m < d1; ++m) {
                Cyclotomic c;
                for (int l = 0; l < d1; ++l) {
                    const Cyclotomic& mlm = M[static_cast<size_t>(l) * static_cast<size_t>(d1) + static_cast<size_t>(m)];
                    if (!mlm.is_zero()) c += mlm * Q(l, k);
                }
                const Cyclotomic expected = j == k ? Q(m, j).scaled(Rational(scheme.size)) : Cyclotomic(0);
                if (!(c == expected)) {
                    throw BadEigenbasis("idempotent_orthogonality: E_" + std::to_string(j) + " E_" + std::to_string(k) +
                                        " fails at coordinate " + std::to_string(m));
                }
            }
        }
    }

    // Hermitian: conj(Q_{i' j}) = Q_ij; dual map: Q_{i j^} = conj(Q_ij)
    E.dual_map.assign(static_cast<size_t>(d1), -1);
    for (int j = 0; j < d1; ++j) {
        for (int i = 0; i < d1; ++i) {
            if (!(Q(scheme.transpose_map[static_cast<size_t>(i)], j).conj() == Q(i, j))) {
                throw BadEigenbasis("hermitian: E_" + std::to_string(j) + " at class " + std::to_string(i));
            }
        }
        for (int h = 0; h < d1 && E.dual_map[static_cast<size_t>(j)] < 0; ++h) {
            bool match = true;
            for (int i = 0; i < d1 && match; ++i) match = Q(i, h) == Q(i, j).conj();
            if (match) E.dual_map[static_cast<size_t>(j)] = h;
        }
        if (E.dual_map[static_cast<size_t>(j)] < 0) {
            throw BadEigenbasis("dual_map: conj(E_" + std::to_string(j) + ") is not a primitive idempotent");
        }
    }

    // second orthogonality: m_j P_ji / v_i = conj(Q_ij)
    for (int j = 0; j < d1; ++j) {
        for (int i = 0; i < d1; ++i) {
            const Rational scale = ratio(E.multiplicities[static_cast<size_t>(j)], scheme.valencies[static_cast<size_t>(i)]);
            if (!(E.P(j, i).scaled(scale) == Q(i, j).conj())) {
                throw BadEigenbasis("second_orthogonality: entry " + ij(j, i));
            }
        }
    }

    E.idempotents.reserve(static_cast<size_t>(d1));
    for (int j = 0; j < d1; ++j) E.idempotents.push_back(expand_coordinates(scheme, E.idempotent_coordinates(j)));
    return E;
}

long splitting_field_conductor(const EigenData& E) {
    long m = 1;
    for (int i = 0; i < E.Q.rows(); ++i) {
        for (int j = 0; j < E.Q.cols(); ++j) m = std::lcm(m, minimal_conductor(E.Q(i, j)));
    }
    return m;
}

}  // namespace assoc

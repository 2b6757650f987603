#include "assoc/krein.hpp"

#include "assoc/errors.hpp"
#include "assoc/real_sign.hpp"

#include <numeric>

namespace assoc {

KreinData krein_parameters(const EigenData& E) {
    const int d1 = E.classes();
    KreinData K;
    K.classes = d1;
    K.q.resize(static_cast<std::size_t>(d1) * static_cast<std::size_t>(d1) * static_cast<std::size_t>(d1));
    const Rational inv_size(1, E.scheme.size);
    // q_ij^k = (1/|X|) sum_h Q_hi Q_hj P_kh
    for (int i = 0; i < d1; ++i) {
        for (int j = i; j < d1; ++j) {
            std::vector<Cyclotomic> prod(static_cast<std::size_t>(d1));
            for (int h = 0; h < d1; ++h) prod[static_cast<std::size_t>(h)] = E.Q(h, i) * E.Q(h, j);
            for (int k = 0; k < d1; ++k) {
                Cyclotomic s;
                for (int h = 0; h < d1; ++h) {
                    if (!prod[static_cast<std::size_t>(h)].is_zero()) s += prod[static_cast<std::size_t>(h)] * E.P(k, h);
                }
                s = s.scaled(inv_size);
                if (!s.is_real()) throw KreinViolation(i, j, k, "parameter " + s.to_string() + " is not real");
                if (real_sign(s) < 0) throw KreinViolation(i, j, k, "parameter " + s.to_string() + " is negative");
                const auto at = [&](int a, int b) {
                    return (static_cast<std::size_t>(a) * static_cast<std::size_t>(d1) + static_cast<std::size_t>(b)) *
                               static_cast<std::size_t>(d1) +
                           static_cast<std::size_t>(k);
                };
                K.q[at(i, j)] = s;
                K.q[at(j, i)] = s;
            }
        }
    }
    for (const auto& v : K.q) K.krein_conductor = std::lcm(K.krein_conductor, minimal_conductor(v));
    return K;
}

}  // namespace assoc

#pragma once

#include "assoc/cyclotomic.hpp"

namespace assoc {

/// Sign (-1, 0, +1) of a real cyclotomic number under zeta_n = exp(2 pi i / n).
/// Zero is decided exactly; otherwise the real embedding is evaluated with
/// interval bounds, starting at 64 bits and doubling the precision until the
/// interval excludes zero. Throws PreconditionError if x is not real.
int real_sign(const Cyclotomic& x);

/// Low-precision value for display only; never used for decisions.
double approximate_real(const Cyclotomic& x);

}  // namespace assoc

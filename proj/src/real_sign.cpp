#include "assoc/real_sign.hpp"

#include "assoc/errors.hpp"

#include <mpfr.h>

namespace assoc {

namespace {

class MpfrValue {
public:
    explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~MpfrValue() { mpfr_clear(v_); }
    MpfrValue(const MpfrValue&) = delete;
    MpfrValue& operator=(const MpfrValue&) = delete;
    mpfr_ptr get() { return v_; }

private:
    mpfr_t v_;
};

// Evaluates sum c_e cos(2 pi e / n) at the given precision and returns the
// sign if |value| exceeds a conservative bound on the accumulated error,
// else 0 (undecided).
int try_sign(const Cyclotomic& x, mpfr_prec_t prec) {
    const long n = x.conductor();
    MpfrValue sum(prec), term(prec), angle(prec), bound(prec), mag(prec);
    mpfr_set_zero(sum.get(), 1);
    mpfr_set_zero(mag.get(), 1);
    long count = 0;
    for (const auto& [e, c] : x.terms()) {
        mpfr_const_pi(angle.get(), MPFR_RNDN);
        mpfr_mul_si(angle.get(), angle.get(), 2 * e, MPFR_RNDN);
        mpfr_div_si(angle.get(), angle.get(), n, MPFR_RNDN);
        mpfr_cos(term.get(), angle.get(), MPFR_RNDN);
        mpfr_mul_q(term.get(), term.get(), c.get_mpq_t(), MPFR_RNDN);
        mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
        MpfrValue absc(prec);
        mpfr_set_q(absc.get(), c.get_mpq_t(), MPFR_RNDU);
        mpfr_abs(absc.get(), absc.get(), MPFR_RNDU);
        mpfr_add(mag.get(), mag.get(), absc.get(), MPFR_RNDU);
        ++count;
    }
    // error <= (sum |c| + 1) * (count + 4) * 2 * 2^(exponent slack - prec)
    mpfr_add_ui(bound.get(), mag.get(), 1, MPFR_RNDU);
    mpfr_mul_si(bound.get(), bound.get(), 2 * (count + 4) * 64, MPFR_RNDU);
    mpfr_mul_2si(bound.get(), bound.get(), -static_cast<long>(prec), MPFR_RNDU);
    MpfrValue absval(prec);
    mpfr_abs(absval.get(), sum.get(), MPFR_RNDN);
    if (mpfr_cmp(absval.get(), bound.get()) <= 0) return 0;
    return mpfr_sgn(sum.get()) > 0 ? 1 : -1;
}

}  // namespace

int real_sign(const Cyclotomic& x) {
    if (x.is_zero()) return 0;
    if (x.is_rational()) return sgn(x.coeffs()[0]);
    if (!x.is_real()) throw PreconditionError("sign requested for non-real value " + x.to_string());
    for (mpfr_prec_t prec = 64; prec <= (mpfr_prec_t{1} << 20); prec *= 2) {
        if (int s = try_sign(x, prec); s != 0) return s;
    }
    throw InternalAssertion("sign of nonzero real " + x.to_string() + " undecided at 2^20 bits");
}

double approximate_real(const Cyclotomic& x) {
    MpfrValue sum(128), term(128), angle(128);
    mpfr_set_zero(sum.get(), 1);
    for (const auto& [e, c] : x.terms()) {
        mpfr_const_pi(angle.get(), MPFR_RNDN);
        mpfr_mul_si(angle.get(), angle.get(), 2 * e, MPFR_RNDN);
        mpfr_div_si(angle.get(), angle.get(), x.conductor(), MPFR_RNDN);
        mpfr_cos(term.get(), angle.get(), MPFR_RNDN);
        mpfr_mul_q(term.get(), term.get(), c.get_mpq_t(), MPFR_RNDN);
        mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    }
    return mpfr_get_d(sum.get(), MPFR_RNDN);
}

}  // namespace assoc

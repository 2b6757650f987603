#pragma once

#include "assoc/rational.hpp"

#include <string>
#include <vector>

namespace assoc {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class LPStatus { Optimal, Infeasible, Unbounded };

std::string to_string(LPStatus s);

struct LPConstraint {
    std::vector<Rational> coeffs;
    Relation relation = Relation::LessEqual;
    Rational rhs;
};

/// All variables are bounded below by 0.
struct LPProblem {
    std::vector<Rational> objective;
    bool maximize = false;
    std::vector<LPConstraint> constraints;

    int variables() const noexcept { return static_cast<int>(objective.size()); }
};

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    Rational value;
    std::vector<Rational> solution;
};

/// Two-phase dense tableau simplex over the rationals with Bland's rule.
/// Throws DimensionMismatch on ragged constraints.
LPResult simplex_solve(const LPProblem& p);

/// True iff x satisfies every constraint and bound exactly.
bool lp_feasible(const LPProblem& p, const std::vector<Rational>& x);

}  // namespace assoc

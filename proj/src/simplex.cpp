#include "assoc/simplex.hpp"

#include "assoc/errors.hpp"

#include <optional>

namespace assoc {

namespace {

using std::size_t;
using Row = std::vector<Rational>;

struct Tableau {
    std::vector<Row> rows;  // last entry of each row is the rhs
    std::vector<int> basis;
    int cols = 0;           // structural columns, excluding rhs

    const Rational& rhs(size_t r) const { return rows[r].back(); }

    void pivot(size_t pr, int pc) {
        Row& prow = rows[pr];
        const Rational inv = 1 / prow[static_cast<size_t>(pc)];
        for (auto& v : prow) v *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == pr || rows[r][static_cast<size_t>(pc)] == 0) continue;
            const Rational f = rows[r][static_cast<size_t>(pc)];
            for (size_t c = 0; c < prow.size(); ++c) {
                if (prow[c] != 0) rows[r][c] -= f * prow[c];
            }
        }
        basis[pr] = pc;
    }

    /// Minimises cost over columns where allowed[c]; false means unbounded.
    bool minimise(const Row& cost, const std::vector<char>& allowed) {
        for (;;) {
            int enter = -1;
            for (int c = 0; c < cols && enter < 0; ++c) {
                if (!allowed[static_cast<size_t>(c)]) continue;
                Rational reduced = cost[static_cast<size_t>(c)];
                for (size_t r = 0; r < rows.size(); ++r) {
                    const Rational& a = rows[r][static_cast<size_t>(c)];
                    if (a != 0) reduced -= cost[static_cast<size_t>(basis[r])] * a;
                }
                if (reduced < 0) enter = c;
            }
            if (enter < 0) return true;
            std::optional<size_t> leave;
            Rational best;
            for (size_t r = 0; r < rows.size(); ++r) {
                const Rational& a = rows[r][static_cast<size_t>(enter)];
                if (a <= 0) continue;
                const Rational ratio = rhs(r) / a;
                if (!leave || ratio < best || (ratio == best && basis[r] < basis[*leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (!leave) return false;
            pivot(*leave, enter);
        }
    }

    Rational value(const Row& cost) const {
        Rational v = 0;
        for (size_t r = 0; r < rows.size(); ++r) v += cost[static_cast<size_t>(basis[r])] * rhs(r);
        return v;
    }
};

}  // namespace

std::string to_string(LPStatus s) {
    switch (s) {
        case LPStatus::Optimal: return "optimal";
        case LPStatus::Infeasible: return "infeasible";
        case LPStatus::Unbounded: return "unbounded";
    }
    return "unknown";
}

LPResult simplex_solve(const LPProblem& p) {
    const int n = p.variables();
    for (const auto& c : p.constraints) {
        if (static_cast<int>(c.coeffs.size()) != n) throw DimensionMismatch("constraint length differs from objective length");
    }
    int slacks = 0;
    int artificials = 0;
    std::vector<LPConstraint> cons = p.constraints;
    for (auto& c : cons) {
        if (c.rhs < 0) {
            for (auto& v : c.coeffs) v = -v;
            c.rhs = -c.rhs;
            if (c.relation == Relation::LessEqual) c.relation = Relation::GreaterEqual;
            else if (c.relation == Relation::GreaterEqual) c.relation = Relation::LessEqual;
        }
        if (c.relation != Relation::Equal) ++slacks;
        if (c.relation != Relation::LessEqual) ++artificials;
    }
    Tableau t;
    t.cols = n + slacks + artificials;
    int next_slack = n;
    int next_art = n + slacks;
    for (const auto& c : cons) {
        Row row(static_cast<size_t>(t.cols + 1), Rational(0));
        for (int j = 0; j < n; ++j) row[static_cast<size_t>(j)] = c.coeffs[static_cast<size_t>(j)];
        row.back() = c.rhs;
        int basic = -1;
        if (c.relation == Relation::LessEqual) {
            row[static_cast<size_t>(next_slack)] = 1;
            basic = next_slack++;
        } else {
            if (c.relation == Relation::GreaterEqual) row[static_cast<size_t>(next_slack++)] = -1;
            row[static_cast<size_t>(next_art)] = 1;
            basic = next_art++;
        }
        t.rows.push_back(std::move(row));
        t.basis.push_back(basic);
    }

    std::vector<char> allowed(static_cast<size_t>(t.cols), 1);
    if (artificials > 0) {
        Row phase1(static_cast<size_t>(t.cols), Rational(0));
        for (int c = n + slacks; c < t.cols; ++c) phase1[static_cast<size_t>(c)] = 1;
        t.minimise(phase1, allowed);
        if (t.value(phase1) != 0) return {LPStatus::Infeasible, 0, {}};
        for (size_t r = 0; r < t.rows.size();) {
            if (t.basis[r] < n + slacks) {
                ++r;
                continue;
            }
            int col = -1;
            for (int c = 0; c < n + slacks && col < 0; ++c) {
                if (t.rows[r][static_cast<size_t>(c)] != 0) col = c;
            }
            if (col >= 0) {
                t.pivot(r, col);
                ++r;
            } else {
                t.rows.erase(t.rows.begin() + static_cast<long>(r));
                t.basis.erase(t.basis.begin() + static_cast<long>(r));
            }
        }
        for (int c = n + slacks; c < t.cols; ++c) allowed[static_cast<size_t>(c)] = 0;
    }

    Row cost(static_cast<size_t>(t.cols), Rational(0));
    for (int j = 0; j < n; ++j) cost[static_cast<size_t>(j)] = p.maximize ? -p.objective[static_cast<size_t>(j)] : p.objective[static_cast<size_t>(j)];
    if (!t.minimise(cost, allowed)) return {LPStatus::Unbounded, 0, {}};

    LPResult res;
    res.status = LPStatus::Optimal;
    res.solution.assign(static_cast<size_t>(n), Rational(0));
    for (size_t r = 0; r < t.rows.size(); ++r) {
        if (t.basis[r] < n) res.solution[static_cast<size_t>(t.basis[r])] = t.rhs(r);
    }
    res.value = 0;
    for (int j = 0; j < n; ++j) res.value += p.objective[static_cast<size_t>(j)] * res.solution[static_cast<size_t>(j)];
    if (!lp_feasible(p, res.solution)) throw InternalAssertion("simplex returned an infeasible point");
    return res;
}

bool lp_feasible(const LPProblem& p, const std::vector<Rational>& x) {
    if (static_cast<int>(x.size()) != p.variables()) return false;
    for (const auto& v : x) {
        if (v < 0) return false;
    }
    for (const auto& c : p.constraints) {
        Rational s = 0;
        for (size_t j = 0; j < x.size(); ++j) s += c.coeffs[j] * x[j];
        switch (c.relation) {
            case Relation::LessEqual: if (s > c.rhs) return false; break;
            case Relation::Equal: if (s != c.rhs) return false; break;
            case Relation::GreaterEqual: if (s < c.rhs) return false; break;
        }
    }
    return true;
}

}  // namespace assoc

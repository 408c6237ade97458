#pragma once

#include <optional>

#include "bdcoh/tower.hpp"

namespace bdcoh {

/// Deterministic search budget; time budgets are mapped to step caps so that
/// identical budgets give identical results.
struct SolveBudget {
    long max_height = 64;
    long long max_steps = 2'000'000;
    static SolveBudget from_time_seconds(double s) {
        SolveBudget b;
        b.max_steps = static_cast<long long>(s * 200000.0);
        if (b.max_steps < 1000) b.max_steps = 1000;
        return b;
    }
};

enum class SolveStatus { found, no_solution, undecided };

struct NormEqResult {
    SolveStatus status = SolveStatus::undecided;
    TowerElem u, v;            // witness with N(u) + c N(v) = e
    std::string obstruction;   // set for no_solution
};

/// Decides e in N(Q(sqrt(d))*) by Hilbert symbols; independent of any search.
bool norm_decision(const Rational& e, const Rational& d);

/// Witness x, y with x^2 - d y^2 = e, if the decision is yes and the search
/// finds one within budget.
std::optional<std::pair<Rational, Rational>> represent_as_norm(const Rational& e,
                                                               const Rational& d,
                                                               const SolveBudget& budget);

/// Exact witness for N(u) + c N(v) = e over K = Q(sqrt(d)), or an honest
/// no-solution (real obstruction) / undecided (budget exhausted).
NormEqResult solve_norm_equation(const Rational& c, const Rational& e, const Rational& d,
                                 const SolveBudget& budget = {});

}  // namespace bdcoh

#pragma once

#include "bdcoh/json_io.hpp"
#include "bdcoh/lie_checks.hpp"

namespace bdcoh {

/// Deterministic report for one batch job. Exit codes: 0 all checks pass /
/// verdict computed, 1 a mathematical check failed, 2 invalid input,
/// 3 undecided within budget.
struct JobReport {
    Json doc;
    int exit_code = 0;
};

JobReport job_verify_rmatrix(const AdmissibleTriple& t, const std::vector<Rational>& params);
JobReport job_verify_bialgebra(const AdmissibleTriple& t, const std::vector<Rational>& params);
JobReport job_manin_check(int n, const Rational& d);
JobReport job_construct_cocycle(const Rational& d, const std::vector<Rational>& diag,
                                const SolveBudget& budget);
JobReport job_cohomologous(const Rational& d, const std::vector<Rational>& diag_a,
                           const std::vector<Rational>& diag_b);
JobReport job_classify_diag(const Rational& d, const std::vector<Rational>& diag);
JobReport job_classify_lambda(const TowerElem& lambda, const Rational& d);
JobReport job_antidiag(int n, const Rational& d, const MatK& x, bool normalize,
                       const AdmissibleTriple& triple);
JobReport job_twisted_check(int n, const Rational& d, const Rational& dprime, const MatK& q);
JobReport job_twisted_search(int n, const Rational& d, const Rational& dprime, long height);
JobReport job_quat_symbol(const Rational& a, const Rational& b, const Place& v);
JobReport job_quat_split(const Rational& a, const Rational& b);
JobReport job_quat_iso(const QuatAlg& A, const QuatAlg& B);
JobReport job_quat_solve_norm(const Rational& c, const Rational& e, const Rational& d,
                              const SolveBudget& budget);

/// Maps a thrown exception to the invalid-input report.
JobReport job_error_report(const std::string& command, const std::string& message);

}  // namespace bdcoh

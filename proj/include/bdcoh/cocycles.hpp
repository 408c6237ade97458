#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bdcoh/normsolve.hpp"
#include "bdcoh/quaternion.hpp"
#include "bdcoh/triples.hpp"

namespace bdcoh {

enum class TriBool { yes, no, undecided };

/// X over K with star(X) X = D_X diagonal, invertible, fixed by conjugation.
struct DiagCocycle {
    MatK X;
    MatK D;
};

struct DiagCheck {
    bool ok = false;
    DiagCocycle cocycle;
    int bad_i = 0, bad_j = 0;  // offending entry when rejected
    std::string reason;
};

/// Computes star(X) X and accepts iff diagonal, invertible and with entries
/// in the fixed field.
DiagCheck is_diag_cocycle(const MatK& x);

/// Entrywise ratio test (D_A)_ii / (D_B)_ii in N(K*); decided by Hilbert
/// symbols when the entries are rational, undecided otherwise.
TriBool cohomologous_diag(const DiagCocycle& a, const DiagCocycle& b, const Rational& d);

TriBool is_norm_closed(const std::vector<Rational>& ds, const Rational& d);

struct NestingResult {
    SolveStatus status = SolveStatus::undecided;
    std::vector<int> sigma;  // permutation of 0..m-1
    std::vector<std::pair<TowerElem, TowerElem>> witnesses;
    std::string detail;
};

/// Searches permutations (exhaustive for m <= 8) and per-stage witnesses of
/// N(x) + N(y) * prod_{k<i} d_{sigma(k)} = d_{sigma(i)}.
NestingResult nesting_witness(const std::vector<Rational>& ds, const Rational& d,
                              const SolveBudget& budget = {});

/// The inductive row construction: produces X with star(X) X = diag(ds),
/// partitioning ds into minimal norm-closed blocks first. Verifies the
/// result by independent matrix multiplication.
DiagCocycle construct_cocycle(const std::vector<Rational>& ds, const Rational& d,
                              const SolveBudget& budget = {});

/// Canonical square-free representatives of the first n-1 diagonal classes
/// in F*/N(K*).
std::vector<Rational> norm_class_vector(const DiagCocycle& a, const Rational& d);

/// Smallest square-free integer (by |t|, positive first) equivalent to c.
Rational norm_class_representative(const Rational& c, const Rational& d);

/// The n-tuple (d, d_1), ..., (d, d_n).
std::vector<QuatAlg> quaternion_tuple(const DiagCocycle& a, const Rational& d);

struct AntidiagResult {
    bool accepted = false;
    MatK D;  // star(X) X = S D
    std::string reason;
};

/// star(X) X = S D with D in the centralizer of r_BD and conj(d_i) = d_{n+1-i}.
/// The triple must be s-compatible with S-real r0.
AntidiagResult is_antidiag_cocycle(const MatK& x, const BDMatrix& rbd);

struct AntidiagNormalized {
    MatK X;                      // right-translated representative
    MatK D;                      // its star(X) X = S D
    TowerElem middle;            // odd n: the middle entry a; even n: 1
    std::optional<Rational> middle_class;  // canonical class of a when rational
};

/// Right-multiplies by the diagonal with entries d_i^{-1} (i <= n/2), 1
/// otherwise; even n lands on S, odd n on S D(a).
AntidiagNormalized normalize_antidiag(const MatK& x, const BDMatrix& rbd, const Rational& d);

/// The explicit element with star(X) X = S over a tower containing sqrt(-1)
/// and sqrt(2) (with the odd-n middle sqrt(2) fix).
MatK antidiag_witness(int n, const TowerSpec& spec);

struct TwistedResult {
    bool accepted = false;
    MatK D;  // J^T star(Q) Q J = S D
    std::string reason;
};

/// J^T Q* Q J = S D for some diagonal D over K(sqrt(d')).
TwistedResult is_twisted_cocycle(const MatK& q, int n, const Rational& d, const Rational& dprime);

enum class LambdaClass { basic, quadratic, twisted };

/// lambda in F* -> basic; lambda/sqrt(d) in F* -> quadratic; lambda^2 = d'
/// with sqrt(d') not in K -> twisted. Throws unclassifiable otherwise.
LambdaClass lambda_classify(const TowerElem& lambda, const Rational& d);

std::string lambda_class_name(LambdaClass c);

}  // namespace bdcoh

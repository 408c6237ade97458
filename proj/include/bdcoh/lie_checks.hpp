#pragma once

#include <vector>

#include "bdcoh/tensor.hpp"

namespace bdcoh {

/// Basis of sl(n): E_ij (i != j) then E_ii - E_{i+1,i+1}.
std::vector<MatK> sl_basis(int n, const TowerSpec& spec);

struct CobracketReport {
    bool cocycle_ok = true;    // delta([a,b]) = ad-pair identity, all basis pairs
    bool cojacobi_ok = true;   // cyclic sum of (delta ⊗ id) delta vanishes
    bool symmetric_invariant = true;  // r + r^21 commutes with a⊗1+1⊗a for all a
    bool skew_ok = true;       // delta(a) + swap(delta(a)) = 0 (when applicable)
    int cocycle_failures = 0;
    int cojacobi_failures = 0;
    int skew_failures = 0;
    bool all_ok() const {
        return cocycle_ok && cojacobi_ok && (!symmetric_invariant || skew_ok);
    }
};

/// Verifies the Lie bialgebra axioms for delta = coboundary(r, .) over the
/// sl(n) basis. Skew-symmetry of delta is only required when r + r^21 is
/// invariant.
CobracketReport check_cobracket_axioms(const Tensor2& r, int n);

/// Cartan generators h_i = sum_{j<=i} E_jj - i E_{(i+1)(i+1)}.
MatK cartan_h(int n, int i, const TowerSpec& spec);

struct SuBasis {
    std::vector<MatK> plus;   // sqrt(d) h_i; e_a - e_{-a}; sqrt(d)(e_a + e_{-a})
    std::vector<MatK> minus;  // (1/2n) ( h_i/(i+i^2); -sqrt(d) e_a; e_a )
};

/// Dual bases of the Manin triple for su(n,F,d); the spec must
/// carry the conjugated generator giving sqrt(d).
SuBasis su_basis(int n, const TowerSpec& spec);

/// sqrt(d)-part of 2n tr(u v); entries must lie in Q(sqrt(d)).
Rational manin_pairing(const MatK& u, const MatK& v, int n);

struct ManinReport {
    bool plus_isotropic = false;
    bool minus_isotropic = false;
    bool gram_identity = false;
    bool nondegenerate = false;
    bool reconstruction_ok = false;
    Tensor2 reconstructed;
    bool all_ok() const {
        return plus_isotropic && minus_isotropic && gram_identity && nondegenerate &&
               reconstruction_ok;
    }
};

/// Full Manin-triple verification for su(n,F,d) over K = Q(sqrt(d)):
/// isotropy of both spans, Gram(B+, B-) = I, non-degeneracy on the joint
/// basis, and reconstruction of sqrt(d) * rdj(n) from the dual pair.
ManinReport verify_manin_and_r(int n, const Rational& d);
ManinReport verify_manin_with_bases(int n, const TowerSpec& spec, const SuBasis& basis);

/// Descent reality check: with s = ad_tensor(X, sqrt(d) rdj), tests
/// star(delta(a)) == delta(a) for every a in B_+. Equivalent to X being a
/// diagonal-type cocycle.
bool coboundary_reality_on_su(const MatK& x);

}  // namespace bdcoh

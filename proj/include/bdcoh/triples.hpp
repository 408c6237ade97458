#pragma once

#include <map>
#include <set>
#include <vector>

#include "bdcoh/tensor.hpp"

namespace bdcoh {

/// Admissible triple (Gamma1, Gamma2, tau) on the simple roots 1..n-1 of
/// A_{n-1}: tau an isometric bijection Gamma1 -> Gamma2 with no tau-orbit
/// staying inside Gamma1.
struct AdmissibleTriple {
    int n = 2;
    std::set<int> gamma1, gamma2;
    std::map<int, int> tau;

    static AdmissibleTriple trivial(int n) { return AdmissibleTriple{n, {}, {}, {}}; }
    bool is_trivial() const { return gamma1.empty() && gamma2.empty(); }
};

bool validate_triple(const AdmissibleTriple& t);

/// s(alpha_i) = alpha_{n-i}: checks s(Gamma_i) = Gamma_i and s tau = tau s.
bool s_compatibility(const AdmissibleTriple& t);

/// Positive root of A_{n-1} as the matrix-unit pair (i, j), i < j; its
/// simple-root support is {i, ..., j-1}.
struct Root {
    int i, j;
    bool operator<(const Root& o) const { return i != o.i ? i < o.i : j < o.j; }
    bool operator==(const Root& o) const = default;
};

std::vector<Root> positive_roots(int n);

/// tau extended additively to a root with support inside Gamma1; nullopt
/// when the support leaves Gamma1.
std::optional<Root> tau_on_root(const AdmissibleTriple& t, const Root& r);

/// r1 = sum_{a>0} e_a ⊗ e_{-a} + sum_{a in Span(Gamma1)+, k>=1} e_a ∧ e_{-tau^k(a)}.
Tensor2 build_r1(const AdmissibleTriple& t, const TowerSpec& spec);

struct SolveR0Result {
    Tensor2 particular;                // free parameters = 0
    std::vector<Tensor2> homogeneous;  // basis of the skew solution space
};

/// Solves { r0 + r0^21 = Omega_0 } together with
/// (tau(a) ⊗ Id + Id ⊗ a)(r0) = 0 for all a in Gamma1, over Q.
SolveR0Result solve_r0(const AdmissibleTriple& t, int n, const TowerSpec& spec);

/// Residual check: r0 + r0^21 = Omega_0 and the Gamma1 constraints hold.
bool r0_satisfies_constraints(const Tensor2& r0, const AdmissibleTriple& t);

/// S-real representative (1/2)(r0 + (Ad_S ⊗ Ad_S)(conj r0)); stays inside the
/// solution family of an s-compatible triple.
Tensor2 s_symmetrize_r0(const Tensor2& r0);

struct BDMatrix {
    AdmissibleTriple triple;
    Tensor2 r0, r1;
    Tensor2 r() const { return r0 + r1; }
};

/// Assembles r0 (particular + parameters on the skew basis) and r1 and
/// verifies CYB(r0 + r1) = 0 exactly.
BDMatrix build_rbd(const AdmissibleTriple& t, const std::vector<Rational>& skew_params,
                   const TowerSpec& spec);

/// ad_tensor(M, r) == r.
bool centralizes(const MatK& m, const Tensor2& r);

enum class RealityMode { quadratic, basic, twisted };

/// quadratic: conj(r_s) = -r_s for r_s = r0 - (1/2) Omega_0;
/// basic/twisted: conj(r0) = (Ad_S ⊗ Ad_S)(r0).
bool check_r0_reality(const Tensor2& r0, RealityMode mode);

/// All valid triples for rank n-1 (for exhaustive desk-scale checks).
std::vector<AdmissibleTriple> enumerate_admissible_triples(int n);

}  // namespace bdcoh

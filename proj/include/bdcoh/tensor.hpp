#pragma once

#include <array>
#include <map>

#include "bdcoh/matrix.hpp"

namespace bdcoh {

/// Matrix unit E_ij, 1-based indices.
struct GlIndex {
    int i, j;
};

/// Sparse exact element of gl(n) ⊗ gl(n); terms keyed by (i1,j1,i2,j2).
class Tensor2 {
  public:
    using Key = std::array<int, 4>;

    Tensor2() : n_(0) {}
    Tensor2(int n, const TowerSpec& spec) : n_(n), spec_(spec) {}

    int n() const { return n_; }
    const TowerSpec& spec() const { return spec_; }
    const std::map<Key, TowerElem>& terms() const { return terms_; }

    void add_term(int i1, int j1, int i2, int j2, const TowerElem& c);
    void add_term(const Key& k, const TowerElem& c);

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const Tensor2& o) const {
        return n_ == o.n_ && spec_ == o.spec_ && terms_ == o.terms_;
    }
    bool operator!=(const Tensor2& o) const { return !(*this == o); }

    Tensor2 operator+(const Tensor2& o) const;
    Tensor2 operator-(const Tensor2& o) const;
    Tensor2 operator-() const;
    Tensor2 operator*(const TowerElem& c) const;
    Tensor2 operator*(const Rational& c) const;

    /// Legs exchanged (r^{21}).
    Tensor2 swapped() const;
    /// Terms with both legs diagonal matrix units.
    Tensor2 cartan_part() const;
    /// Conjugate-transpose both legs: (X ⊗ Y)* = conj(X)^T ⊗ conj(Y)^T.
    Tensor2 star() const;
    /// Galois conjugation on coefficients only.
    Tensor2 conj_coeffs() const;

    Tensor2 lifted_to(const TowerSpec& bigger) const;

    std::string to_string() const;

  private:
    int n_;
    TowerSpec spec_;
    std::map<Key, TowerElem> terms_;
};

/// Sparse exact element of gl(n)^{⊗3}.
class Tensor3 {
  public:
    using Key = std::array<int, 6>;

    Tensor3() : n_(0) {}
    Tensor3(int n, const TowerSpec& spec) : n_(n), spec_(spec) {}

    int n() const { return n_; }
    const TowerSpec& spec() const { return spec_; }
    const std::map<Key, TowerElem>& terms() const { return terms_; }

    void add_term(const Key& k, const TowerElem& c);

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const Tensor3& o) const {
        return n_ == o.n_ && spec_ == o.spec_ && terms_ == o.terms_;
    }
    bool operator!=(const Tensor3& o) const { return !(*this == o); }

    Tensor3 operator+(const Tensor3& o) const;
    Tensor3 operator-(const Tensor3& o) const;
    Tensor3 operator*(const TowerElem& c) const;

    /// x⊗y⊗z -> z⊗x⊗y.
    Tensor3 cycled() const;

    std::string to_string() const;

  private:
    int n_;
    TowerSpec spec_;
    std::map<Key, TowerElem> terms_;
};

/// Casimir of sl(n) for the trace form:
/// sum_{i!=j} E_ij⊗E_ji + sum_{i,j} (delta_ij - 1/n) E_ii⊗E_jj.
Tensor2 casimir(int n, const TowerSpec& spec);

/// Cartan block of the Casimir.
Tensor2 casimir_cartan(int n, const TowerSpec& spec);

/// Standard r-matrix: (1/2) * cartan Casimir + sum_{i<j} E_ij⊗E_ji.
Tensor2 rdj(int n, const TowerSpec& spec);

/// Classical Yang-Baxter operator [r12,r13] + [r12,r23] + [r13,r23].
Tensor3 cyb(const Tensor2& r);

/// delta(a) = [r, a⊗1 + 1⊗a].
Tensor2 coboundary(const Tensor2& r, const MatK& a);

/// (ad_a ⊗ 1 + 1 ⊗ ad_a)(t) = -[t, a⊗1 + 1⊗a].
Tensor2 apply_ad(const MatK& a, const Tensor2& t);

/// Both legs conjugated by X: E_ij -> X E_ij X^{-1}.
Tensor2 ad_tensor(const MatK& x, const Tensor2& t);
Tensor3 ad_tensor3(const MatK& x, const Tensor3& t);

/// u ⊗ v for matrices seen as gl(n) elements.
Tensor2 outer(const MatK& u, const MatK& v);

/// (delta ⊗ id) applied to the first leg, with delta = coboundary(r, ·).
Tensor3 delta_on_first_leg(const Tensor2& r, const Tensor2& t);

}  // namespace bdcoh

#pragma once

#include <vector>

#include "bdcoh/tower.hpp"

namespace bdcoh {

/// Square matrix over a tower field; all entries share one spec.
class MatK {
  public:
    MatK() : n_(0) {}
    MatK(int n, const TowerSpec& spec);

    static MatK identity(int n, const TowerSpec& spec);
    static MatK diag(const std::vector<TowerElem>& entries);
    static MatK diag_rational(int n, const TowerSpec& spec, const std::vector<Rational>& entries);

    int n() const { return n_; }
    const TowerSpec& spec() const { return spec_; }
    const TowerElem& at(int i, int j) const { return e_[idx(i, j)]; }  // 1-based
    void set(int i, int j, const TowerElem& v);

    MatK operator+(const MatK& o) const;
    MatK operator-(const MatK& o) const;
    MatK operator*(const MatK& o) const;
    MatK operator*(const TowerElem& c) const;
    MatK operator*(const Rational& c) const;
    MatK operator-() const;
    bool operator==(const MatK& o) const { return n_ == o.n_ && spec_ == o.spec_ && e_ == o.e_; }
    bool operator!=(const MatK& o) const { return !(*this == o); }

    MatK transpose() const;
    /// Conjugate transpose for the tower's Galois conjugation.
    MatK star() const;
    MatK conj_entries() const;

    TowerElem trace() const;
    /// Bareiss fraction-free elimination.
    TowerElem det() const;
    /// Adjugate for n <= 4, Gauss-Jordan elimination above.
    MatK inverse() const;

    bool is_zero() const;
    bool is_diagonal() const;
    bool is_identity() const;
    /// Every diagonal entry nonzero and off-diagonal zero.
    bool is_invertible_diagonal() const;

    MatK lifted_to(const TowerSpec& bigger) const;

    std::string to_string() const;

  private:
    int idx(int i, int j) const { return (i - 1) * n_ + (j - 1); }
    TowerElem minor_det(int skip_i, int skip_j) const;

    int n_;
    TowerSpec spec_;
    std::vector<TowerElem> e_;
};

/// [A, B] = AB - BA.
MatK bracket(const MatK& a, const MatK& b);

/// star(X) * X == 1, membership in U(n,d)(F).
bool is_unitary(const MatK& x);

/// Anti-diagonal permutation matrix S, S_{i,n+1-j} pattern.
MatK build_S(int n, const TowerSpec& spec);

/// Twist matrix J over a tower containing sqrt(dprime):
/// J_{i,i} = J_{i,n+1-i} = 1 for i <= (n+1)/2, J_{i,n+1-i} = sqrt(d'),
/// J_{i,i} = -sqrt(d') for i > (n+1)/2. Requires sqrt(d') not in K =
/// Q(sqrt(d)): both d' and d'*d must be non-squares.
MatK build_J(int n, const Rational& dprime, const TowerSpec& spec, const Rational& d);

}  // namespace bdcoh

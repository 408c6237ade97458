#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bdcoh/numeric.hpp"

namespace bdcoh {

/// A multi-quadratic extension Q(sqrt(a1),...,sqrt(ak)) with one designated
/// generator whose sign flip is the active conjugation (Gal(K/F) for
/// F = the subfield fixing that generator).
///
/// Generators are normalized to square-free integers and must be
/// multiplicatively independent modulo squares; dependent generators are
/// rejected rather than silently collapsed.
class TowerSpec {
  public:
    TowerSpec() = default;  // the trivial tower Q, no conjugation

    /// Normalizes each requested rational generator p/q to the square-free
    /// part of p*q (same field, since sqrt(p/q) = sqrt(pq)/q).
    static TowerSpec make(const std::vector<Rational>& gens, int conj_index);

    /// Spec with one more generator (or the same spec if the square class is
    /// already present as a single generator). Returns the generator index.
    std::pair<TowerSpec, int> extended_with(const Rational& g) const;

    size_t size() const { return gens_.size(); }
    const Int& gen(size_t i) const { return gens_[i]; }
    const std::vector<Int>& gens() const { return gens_; }
    int conj_index() const { return conj_index_; }
    bool has_conj() const { return conj_index_ >= 0; }

    /// Index of the generator equal to the square-free part of g, if present.
    int find_gen(const Rational& g) const;

    bool operator==(const TowerSpec& o) const {
        return gens_ == o.gens_ && conj_index_ == o.conj_index_;
    }
    bool operator!=(const TowerSpec& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    std::vector<Int> gens_;
    int conj_index_ = -1;
};

/// An element of a tower field, stored as rational coefficients on the
/// 2^k subset basis sqrt(prod of a subset of generators). Canonical form:
/// no zero coefficients stored.
class TowerElem {
  public:
    TowerElem() = default;  // zero of the trivial tower
    explicit TowerElem(const TowerSpec& spec) : spec_(spec) {}
    TowerElem(const TowerSpec& spec, const Rational& q);

    static TowerElem zero(const TowerSpec& spec) { return TowerElem(spec); }
    static TowerElem one(const TowerSpec& spec) { return TowerElem(spec, 1); }
    /// sqrt(a_i) as an element.
    static TowerElem sqrt_gen(const TowerSpec& spec, int gen_index);

    const TowerSpec& spec() const { return spec_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_rational() const;
    /// Value as a rational; element must be rational.
    Rational rat() const;
    /// Coefficient on a subset mask (0 if absent).
    Rational coeff(uint32_t mask) const;
    const std::map<uint32_t, Rational>& coeffs() const { return coeffs_; }
    void set_coeff(uint32_t mask, const Rational& c);

    /// True iff no nonzero coefficient involves the conjugated generator.
    bool in_fixed_field() const;
    /// True iff supported on subsets of {conj generator} only, i.e. the
    /// element lies in Q(sqrt(d)) with d the conjugated generator.
    bool in_conj_quadratic() const;

    TowerElem operator-() const;
    TowerElem& operator+=(const TowerElem& o);
    TowerElem& operator-=(const TowerElem& o);
    friend TowerElem operator+(TowerElem a, const TowerElem& b) { return a += b; }
    friend TowerElem operator-(TowerElem a, const TowerElem& b) { return a -= b; }
    friend TowerElem operator*(const TowerElem& a, const TowerElem& b);
    friend TowerElem operator/(const TowerElem& a, const TowerElem& b);
    TowerElem& operator*=(const TowerElem& o) { return *this = *this * o; }
    TowerElem& operator/=(const TowerElem& o) { return *this = *this / o; }
    TowerElem operator*(const Rational& c) const;
    TowerElem inv() const;

    bool operator==(const TowerElem& o) const;
    bool operator!=(const TowerElem& o) const { return !(*this == o); }

    /// Galois conjugation: flips the sign of the designated generator in
    /// every subset containing it. Identity when the spec has no conjugation.
    TowerElem conj() const;
    /// conj(z) * z; lands in the fixed subfield.
    TowerElem norm() const;
    /// norm() as a rational; requires the result to be rational.
    Rational norm_rat() const;

    /// Same element in a larger tower (every generator must appear there).
    TowerElem lifted_to(const TowerSpec& bigger) const;

    std::string to_string() const;

  private:
    void check_same_spec(const TowerElem& o) const;

    TowerSpec spec_;
    std::map<uint32_t, Rational> coeffs_;
};

/// sqrt(r) as an element: requires the square-free part of r to be 1 or a
/// generator of the spec.
TowerElem sqrt_of_rational(const TowerSpec& spec, const Rational& r);

/// Decides c in N(K*) for K = Q(sqrt(d)), via Hilbert symbols at every
/// relevant place. c nonzero, d not a square.
bool is_norm_from_quadratic(const Rational& c, const Rational& d);

}  // namespace bdcoh

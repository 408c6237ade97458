#pragma once

#include <variant>
#include <vector>

#include "bdcoh/numeric.hpp"

namespace bdcoh {

/// The quaternion algebra (a,b) over Q: i^2 = a, j^2 = b, ji = -ij.
struct QuatAlg {
    Rational a, b;
};

/// x + y i + z j + w ij.
struct QuatElem {
    Rational x{0}, y{0}, z{0}, w{0};
    bool operator==(const QuatElem&) const = default;
};

QuatElem quat_mul(const QuatAlg& A, const QuatElem& p, const QuatElem& q);
QuatElem quat_add(const QuatElem& p, const QuatElem& q);

/// Norm form (x^2 - a y^2) - b (z^2 - a w^2).
Rational quat_norm(const QuatAlg& A, const QuatElem& q);

struct PlaceInfinity {};
using Place = std::variant<Int, PlaceInfinity>;  // finite prime or the real place

/// Hilbert symbol (a,b)_v over Q: +1 iff z^2 = a x^2 + b y^2 has a
/// nontrivial solution over the completion at v.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// Finite set of places where a symbol built from these rationals can be -1:
/// 2, infinity, and the odd primes dividing a numerator or denominator.
std::vector<Place> relevant_places(const std::vector<Rational>& vals);

bool is_split(const QuatAlg& A);
bool quat_iso(const QuatAlg& A, const QuatAlg& B);

std::string place_to_string(const Place& v);

}  // namespace bdcoh

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bdcoh {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Floor square root for n >= 0.
Int isqrt(const Int& n);

bool is_square_int(const Int& n);

/// True iff q is a square in Q (0 counts).
bool is_square_rational(const Rational& q);

bool is_probable_prime(const Int& n);

/// Prime factorization of |n|, pairs (p, exponent) sorted by p. n != 0.
std::vector<std::pair<Int, int>> factor_int(const Int& n);

/// Square-free part of n, sign preserved. squarefree_part(-12) == -3.
Int squarefree_part(const Int& n);

/// Square-free part of the rational q: the square-free integer s with q = s * (rational)^2.
Int squarefree_part_rational(const Rational& q);

/// p-adic valuation of q != 0.
int val_p(const Rational& q, const Int& p);

/// Legendre symbol (a|p) for odd prime p; a coprime to p expected (0 if p | a).
int legendre(const Int& a, const Int& p);

/// Residue of the p-unit rational u modulo p^k (den invertible mod p^k).
Int unit_mod(const Rational& u, const Int& pk);

/// x with x^2 = a mod p (odd prime p, a a residue). Tonelli-Shanks.
std::optional<Int> sqrt_mod_p(const Int& a, const Int& p);

/// Writes m >= 1 as x^2 + y^2 with x >= y >= 0 if possible.
std::optional<std::pair<Int, Int>> two_squares(const Int& m);

Rational parse_rational(const std::string& s);
std::string rational_to_string(const Rational& q);

}  // namespace bdcoh

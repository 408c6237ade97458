#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bdcoh/errors.hpp"
#include "bdcoh/quaternion.hpp"
#include "hilbert_oracle.hpp"
#include "test_util.hpp"

using namespace bdcoh;
using namespace bdcoh::testutil;

namespace {

const QuatElem kOne{1, 0, 0, 0};
const QuatElem kI{0, 1, 0, 0};
const QuatElem kJ{0, 0, 1, 0};
const QuatElem kK{0, 0, 0, 1};

QuatElem random_quat(std::mt19937_64& rng) {
    return {random_rational(rng, 4, 3), random_rational(rng, 4, 3), random_rational(rng, 4, 3),
            random_rational(rng, 4, 3)};
}

Rational random_nonzero(std::mt19937_64& rng, long h) {
    Rational r;
    do {
        r = random_rational(rng, h, h);
    } while (r == 0);
    return r;
}

}  // namespace

TEST_CASE("multiplication relations") {
    QuatAlg A{Rational(3), Rational(7)};
    CHECK(quat_mul(A, kI, kJ) == kK);
    CHECK(quat_mul(A, kJ, kI) == QuatElem{0, 0, 0, -1});
    CHECK(quat_mul(A, kI, kI) == QuatElem{3, 0, 0, 0});
    CHECK(quat_mul(A, kJ, kJ) == QuatElem{7, 0, 0, 0});
    QuatElem one_plus_i{1, 1, 0, 0}, one_minus_i{1, -1, 0, 0};
    CHECK(quat_mul(A, one_plus_i, one_minus_i) == QuatElem{-2, 0, 0, 0});  // 1 - a

    // associativity on random triples
    std::mt19937_64 rng(41);
    for (int it = 0; it < 12; ++it) {
        QuatElem p = random_quat(rng), q = random_quat(rng), r = random_quat(rng);
        CHECK(quat_mul(A, quat_mul(A, p, q), r) == quat_mul(A, p, quat_mul(A, q, r)));
    }
}

TEST_CASE("norm form") {
    QuatAlg H{Rational(-1), Rational(-1)};
    CHECK(quat_norm(H, QuatElem{1, 1, 1, 1}) == 4);
    QuatAlg A{Rational(3), Rational(7)};
    CHECK(quat_norm(A, kJ) == -7);
    std::mt19937_64 rng(42);
    for (int it = 0; it < 15; ++it) {
        QuatElem p = random_quat(rng), q = random_quat(rng);
        CHECK(quat_norm(A, quat_mul(A, p, q)) == quat_norm(A, p) * quat_norm(A, q));
    }
}

TEST_CASE("norm is the 2-Pfister form <1,a> tensor <1,b>") {
    // <1,a>(x,y) = x^2 - a y^2; the tensor square evaluates as the diagonal
    // form <1, -a, -b, ab> on (x,y,z,w)
    std::mt19937_64 rng(46);
    for (int it = 0; it < 20; ++it) {
        QuatAlg A{random_nonzero(rng, 9), random_nonzero(rng, 9)};
        QuatElem q = random_quat(rng);
        Rational pfister =
            q.x * q.x - A.a * q.y * q.y - A.b * q.z * q.z + A.a * A.b * q.w * q.w;
        CHECK(quat_norm(A, q) == pfister);
    }
}

TEST_CASE("hilbert symbol values") {
    CHECK(hilbert_symbol(Rational(2), Rational(5), Place(Int(5))) == -1);
    CHECK(hilbert_symbol(Rational(-1), Rational(-1), Place(PlaceInfinity{})) == -1);
    CHECK(hilbert_symbol(Rational(-1), Rational(2), Place(PlaceInfinity{})) == 1);
    // product formula for (2,5): places 2, 5, infinity carry the symbols
    int prod = 1;
    for (const Place& v : relevant_places({Rational(2), Rational(5)}))
        prod *= hilbert_symbol(Rational(2), Rational(5), v);
    CHECK(prod == 1);
    // symbols away from 2, 5 and infinity are trivial
    for (long p : {3L, 7L, 11L})
        CHECK(hilbert_symbol(Rational(2), Rational(5), Place(Int(p))) == 1);
    CHECK_THROWS_AS(hilbert_symbol(Rational(0), Rational(1), Place(Int(3))), nonzero_required);
    CHECK_THROWS_AS(hilbert_symbol(Rational(1), Rational(1), Place(Int(4))), bad_input);
}

TEST_CASE("bimultiplicativity") {
    std::mt19937_64 rng(43);
    std::vector<Place> places{Place(Int(2)), Place(Int(3)), Place(Int(5)), Place(Int(7)),
                              Place(PlaceInfinity{})};
    for (int it = 0; it < 30; ++it) {
        Rational a = random_nonzero(rng, 20), b1 = random_nonzero(rng, 20),
                 b2 = random_nonzero(rng, 20);
        for (const Place& v : places)
            CHECK(hilbert_symbol(a, b1 * b2, v) ==
                  hilbert_symbol(a, b1, v) * hilbert_symbol(a, b2, v));
    }
}

TEST_CASE("product formula") {
    std::mt19937_64 rng(44);
    for (int it = 0; it < 50; ++it) {
        Rational a = random_nonzero(rng, 30), b = random_nonzero(rng, 30);
        int prod = 1;
        for (const Place& v : relevant_places({a, b})) prod *= hilbert_symbol(a, b, v);
        CHECK(prod == 1);
    }
}

TEST_CASE("agreement with the residue oracle at small places") {
    std::mt19937_64 rng(45);
    for (int it = 0; it < 40; ++it) {
        Rational a = random_nonzero(rng, 15), b = random_nonzero(rng, 15);
        for (long long p : {3LL, 5LL, 7LL}) {
            bool oracle = residue_oracle_odd(a, b, p);
            bool symbol = hilbert_symbol(a, b, Place(Int(p))) == 1;
            CHECK(oracle == symbol);
        }
        CHECK(residue_oracle_two(a, b) == (hilbert_symbol(a, b, Place(Int(2))) == 1));
    }
}

TEST_CASE("splitting") {
    CHECK(is_split(QuatAlg{Rational(1), Rational(7)}));
    CHECK_FALSE(is_split(QuatAlg{Rational(-1), Rational(-1)}));
    CHECK_FALSE(is_split(QuatAlg{Rational(5), Rational(2)}));
}

TEST_CASE("isomorphism") {
    CHECK(quat_iso(QuatAlg{Rational(-1), Rational(-1)}, QuatAlg{Rational(-1), Rational(-2)}));
    CHECK_FALSE(quat_iso(QuatAlg{Rational(5), Rational(2)}, QuatAlg{Rational(5), Rational(3)}));
    QuatAlg A{Rational(-1), Rational(-1)};
    CHECK(quat_iso(A, A));

    // equivalence relation on a pool + split iff isomorphic to (1,1)
    std::vector<QuatAlg> pool{{Rational(-1), Rational(-1)}, {Rational(-1), Rational(-2)},
                              {Rational(5), Rational(2)},   {Rational(1), Rational(3)},
                              {Rational(2), Rational(3)},   {Rational(-1), Rational(5)}};
    QuatAlg split_ref{Rational(1), Rational(1)};
    for (const auto& x : pool) {
        CHECK(quat_iso(x, x));
        CHECK(is_split(x) == quat_iso(x, split_ref));
        for (const auto& y : pool) {
            CHECK(quat_iso(x, y) == quat_iso(y, x));
            for (const auto& z : pool)
                if (quat_iso(x, y) && quat_iso(y, z)) CHECK(quat_iso(x, z));
        }
    }
}

TEST_CASE("local norm classes have order two at an odd place") {
    // at p = 5, d = 5: the symbol (5, u)_5 on units is a surjective character
    // onto {+1,-1}, so the local norm-class group is cyclic of order 2
    bool saw_plus = false, saw_minus = false;
    for (long u = 1; u <= 4; ++u) {
        int s = hilbert_symbol(Rational(5), Rational(u), Place(Int(5)));
        (s == 1 ? saw_plus : saw_minus) = true;
        for (long w = 1; w <= 4; ++w)
            CHECK(hilbert_symbol(Rational(5), Rational(u * w), Place(Int(5))) ==
                  s * hilbert_symbol(Rational(5), Rational(w), Place(Int(5))));
    }
    CHECK(saw_plus);
    CHECK(saw_minus);
}

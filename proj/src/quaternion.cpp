#include "bdcoh/quaternion.hpp"

#include <algorithm>
#include <set>

#include "bdcoh/errors.hpp"

namespace bdcoh {

QuatElem quat_add(const QuatElem& p, const QuatElem& q) {
    return {p.x + q.x, p.y + q.y, p.z + q.z, p.w + q.w};
}

QuatElem quat_mul(const QuatAlg& A, const QuatElem& p, const QuatElem& q) {
    const Rational &a = A.a, &b = A.b;
    // basis products: i^2=a, j^2=b, ij=k, k^2=-ab, ik=aj? no: i*k = a j, k*i = -a j,
    // j*k = -b i, k*j = b i, i*j = k, j*i = -k.
    QuatElem r;
    r.x = p.x * q.x + a * p.y * q.y + b * p.z * q.z - a * b * p.w * q.w;
    r.y = p.x * q.y + p.y * q.x - b * p.z * q.w + b * p.w * q.z;
    r.z = p.x * q.z + p.z * q.x + a * p.y * q.w - a * p.w * q.y;
    r.w = p.x * q.w + p.w * q.x + p.y * q.z - p.z * q.y;
    return r;
}

Rational quat_norm(const QuatAlg& A, const QuatElem& q) {
    return (q.x * q.x - A.a * q.y * q.y) - A.b * (q.z * q.z - A.a * q.w * q.w);
}

namespace {

int eps_mod4(const Int& u) {  // (u-1)/2 mod 2 for odd u
    Int r = ((u % 4) + 4) % 4;
    return r == 3 ? 1 : 0;
}

int omega_mod8(const Int& u) {  // (u^2-1)/8 mod 2 for odd u
    Int r = ((u % 8) + 8) % 8;
    return (r == 3 || r == 5) ? 1 : 0;
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    if (a == 0 || b == 0) throw nonzero_required("hilbert symbol arguments");
    if (std::holds_alternative<PlaceInfinity>(v)) return (a < 0 && b < 0) ? -1 : 1;
    const Int& p = std::get<Int>(v);
    if (p < 2 || !is_probable_prime(p)) throw bad_input("place must be a prime or infinity");
    int alpha = val_p(a, p), beta = val_p(b, p);
    Rational pr(p);
    Rational u = a, w = b;
    for (int i = 0; i < alpha; ++i) u /= pr;
    for (int i = 0; i > alpha; --i) u *= pr;
    for (int i = 0; i < beta; ++i) w /= pr;
    for (int i = 0; i > beta; --i) w *= pr;
    if (p == 2) {
        Int u8 = unit_mod(u, 8), w8 = unit_mod(w, 8);
        int e = eps_mod4(u8) * eps_mod4(w8) + alpha * omega_mod8(w8) + beta * omega_mod8(u8);
        return (e % 2) ? -1 : 1;
    }
    Int up = unit_mod(u, p), wp = unit_mod(w, p);
    int s = 1;
    if ((alpha % 2) && (beta % 2) && ((p - 1) / 2) % 2 == 1) s = -s;
    if (beta % 2) s *= legendre(up, p);
    if (alpha % 2) s *= legendre(wp, p);
    return s;
}

std::vector<Place> relevant_places(const std::vector<Rational>& vals) {
    std::set<Int> primes{2};
    for (const auto& q : vals) {
        if (q == 0) continue;
        for (const Int& part : {num(q), den(q)})
            for (const auto& [p, e] : factor_int(part)) primes.insert(p);
    }
    std::vector<Place> out;
    for (const Int& p : primes) out.emplace_back(p);
    out.emplace_back(PlaceInfinity{});
    return out;
}

bool is_split(const QuatAlg& A) {
    if (A.a == 0 || A.b == 0) throw nonzero_required("quaternion parameters");
    for (const Place& v : relevant_places({A.a, A.b}))
        if (hilbert_symbol(A.a, A.b, v) != 1) return false;
    return true;
}

bool quat_iso(const QuatAlg& A, const QuatAlg& B) {
    for (const Place& v : relevant_places({A.a, A.b, B.a, B.b}))
        if (hilbert_symbol(A.a, A.b, v) != hilbert_symbol(B.a, B.b, v)) return false;
    return true;
}

std::string place_to_string(const Place& v) {
    if (std::holds_alternative<PlaceInfinity>(v)) return "infinity";
    return std::get<Int>(v).str();
}

}  // namespace bdcoh

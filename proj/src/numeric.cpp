#include "bdcoh/numeric.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "bdcoh/errors.hpp"

namespace bdcoh {

namespace mp = boost::multiprecision;

Int isqrt(const Int& n) {
    if (n < 0) throw bad_input("isqrt of negative");
    return mp::sqrt(n);
}

bool is_square_int(const Int& n) {
    if (n < 0) return false;
    Int r = mp::sqrt(n);
    return r * r == n;
}

bool is_square_rational(const Rational& q) {
    if (q < 0) return false;
    return is_square_int(num(q)) && is_square_int(den(q));
}

namespace {

Int powmod(Int b, Int e, const Int& m) { return mp::powm(b % m, e, m); }

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, int r) {
    Int x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < r; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;
}

Int pollard_rho(const Int& n) {
    // n odd composite, not a prime power of interest; Brent variant.
    if (n % 2 == 0) return 2;
    for (Int c = 1; ; ++c) {
        Int x = 2, y = 2, d = 1;
        auto f = [&](const Int& v) { return (v * v + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = mp::gcd(x >= y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(Int n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n]++;
        return;
    }
    // trial division first; inputs here are desk scale
    for (Int p = 2; p * p <= n && p < 100000; p == 2 ? p = 3 : p += 2) {
        while (n % p == 0) {
            out[p]++;
            n /= p;
        }
        if (n == 1) return;
        if (is_probable_prime(n)) {
            out[n]++;
            return;
        }
    }
    Int d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

std::mutex g_factor_mutex;
std::map<Int, std::vector<std::pair<Int, int>>> g_factor_cache;

}  // namespace

bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    // deterministic below 3.3e24
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (miller_rabin_witness(n, a, d, r)) return false;
    }
    return true;
}

std::vector<std::pair<Int, int>> factor_int(const Int& n) {
    if (n == 0) throw bad_input("factor of zero");
    Int m = mp::abs(n);
    {
        std::lock_guard<std::mutex> lock(g_factor_mutex);
        auto it = g_factor_cache.find(m);
        if (it != g_factor_cache.end()) return it->second;
    }
    std::map<Int, int> fm;
    factor_rec(m, fm);
    std::vector<std::pair<Int, int>> out(fm.begin(), fm.end());
    {
        std::lock_guard<std::mutex> lock(g_factor_mutex);
        if (g_factor_cache.size() < 100000) g_factor_cache.emplace(m, out);
    }
    return out;
}

Int squarefree_part(const Int& n) {
    if (n == 0) return 0;
    Int s = n < 0 ? -1 : 1;
    for (const auto& [p, e] : factor_int(n))
        if (e % 2) s *= p;
    return s;
}

Int squarefree_part_rational(const Rational& q) {
    if (q == 0) return 0;
    return squarefree_part(num(q) * den(q));
}

int val_p(const Rational& q, const Int& p) {
    if (q == 0) throw bad_input("valuation of zero");
    int v = 0;
    Int n = num(q);
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    Int d = den(q);
    while (d % p == 0) {
        d /= p;
        --v;
    }
    return v;
}

int legendre(const Int& a, const Int& p) {
    Int r = powmod(((a % p) + p) % p, (p - 1) / 2, p);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

Int unit_mod(const Rational& u, const Int& pk) {
    Int n = ((num(u) % pk) + pk) % pk;
    Int d = ((den(u) % pk) + pk) % pk;
    // d invertible mod pk
    Int d_inv = 0, t = 0;
    {
        // extended euclid
        Int a = d, b = pk, x0 = 1, x1 = 0;
        while (b != 0) {
            Int q = a / b;
            Int tmp = a - q * b;
            a = b;
            b = tmp;
            tmp = x0 - q * x1;
            x0 = x1;
            x1 = tmp;
        }
        if (a != 1) throw bad_input("denominator not a unit at this place");
        d_inv = ((x0 % pk) + pk) % pk;
        (void)t;
    }
    return n * d_inv % pk;
}

std::optional<Int> sqrt_mod_p(const Int& a0, const Int& p) {
    Int a = ((a0 % p) + p) % p;
    if (a == 0) return Int(0);
    if (legendre(a, p) != 1) return std::nullopt;
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    // Tonelli-Shanks
    Int q = p - 1;
    int s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (legendre(z, p) != -1) ++z;
    Int m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        Int tt = t;
        Int i = 0;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Int b = c;
        for (Int j = 0; j < m - i - 1; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

namespace {

/// p = x^2 + y^2 for prime p ≡ 1 (mod 4), via Cornacchia.
std::pair<Int, Int> cornacchia_two_squares(const Int& p) {
    Int r = *sqrt_mod_p(p - 1, p);  // r^2 ≡ -1 (mod p)
    Int a = p, b = r;
    Int bound = isqrt(p);
    while (b > bound) {
        Int t = a % b;
        a = b;
        b = t;
    }
    Int y2 = p - b * b;
    Int y = isqrt(y2);
    return {b, y};
}

}  // namespace

std::optional<std::pair<Int, Int>> two_squares(const Int& m) {
    if (m < 1) return std::nullopt;
    if (m == 1) return std::make_pair(Int(1), Int(0));
    Int x = 1, y = 0;  // x^2 + y^2 == current product
    for (const auto& [p, e] : factor_int(m)) {
        if (p % 4 == 3) {
            if (e % 2) return std::nullopt;
            Int f = 1;
            for (int i = 0; i < e / 2; ++i) f *= p;
            x *= f;
            y *= f;
            continue;
        }
        Int px, py;
        if (p == 2) {
            px = 1;
            py = 1;
        } else {
            auto [cx, cy] = cornacchia_two_squares(p);
            px = cx;
            py = cy;
        }
        for (int i = 0; i < e; ++i) {
            // Gaussian product (x + yi)(px + pyi)
            Int nx = x * px - y * py;
            Int ny = x * py + y * px;
            x = nx;
            y = ny;
        }
    }
    x = mp::abs(x);
    y = mp::abs(y);
    if (x < y) std::swap(x, y);
    return std::make_pair(x, y);
}

Rational parse_rational(const std::string& s) {
    auto bad = [&] { return bad_input("cannot parse rational '" + s + "'"); };
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw bad();
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(t));
        Int n(t.substr(0, slash));
        Int d(t.substr(slash + 1));
        if (d == 0) throw bad();
        return Rational(n, d);
    } catch (const std::exception&) {
        throw bad();
    }
}

std::string rational_to_string(const Rational& q) {
    std::string s = num(q).str();
    if (den(q) != 1) s += "/" + den(q).str();
    return s;
}

}  // namespace bdcoh

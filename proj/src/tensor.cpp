#include "bdcoh/tensor.hpp"

#include <sstream>

#include "bdcoh/errors.hpp"

namespace bdcoh {

void Tensor2::add_term(int i1, int j1, int i2, int j2, const TowerElem& c) {
    add_term(Key{i1, j1, i2, j2}, c);
}

void Tensor2::add_term(const Key& k, const TowerElem& c) {
    if (c.is_zero()) return;
    for (int v : k)
        if (v < 1 || v > n_) throw dim_mismatch("tensor index out of range");
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Tensor2 Tensor2::operator+(const Tensor2& o) const {
    if (n_ != o.n_ || spec_ != o.spec_) throw dim_mismatch("tensor add");
    Tensor2 out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k, c);
    return out;
}

Tensor2 Tensor2::operator-(const Tensor2& o) const { return *this + (-o); }

Tensor2 Tensor2::operator-() const {
    Tensor2 out(n_, spec_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

Tensor2 Tensor2::operator*(const TowerElem& c) const {
    Tensor2 out(n_, spec_);
    if (c.is_zero()) return out;
    for (const auto& [k, v] : terms_) out.add_term(k, v * c);
    return out;
}

Tensor2 Tensor2::operator*(const Rational& c) const {
    return *this * TowerElem(spec_, c);
}

Tensor2 Tensor2::swapped() const {
    Tensor2 out(n_, spec_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(Key{k[2], k[3], k[0], k[1]}, c);
    return out;
}

Tensor2 Tensor2::cartan_part() const {
    Tensor2 out(n_, spec_);
    for (const auto& [k, c] : terms_)
        if (k[0] == k[1] && k[2] == k[3]) out.terms_.emplace(k, c);
    return out;
}

Tensor2 Tensor2::star() const {
    Tensor2 out(n_, spec_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(Key{k[1], k[0], k[3], k[2]}, c.conj());
    return out;
}

Tensor2 Tensor2::conj_coeffs() const {
    Tensor2 out(n_, spec_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, c.conj());
    return out;
}

Tensor2 Tensor2::lifted_to(const TowerSpec& bigger) const {
    Tensor2 out(n_, bigger);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, c.lifted_to(bigger));
    return out;
}

std::string Tensor2::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*E" << k[0] << k[1] << "@E" << k[2] << k[3];
    }
    return os.str();
}

void Tensor3::add_term(const Key& k, const TowerElem& c) {
    if (c.is_zero()) return;
    for (int v : k)
        if (v < 1 || v > n_) throw dim_mismatch("tensor index out of range");
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Tensor3 Tensor3::operator+(const Tensor3& o) const {
    if (n_ != o.n_ || spec_ != o.spec_) throw dim_mismatch("tensor3 add");
    Tensor3 out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k, c);
    return out;
}

Tensor3 Tensor3::operator-(const Tensor3& o) const {
    Tensor3 neg(o.n_, o.spec_);
    for (const auto& [k, c] : o.terms_) neg.terms_.emplace(k, -c);
    return *this + neg;
}

Tensor3 Tensor3::operator*(const TowerElem& c) const {
    Tensor3 out(n_, spec_);
    if (c.is_zero()) return out;
    for (const auto& [k, v] : terms_) out.add_term(k, v * c);
    return out;
}

Tensor3 Tensor3::cycled() const {
    Tensor3 out(n_, spec_);
    for (const auto& [k, c] : terms_)
        out.terms_.emplace(Key{k[4], k[5], k[0], k[1], k[2], k[3]}, c);
    return out;
}

std::string Tensor3::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*E" << k[0] << k[1] << "@E" << k[2] << k[3] << "@E" << k[4]
           << k[5];
    }
    return os.str();
}

Tensor2 casimir(int n, const TowerSpec& spec) {
    if (n < 2) throw dim_mismatch("casimir needs n >= 2");
    Tensor2 t(n, spec);
    TowerElem one = TowerElem::one(spec);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i != j) t.add_term(i, j, j, i, one);
            Rational c = (i == j ? Rational(1) : Rational(0)) - Rational(1, n);
            t.add_term(i, i, j, j, TowerElem(spec, c));
        }
    return t;
}

Tensor2 casimir_cartan(int n, const TowerSpec& spec) { return casimir(n, spec).cartan_part(); }

Tensor2 rdj(int n, const TowerSpec& spec) {
    Tensor2 t = casimir_cartan(n, spec) * Rational(1, 2);
    TowerElem one = TowerElem::one(spec);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) t.add_term(i, j, j, i, one);
    return t;
}

namespace {

/// Accumulates c * [E_ab, E_cd] ⊗ (rest) into a Tensor3 at leg slot `slot`.
/// The bracket is delta_bc E_ad - delta_da E_cb.
void add_bracket_term3(Tensor3& out, int slot, int a, int b, int c, int d, const int* other1,
                       const int* other2, const TowerElem& coeff) {
    auto emit = [&](int u, int v, const TowerElem& cf) {
        Tensor3::Key k{};
        int pos = 0;
        for (int s = 0; s < 3; ++s) {
            if (s == slot) {
                k[2 * s] = u;
                k[2 * s + 1] = v;
            } else {
                const int* src = pos == 0 ? other1 : other2;
                k[2 * s] = src[0];
                k[2 * s + 1] = src[1];
                ++pos;
            }
        }
        out.add_term(k, cf);
    };
    if (b == c) emit(a, d, coeff);
    if (d == a) emit(c, b, -coeff);
}

}  // namespace

Tensor3 cyb(const Tensor2& r) {
    Tensor3 out(r.n(), r.spec());
    for (const auto& [k1, c1] : r.terms()) {
        for (const auto& [k2, c2] : r.terms()) {
            TowerElem c = c1 * c2;
            int x1[2] = {k1[0], k1[1]}, y1[2] = {k1[2], k1[3]};
            int x2[2] = {k2[0], k2[1]}, y2[2] = {k2[2], k2[3]};
            // [r12, r13] = [x1, x2] ⊗ y1 ⊗ y2
            add_bracket_term3(out, 0, x1[0], x1[1], x2[0], x2[1], y1, y2, c);
            // [r12, r23] = x1 ⊗ [y1, x2] ⊗ y2
            add_bracket_term3(out, 1, y1[0], y1[1], x2[0], x2[1], x1, y2, c);
            // [r13, r23] = x1 ⊗ x2 ⊗ [y1, y2]
            add_bracket_term3(out, 2, y1[0], y1[1], y2[0], y2[1], x1, x2, c);
        }
    }
    return out;
}

namespace {

/// Adds coeff * ([E_ab, A] ⊗ E_cd) for slot 0 or (E_ab ⊗ [E_cd, A]) for slot 1.
/// [E_ab, A] = sum_q A_bq E_aq - sum_p A_pa E_pb.
void add_bracket_with_matrix(Tensor2& out, int slot, const Tensor2::Key& k, const MatK& A,
                             const TowerElem& coeff) {
    int a = k[2 * slot], b = k[2 * slot + 1];
    int oa = k[2 * (1 - slot)], ob = k[2 * (1 - slot) + 1];
    auto emit = [&](int u, int v, const TowerElem& cf) {
        if (slot == 0)
            out.add_term(u, v, oa, ob, cf);
        else
            out.add_term(oa, ob, u, v, cf);
    };
    int n = A.n();
    for (int q = 1; q <= n; ++q) {
        const TowerElem& abq = A.at(b, q);
        if (!abq.is_zero()) emit(a, q, coeff * abq);
    }
    for (int p = 1; p <= n; ++p) {
        const TowerElem& apa = A.at(p, a);
        if (!apa.is_zero()) emit(p, b, -(coeff * apa));
    }
}

}  // namespace

Tensor2 coboundary(const Tensor2& r, const MatK& a) {
    if (a.n() != r.n()) throw dim_mismatch("coboundary");
    if (!a.trace().is_zero()) throw bad_input("coboundary argument must be traceless");
    MatK al = a.spec() == r.spec() ? a : a.lifted_to(r.spec());
    Tensor2 out(r.n(), r.spec());
    for (const auto& [k, c] : r.terms()) {
        add_bracket_with_matrix(out, 0, k, al, c);
        add_bracket_with_matrix(out, 1, k, al, c);
    }
    return out;
}

Tensor2 apply_ad(const MatK& a, const Tensor2& t) { return -coboundary(t, a); }

Tensor2 ad_tensor(const MatK& x, const Tensor2& t) {
    if (x.n() != t.n()) throw dim_mismatch("ad_tensor");
    MatK xl = x.spec() == t.spec() ? x : x.lifted_to(t.spec());
    MatK xinv = xl.inverse();
    int n = t.n();
    Tensor2 out(n, t.spec());
    for (const auto& [k, c] : t.terms()) {
        // X E_ij X^{-1} has (p,q) entry X_{p,i} * Xinv_{j,q}
        for (int p = 1; p <= n; ++p) {
            TowerElem f1 = xl.at(p, k[0]);
            if (f1.is_zero()) continue;
            for (int q = 1; q <= n; ++q) {
                TowerElem g1 = f1 * xinv.at(k[1], q);
                if (g1.is_zero()) continue;
                for (int s = 1; s <= n; ++s) {
                    TowerElem f2 = xl.at(s, k[2]);
                    if (f2.is_zero()) continue;
                    for (int u = 1; u <= n; ++u) {
                        TowerElem g2 = f2 * xinv.at(k[3], u);
                        if (g2.is_zero()) continue;
                        out.add_term(p, q, s, u, c * g1 * g2);
                    }
                }
            }
        }
    }
    return out;
}

Tensor3 ad_tensor3(const MatK& x, const Tensor3& t) {
    if (x.n() != t.n()) throw dim_mismatch("ad_tensor3");
    MatK xl = x.spec() == t.spec() ? x : x.lifted_to(t.spec());
    MatK xinv = xl.inverse();
    int n = t.n();
    Tensor3 out(n, t.spec());
    for (const auto& [k, c] : t.terms()) {
        for (int p = 1; p <= n; ++p)
            for (int q = 1; q <= n; ++q) {
                TowerElem g1 = xl.at(p, k[0]) * xinv.at(k[1], q);
                if (g1.is_zero()) continue;
                for (int s = 1; s <= n; ++s)
                    for (int u = 1; u <= n; ++u) {
                        TowerElem g2 = xl.at(s, k[2]) * xinv.at(k[3], u);
                        if (g2.is_zero()) continue;
                        for (int v = 1; v <= n; ++v)
                            for (int w = 1; w <= n; ++w) {
                                TowerElem g3 = xl.at(v, k[4]) * xinv.at(k[5], w);
                                if (g3.is_zero()) continue;
                                out.add_term({p, q, s, u, v, w}, c * g1 * g2 * g3);
                            }
                    }
            }
    }
    return out;
}

Tensor2 outer(const MatK& u, const MatK& v) {
    if (u.n() != v.n()) throw dim_mismatch("outer");
    Tensor2 out(u.n(), u.spec());
    for (int i = 1; i <= u.n(); ++i)
        for (int j = 1; j <= u.n(); ++j) {
            const TowerElem& cu = u.at(i, j);
            if (cu.is_zero()) continue;
            for (int k = 1; k <= v.n(); ++k)
                for (int l = 1; l <= v.n(); ++l) {
                    const TowerElem& cv = v.at(k, l);
                    if (!cv.is_zero()) out.add_term(i, j, k, l, cu * cv);
                }
        }
    return out;
}

Tensor3 delta_on_first_leg(const Tensor2& r, const Tensor2& t) {
    int n = r.n();
    Tensor3 out(n, r.spec());
    // delta on traceless projections of matrix units; delta vanishes on the
    // center, so the termwise expansion agrees with delta ⊗ id
    std::map<std::pair<int, int>, Tensor2> cache;
    for (const auto& [k, c] : t.terms()) {
        auto key = std::make_pair(k[0], k[1]);
        auto it = cache.find(key);
        if (it == cache.end()) {
            MatK e(n, r.spec());
            e.set(k[0], k[1], TowerElem::one(r.spec()));
            if (k[0] == k[1]) {
                Rational shift(-1, n);
                for (int i = 1; i <= n; ++i)
                    e.set(i, i, e.at(i, i) + TowerElem(r.spec(), shift));
            }
            it = cache.emplace(key, coboundary(r, e)).first;
        }
        for (const auto& [dk, dc] : it->second.terms())
            out.add_term({dk[0], dk[1], dk[2], dk[3], k[2], k[3]}, dc * c);
    }
    return out;
}

}  // namespace bdcoh

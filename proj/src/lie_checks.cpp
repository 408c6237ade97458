#include "bdcoh/lie_checks.hpp"

#include "bdcoh/errors.hpp"

namespace bdcoh {

std::vector<MatK> sl_basis(int n, const TowerSpec& spec) {
    std::vector<MatK> out;
    TowerElem one = TowerElem::one(spec);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            MatK m(n, spec);
            m.set(i, j, one);
            out.push_back(m);
        }
    for (int i = 1; i < n; ++i) {
        MatK m(n, spec);
        m.set(i, i, one);
        m.set(i + 1, i + 1, -one);
        out.push_back(m);
    }
    return out;
}

CobracketReport check_cobracket_axioms(const Tensor2& r, int n) {
    CobracketReport rep;
    const TowerSpec& spec = r.spec();
    std::vector<MatK> basis = sl_basis(n, spec);

    std::vector<Tensor2> delta;
    delta.reserve(basis.size());
    for (const auto& a : basis) delta.push_back(coboundary(r, a));

    for (size_t p = 0; p < basis.size(); ++p) {
        for (size_t q = p + 1; q < basis.size(); ++q) {
            Tensor2 lhs = coboundary(r, bracket(basis[p], basis[q]));
            Tensor2 rhs = apply_ad(basis[p], delta[q]) - apply_ad(basis[q], delta[p]);
            if (lhs != rhs) {
                rep.cocycle_ok = false;
                rep.cocycle_failures++;
            }
        }
    }

    for (size_t p = 0; p < basis.size(); ++p) {
        Tensor3 t = delta_on_first_leg(r, delta[p]);
        Tensor3 c1 = t.cycled();
        Tensor3 sum = t + c1 + c1.cycled();
        if (!sum.is_zero()) {
            rep.cojacobi_ok = false;
            rep.cojacobi_failures++;
        }
    }

    Tensor2 sym = r + r.swapped();
    for (const auto& a : basis) {
        if (!apply_ad(a, sym).is_zero()) {
            rep.symmetric_invariant = false;
            break;
        }
    }
    if (rep.symmetric_invariant) {
        for (size_t p = 0; p < basis.size(); ++p) {
            if (!(delta[p] + delta[p].swapped()).is_zero()) {
                rep.skew_ok = false;
                rep.skew_failures++;
            }
        }
    }
    return rep;
}

MatK cartan_h(int n, int i, const TowerSpec& spec) {
    if (i < 1 || i >= n) throw dim_mismatch("cartan index");
    MatK m(n, spec);
    TowerElem one = TowerElem::one(spec);
    for (int j = 1; j <= i; ++j) m.set(j, j, one);
    m.set(i + 1, i + 1, TowerElem(spec, Rational(-i)));
    return m;
}

SuBasis su_basis(int n, const TowerSpec& spec) {
    if (!spec.has_conj()) throw spec_mismatch("su basis needs a conjugated generator");
    TowerElem sqrt_d = TowerElem::sqrt_gen(spec, spec.conj_index());
    SuBasis b;
    for (int i = 1; i < n; ++i) b.plus.push_back(cartan_h(n, i, spec) * sqrt_d);
    TowerElem one = TowerElem::one(spec);
    std::vector<std::pair<int, int>> roots;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) roots.emplace_back(i, j);
    for (auto [i, j] : roots) {
        MatK m(n, spec);
        m.set(i, j, one);
        m.set(j, i, -one);
        b.plus.push_back(m);
    }
    for (auto [i, j] : roots) {
        MatK m(n, spec);
        m.set(i, j, sqrt_d);
        m.set(j, i, sqrt_d);
        b.plus.push_back(m);
    }
    Rational half_n(1, 2 * n);
    for (int i = 1; i < n; ++i)
        b.minus.push_back(cartan_h(n, i, spec) * Rational(1, 2 * n * (i + i * i)));
    for (auto [i, j] : roots) {
        MatK m(n, spec);
        m.set(i, j, -(sqrt_d * half_n));
        b.minus.push_back(m);
    }
    for (auto [i, j] : roots) {
        MatK m(n, spec);
        m.set(i, j, TowerElem(spec, half_n));
        b.minus.push_back(m);
    }
    return b;
}

Rational manin_pairing(const MatK& u, const MatK& v, int n) {
    if (u.n() != n || v.n() != n) throw dim_mismatch("manin pairing");
    const TowerSpec& spec = u.spec();
    if (!spec.has_conj()) throw spec_mismatch("pairing needs a conjugated generator");
    TowerElem t = (u * v).trace();
    if (!t.in_conj_quadratic())
        throw spec_mismatch("pairing arguments must lie in Q(sqrt(d))");
    return Rational(2 * n) * t.coeff(1u << spec.conj_index());
}

ManinReport verify_manin_with_bases(int n, const TowerSpec& spec, const SuBasis& basis) {
    ManinReport rep;
    const auto& bp = basis.plus;
    const auto& bm = basis.minus;
    size_t m = bp.size();

    rep.plus_isotropic = true;
    rep.minus_isotropic = true;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i; j < m; ++j) {
            if (manin_pairing(bp[i], bp[j], n) != 0) rep.plus_isotropic = false;
            if (manin_pairing(bm[i], bm[j], n) != 0) rep.minus_isotropic = false;
        }

    rep.gram_identity = true;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            Rational want = i == j ? 1 : 0;
            if (manin_pairing(bp[i], bm[j], n) != want) rep.gram_identity = false;
        }

    // Gram of the joint basis (B+, B-); nondegenerate iff det != 0.
    {
        size_t dim = 2 * m;
        std::vector<MatK> joint;
        joint.reserve(dim);
        for (const auto& v : bp) joint.push_back(v);
        for (const auto& v : bm) joint.push_back(v);
        TowerSpec triv;
        MatK gram(static_cast<int>(dim), triv);
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < dim; ++j)
                gram.set(static_cast<int>(i) + 1, static_cast<int>(j) + 1,
                         TowerElem(triv, manin_pairing(joint[i], joint[j], n)));
        rep.nondegenerate = !gram.det().is_zero();
    }

    // Canonical element of the dual pair, rescaled by n, reconstructs
    // sqrt(d) * rdj(n) with the dual leg first.
    Tensor2 rec(n, spec);
    for (size_t i = 0; i < m; ++i) rec = rec + outer(bm[i], bp[i]);
    rec = rec * Rational(n);
    rep.reconstructed = rec;
    TowerElem sqrt_d = TowerElem::sqrt_gen(spec, spec.conj_index());
    rep.reconstruction_ok = (rec == rdj(n, spec) * sqrt_d);
    return rep;
}

ManinReport verify_manin_and_r(int n, const Rational& d) {
    if (is_square_rational(d)) throw bad_input("d must not be a square");
    TowerSpec spec = TowerSpec::make({d}, 0);
    return verify_manin_with_bases(n, spec, su_basis(n, spec));
}

bool coboundary_reality_on_su(const MatK& x) {
    const TowerSpec& spec = x.spec();
    int n = x.n();
    TowerElem sqrt_d = TowerElem::sqrt_gen(spec, spec.conj_index());
    Tensor2 s = ad_tensor(x, rdj(n, spec) * sqrt_d);
    SuBasis basis = su_basis(n, spec);
    for (const auto& a : basis.plus) {
        Tensor2 delta = coboundary(s, a);
        if (delta.star() != delta) return false;
    }
    return true;
}

}  // namespace bdcoh

#include "bdcoh/normsolve.hpp"

#include "bdcoh/errors.hpp"
#include "bdcoh/quaternion.hpp"

namespace bdcoh {

namespace {

/// sqrt(d) in the one-generator tower for the square-free part of d.
TowerSpec spec_for(const Rational& d) { return TowerSpec::make({d}, 0); }

TowerElem elem_of(const TowerSpec& spec, const Rational& a, const Rational& b) {
    // a + b sqrt(g) where g is the conjugated generator
    TowerElem out(spec, a);
    out.set_coeff(1u << spec.conj_index(), b);
    return out;
}

}  // namespace

bool norm_decision(const Rational& e, const Rational& d) {
    return is_norm_from_quadratic(e, d);
}

std::optional<std::pair<Rational, Rational>> represent_as_norm(const Rational& e,
                                                               const Rational& d,
                                                               const SolveBudget& budget) {
    if (e == 0) return std::nullopt;
    Int g = squarefree_part_rational(d);  // d = g * t^2, same norm set
    Rational t2 = d / Rational(g);
    Rational t(isqrt(num(t2)), isqrt(den(t2)));
    if (!norm_decision(e, d)) return std::nullopt;
    auto in_d_coords = [&](const Rational& x, const Rational& y) {
        // x^2 - g y^2 = x^2 - d (y/t)^2
        return std::make_pair(x, y / t);
    };
    if (is_square_rational(e)) {
        Int xn = isqrt(num(e)), xd = isqrt(den(e));
        return std::make_pair(Rational(xn, xd), Rational(0));
    }
    if (g == -1 && e > 0) {
        // x^2 + y^2 = p/q  <=>  (qx)^2 + (qy)^2 = pq
        Int p = num(e), q = den(e);
        auto ts = two_squares(p * q);
        if (ts) return in_d_coords(Rational(ts->first, q), Rational(ts->second, q));
    }
    // bounded search: common denominator q', integer X^2 - g Y^2 = e q'^2
    long long steps = 0;
    for (long h = 1; h <= budget.max_height; ++h) {
        for (long q1 = 1; q1 <= h; ++q1) {
            Rational target = e * q1 * q1;
            if (den(target) != 1) continue;
            Int tgt = num(target);
            Int ybound;
            if (g < 0) {
                ybound = isqrt(tgt / (-g)) + 1;
            } else {
                ybound = Int(h) * 16;
            }
            for (Int y = 0; y <= ybound; ++y) {
                if (++steps > budget.max_steps) return std::nullopt;
                Int x2 = tgt + g * y * y;
                if (x2 < 0) {
                    if (g < 0) break;
                    continue;
                }
                if (!is_square_int(x2)) continue;
                Int x = isqrt(x2);
                return in_d_coords(Rational(x, q1), Rational(y, q1));
            }
        }
    }
    return std::nullopt;
}

NormEqResult solve_norm_equation(const Rational& c, const Rational& e, const Rational& d,
                                 const SolveBudget& budget) {
    if (c == 0 || e == 0) throw nonzero_required("solve_norm_equation");
    if (is_square_rational(d)) throw bad_input("d must not be a square");
    NormEqResult res;
    TowerSpec spec = spec_for(d);
    Rational g(spec.gen(spec.conj_index()));

    // Local screen. The form <1,-d> ⟂ c<1,-d> represents e over Q iff the
    // 5-variable form with <-e> is isotropic; only the real place can fail.
    if (g < 0 && c > 0 && e < 0) {
        res.status = SolveStatus::no_solution;
        res.obstruction = "infinity";
        return res;
    }

    auto finish = [&](const Rational& ux, const Rational& uy, const Rational& vx,
                      const Rational& vy) {
        res.status = SolveStatus::found;
        res.u = elem_of(spec, ux, uy);
        res.v = elem_of(spec, vx, vy);
        if (res.u.norm_rat() + c * res.v.norm_rat() != e)
            throw bad_input("internal: norm witness failed re-verification");
    };

    // v = 0 shortcut
    if (auto w = represent_as_norm(e, g, budget)) {
        finish(w->first, w->second, 0, 0);
        return res;
    }
    // u = 0 shortcut
    if (auto w = represent_as_norm(e / c, g, budget)) {
        finish(0, 0, w->first, w->second);
        return res;
    }
    // ladder over v with a decided single-norm residual
    long long steps = 0;
    SolveBudget inner;
    inner.max_height = 24;
    inner.max_steps = 40000;
    for (long h = 1; h <= budget.max_height; ++h) {
        for (long q1 = 1; q1 <= h; ++q1) {
            for (long a = 0; a <= h; ++a) {
                for (long babs = 0; babs <= h; ++babs) {
                    for (int bs = 0; bs < (babs == 0 ? 1 : 2); ++bs) {
                        long b = bs == 0 ? babs : -babs;
                        if (a == 0 && b == 0) continue;
                        if (std::max({a, babs, q1}) != h) continue;  // new at this height only
                        if (++steps > budget.max_steps) {
                            res.status = SolveStatus::undecided;
                            return res;
                        }
                        Rational vx(a, q1), vy(b, q1);
                        Rational nv = vx * vx - g * vy * vy;
                        Rational residual = e - c * nv;
                        if (residual == 0) {
                            finish(0, 0, vx, vy);
                            return res;
                        }
                        if (!norm_decision(residual, g)) continue;
                        if (auto w = represent_as_norm(residual, g, inner)) {
                            finish(w->first, w->second, vx, vy);
                            return res;
                        }
                    }
                }
            }
        }
    }
    res.status = SolveStatus::undecided;
    return res;
}

}  // namespace bdcoh

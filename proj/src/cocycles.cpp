#include "bdcoh/cocycles.hpp"

#include <algorithm>
#include <numeric>

#include "bdcoh/errors.hpp"

namespace bdcoh {

DiagCheck is_diag_cocycle(const MatK& x) {
    DiagCheck out;
    MatK a = x.star() * x;
    int n = x.n();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i != j && !a.at(i, j).is_zero()) {
                out.bad_i = i;
                out.bad_j = j;
                out.reason = "off-diagonal entry at (" + std::to_string(i) + "," +
                             std::to_string(j) + ")";
                return out;
            }
        }
    for (int i = 1; i <= n; ++i) {
        if (a.at(i, i).is_zero()) {
            out.bad_i = out.bad_j = i;
            out.reason = "zero diagonal entry at " + std::to_string(i);
            return out;
        }
        if (a.at(i, i).conj() != a.at(i, i)) {
            out.bad_i = out.bad_j = i;
            out.reason = "diagonal entry not fixed by conjugation at " + std::to_string(i);
            return out;
        }
    }
    out.ok = true;
    out.cocycle = DiagCocycle{x, a};
    return out;
}

namespace {

std::optional<Rational> rational_entry(const TowerElem& e) {
    if (!e.is_rational()) return std::nullopt;
    return e.rat();
}

}  // namespace

TriBool cohomologous_diag(const DiagCocycle& a, const DiagCocycle& b, const Rational& d) {
    if (a.D.n() != b.D.n()) throw dim_mismatch("cohomologous_diag");
    for (int i = 1; i <= a.D.n(); ++i) {
        auto da = rational_entry(a.D.at(i, i));
        auto db = rational_entry(b.D.at(i, i));
        if (!da || !db) return TriBool::undecided;
        if (!is_norm_from_quadratic(*da / *db, d)) return TriBool::no;
    }
    return TriBool::yes;
}

TriBool is_norm_closed(const std::vector<Rational>& ds, const Rational& d) {
    Rational prod = 1;
    for (const Rational& v : ds) {
        if (v == 0) throw nonzero_required("is_norm_closed entries");
        prod *= v;
    }
    return is_norm_from_quadratic(prod, d) ? TriBool::yes : TriBool::no;
}

NestingResult nesting_witness(const std::vector<Rational>& ds, const Rational& d,
                              const SolveBudget& budget) {
    NestingResult res;
    size_t m = ds.size();
    if (m == 0) {
        res.status = SolveStatus::found;
        return res;
    }
    bool saw_undecided = false;

    auto try_order = [&](const std::vector<int>& perm) -> bool {
        std::vector<std::pair<TowerElem, TowerElem>> wit;
        Rational partial = 1;
        for (size_t i = 0; i < m; ++i) {
            NormEqResult st = solve_norm_equation(partial, ds[perm[i]], d, budget);
            if (st.status == SolveStatus::undecided) saw_undecided = true;
            if (st.status != SolveStatus::found) return false;
            wit.emplace_back(st.u, st.v);
            partial *= ds[perm[i]];
        }
        res.status = SolveStatus::found;
        res.sigma = perm;
        res.witnesses = std::move(wit);
        return true;
    };

    if (m <= 8) {
        std::vector<int> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            if (try_order(perm)) return res;
        } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
        // greedy: extend with the first remaining element whose stage solves
        std::vector<int> perm;
        std::vector<bool> used(m, false);
        Rational partial = 1;
        std::vector<std::pair<TowerElem, TowerElem>> wit;
        for (size_t step = 0; step < m; ++step) {
            bool advanced = false;
            for (size_t i = 0; i < m && !advanced; ++i) {
                if (used[i]) continue;
                NormEqResult st = solve_norm_equation(partial, ds[i], d, budget);
                if (st.status == SolveStatus::undecided) saw_undecided = true;
                if (st.status == SolveStatus::found) {
                    used[i] = true;
                    perm.push_back(static_cast<int>(i));
                    wit.emplace_back(st.u, st.v);
                    partial *= ds[i];
                    advanced = true;
                }
            }
            if (!advanced) break;
        }
        if (perm.size() == m) {
            res.status = SolveStatus::found;
            res.sigma = perm;
            res.witnesses = std::move(wit);
            return res;
        }
    }
    res.status = saw_undecided ? SolveStatus::undecided : SolveStatus::no_solution;
    res.detail = saw_undecided ? "solver budget exhausted on some stage" : "no permutation found";
    return res;
}

namespace {

/// Greedy partition of index set {0..n-1} into minimal norm-closed blocks:
/// repeatedly extract the first closed subset in size-then-lex order.
std::vector<std::vector<int>> minimal_closed_partition(const std::vector<Rational>& ds,
                                                       const Rational& d) {
    std::vector<int> remaining(ds.size());
    std::iota(remaining.begin(), remaining.end(), 0);
    std::vector<std::vector<int>> blocks;
    while (!remaining.empty()) {
        size_t r = remaining.size();
        std::vector<int> found;
        for (size_t size = 1; size <= r && found.empty(); ++size) {
            // combinations of `remaining` of this size, lexicographic
            std::vector<size_t> comb(size);
            std::iota(comb.begin(), comb.end(), 0);
            while (true) {
                Rational prod = 1;
                for (size_t c : comb) prod *= ds[remaining[c]];
                if (is_norm_from_quadratic(prod, d)) {
                    for (size_t c : comb) found.push_back(remaining[c]);
                    break;
                }
                // next combination
                size_t k = size;
                while (k > 0 && comb[k - 1] == r - size + k - 1) --k;
                if (k == 0) break;
                ++comb[k - 1];
                for (size_t j = k; j < size; ++j) comb[j] = comb[j - 1] + 1;
            }
        }
        if (found.empty())
            throw not_closed("remaining diagonal entries admit no norm-closed subset");
        std::vector<int> rest;
        for (int i : remaining)
            if (std::find(found.begin(), found.end(), i) == found.end()) rest.push_back(i);
        blocks.push_back(found);
        remaining = rest;
    }
    return blocks;
}

TowerElem from_pair(const TowerSpec& spec, const Rational& x, const Rational& y) {
    TowerElem e(spec, x);
    e.set_coeff(1u << spec.conj_index(), y);
    return e;
}

/// Rows x_1..x_m of the block's star matrix, following the inductive proof.
std::vector<std::vector<TowerElem>> build_block_rows(const std::vector<Rational>& dd,
                                                     const Rational& d, const TowerSpec& spec,
                                                     const std::vector<std::pair<TowerElem, TowerElem>>& wit,
                                                     const SolveBudget& budget) {
    size_t m = dd.size();
    const TowerElem zero = TowerElem::zero(spec);
    std::vector<std::vector<TowerElem>> rows;

    auto solve_single = [&](const Rational& target) -> TowerElem {
        auto w = represent_as_norm(target, d, budget);
        if (!w)
            throw nesting_undecided("no witness for a required single norm " +
                                    rational_to_string(target));
        return from_pair(spec, w->first, w->second);
    };

    if (m == 1) {
        // X = a_1 itself; the row of X* is its conjugate
        rows.push_back({solve_single(dd[0]).conj()});
        return rows;
    }

    TowerElem a1 = wit[0].first.lifted_to(spec);
    TowerElem a2 = wit[0].second.lifted_to(spec);
    if (a1.is_zero() || a2.is_zero())
        throw internal_zero("stage-1 witness has a zero coordinate on a minimal block");
    std::vector<TowerElem> x1(m, zero);
    x1[0] = a1;
    x1[1] = a2;
    rows.push_back(x1);

    if (m == 2) {
        // x2 = mu (-conj(a2), conj(a1)) with N(mu) = d2/d1
        TowerElem mu = solve_single(dd[1] / dd[0]);
        std::vector<TowerElem> x2(m, zero);
        x2[0] = -(mu * a2.conj());
        x2[1] = mu * a1.conj();
        rows.push_back(x2);
        return rows;
    }

    // x2 = (-mu1 conj(a2), mu1 conj(a1), a3, 0, ...) with N(mu1) d1 + N(a3) = d2
    TowerElem mu1 = wit[1].second.lifted_to(spec);
    TowerElem a3 = wit[1].first.lifted_to(spec);
    if (mu1.is_zero() || a3.is_zero())
        throw internal_zero("stage-2 witness has a zero coordinate on a minimal block");
    {
        std::vector<TowerElem> x2(m, zero);
        x2[0] = -(mu1 * a2.conj());
        x2[1] = mu1 * a1.conj();
        x2[2] = a3;
        rows.push_back(x2);
    }
    TowerElem lambda = mu1;  // s_2 = N(lambda) * d1

    for (size_t i = 2; i + 1 < m; ++i) {
        // build x_{i+1} from x_i (1-based row index i)
        const std::vector<TowerElem>& xi = rows[i - 1];
        Rational s_i = 0;
        for (size_t j = 0; j < i; ++j) s_i += xi[j].norm_rat();
        const TowerElem& tip = xi[i];  // x_i^{(i+1)}
        if (tip.is_zero()) throw internal_zero("row tip vanished; block was not minimal");
        TowerElem v = wit[i].second.lifted_to(spec);
        TowerElem u = wit[i].first.lifted_to(spec);
        if (v.is_zero() || u.is_zero())
            throw internal_zero("intermediate stage witness has a zero coordinate");
        TowerElem mu = v * tip / lambda;
        std::vector<TowerElem> xn(m, zero);
        for (size_t j = 0; j < i; ++j) xn[j] = mu * xi[j];
        xn[i] = -(mu * TowerElem(spec, s_i) / tip.conj());
        xn[i + 1] = u;
        rows.push_back(xn);
        lambda = mu * lambda / tip;
    }

    // final row: y = (x_{m-1}^{(1..m-1)}, -s_{m-1}/conj(x_{m-1}^{(m)})), x_m = mu_m y
    {
        const std::vector<TowerElem>& xp = rows[m - 2];
        Rational s = 0;
        for (size_t j = 0; j + 1 < m; ++j) s += xp[j].norm_rat();
        const TowerElem& tip = xp[m - 1];
        if (tip.is_zero()) throw internal_zero("final row tip vanished; block was not minimal");
        std::vector<TowerElem> y(m, zero);
        for (size_t j = 0; j + 1 < m; ++j) y[j] = xp[j];
        y[m - 1] = -(TowerElem(spec, s) / tip.conj());
        Rational yy = s + s * s / tip.norm_rat();
        TowerElem mu = solve_single(dd[m - 1] / yy);
        for (auto& c : y) c = mu * c;
        rows.push_back(y);
    }
    return rows;
}

}  // namespace

DiagCocycle construct_cocycle(const std::vector<Rational>& ds, const Rational& d,
                              const SolveBudget& budget) {
    if (ds.empty()) throw dim_mismatch("empty diagonal");
    for (const Rational& v : ds)
        if (v == 0) throw nonzero_required("diagonal entries");
    if (is_square_rational(d)) throw bad_input("d must not be a square");
    TowerSpec spec = TowerSpec::make({d}, 0);
    int n = static_cast<int>(ds.size());

    std::vector<std::vector<int>> blocks = minimal_closed_partition(ds, d);

    // pi maps assembled row position -> original index
    std::vector<int> pi;
    MatK y(n, spec);
    int offset = 0;
    for (const auto& block : blocks) {
        std::vector<Rational> vals;
        for (int i : block) vals.push_back(ds[i]);
        NestingResult nest = nesting_witness(vals, d, budget);
        if (nest.status == SolveStatus::no_solution)
            throw nesting_undecided("block admits no nesting permutation: " + nest.detail);
        if (nest.status == SolveStatus::undecided)
            throw nesting_undecided("block nesting undecided: " + nest.detail);
        std::vector<Rational> dd;
        for (int s : nest.sigma) {
            dd.push_back(vals[s]);
            pi.push_back(block[s]);
        }
        auto rows = build_block_rows(dd, d, spec, nest.witnesses, budget);
        size_t m = dd.size();
        // rows are the rows of (X_block)^*; X_block = rows^*
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j)
                y.set(offset + static_cast<int>(j) + 1, offset + static_cast<int>(i) + 1,
                      rows[i][j].conj());
        offset += static_cast<int>(m);
    }

    // undo the permutation: X = Y P with P_{k,l} = [pi(k) == l]
    MatK p(n, spec);
    for (int k = 1; k <= n; ++k) p.set(k, pi[k - 1] + 1, TowerElem::one(spec));
    MatK x = y * p;

    MatK want = MatK::diag_rational(n, spec, ds);
    if (x.star() * x != want)
        throw bad_input("internal: constructed matrix failed the star(X)X = D oracle");
    return DiagCocycle{x, want};
}

Rational norm_class_representative(const Rational& c, const Rational& d) {
    if (c == 0) throw nonzero_required("norm class of zero");
    for (Int k = 1;; ++k) {
        if (squarefree_part(k) != k) continue;
        for (int sign : {1, -1}) {
            Rational t(sign * k);
            if (is_norm_from_quadratic(c / t, d)) return t;
        }
    }
}

std::vector<Rational> norm_class_vector(const DiagCocycle& a, const Rational& d) {
    std::vector<Rational> out;
    for (int i = 1; i + 1 <= a.D.n(); ++i) {
        auto v = rational_entry(a.D.at(i, i));
        if (!v) throw error("undecided: diagonal entry is not rational");
        out.push_back(norm_class_representative(*v, d));
    }
    return out;
}

std::vector<QuatAlg> quaternion_tuple(const DiagCocycle& a, const Rational& d) {
    std::vector<QuatAlg> out;
    for (int i = 1; i <= a.D.n(); ++i) {
        auto v = rational_entry(a.D.at(i, i));
        if (!v) throw error("undecided: diagonal entry is not rational");
        out.push_back(QuatAlg{d, *v});
    }
    return out;
}

AntidiagResult is_antidiag_cocycle(const MatK& x, const BDMatrix& rbd) {
    AntidiagResult out;
    if (!s_compatibility(rbd.triple))
        throw triple_incompatible("triple is not s-compatible");
    if (!check_r0_reality(rbd.r0, RealityMode::basic))
        throw triple_incompatible("r0 fails the S-reality condition");
    int n = x.n();
    MatK a = x.star() * x;
    MatK s = build_S(n, x.spec());
    MatK dc = s * a;
    if (!dc.is_invertible_diagonal()) {
        out.reason = "star(X)X is not S times an invertible diagonal";
        return out;
    }
    for (int i = 1; i <= n; ++i) {
        if (dc.at(i, i).conj() != dc.at(n + 1 - i, n + 1 - i)) {
            out.reason = "conj(d_i) = d_{n+1-i} fails at i=" + std::to_string(i);
            return out;
        }
    }
    if (!rbd.triple.is_trivial()) {
        Tensor2 r = rbd.r();
        MatK dlift = dc;
        if (r.spec() != dc.spec()) {
            try {
                r = r.lifted_to(dc.spec());
            } catch (const spec_mismatch&) {
                dlift = dc.lifted_to(r.spec());
            }
        }
        if (!centralizes(dlift, r)) {
            out.reason = "diagonal part does not centralize r_BD";
            return out;
        }
    }
    out.accepted = true;
    out.D = dc;
    return out;
}

AntidiagNormalized normalize_antidiag(const MatK& x, const BDMatrix& rbd, const Rational& d) {
    if (!rbd.triple.is_trivial())
        throw triple_incompatible("normalization requires the trivial triple");
    AntidiagResult acc = is_antidiag_cocycle(x, rbd);
    if (!acc.accepted) throw bad_input("normalize_antidiag on a non-cocycle: " + acc.reason);
    int n = x.n();
    const TowerSpec& spec = x.spec();
    std::vector<TowerElem> diag;
    for (int i = 1; i <= n; ++i)
        diag.push_back(2 * i <= n ? acc.D.at(i, i).inv() : TowerElem::one(spec));
    MatK y = x * MatK::diag(diag);
    AntidiagNormalized out;
    out.X = y;
    MatK a2 = y.star() * y;
    out.D = build_S(n, spec) * a2;
    if (!out.D.is_invertible_diagonal())
        throw bad_input("internal: normalization left a non-diagonal part");
    out.middle = TowerElem::one(spec);
    if (n % 2 == 1) out.middle = out.D.at((n + 1) / 2, (n + 1) / 2);
    for (int i = 1; i <= n; ++i) {
        bool is_mid = (n % 2 == 1) && i == (n + 1) / 2;
        if (!is_mid && out.D.at(i, i) != TowerElem::one(spec))
            throw bad_input("internal: normalization did not reach S (entry " +
                            std::to_string(i) + ")");
    }
    if (out.middle.is_rational()) out.middle_class = norm_class_representative(out.middle.rat(), d);
    return out;
}

MatK antidiag_witness(int n, const TowerSpec& spec) {
    TowerElem i_elem = sqrt_of_rational(spec, -1);
    TowerElem sqrt2 = sqrt_of_rational(spec, 2);
    TowerElem one = TowerElem::one(spec);
    MatK y(n, spec);
    for (int i = 1; i <= n; ++i) {
        if (2 * i <= n + 1) {
            y.set(i, i, one);
            y.set(i, n + 1 - i, one);
        } else {
            y.set(i, n + 1 - i, i_elem);
            y.set(i, i, -i_elem);
        }
    }
    MatK x = y * sqrt2.inv();
    if (n % 2 == 1) {
        std::vector<TowerElem> diag(n, one);
        diag[(n - 1) / 2] = sqrt2;
        x = MatK::diag(diag) * y * sqrt2.inv();
    }
    return x;
}

TwistedResult is_twisted_cocycle(const MatK& q, int n, const Rational& d,
                                 const Rational& dprime) {
    TwistedResult out;
    if (q.n() != n) throw dim_mismatch("is_twisted_cocycle");
    if (!q.spec().has_conj() || q.spec().find_gen(d) != q.spec().conj_index())
        throw spec_mismatch("Q must live over K = Q(sqrt(d)) with its conjugation");
    if (is_square_rational(dprime) || is_square_rational(dprime * d))
        throw invalid_twist("sqrt(d') lies in K");
    auto [spec2, gen_idx] = q.spec().extended_with(dprime);
    (void)gen_idx;
    MatK ql = q.lifted_to(spec2);
    MatK j = build_J(n, dprime, spec2, d);
    MatK m = j.transpose() * ql.star() * ql * j;
    MatK dc = build_S(n, spec2) * m;
    if (!dc.is_invertible_diagonal()) {
        out.reason = "J^T star(Q) Q J is not S times an invertible diagonal";
        return out;
    }
    // the diagonal must lie in K(sqrt(d')), not just the ambient tower
    uint32_t allowed = 1u << spec2.conj_index();
    int dp_idx = spec2.find_gen(dprime);
    if (dp_idx >= 0) allowed |= 1u << dp_idx;
    for (int i = 1; i <= n; ++i)
        for (const auto& [mask, coeff] : dc.at(i, i).coeffs())
            if (mask & ~allowed) {
                out.reason = "diagonal entries leave K(sqrt(d'))";
                return out;
            }
    out.accepted = true;
    out.D = dc;
    return out;
}

LambdaClass lambda_classify(const TowerElem& lambda, const Rational& d) {
    if (lambda.is_zero()) throw nonzero_required("lambda");
    if (lambda.is_rational()) return LambdaClass::basic;
    const TowerSpec& spec = lambda.spec();
    if (spec.find_gen(d) >= 0) {
        TowerElem t = lambda / sqrt_of_rational(spec, d);
        if (t.is_rational()) return LambdaClass::quadratic;
    }
    TowerElem sq = lambda * lambda;
    if (!sq.is_rational())
        throw unclassifiable("lambda^2 is not in the base field");
    Rational dp = sq.rat();
    if (!is_square_rational(dp) && !is_square_rational(dp * d)) return LambdaClass::twisted;
    throw unclassifiable("lambda^2 generates K itself");
}

std::string lambda_class_name(LambdaClass c) {
    switch (c) {
        case LambdaClass::basic: return "basic";
        case LambdaClass::quadratic: return "quadratic";
        case LambdaClass::twisted: return "twisted";
    }
    return "?";
}

}  // namespace bdcoh

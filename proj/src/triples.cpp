#include "bdcoh/triples.hpp"

#include <algorithm>

#include "bdcoh/errors.hpp"

namespace bdcoh {

bool validate_triple(const AdmissibleTriple& t) {
    if (t.n < 2) return false;
    auto in_range = [&](int i) { return i >= 1 && i <= t.n - 1; };
    for (int i : t.gamma1)
        if (!in_range(i)) return false;
    for (int i : t.gamma2)
        if (!in_range(i)) return false;
    if (t.tau.size() != t.gamma1.size() || t.gamma1.size() != t.gamma2.size()) return false;
    std::set<int> image;
    for (const auto& [a, b] : t.tau) {
        if (!t.gamma1.count(a) || !t.gamma2.count(b)) return false;
        image.insert(b);
    }
    if (image != t.gamma2) return false;
    // isometry on the A chain: adjacency preserved both ways
    for (int a : t.gamma1)
        for (int b : t.gamma1) {
            if (a == b) continue;
            bool adj = std::abs(a - b) == 1;
            bool adj_img = std::abs(t.tau.at(a) - t.tau.at(b)) == 1;
            if (adj != adj_img) return false;
        }
    // nilpotency: every tau-orbit leaves Gamma1
    for (int start : t.gamma1) {
        int x = start;
        size_t steps = 0;
        while (t.gamma1.count(x)) {
            x = t.tau.at(x);
            if (++steps > t.gamma1.size() + 1) return false;
        }
    }
    return true;
}

bool s_compatibility(const AdmissibleTriple& t) {
    if (!validate_triple(t)) return false;
    auto s = [&](int i) { return t.n - i; };
    std::set<int> s1, s2;
    for (int i : t.gamma1) s1.insert(s(i));
    for (int i : t.gamma2) s2.insert(s(i));
    if (s1 != t.gamma1 || s2 != t.gamma2) return false;
    for (int i : t.gamma1)
        if (t.tau.at(s(i)) != s(t.tau.at(i))) return false;
    return true;
}

std::vector<Root> positive_roots(int n) {
    std::vector<Root> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
    return out;
}

std::optional<Root> tau_on_root(const AdmissibleTriple& t, const Root& r) {
    std::vector<int> image;
    for (int k = r.i; k < r.j; ++k) {
        if (!t.gamma1.count(k)) return std::nullopt;
        image.push_back(t.tau.at(k));
    }
    std::sort(image.begin(), image.end());
    for (size_t m = 1; m < image.size(); ++m)
        if (image[m] != image[m - 1] + 1)
            throw invalid_triple("tau image of an interval is not an interval");
    return Root{image.front(), image.back() + 1};
}

Tensor2 build_r1(const AdmissibleTriple& t, const TowerSpec& spec) {
    if (!validate_triple(t)) throw invalid_triple("build_r1");
    int n = t.n;
    Tensor2 out(n, spec);
    TowerElem one = TowerElem::one(spec);
    for (const Root& r : positive_roots(n)) out.add_term(r.i, r.j, r.j, r.i, one);
    for (const Root& alpha : positive_roots(n)) {
        std::optional<Root> img = tau_on_root(t, alpha);
        while (img) {
            // e_alpha ∧ e_{-tau^k(alpha)}
            out.add_term(alpha.i, alpha.j, img->j, img->i, one);
            out.add_term(img->j, img->i, alpha.i, alpha.j, -one);
            img = tau_on_root(t, *img);
        }
    }
    return out;
}

namespace {

/// Coordinates of a traceless diagonal (given by its n diagonal entries) in
/// the simple-coroot basis b_m = E_mm - E_{m+1,m+1}: partial sums.
std::vector<Rational> to_coroot_coords(const std::vector<Rational>& diag) {
    int n = static_cast<int>(diag.size());
    std::vector<Rational> c(n - 1);
    Rational acc = 0;
    for (int m = 0; m < n - 1; ++m) {
        acc += diag[m];
        c[m] = acc;
    }
    acc += diag[n - 1];
    if (acc != 0) throw bad_input("internal: diagonal not traceless");
    return c;
}

/// alpha_k evaluated on E_ii.
Rational simple_root_on_unit(int k, int i) {
    if (i == k) return 1;
    if (i == k + 1) return -1;
    return 0;
}

/// (alpha_{ktau} ⊗ Id + Id ⊗ alpha_k)(t) for a Cartan-supported rational
/// tensor, in coroot coordinates.
std::vector<Rational> root_constraint(const Tensor2& t, int ktau, int k, int n) {
    std::vector<Rational> diag(n, 0);
    for (const auto& [key, c] : t.terms()) {
        if (key[0] != key[1] || key[2] != key[3]) throw bad_input("r0 must be Cartan-supported");
        Rational cr = c.rat();
        diag[key[2] - 1] += cr * simple_root_on_unit(ktau, key[0]);
        diag[key[0] - 1] += cr * simple_root_on_unit(k, key[2]);
    }
    return to_coroot_coords(diag);
}

/// Tensor b_k ⊗ b_l - b_l ⊗ b_k on the coroot generators (1-based).
Tensor2 skew_basis_tensor(int n, int k, int l, const TowerSpec& spec) {
    Tensor2 out(n, spec);
    TowerElem one = TowerElem::one(spec);
    auto add_bb = [&](int a, int b, const TowerElem& c) {
        // (E_aa - E_{a+1,a+1}) ⊗ (E_bb - E_{b+1,b+1})
        out.add_term(a, a, b, b, c);
        out.add_term(a, a, b + 1, b + 1, -c);
        out.add_term(a + 1, a + 1, b, b, -c);
        out.add_term(a + 1, a + 1, b + 1, b + 1, c);
    };
    add_bb(k, l, one);
    add_bb(l, k, -one);
    return out;
}

}  // namespace

SolveR0Result solve_r0(const AdmissibleTriple& t, int n, const TowerSpec& spec) {
    if (!validate_triple(t)) throw invalid_triple("solve_r0");
    TowerSpec triv;
    Tensor2 base = casimir_cartan(n, triv) * Rational(1, 2);

    // unknowns: skew coordinates c_{kl}, 1 <= k < l <= n-1
    std::vector<std::pair<int, int>> vars;
    for (int k = 1; k <= n - 1; ++k)
        for (int l = k + 1; l <= n - 1; ++l) vars.emplace_back(k, l);
    size_t nv = vars.size();

    std::vector<Tensor2> var_tensors;
    var_tensors.reserve(nv);
    for (auto [k, l] : vars) var_tensors.push_back(skew_basis_tensor(n, k, l, triv));

    // rows: for each alpha in Gamma1, n-1 scalar equations
    std::vector<std::vector<Rational>> rows;  // nv coefficients + rhs
    for (int k : t.gamma1) {
        int ktau = t.tau.at(k);
        std::vector<Rational> rhs = root_constraint(base, ktau, k, n);
        std::vector<std::vector<Rational>> cols;
        for (const Tensor2& vt : var_tensors) cols.push_back(root_constraint(vt, ktau, k, n));
        for (int m = 0; m < n - 1; ++m) {
            std::vector<Rational> row(nv + 1, 0);
            for (size_t v = 0; v < nv; ++v) row[v] = cols[v][m];
            row[nv] = -rhs[m];
            rows.push_back(row);
        }
    }

    // RREF over Q
    size_t nr = rows.size();
    std::vector<int> pivot_col(nr, -1);
    size_t rank = 0;
    for (size_t col = 0; col < nv && rank < nr; ++col) {
        size_t piv = rank;
        while (piv < nr && rows[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(rows[rank], rows[piv]);
        Rational p = rows[rank][col];
        for (size_t j = col; j <= nv; ++j) rows[rank][j] /= p;
        for (size_t i = 0; i < nr; ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            Rational f = rows[i][col];
            for (size_t j = col; j <= nv; ++j) rows[i][j] -= f * rows[rank][j];
        }
        pivot_col[rank] = static_cast<int>(col);
        ++rank;
    }
    for (size_t i = rank; i < nr; ++i)
        if (rows[i][nv] != 0) throw invalid_triple("r0 system infeasible");

    std::vector<bool> is_pivot(nv, false);
    for (size_t i = 0; i < rank; ++i) is_pivot[pivot_col[i]] = true;

    std::vector<Rational> particular(nv, 0);
    for (size_t i = 0; i < rank; ++i) particular[pivot_col[i]] = rows[i][nv];

    std::vector<std::vector<Rational>> hom;
    for (size_t f = 0; f < nv; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> h(nv, 0);
        h[f] = 1;
        for (size_t i = 0; i < rank; ++i) h[pivot_col[i]] = -rows[i][f];
        hom.push_back(h);
    }

    SolveR0Result out;
    Tensor2 part = base;
    for (size_t v = 0; v < nv; ++v)
        if (particular[v] != 0) part = part + var_tensors[v] * particular[v];
    out.particular = part.lifted_to(spec);
    for (const auto& h : hom) {
        Tensor2 ht(n, triv);
        for (size_t v = 0; v < nv; ++v)
            if (h[v] != 0) ht = ht + var_tensors[v] * h[v];
        out.homogeneous.push_back(ht.lifted_to(spec));
    }
    return out;
}

bool r0_satisfies_constraints(const Tensor2& r0, const AdmissibleTriple& t) {
    int n = t.n;
    if (r0 + r0.swapped() != casimir_cartan(n, r0.spec())) return false;
    // evaluate over Q; coefficients must be rational for the functional check
    Tensor2 rq(n, TowerSpec{});
    for (const auto& [k, c] : r0.terms()) {
        if (!c.is_rational()) return false;
        rq.add_term(k, TowerElem(TowerSpec{}, c.rat()));
    }
    for (int k : t.gamma1) {
        std::vector<Rational> coords = root_constraint(rq, t.tau.at(k), k, n);
        for (const Rational& c : coords)
            if (c != 0) return false;
    }
    return true;
}

BDMatrix build_rbd(const AdmissibleTriple& t, const std::vector<Rational>& skew_params,
                   const TowerSpec& spec) {
    SolveR0Result sol = solve_r0(t, t.n, spec);
    if (skew_params.size() != sol.homogeneous.size())
        throw bad_input("expected " + std::to_string(sol.homogeneous.size()) +
                        " skew parameters");
    Tensor2 r0 = sol.particular;
    for (size_t i = 0; i < skew_params.size(); ++i)
        if (skew_params[i] != 0) r0 = r0 + sol.homogeneous[i] * skew_params[i];
    BDMatrix bd{t, r0, build_r1(t, spec)};
    if (!cyb(bd.r()).is_zero()) throw cyb_failure("build_rbd produced a non-solution");
    return bd;
}

Tensor2 s_symmetrize_r0(const Tensor2& r0) {
    MatK s = build_S(r0.n(), r0.spec());
    return (r0 + ad_tensor(s, r0.conj_coeffs())) * Rational(1, 2);
}

bool centralizes(const MatK& m, const Tensor2& r) { return ad_tensor(m, r) == r; }

bool check_r0_reality(const Tensor2& r0, RealityMode mode) {
    for (const auto& [k, c] : r0.terms())
        if (k[0] != k[1] || k[2] != k[3]) throw bad_input("r0 must be Cartan-supported");
    if (mode == RealityMode::quadratic) {
        Tensor2 rs = r0 - casimir_cartan(r0.n(), r0.spec()) * Rational(1, 2);
        return rs.conj_coeffs() == -rs;
    }
    MatK s = build_S(r0.n(), r0.spec());
    return r0.conj_coeffs() == ad_tensor(s, r0);
}

std::vector<AdmissibleTriple> enumerate_admissible_triples(int n) {
    std::vector<AdmissibleTriple> out;
    int m = n - 1;
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i + 1;
    for (uint32_t m1 = 0; m1 < (1u << m); ++m1) {
        std::vector<int> g1;
        for (int i = 0; i < m; ++i)
            if (m1 & (1u << i)) g1.push_back(i + 1);
        for (uint32_t m2 = 0; m2 < (1u << m); ++m2) {
            std::vector<int> g2;
            for (int i = 0; i < m; ++i)
                if (m2 & (1u << i)) g2.push_back(i + 1);
            if (g1.size() != g2.size()) continue;
            std::vector<int> perm = g2;
            std::sort(perm.begin(), perm.end());
            do {
                AdmissibleTriple t;
                t.n = n;
                t.gamma1 = std::set<int>(g1.begin(), g1.end());
                t.gamma2 = std::set<int>(g2.begin(), g2.end());
                for (size_t i = 0; i < g1.size(); ++i) t.tau[g1[i]] = perm[i];
                if (validate_triple(t)) out.push_back(t);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    return out;
}

}  // namespace bdcoh

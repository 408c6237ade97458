#include "bdcoh/matrix.hpp"

#include <sstream>

#include "bdcoh/errors.hpp"

namespace bdcoh {

MatK::MatK(int n, const TowerSpec& spec) : n_(n), spec_(spec) {
    if (n < 0) throw dim_mismatch("negative dimension");
    e_.assign(static_cast<size_t>(n) * n, TowerElem::zero(spec));
}

MatK MatK::identity(int n, const TowerSpec& spec) {
    MatK m(n, spec);
    for (int i = 1; i <= n; ++i) m.set(i, i, TowerElem::one(spec));
    return m;
}

MatK MatK::diag(const std::vector<TowerElem>& entries) {
    if (entries.empty()) throw dim_mismatch("empty diagonal");
    MatK m(static_cast<int>(entries.size()), entries.front().spec());
    for (size_t i = 0; i < entries.size(); ++i) m.set(static_cast<int>(i) + 1, static_cast<int>(i) + 1, entries[i]);
    return m;
}

MatK MatK::diag_rational(int n, const TowerSpec& spec, const std::vector<Rational>& entries) {
    if (static_cast<int>(entries.size()) != n) throw dim_mismatch("diagonal length");
    MatK m(n, spec);
    for (int i = 1; i <= n; ++i) m.set(i, i, TowerElem(spec, entries[i - 1]));
    return m;
}

void MatK::set(int i, int j, const TowerElem& v) {
    if (v.spec() != spec_) throw spec_mismatch("matrix entry spec");
    e_[idx(i, j)] = v;
}

MatK MatK::operator+(const MatK& o) const {
    if (n_ != o.n_) throw dim_mismatch("add");
    MatK out(n_, spec_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] + o.e_[k];
    return out;
}

MatK MatK::operator-(const MatK& o) const {
    if (n_ != o.n_) throw dim_mismatch("sub");
    MatK out(n_, spec_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] - o.e_[k];
    return out;
}

MatK MatK::operator*(const MatK& o) const {
    if (n_ != o.n_) throw dim_mismatch("mul");
    MatK out(n_, spec_);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) {
            TowerElem s = TowerElem::zero(spec_);
            for (int k = 1; k <= n_; ++k) s += at(i, k) * o.at(k, j);
            out.e_[out.idx(i, j)] = s;
        }
    return out;
}

MatK MatK::operator*(const TowerElem& c) const {
    MatK out(n_, spec_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] * c;
    return out;
}

MatK MatK::operator*(const Rational& c) const {
    MatK out(n_, spec_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] * c;
    return out;
}

MatK MatK::operator-() const {
    MatK out(n_, spec_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = -e_[k];
    return out;
}

MatK MatK::transpose() const {
    MatK out(n_, spec_);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) out.e_[out.idx(j, i)] = at(i, j);
    return out;
}

MatK MatK::star() const {
    MatK out(n_, spec_);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) out.e_[out.idx(j, i)] = at(i, j).conj();
    return out;
}

MatK MatK::conj_entries() const {
    MatK out(n_, spec_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k].conj();
    return out;
}

TowerElem MatK::trace() const {
    TowerElem t = TowerElem::zero(spec_);
    for (int i = 1; i <= n_; ++i) t += at(i, i);
    return t;
}

TowerElem MatK::det() const {
    if (n_ == 0) return TowerElem::one(spec_);
    std::vector<TowerElem> m = e_;
    auto a = [&](int i, int j) -> TowerElem& { return m[static_cast<size_t>(i) * n_ + j]; };
    int sign = 1;
    TowerElem prev = TowerElem::one(spec_);
    for (int k = 0; k < n_ - 1; ++k) {
        if (a(k, k).is_zero()) {
            int r = k + 1;
            while (r < n_ && a(r, k).is_zero()) ++r;
            if (r == n_) return TowerElem::zero(spec_);
            for (int j = 0; j < n_; ++j) std::swap(a(k, j), a(r, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n_; ++i)
            for (int j = k + 1; j < n_; ++j)
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    TowerElem d = a(n_ - 1, n_ - 1);
    return sign == 1 ? d : -d;
}

TowerElem MatK::minor_det(int skip_i, int skip_j) const {
    MatK m(n_ - 1, spec_);
    int r = 1;
    for (int i = 1; i <= n_; ++i) {
        if (i == skip_i) continue;
        int c = 1;
        for (int j = 1; j <= n_; ++j) {
            if (j == skip_j) continue;
            m.set(r, c, at(i, j));
            ++c;
        }
        ++r;
    }
    return m.det();
}

MatK MatK::inverse() const {
    if (n_ == 0) throw dim_mismatch("inverse of empty matrix");
    if (n_ <= 4) {
        TowerElem d = det();
        if (d.is_zero()) throw singular_matrix();
        MatK adj(n_, spec_);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) {
                TowerElem c = n_ == 1 ? TowerElem::one(spec_) : minor_det(j, i);
                if ((i + j) % 2) c = -c;
                adj.set(i, j, c / d);
            }
        return adj;
    }
    // Gauss-Jordan over the field
    MatK m = *this;
    MatK inv = identity(n_, spec_);
    for (int col = 1; col <= n_; ++col) {
        int piv = col;
        while (piv <= n_ && m.at(piv, col).is_zero()) ++piv;
        if (piv > n_) throw singular_matrix();
        if (piv != col)
            for (int j = 1; j <= n_; ++j) {
                TowerElem t = m.at(col, j);
                m.set(col, j, m.at(piv, j));
                m.set(piv, j, t);
                t = inv.at(col, j);
                inv.set(col, j, inv.at(piv, j));
                inv.set(piv, j, t);
            }
        TowerElem p = m.at(col, col).inv();
        for (int j = 1; j <= n_; ++j) {
            m.set(col, j, m.at(col, j) * p);
            inv.set(col, j, inv.at(col, j) * p);
        }
        for (int i = 1; i <= n_; ++i) {
            if (i == col || m.at(i, col).is_zero()) continue;
            TowerElem f = m.at(i, col);
            for (int j = 1; j <= n_; ++j) {
                m.set(i, j, m.at(i, j) - f * m.at(col, j));
                inv.set(i, j, inv.at(i, j) - f * inv.at(col, j));
            }
        }
    }
    return inv;
}

bool MatK::is_zero() const {
    for (const auto& v : e_)
        if (!v.is_zero()) return false;
    return true;
}

bool MatK::is_diagonal() const {
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

bool MatK::is_identity() const {
    const TowerElem one = TowerElem::one(spec_);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) {
            if (i == j && at(i, j) != one) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

bool MatK::is_invertible_diagonal() const {
    if (!is_diagonal()) return false;
    for (int i = 1; i <= n_; ++i)
        if (at(i, i).is_zero()) return false;
    return true;
}

MatK MatK::lifted_to(const TowerSpec& bigger) const {
    MatK out(n_, bigger);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) out.set(i, j, at(i, j).lifted_to(bigger));
    return out;
}

std::string MatK::to_string() const {
    std::ostringstream os;
    for (int i = 1; i <= n_; ++i) {
        os << "[ ";
        for (int j = 1; j <= n_; ++j) os << at(i, j).to_string() << (j < n_ ? ", " : " ");
        os << "]\n";
    }
    return os.str();
}

MatK bracket(const MatK& a, const MatK& b) { return a * b - b * a; }

bool is_unitary(const MatK& x) { return (x.star() * x).is_identity(); }

MatK build_S(int n, const TowerSpec& spec) {
    if (n < 1) throw dim_mismatch("S needs n >= 1");
    MatK s(n, spec);
    for (int i = 1; i <= n; ++i) s.set(i, n + 1 - i, TowerElem::one(spec));
    return s;
}

MatK build_J(int n, const Rational& dprime, const TowerSpec& spec, const Rational& d) {
    if (n < 1) throw dim_mismatch("J needs n >= 1");
    if (dprime == 0 || is_square_rational(dprime) || is_square_rational(dprime * d))
        throw invalid_twist("sqrt(d') lies in K");
    TowerElem sqrt_dp = sqrt_of_rational(spec, dprime);
    TowerElem one = TowerElem::one(spec);
    MatK j(n, spec);
    for (int i = 1; i <= n; ++i) {
        if (2 * i <= n + 1) {
            j.set(i, i, one);
            j.set(i, n + 1 - i, one);
        } else {
            j.set(i, n + 1 - i, sqrt_dp);
            j.set(i, i, -sqrt_dp);
        }
    }
    return j;
}

}  // namespace bdcoh

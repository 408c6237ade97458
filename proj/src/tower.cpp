#include "bdcoh/tower.hpp"

#include <sstream>

#include "bdcoh/errors.hpp"
#include "bdcoh/quaternion.hpp"

namespace bdcoh {

TowerSpec TowerSpec::make(const std::vector<Rational>& gens, int conj_index) {
    TowerSpec s;
    for (const auto& g : gens) {
        if (g == 0) throw spec_mismatch("zero generator");
        Int sf = squarefree_part_rational(g);
        if (sf == 1) throw spec_mismatch("generator " + rational_to_string(g) + " is a square");
        // reject a generator dependent on the earlier ones modulo squares
        size_t k = s.gens_.size();
        for (uint32_t mask = 0; mask < (1u << k); ++mask) {
            Int prod = sf;
            for (size_t i = 0; i < k; ++i)
                if (mask & (1u << i)) prod *= s.gens_[i];
            if (squarefree_part(prod) == 1)
                throw spec_mismatch("generator " + rational_to_string(g) +
                                    " is dependent on earlier generators");
        }
        s.gens_.push_back(sf);
    }
    if (conj_index < -1 || conj_index >= static_cast<int>(s.gens_.size()))
        throw spec_mismatch("conjugation index out of range");
    s.conj_index_ = conj_index;
    return s;
}

std::pair<TowerSpec, int> TowerSpec::extended_with(const Rational& g) const {
    int idx = find_gen(g);
    if (idx >= 0) return {*this, idx};
    TowerSpec out = *this;
    Int sf = squarefree_part_rational(g);
    if (sf == 1 || sf == 0) throw spec_mismatch("cannot extend by a square or zero");
    size_t k = gens_.size();
    for (uint32_t mask = 1; mask < (1u << k); ++mask) {
        Int prod = sf;
        for (size_t i = 0; i < k; ++i)
            if (mask & (1u << i)) prod *= gens_[i];
        if (squarefree_part(prod) == 1)
            throw spec_mismatch("extension generator dependent on existing tower");
    }
    out.gens_.push_back(sf);
    return {out, static_cast<int>(k)};
}

int TowerSpec::find_gen(const Rational& g) const {
    Int sf = squarefree_part_rational(g);
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i] == sf) return static_cast<int>(i);
    return -1;
}

std::string TowerSpec::to_string() const {
    std::ostringstream os;
    os << "Q(";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ",";
        os << "sqrt(" << gens_[i].str() << ")";
    }
    os << ")";
    if (conj_index_ >= 0) os << " conj@" << conj_index_;
    return os.str();
}

TowerElem::TowerElem(const TowerSpec& spec, const Rational& q) : spec_(spec) {
    if (q != 0) coeffs_[0] = q;
}

TowerElem TowerElem::sqrt_gen(const TowerSpec& spec, int gen_index) {
    if (gen_index < 0 || gen_index >= static_cast<int>(spec.size()))
        throw spec_mismatch("sqrt_gen index out of range");
    TowerElem e(spec);
    e.coeffs_[1u << gen_index] = 1;
    return e;
}

bool TowerElem::is_rational() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

Rational TowerElem::rat() const {
    if (coeffs_.empty()) return 0;
    if (!is_rational()) throw bad_input("element is not rational: " + to_string());
    return coeffs_.begin()->second;
}

Rational TowerElem::coeff(uint32_t mask) const {
    auto it = coeffs_.find(mask);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void TowerElem::set_coeff(uint32_t mask, const Rational& c) {
    if (mask >= (1u << spec_.size())) throw spec_mismatch("subset mask out of range");
    if (c == 0)
        coeffs_.erase(mask);
    else
        coeffs_[mask] = c;
}

bool TowerElem::in_fixed_field() const {
    if (!spec_.has_conj()) return true;
    uint32_t bit = 1u << spec_.conj_index();
    for (const auto& [m, c] : coeffs_)
        if (m & bit) return false;
    return true;
}

bool TowerElem::in_conj_quadratic() const {
    uint32_t bit = spec_.has_conj() ? (1u << spec_.conj_index()) : 0;
    for (const auto& [m, c] : coeffs_)
        if (m & ~bit) return false;
    return true;
}

void TowerElem::check_same_spec(const TowerElem& o) const {
    if (spec_ != o.spec_) throw spec_mismatch(spec_.to_string() + " vs " + o.spec_.to_string());
}

TowerElem TowerElem::operator-() const {
    TowerElem out(spec_);
    for (const auto& [m, c] : coeffs_) out.coeffs_[m] = -c;
    return out;
}

TowerElem& TowerElem::operator+=(const TowerElem& o) {
    check_same_spec(o);
    for (const auto& [m, c] : o.coeffs_) {
        auto it = coeffs_.find(m);
        if (it == coeffs_.end()) {
            coeffs_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

TowerElem& TowerElem::operator-=(const TowerElem& o) { return *this += -o; }

TowerElem operator*(const TowerElem& a, const TowerElem& b) {
    a.check_same_spec(b);
    TowerElem out(a.spec_);
    for (const auto& [ma, ca] : a.coeffs_) {
        for (const auto& [mb, cb] : b.coeffs_) {
            uint32_t common = ma & mb;
            Rational c = ca * cb;
            for (size_t i = 0; i < a.spec_.size(); ++i)
                if (common & (1u << i)) c *= Rational(a.spec_.gen(i));
            uint32_t m = ma ^ mb;
            auto it = out.coeffs_.find(m);
            if (it == out.coeffs_.end()) {
                if (c != 0) out.coeffs_[m] = c;
            } else {
                it->second += c;
                if (it->second == 0) out.coeffs_.erase(it);
            }
        }
    }
    return out;
}

TowerElem TowerElem::operator*(const Rational& c) const {
    TowerElem out(spec_);
    if (c == 0) return out;
    for (const auto& [m, v] : coeffs_) out.coeffs_[m] = v * c;
    return out;
}

TowerElem TowerElem::inv() const {
    if (is_zero()) throw division_by_zero();
    if (is_rational()) return TowerElem(spec_, 1 / rat());
    // rationalize over the highest generator present, then recurse
    uint32_t support = 0;
    for (const auto& [m, c] : coeffs_) support |= m;
    int g = 31;
    while (!(support & (1u << g))) --g;
    uint32_t bit = 1u << g;
    TowerElem w(spec_);  // x - sqrt(a_g) y  for this = x + sqrt(a_g) y
    for (const auto& [m, c] : coeffs_) w.coeffs_[m] = (m & bit) ? -c : c;
    TowerElem m2 = *this * w;  // free of generator g
    return w * m2.inv();
}

TowerElem operator/(const TowerElem& a, const TowerElem& b) {
    if (b.is_zero()) throw division_by_zero();
    return a * b.inv();
}

bool TowerElem::operator==(const TowerElem& o) const {
    return spec_ == o.spec_ && coeffs_ == o.coeffs_;
}

TowerElem TowerElem::conj() const {
    if (!spec_.has_conj()) return *this;
    uint32_t bit = 1u << spec_.conj_index();
    TowerElem out(spec_);
    for (const auto& [m, c] : coeffs_) out.coeffs_[m] = (m & bit) ? -c : c;
    return out;
}

TowerElem TowerElem::norm() const { return conj() * *this; }

Rational TowerElem::norm_rat() const {
    TowerElem n = norm();
    if (!n.is_rational()) throw bad_input("norm is not rational: " + n.to_string());
    return n.rat();
}

TowerElem TowerElem::lifted_to(const TowerSpec& bigger) const {
    if (spec_ == bigger) return *this;
    std::vector<int> remap(spec_.size());
    for (size_t i = 0; i < spec_.size(); ++i) {
        int j = bigger.find_gen(Rational(spec_.gen(i)));
        if (j < 0) throw spec_mismatch("generator missing in target tower");
        remap[i] = j;
    }
    if (spec_.has_conj()) {
        if (!bigger.has_conj() || bigger.conj_index() != remap[spec_.conj_index()])
            throw spec_mismatch("conjugation does not match target tower");
    }
    TowerElem out(bigger);
    for (const auto& [m, c] : coeffs_) {
        uint32_t nm = 0;
        for (size_t i = 0; i < spec_.size(); ++i)
            if (m & (1u << i)) nm |= 1u << remap[i];
        out.coeffs_[nm] = c;
    }
    return out;
}

std::string TowerElem::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << rational_to_string(c);
        for (size_t i = 0; i < spec_.size(); ++i)
            if (m & (1u << i)) os << "*sqrt(" << spec_.gen(i).str() << ")";
    }
    return os.str();
}

TowerElem sqrt_of_rational(const TowerSpec& spec, const Rational& r) {
    if (r == 0) return TowerElem::zero(spec);
    Int sf = squarefree_part_rational(r);
    // r = sf * t^2 with t rational > 0: sqrt(r) = t*sqrt(sf)
    Rational t2 = r / Rational(sf);
    Int tn = isqrt(num(t2)), td = isqrt(den(t2));
    Rational t(tn, td);
    if (t * t != t2) throw bad_input("internal: square part extraction failed");
    if (sf == 1) return TowerElem(spec, t);
    int idx = spec.find_gen(Rational(sf));
    if (idx < 0)
        throw spec_mismatch("sqrt(" + rational_to_string(r) + ") does not lie in " +
                            spec.to_string());
    return TowerElem::sqrt_gen(spec, idx) * t;
}

bool is_norm_from_quadratic(const Rational& c, const Rational& d) {
    if (c == 0) throw nonzero_required("norm membership of zero");
    if (is_square_rational(d)) throw bad_input("d must not be a square");
    // c in N(Q(sqrt(d))*) iff the quaternion algebra (d, c) splits.
    return is_split(QuatAlg{d, c});
}

}  // namespace bdcoh

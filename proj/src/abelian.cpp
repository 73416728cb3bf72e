#include "kummercalc/abelian.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace kummer {

bool FiniteAbelianGroup::is_invariant_chain(const std::vector<Int>& factors) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] < 2) return false;
        if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0) return false;
    }
    return true;
}

FiniteAbelianGroup FiniteAbelianGroup::from_invariant_factors(const std::vector<Int>& factors) {
    if (!is_invariant_chain(factors))
        throw DomainError("invariant factors must be >= 2 and form a divisibility chain");
    FiniteAbelianGroup g;
    g.factors_ = factors;
    return g;
}

FiniteAbelianGroup FiniteAbelianGroup::from_moduli(const std::vector<Int>& moduli) {
    // primary decomposition, then pair the largest prime powers together
    std::map<Int, std::vector<Int>> primary; // prime -> exponents, descending
    for (Int m : moduli) {
        if (m < 1) throw DomainError("modulus must be >= 1");
        for (Int p = 2; p * p <= m; ++p) {
            if (m % p != 0) continue;
            Int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            primary[p].push_back(e);
        }
        if (m > 1) primary[m].push_back(1);
    }
    std::size_t slots = 0;
    for (auto& [p, exps] : primary) {
        std::sort(exps.begin(), exps.end(), std::greater<>());
        slots = std::max(slots, exps.size());
    }
    std::vector<Int> factors(slots, Int(1));
    for (auto& [p, exps] : primary)
        for (std::size_t i = 0; i < exps.size(); ++i) {
            Int pe = 1;
            for (Int k = 0; k < exps[i]; ++k) pe *= p;
            factors[i] *= pe; // slot 0 holds the largest factor
        }
    std::reverse(factors.begin(), factors.end());
    factors.erase(std::remove(factors.begin(), factors.end(), Int(1)), factors.end());
    return from_invariant_factors(factors);
}

Int FiniteAbelianGroup::order() const {
    Int o = 1;
    for (const Int& f : factors_) o *= f;
    return o;
}

Int FiniteAbelianGroup::exponent() const {
    return factors_.empty() ? Int(1) : factors_.back();
}

GroupElement FiniteAbelianGroup::zero() const {
    return GroupElement(*this, Vec(factors_.size()));
}

GroupElement FiniteAbelianGroup::element(const Vec& coords) const {
    return GroupElement(*this, coords);
}

std::vector<GroupElement> FiniteAbelianGroup::all_elements() const {
    std::vector<GroupElement> out;
    Vec cur(factors_.size());
    for (;;) {
        out.push_back(GroupElement(*this, cur));
        std::size_t i = 0;
        while (i < cur.size()) {
            if (++cur[i] < factors_[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == cur.size()) break;
    }
    return out;
}

std::string FiniteAbelianGroup::to_string() const {
    if (factors_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        os << (i ? " x " : "") << "Z/" << factors_[i];
    return os.str();
}

GroupElement::GroupElement(FiniteAbelianGroup parent, Vec coords)
    : parent_(std::move(parent)), coords_(std::move(coords)) {
    const auto& f = parent_.invariant_factors();
    if (coords_.size() != f.size())
        throw DomainError("group element: coordinate count does not match the group rank");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = floor_mod(coords_[i], f[i]);
}

GroupElement GroupElement::operator+(const GroupElement& rhs) const {
    if (parent_ != rhs.parent_) throw DomainError("group element addition across different groups");
    return GroupElement(parent_, vec_add(coords_, rhs.coords_));
}

GroupElement GroupElement::operator-(const GroupElement& rhs) const {
    if (parent_ != rhs.parent_) throw DomainError("group element subtraction across different groups");
    return GroupElement(parent_, vec_sub(coords_, rhs.coords_));
}

GroupElement GroupElement::operator-() const { return GroupElement(parent_, vec_neg(coords_)); }

GroupElement GroupElement::operator*(const Int& k) const {
    return GroupElement(parent_, vec_scale(k, coords_));
}

std::string GroupElement::to_string() const { return vec_to_string(coords_); }

Int element_order(const GroupElement& g) {
    const auto& f = g.parent().invariant_factors();
    Int order = 1;
    for (std::size_t i = 0; i < f.size(); ++i)
        order = int_lcm(order, f[i] / int_gcd(f[i], g.coords()[i]));
    return order;
}

CokernelResult cokernel(const IntMatrix& A) {
    SnfDecomposition snf = smith_normal_form(A);
    std::vector<Int> diag = snf.diagonal();
    std::vector<Int> torsion;
    std::size_t nonzero = 0;
    for (const Int& d : diag) {
        if (d == 0) continue;
        ++nonzero;
        if (d > 1) torsion.push_back(d);
    }
    CokernelResult r;
    r.torsion = FiniteAbelianGroup::from_invariant_factors(torsion);
    r.free_rank = A.rows() - nonzero;
    return r;
}

QmodZ::QmodZ(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("Q/Z: zero denominator");
    Int n = num, d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    n = floor_mod(n, d);
    Int g = int_gcd(n, d);
    if (g == 0) g = 1;
    num_ = n / g;
    den_ = d / g;
    if (num_ == 0) den_ = 1;
}

QmodZ QmodZ::operator+(const QmodZ& rhs) const {
    return QmodZ(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

QmodZ QmodZ::operator-(const QmodZ& rhs) const {
    return QmodZ(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

QmodZ QmodZ::operator-() const { return QmodZ(-num_, den_); }

QmodZ QmodZ::operator*(const Int& k) const { return QmodZ(num_ * k, den_); }

std::string QmodZ::to_string() const {
    std::ostringstream os;
    os << num_ << "/" << den_;
    return os.str();
}

QmodZ QmodZ::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return QmodZ(Int(text), 1);
        return QmodZ(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ConfigError("cannot parse fraction '" + text + "'");
    }
}

} // namespace kummer

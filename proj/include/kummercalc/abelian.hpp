#ifndef KUMMERCALC_ABELIAN_HPP
#define KUMMERCALC_ABELIAN_HPP

#include "kummercalc/matrix.hpp"

#include <string>
#include <vector>

namespace kummer {

class GroupElement;

// Finite abelian group in invariant-factor presentation: Z/d_1 x ... x Z/d_k
// with 2 <= d_1 | d_2 | ... | d_k. The empty list is the trivial group.
// Isomorphism testing is equality of the factor lists.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default; // trivial group

    // Requires canonical input (each factor >= 2, divisibility chain).
    static FiniteAbelianGroup from_invariant_factors(const std::vector<Int>& factors);

    // Accepts any list of moduli >= 1 and canonicalizes, so e.g. {2,3} and
    // {6} produce the same group.
    static FiniteAbelianGroup from_moduli(const std::vector<Int>& moduli);

    static bool is_invariant_chain(const std::vector<Int>& factors);

    const std::vector<Int>& invariant_factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }
    bool is_trivial() const { return factors_.empty(); }
    Int order() const;
    Int exponent() const;

    GroupElement zero() const;
    GroupElement element(const Vec& coords) const; // reduces coordinates
    std::vector<GroupElement> all_elements() const; // order must stay desk scale

    bool operator==(const FiniteAbelianGroup& rhs) const = default;
    std::string to_string() const;

private:
    std::vector<Int> factors_;
};

class GroupElement {
public:
    GroupElement() = default;
    GroupElement(FiniteAbelianGroup parent, Vec coords);

    const FiniteAbelianGroup& parent() const { return parent_; }
    const Vec& coords() const { return coords_; }
    bool is_zero() const { return vec_is_zero(coords_); }

    GroupElement operator+(const GroupElement& rhs) const;
    GroupElement operator-(const GroupElement& rhs) const;
    GroupElement operator-() const;
    GroupElement operator*(const Int& k) const;
    bool operator==(const GroupElement& rhs) const = default;

    std::string to_string() const;

private:
    FiniteAbelianGroup parent_;
    Vec coords_;
};

// least k >= 1 with k*g = 0
Int element_order(const GroupElement& g);

// Z^rows / im(A): torsion invariant factors plus free rank, via SNF.
struct CokernelResult {
    FiniteAbelianGroup torsion;
    std::size_t free_rank = 0;
    bool finite() const { return free_rank == 0; }
};
CokernelResult cokernel(const IntMatrix& A);

// Element of Q/Z as the reduced fraction a/b with 0 <= a < b.
class QmodZ {
public:
    QmodZ() : num_(0), den_(1) {}
    QmodZ(const Int& num, const Int& den); // canonicalizes, den != 0

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    Int order() const { return den_; } // order in Q/Z

    QmodZ operator+(const QmodZ& rhs) const;
    QmodZ operator-(const QmodZ& rhs) const;
    QmodZ operator-() const;
    QmodZ operator*(const Int& k) const;
    bool operator==(const QmodZ& rhs) const = default;

    std::string to_string() const; // "a/b"
    static QmodZ parse(const std::string& text);

private:
    Int num_, den_;
};

inline Int qmodz_order(const QmodZ& q) { return q.order(); }

} // namespace kummer

#endif

#ifndef KUMMERCALC_CONE_HPP
#define KUMMERCALC_CONE_HPP

#include "kummercalc/matrix.hpp"

#include <optional>
#include <vector>

namespace kummer {

// Rational polyhedral cone {x : row . x >= 0 for every row}. Rows are
// integer and gcd-normalized; an empty row list is the whole space.
struct ConeIneqs {
    std::size_t dim = 0;
    std::vector<Vec> rows;
};

// Facet description of cone(gens) in Q^dim, computed by Fourier-Motzkin
// elimination of the combination coefficients. Exact; throws CapabilityError
// when dim exceeds the supported rank (4) or the row count explodes.
ConeIneqs cone_from_generators(const std::vector<Vec>& gens, std::size_t dim);

bool cone_contains(const ConeIneqs& cone, const Vec& x);

// lineality basis + ray generators; cone = span(lineality) + cone(rays)
struct ConeGenerators {
    std::vector<Vec> lineality;
    std::vector<Vec> rays;
};
ConeGenerators cone_generators_from_ineqs(const ConeIneqs& cone);

// Rational lambda >= 0 with sum lambda_i gens_i = x, when one exists.
// Fourier-Motzkin feasibility with back substitution.
std::optional<std::vector<Rat>> nonneg_combination(const std::vector<Vec>& gens, const Vec& x);

// Minimal generating set (Hilbert basis) of cone cap Z^k for a pointed cone,
// given monoid generators gens inside the full lattice Z^k and the matching
// facet inequalities. Enumerates the zonotope box of the generators; every
// irreducible element lies inside it.
std::vector<Vec> hilbert_basis_pointed(const std::vector<Vec>& gens, const ConeIneqs& ineqs);

} // namespace kummer

#endif

#ifndef KUMMERCALC_TEST_HELPERS_HPP
#define KUMMERCALC_TEST_HELPERS_HPP

#include "kummercalc/matrix.hpp"

#include <cstdint>
#include <random>

namespace kummer::testing {

// Deterministic RNG for reproducible suites.
inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Int rand_int(std::mt19937_64& rng, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return Int(d(rng));
}

inline IntMatrix rand_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long mag) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rand_int(rng, -mag, mag);
    return m;
}

// Independent check of a Smith decomposition: reconstruction, unimodularity,
// nonnegative diagonal, divisibility chain, trailing zeros.
inline bool snf_is_valid(const IntMatrix& a, const SnfDecomposition& s) {
    if (!(s.U * a * s.V == s.D)) return false;
    if (int_abs(s.U.det()) != 1 || int_abs(s.V.det()) != 1) return false;
    for (std::size_t i = 0; i < s.D.rows(); ++i)
        for (std::size_t j = 0; j < s.D.cols(); ++j)
            if (i != j && s.D.at(i, j) != 0) return false;
    auto diag = s.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) {
        if (diag[i] < 0) return false;
        if (i + 1 < diag.size()) {
            if (diag[i] == 0 && diag[i + 1] != 0) return false;
            if (diag[i] != 0 && diag[i + 1] % diag[i] != 0) return false;
        }
    }
    return true;
}

} // namespace kummer::testing

#endif

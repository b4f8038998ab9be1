#pragma once

/**
 * @file linalg.hpp
 * @brief Exact dense linear algebra: fraction-free (Bareiss) determinants,
 *        CRT-modular determinants for integer matrices, minors, and the
 *        normalized last-row cofactors used by the holonomic relations.
 */

#include <cstdint>
#include <span>

#include "aztec/eigen_support.hpp"

namespace aztec {

/// Exact determinant by fraction-free (Bareiss) elimination, with row
/// pivoting on zero pivots. Singular input gives 0.
Int det_bareiss(const MatZ& a);

/// Rational variant: rows are scaled integral first, then the integer
/// routine runs and the scaling is divided back out.
Rat det_bareiss(const MatQ& a);

/// Product over rows of ceil(sqrt(sum of squares)); an upper bound for
/// |det|, computed with integer square roots only.
Int hadamard_bound(const MatZ& a);

/// Exact determinant of an integer matrix via residues modulo distinct
/// word-size primes, merged by Chinese remaindering once the prime product
/// exceeds twice the Hadamard bound. Throws std::runtime_error if the fixed
/// prime pool is too small for the requested matrix.
Int det_modular(const MatZ& a);

/// The fixed pool of 62-bit primes backing det_modular (deterministic,
/// listed in source).
std::span<const std::uint64_t> prime_pool();

/// Determinant of the (n-1)x(n-1) submatrix obtained by deleting row i and
/// column j. The minor of a 1x1 matrix is 1 (empty determinant).
Rat minor_det(const MatQ& a, Eigen::Index i, Eigen::Index j);

/// Normalized cofactors of the last row:
///   c[j] = (-1)^(n-1+j) * M(n-1,j) / M(n-1,n-1),
/// so that c[n-1] = 1. Throws std::domain_error when the corner minor
/// M(n-1,n-1) vanishes.
VecQ normalized_cofactors(const MatQ& a);

} // namespace aztec

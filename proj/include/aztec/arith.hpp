#pragma once

/**
 * @file arith.hpp
 * @brief Exact scalar layer: arbitrary-precision integers/rationals (GMP),
 *        the generalized binomial coefficient, rising factorials, and exact
 *        evaluation of Gamma-factor ratios.
 *
 * Every quantity in this project is an exact rational; no floating point
 * is used anywhere.
 */

#include <gmpxx.h>

#include <vector>

#include "aztec/errors.hpp"

namespace aztec {

using Int = mpz_class;
using Rat = mpq_class;

/// Convenience constructor for small rationals, canonicalized.
Rat rat(long num, long den = 1);

/// Parse "num/den" or "num". Used by the catalog loader and CLI.
Rat rat_from_string(const std::string& s);

/// "num/den" with den > 0 and gcd(num,den) = 1; "num" when den = 1.
std::string rat_to_string(const Rat& q);

/// n! for n >= 0.
Int factorial(long n);

/// Generalized binomial coefficient:
///   binomial(alpha, p) = alpha(alpha-1)...(alpha-p+1)/p!  for p >= 0,
///   binomial(alpha, p) = 0                                for p < 0.
/// Always an integer, for any integer alpha.
Int binomial(const Int& alpha, long p);
Int binomial(long alpha, long p);

/// x(x+1)...(x+k-1); equals 1 when k = 0. Throws PoleError when some factor
/// vanishes (i.e. x is a nonpositive integer with -x < k).
Rat rising_factorial(const Rat& x, unsigned long k);

/// base^e for integer e of either sign; e < 0 requires base != 0.
Rat pow_rat(const Rat& base, long e);

/// base^e for e >= 0.
Int pow_int(const Int& base, unsigned long e);

/// q - floor(q), in [0, 1).
Rat frac_part(const Rat& q);

/// A positive rational Gamma argument. Nonpositive values are poles of
/// Gamma and rejected at construction.
class GammaArg {
public:
    explicit GammaArg(Rat value);
    const Rat& value() const { return value_; }

private:
    Rat value_;
};

/// Exact value of prod Gamma(numer[i]) / prod Gamma(denom[j]).
///
/// Arguments are grouped by the fractional part of their value; within each
/// group the two sides are sorted ascending and paired k-th with k-th, and
/// each pair Gamma(a)/Gamma(b) with a - b an integer is evaluated as a
/// rising factorial or its reciprocal. Throws PairingError when some group
/// has unequal counts on the two sides (the ratio would be irrational).
/// The value does not depend on the pairing strategy.
Rat gamma_ratio_product(const std::vector<GammaArg>& numer,
                        const std::vector<GammaArg>& denom);

} // namespace aztec

#pragma once

/**
 * @file kks.hpp
 * @brief The binomial determinant family
 *        B^{(m,l)}_{a,b,c,d}(n) = det( l^{j+b} C(mi+j+c, mi+a) + C(mi-j+d, mi+a) )
 *        over 0 <= i,j <= n-1, with the generalized binomial convention.
 */

#include "aztec/eigen_support.hpp"

namespace aztec {

struct KKSParams {
    long m = 1;
    Rat l = Rat(1);
    long a = 0;
    long b = 0;
    long c = 0;
    long d = 0;
    long n = 1;

    std::string describe() const;
};

/// Single matrix entry; exact for rational l, with l^(j+b) allowing a
/// negative exponent only when l != 0.
Rat kks_entry(const KKSParams& p, long i, long j);

MatQ kks_matrix(const KKSParams& p);

Rat kks_det(const KKSParams& p);

/// True when every entry of the matrix is an integer (so the modular
/// determinant route applies directly).
bool kks_matrix_is_integral(const KKSParams& p);

} // namespace aztec

#include "aztec/kks.hpp"

#include <sstream>

#include "aztec/linalg.hpp"

namespace aztec {

std::string KKSParams::describe() const {
    std::ostringstream out;
    out << "B^(" << m << "," << rat_to_string(l) << ")_(" << a << "," << b << "," << c << "," << d
        << ")(" << n << ")";
    return out.str();
}

Rat kks_entry(const KKSParams& p, long i, long j) {
    if (p.m < 1)
        throw std::invalid_argument("kks_entry: m must be >= 1");
    const Rat lpow = pow_rat(p.l, j + p.b); // throws for l = 0 with negative exponent
    const Int left = binomial(Int(p.m * i + j + p.c), p.m * i + p.a);
    const Int right = binomial(Int(p.m * i - j + p.d), p.m * i + p.a);
    return lpow * Rat(left) + Rat(right);
}

MatQ kks_matrix(const KKSParams& p) {
    if (p.n < 0)
        throw std::invalid_argument("kks_matrix: n must be nonnegative");
    MatQ m(p.n, p.n);
    for (long i = 0; i < p.n; ++i)
        for (long j = 0; j < p.n; ++j)
            m(i, j) = kks_entry(p, i, j);
    return m;
}

Rat kks_det(const KKSParams& p) {
    return det_bareiss(kks_matrix(p));
}

bool kks_matrix_is_integral(const KKSParams& p) {
    if (p.l.get_den() != 1)
        return false;
    // integer l: only a negative power of l could introduce a denominator
    return p.b >= 0 || (p.l == 1) || (p.l == -1);
}

} // namespace aztec

#include "aztec/linalg.hpp"

#include <stdexcept>
#include <vector>

namespace aztec {

namespace {

// Fraction-free elimination in place; m is destroyed. Returns the
// determinant of the leading n x n block.
Int bareiss_in_place(MatZ& m) {
    const Eigen::Index n = m.rows();
    if (n == 0)
        return Int(1);
    Int prev(1);
    int sign = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            Eigen::Index pivot_row = -1;
            for (Eigen::Index r = k + 1; r < n; ++r) {
                if (m(r, k) != 0) {
                    pivot_row = r;
                    break;
                }
            }
            if (pivot_row < 0)
                return Int(0);
            m.row(k).swap(m.row(pivot_row));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                Int t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

} // namespace

Int det_bareiss(const MatZ& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("det_bareiss: matrix not square");
    MatZ m = a;
    return bareiss_in_place(m);
}

Rat det_bareiss(const MatQ& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("det_bareiss: matrix not square");
    const Eigen::Index n = a.rows();
    MatZ m(n, n);
    Rat scale(1);
    for (Eigen::Index i = 0; i < n; ++i) {
        Int lcm(1);
        for (Eigen::Index j = 0; j < n; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a(i, j).get_den_mpz_t());
        for (Eigen::Index j = 0; j < n; ++j) {
            Rat scaled = a(i, j) * Rat(lcm);
            m(i, j) = scaled.get_num(); // den is 1 after scaling
        }
        scale *= Rat(lcm);
    }
    return Rat(bareiss_in_place(m)) / scale;
}

Int hadamard_bound(const MatZ& a) {
    const Eigen::Index n = a.rows();
    Int bound(1);
    for (Eigen::Index i = 0; i < n; ++i) {
        Int s(0);
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            s += a(i, j) * a(i, j);
        Int root, rem;
        mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), s.get_mpz_t());
        if (rem != 0)
            root += 1;
        bound *= root;
    }
    return bound;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1)
            r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    return powmod(a, p - 2, p); // p prime
}

// Determinant of a mod p by ordinary Gaussian elimination over F_p.
std::uint64_t det_mod_prime(const MatZ& a, std::uint64_t p) {
    const Eigen::Index n = a.rows();
    std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            Int r;
            mpz_fdiv_r_ui(r.get_mpz_t(), a(i, j).get_mpz_t(), p);
            m[i][j] = r.get_ui();
        }
    std::uint64_t det = 1;
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = k; r < n; ++r) {
            if (m[r][k] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            return 0;
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            det = p - det;
        }
        det = mulmod(det, m[k][k], p);
        const std::uint64_t inv = invmod(m[k][k], p);
        for (Eigen::Index i = k + 1; i < n; ++i) {
            if (m[i][k] == 0)
                continue;
            const std::uint64_t f = mulmod(m[i][k], inv, p);
            for (Eigen::Index j = k; j < n; ++j)
                m[i][j] = submod(m[i][j], mulmod(f, m[k][j], p), p);
        }
    }
    return det % p;
}

} // namespace

Int det_modular(const MatZ& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("det_modular: matrix not square");
    const Eigen::Index n = a.rows();
    if (n == 0)
        return Int(1);

    const Int bound = hadamard_bound(a);
    if (bound == 0)
        return Int(0); // a zero row forces det = 0
    const Int target = 2 * bound + 1;

    // Incremental CRT: x == residue (mod modulus) with |det| <= bound < modulus/2.
    Int x(0), modulus(1);
    for (std::uint64_t p : prime_pool()) {
        const std::uint64_t r = det_mod_prime(a, p);
        Int pm;
        mpz_fdiv_r_ui(pm.get_mpz_t(), modulus.get_mpz_t(), p);
        const std::uint64_t minv = invmod(pm.get_ui(), p);
        Int xm;
        mpz_fdiv_r_ui(xm.get_mpz_t(), x.get_mpz_t(), p);
        const std::uint64_t t = mulmod(submod(r, xm.get_ui(), p), minv, p);
        x += modulus * Int(static_cast<unsigned long>(t));
        modulus *= Int(static_cast<unsigned long>(p));
        if (modulus >= target) {
            if (2 * x >= modulus)
                x -= modulus;
            return x;
        }
    }
    throw std::runtime_error("det_modular: prime pool exhausted before the Hadamard bound");
}

Rat minor_det(const MatQ& a, Eigen::Index i, Eigen::Index j) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n)
        throw std::invalid_argument("minor_det: matrix not square");
    if (i < 0 || i >= n || j < 0 || j >= n)
        throw std::out_of_range("minor_det: index out of range");
    MatQ sub(n - 1, n - 1);
    for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
        if (r == i)
            continue;
        for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
            if (c == j)
                continue;
            sub(rr, cc) = a(r, c);
            ++cc;
        }
        ++rr;
    }
    return det_bareiss(sub);
}

VecQ normalized_cofactors(const MatQ& a) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n || n == 0)
        throw std::invalid_argument("normalized_cofactors: need a nonempty square matrix");
    const Rat corner = minor_det(a, n - 1, n - 1);
    if (corner == 0)
        throw std::domain_error("normalized_cofactors: corner minor vanishes");
    VecQ c(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        Rat m = minor_det(a, n - 1, j) / corner;
        c(j) = ((n - 1 + j) % 2 == 0) ? m : Rat(-m);
    }
    return c;
}

} // namespace aztec

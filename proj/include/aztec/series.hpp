#pragma once

/**
 * @file series.hpp
 * @brief Truncated univariate and bivariate formal power series over exact
 *        rationals, with the substitution/scaling moves needed for the
 *        coefficient-matrix determinant lemmas.
 */

#include <initializer_list>
#include <vector>

#include "aztec/eigen_support.hpp"

namespace aztec {

/// Truncated power series c[0] + c[1] v + ... + c[order-1] v^(order-1).
class SeriesV {
public:
    explicit SeriesV(int order);
    SeriesV(std::initializer_list<Rat> coeffs, int order);

    static SeriesV one(int order);

    int order() const { return static_cast<int>(c_.size()); }
    const Rat& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    Rat& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }

    SeriesV truncated(int order) const;

    /// Multiplicative inverse; requires a nonzero constant term.
    SeriesV inverse() const;

    friend SeriesV operator+(const SeriesV& f, const SeriesV& g);
    friend SeriesV operator-(const SeriesV& f, const SeriesV& g);
    friend SeriesV operator*(const SeriesV& f, const SeriesV& g);
    friend bool operator==(const SeriesV& f, const SeriesV& g);

private:
    std::vector<Rat> c_;
};

/// Truncated bivariate power series; coefficient of u^i v^j sits at (i, j)
/// of a dense (order_u x order_v) grid.
class Series2D {
public:
    Series2D(int order_u, int order_v);

    static Series2D one(int order_u, int order_v);

    int order_u() const { return static_cast<int>(c_.rows()); }
    int order_v() const { return static_cast<int>(c_.cols()); }
    const Rat& at(int i, int j) const { return c_(i, j); }
    Rat& at(int i, int j) { return c_(i, j); }

    Series2D transposed() const;

    /// Multiplicative inverse; requires a nonzero constant term.
    Series2D inverse() const;

    friend Series2D operator+(const Series2D& f, const Series2D& g);
    friend Series2D operator-(const Series2D& f, const Series2D& g);
    friend Series2D operator*(const Series2D& f, const Series2D& g);
    friend bool operator==(const Series2D& f, const Series2D& g);

private:
    MatQ c_;
};

/// F(u, v*beta(v)) truncated to F's orders. beta must have constant term 1,
/// so the substituted variable has valuation 1 and every retained
/// coefficient is exact.
Series2D substitute_v(const Series2D& f, const SeriesV& beta);

/// alpha(v) * F, truncated.
Series2D scale_v(const Series2D& f, const SeriesV& alpha);

/// Analogues acting on the u variable.
Series2D substitute_u(const Series2D& f, const SeriesV& beta);
Series2D scale_u(const Series2D& f, const SeriesV& alpha);

/// n x n matrix with entry (i, j) = [u^i v^j] F. Requires n <= both orders.
MatQ coeff_matrix(const Series2D& f, int n);

} // namespace aztec

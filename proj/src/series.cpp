#include "aztec/series.hpp"

#include <stdexcept>

namespace aztec {

namespace {

void require_same_order(int a, int b, const char* op) {
    if (a != b)
        throw std::invalid_argument(std::string(op) + ": truncation order mismatch");
}

} // namespace

SeriesV::SeriesV(int order) {
    if (order <= 0)
        throw std::invalid_argument("SeriesV: order must be positive");
    c_.assign(static_cast<std::size_t>(order), Rat(0));
}

SeriesV::SeriesV(std::initializer_list<Rat> coeffs, int order) : SeriesV(order) {
    std::size_t k = 0;
    for (const Rat& q : coeffs) {
        if (k >= c_.size())
            break;
        c_[k++] = q;
    }
}

SeriesV SeriesV::one(int order) {
    SeriesV s(order);
    s[0] = 1;
    return s;
}

SeriesV SeriesV::truncated(int order) const {
    SeriesV out(order);
    for (int k = 0; k < order && k < this->order(); ++k)
        out[k] = (*this)[k];
    return out;
}

SeriesV SeriesV::inverse() const {
    if (c_[0] == 0)
        throw std::domain_error("SeriesV::inverse: zero constant term");
    const int n = order();
    SeriesV g(n);
    g[0] = 1 / c_[0];
    for (int k = 1; k < n; ++k) {
        Rat acc(0);
        for (int t = 1; t <= k; ++t)
            acc += c_[static_cast<std::size_t>(t)] * g[k - t];
        g[k] = -acc / c_[0];
    }
    return g;
}

SeriesV operator+(const SeriesV& f, const SeriesV& g) {
    require_same_order(f.order(), g.order(), "SeriesV::operator+");
    SeriesV out(f.order());
    for (int k = 0; k < f.order(); ++k)
        out[k] = f[k] + g[k];
    return out;
}

SeriesV operator-(const SeriesV& f, const SeriesV& g) {
    require_same_order(f.order(), g.order(), "SeriesV::operator-");
    SeriesV out(f.order());
    for (int k = 0; k < f.order(); ++k)
        out[k] = f[k] - g[k];
    return out;
}

SeriesV operator*(const SeriesV& f, const SeriesV& g) {
    require_same_order(f.order(), g.order(), "SeriesV::operator*");
    SeriesV out(f.order());
    for (int i = 0; i < f.order(); ++i) {
        if (f[i] == 0)
            continue;
        for (int j = 0; i + j < f.order(); ++j)
            out[i + j] += f[i] * g[j];
    }
    return out;
}

bool operator==(const SeriesV& f, const SeriesV& g) {
    if (f.order() != g.order())
        return false;
    for (int k = 0; k < f.order(); ++k)
        if (f[k] != g[k])
            return false;
    return true;
}

Series2D::Series2D(int order_u, int order_v) {
    if (order_u <= 0 || order_v <= 0)
        throw std::invalid_argument("Series2D: orders must be positive");
    c_ = MatQ::Constant(order_u, order_v, Rat(0));
}

Series2D Series2D::one(int order_u, int order_v) {
    Series2D s(order_u, order_v);
    s.at(0, 0) = 1;
    return s;
}

Series2D Series2D::transposed() const {
    Series2D out(order_v(), order_u());
    for (int i = 0; i < order_u(); ++i)
        for (int j = 0; j < order_v(); ++j)
            out.at(j, i) = at(i, j);
    return out;
}

Series2D Series2D::inverse() const {
    if (at(0, 0) == 0)
        throw std::domain_error("Series2D::inverse: zero constant term");
    // Treat F as a series in u with SeriesV coefficients: g_0 = 1/f_0 and
    // g_i = -(sum_{t=1..i} f_t g_{i-t}) / f_0.
    const int nu = order_u(), nv = order_v();
    std::vector<SeriesV> f_rows, g_rows;
    f_rows.reserve(static_cast<std::size_t>(nu));
    for (int i = 0; i < nu; ++i) {
        SeriesV row(nv);
        for (int j = 0; j < nv; ++j)
            row[j] = at(i, j);
        f_rows.push_back(std::move(row));
    }
    const SeriesV f0_inv = f_rows[0].inverse();
    g_rows.push_back(f0_inv);
    for (int i = 1; i < nu; ++i) {
        SeriesV acc(nv);
        for (int t = 1; t <= i; ++t)
            acc = acc + f_rows[static_cast<std::size_t>(t)] * g_rows[static_cast<std::size_t>(i - t)];
        g_rows.push_back((SeriesV(nv) - acc) * f0_inv);
    }
    Series2D out(nu, nv);
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nv; ++j)
            out.at(i, j) = g_rows[static_cast<std::size_t>(i)][j];
    return out;
}

Series2D operator+(const Series2D& f, const Series2D& g) {
    require_same_order(f.order_u(), g.order_u(), "Series2D::operator+");
    require_same_order(f.order_v(), g.order_v(), "Series2D::operator+");
    Series2D out(f.order_u(), f.order_v());
    for (int i = 0; i < f.order_u(); ++i)
        for (int j = 0; j < f.order_v(); ++j)
            out.at(i, j) = f.at(i, j) + g.at(i, j);
    return out;
}

Series2D operator-(const Series2D& f, const Series2D& g) {
    require_same_order(f.order_u(), g.order_u(), "Series2D::operator-");
    require_same_order(f.order_v(), g.order_v(), "Series2D::operator-");
    Series2D out(f.order_u(), f.order_v());
    for (int i = 0; i < f.order_u(); ++i)
        for (int j = 0; j < f.order_v(); ++j)
            out.at(i, j) = f.at(i, j) - g.at(i, j);
    return out;
}

Series2D operator*(const Series2D& f, const Series2D& g) {
    require_same_order(f.order_u(), g.order_u(), "Series2D::operator*");
    require_same_order(f.order_v(), g.order_v(), "Series2D::operator*");
    Series2D out(f.order_u(), f.order_v());
    for (int i = 0; i < f.order_u(); ++i)
        for (int j = 0; j < f.order_v(); ++j) {
            if (f.at(i, j) == 0)
                continue;
            for (int k = 0; i + k < f.order_u(); ++k)
                for (int l = 0; j + l < f.order_v(); ++l)
                    out.at(i + k, j + l) += f.at(i, j) * g.at(k, l);
        }
    return out;
}

bool operator==(const Series2D& f, const Series2D& g) {
    if (f.order_u() != g.order_u() || f.order_v() != g.order_v())
        return false;
    for (int i = 0; i < f.order_u(); ++i)
        for (int j = 0; j < f.order_v(); ++j)
            if (f.at(i, j) != g.at(i, j))
                return false;
    return true;
}

Series2D substitute_v(const Series2D& f, const SeriesV& beta) {
    require_same_order(f.order_v(), beta.order(), "substitute_v");
    if (beta[0] != 1)
        throw std::invalid_argument("substitute_v: beta must have constant term 1");
    const int nv = f.order_v();
    // Powers of v*beta(v); (v*beta)^t has valuation t, so t < nv suffices.
    std::vector<SeriesV> powers;
    powers.push_back(SeriesV::one(nv));
    SeriesV vbeta(nv);
    for (int k = 1; k < nv; ++k)
        vbeta[k] = beta[k - 1];
    for (int t = 1; t < nv; ++t)
        powers.push_back(powers.back() * vbeta);

    Series2D out(f.order_u(), nv);
    for (int i = 0; i < f.order_u(); ++i)
        for (int t = 0; t < nv; ++t) {
            const Rat& coeff = f.at(i, t);
            if (coeff == 0)
                continue;
            const SeriesV& p = powers[static_cast<std::size_t>(t)];
            for (int j = t; j < nv; ++j)
                out.at(i, j) += coeff * p[j];
        }
    return out;
}

Series2D scale_v(const Series2D& f, const SeriesV& alpha) {
    require_same_order(f.order_v(), alpha.order(), "scale_v");
    Series2D out(f.order_u(), f.order_v());
    for (int i = 0; i < f.order_u(); ++i)
        for (int t = 0; t < f.order_v(); ++t) {
            const Rat& coeff = f.at(i, t);
            if (coeff == 0)
                continue;
            for (int j = t; j < f.order_v(); ++j)
                out.at(i, j) += coeff * alpha[j - t];
        }
    return out;
}

Series2D substitute_u(const Series2D& f, const SeriesV& beta) {
    return substitute_v(f.transposed(), beta).transposed();
}

Series2D scale_u(const Series2D& f, const SeriesV& alpha) {
    return scale_v(f.transposed(), alpha).transposed();
}

MatQ coeff_matrix(const Series2D& f, int n) {
    if (n < 0 || n > f.order_u() || n > f.order_v())
        throw std::invalid_argument("coeff_matrix: truncation too small for requested block");
    MatQ m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = f.at(i, j);
    return m;
}

} // namespace aztec

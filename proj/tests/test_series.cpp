#include <doctest.h>

#include <random>

#include "aztec/linalg.hpp"
#include "aztec/series.hpp"
#include "test_util.hpp"

using namespace aztec;

namespace {

// 1/(1 - u - v) truncated
Series2D geometric_uv(int order) {
    Series2D poly(order, order);
    poly.at(0, 0) = 1;
    poly.at(1, 0) = -1;
    poly.at(0, 1) = -1;
    return poly.inverse();
}

} // namespace

TEST_CASE("series multiplication and inversion") {
    const int order = 8;
    Series2D one_minus_u(order, order);
    one_minus_u.at(0, 0) = 1;
    one_minus_u.at(1, 0) = -1;
    const Series2D inv = one_minus_u.inverse();
    CHECK(one_minus_u * inv == Series2D::one(order, order));
    for (int i = 0; i < order; ++i)
        CHECK(inv.at(i, 0) == rat(1));

    const Series2D f = geometric_uv(order);
    for (int i = 0; i < order; ++i)
        for (int j = 0; i + j < order; ++j)
            CHECK(f.at(i, j) == Rat(binomial(i + j, i)));

    CHECK(f + Series2D(order, order) == f);
    CHECK_THROWS_AS(f * Series2D(order, order + 1), std::invalid_argument);
}

TEST_CASE("substitute_v basics") {
    const int order = 6;
    Series2D f(order, order);
    f.at(0, 1) = 1; // F = v

    SeriesV identity = SeriesV::one(order);
    CHECK(substitute_v(f, identity) == f);

    SeriesV one_plus_v = SeriesV::one(order);
    one_plus_v[1] = 1;
    const Series2D g = substitute_v(f, one_plus_v); // v + v^2
    CHECK(g.at(0, 1) == rat(1));
    CHECK(g.at(0, 2) == rat(1));
    CHECK(g.at(0, 3) == rat(0));

    SeriesV bad(order);
    bad[0] = 2;
    CHECK_THROWS_AS(substitute_v(f, bad), std::invalid_argument);
}

TEST_CASE("substitute_v expands v/((1-v)(1-2v))") {
    // F = 1/(1-uv), beta = 1/((1-v)(1-2v)); coefficient of u^1 v^2 in
    // F(u, v beta(v)) is the v^2 coefficient of v beta(v) = v + 3v^2 + ...
    const int order = 6;
    Series2D f(order, order);
    for (int k = 0; k < order; ++k)
        f.at(k, k) = 1;
    SeriesV denom({rat(1), rat(-3), rat(2)}, order);
    const Series2D g = substitute_v(f, denom.inverse());
    CHECK(g.at(1, 2) == rat(3));
}

TEST_CASE("scale_v basics") {
    const int order = 5;
    const Series2D one = Series2D::one(order, order);
    SeriesV alpha = SeriesV::one(order);
    CHECK(scale_v(one, alpha) == one);

    SeriesV geometric = SeriesV({rat(1), rat(-1)}, order).inverse(); // 1/(1-v)
    const Series2D g = scale_v(one, geometric);
    for (int j = 0; j < order; ++j)
        CHECK(g.at(0, j) == rat(1));
}

TEST_CASE("coefficient matrix extraction") {
    const int order = 6;
    Series2D diag(order, order); // 1/(1-uv)
    for (int k = 0; k < order; ++k)
        diag.at(k, k) = 1;
    const MatQ id3 = coeff_matrix(diag, 3);
    CHECK(det_bareiss(id3) == rat(1));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(id3(i, j) == (i == j ? rat(1) : rat(0)));

    const MatQ pascal = coeff_matrix(geometric_uv(order), 2);
    CHECK(pascal(0, 0) == rat(1));
    CHECK(pascal(0, 1) == rat(1));
    CHECK(pascal(1, 0) == rat(1));
    CHECK(pascal(1, 1) == rat(2));

    CHECK(mat_eq(coeff_matrix(Series2D(4, 4), 4), MatQ::Constant(4, 4, Rat(0))));
    CHECK_THROWS_AS(coeff_matrix(diag, order + 1), std::invalid_argument);
}

TEST_CASE("coefficient matrix of alpha(v)/(1 - u v beta(v)) is unitriangular") {
    const int order = 7;
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int trial = 0; trial < 5; ++trial) {
        SeriesV alpha = SeriesV::one(order);
        SeriesV beta = SeriesV::one(order);
        for (int k = 1; k < order; ++k) {
            alpha[k] = rat(num(rng));
            beta[k] = rat(num(rng));
        }
        // build 1/(1 - u v beta(v)) as inverse of the bivariate polynomial
        Series2D poly = Series2D::one(order, order);
        for (int j = 1; j < order; ++j)
            poly.at(1, j) = -beta[j - 1];
        const Series2D f = scale_v(poly.inverse(), alpha);
        const MatQ m = coeff_matrix(f, order);
        for (int i = 0; i < order; ++i) {
            CHECK(m(i, i) == rat(1));
            for (int j = 0; j < i; ++j)
                CHECK(m(i, j) == rat(0));
        }
    }
}

TEST_CASE("determinant invariance under the v and u actions") {
    const int block = 4;
    const int nu = block, nv = 2 * block;
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    for (int trial = 0; trial < 10; ++trial) {
        Series2D f(nu, nv);
        for (int i = 0; i < nu; ++i)
            for (int j = 0; j < nv; ++j)
                f.at(i, j) = rat(num(rng), den(rng));
        SeriesV alpha = SeriesV::one(nv);
        SeriesV beta = SeriesV::one(nv);
        for (int k = 1; k < nv; ++k) {
            alpha[k] = rat(num(rng), den(rng));
            beta[k] = rat(num(rng), den(rng));
        }
        const Rat base = det_bareiss(coeff_matrix(f, block));
        const Series2D right = scale_v(substitute_v(f, beta), alpha);
        CHECK(det_bareiss(coeff_matrix(right, block)) == base);

        const Series2D left = scale_u(substitute_u(f, beta.truncated(nu)), alpha.truncated(nu));
        CHECK(det_bareiss(coeff_matrix(left, block)) == base);
    }
}

#include <doctest.h>

#include "aztec/errors.hpp"
#include "aztec/linalg.hpp"
#include "aztec/paths.hpp"
#include "aztec/series.hpp"
#include "test_util.hpp"

using namespace aztec;

TEST_CASE("weighted Delannoy numbers") {
    DelannoyTable t(unit_weights());
    CHECK(t.delannoy(1, 2) == rat(5));
    CHECK(t.delannoy(2, 2) == rat(13));
    CHECK(t.delannoy(0, 0) == rat(1));
    CHECK(t.delannoy(-1, 3) == rat(0));

    DelannoyTable w({rat(2), rat(3), rat(5)});
    for (long i = 0; i <= 4; ++i)
        CHECK(w.delannoy(i, 0) == pow_rat(rat(2), i));
    // D(1,1) = w1 w2 + w2 w1 + w3
    CHECK(w.delannoy(1, 1) == rat(17));
}

TEST_CASE("H-Delannoy numbers") {
    DelannoyTable t(unit_weights());
    CHECK(t.h_delannoy(1, 1) == rat(4));
    CHECK(t.h_delannoy(1, 0) == rat(2));
    DelannoyTable w({rat(2), rat(3), rat(5)});
    for (long j = 0; j <= 3; ++j)
        CHECK(w.h_delannoy(0, j) == pow_rat(rat(3), j + 1));
}

TEST_CASE("brute-forced single path families match Delannoy numbers") {
    DelannoyTable t(unit_weights());
    // n = 1 families consist of a single path from (-1, 1) to (r-1, 1+?)
    for (long r = 0; r <= 3; ++r) {
        CHECK(brute_force_path_count({0, r, 1, PathKind::Delannoy}, unit_weights()) ==
              t.delannoy(r, 0));
        CHECK(brute_force_path_count({0, r, 1, PathKind::HDelannoy}, unit_weights()) ==
              t.h_delannoy(r, 0));
    }
    CHECK(brute_force_path_count({0, 1, 1, PathKind::Delannoy}, unit_weights()) == rat(1));
}

TEST_CASE("LGV matrix entries and determinants") {
    const MatQ m = lgv_matrix({0, 1, 1, PathKind::Delannoy}, unit_weights());
    CHECK(m.rows() == 1);
    CHECK(m(0, 0) == rat(1)); // D(1, 0)

    CHECK(det_bareiss(lgv_matrix({1, 1, 0, PathKind::Delannoy}, unit_weights())) == rat(1));

    // negative first arguments give zero entries
    const MatQ h = lgv_matrix({0, 0, 2, PathKind::Delannoy}, unit_weights());
    CHECK(h(0, 1) == rat(0)); // D(-1, 1)
}

TEST_CASE("LGV determinant equals the brute-force count") {
    const std::vector<WeightTriple> weights = {
        {rat(1), rat(1), rat(1)}, {rat(1), rat(0), rat(1)}, {rat(1), rat(1), rat(0)},
        {rat(2), rat(1), rat(1)}, {rat(1), rat(-1), rat(1)},
    };
    for (long s = 0; s <= 2; ++s)
        for (long r = 0; r <= 2; ++r)
            for (long n = 1; n <= 3; ++n)
                for (PathKind kind : {PathKind::Delannoy, PathKind::HDelannoy})
                    for (const WeightTriple& w : weights) {
                        const PathFamilyParams params{s, r, n, kind};
                        CHECK(brute_force_path_count(params, w) ==
                              det_bareiss(lgv_matrix(params, w)));
                    }
}

TEST_CASE("path systems are valid and disjoint") {
    const PathFamilyParams params{1, 1, 3, PathKind::Delannoy};
    const Partition lambda = arithmetic_partition(1, 1, 3);
    const auto systems = enumerate_path_systems(params);
    CHECK(!systems.empty());
    for (const PathSystem& p : systems)
        CHECK(is_valid_system(p, lambda, PathKind::Delannoy));

    const PathFamilyParams hat{1, 1, 3, PathKind::HDelannoy};
    for (const PathSystem& p : enumerate_path_systems(hat)) {
        CHECK(is_valid_system(p, lambda, PathKind::HDelannoy));
        for (const LatticePath& path : p.paths)
            if (!path.steps.empty())
                CHECK(path.steps.back() != Step::East);
    }
}

TEST_CASE("east-step vanishing with w1 = 0 and r >= 1") {
    // every Delannoy system in the family contains an east step
    for (long s = 0; s <= 2; ++s)
        for (long r = 1; r <= 2; ++r)
            CHECK(brute_force_path_count({s, r, 2, PathKind::Delannoy},
                                         {rat(0), rat(1), rat(1)}) == rat(0));
}

TEST_CASE("weight rescaling identities for path counts") {
    const Partition lambda = arithmetic_partition(2, 1, 3);
    const PathFamilyParams params{2, 1, 3, PathKind::Delannoy};
    const PathFamilyParams hat{2, 1, 3, PathKind::HDelannoy};
    const Rat c = rat(-2, 3);
    const WeightTriple base{rat(1), rat(3), rat(2)};
    const long n = 3;

    const Rat v = brute_force_path_count(params, base);
    CHECK(brute_force_path_count(params, {c * base.w1, base.w2, c * base.w3}) ==
          pow_rat(c, lambda.size()) * v);
    CHECK(brute_force_path_count(params, {base.w1, c * base.w2, c * base.w3}) ==
          pow_rat(c, n * (n - 1) / 2) * v);

    const Rat vh = brute_force_path_count(hat, base);
    CHECK(brute_force_path_count(hat, {c * base.w1, base.w2, c * base.w3}) ==
          pow_rat(c, lambda.size()) * vh);
    CHECK(brute_force_path_count(hat, {base.w1, c * base.w2, c * base.w3}) ==
          pow_rat(c, n * (n + 1) / 2) * vh);
}

TEST_CASE("binomial determinant of east/north paths") {
    // det C((s+1)i + r, j) = (s+1)^C(n,2); these are the (1,1,0) LGV matrices
    for (long s = 0; s <= 3; ++s)
        for (long r = 0; r <= 2; ++r)
            for (long n = 1; n <= 5; ++n) {
                MatQ m(n, n);
                for (long i = 0; i < n; ++i)
                    for (long j = 0; j < n; ++j)
                        m(i, j) = Rat(binomial((s + 1) * i + r, j));
                CHECK(det_bareiss(m) == pow_rat(rat(s + 1), n * (n - 1) / 2));
                CHECK(mat_eq(m, lgv_matrix({s, r, n, PathKind::Delannoy},
                                           {rat(1), rat(1), rat(0)})));
            }
}

TEST_CASE("recurrence matches the generating functions") {
    // D(i,j) = [u^i v^j] 1/(1 - w1 u - w2 v - w3 uv)
    // H(i,j) = [u^i v^j] (w2 + w3 u)/(1 - w1 u - w2 v - w3 uv)
    const int order = 9;
    for (const WeightTriple& w : {WeightTriple{rat(1), rat(1), rat(1)},
                                  WeightTriple{rat(2), rat(-1), rat(1, 3)},
                                  WeightTriple{rat(1), rat(0), rat(5)}}) {
        Series2D denom(order, order);
        denom.at(0, 0) = 1;
        denom.at(1, 0) = -w.w1;
        denom.at(0, 1) = -w.w2;
        denom.at(1, 1) = -w.w3;
        const Series2D d_gf = denom.inverse();
        Series2D numer(order, order);
        numer.at(0, 0) = w.w2;
        numer.at(1, 0) = w.w3;
        const Series2D h_gf = numer * d_gf;

        DelannoyTable table(w);
        for (int i = 0; i < order; ++i)
            for (int j = 0; j < order; ++j) {
                CHECK(table.delannoy(i, j) == d_gf.at(i, j));
                CHECK(table.h_delannoy(i, j) == h_gf.at(i, j));
            }
    }
}

TEST_CASE("tuple cap refuses oversized instances") {
    PathEnumerationOptions tight;
    tight.tuple_cap = 2;
    CHECK_THROWS_AS(enumerate_path_systems({2, 2, 3, PathKind::Delannoy}, tight),
                    CapExceededError);
}

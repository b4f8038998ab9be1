#include <doctest.h>

#include "aztec/errors.hpp"
#include "aztec/tilings.hpp"

using namespace aztec;

TEST_CASE("tiny domains") {
    CHECK(count_tilings(aztec_type1(Partition{1})) == 1);
    CHECK(count_tilings(aztec_type1(Partition{2, 1})) == 4);
    CHECK(count_tilings(prototype_domain(0, 0)) == 1); // empty tiling
    CHECK(weighted_tiling_count(prototype_domain(0, 0), unit_weights()) == rat(1));
    // odd cell count: no tiling exists
    CHECK(count_tilings(prototype_domain(1, 1)) == 0);
    CHECK(weighted_tiling_count(prototype_domain(1, 1), unit_weights()) == rat(0));
}

TEST_CASE("staircase count at n = 4") {
    const AztecDomain domain = aztec_type1(arithmetic_partition(1, 1, 4));
    CHECK(count_tilings(domain) == 3328);
    CHECK(weighted_tiling_count(domain, unit_weights()) == rat(3328));
}

TEST_CASE("cell cap guards the brute force") {
    const AztecDomain domain = aztec_type1(arithmetic_partition(1, 1, 4));
    EnumerationOptions tight;
    tight.cell_cap = 10;
    CHECK_THROWS_AS(count_tilings(domain, tight), CapExceededError);
}

TEST_CASE("every tiling covers the domain once and respects step identities") {
    for (long s = 0; s <= 2; ++s)
        for (long r = 0; r <= 2; ++r)
            for (long n = 1; n <= 3; ++n) {
                const Partition lambda = arithmetic_partition(s, r, n);
                const long size = lambda.size();

                const AztecDomain t1 = aztec_type1(lambda);
                for_each_tiling(t1, [&](const Tiling& t) {
                    REQUIRE(is_tiling_of(t, t1));
                    CHECK(t.count(DominoType::D1) + t.count(DominoType::D3) == size);
                    CHECK(t.count(DominoType::D2) + t.count(DominoType::D3) ==
                          n * (n - 1) / 2);
                });

                const AztecDomain t2 = aztec_type2(lambda);
                for_each_tiling(t2, [&](const Tiling& t) {
                    REQUIRE(is_tiling_of(t, t2));
                    CHECK(t.count(DominoType::D1) + t.count(DominoType::D3) == size);
                    CHECK(t.count(DominoType::D2) + t.count(DominoType::D3) ==
                          n * (n + 1) / 2);
                });
            }
}

TEST_CASE("weight scaling laws for tilings") {
    const Partition lambda = arithmetic_partition(1, 1, 3);
    const AztecDomain t1 = aztec_type1(lambda);
    const AztecDomain t2 = aztec_type2(lambda);
    const long n = 3;
    const Rat c = rat(3, 2);
    const WeightTriple base{rat(1), rat(2), rat(1)};

    const Rat v1 = weighted_tiling_count(t1, base);
    CHECK(weighted_tiling_count(t1, {c * base.w1, base.w2, c * base.w3}) ==
          pow_rat(c, lambda.size()) * v1);
    CHECK(weighted_tiling_count(t1, {base.w1, c * base.w2, c * base.w3}) ==
          pow_rat(c, n * (n - 1) / 2) * v1);

    const Rat v2 = weighted_tiling_count(t2, base);
    CHECK(weighted_tiling_count(t2, {c * base.w1, base.w2, c * base.w3}) ==
          pow_rat(c, lambda.size()) * v2);
    CHECK(weighted_tiling_count(t2, {base.w1, c * base.w2, c * base.w3}) ==
          pow_rat(c, n * (n + 1) / 2) * v2);
}

TEST_CASE("weighted count with unit weights is the cardinality") {
    for (long s = 0; s <= 1; ++s)
        for (long r = 0; r <= 2; ++r) {
            const AztecDomain domain = aztec_type1(arithmetic_partition(s, r, 3));
            CHECK(weighted_tiling_count(domain, unit_weights()) ==
                  Rat(count_tilings(domain)));
        }
}

TEST_CASE("domino classification") {
    // vertical with gray bottom is D1, with gray top is D2
    const Domino d1{Cell{0, -1}, Orientation::Vertical}; // bottom diagonal 1 (gray)
    CHECK(d1.type() == DominoType::D1);
    const Domino d2{Cell{0, -2}, Orientation::Vertical}; // bottom diagonal 2 (white)
    CHECK(d2.type() == DominoType::D2);
    const Domino d3{Cell{0, -1}, Orientation::Horizontal}; // left gray
    CHECK(d3.type() == DominoType::D3);
    const Domino d4{Cell{0, 0}, Orientation::Horizontal}; // left white
    CHECK(d4.type() == DominoType::D4);
}

TEST_CASE("renders") {
    CHECK(render_ascii(prototype_domain(0, 0)).empty());
    const std::string empty_svg = render_svg(prototype_domain(0, 0));
    CHECK(empty_svg.find("<rect") == std::string::npos);

    const AztecDomain domain = aztec_type1(arithmetic_partition(1, 1, 4));
    const std::string ascii = render_ascii(domain);
    CHECK(std::count(ascii.begin(), ascii.end(), 'W') + std::count(ascii.begin(), ascii.end(), 'g') ==
          44);

    const std::string svg = render_svg(domain);
    std::size_t rects = 0;
    for (std::size_t pos = svg.find("<rect"); pos != std::string::npos;
         pos = svg.find("<rect", pos + 1))
        ++rects;
    CHECK(rects == 44);

    // a tiled render covers every cell exactly once: 44 cell rects plus one
    // outline per domino (22 dominoes)
    const std::vector<Tiling> tilings = enumerate_tilings(aztec_type1(Partition{2, 1}));
    REQUIRE(tilings.size() == 4);
    const AztecDomain small = aztec_type1(Partition{2, 1});
    for (const Tiling& t : tilings) {
        const std::string tiled = render_svg(small, &t);
        std::size_t outlines = 0;
        for (std::size_t pos = tiled.find("fill=\"none\""); pos != std::string::npos;
             pos = tiled.find("fill=\"none\"", pos + 1))
            ++outlines;
        CHECK(outlines == t.dominoes.size());
        const std::string text = render_ascii(small, &t);
        CHECK(text.find('W') == std::string::npos); // every cell overwritten by a domino glyph
        CHECK(text.find('g') == std::string::npos);
    }
}

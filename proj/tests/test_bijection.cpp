#include <doctest.h>

#include <set>

#include "aztec/bijection.hpp"
#include "aztec/linalg.hpp"

using namespace aztec;

namespace {

// Dominoes keyed by the drawn position of their lower-left unit square.
Tiling build_tiling(const std::vector<std::pair<int, int>>& vertical,
                    const std::vector<std::pair<int, int>>& horizontal) {
    Tiling t;
    for (auto [x, y] : vertical)
        t.dominoes.push_back(Domino{Cell{x, y}, Orientation::Vertical});
    for (auto [x, y] : horizontal)
        t.dominoes.push_back(Domino{Cell{x, y}, Orientation::Horizontal});
    for (const Domino& d : t.dominoes)
        ++t.counts[static_cast<std::size_t>(d.type())];
    return t;
}

std::string step_string(const LatticePath& path) {
    std::string out;
    for (Step s : path.steps)
        out += (s == Step::East) ? 'E' : (s == Step::North ? 'N' : 'D');
    return out;
}

} // namespace

TEST_CASE("the reference Type 1 tiling maps to the reference path system") {
    // the worked tiling of the (7,5,3,1) Type 1 domain
    const Tiling tiling = build_tiling(
        // vertical dominoes (D1 and D2 mixed; classification is derived)
        {{0, -7}, {0, -5}, {0, -1}, {1, 0}, {2, -3}, {3, -4}, {3, -2}, {3, 0}, {4, 1},
         {5, -2}, {6, -1}, {7, 2}, {2, 0}, {4, -2}},
        // horizontal dominoes
        {{0, -3}, {1, -4}, {5, 2}, {8, 3}, {0, -2}, {1, -5}, {1, -1}, {2, 2}, {3, 3},
         {4, 0}, {4, 4}, {5, 1}, {5, 3}, {5, 5}, {6, 4}, {6, 6}, {7, 1}, {7, 5}, {8, 2},
         {8, 4}});
    CHECK(tiling.count(DominoType::D1) == 12);
    CHECK(tiling.count(DominoType::D2) == 2);
    CHECK(tiling.count(DominoType::D3) == 4);
    CHECK(tiling.count(DominoType::D4) == 16);

    const AztecDomain domain = aztec_type1(Partition{7, 5, 3, 1});
    REQUIRE(is_tiling_of(tiling, domain));

    const PathSystem system = phi(tiling, domain);
    REQUIRE(system.paths.size() == 4);
    CHECK(step_string(system.paths[0]) == "EENEEDED");
    CHECK(step_string(system.paths[1]) == "DEENEE");
    CHECK(step_string(system.paths[2]) == "EDE");
    CHECK(step_string(system.paths[3]) == "E");
    CHECK(system.paths[0].end() == Point{6, 4});
    CHECK(system.paths[1].end() == Point{3, 4});
    CHECK(system.paths[2].end() == Point{0, 4});
    CHECK(system.paths[3].end() == Point{-3, 4});
}

TEST_CASE("the reference Type 2 tiling maps to the reference path system") {
    const Tiling tiling = build_tiling(
        {{0, -7}, {0, -5}, {0, -1}, {2, -3}, {2, -1}, {3, -2}, {3, 0}, {4, -1}, {8, 1},
         {1, -7}, {1, -1}, {7, -1}},
        {{0, -3}, {1, -4}, {3, -4}, {4, 1}, {5, 0}, {6, 1}, {9, 2}, {0, -2}, {1, -5},
         {1, 1}, {2, 2}, {3, -3}, {3, 3}, {4, -2}, {4, 2}, {4, 4}, {5, -1}, {5, 3},
         {5, 5}, {6, 2}, {6, 4}, {6, 6}, {7, 3}, {7, 5}, {8, 4}, {9, 3}});
    CHECK(tiling.count(DominoType::D1) == 9);
    CHECK(tiling.count(DominoType::D2) == 3);
    CHECK(tiling.count(DominoType::D3) == 7);
    CHECK(tiling.count(DominoType::D4) == 19);

    const AztecDomain domain = aztec_type2(Partition{7, 5, 3, 1});
    REQUIRE(is_tiling_of(tiling, domain));

    const PathSystem system = phi_hat(tiling, domain);
    REQUIRE(system.paths.size() == 4);
    CHECK(system.count(Step::East) == 9);
    CHECK(system.count(Step::North) == 3);
    CHECK(system.count(Step::NorthEast) == 7);
    CHECK(system.paths[0].end() == Point{6, 5});
    CHECK(system.paths[1].end() == Point{3, 5});
    CHECK(system.paths[2].end() == Point{0, 5});
    CHECK(system.paths[3].end() == Point{-3, 5});
    for (const LatticePath& path : system.paths)
        if (!path.steps.empty())
            CHECK(path.steps.back() != Step::East);
}

TEST_CASE("the unique tiny instances correspond") {
    const AztecDomain domain = aztec_type1(Partition{1});
    const auto tilings = enumerate_tilings(domain);
    REQUIRE(tilings.size() == 1);
    const PathSystem p = phi(tilings[0], domain);
    CHECK(step_string(p.paths[0]) == "E");

    const auto systems = enumerate_path_systems({0, 1, 1, PathKind::Delannoy});
    CHECK(systems.size() == 1);
}

TEST_CASE("step counts, injectivity and cardinality across the small grid") {
    for (long s = 0; s <= 2; ++s)
        for (long r = 0; r <= 2; ++r)
            for (long n = 1; n <= 3; ++n) {
                const Partition lambda = arithmetic_partition(s, r, n);
                for (bool hat : {false, true}) {
                    const AztecDomain domain = hat ? aztec_type2(lambda) : aztec_type1(lambda);
                    std::set<std::string> images;
                    long tilings = 0;
                    for_each_tiling(domain, [&](const Tiling& t) {
                        ++tilings;
                        const PathSystem p = hat ? phi_hat(t, domain) : phi(t, domain);
                        CHECK(p.count(Step::East) == t.count(DominoType::D1));
                        CHECK(p.count(Step::North) == t.count(DominoType::D2));
                        CHECK(p.count(Step::NorthEast) == t.count(DominoType::D3));
                        std::string key;
                        for (const LatticePath& path : p.paths)
                            key += step_string(path) + "|";
                        images.insert(key);
                    });
                    CHECK(static_cast<long>(images.size()) == tilings);
                    const PathFamilyParams family{s, r, n,
                                                  hat ? PathKind::HDelannoy : PathKind::Delannoy};
                    CHECK(static_cast<long>(enumerate_path_systems(family).size()) == tilings);
                }
            }
}

TEST_CASE("weight multiset preservation at (1,1,2)") {
    const Partition lambda = arithmetic_partition(1, 1, 2);
    const AztecDomain domain = aztec_type1(lambda);
    std::multiset<std::array<long, 3>> domino_counts, step_counts;
    for_each_tiling(domain, [&](const Tiling& t) {
        domino_counts.insert({t.count(DominoType::D1), t.count(DominoType::D2),
                              t.count(DominoType::D3)});
        const PathSystem p = phi(t, domain);
        step_counts.insert({p.count(Step::East), p.count(Step::North),
                            p.count(Step::NorthEast)});
    });
    CHECK(domino_counts.size() == 4);
    CHECK(domino_counts == step_counts);
}

TEST_CASE("malformed tilings are rejected") {
    const AztecDomain domain = aztec_type1(Partition{2, 1});
    Tiling wrong; // empty: does not cover the domain
    CHECK_THROWS_AS(phi(wrong, domain), std::invalid_argument);
    const AztecDomain hat_domain = aztec_type2(Partition{2, 1});
    CHECK_THROWS_AS(phi(enumerate_tilings(hat_domain)[0], hat_domain), std::invalid_argument);
}

#pragma once

/**
 * @file paths.hpp
 * @brief Weighted Delannoy and H-Delannoy numbers, the LGV matrices of the
 *        arithmetic-partition path families, and a brute-force oracle that
 *        enumerates nonintersecting path systems directly.
 */

#include <vector>

#include "aztec/eigen_support.hpp"
#include "aztec/shapes.hpp"
#include "aztec/weights.hpp"

namespace aztec {

enum class PathKind { Delannoy, HDelannoy };

struct PathFamilyParams {
    long s = 0;
    long r = 0;
    long n = 1;
    PathKind kind = PathKind::Delannoy;
};

/// Memo table for the weighted Delannoy recurrence
///   D(i,j) = w1 D(i-1,j) + w2 D(i,j-1) + w3 D(i-1,j-1),  D(0,0) = 1,
/// with D = 0 off the first quadrant. One table per weight triple; negative
/// indices short-circuit to 0 and are never stored.
class DelannoyTable {
public:
    explicit DelannoyTable(WeightTriple w) : w_(std::move(w)) {}

    const WeightTriple& weights() const { return w_; }

    Rat delannoy(long i, long j);

    /// H(i,j) = D(i,j+1) - w1 D(i-1,j+1): H-Delannoy paths to (i,j+1).
    Rat h_delannoy(long i, long j);

private:
    void ensure(long imax, long jmax);

    WeightTriple w_;
    std::vector<std::vector<Rat>> table_; // table_[i][j] = D(i,j)
};

/// n x n matrix with entry (i,j) = D_w((s+1)i - j + r, j), or the H variant.
MatQ lgv_matrix(const PathFamilyParams& params, const WeightTriple& w);

enum class Step { East, North, NorthEast };

struct Point {
    long x;
    long y;
    auto operator<=>(const Point&) const = default;
};

struct LatticePath {
    Point start{0, 0};
    std::vector<Step> steps;

    Point end() const;
    std::vector<Point> vertices() const;
};

/// An n-tuple of paths; path j (1-based) runs from (-j, j) to
/// (lambda_j - j, n) for Delannoy kind, or to (lambda_j - j, n+1) with the
/// last step not East for H-Delannoy kind.
struct PathSystem {
    std::vector<LatticePath> paths;

    long count(Step s) const;
    Rat weight(const WeightTriple& w) const;
};

/// Endpoint, step-alphabet, H-tail and pairwise vertex-disjointness check.
bool is_valid_system(const PathSystem& p, const Partition& lambda, PathKind kind);

struct PathEnumerationOptions {
    long tuple_cap = 2'000'000; // refuse larger tuple products; brute-force guard
};

/// All nonintersecting systems for the lambda^(s,r) family, by exhaustive
/// generation and filtering. Independent of the determinant route.
std::vector<PathSystem> enumerate_path_systems(const PathFamilyParams& params,
                                               const PathEnumerationOptions& options = {});

/// Sum of weights over the enumerated systems.
Rat brute_force_path_count(const PathFamilyParams& params, const WeightTriple& w,
                           const PathEnumerationOptions& options = {});

} // namespace aztec

#pragma once

/**
 * @file shapes.hpp
 * @brief Partitions, their circle/bullet boundary encodings, prototype
 *        domains, and the two families of Aztec-type domains.
 *
 * A unit cell is identified by its label (x, y); the cell on diagonal k at
 * position i carries the label (i, i-k). Diagonal index recovers as
 * k = x - y, and the cell is White when k is even, Gray when k is odd.
 * Adjacency in label coordinates: (x+1, y) east, (x, y+1) north.
 */

#include <compare>
#include <optional>
#include <vector>

namespace aztec {

/// Weakly decreasing sequence of nonnegative integers; zero parts allowed.
class Partition {
public:
    explicit Partition(std::vector<long> parts);
    Partition(std::initializer_list<long> parts);

    long length() const { return static_cast<long>(parts_.size()); }
    long part(long j) const { return parts_[static_cast<std::size_t>(j - 1)]; } // 1-based
    long first() const { return parts_.empty() ? 0 : parts_.front(); }
    long size() const; // |lambda|
    const std::vector<long>& parts() const { return parts_; }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<long> parts_;
};

/// The length-n partition (s(n-1)+r, s(n-2)+r, ..., r).
Partition arithmetic_partition(long s, long r, long n);

/// Circle marks an east edge, bullet a north edge of the Young diagram's
/// southeast boundary.
enum class BoundarySymbol { Circle, Bullet };

/// Boundary word of lambda, read from the start of the southeast boundary;
/// length lambda_1 + n with exactly n bullets.
std::vector<BoundarySymbol> boundary_encoding(const Partition& lambda);

/// Inverse of boundary_encoding.
Partition decode_boundary(const std::vector<BoundarySymbol>& symbols);

struct Cell {
    int x;
    int y;

    int diagonal() const { return x - y; }
    bool white() const { return diagonal() % 2 == 0; }
    auto operator<=>(const Cell&) const = default;
};

enum class DomainKind { Prototype, Type1, Type2 };

/// A set of colored unit cells, possibly cut from a prototype by a
/// partition's boundary encoding.
class AztecDomain {
public:
    AztecDomain(std::vector<Cell> cells, DomainKind kind, std::optional<Partition> source);

    const std::vector<Cell>& cells() const { return cells_; } // sorted by (diagonal, x)
    DomainKind kind() const { return kind_; }
    const std::optional<Partition>& source() const { return source_; }

    bool contains(const Cell& c) const;
    long white_count() const;
    long gray_count() const;

private:
    std::vector<Cell> cells_;
    DomainKind kind_;
    std::optional<Partition> source_;
};

/// Canonical cell order used for enumeration: by (diagonal, position).
bool cell_less(const Cell& a, const Cell& b);

/// Uncut prototype with diagonals k = 0..N; diagonal k holds the cells
/// (i, i-k) for 0 <= i < M + ceil(k/2). Empty when M = 0 and N = 0.
AztecDomain prototype_domain(long m, long n);

/// Type 1 domain: prototype(lambda_1, 2n-1) minus the bullet-marked cells
/// of the last diagonal (boundary symbols placed left-bottom to right-top).
AztecDomain aztec_type1(const Partition& lambda);

/// Type 2 domain: prototype(lambda_1, 2n) minus the circle-marked cells.
AztecDomain aztec_type2(const Partition& lambda);

} // namespace aztec

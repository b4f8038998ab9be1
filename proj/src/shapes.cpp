#include "aztec/shapes.hpp"

#include <algorithm>
#include <stdexcept>

namespace aztec {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        if (parts_[j] < 0)
            throw std::invalid_argument("Partition: parts must be nonnegative");
        if (j > 0 && parts_[j] > parts_[j - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Partition::Partition(std::initializer_list<long> parts) : Partition(std::vector<long>(parts)) {}

long Partition::size() const {
    long total = 0;
    for (long p : parts_)
        total += p;
    return total;
}

Partition arithmetic_partition(long s, long r, long n) {
    if (s < 0 || r < 0 || n < 1)
        throw std::invalid_argument("arithmetic_partition: need s, r >= 0 and n >= 1");
    std::vector<long> parts;
    parts.reserve(static_cast<std::size_t>(n));
    for (long j = 1; j <= n; ++j)
        parts.push_back(s * (n - j) + r);
    return Partition(std::move(parts));
}

std::vector<BoundarySymbol> boundary_encoding(const Partition& lambda) {
    // Walk the southeast boundary from its start: for j = n down to 1, the
    // bottom of row j contributes lambda_j - lambda_{j+1} east edges, then
    // the row's right side contributes one north edge.
    const long n = lambda.length();
    std::vector<BoundarySymbol> symbols;
    symbols.reserve(static_cast<std::size_t>(lambda.first() + n));
    for (long j = n; j >= 1; --j) {
        const long next = (j == n) ? 0 : lambda.part(j + 1);
        for (long t = 0; t < lambda.part(j) - next; ++t)
            symbols.push_back(BoundarySymbol::Circle);
        symbols.push_back(BoundarySymbol::Bullet);
    }
    return symbols;
}

Partition decode_boundary(const std::vector<BoundarySymbol>& symbols) {
    std::vector<long> reversed;
    long circles = 0;
    for (BoundarySymbol s : symbols) {
        if (s == BoundarySymbol::Circle)
            ++circles;
        else
            reversed.push_back(circles);
    }
    if (!symbols.empty() && symbols.back() == BoundarySymbol::Circle)
        throw std::invalid_argument("decode_boundary: encoding must end with a bullet");
    std::reverse(reversed.begin(), reversed.end());
    return Partition(std::move(reversed));
}

bool cell_less(const Cell& a, const Cell& b) {
    if (a.diagonal() != b.diagonal())
        return a.diagonal() < b.diagonal();
    return a.x < b.x;
}

AztecDomain::AztecDomain(std::vector<Cell> cells, DomainKind kind, std::optional<Partition> source)
    : cells_(std::move(cells)), kind_(kind), source_(std::move(source)) {
    std::sort(cells_.begin(), cells_.end(), cell_less);
}

bool AztecDomain::contains(const Cell& c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c, cell_less);
}

long AztecDomain::white_count() const {
    return static_cast<long>(std::count_if(cells_.begin(), cells_.end(),
                                           [](const Cell& c) { return c.white(); }));
}

long AztecDomain::gray_count() const {
    return static_cast<long>(cells_.size()) - white_count();
}

namespace {

std::vector<Cell> prototype_cells(long m, long n_diagonals) {
    std::vector<Cell> cells;
    for (long k = 0; k <= n_diagonals; ++k) {
        const long len = m + (k + 1) / 2;
        for (long i = 0; i < len; ++i)
            cells.push_back(Cell{static_cast<int>(i), static_cast<int>(i - k)});
    }
    return cells;
}

AztecDomain cut_domain(const Partition& lambda, long last_diagonal, BoundarySymbol removed,
                       DomainKind kind) {
    const long m = lambda.first();
    std::vector<Cell> cells = prototype_cells(m, last_diagonal);
    const std::vector<BoundarySymbol> symbols = boundary_encoding(lambda);

    if (last_diagonal >= 0) {
        const long last_len = m + (last_diagonal + 1) / 2;
        if (static_cast<long>(symbols.size()) != last_len)
            throw std::logic_error("Aztec domain: boundary encoding does not match last diagonal");
        std::vector<Cell> kept;
        kept.reserve(cells.size());
        for (const Cell& c : cells) {
            if (c.diagonal() == last_diagonal) {
                // symbols run left-bottom to right-top, i.e. by position i
                if (symbols[static_cast<std::size_t>(c.x)] == removed)
                    continue;
            }
            kept.push_back(c);
        }
        cells = std::move(kept);
    }
    return AztecDomain(std::move(cells), kind, lambda);
}

} // namespace

AztecDomain prototype_domain(long m, long n) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("prototype_domain: need m, n >= 0");
    return AztecDomain(prototype_cells(m, n), DomainKind::Prototype, std::nullopt);
}

AztecDomain aztec_type1(const Partition& lambda) {
    return cut_domain(lambda, 2 * lambda.length() - 1, BoundarySymbol::Bullet, DomainKind::Type1);
}

AztecDomain aztec_type2(const Partition& lambda) {
    return cut_domain(lambda, 2 * lambda.length(), BoundarySymbol::Circle, DomainKind::Type2);
}

} // namespace aztec

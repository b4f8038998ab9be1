#include "aztec/bijection.hpp"

#include <map>
#include <stdexcept>

namespace aztec {

namespace {

// Step start points under the flip-then-rotate transform, resolved to an
// affine map on the anchor cell (x, y):
//   D1 (x - y odd):  East      from ((x+y-1)/2, (x-y+1)/2)
//   D2 (x - y even): North     from ((x+y)/2,   (x-y)/2)
//   D3 (x - y odd):  NorthEast from ((x+y-1)/2, (x-y+1)/2)
// The divisions are exact thanks to the stated parities.
std::pair<Point, Step> domino_step(const Domino& d) {
    const long x = d.anchor.x;
    const long y = d.anchor.y;
    switch (d.type()) {
    case DominoType::D1:
        return {Point{(x + y - 1) / 2, (x - y + 1) / 2}, Step::East};
    case DominoType::D2:
        return {Point{(x + y) / 2, (x - y) / 2}, Step::North};
    case DominoType::D3:
        return {Point{(x + y - 1) / 2, (x - y + 1) / 2}, Step::NorthEast};
    case DominoType::D4:
        break;
    }
    throw std::logic_error("domino_step: D4 carries no step");
}

Point advance(Point p, Step s) {
    if (s != Step::North)
        ++p.x;
    if (s != Step::East)
        ++p.y;
    return p;
}

PathSystem map_tiling(const Tiling& tiling, const AztecDomain& domain, PathKind kind) {
    if (!is_tiling_of(tiling, domain))
        throw std::invalid_argument("bijection: dominoes do not tile the given domain");
    if (!domain.source())
        throw std::invalid_argument("bijection: domain carries no source partition");
    const Partition& lambda = *domain.source();
    const long n = lambda.length();

    std::map<Point, Step> outgoing;
    for (const Domino& d : tiling.dominoes) {
        if (d.type() == DominoType::D4)
            continue;
        auto [from, step] = domino_step(d);
        if (!outgoing.emplace(from, step).second)
            throw std::invalid_argument("bijection: two steps share a start point");
    }

    PathSystem system;
    std::size_t consumed = 0;
    for (long j = 1; j <= n; ++j) {
        LatticePath path;
        path.start = Point{-j, j};
        Point at = path.start;
        for (auto it = outgoing.find(at); it != outgoing.end(); it = outgoing.find(at)) {
            path.steps.push_back(it->second);
            at = advance(at, it->second);
            ++consumed;
        }
        system.paths.push_back(std::move(path));
    }
    if (consumed != outgoing.size())
        throw std::invalid_argument("bijection: dangling steps not reachable from any start");
    if (!is_valid_system(system, lambda, kind))
        throw std::invalid_argument("bijection: image is not a valid nonintersecting system");
    return system;
}

} // namespace

PathSystem phi(const Tiling& tiling, const AztecDomain& domain) {
    if (domain.kind() != DomainKind::Type1)
        throw std::invalid_argument("phi: expects a Type 1 domain");
    return map_tiling(tiling, domain, PathKind::Delannoy);
}

PathSystem phi_hat(const Tiling& tiling, const AztecDomain& domain) {
    if (domain.kind() != DomainKind::Type2)
        throw std::invalid_argument("phi_hat: expects a Type 2 domain");
    return map_tiling(tiling, domain, PathKind::HDelannoy);
}

} // namespace aztec

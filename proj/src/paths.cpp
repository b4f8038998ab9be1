#include "aztec/paths.hpp"

#include <set>

#include "aztec/errors.hpp"

namespace aztec {

void DelannoyTable::ensure(long imax, long jmax) {
    const long rows = static_cast<long>(table_.size());
    const long cols = rows == 0 ? 0 : static_cast<long>(table_[0].size());
    if (imax < rows && jmax < cols)
        return;
    const long new_rows = std::max(imax + 1, rows);
    const long new_cols = std::max(jmax + 1, cols);
    std::vector<std::vector<Rat>> fresh(static_cast<std::size_t>(new_rows),
                                        std::vector<Rat>(static_cast<std::size_t>(new_cols)));
    for (long i = 0; i < new_rows; ++i)
        for (long j = 0; j < new_cols; ++j) {
            if (i == 0 && j == 0) {
                fresh[0][0] = 1;
                continue;
            }
            Rat acc(0);
            if (i > 0)
                acc += w_.w1 * fresh[i - 1][j];
            if (j > 0)
                acc += w_.w2 * fresh[i][j - 1];
            if (i > 0 && j > 0)
                acc += w_.w3 * fresh[i - 1][j - 1];
            fresh[i][j] = acc;
        }
    table_ = std::move(fresh);
}

Rat DelannoyTable::delannoy(long i, long j) {
    if (i < 0 || j < 0)
        return Rat(0);
    ensure(i, j);
    return table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

Rat DelannoyTable::h_delannoy(long i, long j) {
    return delannoy(i, j + 1) - w_.w1 * delannoy(i - 1, j + 1);
}

MatQ lgv_matrix(const PathFamilyParams& params, const WeightTriple& w) {
    if (params.n < 0)
        throw std::invalid_argument("lgv_matrix: n must be nonnegative");
    DelannoyTable table(w);
    MatQ m(params.n, params.n);
    for (long i = 0; i < params.n; ++i)
        for (long j = 0; j < params.n; ++j) {
            const long first = (params.s + 1) * i - j + params.r;
            m(i, j) = (params.kind == PathKind::Delannoy) ? table.delannoy(first, j)
                                                          : table.h_delannoy(first, j);
        }
    return m;
}

Point LatticePath::end() const {
    Point p = start;
    for (Step s : steps) {
        if (s != Step::North)
            ++p.x;
        if (s != Step::East)
            ++p.y;
    }
    return p;
}

std::vector<Point> LatticePath::vertices() const {
    std::vector<Point> out;
    out.reserve(steps.size() + 1);
    Point p = start;
    out.push_back(p);
    for (Step s : steps) {
        if (s != Step::North)
            ++p.x;
        if (s != Step::East)
            ++p.y;
        out.push_back(p);
    }
    return out;
}

long PathSystem::count(Step s) const {
    long n = 0;
    for (const LatticePath& p : paths)
        for (Step t : p.steps)
            if (t == s)
                ++n;
    return n;
}

Rat PathSystem::weight(const WeightTriple& w) const {
    return pow_rat(w.w1, count(Step::East)) * pow_rat(w.w2, count(Step::North)) *
           pow_rat(w.w3, count(Step::NorthEast));
}

bool is_valid_system(const PathSystem& p, const Partition& lambda, PathKind kind) {
    const long n = lambda.length();
    if (static_cast<long>(p.paths.size()) != n)
        return false;
    const long target_y = (kind == PathKind::Delannoy) ? n : n + 1;
    std::set<Point> seen;
    std::size_t total = 0;
    for (long j = 1; j <= n; ++j) {
        const LatticePath& path = p.paths[static_cast<std::size_t>(j - 1)];
        if (path.start != Point{-j, j})
            return false;
        if (path.end() != Point{lambda.part(j) - j, target_y})
            return false;
        if (kind == PathKind::HDelannoy && !path.steps.empty() && path.steps.back() == Step::East)
            return false;
        for (const Point& v : path.vertices()) {
            seen.insert(v);
            ++total;
        }
    }
    return seen.size() == total; // pairwise vertex-disjoint
}

namespace {

void collect_paths(Point at, const Point& target, bool forbid_east_tail,
                   std::vector<Step>& steps, std::vector<LatticePath>& out, const Point& start) {
    if (at == target) {
        if (!(forbid_east_tail && !steps.empty() && steps.back() == Step::East))
            out.push_back(LatticePath{start, steps});
        return;
    }
    if (at.x > target.x || at.y > target.y)
        return;
    for (Step s : {Step::East, Step::North, Step::NorthEast}) {
        Point next = at;
        if (s != Step::North)
            ++next.x;
        if (s != Step::East)
            ++next.y;
        steps.push_back(s);
        collect_paths(next, target, forbid_east_tail, steps, out, start);
        steps.pop_back();
    }
}

std::vector<LatticePath> single_paths(Point start, Point target, bool forbid_east_tail) {
    std::vector<LatticePath> out;
    std::vector<Step> steps;
    collect_paths(start, target, forbid_east_tail, steps, out, start);
    return out;
}

void assemble(const std::vector<std::vector<LatticePath>>& candidates, std::size_t j,
              std::set<Point>& occupied, PathSystem& current, std::vector<PathSystem>& out) {
    if (j == candidates.size()) {
        out.push_back(current);
        return;
    }
    for (const LatticePath& path : candidates[j]) {
        const std::vector<Point> verts = path.vertices();
        bool clash = false;
        for (const Point& v : verts) {
            if (occupied.count(v)) {
                clash = true;
                break;
            }
        }
        if (clash)
            continue;
        occupied.insert(verts.begin(), verts.end());
        current.paths.push_back(path);
        assemble(candidates, j + 1, occupied, current, out);
        current.paths.pop_back();
        for (const Point& v : verts)
            occupied.erase(v);
    }
}

} // namespace

std::vector<PathSystem> enumerate_path_systems(const PathFamilyParams& params,
                                               const PathEnumerationOptions& options) {
    if (params.n == 0)
        return {PathSystem{}};
    const Partition lambda = arithmetic_partition(params.s, params.r, params.n);
    const bool h_kind = params.kind == PathKind::HDelannoy;
    const long target_y = h_kind ? params.n + 1 : params.n;

    std::vector<std::vector<LatticePath>> candidates;
    long tuple_bound = 1;
    for (long j = 1; j <= params.n; ++j) {
        candidates.push_back(single_paths(Point{-j, j}, Point{lambda.part(j) - j, target_y}, h_kind));
        tuple_bound *= std::max<long>(1, static_cast<long>(candidates.back().size()));
        if (tuple_bound > options.tuple_cap)
            throw CapExceededError("path-system enumeration refused: more than " +
                                   std::to_string(options.tuple_cap) + " candidate tuples");
    }

    std::vector<PathSystem> out;
    std::set<Point> occupied;
    PathSystem current;
    assemble(candidates, 0, occupied, current, out);
    return out;
}

Rat brute_force_path_count(const PathFamilyParams& params, const WeightTriple& w,
                           const PathEnumerationOptions& options) {
    Rat total(0);
    for (const PathSystem& p : enumerate_path_systems(params, options))
        total += p.weight(w);
    return total;
}

} // namespace aztec

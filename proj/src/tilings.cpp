#include "aztec/tilings.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "aztec/errors.hpp"

namespace aztec {

namespace {

class TilingSearch {
public:
    TilingSearch(const AztecDomain& domain, const std::function<void(const Tiling&)>& visit)
        : cells_(domain.cells()), visit_(visit), covered_(cells_.size(), false) {
        for (std::size_t idx = 0; idx < cells_.size(); ++idx)
            index_[cells_[idx]] = idx;
    }

    void run() { extend(0); }

private:
    std::optional<std::size_t> index_of(const Cell& c) const {
        auto it = index_.find(c);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    void extend(std::size_t from) {
        std::size_t first = from;
        while (first < cells_.size() && covered_[first])
            ++first;
        if (first == cells_.size()) {
            visit_(current_);
            return;
        }
        const Cell c = cells_[first];
        // Partner cells in fixed order: north, south, east, west. The first
        // uncovered cell in (diagonal, position) order has its north and
        // west neighbours already covered, so only two branches can fire.
        const std::array<Domino, 4> candidates{
            Domino{c, Orientation::Vertical},                     // c + north
            Domino{Cell{c.x, c.y - 1}, Orientation::Vertical},    // south + c
            Domino{c, Orientation::Horizontal},                   // c + east
            Domino{Cell{c.x - 1, c.y}, Orientation::Horizontal},  // west + c
        };
        for (const Domino& d : candidates) {
            const auto a = index_of(d.anchor);
            const auto b = index_of(d.second());
            if (!a || !b || covered_[*a] || covered_[*b])
                continue;
            covered_[*a] = covered_[*b] = true;
            current_.dominoes.push_back(d);
            ++current_.counts[static_cast<std::size_t>(d.type())];
            extend(first + 1);
            --current_.counts[static_cast<std::size_t>(d.type())];
            current_.dominoes.pop_back();
            covered_[*a] = covered_[*b] = false;
        }
    }

    const std::vector<Cell>& cells_;
    const std::function<void(const Tiling&)>& visit_;
    std::vector<bool> covered_;
    std::map<Cell, std::size_t> index_;
    Tiling current_;
};

} // namespace

void for_each_tiling(const AztecDomain& domain, const std::function<void(const Tiling&)>& visit,
                     const EnumerationOptions& options) {
    if (static_cast<long>(domain.cells().size()) > options.cell_cap)
        throw CapExceededError("tiling enumeration refused: domain has " +
                               std::to_string(domain.cells().size()) + " cells, cap is " +
                               std::to_string(options.cell_cap));
    TilingSearch(domain, visit).run();
}

std::vector<Tiling> enumerate_tilings(const AztecDomain& domain, const EnumerationOptions& options) {
    std::vector<Tiling> out;
    for_each_tiling(domain, [&out](const Tiling& t) { out.push_back(t); }, options);
    return out;
}

long count_tilings(const AztecDomain& domain, const EnumerationOptions& options) {
    long n = 0;
    for_each_tiling(domain, [&n](const Tiling&) { ++n; }, options);
    return n;
}

Rat weighted_tiling_count(const AztecDomain& domain, const WeightTriple& w,
                          const EnumerationOptions& options) {
    Rat total(0);
    for_each_tiling(domain,
                    [&](const Tiling& t) {
                        total += pow_rat(w.w1, t.count(DominoType::D1)) *
                                 pow_rat(w.w2, t.count(DominoType::D2)) *
                                 pow_rat(w.w3, t.count(DominoType::D3));
                    },
                    options);
    return total;
}

bool is_tiling_of(const Tiling& tiling, const AztecDomain& domain) {
    std::vector<Cell> covered;
    covered.reserve(2 * tiling.dominoes.size());
    for (const Domino& d : tiling.dominoes) {
        covered.push_back(d.anchor);
        covered.push_back(d.second());
    }
    std::sort(covered.begin(), covered.end(), cell_less);
    if (std::adjacent_find(covered.begin(), covered.end()) != covered.end())
        return false;
    return covered == domain.cells();
}

namespace {

struct Box {
    int xmin = 0, xmax = -1, ymin = 0, ymax = -1;
};

Box bounding_box(const AztecDomain& domain) {
    Box b;
    bool first = true;
    for (const Cell& c : domain.cells()) {
        if (first) {
            b = {c.x, c.x, c.y, c.y};
            first = false;
        } else {
            b.xmin = std::min(b.xmin, c.x);
            b.xmax = std::max(b.xmax, c.x);
            b.ymin = std::min(b.ymin, c.y);
            b.ymax = std::max(b.ymax, c.y);
        }
    }
    return b;
}

} // namespace

std::string render_ascii(const AztecDomain& domain, const Tiling* tiling) {
    if (domain.cells().empty())
        return "";
    std::map<Cell, char> glyph;
    for (const Cell& c : domain.cells())
        glyph[c] = c.white() ? 'W' : 'g';
    if (tiling) {
        for (const Domino& d : tiling->dominoes) {
            const char t = static_cast<char>('1' + static_cast<int>(d.type()));
            glyph[d.anchor] = t;
            glyph[d.second()] = t;
        }
    }
    const Box b = bounding_box(domain);
    std::string out;
    for (int y = b.ymax; y >= b.ymin; --y) {
        for (int x = b.xmin; x <= b.xmax; ++x) {
            auto it = glyph.find(Cell{x, y});
            out += (it == glyph.end()) ? '.' : it->second;
        }
        out += '\n';
    }
    return out;
}

std::string render_svg(const AztecDomain& domain, const Tiling* tiling) {
    constexpr int scale = 20;
    constexpr int margin = 10;
    const Box b = bounding_box(domain);
    const int width = domain.cells().empty() ? 0 : (b.xmax - b.xmin + 1);
    const int height = domain.cells().empty() ? 0 : (b.ymax - b.ymin + 1);

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width * scale + 2 * margin
        << "\" height=\"" << height * scale + 2 * margin << "\">\n";
    // screen y grows downward; cell (x, y) maps to column x - xmin, row ymax - y
    auto px = [&](int x) { return margin + (x - b.xmin) * scale; };
    auto py = [&](int y) { return margin + (b.ymax - y) * scale; };
    for (const Cell& c : domain.cells()) {
        svg << "  <rect x=\"" << px(c.x) << "\" y=\"" << py(c.y) << "\" width=\"" << scale
            << "\" height=\"" << scale << "\" fill=\"" << (c.white() ? "#ffffff" : "#c8c8c8")
            << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    }
    if (tiling) {
        static const char* colors[4] = {"#d62728", "#1f77b4", "#2ca02c", "#555555"};
        for (const Domino& d : tiling->dominoes) {
            const Cell a = d.anchor;
            const bool vertical = d.orientation == Orientation::Vertical;
            const int w = vertical ? scale : 2 * scale;
            const int h = vertical ? 2 * scale : scale;
            const int x = px(a.x);
            const int y = vertical ? py(a.y + 1) : py(a.y);
            svg << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\""
                << h << "\" fill=\"none\" stroke=\"" << colors[static_cast<int>(d.type())]
                << "\" stroke-width=\"3\"/>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace aztec

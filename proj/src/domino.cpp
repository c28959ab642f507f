#include "cftp/families/domino.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <string>

#include "cftp/error.hpp"

namespace cftp {

namespace {

using VertexKey = std::array<int, 2>;

// 4-connectivity of a cell set.
bool connected(const std::set<Cell>& cells) {
    if (cells.empty()) return true;
    std::set<Cell> seen{*cells.begin()};
    std::vector<Cell> stack{*cells.begin()};
    while (!stack.empty()) {
        const Cell c = stack.back();
        stack.pop_back();
        for (Cell n : {Cell{c.x + 1, c.y}, Cell{c.x - 1, c.y}, Cell{c.x, c.y + 1}, Cell{c.x, c.y - 1}})
            if (cells.count(n) && seen.insert(n).second) stack.push_back(n);
    }
    return seen.size() == cells.size();
}

// Multi-source shortest paths with non-negative weights and arbitrary
// initial values.
std::vector<long long> relax(std::size_t n, const std::vector<std::vector<std::pair<std::size_t, int>>>& adj,
                             const std::vector<std::pair<std::size_t, long long>>& sources) {
    constexpr long long inf = std::numeric_limits<long long>::max() / 4;
    std::vector<long long> dist(n, inf);
    using Item = std::pair<long long, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (const auto& [v, d] : sources)
        if (d < dist[v]) {
            dist[v] = d;
            pq.emplace(d, v);
        }
    while (!pq.empty()) {
        const auto [d, v] = pq.top();
        pq.pop();
        if (d != dist[v]) continue;
        for (const auto& [u, w] : adj[v])
            if (d + w < dist[u]) {
                dist[u] = d + w;
                pq.emplace(dist[u], u);
            }
    }
    return dist;
}

}  // namespace

std::vector<Cell> rectangle_region(int width, int height) {
    std::vector<Cell> out;
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x) out.push_back({x, y});
    return out;
}

DominoSystem::DominoSystem(std::vector<Cell> region) {
    std::set<Cell> in(region.begin(), region.end());
    if (in.size() != region.size()) throw Error(ErrorKind::InvalidArgument, "region lists a cell twice");
    if (in.empty()) throw Error(ErrorKind::NotTileable, "empty region");
    cells_.assign(in.begin(), in.end());

    if (!connected(in)) throw Error(ErrorKind::NotSimplyConnected, "region is not connected");
    int minx = cells_.front().x, maxx = minx, miny = cells_.front().y, maxy = miny;
    for (const Cell& c : cells_) {
        minx = std::min(minx, c.x);
        maxx = std::max(maxx, c.x);
        miny = std::min(miny, c.y);
        maxy = std::max(maxy, c.y);
    }
    {
        std::set<Cell> outside;
        for (int x = minx - 1; x <= maxx + 1; ++x)
            for (int y = miny - 1; y <= maxy + 1; ++y)
                if (!in.count({x, y})) outside.insert({x, y});
        if (!connected(outside)) throw Error(ErrorKind::NotSimplyConnected, "region has a hole");
    }

    // Vertices are cell corners; a vertex is interior when all four
    // surrounding cells belong to the region.
    std::map<VertexKey, std::size_t> vid;
    for (const Cell& c : cells_)
        for (VertexKey k : {VertexKey{c.x, c.y}, VertexKey{c.x + 1, c.y}, VertexKey{c.x, c.y + 1},
                            VertexKey{c.x + 1, c.y + 1}})
            vid.emplace(k, 0);
    for (auto& [k, id] : vid) {
        id = vertices_.size();
        vertices_.push_back(k);
    }
    std::vector<bool> interior(vertices_.size(), false);
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        const auto [x, y] = vertices_[v];
        const bool sw = in.count({x - 1, y - 1}), se = in.count({x, y - 1});
        const bool nw = in.count({x - 1, y}), ne = in.count({x, y});
        if ((sw && ne && !se && !nw) || (se && nw && !sw && !ne))
            throw Error(ErrorKind::NotSimplyConnected,
                        "region is pinched at vertex (" + std::to_string(x) + "," + std::to_string(y) + ")");
        interior[v] = sw && se && nw && ne;
    }

    int balance = 0;
    for (const Cell& c : cells_) balance += c.black() ? 1 : -1;
    if (balance != 0) throw Error(ErrorKind::NotTileable, "black and white cell counts differ");

    // Unit edges, each once, oriented east or north.
    for (const auto& [k, v] : vid) {
        const auto [x, y] = k;
        if (auto it = vid.find({x + 1, y}); it != vid.end()) {
            const Cell left{x, y}, right{x, y - 1};
            const bool l = in.count(left), r = in.count(right);
            if (l || r) edges_.push_back({v, it->second, left.black() ? 1 : -1, l && r, left, right});
        }
        if (auto it = vid.find({x, y + 1}); it != vid.end()) {
            const Cell left{x - 1, y}, right{x, y};
            const bool l = in.count(left), r = in.count(right);
            if (l || r) edges_.push_back({v, it->second, left.black() ? 1 : -1, l && r, left, right});
        }
    }

    // Boundary heights from the boundary edges.
    const std::size_t nv = vertices_.size();
    std::vector<std::vector<std::pair<std::size_t, int>>> boundary_adj(nv);
    for (const Edge& e : edges_)
        if (!e.interior) {
            boundary_adj[e.from].push_back({e.to, e.step});
            boundary_adj[e.to].push_back({e.from, -e.step});
        }
    std::vector<std::optional<int>> fixed(nv);
    std::size_t base = 0;
    while (interior[base]) ++base;
    fixed[base] = 0;
    std::vector<std::size_t> stack{base};
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (const auto& [u, d] : boundary_adj[v]) {
            const int want = *fixed[v] + d;
            if (!fixed[u]) {
                fixed[u] = want;
                stack.push_back(u);
            } else if (*fixed[u] != want) {
                throw Error(ErrorKind::NotTileable, "boundary heights are inconsistent");
            }
        }
    }
    for (std::size_t v = 0; v < nv; ++v)
        if (!interior[v] && !fixed[v]) throw Error(ErrorKind::NotSimplyConnected, "boundary is not a single cycle");

    // Interior edge u->v with step d allows h(v) - h(u) in {d, -3d}.
    std::vector<std::vector<std::pair<std::size_t, int>>> fwd(nv), rev(nv);
    for (const Edge& e : edges_) {
        if (!e.interior) continue;
        const int up_to = e.step == 1 ? 1 : 3;    // h(to) <= h(from) + up_to
        const int up_from = e.step == 1 ? 3 : 1;  // h(from) <= h(to) + up_from
        fwd[e.from].push_back({e.to, up_to});
        fwd[e.to].push_back({e.from, up_from});
        rev[e.to].push_back({e.from, up_to});
        rev[e.from].push_back({e.to, up_from});
    }
    std::vector<std::pair<std::size_t, long long>> hi_src, lo_src;
    for (std::size_t v = 0; v < nv; ++v)
        if (fixed[v]) {
            hi_src.push_back({v, *fixed[v]});
            lo_src.push_back({v, -*fixed[v]});
        }
    const auto hmax = relax(nv, fwd, hi_src);
    const auto neg_hmin = relax(nv, rev, lo_src);
    for (std::size_t v = 0; v < nv; ++v) {
        if (fixed[v] && (hmax[v] != *fixed[v] || -neg_hmin[v] != *fixed[v]))
            throw Error(ErrorKind::NotTileable, "no height function matches the boundary");
        if (-neg_hmin[v] > hmax[v]) throw Error(ErrorKind::NotTileable, "height bounds cross");
    }
    bottom_.h.resize(nv);
    top_.h.resize(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        bottom_.h[v] = static_cast<int>(-neg_hmin[v]);
        top_.h[v] = static_cast<int>(hmax[v]);
    }

    // Site neighbourhoods.  For an edge seen from `vertex`, the legal values
    // of h(vertex) - h(other) are {lo, lo + 4}.
    std::vector<std::vector<std::pair<std::size_t, int>>> around(nv);
    for (const Edge& e : edges_) {
        // h(to) - h(from) in {step, -3 step}
        const int lo_to = std::min(e.step, -3 * e.step);
        around[e.to].push_back({e.from, lo_to});
        around[e.from].push_back({e.to, std::min(-e.step, 3 * e.step)});
    }
    for (std::size_t v = 0; v < nv; ++v) {
        if (!interior[v]) continue;
        SiteInfo s{v, {}};
        for (std::size_t k = 0; k < 4; ++k) s.neighbours[k] = around[v][k];
        sites_.push_back(s);
    }

    if (!is_valid(bottom_) || !is_valid(top_)) throw Error(ErrorKind::NotTileable, "extremal heights are invalid");
}

bool DominoSystem::is_valid(const State& s) const {
    if (s.h.size() != vertices_.size()) return false;
    for (const Edge& e : edges_) {
        const int d = s.h[e.to] - s.h[e.from];
        if (e.interior ? (d != e.step && d != -3 * e.step) : d != e.step) return false;
    }
    // Boundary values are pinned to the bottom state's.
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (bottom_.h[v] == top_.h[v] && s.h[v] != bottom_.h[v]) return false;
    return true;
}

bool DominoSystem::leq(const State& a, const State& b) const noexcept {
    for (std::size_t v = 0; v < a.h.size(); ++v)
        if (a.h[v] > b.h[v]) return false;
    return true;
}

std::size_t DominoSystem::rank_of(const State& s) const noexcept {
    std::size_t r = 0;
    for (std::size_t v = 0; v < s.h.size(); ++v) r += static_cast<std::size_t>((s.h[v] - bottom_.h[v]) / 4);
    return r;
}

std::vector<Domino> DominoSystem::tiling(const State& s) const {
    std::vector<Domino> out;
    for (const Edge& e : edges_)
        if (e.interior && s.h[e.to] - s.h[e.from] == -3 * e.step)
            out.push_back(e.left < e.right ? Domino{e.left, e.right} : Domino{e.right, e.left});
    std::sort(out.begin(), out.end());
    return out;
}

DominoHeight DominoSystem::heights_from_tiling(std::span<const Domino> dominoes) const {
    std::set<std::pair<Cell, Cell>> straddled;
    std::set<Cell> covered;
    for (const Domino& d : dominoes) {
        const int dist = std::abs(d.first.x - d.second.x) + std::abs(d.first.y - d.second.y);
        if (dist != 1) throw Error(ErrorKind::InvalidArgument, "domino cells are not adjacent");
        if (!std::binary_search(cells_.begin(), cells_.end(), d.first) ||
            !std::binary_search(cells_.begin(), cells_.end(), d.second))
            throw Error(ErrorKind::InvalidArgument, "domino leaves the region");
        if (!covered.insert(d.first).second || !covered.insert(d.second).second)
            throw Error(ErrorKind::InvalidArgument, "dominoes overlap");
        straddled.insert(std::minmax(d.first, d.second));
    }
    if (covered.size() != cells_.size()) throw Error(ErrorKind::InvalidArgument, "dominoes do not cover the region");

    const std::size_t nv = vertices_.size();
    std::vector<std::vector<std::pair<std::size_t, int>>> adj(nv);
    for (const Edge& e : edges_) {
        const bool cut = e.interior && straddled.count(std::minmax(e.left, e.right));
        const int d = cut ? -3 * e.step : e.step;
        adj[e.from].push_back({e.to, d});
        adj[e.to].push_back({e.from, -d});
    }
    DominoHeight s;
    s.h.assign(nv, std::numeric_limits<int>::min());
    std::size_t base = 0;
    while (bottom_.h[base] != top_.h[base]) ++base;
    s.h[base] = bottom_.h[base];
    std::vector<std::size_t> stack{base};
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (const auto& [u, d] : adj[v]) {
            if (s.h[u] == std::numeric_limits<int>::min()) {
                s.h[u] = s.h[v] + d;
                stack.push_back(u);
            } else if (s.h[u] != s.h[v] + d) {
                throw Error(ErrorKind::InvalidArgument, "dominoes do not define a height function");
            }
        }
    }
    return s;
}

}  // namespace cftp

#include "gem/colored_graph.hpp"

#include "gem/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gem {

namespace {

void check_color(Color c) {
    if (c < 0 || c >= kColorCount) throw GraphError("invalid color " + std::to_string(c));
}

}  // namespace

std::string to_string(const Edge& e) {
    const Edge n = e.normalized();
    return std::to_string(n.color) + ":" + std::to_string(n.u) + "-" + std::to_string(n.v);
}

ColoredGraph::ColoredGraph(std::array<std::vector<Vertex>, kColorCount> matchings)
    : match_(std::move(matchings)) {
    const auto n = match_[0].size();
    if (n == 0) throw GraphError("graph has no vertices");
    if (n % 2 != 0) throw GraphError("odd vertex count " + std::to_string(n));
    for (Color c = 0; c < kColorCount; ++c) {
        const auto& m = match_[c];
        if (m.size() != n) throw GraphError("matching sizes differ");
        for (std::size_t i = 0; i < n; ++i) {
            const Vertex v = static_cast<Vertex>(i) + 1;
            const Vertex w = m[i];
            if (w < 1 || w > static_cast<Vertex>(n))
                throw GraphError("vertex index out of range: " + std::to_string(w));
            if (w == v) throw GraphError("loop edge at vertex " + std::to_string(v));
            if (m[w - 1] != v)
                throw GraphError("color " + std::to_string(c) + " is not a matching at vertex " +
                                 std::to_string(v));
        }
    }
}

bool ColoredGraph::has_edge(const Edge& e) const {
    if (e.color < 0 || e.color >= kColorCount) return false;
    if (!contains(e.u) || !contains(e.v)) return false;
    return neighbor(e.color, e.u) == e.v;
}

std::vector<Edge> ColoredGraph::edges_of_color(Color c) const {
    check_color(c);
    std::vector<Edge> out;
    out.reserve(match_[c].size() / 2);
    for (Vertex v = 1; v <= vertex_count(); ++v) {
        const Vertex w = neighbor(c, v);
        if (v < w) out.push_back({c, v, w});
    }
    return out;
}

std::vector<Edge> ColoredGraph::edges() const {
    std::vector<Edge> out;
    for (Color c = 0; c < kColorCount; ++c) {
        auto part = edges_of_color(c);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

bool ColoredGraph::is_simple() const {
    for (Vertex v = 1; v <= vertex_count(); ++v) {
        const Vertex a = neighbor(0, v), b = neighbor(1, v), c = neighbor(2, v);
        if (a == b || a == c || b == c) return false;
    }
    return true;
}

ColoredGraph validate(int vertex_count, std::span<const EdgeRecord> records) {
    if (vertex_count <= 0) throw GraphError("vertex count must be positive");
    if (vertex_count % 2 != 0) throw GraphError("odd vertex count " + std::to_string(vertex_count));
    std::array<std::vector<Vertex>, kColorCount> m;
    for (auto& row : m) row.assign(static_cast<std::size_t>(vertex_count), 0);
    for (const auto& r : records) {
        if (r.color < 0 || r.color >= kColorCount)
            throw GraphError("invalid color " + std::to_string(r.color));
        for (Vertex x : {r.u, r.v}) {
            if (x < 1 || x > vertex_count)
                throw GraphError("vertex index out of range: " + std::to_string(x));
        }
        if (r.u == r.v) throw GraphError("loop edge at vertex " + std::to_string(r.u));
        for (Vertex x : {r.u, r.v}) {
            if (m[r.color][x - 1] != 0)
                throw GraphError("duplicate color " + std::to_string(r.color) + " at vertex " +
                                 std::to_string(x));
        }
        m[r.color][r.u - 1] = r.v;
        m[r.color][r.v - 1] = r.u;
    }
    for (Color c = 0; c < kColorCount; ++c) {
        for (Vertex v = 1; v <= vertex_count; ++v) {
            if (m[c][v - 1] == 0)
                throw GraphError("missing color " + std::to_string(c) + " at vertex " +
                                 std::to_string(v));
        }
    }
    return ColoredGraph(std::move(m));
}

std::array<Color, 2> other_colors(Color c) {
    check_color(c);
    switch (c) {
        case 0: return {1, 2};
        case 1: return {0, 2};
        default: return {0, 1};
    }
}

BicoloredCycles bicolored_cycles(const ColoredGraph& g, Color i, Color j) {
    check_color(i);
    check_color(j);
    if (i == j) throw GraphError("bicolored cycles need two distinct colors");
    BicoloredCycles out{i, j, {}};
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (Vertex start = 1; start <= n; ++start) {
        if (seen[start - 1]) continue;
        std::vector<Vertex> cycle;
        Vertex v = start;
        Color step = i;
        do {
            cycle.push_back(v);
            seen[v - 1] = 1;
            v = g.neighbor(step, v);
            step = (step == i) ? j : i;
        } while (!(v == start && step == i));
        out.cycles.push_back(std::move(cycle));
    }
    return out;
}

int cycle_count(const ColoredGraph& g, Color i, Color j) {
    return static_cast<int>(bicolored_cycles(g, i, j).cycles.size());
}

std::vector<int> cycle_index(const ColoredGraph& g, Color i, Color j) {
    const auto cycles = bicolored_cycles(g, i, j);
    std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t k = 0; k < cycles.cycles.size(); ++k) {
        for (Vertex v : cycles.cycles[k]) index[v - 1] = static_cast<int>(k);
    }
    return index;
}

bool is_contracted(const ColoredGraph& g) {
    return cycle_count(g, 0, 1) == 1 && cycle_count(g, 0, 2) == 1 && cycle_count(g, 1, 2) == 1;
}

bool is_connected(const ColoredGraph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack{1};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Color c = 0; c < kColorCount; ++c) {
            const Vertex w = g.neighbor(c, v);
            if (!seen[w - 1]) {
                seen[w - 1] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

std::vector<Vertex> Bipartition::vertices(Side s) const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < side_.size(); ++i) {
        if (side_[i] == s) out.push_back(static_cast<Vertex>(i) + 1);
    }
    return out;
}

std::optional<Bipartition> is_bipartite(const ColoredGraph& g) {
    if (!is_connected(g)) throw PreconditionError("is_bipartite: graph is disconnected");
    const int n = g.vertex_count();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    side[0] = 0;
    std::vector<Vertex> stack{1};
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Color c = 0; c < kColorCount; ++c) {
            const Vertex w = g.neighbor(c, v);
            if (side[w - 1] < 0) {
                side[w - 1] = 1 - side[v - 1];
                stack.push_back(w);
            } else if (side[w - 1] == side[v - 1]) {
                return std::nullopt;
            }
        }
    }
    std::vector<Side> sides(static_cast<std::size_t>(n));
    std::transform(side.begin(), side.end(), sides.begin(),
                   [](int s) { return s == 0 ? Side::black : Side::white; });
    return Bipartition(std::move(sides));
}

ColoredGraph relabel(const ColoredGraph& g, std::span<const Vertex> perm) {
    const int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n) throw GraphError("relabel: permutation has wrong size");
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (Vertex p : perm) {
        if (p < 1 || p > n || hit[p - 1]) throw GraphError("relabel: not a permutation");
        hit[p - 1] = 1;
    }
    std::array<std::vector<Vertex>, kColorCount> m;
    for (Color c = 0; c < kColorCount; ++c) {
        m[c].assign(static_cast<std::size_t>(n), 0);
        for (Vertex v = 1; v <= n; ++v) m[c][perm[v - 1] - 1] = perm[g.neighbor(c, v) - 1];
    }
    return ColoredGraph(std::move(m));
}

namespace {

// Extends v1 -> v2 along colored edges. Connected graphs only; each vertex's
// image is forced, so the map either closes up consistently or fails.
std::optional<std::vector<Vertex>> propagate(const ColoredGraph& g, const ColoredGraph& h,
                                             Vertex from, Vertex to) {
    const int n = g.vertex_count();
    std::vector<Vertex> map(static_cast<std::size_t>(n), 0);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    map[from - 1] = to;
    used[to - 1] = 1;
    std::vector<Vertex> stack{from};
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Color c = 0; c < kColorCount; ++c) {
            const Vertex w = g.neighbor(c, v);
            const Vertex image = h.neighbor(c, map[v - 1]);
            if (map[w - 1] == 0) {
                if (used[image - 1]) return std::nullopt;
                map[w - 1] = image;
                used[image - 1] = 1;
                stack.push_back(w);
            } else if (map[w - 1] != image) {
                return std::nullopt;
            }
        }
    }
    return map;
}

}  // namespace

std::optional<std::vector<Vertex>> are_isomorphic(const ColoredGraph& g, const ColoredGraph& h) {
    const int n = g.vertex_count();
    if (n != h.vertex_count()) return std::nullopt;
    const bool gc = is_connected(g);
    if (gc != is_connected(h)) return std::nullopt;
    if (gc) {
        for (Vertex target = 1; target <= n; ++target) {
            if (auto map = propagate(g, h, 1, target)) return map;
        }
        return std::nullopt;
    }
    // Disconnected: compare canonical forms and compose the two labelings.
    const auto lg = canonical_labeling(g);
    const auto lh = canonical_labeling(h);
    if (lg.code != lh.code) return std::nullopt;
    std::vector<Vertex> inverse_h(static_cast<std::size_t>(n));
    for (Vertex v = 1; v <= n; ++v) inverse_h[lh.label[v - 1] - 1] = v;
    std::vector<Vertex> map(static_cast<std::size_t>(n));
    for (Vertex v = 1; v <= n; ++v) map[v - 1] = inverse_h[lg.label[v - 1] - 1];
    return map;
}

Vertex sum_left_image(int n1, Vertex v1, Vertex v) {
    if (v < 1 || v > n1 || v == v1) return 0;
    return v < v1 ? v : v - 1;
}

Vertex sum_right_image(int n1, Vertex v2, Vertex v) {
    if (v == v2) return 0;
    return (n1 - 1) + (v < v2 ? v : v - 1);
}

ColoredGraph connected_sum(const ColoredGraph& g1, Vertex v1, const ColoredGraph& g2, Vertex v2,
                           bool enforce_type_rule) {
    if (!g1.contains(v1)) throw GraphError("connected_sum: invalid vertex " + std::to_string(v1));
    if (!g2.contains(v2)) throw GraphError("connected_sum: invalid vertex " + std::to_string(v2));
    if (enforce_type_rule && is_connected(g1) && is_connected(g2)) {
        const auto b1 = is_bipartite(g1);
        const auto b2 = is_bipartite(g2);
        if (b1 && b2 && b1->side(v1) == b2->side(v2))
            throw GraphError("connected_sum: both summands bipartite and welded vertices of the same type");
    }
    const int n1 = g1.vertex_count();
    const int n2 = g2.vertex_count();
    const int n = n1 + n2 - 2;
    std::array<std::vector<Vertex>, kColorCount> m;
    for (Color c = 0; c < kColorCount; ++c) {
        m[c].assign(static_cast<std::size_t>(n), 0);
        const Vertex hang1 = g1.neighbor(c, v1);
        const Vertex hang2 = g2.neighbor(c, v2);
        for (Vertex v = 1; v <= n1; ++v) {
            if (v == v1) continue;
            const Vertex w = g1.neighbor(c, v);
            m[c][sum_left_image(n1, v1, v) - 1] =
                (w == v1) ? sum_right_image(n1, v2, hang2) : sum_left_image(n1, v1, w);
        }
        for (Vertex v = 1; v <= n2; ++v) {
            if (v == v2) continue;
            const Vertex w = g2.neighbor(c, v);
            m[c][sum_right_image(n1, v2, v) - 1] =
                (w == v2) ? sum_left_image(n1, v1, hang1) : sum_right_image(n1, v2, w);
        }
    }
    return ColoredGraph(std::move(m));
}

}  // namespace gem

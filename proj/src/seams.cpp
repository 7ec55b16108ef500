#include "gem/seams.hpp"

#include <algorithm>

namespace gem {

namespace {

// Components of g minus the three removed edges. Returns component ids per
// vertex and the number of components.
int components_without(const ColoredGraph& g, const std::array<Edge, kColorCount>& removed,
                       std::vector<int>& comp) {
    const int n = g.vertex_count();
    comp.assign(static_cast<std::size_t>(n), -1);
    int count = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 1; s <= n; ++s) {
        if (comp[s - 1] >= 0) continue;
        comp[s - 1] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Color c = 0; c < kColorCount; ++c) {
                if (removed[c].has_endpoint(v)) continue;
                const Vertex w = g.neighbor(c, v);
                if (comp[w - 1] < 0) {
                    comp[w - 1] = count;
                    stack.push_back(w);
                }
            }
        }
        ++count;
    }
    return count;
}

bool build_seam(const ColoredGraph& g, const std::array<Edge, kColorCount>& edges,
                std::vector<int>& comp, Seam& out) {
    if (components_without(g, edges, comp) != 2) return false;
    for (const auto& e : edges) {
        if (comp[e.u - 1] == comp[e.v - 1]) return false;
    }
    out.edges = edges;
    out.side_a.clear();
    out.side_b.clear();
    const int a = comp[0];
    for (Vertex v = 1; v <= g.vertex_count(); ++v) (comp[v - 1] == a ? out.side_a : out.side_b).push_back(v);
    out.proper = out.side_a.size() >= 2 && out.side_b.size() >= 2;
    return true;
}

}  // namespace

Seam seam_from_edges(const ColoredGraph& g, std::array<Edge, kColorCount> edges) {
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) { return x.color < y.color; });
    for (Color c = 0; c < kColorCount; ++c) {
        if (edges[c].color != c) throw GraphError("seam needs one edge of each color");
        if (!g.has_edge(edges[c])) throw GraphError("seam edge " + to_string(edges[c]) + " is not in the graph");
        edges[c] = edges[c].normalized();
    }
    if (g.vertex_count() <= 2) throw GraphError("a two-vertex graph has no seams");
    std::vector<int> comp;
    Seam seam;
    if (!build_seam(g, edges, comp, seam)) throw GraphError("edges do not form a seam");
    return seam;
}

Seam seam_around(const ColoredGraph& g, const std::vector<Vertex>& side) {
    std::vector<char> inside(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : side) {
        if (!g.contains(v)) throw GraphError("seam_around: invalid vertex");
        inside[v - 1] = 1;
    }
    std::array<Edge, kColorCount> edges{};
    std::array<int, kColorCount> found{};
    for (Vertex v : side) {
        for (Color c = 0; c < kColorCount; ++c) {
            const Vertex w = g.neighbor(c, v);
            if (!inside[w - 1]) {
                edges[c] = Edge{c, v, w}.normalized();
                ++found[c];
            }
        }
    }
    for (Color c = 0; c < kColorCount; ++c) {
        if (found[c] != 1) throw GraphError("vertex set is not bounded by one edge per color");
    }
    return seam_from_edges(g, edges);
}

std::vector<Seam> find_seams(const ColoredGraph& g) {
    std::vector<Seam> out;
    if (g.vertex_count() <= 2) return out;
    if (!is_connected(g)) throw PreconditionError("find_seams: graph is disconnected");
    const auto e0 = g.edges_of_color(0);
    const auto e1 = g.edges_of_color(1);
    const auto e2 = g.edges_of_color(2);
    std::vector<int> comp;
    Seam seam;
    for (const auto& a : e0) {
        for (const auto& b : e1) {
            for (const auto& c : e2) {
                if (build_seam(g, {a, b, c}, comp, seam)) out.push_back(seam);
            }
        }
    }
    return out;
}

Summands extract_summands(const ColoredGraph& g, const Seam& seam) {
    const Seam checked = seam_from_edges(g, seam.edges);
    if (checked.side_a != seam.side_a || checked.side_b != seam.side_b)
        throw GraphError("seam sides do not match its edges");

    const int n = g.vertex_count();
    std::vector<char> in_a(static_cast<std::size_t>(n), 0);
    for (Vertex v : checked.side_a) in_a[v - 1] = 1;

    auto build = [&](const std::vector<Vertex>& side, bool is_a, Vertex& apex) {
        const int size = static_cast<int>(side.size());
        std::vector<Vertex> local(static_cast<std::size_t>(n), 0);
        for (int k = 0; k < size; ++k) local[side[k] - 1] = k + 1;
        apex = size + 1;
        std::array<std::vector<Vertex>, kColorCount> m;
        for (Color c = 0; c < kColorCount; ++c) {
            m[c].assign(static_cast<std::size_t>(size + 1), 0);
            for (Vertex v : side) {
                const Vertex w = g.neighbor(c, v);
                const bool w_same = (in_a[w - 1] != 0) == is_a;
                m[c][local[v - 1] - 1] = w_same ? local[w - 1] : apex;
                if (!w_same) m[c][apex - 1] = local[v - 1];
            }
        }
        return ColoredGraph(std::move(m));
    };

    Vertex left_apex = 0, right_apex = 0;
    ColoredGraph left = build(checked.side_a, true, left_apex);
    ColoredGraph right = build(checked.side_b, false, right_apex);
    return Summands{std::move(left), left_apex, std::move(right), right_apex, checked.side_a, checked.side_b};
}

}  // namespace gem

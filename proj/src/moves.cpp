#include "gem/moves.hpp"

#include "gem/canonical.hpp"

#include <algorithm>

namespace gem {

namespace {

void check_chosen_color(Color c) {
    if (c < 0 || c >= kColorCount) throw MoveError("invalid chosen color " + std::to_string(c));
}

// Vertices reachable from `start` along colors a and b without crossing the
// two removed edges.
std::vector<char> arc_from(const ColoredGraph& g, Color a, Color b, const Edge& ea, const Edge& eb,
                           Vertex start) {
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<Vertex> stack{start};
    in[start - 1] = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Color c : {a, b}) {
            const Edge& removed = (c == a) ? ea : eb;
            if (removed.has_endpoint(v)) continue;
            const Vertex w = g.neighbor(c, v);
            if (!in[w - 1]) {
                in[w - 1] = 1;
                stack.push_back(w);
            }
        }
    }
    return in;
}

}  // namespace

CutSpec make_cut_spec(Color color, const Edge& edge_a, const Edge& edge_b) {
    return CutSpec{color, edge_a, edge_b, std::min(edge_a.u, edge_a.v)};
}

ColoredGraph simple_cut(const ColoredGraph& g, const CutSpec& spec) {
    check_chosen_color(spec.color);
    const auto [a, b] = other_colors(spec.color);
    if (spec.edge_a.color != a || spec.edge_b.color != b)
        throw MoveError("cut edges must have colors " + std::to_string(a) + " and " + std::to_string(b));
    if (!g.has_edge(spec.edge_a)) throw MoveError("cut edge " + to_string(spec.edge_a) + " is not in the graph");
    if (!g.has_edge(spec.edge_b)) throw MoveError("cut edge " + to_string(spec.edge_b) + " is not in the graph");
    const auto index = cycle_index(g, a, b);
    if (index[spec.edge_a.u - 1] != index[spec.edge_b.u - 1])
        throw MoveError("cut edges lie on different {" + std::to_string(a) + "," + std::to_string(b) + "}-cycles");
    if (!g.contains(spec.arc) || index[spec.arc - 1] != index[spec.edge_a.u - 1])
        throw MoveError("arc vertex is not on the cut cycle");

    const auto arc = arc_from(g, a, b, spec.edge_a, spec.edge_b, spec.arc);
    // z1's arc holds one endpoint of each removed edge.
    const Vertex v = arc[spec.edge_a.u - 1] ? spec.edge_a.u : spec.edge_a.v;
    const Vertex u = spec.edge_a.other(v);
    const Vertex p = arc[spec.edge_b.u - 1] ? spec.edge_b.u : spec.edge_b.v;
    const Vertex q = spec.edge_b.other(p);
    if (arc[u - 1] || arc[q - 1]) throw MoveError("cut does not split the cycle into two arcs");

    const int n = g.vertex_count();
    const Vertex z1 = n + 1;
    const Vertex z2 = n + 2;
    std::array<std::vector<Vertex>, kColorCount> m;
    for (Color c = 0; c < kColorCount; ++c) {
        m[c] = g.matching(c);
        m[c].resize(static_cast<std::size_t>(n + 2), 0);
    }
    m[a][v - 1] = z1;
    m[a][z1 - 1] = v;
    m[a][u - 1] = z2;
    m[a][z2 - 1] = u;
    m[b][p - 1] = z1;
    m[b][z1 - 1] = p;
    m[b][q - 1] = z2;
    m[b][z2 - 1] = q;
    m[spec.color][z1 - 1] = z2;
    m[spec.color][z2 - 1] = z1;
    return ColoredGraph(std::move(m));
}

Vertex glue_image(Vertex w1, Vertex w2, Vertex x) {
    if (x == w1 || x == w2) return 0;
    return x - (w1 < x ? 1 : 0) - (w2 < x ? 1 : 0);
}

ColoredGraph simple_glue(const ColoredGraph& g, const GlueSpec& spec) {
    check_chosen_color(spec.color);
    const auto [a, b] = other_colors(spec.color);
    if (!g.contains(spec.w1) || !g.contains(spec.w2)) throw MoveError("glue vertex out of range");
    if (g.neighbor(spec.color, spec.w1) != spec.w2)
        throw MoveError("no color-" + std::to_string(spec.color) + " edge between " + std::to_string(spec.w1) +
                        " and " + std::to_string(spec.w2));
    const auto index = cycle_index(g, a, b);
    if (index[spec.w1 - 1] == index[spec.w2 - 1])
        throw MoveError("glue pair lies on a single {" + std::to_string(a) + "," + std::to_string(b) + "}-cycle");

    const int n = g.vertex_count();
    std::array<std::vector<Vertex>, kColorCount> full;
    for (Color c = 0; c < kColorCount; ++c) full[c] = g.matching(c);
    for (Color d : {a, b}) {
        const Vertex x = g.neighbor(d, spec.w1);
        const Vertex y = g.neighbor(d, spec.w2);
        full[d][x - 1] = y;
        full[d][y - 1] = x;
    }
    std::array<std::vector<Vertex>, kColorCount> m;
    for (Color c = 0; c < kColorCount; ++c) {
        m[c].reserve(static_cast<std::size_t>(n - 2));
        for (Vertex v = 1; v <= n; ++v) {
            if (v == spec.w1 || v == spec.w2) continue;
            m[c].push_back(glue_image(spec.w1, spec.w2, full[c][v - 1]));
        }
    }
    return ColoredGraph(std::move(m));
}

ColoredGraph cut_and_glue(const ColoredGraph& g, const CutSpec& cut, const GlueSpec& glue) {
    if (cut.color != glue.color) throw MoveError("cut and glue must use the same chosen color");
    return simple_glue(simple_cut(g, cut), glue);
}

ColoredGraph interchange(const ColoredGraph& g, const Seam& seam, Vertex u_new, Vertex v_new) {
    if (!seam.proper) throw MoveError("interchange needs a proper seam");
    Summands parts = [&] {
        try {
            return extract_summands(g, seam);
        } catch (const GraphError& e) {
            throw MoveError(std::string("interchange: ") + e.what());
        }
    }();
    if (!parts.left.contains(u_new) || !parts.right.contains(v_new))
        throw MoveError("interchange vertex out of range");
    try {
        return connected_sum(parts.left, u_new, parts.right, v_new, true);
    } catch (const GraphError& e) {
        throw MoveError(std::string("interchange: ") + e.what());
    }
}

std::vector<CutSpec> legal_cuts(const ColoredGraph& g, Color color) {
    check_chosen_color(color);
    const auto [a, b] = other_colors(color);
    const auto index = cycle_index(g, a, b);
    std::vector<CutSpec> out;
    for (const auto& ea : g.edges_of_color(a)) {
        for (const auto& eb : g.edges_of_color(b)) {
            if (index[ea.u - 1] != index[eb.u - 1]) continue;
            // The two arcs are told apart by which endpoint of edge_a they hold.
            out.push_back(CutSpec{color, ea, eb, ea.u});
            out.push_back(CutSpec{color, ea, eb, ea.v});
        }
    }
    return out;
}

std::vector<GlueSpec> legal_glues(const ColoredGraph& g, Color color) {
    check_chosen_color(color);
    const auto [a, b] = other_colors(color);
    const auto index = cycle_index(g, a, b);
    std::vector<GlueSpec> out;
    for (const auto& e : g.edges_of_color(color)) {
        if (index[e.u - 1] != index[e.v - 1]) out.push_back(GlueSpec{color, e.u, e.v});
    }
    return out;
}

ColoredGraph apply_move(const ColoredGraph& g, const Move& move) {
    return std::visit(
        [&](const auto& m) -> ColoredGraph {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, CutSpec>) {
                return simple_cut(g, m);
            } else if constexpr (std::is_same_v<T, GlueSpec>) {
                return simple_glue(g, m);
            } else if constexpr (std::is_same_v<T, CutGlueSpec>) {
                return cut_and_glue(g, m.cut, m.glue);
            } else {
                Seam seam = [&] {
                    try {
                        return seam_from_edges(g, m.seam);
                    } catch (const GraphError& e) {
                        throw MoveError(std::string("interchange: ") + e.what());
                    }
                }();
                return interchange(g, seam, m.u_new, m.v_new);
            }
        },
        move);
}

MoveTrace record_trace(const ColoredGraph& g, const std::vector<Move>& moves) {
    MoveTrace trace{fingerprint(g), {}};
    ColoredGraph current = g;
    for (const auto& m : moves) {
        current = apply_move(current, m);
        trace.steps.push_back(TraceStep{m, fingerprint(current)});
    }
    return trace;
}

ColoredGraph verify_trace(const ColoredGraph& g0, const MoveTrace& trace) {
    if (fingerprint(g0) != trace.initial_fingerprint)
        throw TraceError(0, "initial fingerprint does not match the starting graph");
    ColoredGraph current = g0;
    int step = 0;
    for (const auto& s : trace.steps) {
        ++step;
        try {
            current = apply_move(current, s.move);
        } catch (const MoveError& e) {
            throw TraceError(step, "step " + std::to_string(step) + ": illegal move: " + e.what());
        }
        if (fingerprint(current) != s.fingerprint)
            throw TraceError(step, "step " + std::to_string(step) + ": fingerprint mismatch");
    }
    return current;
}

}  // namespace gem

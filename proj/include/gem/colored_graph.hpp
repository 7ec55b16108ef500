#ifndef GEM_COLORED_GRAPH_HPP
#define GEM_COLORED_GRAPH_HPP

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gem {

/// Vertices are numbered 1..n.
using Vertex = int;
/// Edge colors are 0, 1 and 2.
using Color = int;

inline constexpr int kColorCount = 3;

/// Thrown when a graph description or an operation argument does not describe
/// a valid 3-regular colored graph.
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an operation is called outside its precondition.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An edge is identified by its color and its (unordered) pair of endpoints.
/// The constructor-free aggregate keeps u < v once normalized.
struct Edge {
    Color color = 0;
    Vertex u = 0;
    Vertex v = 0;

    [[nodiscard]] Edge normalized() const { return u <= v ? *this : Edge{color, v, u}; }
    [[nodiscard]] bool has_endpoint(Vertex x) const { return u == x || v == x; }
    [[nodiscard]] Vertex other(Vertex x) const { return x == u ? v : u; }

    friend bool operator==(const Edge& a, const Edge& b) {
        const Edge x = a.normalized();
        const Edge y = b.normalized();
        return x.color == y.color && x.u == y.u && x.v == y.v;
    }
    friend bool operator<(const Edge& a, const Edge& b) {
        const Edge x = a.normalized();
        const Edge y = b.normalized();
        if (x.color != y.color) return x.color < y.color;
        if (x.u != y.u) return x.u < y.u;
        return x.v < y.v;
    }
};

std::string to_string(const Edge& e);

/// Loopless 3-regular multigraph with a proper 3-edge-coloring, stored as one
/// fixed-point-free involution per color. Immutable after construction.
class ColoredGraph {
public:
    /// `matchings[c][i]` is the color-c neighbor of vertex i+1.
    /// Throws GraphError unless every matching is a fixed-point-free involution.
    explicit ColoredGraph(std::array<std::vector<Vertex>, kColorCount> matchings);

    [[nodiscard]] int vertex_count() const { return static_cast<int>(match_[0].size()); }
    [[nodiscard]] Vertex neighbor(Color c, Vertex v) const { return match_[c][v - 1]; }
    [[nodiscard]] const std::vector<Vertex>& matching(Color c) const { return match_[c]; }
    [[nodiscard]] bool contains(Vertex v) const { return v >= 1 && v <= vertex_count(); }

    /// True iff an edge of color `e.color` joins e.u and e.v.
    [[nodiscard]] bool has_edge(const Edge& e) const;

    /// All 3n/2 edges, sorted by color and then by smaller endpoint.
    [[nodiscard]] std::vector<Edge> edges() const;
    /// The n/2 edges of one color, sorted by smaller endpoint.
    [[nodiscard]] std::vector<Edge> edges_of_color(Color c) const;

    [[nodiscard]] bool is_simple() const;

    friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

private:
    std::array<std::vector<Vertex>, kColorCount> match_;
};

/// One "(color, u, v)" record of a raw edge list.
struct EdgeRecord {
    Color color = 0;
    Vertex u = 0;
    Vertex v = 0;
};

/// Builds a graph from an edge list, rejecting anything that is not a proper
/// loopless 3-edge-coloring of a 3-regular multigraph on `vertex_count` vertices.
ColoredGraph validate(int vertex_count, std::span<const EdgeRecord> records);

/// Returns the two colors different from `c`, smaller first.
std::array<Color, 2> other_colors(Color c);

struct BicoloredCycles {
    Color first = 0;
    Color second = 1;
    /// Each cycle starts at its smallest vertex and leaves it along `first`.
    /// Cycles are ordered by their smallest vertex.
    std::vector<std::vector<Vertex>> cycles;
};

/// Components of the subgraph spanned by colors i and j.
BicoloredCycles bicolored_cycles(const ColoredGraph& g, Color i, Color j);

/// Number of {i,j}-colored cycles.
int cycle_count(const ColoredGraph& g, Color i, Color j);

/// For every vertex, the index of its {i,j}-cycle in bicolored_cycles order.
std::vector<int> cycle_index(const ColoredGraph& g, Color i, Color j);

/// Every bicolored subgraph is a single Hamiltonian cycle.
bool is_contracted(const ColoredGraph& g);

bool is_connected(const ColoredGraph& g);

enum class Side { black, white };

/// Two-coloring of the vertices with vertex 1 black.
class Bipartition {
public:
    explicit Bipartition(std::vector<Side> sides) : side_(std::move(sides)) {}

    [[nodiscard]] Side side(Vertex v) const { return side_[v - 1]; }
    [[nodiscard]] std::vector<Vertex> vertices(Side s) const;

    friend bool operator==(const Bipartition&, const Bipartition&) = default;

private:
    std::vector<Side> side_;
};

/// Returns the bipartition with vertex 1 black, or nullopt if the graph has an
/// odd cycle. Throws PreconditionError for disconnected graphs.
std::optional<Bipartition> is_bipartite(const ColoredGraph& g);

/// Relabels g so that vertex v becomes perm[v-1].
ColoredGraph relabel(const ColoredGraph& g, std::span<const Vertex> perm);

/// Color-preserving bijection `map[v-1]` from g onto h, if one exists.
std::optional<std::vector<Vertex>> are_isomorphic(const ColoredGraph& g, const ColoredGraph& h);

/// g1 #_{v1 v2} g2. Vertices of g1 other than v1 keep their order and become
/// 1..n1-1; those of g2 other than v2 follow in order. When `enforce_type_rule`
/// is set and both summands are bipartite, v1 and v2 must be of different types.
ColoredGraph connected_sum(const ColoredGraph& g1, Vertex v1, const ColoredGraph& g2, Vertex v2,
                           bool enforce_type_rule = true);

/// Vertex map of connected_sum: position of g1's vertex v (0 for v1).
Vertex sum_left_image(int n1, Vertex v1, Vertex v);
/// Vertex map of connected_sum: position of g2's vertex v (0 for v2).
Vertex sum_right_image(int n1, Vertex v2, Vertex v);

}  // namespace gem

#endif  // GEM_COLORED_GRAPH_HPP

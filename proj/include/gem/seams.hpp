#ifndef GEM_SEAMS_HPP
#define GEM_SEAMS_HPP

#include "gem/colored_graph.hpp"

#include <array>
#include <vector>

namespace gem {

/// Three edges, one per color, whose removal splits the graph into exactly two
/// components. A seam witnesses a connected-sum decomposition.
struct Seam {
    /// edges[c] has color c.
    std::array<Edge, kColorCount> edges;
    /// The component containing the smallest vertex, sorted.
    std::vector<Vertex> side_a;
    std::vector<Vertex> side_b;
    /// Both sides have at least two vertices.
    bool proper = false;
};

/// Checks that `edges` (one per color, any order) form a seam of g.
/// Throws GraphError otherwise.
Seam seam_from_edges(const ColoredGraph& g, std::array<Edge, kColorCount> edges);

/// The seam cut out by the three edges leaving `side`. Throws GraphError if
/// `side` does not have exactly one outgoing edge per color or if the cut does
/// not leave exactly two components.
Seam seam_around(const ColoredGraph& g, const std::vector<Vertex>& side);

/// Every seam of a connected graph, by exhaustive search over the (n/2)^3
/// color triples. Graphs on two vertices have none.
std::vector<Seam> find_seams(const ColoredGraph& g);

struct Summands {
    ColoredGraph left;
    Vertex left_apex = 0;
    ColoredGraph right;
    Vertex right_apex = 0;
    /// Original ids of the non-apex vertices, in summand order.
    std::vector<Vertex> left_ids;
    std::vector<Vertex> right_ids;
};

/// Splits g along a seam: side_a plus a fresh apex becomes `left` (apex last),
/// side_b plus an apex becomes `right`. connected_sum(left, left_apex, right,
/// right_apex, false) is isomorphic to g.
Summands extract_summands(const ColoredGraph& g, const Seam& seam);

}  // namespace gem

#endif  // GEM_SEAMS_HPP

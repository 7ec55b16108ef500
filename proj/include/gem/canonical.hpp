#ifndef GEM_CANONICAL_HPP
#define GEM_CANONICAL_HPP

#include "gem/colored_graph.hpp"

#include <string>
#include <vector>

namespace gem {

/// A canonical relabeling: isomorphic graphs (colors fixed) get equal codes.
struct CanonicalLabeling {
    /// label[v-1] is the canonical id of vertex v.
    std::vector<Vertex> label;
    /// The three matchings of the relabeled graph, concatenated by color.
    std::vector<Vertex> code;
};

/// Each component is labeled by a breadth-first sweep that visits neighbors in
/// color order, started from every vertex; the lexicographically least encoding
/// wins. Components are then ordered by (size, code).
CanonicalLabeling canonical_labeling(const ColoredGraph& g);

/// Text form of the canonical code: "<n>:" followed by the three relabeled
/// matchings in fixed-width base 36, separated by '.'. Equal strings iff the
/// graphs are isomorphic.
std::string fingerprint(const ColoredGraph& g);

/// The graph encoded by a fingerprint (its canonical representative).
ColoredGraph from_fingerprint(const std::string& fp);

}  // namespace gem

#endif  // GEM_CANONICAL_HPP

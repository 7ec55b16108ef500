#ifndef GEM_ENUMERATE_HPP
#define GEM_ENUMERATE_HPP

#include "gem/colored_graph.hpp"
#include "gem/reduce.hpp"

#include <string>
#include <vector>

namespace gem {

inline constexpr int kDefaultEnumerationBound = 12;

struct CatalogEntry {
    ColoredGraph graph;
    std::string fingerprint;
    bool bipartite = false;
    int euler_characteristic = 0;
    CanonicalForm form;
};

struct Catalog {
    int n = 0;
    /// Representatives in order of first discovery.
    std::vector<CatalogEntry> classes;
    /// Involutions that passed the contractedness filter, before isomorph rejection.
    std::size_t contracted_labelings = 0;

    [[nodiscard]] int bipartite_count() const;
};

/// All contracted graphs on n vertices up to isomorphism. matching 0 is fixed to
/// (1 2)(3 4)..., matching 1 to (2 3)...(n 1), and matching 2 runs over every
/// fixed-point-free involution, pairing the smallest unpaired vertex first.
/// Throws std::invalid_argument unless n is even with 2 <= n <= bound.
Catalog enumerate_contracted(int n, int bound = kDefaultEnumerationBound);

int count_bipartite_contracted(int n, int bound = kDefaultEnumerationBound);

/// Bipartite graphs from the same search whose {0,1}- and {0,2}-subgraphs are
/// Hamiltonian but whose {1,2}-subgraph is not, up to isomorphism.
std::vector<ColoredGraph> near_miss_graphs(int n, int bound = kDefaultEnumerationBound);

struct PermutationReport {
    /// image[i-1] = sigma(i).
    std::vector<int> image;
    /// Cycle lengths, longest first.
    std::vector<int> cycle_type;
    bool full_cycle = false;
    bool odd = false;
};

/// The permutation argument ruling out bipartite contracted graphs on 4m
/// vertices. Blacks u_1 < ... < u_k; whites are numbered so that u_i v_i is a
/// color-0 edge, so sigma0 is the identity and u_i v_{sigma_c(i)} has color c.
struct ParityCertificate {
    int k = 0;
    std::vector<Vertex> blacks;
    std::vector<Vertex> whites;
    PermutationReport sigma1;
    PermutationReport sigma2;
    /// sigma2^-1 sigma1, describing the {1,2}-subgraph.
    PermutationReport sigma21;
    /// All three are full k-cycles (the graph is contracted).
    bool all_full = false;
    /// all_full and parity(sigma21) == parity(sigma1) + parity(sigma2) is
    /// satisfiable, which happens exactly for odd k.
    bool consistent = false;
    std::string explanation;
};

/// Requires a connected graph and a valid bipartition of it.
ParityCertificate parity_certificate(const ColoredGraph& g, const Bipartition& b);

}  // namespace gem

#endif  // GEM_ENUMERATE_HPP

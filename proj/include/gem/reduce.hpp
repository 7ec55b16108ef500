#ifndef GEM_REDUCE_HPP
#define GEM_REDUCE_HPP

#include "gem/colored_graph.hpp"
#include "gem/moves.hpp"
#include "gem/seams.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace gem {

/// One of the normal forms L, P(m), T(m).
struct CanonicalForm {
    enum class Kind { L, P, T };
    Kind kind = Kind::L;
    /// 0 for L, m >= 1 otherwise.
    int m = 0;

    static CanonicalForm L() { return {Kind::L, 0}; }
    static CanonicalForm P(int m);
    static CanonicalForm T(int m);

    /// 2 for L, 2m+2 for P(m), 4m+2 for T(m).
    [[nodiscard]] int vertex_count() const;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// "L", "P(m)" or "T(m)".
std::string to_string(const CanonicalForm& f);
/// Inverse of to_string; throws std::invalid_argument.
CanonicalForm parse_canonical_form(const std::string& text);

ColoredGraph make_L();
ColoredGraph make_P1();
ColoredGraph make_T1();
ColoredGraph make_P2();

/// P1 # ... # P1 (m copies), accumulated left to right; each new copy is welded
/// at the accumulator's highest vertex and the copy's vertex 1.
ColoredGraph make_P(int m);
/// T1 # ... # T1 (m copies) with the same welding convention (the welded
/// vertices are always of different types).
ColoredGraph make_T(int m);

/// The generator graph of a canonical form.
ColoredGraph realize(const CanonicalForm& f);

/// The canonical form predicted for a contracted graph on n vertices. Throws
/// std::domain_error for bipartite n = 4m (no such contracted graph exists) and
/// std::invalid_argument for odd or too small n.
CanonicalForm canonical_of(int n, bool bipartite);

/// Hamiltonian {0,1}-cycle read from `start`: position k (0-based) holds
/// v_{k+1}, v1 = start, and v_{2i-1} v_{2i} is a color-0 edge.
std::vector<Vertex> hamiltonian_labeling(const ColoredGraph& g, Vertex start);

/// Result of splitting a canonical summand off a contracted graph.
struct SplitResult {
    /// The moves taking the input to `rewritten`.
    MoveTrace trace;
    ColoredGraph rewritten;
    /// Seam of `rewritten` separating the split-off summand.
    Seam seam;
    Summands parts;
    /// True when the split-off summand is parts.left.
    bool piece_is_left = false;

    [[nodiscard]] const ColoredGraph& piece() const { return piece_is_left ? parts.left : parts.right; }
    [[nodiscard]] const ColoredGraph& remainder() const { return piece_is_left ? parts.right : parts.left; }
};

/// Two cut-and-glue moves that turn a contracted bipartite graph on 4q+2 >= 10
/// vertices into a connected sum with a T1 summand. The {0,1}-cycle is read as
/// v1..v_{4q+2}; the anchor color-2 edge v1 v_{2r} and the crossing color-2 edge
/// v_{2s-1} v_{2t} minimise (r, s, t, v1). First move: cut edges v_{2r-1}v_{2r}
/// and v2 v3, glue at (v_{2s-1}, v_{2t}). Second move: cut the color-0 edge v1 v2
/// and the color-1 edge at the first move's z1, glue at (v_{2r}, v1). The T1
/// summand is {z1, z1', v2, z2, z2'} plus the apex.
SplitResult split_off_T1(const ColoredGraph& g);

/// One cut-and-glue move that turns a contracted non-bipartite graph on 2p >= 6
/// vertices into a connected sum with a P1 summand. The anchor is a color-2
/// edge v1 v_{2r-1} between same-type vertices and the crossing edge is
/// v_s v_t with 2 <= s <= 2r-2 < 2r <= t; (r, s, t, v1) is minimised. The cut
/// removes v1 v2 and v_{2r-2} v_{2r-1}; the glue is at (v_s, v_t). The P1
/// summand is the triangle {v1, z2, v_{2r-1}} plus the apex.
SplitResult split_off_P1(const ColoredGraph& g);

/// The 8-vertex graph P1 #_{u1 v4} T1 (P1 on u1..u4, T1 on v1..v6) renumbered
/// u2,u3,u4,v1,v2,v3,v5,v6 -> 1..8.
ColoredGraph tp1_reference();
/// The cut-and-glue move taking tp1_reference() to a copy of P3: cut at the
/// color-0 edge u3 u4 and the color-1 edge v2 v3 (z1 on the u3 arc), glue at
/// (u3, v1).
CutGlueSpec tp1_reference_move();

/// One-move trace taking a T1 # P1 graph to a graph isomorphic to P3. The seam
/// must split g into summands isomorphic to T1 and P1.
MoveTrace rewrite_TP1_to_P3(const ColoredGraph& g, const Seam& seam);

struct Certificate;

/// Congruence step: the current graph splits along `seam` into two summands,
/// each certified separately; the step replaces the current graph by the
/// connected sum of the two certified normal forms (see compose_realization).
struct ComposeStep {
    std::array<Edge, kColorCount> seam;
    std::shared_ptr<const Certificate> left;
    std::shared_ptr<const Certificate> right;
    /// fingerprint() of the graph after the step.
    std::string fingerprint;
};

bool operator==(const ComposeStep& a, const ComposeStep& b);

using CertificateStep = std::variant<TraceStep, ComposeStep>;

/// A D-equivalence proof: a sequence of moves and congruence steps from the
/// graph with `initial_fingerprint`, optionally ending in a claim that the final
/// graph is isomorphic to the generator of `conclusion`.
struct Certificate {
    std::string initial_fingerprint;
    std::vector<CertificateStep> steps;
    std::optional<CanonicalForm> conclusion;

    [[nodiscard]] std::size_t section_count() const;
    [[nodiscard]] std::size_t step_count() const;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Thrown by certificate verification; `where` names the section and step.
class CertificateError : public std::runtime_error {
public:
    CertificateError(std::string where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
    [[nodiscard]] const std::string& where() const { return where_; }

private:
    std::string where_;
};

/// The graph a compose step lands on: the generators of the two forms welded at
/// the first one's highest vertex and the second one's vertex 1. A T form is
/// placed before a P form.
ColoredGraph compose_realization(const CanonicalForm& left, const CanonicalForm& right);

/// Combined form of a connected sum when it is read off directly (L is neutral,
/// P adds to P, T adds to T); nullopt for mixed T/P sums.
std::optional<CanonicalForm> combine_forms(const CanonicalForm& a, const CanonicalForm& b);

/// Replays a certificate against g. Returns the final graph and conclusion.
struct VerifiedCertificate {
    ColoredGraph final_graph;
    std::optional<CanonicalForm> conclusion;
};
VerifiedCertificate verify_certificate(const ColoredGraph& g, const Certificate& cert);

/// A plain move trace viewed as a certificate without congruence steps.
Certificate as_certificate(const MoveTrace& trace);

struct Reduction {
    CanonicalForm form;
    Certificate certificate;
};

/// Reduces a contracted graph to its normal form with a verifiable certificate.
/// Graphs isomorphic to a generator conclude immediately; otherwise T1 or P1
/// summands are split off recursively and mixed T(k) # P1 sums are rewritten to
/// P(2k+1) through repeated T1 # P1 -> P3 moves.
Reduction reduce(const ColoredGraph& g);

}  // namespace gem

#endif  // GEM_REDUCE_HPP

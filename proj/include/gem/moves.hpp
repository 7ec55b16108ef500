#ifndef GEM_MOVES_HPP
#define GEM_MOVES_HPP

#include "gem/colored_graph.hpp"
#include "gem/seams.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace gem {

/// Thrown when a move's parameters do not fit the graph it is applied to.
class MoveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Simple cut with chosen color `color`. Writing {a,b} for the other two colors
/// (a < b), `edge_a` has color a and `edge_b` color b, both on one {a,b}-cycle.
/// Removing them leaves two arcs; the fresh vertex z1 = n+1 closes the arc that
/// contains `arc`, z2 = n+2 closes the other, and z1 z2 get a `color` edge.
struct CutSpec {
    Color color = 2;
    Edge edge_a;
    Edge edge_b;
    Vertex arc = 0;

    friend bool operator==(const CutSpec&, const CutSpec&) = default;
};

/// Simple glueing at a `color` edge w1 w2 whose ends lie on distinct
/// {a,b}-cycles.
struct GlueSpec {
    Color color = 2;
    Vertex w1 = 0;
    Vertex w2 = 0;

    friend bool operator==(const GlueSpec&, const GlueSpec&) = default;
};

/// A cut followed by a glue on the cut graph (glue ids refer to the cut graph,
/// so z1 = n+1 and z2 = n+2 are valid glue vertices).
struct CutGlueSpec {
    CutSpec cut;
    GlueSpec glue;

    friend bool operator==(const CutGlueSpec&, const CutGlueSpec&) = default;
};

/// Re-welds the connected sum exhibited by `seam` at a new vertex pair;
/// `u_new` and `v_new` are ids in the left and right summands produced by
/// extract_summands.
struct InterchangeSpec {
    std::array<Edge, kColorCount> seam;
    Vertex u_new = 0;
    Vertex v_new = 0;

    friend bool operator==(const InterchangeSpec&, const InterchangeSpec&) = default;
};

using Move = std::variant<CutSpec, GlueSpec, CutGlueSpec, InterchangeSpec>;

/// CutSpec with the default arc choice (the smaller endpoint of edge_a).
CutSpec make_cut_spec(Color color, const Edge& edge_a, const Edge& edge_b);

ColoredGraph simple_cut(const ColoredGraph& g, const CutSpec& spec);
ColoredGraph simple_glue(const ColoredGraph& g, const GlueSpec& spec);
ColoredGraph cut_and_glue(const ColoredGraph& g, const CutSpec& cut, const GlueSpec& glue);
ColoredGraph interchange(const ColoredGraph& g, const Seam& seam, Vertex u_new, Vertex v_new);

/// Position of vertex x after a glue deletes w1 and w2 (0 for w1, w2).
Vertex glue_image(Vertex w1, Vertex w2, Vertex x);

/// Every legal cut of g with chosen color `color`, in a fixed order: edge_a,
/// then edge_b, then both arc choices.
std::vector<CutSpec> legal_cuts(const ColoredGraph& g, Color color);
/// Every legal glue of g with chosen color `color`, w1 < w2.
std::vector<GlueSpec> legal_glues(const ColoredGraph& g, Color color);

ColoredGraph apply_move(const ColoredGraph& g, const Move& move);

struct TraceStep {
    Move move;
    /// fingerprint() of the graph after the move.
    std::string fingerprint;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/// A replayable sequence of moves; a trace that verifies is a proof that the
/// initial and final graphs are D-equivalent.
struct MoveTrace {
    std::string initial_fingerprint;
    std::vector<TraceStep> steps;

    friend bool operator==(const MoveTrace&, const MoveTrace&) = default;
};

/// Thrown by trace replay; `step` is 1-based (0 refers to the header).
class TraceError : public std::runtime_error {
public:
    TraceError(int step, const std::string& what)
        : std::runtime_error(what), step_(step) {}
    [[nodiscard]] int step() const { return step_; }

private:
    int step_;
};

/// Records a trace by applying `moves` to g in order.
MoveTrace record_trace(const ColoredGraph& g, const std::vector<Move>& moves);

/// Replays a trace from g0, checking every fingerprint. Returns the final graph.
ColoredGraph verify_trace(const ColoredGraph& g0, const MoveTrace& trace);

}  // namespace gem

#endif  // GEM_MOVES_HPP

#include "gem/reduce.hpp"

#include "gem/canonical.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>

namespace gem {

namespace {

ColoredGraph from_pairs(int n, std::initializer_list<std::initializer_list<std::pair<Vertex, Vertex>>> colors) {
    std::array<std::vector<Vertex>, kColorCount> m;
    Color c = 0;
    for (const auto& pairs : colors) {
        m[c].assign(static_cast<std::size_t>(n), 0);
        for (const auto& [u, v] : pairs) {
            m[c][u - 1] = v;
            m[c][v - 1] = u;
        }
        ++c;
    }
    return ColoredGraph(std::move(m));
}

bool isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
    return a.vertex_count() == b.vertex_count() && fingerprint(a) == fingerprint(b);
}

std::vector<int> positions(const std::vector<Vertex>& labeling) {
    std::vector<int> pos(labeling.size() + 1, 0);
    for (std::size_t k = 0; k < labeling.size(); ++k) pos[labeling[k]] = static_cast<int>(k) + 1;
    return pos;
}

SplitResult finish_split(const ColoredGraph& g, const std::vector<Move>& moves, std::vector<Vertex> piece_side,
                         const ColoredGraph& expected_piece, const char* who) {
    ColoredGraph rewritten = g;
    for (const auto& m : moves) rewritten = apply_move(rewritten, m);
    std::sort(piece_side.begin(), piece_side.end());
    Seam seam;
    try {
        seam = seam_around(rewritten, piece_side);
    } catch (const GraphError& e) {
        throw std::logic_error(std::string(who) + ": split-off vertex set is not bounded by a seam: " + e.what());
    }
    Summands parts = extract_summands(rewritten, seam);
    const bool piece_is_left = seam.side_a == piece_side;
    SplitResult out{record_trace(g, moves), std::move(rewritten), std::move(seam), std::move(parts), piece_is_left};
    if (!isomorphic(out.piece(), expected_piece))
        throw std::logic_error(std::string(who) + ": split-off summand has the wrong isomorphism type");
    if (!is_contracted(out.remainder()) || !is_contracted(out.rewritten))
        throw std::logic_error(std::string(who) + ": moves did not preserve contractedness");
    return out;
}

}  // namespace

CanonicalForm CanonicalForm::P(int m) {
    if (m < 1) throw std::invalid_argument("P(m) needs m >= 1");
    return {Kind::P, m};
}

CanonicalForm CanonicalForm::T(int m) {
    if (m < 1) throw std::invalid_argument("T(m) needs m >= 1");
    return {Kind::T, m};
}

int CanonicalForm::vertex_count() const {
    switch (kind) {
        case Kind::L: return 2;
        case Kind::P: return 2 * m + 2;
        case Kind::T: return 4 * m + 2;
    }
    return 0;
}

std::string to_string(const CanonicalForm& f) {
    switch (f.kind) {
        case CanonicalForm::Kind::L: return "L";
        case CanonicalForm::Kind::P: return "P(" + std::to_string(f.m) + ")";
        case CanonicalForm::Kind::T: return "T(" + std::to_string(f.m) + ")";
    }
    return {};
}

CanonicalForm parse_canonical_form(const std::string& text) {
    if (text == "L") return CanonicalForm::L();
    if (text.size() >= 4 && (text[0] == 'P' || text[0] == 'T') && text[1] == '(' && text.back() == ')') {
        const std::string digits = text.substr(2, text.size() - 3);
        if (digits.empty() || digits.size() > 6 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
            throw std::invalid_argument("malformed canonical form '" + text + "'");
        const int m = std::stoi(digits);
        return text[0] == 'P' ? CanonicalForm::P(m) : CanonicalForm::T(m);
    }
    throw std::invalid_argument("malformed canonical form '" + text + "'");
}

ColoredGraph make_L() { return from_pairs(2, {{{1, 2}}, {{1, 2}}, {{1, 2}}}); }

ColoredGraph make_P1() {
    return from_pairs(4, {{{1, 2}, {3, 4}}, {{2, 3}, {4, 1}}, {{1, 3}, {2, 4}}});
}

ColoredGraph make_T1() {
    return from_pairs(6, {{{1, 2}, {3, 4}, {5, 6}}, {{2, 3}, {4, 5}, {6, 1}}, {{1, 4}, {2, 5}, {3, 6}}});
}

ColoredGraph make_P2() {
    return from_pairs(6, {{{1, 2}, {3, 4}, {5, 6}}, {{2, 3}, {4, 5}, {6, 1}}, {{1, 4}, {2, 6}, {3, 5}}});
}

ColoredGraph make_P(int m) {
    if (m < 1) throw std::invalid_argument("make_P: m must be at least 1");
    ColoredGraph acc = make_P1();
    for (int i = 2; i <= m; ++i) acc = connected_sum(acc, acc.vertex_count(), make_P1(), 1, false);
    return acc;
}

ColoredGraph make_T(int m) {
    if (m < 1) throw std::invalid_argument("make_T: m must be at least 1");
    ColoredGraph acc = make_T1();
    for (int i = 2; i <= m; ++i) acc = connected_sum(acc, acc.vertex_count(), make_T1(), 1, true);
    return acc;
}

ColoredGraph realize(const CanonicalForm& f) {
    switch (f.kind) {
        case CanonicalForm::Kind::L: return make_L();
        case CanonicalForm::Kind::P: return make_P(f.m);
        case CanonicalForm::Kind::T: return make_T(f.m);
    }
    throw std::logic_error("unknown canonical form");
}

CanonicalForm canonical_of(int n, bool bipartite) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("canonical_of: n must be even and at least 2");
    if (n == 2) return CanonicalForm::L();
    if (n % 4 == 0) {
        if (bipartite)
            throw std::domain_error("no contracted bipartite graph has " + std::to_string(n) +
                                    " vertices (4m vertices force an odd permutation parity contradiction)");
        return CanonicalForm::P(n / 2 - 1);
    }
    const int m = (n - 2) / 4;
    return bipartite ? CanonicalForm::T(m) : CanonicalForm::P(2 * m);
}

std::vector<Vertex> hamiltonian_labeling(const ColoredGraph& g, Vertex start) {
    if (!g.contains(start)) throw GraphError("hamiltonian_labeling: invalid start vertex");
    std::vector<Vertex> seq{start};
    Color step = 0;
    for (;;) {
        const Vertex next = g.neighbor(step, seq.back());
        step = 1 - step;
        if (next == start) break;
        seq.push_back(next);
    }
    if (static_cast<int>(seq.size()) != g.vertex_count())
        throw PreconditionError("the {0,1}-subgraph is not a Hamiltonian cycle");
    return seq;
}

SplitResult split_off_T1(const ColoredGraph& g) {
    const int n = g.vertex_count();
    if (!is_contracted(g)) throw PreconditionError("split_off_T1: graph is not contracted");
    if (!is_bipartite(g)) throw PreconditionError("split_off_T1: graph is not bipartite");
    if (n < 10 || (n - 2) % 4 != 0) throw PreconditionError("split_off_T1: need 4q+2 vertices with q >= 2");

    // (r, s, t, anchor), minimised lexicographically.
    std::optional<std::tuple<int, int, int, Vertex>> best;
    for (Vertex anchor = 1; anchor <= n; ++anchor) {
        const auto v = hamiltonian_labeling(g, anchor);
        const auto pos = positions(v);
        const int r = pos[g.neighbor(2, v[0])] / 2;
        for (int s = 2; s <= r; ++s) {
            const int y = pos[g.neighbor(2, v[2 * s - 2])];
            if (y >= 2 * r + 1) {
                std::tuple<int, int, int, Vertex> cand{r, s, y / 2, anchor};
                if (!best || cand < *best) best = cand;
                break;
            }
        }
    }
    if (!best) throw std::logic_error("split_off_T1: no crossing color-2 edge found");
    const auto [r, s, t, anchor] = *best;
    const auto v = hamiltonian_labeling(g, anchor);
    auto V = [&](int i) { return v[i - 1]; };

    const CutGlueSpec first{CutSpec{2, Edge{0, V(2 * r - 1), V(2 * r)}.normalized(), Edge{1, V(2), V(3)}.normalized(), V(3)},
                            GlueSpec{2, V(2 * s - 1), V(2 * t)}};
    const ColoredGraph g1 = apply_move(g, first);
    auto img1 = [&](Vertex x) { return glue_image(first.glue.w1, first.glue.w2, x); };
    const Vertex z1 = img1(n + 1), z2 = img1(n + 2), v1 = img1(V(1)), v2 = img1(V(2)), v2r = img1(V(2 * r));

    const Vertex x = g1.neighbor(1, z1);
    const CutGlueSpec second{CutSpec{2, Edge{0, v1, v2}.normalized(), Edge{1, z1, x}.normalized(), v2},
                             GlueSpec{2, v2r, v1}};
    if (simple_cut(g1, second.cut).neighbor(1, n + 1) != z1)
        throw std::logic_error("split_off_T1: second cut does not put z1 on the v2 arc");
    auto img2 = [&](Vertex y) { return glue_image(second.glue.w1, second.glue.w2, y); };

    return finish_split(g, {first, second}, {img2(z1), img2(n + 1), img2(v2), img2(z2), img2(n + 2)}, make_T1(),
                        "split_off_T1");
}

SplitResult split_off_P1(const ColoredGraph& g) {
    const int n = g.vertex_count();
    if (!is_contracted(g)) throw PreconditionError("split_off_P1: graph is not contracted");
    if (is_bipartite(g)) throw PreconditionError("split_off_P1: graph is bipartite");
    if (n < 6) throw PreconditionError("split_off_P1: need at least 6 vertices");

    std::optional<std::tuple<int, int, int, Vertex>> best;
    for (Vertex anchor = 1; anchor <= n; ++anchor) {
        const auto v = hamiltonian_labeling(g, anchor);
        const auto pos = positions(v);
        const int y = pos[g.neighbor(2, v[0])];
        if (y % 2 == 0) continue;
        const int r = (y + 1) / 2;
        for (int s = 2; s <= 2 * r - 2; ++s) {
            const int t = pos[g.neighbor(2, v[s - 1])];
            if (t >= 2 * r) {
                std::tuple<int, int, int, Vertex> cand{r, s, t, anchor};
                if (!best || cand < *best) best = cand;
                break;
            }
        }
    }
    if (!best) throw std::logic_error("split_off_P1: no same-type anchor with a crossing color-2 edge");
    const auto [r, s, t, anchor] = *best;
    const auto v = hamiltonian_labeling(g, anchor);
    auto V = [&](int i) { return v[i - 1]; };

    const CutGlueSpec move{CutSpec{2, Edge{0, V(1), V(2)}.normalized(), Edge{1, V(2 * r - 2), V(2 * r - 1)}.normalized(), V(2)},
                           GlueSpec{2, V(s), V(t)}};
    auto img = [&](Vertex x) { return glue_image(move.glue.w1, move.glue.w2, x); };
    return finish_split(g, {move}, {img(V(1)), img(n + 2), img(V(2 * r - 1))}, make_P1(), "split_off_P1");
}

ColoredGraph tp1_reference() { return connected_sum(make_P1(), 1, make_T1(), 4, false); }

CutGlueSpec tp1_reference_move() {
    // u3 -> 2, u4 -> 3, v1 -> 4, v2 -> 5, v3 -> 6.
    return CutGlueSpec{CutSpec{2, Edge{0, 2, 3}, Edge{1, 5, 6}, 2}, GlueSpec{2, 2, 4}};
}

MoveTrace rewrite_TP1_to_P3(const ColoredGraph& g, const Seam& seam) {
    if (g.vertex_count() != 8) throw PreconditionError("rewrite_TP1_to_P3: graph must have 8 vertices");
    if (!seam.proper) throw PreconditionError("rewrite_TP1_to_P3: seam is not proper");
    const Summands parts = extract_summands(g, seam);
    const bool t_left = isomorphic(parts.left, make_T1()) && isomorphic(parts.right, make_P1());
    const bool t_right = isomorphic(parts.right, make_T1()) && isomorphic(parts.left, make_P1());
    if (!t_left && !t_right) throw PreconditionError("rewrite_TP1_to_P3: seam does not split off T1 and P1");

    const auto phi = are_isomorphic(tp1_reference(), g);
    if (!phi) throw std::logic_error("rewrite_TP1_to_P3: T1 # P1 is not unique up to isomorphism");
    auto map = [&](Vertex x) { return x <= 8 ? (*phi)[x - 1] : x; };
    auto map_edge = [&](const Edge& e) { return Edge{e.color, map(e.u), map(e.v)}.normalized(); };
    const CutGlueSpec ref = tp1_reference_move();
    const CutGlueSpec move{CutSpec{ref.cut.color, map_edge(ref.cut.edge_a), map_edge(ref.cut.edge_b), map(ref.cut.arc)},
                           GlueSpec{ref.glue.color, map(ref.glue.w1), map(ref.glue.w2)}};
    MoveTrace trace = record_trace(g, {move});
    if (trace.steps.back().fingerprint != fingerprint(make_P(3)))
        throw std::logic_error("rewrite_TP1_to_P3: result is not P3");
    return trace;
}

namespace {

void append_trace(Certificate& cert, const MoveTrace& trace) {
    for (const auto& s : trace.steps) cert.steps.emplace_back(s);
}

struct Certified {
    CanonicalForm form;
    std::shared_ptr<const Certificate> certificate;
};

Certified certify(const ColoredGraph& g);

// Appends a compose step at `seam`; returns the landing graph.
ColoredGraph append_compose(Certificate& cert, const Seam& seam, std::array<Certified, 2> parts_certified) {
    const ColoredGraph landing = compose_realization(parts_certified[0].form, parts_certified[1].form);
    cert.steps.emplace_back(ComposeStep{seam.edges, parts_certified[0].certificate, parts_certified[1].certificate,
                                        fingerprint(landing)});
    return landing;
}

std::optional<Seam> find_seam_where(const ColoredGraph& g,
                                    const std::function<bool(const ColoredGraph&, const ColoredGraph&)>& accept) {
    for (const auto& seam : find_seams(g)) {
        if (!seam.proper) continue;
        const Summands parts = extract_summands(g, seam);
        if (accept(parts.left, parts.right) || accept(parts.right, parts.left)) return seam;
    }
    return std::nullopt;
}

Certified certify_tp1(const ColoredGraph& g) {
    const auto seam = find_seam_where(g, [](const ColoredGraph& a, const ColoredGraph& b) {
        return isomorphic(a, make_T1()) && isomorphic(b, make_P1());
    });
    if (!seam) throw std::logic_error("no T1 | P1 seam in a T1 # P1 graph");
    auto cert = std::make_shared<Certificate>();
    cert->initial_fingerprint = fingerprint(g);
    append_trace(*cert, rewrite_TP1_to_P3(g, *seam));
    cert->conclusion = CanonicalForm::P(3);
    return {CanonicalForm::P(3), cert};
}

// Steps rewriting `current` (a T(k) # P1 graph) into a copy of P(2k+1).
ColoredGraph append_bridge(Certificate& cert, const ColoredGraph& current, int k) {
    if (k == 1) {
        const auto seam = find_seam_where(current, [](const ColoredGraph& a, const ColoredGraph& b) {
            return isomorphic(a, make_T1()) && isomorphic(b, make_P1());
        });
        if (!seam) throw std::logic_error("no T1 | P1 seam in a T1 # P1 graph");
        const MoveTrace trace = rewrite_TP1_to_P3(current, *seam);
        append_trace(cert, trace);
        return apply_move(current, trace.steps.front().move);
    }

    // T(k) # P1  ~  T(k-1) # (T1 # P1)  ~  T(k-1) # P3.
    const std::string tp1 = fingerprint(tp1_reference());
    const auto seam1 = find_seam_where(current, [&](const ColoredGraph& a, const ColoredGraph& b) {
        return fingerprint(a) == tp1 && is_bipartite(b).has_value();
    });
    if (!seam1) throw std::logic_error("no T(k-1) | T1 # P1 seam in T(k) # P1");
    const Summands parts1 = extract_summands(current, *seam1);
    auto cert_of = [&](const ColoredGraph& part) {
        return fingerprint(part) == tp1 ? certify_tp1(part) : certify(part);
    };
    const ColoredGraph with_p3 = append_compose(cert, *seam1, {cert_of(parts1.left), cert_of(parts1.right)});

    // T(k-1) # P3  =  (T(k-1) # P1) # P2  ~  P(2k-1) # P2.
    const std::string p2 = fingerprint(make_P2());
    const int rest = 4 * k;
    const auto seam2 = find_seam_where(with_p3, [&](const ColoredGraph& a, const ColoredGraph& b) {
        return fingerprint(a) == p2 && b.vertex_count() == rest;
    });
    if (!seam2) throw std::logic_error("no T(k-1) # P1 | P2 seam in T(k-1) # P3");
    const Summands parts2 = extract_summands(with_p3, *seam2);
    auto cert2_of = [&](const ColoredGraph& part) -> Certified {
        if (fingerprint(part) == p2) return certify(part);
        auto sub = std::make_shared<Certificate>();
        sub->initial_fingerprint = fingerprint(part);
        const ColoredGraph end = append_bridge(*sub, part, k - 1);
        const CanonicalForm form = CanonicalForm::P(2 * k - 1);
        if (fingerprint(end) != fingerprint(realize(form)))
            throw std::logic_error("bridge did not reach " + to_string(form));
        sub->conclusion = form;
        return {form, sub};
    };
    return append_compose(cert, *seam2, {cert2_of(parts2.left), cert2_of(parts2.right)});
}

Certified certify(const ColoredGraph& g) {
    if (!is_contracted(g)) throw PreconditionError("reduce: graph is not contracted");
    const int n = g.vertex_count();
    const bool bipartite = is_bipartite(g).has_value();
    const CanonicalForm expected = canonical_of(n, bipartite);

    auto cert = std::make_shared<Certificate>();
    cert->initial_fingerprint = fingerprint(g);
    if (cert->initial_fingerprint == fingerprint(realize(expected))) {
        cert->conclusion = expected;
        return {expected, cert};
    }
    if (n <= 6) throw std::logic_error("contracted graph on " + std::to_string(n) + " vertices outside the catalog");

    const SplitResult split = bipartite ? split_off_T1(g) : split_off_P1(g);
    append_trace(*cert, split.trace);
    const Certified left = certify(split.parts.left);
    const Certified right = certify(split.parts.right);
    ColoredGraph current = append_compose(*cert, split.seam, {left, right});

    CanonicalForm form = expected;
    if (const auto combined = combine_forms(left.form, right.form)) {
        form = *combined;
    } else {
        const Certified& t_part = left.form.kind == CanonicalForm::Kind::T ? left : right;
        current = append_bridge(*cert, current, t_part.form.m);
        form = CanonicalForm::P(2 * t_part.form.m + 1);
    }
    if (!(form == expected)) throw std::logic_error("reduction reached " + to_string(form) + ", expected " + to_string(expected));
    if (fingerprint(current) != fingerprint(realize(form)))
        throw std::logic_error("reduction ended on a graph that is not " + to_string(form));
    cert->conclusion = form;
    return {form, cert};
}

}  // namespace

Reduction reduce(const ColoredGraph& g) {
    Certified c = certify(g);
    return Reduction{c.form, *c.certificate};
}

}  // namespace gem

#include <doctest.h>

#include "gem/canonical.hpp"
#include "gem/enumerate.hpp"
#include "gem/reduce.hpp"
#include "oracles.hpp"

using namespace gem;

TEST_CASE("canonical forms print and parse") {
    CHECK(to_string(CanonicalForm::L()) == "L");
    CHECK(to_string(CanonicalForm::P(3)) == "P(3)");
    CHECK(to_string(CanonicalForm::T(12)) == "T(12)");
    for (const auto& f : {CanonicalForm::L(), CanonicalForm::P(1), CanonicalForm::T(7)})
        CHECK(parse_canonical_form(to_string(f)) == f);
    for (const char* bad : {"", "P", "P()", "P(0)", "Q(1)", "T(-1)", "T(1", "L(1)"})
        CHECK_THROWS_AS(parse_canonical_form(bad), std::invalid_argument);
    CHECK(CanonicalForm::P(3).vertex_count() == 8);
    CHECK(CanonicalForm::T(2).vertex_count() == 10);
}

TEST_CASE("canonical_of") {
    CHECK(canonical_of(2, true) == CanonicalForm::L());
    CHECK(canonical_of(4, false) == CanonicalForm::P(1));
    CHECK(canonical_of(6, true) == CanonicalForm::T(1));
    CHECK(canonical_of(6, false) == CanonicalForm::P(2));
    CHECK(canonical_of(8, false) == CanonicalForm::P(3));
    CHECK(canonical_of(10, false) == CanonicalForm::P(4));
    CHECK(canonical_of(10, true) == CanonicalForm::T(2));
    CHECK_THROWS_AS(canonical_of(8, true), std::domain_error);
    CHECK_THROWS_AS(canonical_of(7, false), std::invalid_argument);
}

TEST_CASE("generator families") {
    for (int m = 1; m <= 6; ++m) {
        const ColoredGraph p = make_P(m);
        const ColoredGraph t = make_T(m);
        CHECK(p.vertex_count() == 2 * m + 2);
        CHECK(t.vertex_count() == 4 * m + 2);
        CHECK(is_contracted(p));
        CHECK(is_contracted(t));
        CHECK_FALSE(is_bipartite(p).has_value());
        CHECK(is_bipartite(t).has_value());
        CHECK(realize(canonical_of(p.vertex_count(), false)) == p);
        CHECK(realize(canonical_of(t.vertex_count(), true)) == t);
    }
    CHECK(fingerprint(make_P(2)) == fingerprint(make_P2()));
}

TEST_CASE("welding generators adds their indices") {
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            CHECK(fingerprint(compose_realization(CanonicalForm::P(a), CanonicalForm::P(b))) == fingerprint(make_P(a + b)));
            CHECK(fingerprint(compose_realization(CanonicalForm::T(a), CanonicalForm::T(b))) == fingerprint(make_T(a + b)));
        }
    }
    CHECK(combine_forms(CanonicalForm::L(), CanonicalForm::T(2)) == CanonicalForm::T(2));
    CHECK(combine_forms(CanonicalForm::P(2), CanonicalForm::P(3)) == CanonicalForm::P(5));
    CHECK_FALSE(combine_forms(CanonicalForm::P(1), CanonicalForm::T(1)).has_value());
    CHECK(compose_realization(CanonicalForm::P(1), CanonicalForm::T(1)) ==
          compose_realization(CanonicalForm::T(1), CanonicalForm::P(1)));
}

TEST_CASE("hamiltonian labeling alternates colors 0 and 1") {
    const ColoredGraph g = make_T(2);
    for (Vertex start = 1; start <= g.vertex_count(); ++start) {
        const auto v = hamiltonian_labeling(g, start);
        REQUIRE(v.size() == 10);
        CHECK(v[0] == start);
        for (std::size_t i = 0; i + 1 < v.size(); ++i) CHECK(g.neighbor(i % 2 == 0 ? 0 : 1, v[i]) == v[i + 1]);
    }
    const ColoredGraph cut = simple_cut(make_T1(), make_cut_spec(2, Edge{0, 1, 2}, Edge{1, 4, 5}));
    CHECK_THROWS_AS(hamiltonian_labeling(cut, 1), PreconditionError);
}

TEST_CASE("splitting off T1 from every bipartite 10-vertex graph") {
    for (const auto& e : enumerate_contracted(10).classes) {
        if (!e.bipartite) {
            CHECK_THROWS_AS(split_off_T1(e.graph), PreconditionError);
            continue;
        }
        const SplitResult s = split_off_T1(e.graph);
        CHECK(s.trace.steps.size() == 2);
        CHECK(verify_trace(e.graph, s.trace) == s.rewritten);
        CHECK(fingerprint(s.piece()) == fingerprint(make_T1()));
        CHECK(is_contracted(s.remainder()));
        CHECK(is_bipartite(s.remainder()).has_value());
        CHECK(s.remainder().vertex_count() == 6);
    }
    CHECK_THROWS_AS(split_off_T1(make_T1()), PreconditionError);
}

TEST_CASE("splitting off P1 from every non-bipartite 8-vertex graph") {
    for (const auto& e : enumerate_contracted(8).classes) {
        const SplitResult s = split_off_P1(e.graph);
        CHECK(s.trace.steps.size() == 1);
        CHECK(verify_trace(e.graph, s.trace) == s.rewritten);
        CHECK(fingerprint(s.piece()) == fingerprint(make_P1()));
        CHECK(is_contracted(s.remainder()));
        CHECK(s.remainder().vertex_count() == 6);
    }
    CHECK_THROWS_AS(split_off_P1(make_T(2)), PreconditionError);
}

TEST_CASE("splits stay valid on relabeled inputs") {
    std::mt19937 rng(41);
    for (const auto& e : enumerate_contracted(12).classes) {
        const ColoredGraph g = oracle::random_relabel(e.graph, rng);
        const SplitResult s = split_off_P1(g);
        CHECK(fingerprint(s.piece()) == fingerprint(make_P1()));
        CHECK(is_contracted(s.remainder()));
    }
}

TEST_CASE("the T1 # P1 rewrite lands on P3") {
    const ColoredGraph ref = tp1_reference();
    CHECK(fingerprint(apply_move(ref, tp1_reference_move())) == fingerprint(make_P(3)));
    std::mt19937 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        const ColoredGraph g = oracle::random_relabel(connected_sum(make_T1(), 1 + trial % 6, make_P1(), 1 + trial % 4, false), rng);
        for (const auto& s : find_seams(g)) {
            if (!s.proper) continue;
            const MoveTrace t = rewrite_TP1_to_P3(g, s);
            CHECK(fingerprint(verify_trace(g, t)) == fingerprint(make_P(3)));
        }
    }
    CHECK_THROWS_AS(rewrite_TP1_to_P3(make_P(3), find_seams(make_P(3)).front()), PreconditionError);
}

TEST_CASE("generators reduce with an empty certificate") {
    for (const auto& f : {CanonicalForm::L(), CanonicalForm::P(1), CanonicalForm::T(1), CanonicalForm::P(4), CanonicalForm::T(3)}) {
        const Reduction r = reduce(realize(f));
        CHECK(r.form == f);
        CHECK(r.certificate.steps.empty());
        CHECK(r.certificate.conclusion == f);
    }
}

TEST_CASE("reduce reaches the predicted form on every catalog class") {
    for (int n = 2; n <= 12; n += 2) {
        for (const auto& e : enumerate_contracted(n).classes) {
            const Reduction r = reduce(e.graph);
            CHECK(r.form == canonical_of(n, e.bipartite));
            const auto v = verify_certificate(e.graph, r.certificate);
            REQUIRE(v.conclusion.has_value());
            CHECK(*v.conclusion == r.form);
            CHECK(fingerprint(v.final_graph) == fingerprint(realize(r.form)));
        }
    }
}

TEST_CASE("reduce of a mixed sum runs the T1 # P1 chain") {
    const ColoredGraph g = connected_sum(make_T(3), 14, make_P1(), 1, false);
    const Reduction r = reduce(g);
    CHECK(r.form == CanonicalForm::P(7));
    CHECK(verify_certificate(g, r.certificate).conclusion == CanonicalForm::P(7));
    CHECK(r.certificate.section_count() > 3);
    CHECK_THROWS_AS(reduce(simple_cut(make_T1(), make_cut_spec(2, Edge{0, 1, 2}, Edge{1, 4, 5}))), PreconditionError);
}

TEST_CASE("tampered certificates are rejected at a named place") {
    const auto classes = enumerate_contracted(10).classes;
    const ColoredGraph g = classes.back().graph;
    const Reduction r = reduce(g);
    REQUIRE_FALSE(r.certificate.steps.empty());

    Certificate wrong_start = r.certificate;
    wrong_start.initial_fingerprint = fingerprint(make_L());
    CHECK_THROWS_AS(verify_certificate(g, wrong_start), CertificateError);

    Certificate wrong_step = r.certificate;
    std::visit([](auto& s) { s.fingerprint = "10:x"; }, wrong_step.steps.front());
    try {
        verify_certificate(g, wrong_step);
        FAIL("accepted");
    } catch (const CertificateError& e) {
        CHECK(e.where() == "section 1 step 1");
    }

    Certificate wrong_conclusion = r.certificate;
    wrong_conclusion.conclusion = r.form.kind == CanonicalForm::Kind::T ? CanonicalForm::P(4) : CanonicalForm::T(2);
    CHECK_THROWS_AS(verify_certificate(g, wrong_conclusion), CertificateError);

    for (std::size_t i = 0; i < r.certificate.steps.size(); ++i) {
        if (!std::holds_alternative<ComposeStep>(r.certificate.steps[i])) continue;
        Certificate bad_sub = r.certificate;
        auto& c = std::get<ComposeStep>(bad_sub.steps[i]);
        auto sub = std::make_shared<Certificate>(*c.left);
        sub->conclusion = sub->conclusion == CanonicalForm::T(1) ? CanonicalForm::P(2) : CanonicalForm::T(1);
        c.left = sub;
        CHECK_THROWS_AS(verify_certificate(g, bad_sub), CertificateError);
    }
}

TEST_CASE("a plain move trace is a certificate without a conclusion") {
    const ColoredGraph g = make_T1();
    const MoveTrace t = record_trace(g, {CutSpec{2, Edge{0, 1, 2}, Edge{1, 2, 3}, 1}});
    const Certificate c = as_certificate(t);
    CHECK(c.section_count() == 1);
    CHECK(c.step_count() == 1);
    const auto v = verify_certificate(g, c);
    CHECK_FALSE(v.conclusion.has_value());
    CHECK(v.final_graph == verify_trace(g, t));
}

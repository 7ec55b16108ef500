#include <doctest.h>

#include "gem/canonical.hpp"
#include "gem/enumerate.hpp"
#include "gem/reduce.hpp"
#include "oracles.hpp"

using namespace gem;

TEST_CASE("catalog sizes for small n") {
    CHECK(enumerate_contracted(2).classes.size() == 1);
    CHECK(enumerate_contracted(4).classes.size() == 1);
    const Catalog six = enumerate_contracted(6);
    REQUIRE(six.classes.size() == 2);
    std::set<std::string> fps{six.classes[0].fingerprint, six.classes[1].fingerprint};
    CHECK(fps == std::set<std::string>{fingerprint(make_T1()), fingerprint(make_P2())});
    CHECK(fingerprint(enumerate_contracted(2).classes[0].graph) == fingerprint(make_L()));
    CHECK(fingerprint(enumerate_contracted(4).classes[0].graph) == fingerprint(make_P1()));
}

TEST_CASE("bipartite classes exist only for n = 4m + 2") {
    CHECK(count_bipartite_contracted(2) == 1);
    CHECK(count_bipartite_contracted(4) == 0);
    CHECK(count_bipartite_contracted(6) == 1);
    CHECK(count_bipartite_contracted(8) == 0);
    CHECK(count_bipartite_contracted(12) == 0);
    const Catalog ten = enumerate_contracted(10);
    CHECK(ten.bipartite_count() > 0);
    bool found_t2 = false;
    for (const auto& e : ten.classes) found_t2 = found_t2 || e.fingerprint == fingerprint(make_T(2));
    CHECK(found_t2);
}

TEST_CASE("catalog entries are contracted, distinct and flagged") {
    for (int n = 2; n <= 12; n += 2) {
        const Catalog c = enumerate_contracted(n);
        CHECK(c.n == n);
        std::set<std::string> seen;
        for (const auto& e : c.classes) {
            CHECK(is_contracted(e.graph));
            CHECK(e.fingerprint == fingerprint(e.graph));
            CHECK(seen.insert(e.fingerprint).second);
            CHECK(e.bipartite == is_bipartite(e.graph).has_value());
            CHECK(e.euler_characteristic == 3 - n / 2);
            CHECK(e.form == canonical_of(n, e.bipartite));
        }
        CHECK(c.contracted_labelings >= c.classes.size());
    }
}

TEST_CASE("catalog is exhaustive on random contracted relabelings") {
    std::mt19937 rng(51);
    for (int n = 4; n <= 10; n += 2) {
        const Catalog c = enumerate_contracted(n);
        std::set<std::string> fps;
        for (const auto& e : c.classes) fps.insert(e.fingerprint);
        int hits = 0;
        for (int trial = 0; trial < 3000 && hits < 100; ++trial) {
            const ColoredGraph g = oracle::random_graph(n, rng);
            if (!is_contracted(g)) continue;
            ++hits;
            CHECK(fps.count(fingerprint(g)) == 1);
        }
        CHECK(hits > 0);
    }
}

TEST_CASE("catalog is deterministic") {
    const Catalog a = enumerate_contracted(10);
    const Catalog b = enumerate_contracted(10);
    REQUIRE(a.classes.size() == b.classes.size());
    for (std::size_t i = 0; i < a.classes.size(); ++i) CHECK(a.classes[i].graph == b.classes[i].graph);
}

TEST_CASE("bounds are enforced") {
    CHECK_THROWS_AS(enumerate_contracted(3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_contracted(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_contracted(14), std::invalid_argument);
    CHECK(enumerate_contracted(14, 14).classes.size() > 0);
}

TEST_CASE("parity certificate on T1") {
    const ColoredGraph g = make_T1();
    const ParityCertificate c = parity_certificate(g, *is_bipartite(g));
    CHECK(c.k == 3);
    CHECK(c.blacks == std::vector<Vertex>{1, 3, 5});
    for (int i = 0; i < 3; ++i) CHECK(g.neighbor(0, c.blacks[i]) == c.whites[i]);
    for (const auto* p : {&c.sigma1, &c.sigma2, &c.sigma21}) {
        CHECK(p->full_cycle);
        CHECK(p->cycle_type == std::vector<int>{3});
        CHECK_FALSE(p->odd);
    }
    CHECK(c.all_full);
    CHECK(c.consistent);
}

TEST_CASE("parity certificate on T(2)") {
    const ColoredGraph g = make_T(2);
    const ParityCertificate c = parity_certificate(g, *is_bipartite(g));
    CHECK(c.k == 5);
    CHECK(c.sigma1.full_cycle);
    CHECK(c.sigma2.full_cycle);
    CHECK(c.sigma21.full_cycle);
    CHECK_FALSE(c.sigma1.odd);
    CHECK_FALSE(c.sigma21.odd);
    CHECK(c.consistent);
}

TEST_CASE("near misses on 4m vertices break exactly at sigma2^-1 sigma1") {
    for (int n : {4, 8, 12}) {
        const auto misses = near_miss_graphs(n);
        CHECK_FALSE(misses.empty());
        for (const auto& g : misses) {
            const ParityCertificate c = parity_certificate(g, *is_bipartite(g));
            CHECK(c.sigma1.full_cycle);
            CHECK(c.sigma2.full_cycle);
            CHECK(c.sigma1.odd);
            CHECK(c.sigma2.odd);
            CHECK_FALSE(c.sigma21.odd);
            CHECK_FALSE(c.sigma21.full_cycle);
            CHECK_FALSE(c.consistent);
        }
    }
}

TEST_CASE("parity certificate preconditions") {
    const ColoredGraph g = make_T1();
    std::vector<Side> wrong(6, Side::black);
    CHECK_THROWS_AS(parity_certificate(g, Bipartition(wrong)), PreconditionError);
}

#include "gem/enumerate.hpp"

#include "gem/canonical.hpp"
#include "gem/surfaces.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <unordered_set>

namespace gem {

namespace {

void check_bounds(int n, int bound) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("vertex count must be even and at least 2");
    if (n > bound)
        throw std::invalid_argument("vertex count " + std::to_string(n) + " exceeds the enumeration bound " +
                                    std::to_string(bound));
}

std::array<std::vector<Vertex>, kColorCount> fixed_cycle(int n) {
    std::array<std::vector<Vertex>, kColorCount> m;
    m[0].resize(static_cast<std::size_t>(n));
    m[1].resize(static_cast<std::size_t>(n));
    for (Vertex v = 1; v <= n; v += 2) {
        m[0][v - 1] = v + 1;
        m[0][v] = v;
    }
    for (Vertex v = 2; v <= n; v += 2) {
        const Vertex w = v == n ? 1 : v + 1;
        m[1][v - 1] = w;
        m[1][w - 1] = v;
    }
    return m;
}

// Calls `visit` on every fixed-point-free involution of 1..n with 1 paired to `first`.
void for_each_involution(int n, Vertex first, const std::function<void(const std::vector<Vertex>&)>& visit) {
    std::vector<Vertex> inv(static_cast<std::size_t>(n), 0);
    inv[0] = first;
    inv[first - 1] = 1;
    std::function<void()> rec = [&] {
        const auto it = std::find(inv.begin(), inv.end(), 0);
        if (it == inv.end()) {
            visit(inv);
            return;
        }
        const Vertex x = static_cast<Vertex>(it - inv.begin()) + 1;
        for (Vertex y = x + 1; y <= n; ++y) {
            if (inv[y - 1] != 0) continue;
            inv[x - 1] = y;
            inv[y - 1] = x;
            rec();
            inv[x - 1] = 0;
            inv[y - 1] = 0;
        }
    };
    rec();
}

using Found = std::vector<std::pair<std::string, ColoredGraph>>;

// Runs `keep` over every partition in parallel and merges the survivors in partition order.
Found search(int n, const std::function<bool(const ColoredGraph&)>& keep, std::size_t* kept_labelings) {
    const auto base = fixed_cycle(n);
    std::vector<std::future<std::pair<Found, std::size_t>>> parts;
    for (Vertex first = 2; first <= n; ++first) {
        parts.push_back(std::async(std::launch::async, [&, first] {
            Found local;
            std::size_t kept = 0;
            std::unordered_set<std::string> seen;
            for_each_involution(n, first, [&](const std::vector<Vertex>& inv) {
                auto m = base;
                m[2] = inv;
                ColoredGraph g(std::move(m));
                if (!keep(g)) return;
                ++kept;
                std::string fp = fingerprint(g);
                if (seen.insert(fp).second) local.emplace_back(std::move(fp), std::move(g));
            });
            return std::make_pair(std::move(local), kept);
        }));
    }
    Found merged;
    std::unordered_set<std::string> seen;
    std::size_t kept = 0;
    for (auto& f : parts) {
        auto [local, count] = f.get();
        kept += count;
        for (auto& [fp, g] : local) {
            if (seen.insert(fp).second) merged.emplace_back(std::move(fp), std::move(g));
        }
    }
    if (kept_labelings) *kept_labelings = kept;
    return merged;
}

PermutationReport report(std::vector<int> image) {
    PermutationReport r;
    const int k = static_cast<int>(image.size());
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    int transpositions = 0;
    for (int i = 0; i < k; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = image[j] - 1) {
            seen[j] = 1;
            ++len;
        }
        r.cycle_type.push_back(len);
        transpositions += len - 1;
    }
    std::sort(r.cycle_type.rbegin(), r.cycle_type.rend());
    r.full_cycle = r.cycle_type.size() == 1;
    r.odd = transpositions % 2 == 1;
    r.image = std::move(image);
    return r;
}

std::string describe(const PermutationReport& r) {
    std::string s = r.full_cycle ? "a full cycle" : "not a full cycle";
    return s + (r.odd ? " (odd)" : " (even)");
}

}  // namespace

int Catalog::bipartite_count() const {
    return static_cast<int>(std::count_if(classes.begin(), classes.end(), [](const auto& e) { return e.bipartite; }));
}

Catalog enumerate_contracted(int n, int bound) {
    check_bounds(n, bound);
    Catalog cat;
    cat.n = n;
    const auto found = search(
        n, [](const ColoredGraph& g) { return cycle_count(g, 0, 2) == 1 && cycle_count(g, 1, 2) == 1; },
        &cat.contracted_labelings);
    for (const auto& [fp, g] : found) {
        const bool bip = is_bipartite(g).has_value();
        cat.classes.push_back(CatalogEntry{g, fp, bip, complex_stats(g).euler_characteristic, canonical_of(n, bip)});
    }
    return cat;
}

int count_bipartite_contracted(int n, int bound) { return enumerate_contracted(n, bound).bipartite_count(); }

std::vector<ColoredGraph> near_miss_graphs(int n, int bound) {
    check_bounds(n, bound);
    const auto found = search(
        n,
        [](const ColoredGraph& g) {
            return cycle_count(g, 0, 2) == 1 && cycle_count(g, 1, 2) != 1 && is_bipartite(g).has_value();
        },
        nullptr);
    std::vector<ColoredGraph> out;
    for (const auto& [fp, g] : found) out.push_back(g);
    return out;
}

ParityCertificate parity_certificate(const ColoredGraph& g, const Bipartition& b) {
    if (!is_connected(g)) throw PreconditionError("parity_certificate: graph is disconnected");
    for (const auto& e : g.edges()) {
        if (b.side(e.u) == b.side(e.v))
            throw PreconditionError("parity_certificate: edge " + to_string(e) + " joins vertices of one side");
    }
    ParityCertificate cert;
    cert.blacks = b.vertices(Side::black);
    cert.k = static_cast<int>(cert.blacks.size());
    if (cert.k * 2 != g.vertex_count()) throw PreconditionError("parity_certificate: unbalanced bipartition");

    std::vector<int> white_index(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (int i = 0; i < cert.k; ++i) {
        const Vertex w = g.neighbor(0, cert.blacks[i]);
        cert.whites.push_back(w);
        white_index[w] = i + 1;
    }
    std::array<std::vector<int>, kColorCount> sigma;
    for (Color c = 1; c < kColorCount; ++c) {
        for (Vertex u : cert.blacks) sigma[c].push_back(white_index[g.neighbor(c, u)]);
    }
    std::vector<int> inv2(static_cast<std::size_t>(cert.k));
    for (int i = 0; i < cert.k; ++i) inv2[sigma[2][i] - 1] = i + 1;
    std::vector<int> s21(static_cast<std::size_t>(cert.k));
    for (int i = 0; i < cert.k; ++i) s21[i] = inv2[sigma[1][i] - 1];

    cert.sigma1 = report(sigma[1]);
    cert.sigma2 = report(sigma[2]);
    cert.sigma21 = report(std::move(s21));
    cert.all_full = cert.sigma1.full_cycle && cert.sigma2.full_cycle && cert.sigma21.full_cycle;

    const std::string k = std::to_string(cert.k);
    const bool full_is_odd = cert.k % 2 == 0;
    if (cert.all_full) {
        cert.consistent = !full_is_odd;
        cert.explanation = cert.consistent
            ? "sigma1, sigma2 and sigma2^-1 sigma1 are full " + k + "-cycles, all even: consistent"
            : "sigma1 and sigma2 are full " + k + "-cycles, hence odd, so sigma2^-1 sigma1 is even and cannot be a full " + k + "-cycle: contradiction";
    } else {
        cert.explanation = "sigma1 is " + describe(cert.sigma1) + ", sigma2 is " + describe(cert.sigma2) +
                           ", sigma2^-1 sigma1 is " + describe(cert.sigma21) + ": not contracted";
    }
    return cert;
}

}  // namespace gem

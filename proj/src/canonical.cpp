#include "gem/canonical.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace gem {

namespace {

struct ComponentCode {
    std::vector<Vertex> members;  // original ids in canonical order
    std::vector<Vertex> code;     // per color, local canonical neighbor ids
};

// Best local labeling of the component containing `members` (any order).
ComponentCode best_component_code(const ColoredGraph& g, const std::vector<Vertex>& members,
                                  std::vector<Vertex>& scratch) {
    const auto size = members.size();
    ComponentCode best;
    std::vector<Vertex> order;
    std::vector<Vertex> code(kColorCount * size);
    for (Vertex start : members) {
        order.clear();
        for (Vertex v : members) scratch[v - 1] = 0;
        scratch[start - 1] = 1;
        order.push_back(start);
        for (std::size_t head = 0; head < order.size(); ++head) {
            const Vertex v = order[head];
            for (Color c = 0; c < kColorCount; ++c) {
                const Vertex w = g.neighbor(c, v);
                if (scratch[w - 1] == 0) {
                    order.push_back(w);
                    scratch[w - 1] = static_cast<Vertex>(order.size());
                }
            }
        }
        for (Color c = 0; c < kColorCount; ++c) {
            for (std::size_t k = 0; k < size; ++k)
                code[c * size + k] = scratch[g.neighbor(c, order[k]) - 1];
        }
        if (best.code.empty() || code < best.code) {
            best.code = code;
            best.members = order;
        }
    }
    return best;
}

char digit(int d) { return static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10)); }

int digit_value(char ch) {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'z') return ch - 'a' + 10;
    return -1;
}

int width_for(int n) {
    int w = 1;
    for (long long cap = 36; cap <= n; cap *= 36) ++w;
    return w;
}

}  // namespace

CanonicalLabeling canonical_labeling(const ColoredGraph& g) {
    const int n = g.vertex_count();
    std::vector<Vertex> scratch(static_cast<std::size_t>(n), 0);

    // Split into components.
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<Vertex>> components;
    for (Vertex s = 1; s <= n; ++s) {
        if (comp[s - 1] >= 0) continue;
        const int id = static_cast<int>(components.size());
        components.emplace_back();
        std::vector<Vertex> stack{s};
        comp[s - 1] = id;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            components[id].push_back(v);
            for (Color c = 0; c < kColorCount; ++c) {
                const Vertex w = g.neighbor(c, v);
                if (comp[w - 1] < 0) {
                    comp[w - 1] = id;
                    stack.push_back(w);
                }
            }
        }
    }

    std::vector<ComponentCode> codes;
    codes.reserve(components.size());
    for (const auto& members : components) codes.push_back(best_component_code(g, members, scratch));
    std::sort(codes.begin(), codes.end(), [](const ComponentCode& a, const ComponentCode& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.code < b.code;
    });

    CanonicalLabeling out;
    out.label.assign(static_cast<std::size_t>(n), 0);
    Vertex next = 1;
    for (const auto& cc : codes) {
        for (Vertex v : cc.members) out.label[v - 1] = next++;
    }
    out.code.assign(static_cast<std::size_t>(kColorCount * n), 0);
    for (Color c = 0; c < kColorCount; ++c) {
        for (Vertex v = 1; v <= n; ++v)
            out.code[c * n + out.label[v - 1] - 1] = out.label[g.neighbor(c, v) - 1];
    }
    return out;
}

std::string fingerprint(const ColoredGraph& g) {
    const int n = g.vertex_count();
    const auto lab = canonical_labeling(g);
    const int width = width_for(n);
    std::string out = std::to_string(n) + ":";
    out.reserve(out.size() + static_cast<std::size_t>(kColorCount * (n * width + 1)));
    for (Color c = 0; c < kColorCount; ++c) {
        if (c > 0) out.push_back('.');
        for (int k = 0; k < n; ++k) {
            int value = lab.code[c * n + k];
            std::string chunk(static_cast<std::size_t>(width), '0');
            for (int p = width - 1; p >= 0; --p) {
                chunk[p] = digit(value % 36);
                value /= 36;
            }
            out += chunk;
        }
    }
    return out;
}

ColoredGraph from_fingerprint(const std::string& fp) {
    const auto colon = fp.find(':');
    if (colon == std::string::npos || colon == 0) throw GraphError("malformed fingerprint");
    int n = 0;
    for (std::size_t i = 0; i < colon; ++i) {
        if (fp[i] < '0' || fp[i] > '9') throw GraphError("malformed fingerprint");
        n = n * 10 + (fp[i] - '0');
        if (n > 1'000'000) throw GraphError("malformed fingerprint");
    }
    const int width = width_for(n);
    std::array<std::vector<Vertex>, kColorCount> m;
    std::size_t pos = colon + 1;
    for (Color c = 0; c < kColorCount; ++c) {
        if (c > 0) {
            if (pos >= fp.size() || fp[pos] != '.') throw GraphError("malformed fingerprint");
            ++pos;
        }
        for (int k = 0; k < n; ++k) {
            int value = 0;
            for (int p = 0; p < width; ++p, ++pos) {
                if (pos >= fp.size()) throw GraphError("malformed fingerprint");
                const int d = digit_value(fp[pos]);
                if (d < 0) throw GraphError("malformed fingerprint");
                value = value * 36 + d;
            }
            m[c].push_back(value);
        }
    }
    if (pos != fp.size()) throw GraphError("malformed fingerprint");
    return ColoredGraph(std::move(m));
}

}  // namespace gem

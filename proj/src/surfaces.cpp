#include "gem/surfaces.hpp"

#include "gem/reduce.hpp"

#include <stdexcept>

namespace gem {

ComplexStats complex_stats(const ColoredGraph& g) {
    if (!is_connected(g)) throw PreconditionError("complex_stats: graph is disconnected");
    ComplexStats s;
    const int n = g.vertex_count();
    s.face_count = n;
    s.edge_count = 3 * n / 2;
    for (Color c = 0; c < kColorCount; ++c) {
        const auto [a, b] = other_colors(c);
        s.vertex_count_per_label[c] = cycle_count(g, a, b);
        s.vertex_count += s.vertex_count_per_label[c];
    }
    s.euler_characteristic = s.vertex_count - s.edge_count + s.face_count;
    return s;
}

int SurfaceClass::euler_characteristic() const {
    switch (kind) {
        case Kind::sphere: return 2;
        case Kind::orientable: return 2 - 2 * genus;
        case Kind::non_orientable: return 2 - genus;
    }
    return 0;
}

SurfaceClass SurfaceClass::orientable(int g) {
    if (g < 1) throw std::invalid_argument("orientable genus must be at least 1");
    return {Kind::orientable, g};
}

SurfaceClass SurfaceClass::non_orientable(int h) {
    if (h < 1) throw std::invalid_argument("non-orientable genus must be at least 1");
    return {Kind::non_orientable, h};
}

std::string to_string(const SurfaceClass& s) {
    switch (s.kind) {
        case SurfaceClass::Kind::sphere: return "sphere";
        case SurfaceClass::Kind::orientable: return "orientable genus " + std::to_string(s.genus);
        case SurfaceClass::Kind::non_orientable: return "non-orientable genus " + std::to_string(s.genus);
    }
    return {};
}

SurfaceClass surface_from_euler(int chi, bool orientable) {
    if (orientable) {
        if (chi == 2) return SurfaceClass::sphere();
        if (chi > 2 || (2 - chi) % 2 != 0)
            throw std::logic_error("no orientable surface has Euler characteristic " + std::to_string(chi));
        return SurfaceClass::orientable((2 - chi) / 2);
    }
    if (chi >= 2) throw std::logic_error("no non-orientable surface has Euler characteristic " + std::to_string(chi));
    return SurfaceClass::non_orientable(2 - chi);
}

SurfaceClass classify_surface(const ColoredGraph& g) {
    if (!is_contracted(g)) throw PreconditionError("classify_surface: graph is not contracted");
    const int n = g.vertex_count();
    const bool bipartite = is_bipartite(g).has_value();

    SurfaceClass by_count;
    if (n == 2) {
        by_count = SurfaceClass::sphere();
    } else if (bipartite) {
        if ((n - 2) % 4 != 0)
            throw std::logic_error("contracted bipartite graph with " + std::to_string(n) + " vertices");
        by_count = SurfaceClass::orientable((n - 2) / 4);
    } else {
        by_count = SurfaceClass::non_orientable((n - 2) / 2);
    }

    const SurfaceClass by_euler = surface_from_euler(complex_stats(g).euler_characteristic, bipartite);
    if (!(by_count == by_euler))
        throw std::logic_error("classification mismatch: " + to_string(by_count) + " vs " + to_string(by_euler));
    return by_count;
}

ColoredGraph crystallization_of(const SurfaceClass& s) {
    switch (s.kind) {
        case SurfaceClass::Kind::sphere: return make_L();
        case SurfaceClass::Kind::orientable: return make_T(s.genus);
        case SurfaceClass::Kind::non_orientable: return make_P(s.genus);
    }
    throw std::logic_error("unknown surface kind");
}

}  // namespace gem

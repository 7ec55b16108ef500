#ifndef GEM_SURFACES_HPP
#define GEM_SURFACES_HPP

#include "gem/colored_graph.hpp"

#include <array>
#include <string>

namespace gem {

/// Cell counts of the 2-complex K(g): one triangle per graph vertex, one edge
/// per graph edge, and one c-labeled vertex per {a,b}-cycle ({a,b,c} = {0,1,2}).
///
/// The c-labeled corner of the triangle at v is identified with the c-labeled
/// corner at w exactly when v and w are joined by an edge of color a or b, so
/// the c-labeled vertices of K(g) are the components of the {a,b}-subgraph.
struct ComplexStats {
    int face_count = 0;
    int edge_count = 0;
    std::array<int, kColorCount> vertex_count_per_label{};
    int vertex_count = 0;
    int euler_characteristic = 0;

    friend bool operator==(const ComplexStats&, const ComplexStats&) = default;
};

ComplexStats complex_stats(const ColoredGraph& g);

struct SurfaceClass {
    enum class Kind { sphere, orientable, non_orientable };
    Kind kind = Kind::sphere;
    /// 0 for the sphere.
    int genus = 0;

    [[nodiscard]] int euler_characteristic() const;

    static SurfaceClass sphere() { return {Kind::sphere, 0}; }
    static SurfaceClass orientable(int g);
    static SurfaceClass non_orientable(int h);

    friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
};

/// "sphere", "orientable genus g" or "non-orientable genus h".
std::string to_string(const SurfaceClass& s);

/// Classifies the surface a contracted graph crystallizes. The answer read off
/// from (n, bipartiteness) is cross-checked against the one read off from
/// (Euler characteristic, orientability); a disagreement throws logic_error.
SurfaceClass classify_surface(const ColoredGraph& g);

/// The surface determined by Euler characteristic and orientability alone.
SurfaceClass surface_from_euler(int euler_characteristic, bool orientable);

/// L for the sphere, T(g) for orientable genus g, P(h) for non-orientable genus h.
ColoredGraph crystallization_of(const SurfaceClass& s);

}  // namespace gem

#endif  // GEM_SURFACES_HPP

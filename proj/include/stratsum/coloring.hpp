#pragma once

#include <gmpxx.h>

#include <functional>

#include "stratsum/directed.hpp"
#include "stratsum/parcel.hpp"

namespace stratsum {

// Edge labelling by parcel arrows: arrows[e] is an element index into the
// fiber named by the directed triangulation's edge word.
struct Coloring {
    std::vector<int> arrows;
};

enum class ColoringMode : uint8_t {
    All,             // every coloring
    ForestIdentity,  // spanning-forest edges pinned to identity arrows
};

struct SpanningForest {
    std::vector<int> root;        // per stratum component: the least-order vertex
    std::vector<int> tree_edges;  // edge ids, across all components
};

// Deterministic breadth-first forest inside each stratum component, rooted at
// the component's least-order vertex.
SpanningForest build_spanning_forest(const DirectedTriangulation& t);

// Depth-first enumeration over edges in a fixed order with immediate
// propagation of the face condition (two assigned edges of a 2-face force the
// third).  Returns the total count; the visitor (optional) sees every
// complete coloring.
mpz_class for_each_coloring(const DirectedTriangulation& t, const Gamma2Parcel& p, ColoringMode mode,
                            const std::function<void(const Coloring&)>& visit);

mpz_class color_count(const DirectedTriangulation& t, const Gamma2Parcel& p, ColoringMode mode);

// Colorings divided by |B|^(v_bulk - s_bulk) * |D|^(v_defect - s_defect).
// Throws Error("non_integer_invariant") if the division is not exact.
mpz_class counting_invariant(const DirectedTriangulation& t, const Gamma2Parcel& p);

// The normalization denominator |B|^(v_b - s_b) * |D|^(v_d - s_d).
mpz_class coloring_normalizer(const DirectedTriangulation& t, const Gamma2Parcel& p);

}  // namespace stratsum

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "stratsum/error.hpp"

namespace stratsum {

enum class Stratum : uint8_t { Bulk, Defect };

struct VertexInfo {
    Stratum stratum = Stratum::Bulk;
    int order = 0;  // position within the vertex's stratum component
    bool operator==(const VertexInfo&) const = default;
};

using Simplex = std::vector<int>;  // strictly increasing vertex ids

// Simplicial pair: a closed oriented pseudo-manifold of dimension `dim`
// carrying a distinguished codimension-1 subcomplex (the defect), given by
// its maximal simplices.  Lists are kept sorted; orientation bits align with
// the corresponding lists.
struct StratifiedComplex {
    int dim = 1;  // 1..3
    std::vector<VertexInfo> vertices;
    std::array<std::vector<Simplex>, 4> simplices;  // by dimension; [0] = {{0},{1},...}
    std::vector<Simplex> defect_tops;
    std::vector<int> top_orientation;     // +-1 per simplices[dim] entry
    std::vector<int> defect_orientation;  // +-1 per defect_tops entry

    int simplex_id(int k, const Simplex& s) const;  // -1 when absent
    int defect_top_id(const Simplex& s) const;      // -1 when absent
    bool vertex_in_defect(int v) const { return vertices[v].stratum == Stratum::Defect; }

    bool operator==(const StratifiedComplex&) const = default;
};

struct StrataCounts {
    int bulk_components = 0;
    int defect_components = 0;
    int bulk_vertices = 0;
    int defect_vertices = 0;
    bool operator==(const StrataCounts&) const = default;
};

// Structural shape checks (ranges, sortedness, table sizes); throws
// semantic_error.  Run implicitly by validate_flag_like.
void check_complex_shape(const StratifiedComplex& c);

// Full invariant report: face closure, defect membership/dimension/purity,
// stratum tags, flag-likeness, the two pseudo-manifold conditions, both
// orientation consistencies, and per-component distinctness of stratum
// orders.
ValidationReport validate_flag_like(const StratifiedComplex& c);

// Throws Error("validation_failed", <report>) unless the report passes.
void require_valid(const StratifiedComplex& c);

enum class Side : uint8_t { None, Inbound, Outbound };

// Orientation-induced side of top simplex `top_id` relative to its defect
// facet `facet_id` (an id into simplices[dim-1] that must lie in the defect).
// The facet orientation induced by the top (deleting the i-th vertex carries
// sign (-1)^i) agrees with the stored defect orientation exactly on the
// inbound side.
Side side_of_defect(const StratifiedComplex& c, int top_id, int facet_id);

StrataCounts strata_counts(const StratifiedComplex& c);

long long euler_characteristic(const StratifiedComplex& c);
long long defect_euler_characteristic(const StratifiedComplex& c);

// Rebuilds a complex from its top-dimensional and defect-top simplices:
// closes faces, sorts lists, and derives vertex stratum tags from the defect.
// Orientation bits are left unset (zeros); call complete_orientations.
StratifiedComplex assemble_complex(int dim, std::vector<VertexInfo> vertices,
                                   const std::vector<Simplex>& tops,
                                   const std::vector<Simplex>& defect_tops);

// Fills in top and defect orientation bits by propagating coherence across
// shared facets, honoring any fixed bits (keyed by simplex tuple).  Components
// without a fixed bit are seeded with +1 on their first simplex.  Throws
// Error("orientation_conflict") when no coherent completion exists.
void complete_orientations(StratifiedComplex& c, const std::map<Simplex, int>& fixed_top = {},
                           const std::map<Simplex, int>& fixed_defect = {});

// Vertex relabeling: perm[old_id] = new_id.  Stratum tags and orders travel
// with the vertices; orientation bits pick up the sorting parity.
StratifiedComplex relabel_vertices(const StratifiedComplex& c, const std::vector<int>& perm);

}  // namespace stratsum

#include "stratsum/coloring.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace stratsum {

SpanningForest build_spanning_forest(const DirectedTriangulation& t) {
    const auto& c = t.base;
    const int n = static_cast<int>(c.vertices.size());
    SpanningForest out;

    std::vector<std::vector<std::pair<int, int>>> adj(n);  // intra-stratum: (neighbor, edge id)
    for (size_t e = 0; e < c.simplices[1].size(); ++e) {
        const int u = c.simplices[1][e][0], v = c.simplices[1][e][1];
        if (c.vertices[u].stratum == c.vertices[v].stratum) {
            adj[u].push_back({v, static_cast<int>(e)});
            adj[v].push_back({u, static_cast<int>(e)});
        }
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    std::vector<bool> seen(n, false);
    // Deterministic root choice: scan vertices by (order, id) per stratum.
    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 0);
    std::sort(verts.begin(), verts.end(), [&](int a, int b) {
        return std::pair(c.vertices[a].order, a) < std::pair(c.vertices[b].order, b);
    });
    for (int r : verts) {
        if (seen[r]) continue;
        out.root.push_back(r);
        seen[r] = true;
        std::vector<int> queue{r};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            const int u = queue[qi];
            for (auto [v, e] : adj[u])
                if (!seen[v]) {
                    seen[v] = true;
                    out.tree_edges.push_back(e);
                    queue.push_back(v);
                }
        }
    }
    std::sort(out.tree_edges.begin(), out.tree_edges.end());
    return out;
}

namespace {

struct Enumerator {
    const DirectedTriangulation& t;
    const Gamma2Parcel& p;
    const std::function<void(const Coloring&)>& visit;

    std::vector<int> assign;       // per edge, -1 unassigned
    std::vector<int> fibers;       // per edge, fiber size
    std::vector<int> order;        // free-choice order of edges
    std::vector<std::vector<int>> edge_faces;  // per edge, face ids
    mpz_class count = 0;

    Enumerator(const DirectedTriangulation& t_, const Gamma2Parcel& p_,
               const std::function<void(const Coloring&)>& visit_)
        : t(t_), p(p_), visit(visit_) {
        const size_t n_edges = t.base.simplices[1].size();
        assign.assign(n_edges, -1);
        fibers.resize(n_edges);
        for (size_t e = 0; e < n_edges; ++e) fibers[e] = p.fiber_count(t.edge_word[e]);
        edge_faces.resize(n_edges);
        for (size_t f = 0; f < t.faces.size(); ++f) {
            edge_faces[t.faces[f].first].push_back(static_cast<int>(f));
            edge_faces[t.faces[f].second].push_back(static_cast<int>(f));
            edge_faces[t.faces[f].third].push_back(static_cast<int>(f));
        }

        // Assignment order: edges sorted by (least incident face id, edge id)
        // so that face propagation fires early.
        std::vector<std::pair<int, int>> keyed;
        for (size_t e = 0; e < n_edges; ++e) {
            int least = std::numeric_limits<int>::max();
            if (!edge_faces[e].empty()) least = *std::min_element(edge_faces[e].begin(), edge_faces[e].end());
            keyed.push_back({least, static_cast<int>(e)});
        }
        std::sort(keyed.begin(), keyed.end());
        for (auto& [k, e] : keyed) order.push_back(e);
    }

    // Sets edge e to value v, then closes under face forcing.  Appends every
    // newly assigned edge to trail.  Returns false on contradiction.
    bool set_and_propagate(int e, int v, std::vector<int>& trail) {
        assign[e] = v;
        trail.push_back(e);
        for (size_t qi = trail.size() - 1; qi < trail.size(); ++qi) {
            const int cur = trail[qi];
            for (int fi : edge_faces[cur]) {
                const auto& fe = t.faces[fi];
                const int a = assign[fe.first], b = assign[fe.second], c3 = assign[fe.third];
                if (a >= 0 && b >= 0) {
                    const ParcelArrow comp = compose({t.edge_word[fe.first], a}, {t.edge_word[fe.second], b}, p);
                    if (c3 < 0) {
                        assign[fe.third] = comp.elem;
                        trail.push_back(fe.third);
                    } else if (c3 != comp.elem) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    void undo(std::vector<int>& trail, size_t from) {
        for (size_t i = from; i < trail.size(); ++i) assign[trail[i]] = -1;
        trail.resize(from);
    }

    void run(size_t pos, std::vector<int>& trail) {
        while (pos < order.size() && assign[order[pos]] >= 0) ++pos;
        if (pos == order.size()) {
            ++count;
            if (visit) visit(Coloring{assign});
            return;
        }
        const int e = order[pos];
        for (int v = 0; v < fibers[e]; ++v) {
            const size_t mark = trail.size();
            if (set_and_propagate(e, v, trail)) run(pos + 1, trail);
            undo(trail, mark);
        }
    }
};

}  // namespace

mpz_class for_each_coloring(const DirectedTriangulation& t, const Gamma2Parcel& p, ColoringMode mode,
                            const std::function<void(const Coloring&)>& visit) {
    Enumerator en(t, p, visit);
    std::vector<int> trail;
    if (mode == ColoringMode::ForestIdentity) {
        auto forest = build_spanning_forest(t);
        for (int e : forest.tree_edges) {
            const Word w = t.edge_word[e];
            const int id_elem = w == Word::BulkId ? p.bulk.id : p.defect.id;
            if (w != Word::BulkId && w != Word::DefectId)
                throw semantic_error("forest edge lies over a generator word");
            if (en.assign[e] >= 0) {
                if (en.assign[e] != id_elem) return 0;
                continue;
            }
            if (!en.set_and_propagate(e, id_elem, trail)) return 0;
        }
    }
    en.run(0, trail);
    return en.count;
}

mpz_class color_count(const DirectedTriangulation& t, const Gamma2Parcel& p, ColoringMode mode) {
    return for_each_coloring(t, p, mode, nullptr);
}

mpz_class coloring_normalizer(const DirectedTriangulation& t, const Gamma2Parcel& p) {
    const auto sc = strata_counts(t.base);
    mpz_class norm = 1;
    for (int i = 0; i < sc.bulk_vertices - sc.bulk_components; ++i) norm *= p.bulk.n;
    for (int i = 0; i < sc.defect_vertices - sc.defect_components; ++i) norm *= p.defect.n;
    return norm;
}

mpz_class counting_invariant(const DirectedTriangulation& t, const Gamma2Parcel& p) {
    const mpz_class total = color_count(t, p, ColoringMode::All);
    const mpz_class norm = coloring_normalizer(t, p);
    if (!mpz_divisible_p(total.get_mpz_t(), norm.get_mpz_t()))
        throw Error("non_integer_invariant", "coloring count " + total.get_str() + " is not divisible by " +
                                                 norm.get_str());
    return total / norm;
}

}  // namespace stratsum

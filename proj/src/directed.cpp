#include "stratsum/directed.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace stratsum {

Word letter_word(EdgeLetter l) {
    switch (l) {
        case EdgeLetter::BulkStep: return Word::BulkId;
        case EdgeLetter::DefectStep: return Word::DefectId;
        case EdgeLetter::OutStep: return Word::OutOfDefect;
        case EdgeLetter::InStep: return Word::IntoDefect;
    }
    throw semantic_error("bad letter");
}

int DirectedTriangulation::edge_id(int u, int v) const {
    Simplex e{std::min(u, v), std::max(u, v)};
    return base.simplex_id(1, e);
}

namespace {

bool touches_defect(const StratifiedComplex& c, const Simplex& s) {
    for (int v : s)
        if (c.vertex_in_defect(v)) return true;
    return false;
}

}  // namespace

DirectedTriangulation direct_triangulation(const StratifiedComplex& c) {
    require_valid(c);
    DirectedTriangulation t;
    t.base = c;
    const int d = c.dim;
    const auto& tops = c.simplices[d];

    // --- sides -------------------------------------------------------------
    // Seeds: top simplices whose defect face is a full facet get their side
    // from the orientation comparison.  Sides then propagate through shared
    // facets that touch the defect: crossing a defect facet flips the side,
    // crossing a bulk-interior facet that still touches the defect keeps it.
    t.side.assign(tops.size(), Side::None);
    std::vector<int> val(tops.size(), 0);  // 0 unknown, +1 inbound, -1 outbound

    std::vector<bool> needs_side(tops.size(), false);
    for (size_t i = 0; i < tops.size(); ++i) needs_side[i] = touches_defect(c, tops[i]);

    for (size_t i = 0; i < tops.size(); ++i) {
        Simplex span;
        for (int v : tops[i])
            if (c.vertex_in_defect(v)) span.push_back(v);
        if (static_cast<int>(span.size()) == d) {
            const int fid = c.simplex_id(d - 1, span);
            val[i] = side_of_defect(c, static_cast<int>(i), fid) == Side::Inbound ? 1 : -1;
        }
    }

    std::map<Simplex, std::vector<int>> cofaces;
    for (size_t i = 0; i < tops.size(); ++i) {
        const auto& s = tops[i];
        for (size_t v = 0; v < s.size(); ++v) {
            Simplex f;
            for (size_t j = 0; j < s.size(); ++j)
                if (j != v) f.push_back(s[j]);
            cofaces[std::move(f)].push_back(static_cast<int>(i));
        }
    }
    std::vector<std::vector<std::pair<int, int>>> nbr(tops.size());
    for (const auto& [f, ids] : cofaces) {
        if (ids.size() != 2 || !touches_defect(c, f)) continue;
        const int rel = c.defect_top_id(f) >= 0 ? -1 : 1;
        nbr[ids[0]].push_back({ids[1], rel});
        nbr[ids[1]].push_back({ids[0], rel});
    }

    std::queue<int> q;
    for (size_t i = 0; i < tops.size(); ++i)
        if (val[i] != 0) q.push(static_cast<int>(i));
    while (!q.empty()) {
        int i = q.front();
        q.pop();
        for (auto [j, rel] : nbr[i]) {
            const int want = val[i] * rel;
            if (val[j] == 0) {
                val[j] = want;
                q.push(j);
            } else if (val[j] != want) {
                throw Error("side_conflict", "top simplices disagree about the side of the defect");
            }
        }
    }
    for (size_t i = 0; i < tops.size(); ++i) {
        if (needs_side[i] && val[i] == 0)
            throw Error("side_conflict",
                        "side of a defect-touching top simplex is underdetermined (defect not locally two-sided)");
        t.side[i] = val[i] == 0 ? Side::None : (val[i] > 0 ? Side::Inbound : Side::Outbound);
    }

    // --- edge directions ----------------------------------------------------
    const auto& edges = c.simplices[1];
    t.edge_dir.assign(edges.size(), {-1, -1});
    t.edge_word.resize(edges.size());

    std::vector<std::vector<int>> edge_tops(edges.size());
    for (size_t i = 0; i < tops.size(); ++i) {
        const auto& s = tops[i];
        for (size_t a = 0; a < s.size(); ++a)
            for (size_t b = a + 1; b < s.size(); ++b) {
                const int eid = c.simplex_id(1, {s[a], s[b]});
                edge_tops[eid].push_back(static_cast<int>(i));
            }
    }

    for (size_t e = 0; e < edges.size(); ++e) {
        const int u = edges[e][0], v = edges[e][1];
        const bool ud = c.vertex_in_defect(u), vd = c.vertex_in_defect(v);
        if (ud == vd) {
            const bool forward = c.vertices[u].order < c.vertices[v].order;
            t.edge_dir[e] = forward ? std::pair(u, v) : std::pair(v, u);
            t.edge_word[e] = ud ? Word::DefectId : Word::BulkId;
        } else {
            Side s0 = Side::None;
            for (int ti : edge_tops[e]) {
                const Side s1 = t.side[ti];
                if (s1 == Side::None) continue;
                if (s0 == Side::None) s0 = s1;
                else if (s0 != s1)
                    throw Error("side_conflict", "mixed edge lies in top simplices on both sides of the defect");
            }
            if (s0 == Side::None) throw Error("side_conflict", "mixed edge has no side-bearing top simplex");
            const int bulk_v = ud ? v : u;
            const int defect_v = ud ? u : v;
            if (s0 == Side::Inbound) {
                t.edge_dir[e] = {bulk_v, defect_v};
                t.edge_word[e] = Word::IntoDefect;
            } else {
                t.edge_dir[e] = {defect_v, bulk_v};
                t.edge_word[e] = Word::OutOfDefect;
            }
        }
    }

    // --- long paths ----------------------------------------------------------
    t.long_paths.resize(tops.size());
    for (size_t i = 0; i < tops.size(); ++i) {
        const auto& s = tops[i];
        std::vector<int> bulk, defect;
        for (int v : s) (c.vertex_in_defect(v) ? defect : bulk).push_back(v);
        auto by_order = [&](int a, int b) { return c.vertices[a].order < c.vertices[b].order; };
        std::sort(bulk.begin(), bulk.end(), by_order);
        std::sort(defect.begin(), defect.end(), by_order);
        std::vector<int> path;
        if (t.side[i] == Side::Outbound) {
            path = defect;
            path.insert(path.end(), bulk.begin(), bulk.end());
        } else {
            path = bulk;
            path.insert(path.end(), defect.begin(), defect.end());
        }
        // Defensive: the edge tournament restricted to this simplex must agree
        // with the path order on every pair.
        for (size_t a = 0; a < path.size(); ++a)
            for (size_t b = a + 1; b < path.size(); ++b) {
                const int eid = t.edge_id(path[a], path[b]);
                if (t.edge_dir[eid] != std::pair(path[a], path[b]))
                    throw Error("cyclic_tournament", "edge directions do not order the simplex");
            }
        t.long_paths[i] = std::move(path);
    }

    // --- 2-faces --------------------------------------------------------------
    if (d >= 2) {
        const auto& faces2 = c.simplices[2];
        t.faces.resize(faces2.size());
        for (size_t f = 0; f < faces2.size(); ++f) {
            const auto& tri = faces2[f];
            // order the three vertices by the edge tournament
            std::array<int, 3> vs{tri[0], tri[1], tri[2]};
            std::array<int, 3> outdeg{0, 0, 0};
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b) {
                    const int eid = t.edge_id(vs[a], vs[b]);
                    if (t.edge_dir[eid] == std::pair(vs[a], vs[b])) ++outdeg[a];
                    else ++outdeg[b];
                }
            if (outdeg[0] + outdeg[1] + outdeg[2] != 3 ||
                std::max({outdeg[0], outdeg[1], outdeg[2]}) != 2 ||
                std::min({outdeg[0], outdeg[1], outdeg[2]}) != 0)
                throw Error("cyclic_tournament", "2-face edges form a directed cycle");
            std::array<int, 3> ordered{};
            for (int a = 0; a < 3; ++a) ordered[2 - outdeg[a]] = vs[a];
            DirectedTriangulation::FaceEdges fe;
            fe.verts = ordered;
            fe.first = t.edge_id(ordered[0], ordered[1]);
            fe.second = t.edge_id(ordered[1], ordered[2]);
            fe.third = t.edge_id(ordered[0], ordered[2]);
            t.faces[f] = fe;
        }
    }

    return t;
}

const char* face_type_name(FaceType t) {
    switch (t) {
        case FaceType::Bulk: return "bulk";
        case FaceType::Defect: return "defect";
        case FaceType::DefectEdgeApexInbound: return "defect_edge_apex_inbound";
        case FaceType::DefectEdgeApexOutbound: return "defect_edge_apex_outbound";
        case FaceType::BulkEdgeApexReceiving: return "bulk_edge_apex_receiving";
        case FaceType::BulkEdgeApexEmitting: return "bulk_edge_apex_emitting";
    }
    return "?";
}

FaceClass face_type(const DirectedTriangulation& t, int face_id) {
    if (face_id < 0 || face_id >= static_cast<int>(t.faces.size()))
        throw semantic_error("face_type: face id out of range");
    const auto& fe = t.faces[face_id];
    const auto& c = t.base;
    int n_defect = 0;
    for (int v : fe.verts)
        if (c.vertex_in_defect(v)) ++n_defect;

    FaceClass out;
    out.edges = fe;
    switch (n_defect) {
        case 0: out.type = FaceType::Bulk; return out;
        case 3: out.type = FaceType::Defect; return out;
        case 2: {
            // apex is the bulk vertex; both mixed edges must share direction
            const bool apex_first = !c.vertex_in_defect(fe.verts[0]);
            const bool apex_last = !c.vertex_in_defect(fe.verts[2]);
            if (apex_first && !apex_last) {
                out.type = FaceType::DefectEdgeApexInbound;
                return out;
            }
            if (apex_last && !apex_first) {
                out.type = FaceType::DefectEdgeApexOutbound;
                return out;
            }
            throw semantic_error("face_type: mixed edges at a bulk apex point both ways");
        }
        case 1: {
            const bool apex_first = c.vertex_in_defect(fe.verts[0]);
            const bool apex_last = c.vertex_in_defect(fe.verts[2]);
            if (apex_last && !apex_first) {
                out.type = FaceType::BulkEdgeApexReceiving;
                return out;
            }
            if (apex_first && !apex_last) {
                out.type = FaceType::BulkEdgeApexEmitting;
                return out;
            }
            throw semantic_error("face_type: mixed edges at a defect apex point both ways");
        }
    }
    throw semantic_error("face_type: unreachable");
}

std::vector<int> long_path_edges(const DirectedTriangulation& t, int top_id) {
    const auto& path = t.long_paths.at(top_id);
    std::vector<int> out;
    out.reserve(path.size() - 1);
    for (size_t i = 0; i + 1 < path.size(); ++i) out.push_back(t.edge_id(path[i], path[i + 1]));
    return out;
}

LongPathForm long_path_form(const DirectedTriangulation& t, int top_id) {
    LongPathForm out;
    out.kind = PathFormKind::AllBulk;
    const auto eids = long_path_edges(t, top_id);
    for (size_t i = 0; i < eids.size(); ++i) {
        EdgeLetter l;
        switch (t.edge_word[eids[i]]) {
            case Word::BulkId: l = EdgeLetter::BulkStep; break;
            case Word::DefectId: l = EdgeLetter::DefectStep; break;
            case Word::OutOfDefect: l = EdgeLetter::OutStep; break;
            case Word::IntoDefect: l = EdgeLetter::InStep; break;
            default: throw semantic_error("bad edge word");
        }
        out.letters.push_back(l);
        if (l == EdgeLetter::OutStep) {
            out.kind = PathFormKind::DefectToBulk;
            out.cross_index = static_cast<int>(i) + 1;
        } else if (l == EdgeLetter::InStep) {
            out.kind = PathFormKind::BulkToDefect;
            out.cross_index = static_cast<int>(i) + 1;
        }
    }
    return out;
}

int orientation_sign(const DirectedTriangulation& t, int top_id) {
    const auto& path = t.long_paths.at(top_id);
    // parity of the permutation sorting the path into the stored (sorted) tuple
    int parity = 1;
    for (size_t i = 0; i < path.size(); ++i)
        for (size_t j = i + 1; j < path.size(); ++j)
            if (path[i] > path[j]) parity = -parity;
    return parity * t.base.top_orientation.at(top_id);
}

}  // namespace stratsum

#include "stratsum/io.hpp"

#include <json.hpp>

#include <algorithm>

namespace stratsum {

using nlohmann::json;

namespace {

constexpr const char* kComplexFormat = "stratsum.complex/1";
constexpr const char* kParcelFormat = "stratsum.parcel/1";
constexpr const char* kCocycleFormat = "stratsum.cocycle/1";

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // byte offset -> line/column
        size_t line = 1, col = 1;
        for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw Error("parse_error",
                    "line " + std::to_string(line) + " column " + std::to_string(col) + ": " + e.what());
    }
}

[[noreturn]] void fail_at(const std::string& path, const std::string& msg) {
    throw semantic_error(path + ": " + msg);
}

void expect_keys(const json& obj, const std::string& path, const std::vector<std::string>& required,
                 const std::vector<std::string>& optional = {}) {
    if (!obj.is_object()) fail_at(path, "expected an object");
    for (const auto& k : required)
        if (!obj.contains(k)) fail_at(path, "missing field '" + k + "'");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        const std::string& k = it.key();
        if (std::find(required.begin(), required.end(), k) == required.end() &&
            std::find(optional.begin(), optional.end(), k) == optional.end())
            fail_at(path + "." + k, "unknown field");
    }
}

int get_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) fail_at(path, "expected an integer");
    return v.get<int>();
}

int get_pm1(const json& v, const std::string& path) {
    const int b = get_int(v, path);
    if (b != 1 && b != -1) fail_at(path, "expected +1 or -1");
    return b;
}

std::vector<int> get_int_vector(const json& v, const std::string& path, int lo, int hi) {
    if (!v.is_array()) fail_at(path, "expected an array");
    std::vector<int> out;
    for (size_t i = 0; i < v.size(); ++i) {
        const int x = get_int(v[i], path + "[" + std::to_string(i) + "]");
        if (x < lo || x >= hi) fail_at(path + "[" + std::to_string(i) + "]", "index out of range");
        out.push_back(x);
    }
    return out;
}

std::vector<int> get_table(const json& v, const std::string& path, int rows, int cols, int range) {
    if (!v.is_array() || static_cast<int>(v.size()) != rows) fail_at(path, "expected " + std::to_string(rows) + " rows");
    std::vector<int> out;
    for (int r = 0; r < rows; ++r) {
        const auto row = get_int_vector(v[r], path + "[" + std::to_string(r) + "]", 0, range);
        if (static_cast<int>(row.size()) != cols)
            fail_at(path + "[" + std::to_string(r) + "]", "expected " + std::to_string(cols) + " entries");
        out.insert(out.end(), row.begin(), row.end());
    }
    return out;
}

FiniteGroupTable parse_group(const json& v, const std::string& path) {
    expect_keys(v, path, {"size", "id", "mul", "inv"});
    FiniteGroupTable g;
    g.n = get_int(v["size"], path + ".size");
    if (g.n < 1) fail_at(path + ".size", "must be positive");
    g.id = get_int(v["id"], path + ".id");
    if (g.id < 0 || g.id >= g.n) fail_at(path + ".id", "index out of range");
    g.mul = get_table(v["mul"], path + ".mul", g.n, g.n, g.n);
    g.inv = get_int_vector(v["inv"], path + ".inv", 0, g.n);
    if (static_cast<int>(g.inv.size()) != g.n) fail_at(path + ".inv", "expected " + std::to_string(g.n) + " entries");
    return g;
}

json group_to_json(const FiniteGroupTable& g) {
    json mul = json::array();
    for (int a = 0; a < g.n; ++a) {
        json row = json::array();
        for (int b = 0; b < g.n; ++b) row.push_back(g.times(a, b));
        mul.push_back(row);
    }
    return json{{"size", g.n}, {"id", g.id}, {"mul", mul}, {"inv", g.inv}};
}

json table_to_json(const std::vector<int>& t, int rows, int cols) {
    json out = json::array();
    for (int r = 0; r < rows; ++r) {
        json row = json::array();
        for (int c = 0; c < cols; ++c) row.push_back(t[static_cast<size_t>(r) * cols + c]);
        out.push_back(row);
    }
    return out;
}

std::string dump_doc(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

StratifiedComplex parse_complex(const std::string& text) {
    const json doc = parse_json(text);
    expect_keys(doc, "$", {"format", "dim", "vertices", "simplices", "defect", "top_orientation",
                           "defect_orientation"});
    if (doc["format"] != kComplexFormat) fail_at("$.format", "expected \"" + std::string(kComplexFormat) + "\"");

    StratifiedComplex c;
    c.dim = get_int(doc["dim"], "$.dim");
    if (c.dim < 1 || c.dim > 3) fail_at("$.dim", "dimension must be 1, 2 or 3");

    if (!doc["vertices"].is_array() || doc["vertices"].empty()) fail_at("$.vertices", "expected a nonempty array");
    const int n = static_cast<int>(doc["vertices"].size());
    for (int i = 0; i < n; ++i) {
        const std::string path = "$.vertices[" + std::to_string(i) + "]";
        const json& v = doc["vertices"][i];
        expect_keys(v, path, {"stratum", "order"});
        VertexInfo info;
        const std::string s = v["stratum"].is_string() ? v["stratum"].get<std::string>() : "";
        if (s == "bulk") info.stratum = Stratum::Bulk;
        else if (s == "defect") info.stratum = Stratum::Defect;
        else fail_at(path + ".stratum", "expected \"bulk\" or \"defect\"");
        info.order = get_int(v["order"], path + ".order");
        c.vertices.push_back(info);
    }

    for (int v = 0; v < n; ++v) c.simplices[0].push_back({v});
    if (!doc["simplices"].is_object()) fail_at("$.simplices", "expected an object keyed by dimension");
    for (auto it = doc["simplices"].begin(); it != doc["simplices"].end(); ++it) {
        const std::string& key = it.key();
        if (key != "1" && key != "2" && key != "3") fail_at("$.simplices." + key, "unknown dimension key");
        const int k = key[0] - '0';
        if (k > c.dim) fail_at("$.simplices." + key, "dimension exceeds the complex dimension");
        const json& list = it.value();
        if (!list.is_array()) fail_at("$.simplices." + key, "expected an array");
        for (size_t i = 0; i < list.size(); ++i) {
            const std::string path = "$.simplices." + key + "[" + std::to_string(i) + "]";
            auto s = get_int_vector(list[i], path, 0, n);
            if (static_cast<int>(s.size()) != k + 1) fail_at(path, "expected " + std::to_string(k + 1) + " vertices");
            for (size_t j = 1; j < s.size(); ++j)
                if (s[j] <= s[j - 1]) fail_at(path, "vertices must be strictly increasing");
            c.simplices[k].push_back(std::move(s));
        }
    }
    for (int k = 1; k <= c.dim; ++k)
        if (!doc["simplices"].contains(std::to_string(k)))
            fail_at("$.simplices", "missing dimension key \"" + std::to_string(k) + "\"");

    if (!doc["defect"].is_array()) fail_at("$.defect", "expected an array");
    for (size_t i = 0; i < doc["defect"].size(); ++i) {
        const std::string path = "$.defect[" + std::to_string(i) + "]";
        auto s = get_int_vector(doc["defect"][i], path, 0, n);
        if (s.empty() || static_cast<int>(s.size()) > c.dim) fail_at(path, "impossible defect simplex dimension");
        for (size_t j = 1; j < s.size(); ++j)
            if (s[j] <= s[j - 1]) fail_at(path, "vertices must be strictly increasing");
        c.defect_tops.push_back(std::move(s));
    }

    // orientations ride along with their simplex during canonical sorting
    {
        const json& tb = doc["top_orientation"];
        if (!tb.is_array() || tb.size() != c.simplices[c.dim].size())
            fail_at("$.top_orientation", "expected one entry per top simplex");
        std::vector<std::pair<Simplex, int>> paired;
        for (size_t i = 0; i < tb.size(); ++i)
            paired.push_back({c.simplices[c.dim][i], get_pm1(tb[i], "$.top_orientation[" + std::to_string(i) + "]")});
        std::sort(paired.begin(), paired.end());
        for (size_t i = 0; i + 1 < paired.size(); ++i)
            if (paired[i].first == paired[i + 1].first) fail_at("$.simplices", "duplicate top simplex");
        c.simplices[c.dim].clear();
        for (auto& [s, b] : paired) {
            c.simplices[c.dim].push_back(s);
            c.top_orientation.push_back(b);
        }
    }
    {
        const json& db = doc["defect_orientation"];
        if (!db.is_array() || db.size() != c.defect_tops.size())
            fail_at("$.defect_orientation", "expected one entry per defect simplex");
        std::vector<std::pair<Simplex, int>> paired;
        for (size_t i = 0; i < db.size(); ++i)
            paired.push_back({c.defect_tops[i], get_pm1(db[i], "$.defect_orientation[" + std::to_string(i) + "]")});
        std::sort(paired.begin(), paired.end());
        c.defect_tops.clear();
        for (auto& [s, b] : paired) {
            c.defect_tops.push_back(s);
            c.defect_orientation.push_back(b);
        }
    }
    for (int k = 1; k < c.dim; ++k) std::sort(c.simplices[k].begin(), c.simplices[k].end());

    check_complex_shape(c);
    return c;
}

std::string print_complex(const StratifiedComplex& c) {
    json simplices = json::object();
    for (int k = 1; k <= c.dim; ++k) {
        json list = json::array();
        for (const auto& s : c.simplices[k]) list.push_back(s);
        simplices[std::to_string(k)] = list;
    }
    json verts = json::array();
    for (const auto& v : c.vertices)
        verts.push_back(json{{"stratum", v.stratum == Stratum::Bulk ? "bulk" : "defect"}, {"order", v.order}});
    json defect = json::array();
    for (const auto& s : c.defect_tops) defect.push_back(s);
    json doc{{"format", kComplexFormat},
             {"dim", c.dim},
             {"vertices", verts},
             {"simplices", simplices},
             {"defect", defect},
             {"top_orientation", c.top_orientation},
             {"defect_orientation", c.defect_orientation}};
    return dump_doc(doc);
}

Gamma2Parcel parse_parcel(const std::string& text) {
    const json doc = parse_json(text);
    expect_keys(doc, "$", {"format", "bulk", "defect", "iota", "omega"}, {"glabel"});
    if (doc["format"] != kParcelFormat) fail_at("$.format", "expected \"" + std::string(kParcelFormat) + "\"");

    Gamma2Parcel p;
    p.bulk = parse_group(doc["bulk"], "$.bulk");
    p.defect = parse_group(doc["defect"], "$.defect");

    expect_keys(doc["iota"], "$.iota", {"size", "bulk_action", "defect_action"});
    p.n_into = get_int(doc["iota"]["size"], "$.iota.size");
    if (p.n_into < 1) fail_at("$.iota.size", "must be positive");
    p.act_bulk_into = get_table(doc["iota"]["bulk_action"], "$.iota.bulk_action", p.bulk.n, p.n_into, p.n_into);
    p.act_into_defect = get_table(doc["iota"]["defect_action"], "$.iota.defect_action", p.n_into, p.defect.n, p.n_into);

    expect_keys(doc["omega"], "$.omega", {"size", "defect_action", "bulk_action"});
    p.n_out = get_int(doc["omega"]["size"], "$.omega.size");
    if (p.n_out < 1) fail_at("$.omega.size", "must be positive");
    p.act_defect_out = get_table(doc["omega"]["defect_action"], "$.omega.defect_action", p.defect.n, p.n_out, p.n_out);
    p.act_out_bulk = get_table(doc["omega"]["bulk_action"], "$.omega.bulk_action", p.n_out, p.bulk.n, p.n_out);

    if (doc.contains("glabel")) {
        expect_keys(doc["glabel"], "$.glabel", {"bulk", "defect", "iota", "omega"});
        GLabel lab;
        auto parse_triples = [&](const json& v, const std::string& path, int count) {
            if (!v.is_array() || static_cast<int>(v.size()) != count)
                fail_at(path, "expected " + std::to_string(count) + " triples");
            std::vector<GTriple> out;
            for (size_t i = 0; i < v.size(); ++i) {
                const std::string ip = path + "[" + std::to_string(i) + "]";
                if (!v[i].is_array() || v[i].size() != 3) fail_at(ip, "expected [bulk, defect, z]");
                GTriple t;
                t.b = get_int(v[i][0], ip + "[0]");
                t.d = get_int(v[i][1], ip + "[1]");
                if (!v[i][2].is_number_integer()) fail_at(ip + "[2]", "expected an integer");
                t.z = v[i][2].get<long long>();
                if (t.b < 0 || t.b >= p.bulk.n) fail_at(ip + "[0]", "index out of range");
                if (t.d < 0 || t.d >= p.defect.n) fail_at(ip + "[1]", "index out of range");
                out.push_back(t);
            }
            return out;
        };
        lab.on_bulk = parse_triples(doc["glabel"]["bulk"], "$.glabel.bulk", p.bulk.n);
        lab.on_defect = parse_triples(doc["glabel"]["defect"], "$.glabel.defect", p.defect.n);
        lab.on_into = parse_triples(doc["glabel"]["iota"], "$.glabel.iota", p.n_into);
        lab.on_out = parse_triples(doc["glabel"]["omega"], "$.glabel.omega", p.n_out);
        p.glabel = std::move(lab);
    }
    check_parcel_shape(p);
    return p;
}

std::string print_parcel(const Gamma2Parcel& p) {
    json doc{{"format", kParcelFormat},
             {"bulk", group_to_json(p.bulk)},
             {"defect", group_to_json(p.defect)},
             {"iota", json{{"size", p.n_into},
                           {"bulk_action", table_to_json(p.act_bulk_into, p.bulk.n, p.n_into)},
                           {"defect_action", table_to_json(p.act_into_defect, p.n_into, p.defect.n)}}},
             {"omega", json{{"size", p.n_out},
                            {"defect_action", table_to_json(p.act_defect_out, p.defect.n, p.n_out)},
                            {"bulk_action", table_to_json(p.act_out_bulk, p.n_out, p.bulk.n)}}}};
    if (p.glabel) {
        auto triples = [](const std::vector<GTriple>& v) {
            json out = json::array();
            for (const auto& t : v) out.push_back(json::array({t.b, t.d, t.z}));
            return out;
        };
        doc["glabel"] = json{{"bulk", triples(p.glabel->on_bulk)},
                             {"defect", triples(p.glabel->on_defect)},
                             {"iota", triples(p.glabel->on_into)},
                             {"omega", triples(p.glabel->on_out)}};
    }
    return dump_doc(doc);
}

GroupCochain parse_cochain(const std::string& text) {
    const json doc = parse_json(text);
    expect_keys(doc, "$", {"format", "dim", "root_order", "quotient", "bulk_map", "defect_map", "z_map", "values"});
    if (doc["format"] != kCocycleFormat) fail_at("$.format", "expected \"" + std::string(kCocycleFormat) + "\"");

    GroupCochain c;
    c.d = get_int(doc["dim"], "$.dim");
    if (c.d < 1) fail_at("$.dim", "must be positive");
    c.m = get_int(doc["root_order"], "$.root_order");
    if (c.m < 1) fail_at("$.root_order", "must be positive");
    c.quotient = parse_group(doc["quotient"], "$.quotient");
    c.bulk_map = get_int_vector(doc["bulk_map"], "$.bulk_map", 0, c.quotient.n);
    c.defect_map = get_int_vector(doc["defect_map"], "$.defect_map", 0, c.quotient.n);
    c.z_map = get_int(doc["z_map"], "$.z_map");
    if (c.z_map < 0 || c.z_map >= c.quotient.n) fail_at("$.z_map", "index out of range");
    c.values = get_int_vector(doc["values"], "$.values", 0, c.m);
    long long expect = 1;
    for (int i = 0; i < c.d; ++i) expect *= c.quotient.n;
    if (static_cast<long long>(c.values.size()) != expect)
        fail_at("$.values", "expected " + std::to_string(expect) + " exponents (row-major over Q^dim)");
    return c;
}

std::string print_cochain(const GroupCochain& c) {
    json doc{{"format", kCocycleFormat}, {"dim", c.d},        {"root_order", c.m},
             {"quotient", group_to_json(c.quotient)},         {"bulk_map", c.bulk_map},
             {"defect_map", c.defect_map},                    {"z_map", c.z_map},
             {"values", c.values}};
    return dump_doc(doc);
}

namespace {

StratifiedComplex finish_example(StratifiedComplex c) {
    complete_orientations(c);
    require_valid(c);
    return c;
}

StratifiedComplex make_circle_defect_point() {
    std::vector<VertexInfo> verts{{Stratum::Defect, 0}, {Stratum::Bulk, 0}, {Stratum::Bulk, 1}};
    std::vector<Simplex> tops{{0, 1}, {0, 2}, {1, 2}};
    std::vector<Simplex> defect{{0}};
    return finish_example(assemble_complex(1, verts, tops, defect));
}

StratifiedComplex make_torus_plain() {
    std::vector<VertexInfo> verts(7);
    for (int i = 0; i < 7; ++i) verts[i] = {Stratum::Bulk, i};
    std::vector<Simplex> tops;
    for (int i = 0; i < 7; ++i) {
        Simplex a{i, (i + 1) % 7, (i + 3) % 7};
        Simplex b{i, (i + 2) % 7, (i + 3) % 7};
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        tops.push_back(a);
        tops.push_back(b);
    }
    return finish_example(assemble_complex(2, verts, tops, {}));
}

StratifiedComplex make_sphere_equator() {
    std::vector<VertexInfo> verts{{Stratum::Defect, 0}, {Stratum::Defect, 1}, {Stratum::Defect, 2},
                                  {Stratum::Defect, 3}, {Stratum::Bulk, 0},  {Stratum::Bulk, 1}};
    std::vector<Simplex> equator{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    std::vector<Simplex> tops;
    for (const auto& e : equator) {
        tops.push_back(Simplex{e[0], e[1], 4});
        tops.push_back(Simplex{e[0], e[1], 5});
    }
    return finish_example(assemble_complex(2, verts, tops, equator));
}

StratifiedComplex make_torus_meridian() {
    auto vid = [](int i, int j) { return 3 * ((i % 3 + 3) % 3) + ((j % 3 + 3) % 3); };
    std::vector<VertexInfo> verts(9);
    for (int j = 0; j < 3; ++j) verts[vid(0, j)] = {Stratum::Defect, j};
    int order = 0;
    for (int i = 1; i < 3; ++i)
        for (int j = 0; j < 3; ++j) verts[vid(i, j)] = {Stratum::Bulk, order++};
    std::vector<Simplex> tops;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Simplex a{vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)};
            Simplex b{vid(i, j), vid(i, j + 1), vid(i + 1, j + 1)};
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            tops.push_back(a);
            tops.push_back(b);
        }
    std::vector<Simplex> defect;
    for (int j = 0; j < 3; ++j) {
        Simplex e{vid(0, j), vid(0, j + 1)};
        std::sort(e.begin(), e.end());
        defect.push_back(e);
    }
    return finish_example(assemble_complex(2, verts, tops, defect));
}

StratifiedComplex make_lens_like_3d() {
    // Double of a solid torus along its boundary torus.  Each copy is the
    // staircase product of a 3-cycle with a coned disk; the shared boundary
    // is a 3x3 torus and becomes the defect.
    const int a_edges[3][2] = {{0, 1}, {1, 2}, {0, 2}};
    const int d_tris[3][3] = {{0, 1, 2}, {0, 2, 3}, {0, 1, 3}};  // local: 0 = cone point, 1..3 = rim
    const int b_edges[3][2] = {{1, 2}, {2, 3}, {1, 3}};

    auto boundary_vid = [](int i, int w) { return 3 * i + (w - 1); };
    std::vector<Simplex> tops;
    for (int copy = 0; copy < 2; ++copy) {
        const int core = 9 + 3 * copy;
        auto vid = [&](int i, int w) { return w == 0 ? core + i : boundary_vid(i, w); };
        for (const auto& ae : a_edges)
            for (const auto& dt : d_tris) {
                const int u[2] = {ae[0], ae[1]};
                const int w[3] = {dt[0], dt[1], dt[2]};
                // monotone staircase chains through the 2x3 grid
                const int chains[3][4][2] = {{{0, 0}, {1, 0}, {1, 1}, {1, 2}},
                                             {{0, 0}, {0, 1}, {1, 1}, {1, 2}},
                                             {{0, 0}, {0, 1}, {0, 2}, {1, 2}}};
                for (const auto& chain : chains) {
                    Simplex tet;
                    for (const auto& step : chain) tet.push_back(vid(u[step[0]], w[step[1]]));
                    std::sort(tet.begin(), tet.end());
                    tops.push_back(tet);
                }
            }
    }
    std::vector<Simplex> defect;
    for (const auto& ae : a_edges)
        for (const auto& be : b_edges) {
            const int u[2] = {ae[0], ae[1]};
            const int w[2] = {be[0], be[1]};
            const int chains[2][3][2] = {{{0, 0}, {1, 0}, {1, 1}}, {{0, 0}, {0, 1}, {1, 1}}};
            for (const auto& chain : chains) {
                Simplex tri;
                for (const auto& step : chain) tri.push_back(boundary_vid(u[step[0]], w[step[1]]));
                std::sort(tri.begin(), tri.end());
                defect.push_back(tri);
            }
        }

    std::vector<VertexInfo> verts(15);
    for (int v = 0; v < 9; ++v) verts[v] = {Stratum::Defect, v};
    for (int i = 0; i < 3; ++i) {
        verts[9 + i] = {Stratum::Bulk, i};
        verts[12 + i] = {Stratum::Bulk, 3 + i};
    }
    return finish_example(assemble_complex(3, verts, tops, defect));
}

}  // namespace

std::vector<std::string> example_names() {
    return {"circle_defect_point", "torus_plain", "sphere_equator", "torus_meridian", "lens_like_3d"};
}

StratifiedComplex gen_example(const std::string& name) {
    if (name == "circle_defect_point") return make_circle_defect_point();
    if (name == "torus_plain") return make_torus_plain();
    if (name == "sphere_equator") return make_sphere_equator();
    if (name == "torus_meridian") return make_torus_meridian();
    if (name == "lens_like_3d") return make_lens_like_3d();
    throw Error("unknown_example", "no example named '" + name + "'");
}

uint64_t fnv1a64(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string make_run_record(const std::string& command,
                            const std::vector<std::pair<std::string, std::string>>& inputs,
                            const std::vector<std::pair<std::string, std::string>>& outputs) {
    json in = json::object(), out = json::object();
    char buf[32];
    for (const auto& [name, text] : inputs) {
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(text)));
        in[name] = buf;
    }
    for (const auto& [k, v] : outputs) out[k] = v;
    json doc{{"format", "stratsum.run/1"}, {"command", command}, {"inputs", in}, {"outputs", out}};
    return dump_doc(doc);
}

}  // namespace stratsum

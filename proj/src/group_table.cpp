#include "stratsum/group_table.hpp"

#include <string>

namespace stratsum {

FiniteGroupTable trivial_group() {
    FiniteGroupTable g;
    g.n = 1;
    g.mul = {0};
    g.id = 0;
    g.inv = {0};
    return g;
}

FiniteGroupTable cyclic_group(int n) {
    if (n < 1) throw semantic_error("cyclic_group: order must be positive");
    FiniteGroupTable g;
    g.n = n;
    g.mul.resize(static_cast<size_t>(n) * n);
    g.inv.resize(n);
    for (int a = 0; a < n; ++a) {
        g.inv[a] = (n - a) % n;
        for (int b = 0; b < n; ++b) g.mul[static_cast<size_t>(a) * n + b] = (a + b) % n;
    }
    g.id = 0;
    return g;
}

FiniteGroupTable product_group(const FiniteGroupTable& a, const FiniteGroupTable& b) {
    FiniteGroupTable g;
    g.n = a.n * b.n;
    g.mul.resize(static_cast<size_t>(g.n) * g.n);
    g.inv.resize(g.n);
    auto pack = [&](int x, int y) { return x * b.n + y; };
    for (int x1 = 0; x1 < a.n; ++x1)
        for (int y1 = 0; y1 < b.n; ++y1) {
            g.inv[pack(x1, y1)] = pack(a.inv[x1], b.inv[y1]);
            for (int x2 = 0; x2 < a.n; ++x2)
                for (int y2 = 0; y2 < b.n; ++y2)
                    g.mul[static_cast<size_t>(pack(x1, y1)) * g.n + pack(x2, y2)] =
                        pack(a.times(x1, x2), b.times(y1, y2));
        }
    g.id = pack(a.id, b.id);
    return g;
}

void check_group_shape(const FiniteGroupTable& g) {
    if (g.n < 1) throw semantic_error("group: size must be positive");
    if (g.mul.size() != static_cast<size_t>(g.n) * g.n)
        throw semantic_error("group: mul table has wrong size");
    if (g.inv.size() != static_cast<size_t>(g.n))
        throw semantic_error("group: inv table has wrong size");
    if (g.id < 0 || g.id >= g.n) throw semantic_error("group: id out of range");
    for (int v : g.mul)
        if (v < 0 || v >= g.n) throw semantic_error("group: mul entry out of range");
    for (int v : g.inv)
        if (v < 0 || v >= g.n) throw semantic_error("group: inv entry out of range");
}

ValidationReport validate_group(const FiniteGroupTable& g) {
    check_group_shape(g);
    ValidationReport r;

    bool latin = true;
    std::string latin_detail;
    for (int a = 0; a < g.n && latin; ++a) {
        std::vector<bool> row(g.n, false), col(g.n, false);
        for (int b = 0; b < g.n; ++b) {
            row[g.times(a, b)] = true;
            col[g.times(b, a)] = true;
        }
        for (int v = 0; v < g.n; ++v)
            if (!row[v] || !col[v]) {
                latin = false;
                latin_detail = "element " + std::to_string(a) + " is not invertible";
                break;
            }
    }
    r.add("latin_square", latin, latin_detail);

    bool assoc = true;
    std::string assoc_detail;
    for (int a = 0; a < g.n && assoc; ++a)
        for (int b = 0; b < g.n && assoc; ++b)
            for (int c = 0; c < g.n; ++c)
                if (g.times(g.times(a, b), c) != g.times(a, g.times(b, c))) {
                    assoc = false;
                    assoc_detail = "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
                    break;
                }
    r.add("associativity", assoc, assoc_detail);

    bool ident = true;
    for (int a = 0; a < g.n; ++a)
        if (g.times(g.id, a) != a || g.times(a, g.id) != a) ident = false;
    r.add("identity", ident);

    bool invs = true;
    for (int a = 0; a < g.n; ++a)
        if (g.times(a, g.inv[a]) != g.id || g.times(g.inv[a], a) != g.id) invs = false;
    r.add("inverse_table", invs);

    return r;
}

}  // namespace stratsum

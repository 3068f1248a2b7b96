#include "stratsum/foundations.hpp"

#include <algorithm>

namespace stratsum {

bool operator==(const FinitePreorder& a, const FinitePreorder& b) {
    return a.n == b.n && a.rel == b.rel;
}

int PosetOnClasses::class_of(int element) const {
    for (const auto& cls : classes)
        if (std::binary_search(cls.begin(), cls.end(), element)) return cls.front();
    throw semantic_error("element " + std::to_string(element) + " not covered by any class");
}

void validate_preorder(const FinitePreorder& p) {
    for (const auto& [a, b] : p.rel)
        if (a < 0 || a >= p.n || b < 0 || b >= p.n)
            throw semantic_error("relation pair out of carrier range");
    for (int a = 0; a < p.n; ++a)
        if (!p.related(a, a))
            throw Error("not_reflexive", "missing reflexive pair (" + std::to_string(a) + "," + std::to_string(a) + ")");
    for (const auto& [a, b] : p.rel)
        for (const auto& [c, d] : p.rel)
            if (b == c && !p.related(a, d))
                throw Error("not_transitive", "missing pair (" + std::to_string(a) + "," + std::to_string(d) + ")");
}

void validate_poset(const PosetOnClasses& q) {
    std::vector<int> seen(q.n, 0);
    std::set<int> ids;
    for (const auto& cls : q.classes) {
        if (cls.empty()) throw Error("invalid_poset", "empty class");
        if (!std::is_sorted(cls.begin(), cls.end()))
            throw Error("invalid_poset", "class members not sorted");
        for (int e : cls) {
            if (e < 0 || e >= q.n) throw Error("invalid_poset", "class member out of range");
            if (seen[e]++) throw Error("invalid_poset", "element in two classes");
        }
        ids.insert(cls.front());
    }
    for (int e = 0; e < q.n; ++e)
        if (!seen[e]) throw Error("invalid_poset", "element " + std::to_string(e) + " not covered");

    for (const auto& [a, b] : q.order)
        if (!ids.count(a) || !ids.count(b))
            throw Error("invalid_poset", "order pair references a non-class id");
    for (int id : ids)
        if (!q.order.count({id, id})) throw Error("invalid_poset", "order not reflexive");
    for (const auto& [a, b] : q.order) {
        if (a != b && q.order.count({b, a})) throw Error("invalid_poset", "order not antisymmetric");
        for (const auto& [c, d] : q.order)
            if (b == c && !q.order.count({a, d})) throw Error("invalid_poset", "order not transitive");
    }
}

PosetOnClasses decompose_preorder(const FinitePreorder& p) {
    validate_preorder(p);
    PosetOnClasses out;
    out.n = p.n;
    std::vector<int> cls_id(p.n, -1);
    for (int a = 0; a < p.n; ++a) {
        if (cls_id[a] != -1) continue;
        std::vector<int> members;
        for (int b = a; b < p.n; ++b)
            if (p.related(a, b) && p.related(b, a)) {
                members.push_back(b);
                cls_id[b] = a;
            }
        out.classes.push_back(std::move(members));
    }
    for (const auto& c1 : out.classes)
        for (const auto& c2 : out.classes)
            if (p.related(c1.front(), c2.front())) out.order.insert({c1.front(), c2.front()});
    return out;
}

FinitePreorder compose_preorder(const PosetOnClasses& q) {
    validate_poset(q);
    FinitePreorder out;
    out.n = q.n;
    for (const auto& c1 : q.classes)
        for (const auto& c2 : q.classes)
            if (q.order.count({c1.front(), c2.front()}))
                for (int a : c1)
                    for (int b : c2) out.rel.insert({a, b});
    return out;
}

FinitePreorder reflexive_transitive_closure(int n, const std::set<std::pair<int, int>>& rel) {
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : rel) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw semantic_error("relation pair out of carrier range");
        m[a][b] = true;
    }
    for (int i = 0; i < n; ++i) m[i][i] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (m[i][k])
                for (int j = 0; j < n; ++j)
                    if (m[k][j]) m[i][j] = true;
    FinitePreorder out;
    out.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m[i][j]) out.rel.insert({i, j});
    return out;
}

}  // namespace stratsum

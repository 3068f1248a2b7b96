#include "doctest.h"

#include <random>

#include "stratsum/foundations.hpp"

using namespace stratsum;

namespace {

// Brute-force oracle: classes by mutual reachability, order by representatives.
PosetOnClasses oracle_decompose(const FinitePreorder& p) {
    PosetOnClasses out;
    out.n = p.n;
    std::vector<bool> used(p.n, false);
    for (int a = 0; a < p.n; ++a) {
        if (used[a]) continue;
        std::vector<int> cls;
        for (int b = 0; b < p.n; ++b)
            if (p.related(a, b) && p.related(b, a)) {
                cls.push_back(b);
                used[b] = true;
            }
        out.classes.push_back(cls);
    }
    for (const auto& c1 : out.classes)
        for (const auto& c2 : out.classes)
            if (p.related(c1[0], c2[0])) out.order.insert({c1[0], c2[0]});
    return out;
}

}  // namespace

TEST_CASE("decompose: discrete preorder gives singleton classes") {
    FinitePreorder p;
    p.n = 3;
    for (int i = 0; i < 3; ++i) p.rel.insert({i, i});
    auto q = decompose_preorder(p);
    CHECK(q.classes.size() == 3);
    CHECK(q.order.size() == 3);  // only reflexive pairs
}

TEST_CASE("decompose: chaotic preorder on two elements is one class") {
    FinitePreorder p;
    p.n = 2;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) p.rel.insert({a, b});
    auto q = decompose_preorder(p);
    CHECK(q.classes.size() == 1);
    CHECK(q.classes[0] == std::vector<int>{0, 1});
    CHECK(q.order == std::set<std::pair<int, int>>{{0, 0}});
}

TEST_CASE("decompose: closure of 0<=1, 1<=0, 1<=2 on three elements") {
    auto p = reflexive_transitive_closure(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(p.rel.size() == 7);  // 3 reflexive + {01,10} + {02,12}
    auto q = decompose_preorder(p);
    auto expected = oracle_decompose(p);
    CHECK(q.classes == expected.classes);
    CHECK(q.order == expected.order);
    CHECK(q.classes.size() == 2);
    CHECK(q.classes[0] == std::vector<int>{0, 1});
    CHECK(q.order.count({0, 2}) == 1);
    CHECK(q.order.count({2, 0}) == 0);

    // compose on the same poset returns the 7-pair preorder
    CHECK(compose_preorder(q) == p);
}

TEST_CASE("decompose rejects malformed input") {
    FinitePreorder not_reflexive;
    not_reflexive.n = 2;
    not_reflexive.rel = {{0, 0}};
    CHECK_THROWS_WITH_AS(decompose_preorder(not_reflexive), doctest::Contains("reflexive"), Error);

    FinitePreorder not_transitive;
    not_transitive.n = 3;
    not_transitive.rel = {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}};
    CHECK_THROWS_AS(decompose_preorder(not_transitive), Error);
    try {
        decompose_preorder(not_transitive);
    } catch (const Error& e) {
        CHECK(e.code() == "not_transitive");
    }
}

TEST_CASE("compose rejects malformed posets") {
    PosetOnClasses q;
    q.n = 2;
    q.classes = {{0}, {1}};
    q.order = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};  // antisymmetry violated
    CHECK_THROWS_AS(compose_preorder(q), Error);
}

TEST_CASE("round trips on random preorders and posets") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        std::set<std::pair<int, int>> rel;
        const int pairs = static_cast<int>(rng() % (n * n));
        for (int i = 0; i < pairs; ++i) rel.insert({static_cast<int>(rng() % n), static_cast<int>(rng() % n)});
        auto p = reflexive_transitive_closure(n, rel);

        auto q = decompose_preorder(p);
        CHECK(compose_preorder(q) == p);
        auto q2 = decompose_preorder(compose_preorder(q));
        CHECK(q2.classes == q.classes);
        CHECK(q2.order == q.order);

        // no 2-cycles between distinct classes
        for (const auto& [a, b] : q.order)
            if (a != b) CHECK(q.order.count({b, a}) == 0);
    }
}

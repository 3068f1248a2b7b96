#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "stratsum/error.hpp"

namespace stratsum {

// Finite preorder on {0..n-1}: a reflexive, transitive set of ordered pairs.
struct FinitePreorder {
    int n = 0;
    std::set<std::pair<int, int>> rel;

    bool related(int a, int b) const { return rel.count({a, b}) != 0; }
};

// Equivalence classes plus a partial order on them.  A class is identified by
// its minimum member; classes are stored sorted by id.
struct PosetOnClasses {
    int n = 0;                                 // size of the underlying carrier
    std::vector<std::vector<int>> classes;     // each sorted; disjoint; cover 0..n-1
    std::set<std::pair<int, int>> order;       // pairs of class ids (minimum members)

    int class_of(int element) const;
    bool operator==(const PosetOnClasses&) const = default;
};

bool operator==(const FinitePreorder& a, const FinitePreorder& b);

// Throws Error("not_reflexive") / Error("not_transitive") when p is malformed.
void validate_preorder(const FinitePreorder& p);

// Throws Error("invalid_poset") when q is malformed.
void validate_poset(const PosetOnClasses& q);

// Splits a preorder into mutual-reachability classes with the induced partial
// order.  Validates eagerly.
PosetOnClasses decompose_preorder(const FinitePreorder& p);

// Rebuilds the preorder from classes and order: a <= b iff [a] <= [b].
FinitePreorder compose_preorder(const PosetOnClasses& q);

// Helper for callers that hold an arbitrary relation: smallest preorder
// containing it.
FinitePreorder reflexive_transitive_closure(int n, const std::set<std::pair<int, int>>& rel);

}  // namespace stratsum

#pragma once

#include <vector>

#include "stratsum/error.hpp"

namespace stratsum {

// Finite group as an explicit multiplication table over indices 0..n-1.
struct FiniteGroupTable {
    int n = 1;
    std::vector<int> mul;  // row-major n*n
    int id = 0;
    std::vector<int> inv;

    int times(int a, int b) const { return mul[static_cast<size_t>(a) * n + b]; }

    bool operator==(const FiniteGroupTable&) const = default;
};

FiniteGroupTable trivial_group();
FiniteGroupTable cyclic_group(int n);
// Direct product; elements indexed a*b.n + b.
FiniteGroupTable product_group(const FiniteGroupTable& a, const FiniteGroupTable& b);

// Structural sanity (table sizes, index ranges).  Throws semantic_error.
void check_group_shape(const FiniteGroupTable& g);

// Group axioms as a report: latin_square (every element invertible),
// associativity, identity, inverse_table.
ValidationReport validate_group(const FiniteGroupTable& g);

}  // namespace stratsum

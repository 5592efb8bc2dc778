#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seqcor/patterns.hpp"

namespace seqcor {

// A set of patterns sharing one index n.  Sequences derived from the
// patterns of one plan form a codebook.
struct CyclotomicPlan {
    std::size_t n = 0;
    int root_order = 0;  // common root order of the patterns, 0 if mixed/free
    std::vector<CyclotomicPattern> patterns;
    std::string origin;  // e.g. "walsh:3", empty for ad hoc plans
};

struct PlanReport {
    bool balanced = false;     // every pattern sums to zero
    bool orthogonal = false;   // distinct patterns have zero inner product
    bool unimodular = false;   // every entry has unit modulus
    bool hadamard = false;     // all of the above with exactly n-1 patterns
    std::size_t n = 0;
    std::size_t count = 0;
};

// Rows of the 2^k x 2^k sign matrix H_k built by the doubling recursion
// [[H, H], [H, -H]].  Row/column i, j carry entry (-1)^popcount(i & j).
// k is capped at 16; materializing anything near that cap is the caller's
// memory problem.
std::vector<std::vector<int>> walsh_hadamard_matrix(int k);

// Single row without materializing the matrix.
std::vector<int> walsh_row(int k, std::size_t row);

// Plan holding rows 1..2^k-1 (the all-ones row 0 is dropped).
CyclotomicPlan walsh_plan(int k);

// Select plan patterns by their Hadamard row number (1-based; row 0 is the
// all-ones row and never part of a plan).  Order and duplicates are kept.
CyclotomicPlan plan_subset(const CyclotomicPlan& plan, const std::vector<std::size_t>& rows);

// tol applies to the non-exact entry forms only; binary patterns are
// checked in integer arithmetic.
PlanReport validate_plan(const CyclotomicPlan& plan, double tol = 1e-9);

// sum over patterns of d_j * conj(d_k)
cplx hadamard_column_sums(const CyclotomicPlan& plan, std::size_t j, std::size_t k);

}  // namespace seqcor

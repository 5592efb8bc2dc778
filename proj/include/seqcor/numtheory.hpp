#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqcor {

using u64 = std::uint64_t;

// Multiplicative context for the prime field F_p.  alpha is the least
// positive primitive root, the generator every class numbering below
// refers to.  Supports p up to 2^40.
struct FieldContext {
    u64 p = 0;
    u64 alpha = 0;
    std::vector<u64> p1_prime_factors;  // distinct prime factors of p-1

    u64 mul(u64 a, u64 b) const;
    u64 pow(u64 base, u64 e) const;
};

// n x n table of cyclotomic numbers: entry (j,k) counts elements of the
// coset alpha^j * C that land in alpha^k * C after adding 1, where C is
// the group of nonzero n-th powers.
struct CyclotomicNumberTable {
    u64 p = 0;
    u64 n = 0;
    std::vector<u64> counts;  // row-major n*n

    u64 at(u64 j, u64 k) const { return counts[(j % n) * n + k % n]; }
};

bool is_prime(u64 m);

// Least prime p >= start with p == 1 (mod n).
u64 next_usable_prime(u64 start, u64 n);

// Throws std::invalid_argument if p is not prime or out of range.
FieldContext field_context(u64 p);

// Index k in [0,n) with h in alpha^k * C.  Works without any table by
// matching h^((p-1)/n) against powers of alpha^((p-1)/n), so it stays
// usable at primes too large for a dense walk.
// Requires n | p-1 and h != 0 mod p.
u64 cyclotomic_class_index(const FieldContext& ctx, u64 n, u64 h);

// Dense per-element class indices, built by one generator walk.
// table[h] is the class of h for 1 <= h <= p-1; table[0] is 0xFF (unused).
// Requires n <= 255 and p below the cap (default 2^26) to bound memory.
std::vector<std::uint8_t> class_table(const FieldContext& ctx, u64 n,
                                      u64 element_cap = u64(1) << 26);

CyclotomicNumberTable cyclotomic_numbers(const FieldContext& ctx, u64 n,
                                         u64 element_cap = u64(1) << 26);

}  // namespace seqcor

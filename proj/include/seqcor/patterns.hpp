#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "seqcor/fftkit.hpp"

namespace seqcor {

// Index pattern of length n.  Entries are unit complex numbers (or
// arbitrary complex in the free form).  root_order > 0 means every entry
// is exp(2*pi*i*e/root_order) for the stored exponent e; root_order == 2
// is the +1/-1 case and keeps an exact signed byte view.
struct CyclotomicPattern {
    std::size_t n = 0;
    int root_order = 0;              // 0 = free complex entries
    std::vector<int> exponents;      // used when root_order > 0
    std::vector<cplx> values;        // always populated

    bool binary() const { return root_order == 2; }
    int sign_at(std::size_t j) const { return exponents[j % n] == 0 ? 1 : -1; }
    cplx at(std::size_t j) const { return values[j % n]; }

    static CyclotomicPattern from_signs(const std::vector<int>& signs);
    static CyclotomicPattern from_exponents(int m, const std::vector<int>& exps);
    static CyclotomicPattern from_values(const std::vector<cplx>& vals);
};

// Fourier side of a pattern: e = dft(d).  Entries are rarely roots of
// unity, so only the complex form is kept.
struct CharacterPattern {
    std::size_t n = 0;
    std::vector<cplx> values;

    cplx at(std::size_t j) const { return values[j % n]; }
};

// Normalized transform e_j = (1/n) sum_k exp(-2 pi i jk/n) d_k.
CharacterPattern pattern_dft(const CyclotomicPattern& d);

// Unnormalized inverse d_j = sum_k exp(+2 pi i jk/n) e_k.  Entries within
// snap_tol of +1/-1 are snapped so binary patterns round-trip exactly.
CyclotomicPattern pattern_idft(const CharacterPattern& e, double snap_tol = 1e-9);

// l1 and l2 norms of the character side, used by the peak bounds.
double l1_norm(const CharacterPattern& e);
double l2_norm(const CharacterPattern& e);

}  // namespace seqcor

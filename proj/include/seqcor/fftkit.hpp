#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace seqcor {

using cplx = std::complex<double>;

std::size_t next_pow2(std::size_t m);

// In-place radix-2 transform, size must be a power of two.  Forward kernel
// exp(-2*pi*i*jk/N), unnormalized; inverse divides by N so the pair is an
// identity round trip.
void fft_pow2(std::vector<cplx>& a, bool inverse);

// Arbitrary-length transform via the Bluestein chirp, same conventions.
std::vector<cplx> dft_any(const std::vector<cplx>& in, bool inverse);

}  // namespace seqcor

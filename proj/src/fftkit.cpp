#include "seqcor/fftkit.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace seqcor {

namespace {

// half-size twiddle tables, shared across calls and threads
std::shared_ptr<const std::vector<cplx>> twiddles(std::size_t n) {
    static std::mutex mu;
    static std::map<std::size_t, std::shared_ptr<const std::vector<cplx>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto table = std::make_shared<std::vector<cplx>>(n / 2);
    for (std::size_t j = 0; j < n / 2; ++j) {
        double ang = -2.0 * std::numbers::pi * double(j) / double(n);
        (*table)[j] = cplx(std::cos(ang), std::sin(ang));
    }
    cache[n] = table;
    return table;
}

}  // namespace

std::size_t next_pow2(std::size_t m) {
    std::size_t n = 1;
    while (n < m) n <<= 1;
    return n;
}

void fft_pow2(std::vector<cplx>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft_pow2: size not a power of two");
    if (n == 1) return;

    if (inverse) {
        for (auto& v : a) v = std::conj(v);
    }

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    auto w = twiddles(n);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < len / 2; ++j) {
                cplx u = a[i + j];
                cplx v = a[i + j + len / 2] * (*w)[j * stride];
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
            }
        }
    }

    if (inverse) {
        const double scale = 1.0 / double(n);
        for (auto& v : a) v = std::conj(v) * scale;
    }
}

std::vector<cplx> dft_any(const std::vector<cplx>& in, bool inverse) {
    const std::size_t n = in.size();
    if (n == 0) throw std::invalid_argument("dft_any: empty input");
    if ((n & (n - 1)) == 0) {
        std::vector<cplx> a = in;
        fft_pow2(a, inverse);
        return a;
    }
    if (inverse) {
        std::vector<cplx> tmp(n);
        for (std::size_t j = 0; j < n; ++j) tmp[j] = std::conj(in[j]);
        auto out = dft_any(tmp, false);
        const double scale = 1.0 / double(n);
        for (auto& v : out) v = std::conj(v) * scale;
        return out;
    }

    // Bluestein: jk = (j^2 + k^2 - (k-j)^2) / 2 turns the transform into a
    // convolution against a chirp.  Squares are reduced mod 2n before the
    // angle is formed so precision holds at large sizes.
    const std::size_t m = next_pow2(2 * n - 1);
    std::vector<cplx> chirp(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t sq = std::size_t((unsigned __int128)(j) * j % (2 * n));
        double ang = -std::numbers::pi * double(sq) / double(n);
        chirp[j] = cplx(std::cos(ang), std::sin(ang));
    }

    std::vector<cplx> a(m, cplx(0, 0)), b(m, cplx(0, 0));
    for (std::size_t j = 0; j < n; ++j) a[j] = in[j] * chirp[j];
    b[0] = std::conj(chirp[0]);
    for (std::size_t j = 1; j < n; ++j) b[j] = b[m - j] = std::conj(chirp[j]);

    fft_pow2(a, false);
    fft_pow2(b, false);
    for (std::size_t j = 0; j < m; ++j) a[j] *= b[j];
    fft_pow2(a, true);

    std::vector<cplx> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * chirp[k];
    return out;
}

}  // namespace seqcor

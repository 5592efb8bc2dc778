#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "seqcor/fftkit.hpp"

using namespace seqcor;

namespace {

// quadratic-time oracle with the same conventions
std::vector<cplx> naive_dft(const std::vector<cplx>& x, bool inverse) {
    const std::size_t n = x.size();
    std::vector<cplx> out(n, cplx(0, 0));
    const double sign = inverse ? 2.0 : -2.0;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            double ang = sign * std::numbers::pi * double((j * k) % n) / double(n);
            out[k] += x[j] * cplx(std::cos(ang), std::sin(ang));
        }
        if (inverse) out[k] /= double(n);
    }
    return out;
}

std::vector<cplx> random_vec(std::size_t n, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> v(n);
    for (auto& z : v) z = cplx(u(rng), u(rng));
    return v;
}

double max_err(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double e = 0;
    for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a[i] - b[i]));
    return e;
}

}  // namespace

TEST_CASE("next_pow2") {
    CHECK(next_pow2(1) == 1);
    CHECK(next_pow2(2) == 2);
    CHECK(next_pow2(3) == 4);
    CHECK(next_pow2(2305) == 4096);
}

TEST_CASE("pow2 transform matches the naive oracle") {
    std::mt19937 rng(7);
    for (std::size_t n : {1, 2, 4, 8, 32, 128, 256}) {
        auto x = random_vec(n, rng);
        auto a = x;
        fft_pow2(a, false);
        CHECK(max_err(a, naive_dft(x, false)) < 1e-9);
        fft_pow2(a, true);
        CHECK(max_err(a, x) < 1e-12);
    }
}

TEST_CASE("arbitrary-length transform matches the naive oracle") {
    std::mt19937 rng(11);
    for (std::size_t n : {1, 3, 5, 6, 7, 17, 41, 97, 100, 255, 1009}) {
        auto x = random_vec(n, rng);
        auto fwd = dft_any(x, false);
        CHECK(max_err(fwd, naive_dft(x, false)) < 1e-8);
        auto back = dft_any(fwd, true);
        CHECK(max_err(back, x) < 1e-10);
    }
}

TEST_CASE("impulse and constant inputs") {
    std::vector<cplx> impulse(13, cplx(0, 0));
    impulse[0] = cplx(1, 0);
    auto flat = dft_any(impulse, false);
    for (auto& v : flat) CHECK(std::abs(v - cplx(1, 0)) < 1e-12);

    std::vector<cplx> ones(16, cplx(1, 0));
    auto spike = dft_any(ones, false);
    CHECK(std::abs(spike[0] - cplx(16, 0)) < 1e-12);
    for (std::size_t k = 1; k < 16; ++k) CHECK(std::abs(spike[k]) < 1e-12);
}

TEST_CASE("Parseval energy balance") {
    std::mt19937 rng(23);
    for (std::size_t n : {8, 21, 64, 129}) {
        auto x = random_vec(n, rng);
        auto fwd = dft_any(x, false);
        double ex = 0, ef = 0;
        for (auto& v : x) ex += std::norm(v);
        for (auto& v : fwd) ef += std::norm(v);
        CHECK(std::abs(ef - double(n) * ex) < 1e-8 * double(n) * ex);
    }
}

TEST_CASE("large pow2 round trip stays tight") {
    std::mt19937 rng(31);
    auto x = random_vec(std::size_t(1) << 18, rng);
    auto a = x;
    fft_pow2(a, false);
    fft_pow2(a, true);
    CHECK(max_err(a, x) < 1e-11);
}

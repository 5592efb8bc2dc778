#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "seqcor/correlation.hpp"
#include "seqcor/numtheory.hpp"
#include "seqcor/plans.hpp"
#include "seqcor/sequences.hpp"

using namespace seqcor;

namespace {

AperiodicSeq signs(std::vector<int> v) {
    AperiodicSeq s;
    s.integral = true;
    for (int x : v) s.iv.push_back(std::int8_t(x));
    s.p = s.iv.size();
    return s;
}

AperiodicSeq random_signs_seq(std::size_t len, std::mt19937& rng) {
    std::bernoulli_distribution coin(0.5);
    std::vector<int> v(len);
    for (auto& x : v) x = coin(rng) ? 1 : -1;
    return signs(v);
}

PeriodicSeq periodic_ints(std::vector<int> v) {
    PeriodicSeq s;
    s.p = v.size();
    s.integral = true;
    for (int x : v) s.iv.push_back(std::int8_t(x));
    return s;
}

CyclotomicPattern random_pattern(std::size_t n, std::mt19937& rng) {
    std::bernoulli_distribution coin(0.5);
    std::vector<int> s(n);
    for (auto& v : s) v = coin(rng) ? 1 : -1;
    return CyclotomicPattern::from_signs(s);
}

}  // namespace

TEST_CASE("direct crosscorrelation pinned") {
    auto f = signs({1, 1, -1});
    auto spec = acorr_direct(f, f);
    CHECK(spec.lo == -2);
    CHECK(spec.hi == 2);
    CHECK(spec.iv == std::vector<long long>{-1, 0, 3, 0, -1});
    CHECK(spec.value(5) == cplx(0, 0));  // outside the window
}

TEST_CASE("mixed length spectrum pinned") {
    auto f = signs({1, 1, -1});
    auto g = signs({1, -1});
    auto spec = acorr_direct(f, g);
    CHECK(spec.lo == -1);
    CHECK(spec.hi == 2);
    CHECK(spec.iv == std::vector<long long>{-1, 0, 2, -1});
}

TEST_CASE("swap symmetry of the crosscorrelation") {
    std::mt19937 rng(3);
    auto f = random_signs_seq(23, rng);
    auto g = random_signs_seq(17, rng);
    auto fg = acorr_direct(f, g);
    auto gf = acorr_direct(g, f);
    for (long long s = fg.lo; s <= fg.hi; ++s)
        CHECK(gf.value(-s) == std::conj(fg.value(s)));
}

TEST_CASE("fft route equals the direct route") {
    std::mt19937 rng(5);
    for (std::size_t len : {1, 2, 3, 17, 100, 257, 1024}) {
        auto f = random_signs_seq(len, rng);
        auto g = random_signs_seq(len, rng);
        auto d = acorr_direct(f, g);
        auto e = acorr_fft(f, g);
        CHECK(d.iv == e.iv);
        CHECK(e.fft_deviation < 1e-9);
    }
    auto f = random_signs_seq(9, rng);
    auto g = random_signs_seq(5, rng);
    CHECK(acorr_direct(f, g).iv == acorr_fft(f, g).iv);
}

TEST_CASE("fft route on complex windows") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-1, 1);
    AperiodicSeq f, g;
    f.integral = g.integral = false;
    for (int i = 0; i < 40; ++i) f.cv.push_back(cplx(u(rng), u(rng)));
    for (int i = 0; i < 25; ++i) g.cv.push_back(cplx(u(rng), u(rng)));
    auto d = acorr_direct(f, g);
    auto e = acorr_fft(f, g);
    for (long long s = d.lo; s <= d.hi; ++s) CHECK(std::abs(d.value(s) - e.value(s)) < 1e-10);
}

TEST_CASE("periodic correlation pinned for the p=5 quadratic sequence") {
    auto f = periodic_ints({0, 1, -1, -1, 1});
    auto spec = pcorr(f, f);
    CHECK(spec.iv[0] == 4);
    for (u64 s = 1; s < 5; ++s) CHECK(spec.iv[s] == -1);
}

TEST_CASE("periodic equals folded aperiodic at every rotation") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        std::uniform_int_distribution<std::size_t> len(2, 24);
        std::size_t l = len(rng);
        std::uniform_int_distribution<int> tri(-1, 1);
        std::vector<int> fv(l), gv(l);
        for (auto& x : fv) x = tri(rng);
        for (auto& x : gv) x = tri(rng);
        auto f = periodic_ints(fv);
        auto g = periodic_ints(gv);
        auto ps = pcorr(f, g);
        for (u64 r = 0; r < l; ++r) {
            auto fr = rotate(f, r);
            auto gr = rotate(g, r);
            auto as = acorr_direct(fr, gr);
            for (long long s = 0; s < (long long)l; ++s)
                CHECK(ps.value(s) == as.value(s) + as.value(s - (long long)l));
        }
    }
}

TEST_CASE("cyclotomic route to periodic correlation") {
    std::mt19937 rng(13);
    for (u64 p : {13, 17, 41}) {
        auto ctx = field_context(p);
        for (u64 n : {2, 4}) {
            if ((p - 1) % n != 0) continue;
            auto tbl = cyclotomic_numbers(ctx, n);
            auto d = random_pattern(n, rng);
            auto dp = random_pattern(n, rng);
            auto f = derive_periodic(ctx, d);
            auto g = derive_periodic(ctx, dp);
            auto ps = pcorr(f, g);
            // shift 0 in closed form
            cplx inner(0, 0);
            for (u64 j = 0; j < n; ++j) inner += d.at(j) * std::conj(dp.at(j));
            CHECK(std::abs(ps.value(0) - inner * (double(p - 1) / double(n))) < 1e-9);
            // every other shift is some alpha^u
            u64 shift = 1;
            for (u64 u = 0; u < p - 1; ++u) {
                cplx via = pcorr_via_cyclotomy(tbl, d, dp, u);
                CHECK(std::abs(via - ps.value((long long)shift)) < 1e-9);
                shift = ctx.mul(shift, ctx.alpha);
            }
            // the cyclotomy route is periodic in u with period n
            CHECK(std::abs(pcorr_via_cyclotomy(tbl, d, dp, 3) -
                           pcorr_via_cyclotomy(tbl, d, dp, 3 + n)) < 1e-12);
        }
    }
}

TEST_CASE("hand-worked two-sequence codebook metrics") {
    Codebook book;
    book.seqs.push_back(signs({1, 1, -1}));
    book.seqs.push_back(signs({1, -1, 1}));
    auto m = metrics(book);
    CHECK(m.count == 2);
    CHECK(m.psl[0] == 1.0);
    CHECK(m.psl[1] == 2.0);
    CHECK(m.adf[0] == doctest::Approx(2.0 / 9).epsilon(1e-12));
    CHECK(m.adf[1] == doctest::Approx(10.0 / 9).epsilon(1e-12));
    CHECK(m.pcc[0] == 2.0);
    CHECK(m.cdf[0] == doctest::Approx(7.0 / 9).epsilon(1e-12));
    CHECK(m.guc == 2.0);
    CHECK(m.sdc == 3.0);
    CHECK(m.guc_over_sqrt_sdc == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(m.cdf_overall == doctest::Approx(11.0 / 9).epsilon(1e-12));
    CHECK(m.adjusted_df == doctest::Approx(4.0 / 9).epsilon(1e-12));
    CHECK(m.psl_avg == doctest::Approx(1.5));
    CHECK(m.pcc_avg == 2.0);
}

TEST_CASE("metrics across backends and thread counts agree exactly") {
    auto plan = walsh_plan(3);
    auto book = instantiate(plan, 41, RotationSpec::of_fraction(0.25), true);
    MetricsOptions direct;
    direct.backend = MetricsOptions::Backend::Direct;
    MetricsOptions fft;
    fft.backend = MetricsOptions::Backend::Fft;
    MetricsOptions fft3 = fft;
    fft3.threads = 3;
    auto a = metrics(book, direct);
    auto b = metrics(book, fft);
    auto c = metrics(book, fft3);
    CHECK(a.guc == b.guc);
    CHECK(a.psl == b.psl);
    CHECK(a.adf == b.adf);
    CHECK(a.pcc == b.pcc);
    CHECK(a.cdf == b.cdf);
    CHECK(a.adjusted_df == b.adjusted_df);
    CHECK(b.psl == c.psl);
    CHECK(b.cdf == c.cdf);
    CHECK(b.adjusted_df == c.adjusted_df);
    CHECK(b.guc == c.guc);
}

TEST_CASE("metrics on mixed-length books") {
    Codebook book;
    book.seqs.push_back(signs({1, 1, -1}));
    book.seqs.push_back(signs({1, -1}));
    auto m = metrics(book);
    CHECK(m.sdc == 2.0);
    CHECK(m.guc == 2.0);
    CHECK(m.cdf[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("metrics input validation") {
    Codebook empty;
    CHECK_THROWS_AS(metrics(empty), std::invalid_argument);
    Codebook zero;
    zero.seqs.push_back(signs({0, 0}));
    CHECK_THROWS_AS(metrics(zero), std::invalid_argument);
}

TEST_CASE("periodic demerit of a complementary pair is exactly one") {
    std::vector<PeriodicSeq> seqs = {periodic_ints({1, 1}), periodic_ints({1, -1})};
    auto r = pcdf(seqs);
    REQUIRE(r.exact);
    CHECK(r.num == 1);
    CHECK(r.den == 1);
    CHECK(r.value == 1.0);
}

TEST_CASE("periodic demerit identities on random books") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> tri(-1, 1);
    for (int rep = 0; rep < 10; ++rep) {
        std::size_t l = 8, count = 4;
        std::vector<PeriodicSeq> seqs;
        for (std::size_t i = 0; i < count; ++i) {
            std::vector<int> v(l);
            bool nonzero = false;
            for (auto& x : v) {
                x = tri(rng);
                nonzero = nonzero || x != 0;
            }
            if (!nonzero) v[0] = 1;
            seqs.push_back(periodic_ints(v));
        }
        auto general = pcdf(seqs, false);
        REQUIRE(general.exact);
        CHECK(general.value >= 1.0 - 1e-12);  // never below one

        // pairwise demerit never exceeds the length
        for (std::size_t i = 0; i < count; ++i) {
            for (std::size_t j = 0; j < count; ++j) {
                auto si = pcorr(seqs[i], seqs[i]);
                auto sj = pcorr(seqs[j], seqs[j]);
                auto sij = pcorr(seqs[i], seqs[j]);
                double num = 0;
                for (u64 s = 0; s < l; ++s) num += std::norm(sij.value((long long)s));
                double pair = num / (double(si.iv[0]) * double(sj.iv[0]));
                CHECK(pair <= double(l) + 1e-9);
            }
        }

        // diagonal-sum identity, raw form
        double lhs = 0;
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < count; ++j) {
                auto sij = pcorr(seqs[i], seqs[j]);
                for (u64 s = 0; s < l; ++s) lhs += std::norm(sij.value((long long)s));
            }
        std::vector<double> col(l, 0.0);
        for (std::size_t i = 0; i < count; ++i) {
            auto sii = pcorr(seqs[i], seqs[i]);
            for (u64 s = 0; s < l; ++s) col[s] += double(sii.iv[s]);
        }
        double rhs = 0;
        for (u64 s = 0; s < l; ++s) rhs += col[s] * col[s];
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("fast and general periodic demerit routes agree") {
    auto ctx = field_context(17);
    auto seqs = derive_plan(ctx, walsh_plan(3));
    auto fast = pcdf(seqs, true);
    auto general = pcdf(seqs, false);
    REQUIRE(fast.exact);
    REQUIRE(general.exact);
    CHECK(fast.used_sum_identity);
    CHECK_FALSE(general.used_sum_identity);
    CHECK(fast.num == general.num);
    CHECK(fast.den == general.den);
    // full hadamard plan books sit exactly at p/(p-1)
    CHECK(fast.num == 17);
    CHECK(fast.den == 16);
}

TEST_CASE("diagonal periodic sums of a full hadamard book") {
    auto ctx = field_context(17);
    auto seqs = derive_plan(ctx, walsh_plan(3));
    std::vector<long long> col(17, 0);
    for (const auto& f : seqs) {
        auto s = pcorr(f, f);
        for (u64 t = 0; t < 17; ++t) col[t] += s.iv[t];
    }
    CHECK(col[0] == 7 * 16);
    for (u64 t = 1; t < 17; ++t) CHECK(col[t] == -7);
}

TEST_CASE("unimodularization moves each aperiodic value by at most two") {
    auto ctx = field_context(41);
    auto plan = walsh_plan(3);
    auto seqs = derive_plan(ctx, plan);
    for (const auto& f : seqs) {
        auto u = unimodularize(f);
        for (u64 r : {0ull, 10ull, 40ull}) {
            auto a = acorr_direct(rotate(f, r), rotate(f, r));
            auto b = acorr_direct(rotate(u, r), rotate(u, r));
            for (long long s = a.lo; s <= a.hi; ++s)
                CHECK(std::abs(a.value(s) - b.value(s)) <= 2.0 + 1e-12);
        }
    }
}

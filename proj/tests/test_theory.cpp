#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "seqcor/correlation.hpp"
#include "seqcor/numtheory.hpp"
#include "seqcor/sequences.hpp"
#include "seqcor/theory.hpp"

using namespace seqcor;

TEST_CASE("limit kernel pinned values and shape") {
    CHECK(phi(0.0) == doctest::Approx(1.0 / 3).epsilon(1e-15));
    CHECK(phi(0.5) == doctest::Approx(-1.0 / 6).epsilon(1e-15));
    CHECK(phi(0.25) == doctest::Approx(-1.0 / 24).epsilon(1e-15));
    CHECK(phi(1.0) == doctest::Approx(1.0 / 3).epsilon(1e-15));
    CHECK(xi(0.5) == doctest::Approx(0.5).epsilon(1e-15));

    for (int i = -300; i <= 300; ++i) {
        double x = double(i) / 97.0;
        CHECK(phi(x + 1.0) == doctest::Approx(phi(x)).epsilon(1e-12));
        CHECK(phi(-x) == doctest::Approx(phi(x)).epsilon(1e-12));  // even
        CHECK(std::abs(phi(x)) <= 1.0 / 3 + 1e-15);
        CHECK(xi(x) <= 1.0 + 1e-15);
        CHECK(xi(x) >= 0.5 - 1e-15);
    }
    // Lipschitz constant 2 on a fine grid
    for (int i = 0; i < 1000; ++i) {
        double x = double(i) / 1000.0, y = double(i + 1) / 1000.0;
        CHECK(std::abs(phi(x) - phi(y)) <= 2.0 * (y - x) + 1e-12);
    }
}

TEST_CASE("asymptotic codebook demerit pinned") {
    CHECK(asymptotic_cdf(8, 0.25) == doctest::Approx(1.0 + 1.0 / 42).epsilon(1e-15));
    CHECK(asymptotic_adjusted_df(8, 0.25) == doctest::Approx(1.0 / 6).epsilon(1e-14));
    CHECK(asymptotic_cdf(8, 0.5) == doctest::Approx(1.0 + 2.0 / 21).epsilon(1e-15));
    CHECK(asymptotic_adjusted_df(8, 0.5) == doctest::Approx(2.0 / 3).epsilon(1e-14));
    CHECK(asymptotic_cdf(2, 0.25) == doctest::Approx(7.0 / 6).epsilon(1e-15));
    CHECK(asymptotic_cdf_min(8) == doctest::Approx(1.0 + 1.0 / 42).epsilon(1e-15));
    CHECK_THROWS_AS(asymptotic_cdf(1, 0.25), std::invalid_argument);

    // symmetry in rho: period 1/2 and reflection
    for (double rho : {0.1, 0.33, 0.49}) {
        CHECK(asymptotic_cdf(8, rho) == doctest::Approx(asymptotic_cdf(8, rho + 0.5)).epsilon(1e-13));
        CHECK(asymptotic_cdf(8, rho) == doctest::Approx(asymptotic_cdf(8, 1.0 - rho)).epsilon(1e-13));
        CHECK(asymptotic_cdf(8, rho) >= asymptotic_cdf_min(8) - 1e-13);
    }

    CHECK(rho_minimizes_limit(0.25));
    CHECK(rho_minimizes_limit(0.75));
    CHECK(rho_minimizes_limit(1.25));
    CHECK(rho_minimizes_limit(-0.25));
    CHECK_FALSE(rho_minimizes_limit(0.3));
    CHECK_FALSE(rho_minimizes_limit(0.5));
}

TEST_CASE("pair parameters on hadamard plans") {
    auto plan = walsh_plan(3);
    const std::size_t count = plan.patterns.size();
    for (int sigma : {0, 1}) {
        double vsum = 0;
        for (std::size_t a = 0; a < count; ++a) {
            for (std::size_t b = 0; b < count; ++b) {
                auto pp = pair_params(plan.patterns[a], plan.patterns[b], sigma);
                CHECK(pp.u == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-12));
                vsum += pp.v;
            }
        }
        // mean of the twist parameter over ordered pairs is 1/(n-1)
        CHECK(vsum / double(count * count) == doctest::Approx(1.0 / 7).epsilon(1e-12));
    }
    CHECK(sigma_for(17, 8) == 0);   // (17-1)/8 = 2
    CHECK(sigma_for(41, 8) == 1);   // (41-1)/8 = 5
    CHECK_THROWS_AS(sigma_for(17, 5), std::invalid_argument);

    // odd index: both sigma choices coincide
    auto d = CyclotomicPattern::from_signs({1, -1, 1});
    auto dp = CyclotomicPattern::from_signs({1, 1, -1});
    auto p0 = pair_params(d, dp, 0);
    auto p1 = pair_params(d, dp, 1);
    CHECK(p0.v == doctest::Approx(p1.v).epsilon(1e-15));
}

namespace {

// pairwise aperiodic demerit of two windows
double pair_cdf(const AperiodicSeq& f, const AperiodicSeq& g) {
    auto ff = acorr_direct(f, f);
    auto gg = acorr_direct(g, g);
    auto fg = acorr_direct(f, g);
    double num = 0;
    for (long long s = fg.lo; s <= fg.hi; ++s) num += std::norm(fg.value(s));
    return num / (ff.value(0).real() * gg.value(0).real());
}

double pair_pcdf(const PeriodicSeq& f, const PeriodicSeq& g) {
    auto ff = pcorr(f, f);
    auto gg = pcorr(g, g);
    auto fg = pcorr(f, g);
    double num = 0;
    for (long long s = 0; s < (long long)f.p; ++s) num += std::norm(fg.value(s));
    return num / (ff.value(0).real() * gg.value(0).real());
}

}  // namespace

TEST_CASE("pairwise demerit decomposition holds within its envelope") {
    auto plan = walsh_plan(3);
    for (u64 p : {97, 193}) {
        auto ctx = field_context(p);
        auto seqs = derive_plan(ctx, plan);
        u64 r = (p - 1) / 4;
        std::vector<std::pair<std::size_t, std::size_t>> picks = {{0, 0}, {0, 1}, {2, 5}, {3, 3}};
        for (auto [a, b] : picks) {
            double cdf = pair_cdf(rotate(seqs[a], r), rotate(seqs[b], r));
            double pc = pair_pcdf(seqs[a], seqs[b]);
            auto rep = cdf_decomposition(plan.patterns[a], plan.patterns[b], p, r, r, cdf, pc);
            CHECK(rep.satisfied);
            CHECK(std::abs(rep.residual) <= rep.bound);
            if (a == b) CHECK(rep.u == doctest::Approx(1.0).epsilon(1e-12));
            if (a != b) CHECK(rep.u == doctest::Approx(0.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("decomposition envelope shrinks with p") {
    auto plan = walsh_plan(3);
    auto rep_small = cdf_decomposition(plan.patterns[0], plan.patterns[1], 97, 24, 24, 1.0, 1.0);
    auto rep_large = cdf_decomposition(plan.patterns[0], plan.patterns[1], 1009, 252, 252, 1.0, 1.0);
    CHECK(rep_large.bound < rep_small.bound);
}

TEST_CASE("peak bounds pinned relations") {
    // the two-entry sign pattern gives back the bare quadratic-sequence bound
    auto d = CyclotomicPattern::from_signs({1, -1});
    for (u64 p : {5, 17, 97}) {
        auto a = psl_bound(d, p, true);
        auto b = legendre_psl_bound(p);
        CHECK(a.bound == doctest::Approx(b.bound).epsilon(1e-12));
        CHECK(peak_factor(p) ==
              doctest::Approx(2 * std::sqrt(double(p)) +
                              (4.0 / M_PI) * std::sqrt(double(p)) * std::log(4.0 * double(p) / M_PI))
                  .epsilon(1e-15));
    }

    auto plan = walsh_plan(3);
    auto book = instantiate(plan, 17, RotationSpec::of_fraction(0.25), true);
    auto m = metrics(book);
    auto rep = guc_bound(plan, 17, true, m.guc);
    CHECK(rep.has_measured);
    CHECK(rep.satisfied);
    CHECK(m.guc <= rep.bound);

    auto tight = guc_bound(plan, 17, true, rep.bound + 1.0);
    CHECK_FALSE(tight.satisfied);

    // unimodularization adds exactly two to the envelope
    auto plain = guc_bound(plan, 17, false);
    CHECK(rep.bound == doctest::Approx(plain.bound + 2.0).epsilon(1e-12));
}

TEST_CASE("measured quadratic-sequence peak sits under its envelope") {
    for (u64 p : {5, 13, 17, 41, 97}) {
        auto ctx = field_context(p);
        auto f = derive_periodic(ctx, CyclotomicPattern::from_signs({1, -1}));
        auto u = unimodularize(f);
        auto w = rotate(u, 0);
        auto spec = acorr_direct(w, w);
        double psl = 0;
        for (long long s = spec.lo; s <= spec.hi; ++s)
            if (s != 0) psl = std::max(psl, std::abs(spec.value(s)));
        auto rep = legendre_psl_bound(p, psl);
        CHECK(rep.satisfied);
    }
}

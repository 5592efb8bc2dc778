#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "seqcor/numtheory.hpp"
#include "seqcor/patterns.hpp"
#include "seqcor/sequences.hpp"

namespace seqcor {

// Raised when the FFT route lands further from integers than the allowed
// deviation threshold.
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two-sided spectrum over the inclusive shift range [lo, hi].
struct CorrelationSpectrum {
    long long lo = 0, hi = 0;
    bool integral = true;
    std::vector<long long> iv;
    std::vector<cplx> cv;
    double fft_deviation = 0;  // worst rounding distance on the FFT route

    std::size_t size() const { return std::size_t(hi - lo + 1); }
    cplx value(long long s) const {
        if (s < lo || s > hi) return cplx(0, 0);
        return integral ? cplx(double(iv[std::size_t(s - lo)]), 0.0) : cv[std::size_t(s - lo)];
    }
};

// Exact quadratic-time crosscorrelation; the reference route.
CorrelationSpectrum acorr_direct(const AperiodicSeq& f, const AperiodicSeq& g);

// FFT route.  Integer inputs are rounded back to integers; if any output
// strays from an integer by more than deviation_threshold a PrecisionError
// is thrown.
CorrelationSpectrum acorr_fft(const AperiodicSeq& f, const AperiodicSeq& g,
                              double deviation_threshold = 1e-5);

// Periodic correlation, shifts 0..p-1.  Lengths must match.
CorrelationSpectrum pcorr(const PeriodicSeq& f, const PeriodicSeq& g);

// Periodic correlation of derived sequences at shift alpha^u, evaluated
// through the cyclotomic number table instead of the sequences.
cplx pcorr_via_cyclotomy(const CyclotomicNumberTable& tbl, const CyclotomicPattern& d,
                         const CyclotomicPattern& dprime, u64 u);

struct MetricsOptions {
    enum class Backend { Auto, Direct, Fft } backend = Backend::Auto;
    std::size_t direct_cutoff = 1024;  // Auto picks direct when max length <= this
    double deviation_threshold = 1e-5;
    int threads = 0;  // 0: SEQCOR_THREADS env var, else hardware concurrency
};

struct MetricsSummary {
    std::size_t count = 0;
    bool integral = true;

    std::vector<double> psl;  // per sequence, s != 0
    std::vector<double> adf;
    std::vector<double> pcc;  // per unordered distinct pair, (0,1),(0,2),...
    std::vector<double> cdf;

    double guc = 0;
    double sdc = 0;  // smallest in-phase autocorrelation
    double guc_over_sqrt_sdc = 0;

    double psl_avg = 0, psl_min = 0, psl_max = 0;
    double adf_avg = 0, adf_min = 0, adf_max = 0;
    double pcc_avg = 0, pcc_min = 0, pcc_max = 0;
    double cdf_avg = 0, cdf_min = 0, cdf_max = 0;

    double cdf_overall = 0;   // mean over ordered pairs including f = g
    double adjusted_df = 0;   // count * (cdf_overall - 1)
    double max_fft_deviation = 0;

    std::size_t pair_index(std::size_t i, std::size_t j) const;
};

// Peak and mean-square quality metrics of a codebook.  Lengths may differ
// between sequences; every definition is length-agnostic.
MetricsSummary metrics(const Codebook& book, const MetricsOptions& opt = {});

struct PcdfResult {
    double value = 0;
    bool exact = false;
    long long num = 0, den = 0;  // reduced fraction when exact
    bool used_sum_identity = false;
};

// Mean periodic crosscorrelation demerit factor over ordered pairs.  When
// every sequence has the same energy the diagonal-sum identity collapses
// the double sum; both routes give the same exact fraction.
PcdfResult pcdf(const std::vector<PeriodicSeq>& seqs, bool allow_fast_path = true);

}  // namespace seqcor

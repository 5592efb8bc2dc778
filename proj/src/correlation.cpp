#include "seqcor/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "seqcor/fftkit.hpp"

namespace seqcor {

namespace {

using i128 = __int128;

long long checked_ll(i128 v, const char* what) {
    if (v > i128(std::numeric_limits<long long>::max()) ||
        v < i128(std::numeric_limits<long long>::min()))
        throw std::overflow_error(std::string(what) + ": value does not fit 64 bits");
    return (long long)v;
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SEQCOR_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : int(hw);
}

// run fn(i) for i in [0, jobs) across t threads; writers hit disjoint slots
template <typename Fn>
void parallel_for(std::size_t jobs, int threads, Fn&& fn) {
    int t = std::max(1, std::min<int>(threads, int(jobs == 0 ? 1 : jobs)));
    if (t == 1) {
        for (std::size_t i = 0; i < jobs; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (int w = 0; w < t; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = std::size_t(w); i < jobs; i += std::size_t(t)) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

CorrelationSpectrum acorr_direct(const AperiodicSeq& f, const AperiodicSeq& g) {
    const long long lf = (long long)f.size(), lg = (long long)g.size();
    if (lf == 0 || lg == 0) throw std::invalid_argument("acorr_direct: empty sequence");
    CorrelationSpectrum out;
    out.lo = -(lg - 1);
    out.hi = lf - 1;
    out.integral = f.integral && g.integral;
    if (out.integral) {
        out.iv.assign(std::size_t(lf + lg - 1), 0);
        for (long long s = out.lo; s <= out.hi; ++s) {
            long long j0 = std::max(0ll, -s), j1 = std::min(lg - 1, lf - 1 - s);
            long long acc = 0;
            for (long long j = j0; j <= j1; ++j)
                acc += (long long)f.iv[std::size_t(j + s)] * g.iv[std::size_t(j)];
            out.iv[std::size_t(s - out.lo)] = acc;
        }
    } else {
        out.cv.assign(std::size_t(lf + lg - 1), cplx(0, 0));
        for (long long s = out.lo; s <= out.hi; ++s) {
            long long j0 = std::max(0ll, -s), j1 = std::min(lg - 1, lf - 1 - s);
            cplx acc(0, 0);
            for (long long j = j0; j <= j1; ++j)
                acc += f.at(std::size_t(j + s)) * std::conj(g.at(std::size_t(j)));
            out.cv[std::size_t(s - out.lo)] = acc;
        }
    }
    return out;
}

CorrelationSpectrum acorr_fft(const AperiodicSeq& f, const AperiodicSeq& g,
                              double deviation_threshold) {
    const std::size_t lf = f.size(), lg = g.size();
    if (lf == 0 || lg == 0) throw std::invalid_argument("acorr_fft: empty sequence");
    const std::size_t N = next_pow2(lf + lg - 1);

    std::vector<cplx> A(N, cplx(0, 0)), B(N, cplx(0, 0));
    for (std::size_t j = 0; j < lf; ++j) A[j] = f.at(j);
    for (std::size_t j = 0; j < lg; ++j) B[j] = g.at(j);
    fft_pow2(A, false);
    fft_pow2(B, false);
    for (std::size_t j = 0; j < N; ++j) A[j] *= std::conj(B[j]);
    fft_pow2(A, true);

    CorrelationSpectrum out;
    out.lo = -(long long)(lg - 1);
    out.hi = (long long)(lf - 1);
    out.integral = f.integral && g.integral;
    const std::size_t len = lf + lg - 1;
    if (out.integral) {
        out.iv.resize(len);
        double worst = 0;
        for (long long s = out.lo; s <= out.hi; ++s) {
            cplx v = A[std::size_t((s + (long long)N) % (long long)N)];
            double r = std::round(v.real());
            worst = std::max({worst, std::abs(v.real() - r), std::abs(v.imag())});
            out.iv[std::size_t(s - out.lo)] = (long long)r;
        }
        out.fft_deviation = worst;
        if (worst > deviation_threshold)
            throw PrecisionError("acorr_fft: deviation " + std::to_string(worst) +
                                 " exceeds threshold " + std::to_string(deviation_threshold));
    } else {
        out.cv.resize(len);
        for (long long s = out.lo; s <= out.hi; ++s)
            out.cv[std::size_t(s - out.lo)] = A[std::size_t((s + (long long)N) % (long long)N)];
    }
    return out;
}

CorrelationSpectrum pcorr(const PeriodicSeq& f, const PeriodicSeq& g) {
    if (f.p == 0 || f.p != g.p) throw std::invalid_argument("pcorr: lengths must match and be positive");
    const std::size_t p = std::size_t(f.p);
    CorrelationSpectrum out;
    out.lo = 0;
    out.hi = (long long)p - 1;
    out.integral = f.integral && g.integral;
    if (out.integral) {
        out.iv.assign(p, 0);
        for (std::size_t s = 0; s < p; ++s) {
            long long acc = 0;
            for (std::size_t j = 0; j < p; ++j)
                acc += (long long)f.iv[(j + s) % p] * g.iv[j];
            out.iv[s] = acc;
        }
    } else {
        out.cv.assign(p, cplx(0, 0));
        for (std::size_t s = 0; s < p; ++s) {
            cplx acc(0, 0);
            for (std::size_t j = 0; j < p; ++j) acc += f.at((j + s) % p) * std::conj(g.at(j));
            out.cv[s] = acc;
        }
    }
    return out;
}

cplx pcorr_via_cyclotomy(const CyclotomicNumberTable& tbl, const CyclotomicPattern& d,
                         const CyclotomicPattern& dprime, u64 u) {
    const u64 n = tbl.n;
    if (d.n != n || dprime.n != n)
        throw std::invalid_argument("pcorr_via_cyclotomy: pattern length must equal table index");
    cplx acc(0, 0);
    for (u64 j = 0; j < n; ++j) {
        for (u64 k = 0; k < n; ++k) {
            double c = double(tbl.at(k, j));
            acc += c * d.at(std::size_t(j + u)) * std::conj(dprime.at(std::size_t(k + u)));
        }
    }
    return acc;
}

std::size_t MetricsSummary::pair_index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    // index of (i,j), i<j, in the (0,1),(0,2),...,(0,N-1),(1,2),... order
    return i * count - i * (i + 1) / 2 + (j - i - 1);
}

namespace {

struct PairAccum {
    // exact integer forms (integral books)
    long long peak_i = 0;      // max |AC| over the relevant shifts
    i128 sumsq_i = 0;          // sum over those shifts of AC^2
    long long energy_i = 0;    // AC(0), diagonal only
    // floating forms (complex books)
    double peak_d = 0;
    double sumsq_d = 0;
    double energy_d = 0;
    double deviation = 0;
};

// shared per-sequence forward transforms for the FFT route
struct FwdCache {
    std::size_t N = 0;
    std::vector<std::vector<cplx>> fwd;
};

void accumulate_pair(const AperiodicSeq& f, const AperiodicSeq& g, bool diagonal,
                     bool integral, const MetricsOptions& opt, const FwdCache* cache,
                     std::size_t fi, std::size_t gi, PairAccum& out) {
    bool use_fft = opt.backend == MetricsOptions::Backend::Fft ||
                   (opt.backend == MetricsOptions::Backend::Auto &&
                    std::max(f.size(), g.size()) > opt.direct_cutoff);

    if (use_fft && cache != nullptr) {
        // pointwise multiply cached transforms, inverse, fold the sums
        const std::size_t N = cache->N;
        std::vector<cplx> work(N);
        const auto& A = cache->fwd[fi];
        const auto& B = cache->fwd[gi];
        for (std::size_t j = 0; j < N; ++j) work[j] = A[j] * std::conj(B[j]);
        fft_pow2(work, true);
        const long long lo = -(long long)(g.size() - 1), hi = (long long)(f.size() - 1);
        if (integral) {
            long long peak = 0, energy = 0;
            i128 sumsq = 0;
            double worst = 0;
            for (long long s = lo; s <= hi; ++s) {
                cplx v = work[std::size_t((s + (long long)N) % (long long)N)];
                double r = std::round(v.real());
                worst = std::max({worst, std::abs(v.real() - r), std::abs(v.imag())});
                long long c = (long long)r;
                if (diagonal && s == 0) {
                    energy = c;
                    continue;
                }
                peak = std::max(peak, std::abs(c));
                sumsq += i128(c) * c;
            }
            if (worst > opt.deviation_threshold)
                throw PrecisionError("metrics: fft deviation " + std::to_string(worst) +
                                     " exceeds threshold");
            out.peak_i = peak;
            out.sumsq_i = sumsq;
            out.energy_i = energy;
            out.deviation = worst;
        } else {
            double peak = 0, sumsq = 0, energy = 0;
            for (long long s = lo; s <= hi; ++s) {
                cplx v = work[std::size_t((s + (long long)N) % (long long)N)];
                if (diagonal && s == 0) {
                    energy = v.real();
                    continue;
                }
                double a2 = std::norm(v);
                peak = std::max(peak, a2);
                sumsq += a2;
            }
            out.peak_d = std::sqrt(peak);
            out.sumsq_d = sumsq;
            out.energy_d = energy;
        }
        return;
    }

    CorrelationSpectrum spec = use_fft ? acorr_fft(f, g, opt.deviation_threshold)
                                       : acorr_direct(f, g);
    out.deviation = spec.fft_deviation;
    if (integral) {
        long long peak = 0, energy = 0;
        i128 sumsq = 0;
        for (long long s = spec.lo; s <= spec.hi; ++s) {
            long long c = spec.iv[std::size_t(s - spec.lo)];
            if (diagonal && s == 0) {
                energy = c;
                continue;
            }
            peak = std::max(peak, std::abs(c));
            sumsq += i128(c) * c;
        }
        out.peak_i = peak;
        out.sumsq_i = sumsq;
        out.energy_i = energy;
    } else {
        double peak = 0, sumsq = 0, energy = 0;
        for (long long s = spec.lo; s <= spec.hi; ++s) {
            cplx v = spec.cv[std::size_t(s - spec.lo)];
            if (diagonal && s == 0) {
                energy = v.real();
                continue;
            }
            double a2 = std::norm(v);
            peak = std::max(peak, a2);
            sumsq += a2;
        }
        out.peak_d = std::sqrt(peak);
        out.sumsq_d = sumsq;
        out.energy_d = energy;
    }
}

}  // namespace

MetricsSummary metrics(const Codebook& book, const MetricsOptions& opt) {
    const std::size_t N = book.seqs.size();
    if (N == 0) throw std::invalid_argument("metrics: empty codebook");

    bool integral = true;
    std::size_t maxlen = 0;
    for (const auto& s : book.seqs) {
        integral = integral && s.integral;
        maxlen = std::max(maxlen, s.size());
        if (s.size() == 0) throw std::invalid_argument("metrics: empty sequence in codebook");
    }

    bool use_fft = opt.backend == MetricsOptions::Backend::Fft ||
                   (opt.backend == MetricsOptions::Backend::Auto && maxlen > opt.direct_cutoff);
    int threads = resolve_threads(opt.threads);

    // one shared transform length covers every pair, so forwards are reusable
    FwdCache cache;
    const FwdCache* cache_ptr = nullptr;
    if (use_fft) {
        cache.N = next_pow2(2 * maxlen - 1);
        const std::size_t bytes = cache.N * sizeof(cplx) * N;
        if (bytes <= (std::size_t(3) << 30)) {
            cache.fwd.assign(N, {});
            parallel_for(N, threads, [&](std::size_t i) {
                std::vector<cplx> buf(cache.N, cplx(0, 0));
                const auto& s = book.seqs[i];
                for (std::size_t j = 0; j < s.size(); ++j) buf[j] = s.at(j);
                fft_pow2(buf, false);
                cache.fwd[i] = std::move(buf);
            });
            cache_ptr = &cache;
        }
    }

    const std::size_t pairs = N * (N + 1) / 2;  // (i,j) with i <= j
    std::vector<PairAccum> acc(pairs);
    std::vector<std::pair<std::size_t, std::size_t>> pair_of(pairs);
    {
        std::size_t t = 0;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = i; j < N; ++j) pair_of[t++] = {i, j};
    }

    std::exception_ptr first_error = nullptr;
    std::mutex err_mu;
    parallel_for(pairs, threads, [&](std::size_t t) {
        try {
            auto [i, j] = pair_of[t];
            accumulate_pair(book.seqs[i], book.seqs[j], i == j, integral, opt, cache_ptr, i, j,
                            acc[t]);
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mu);
            if (!first_error) first_error = std::current_exception();
        }
    });
    if (first_error) std::rethrow_exception(first_error);

    MetricsSummary out;
    out.count = N;
    out.integral = integral;
    out.psl.resize(N);
    out.adf.resize(N);
    out.pcc.resize(N * (N - 1) / 2);
    out.cdf.resize(N * (N - 1) / 2);

    std::vector<double> energy(N);
    for (std::size_t t = 0; t < pairs; ++t) {
        auto [i, j] = pair_of[t];
        if (i != j) continue;
        const auto& a = acc[t];
        double e = integral ? double(a.energy_i) : a.energy_d;
        if (e <= 0) throw std::invalid_argument("metrics: sequence " + std::to_string(i) +
                                                " has nonpositive energy");
        energy[i] = e;
        out.psl[i] = integral ? double(a.peak_i) : a.peak_d;
        out.adf[i] = integral ? double((long long)a.sumsq_i) / (e * e) : a.sumsq_d / (e * e);
        out.max_fft_deviation = std::max(out.max_fft_deviation, a.deviation);
    }

    double guc = 0;
    for (std::size_t t = 0; t < pairs; ++t) {
        auto [i, j] = pair_of[t];
        if (i == j) continue;
        const auto& a = acc[t];
        double peak = integral ? double(a.peak_i) : a.peak_d;
        double sumsq = integral ? double((long long)a.sumsq_i) : a.sumsq_d;
        std::size_t pi = out.pair_index(i, j);
        out.pcc[pi] = peak;
        out.cdf[pi] = sumsq / (energy[i] * energy[j]);
        out.max_fft_deviation = std::max(out.max_fft_deviation, a.deviation);
    }

    for (double v : out.psl) guc = std::max(guc, v);
    for (double v : out.pcc) guc = std::max(guc, v);
    out.guc = guc;
    out.sdc = *std::min_element(energy.begin(), energy.end());
    out.guc_over_sqrt_sdc = guc / std::sqrt(out.sdc);

    auto stats = [](const std::vector<double>& v, double& avg, double& mn, double& mx) {
        if (v.empty()) {
            avg = mn = mx = 0;
            return;
        }
        double s = 0;
        mn = v[0];
        mx = v[0];
        for (double x : v) {
            s += x;
            mn = std::min(mn, x);
            mx = std::max(mx, x);
        }
        avg = s / double(v.size());
    };
    stats(out.psl, out.psl_avg, out.psl_min, out.psl_max);
    stats(out.adf, out.adf_avg, out.adf_min, out.adf_max);
    stats(out.pcc, out.pcc_avg, out.pcc_min, out.pcc_max);
    stats(out.cdf, out.cdf_avg, out.cdf_min, out.cdf_max);

    double total = 0;
    for (std::size_t i = 0; i < N; ++i) total += 1.0 + out.adf[i];
    for (double v : out.cdf) total += 2.0 * v;
    out.cdf_overall = total / double(N * N);
    out.adjusted_df = double(N) * (out.cdf_overall - 1.0);
    return out;
}

PcdfResult pcdf(const std::vector<PeriodicSeq>& seqs, bool allow_fast_path) {
    const std::size_t N = seqs.size();
    if (N == 0) throw std::invalid_argument("pcdf: empty codebook");
    const u64 p = seqs[0].p;
    bool integral = true;
    for (const auto& s : seqs) {
        if (s.p != p) throw std::invalid_argument("pcdf: mixed lengths");
        integral = integral && s.integral;
    }

    PcdfResult res;
    if (integral) {
        std::vector<long long> energy(N);
        std::vector<CorrelationSpectrum> autos(N);
        for (std::size_t i = 0; i < N; ++i) {
            autos[i] = pcorr(seqs[i], seqs[i]);
            energy[i] = autos[i].iv[0];
            if (energy[i] <= 0) throw std::invalid_argument("pcdf: nonpositive energy");
        }
        bool equal = std::all_of(energy.begin(), energy.end(),
                                 [&](long long e) { return e == energy[0]; });
        if (equal && allow_fast_path) {
            // diagonal-sum identity: only sum_i PC_ii(s) is needed
            const long long C = energy[0];
            i128 cross = 0;
            for (u64 s = 1; s < p; ++s) {
                i128 col = 0;
                for (std::size_t i = 0; i < N; ++i) col += autos[i].iv[std::size_t(s)];
                cross += col * col;
            }
            i128 den = i128(N) * N * C * C;
            i128 num = den + cross;
            long long nn = checked_ll(num, "pcdf numerator");
            long long dd = checked_ll(den, "pcdf denominator");
            long long gg = std::gcd(nn, dd);
            res.num = nn / gg;
            res.den = dd / gg;
            res.value = double(res.num) / double(res.den);
            res.exact = true;
            res.used_sum_identity = true;
            return res;
        }
        // general route: exact fraction accumulated pair by pair
        i128 num = 0, den = 1;
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j) {
                auto spec = (i == j) ? autos[i] : pcorr(seqs[i], seqs[j]);
                i128 ss = 0;
                for (u64 s = 0; s < p; ++s) {
                    long long c = spec.iv[std::size_t(s)];
                    ss += i128(c) * c;
                }
                i128 d = i128(energy[i]) * energy[j];
                // num/den += ss/d
                i128 nn = num * d + ss * den;
                i128 dd = den * d;
                i128 g = gcd128(nn, dd);
                if (g > 1) {
                    nn /= g;
                    dd /= g;
                }
                num = nn;
                den = dd;
            }
        }
        den *= i128(N) * N;
        long long nn = checked_ll(num, "pcdf numerator");
        long long dd = checked_ll(den, "pcdf denominator");
        long long g = std::gcd(nn, dd);
        res.num = nn / g;
        res.den = dd / g;
        res.value = double(res.num) / double(res.den);
        res.exact = true;
        return res;
    }

    // complex route, double precision
    std::vector<double> energy(N);
    std::vector<CorrelationSpectrum> autos(N);
    for (std::size_t i = 0; i < N; ++i) {
        autos[i] = pcorr(seqs[i], seqs[i]);
        energy[i] = autos[i].cv[0].real();
        if (energy[i] <= 0) throw std::invalid_argument("pcdf: nonpositive energy");
    }
    double total = 0;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            auto spec = (i == j) ? autos[i] : pcorr(seqs[i], seqs[j]);
            double ss = 0;
            for (u64 s = 0; s < p; ++s) ss += std::norm(spec.cv[std::size_t(s)]);
            total += ss / (energy[i] * energy[j]);
        }
    }
    res.value = total / double(N * N);
    return res;
}

}  // namespace seqcor

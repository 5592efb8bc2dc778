#pragma once

#include <string>

#include "seqcor/numtheory.hpp"
#include "seqcor/patterns.hpp"
#include "seqcor/plans.hpp"

namespace seqcor {

// Piecewise-quadratic period-1 limit kernel 2(x-1/2)^2 - 1/6 on [0,1).
double phi(double x);
// Shifted copy phi + 2/3, the form that appears inside the limit sums.
double xi(double x);

// Codebook mean crosscorrelation demerit limit at rotation fraction rho
// for a full orthogonal balanced unimodular plan of index n.
double asymptotic_cdf(std::size_t n, double rho);
// (n-1) * (asymptotic_cdf - 1), the adjusted form the sweep targets.
double asymptotic_adjusted_df(std::size_t n, double rho);
double asymptotic_cdf_min(std::size_t n);
// true when rho is an odd multiple of 1/4, the exact minimizer set
bool rho_minimizes_limit(double rho, double tol = 1e-12);

struct PairParams {
    double u = 0;  // squared normalized inner product
    double v = 0;  // squared normalized half-index twist product
};

// sigma selects the half-index offset: shift = sigma * n/2 for even n,
// and 0 for odd n (both choices coincide there).
PairParams pair_params(const CyclotomicPattern& d, const CyclotomicPattern& dprime, int sigma);
int sigma_for(u64 p, std::size_t n);  // parity of (p-1)/n

struct DecompositionReport {
    double u = 0, v = 0;
    double lhs = 0;        // (p-1)/p * measured cdf
    double predicted = 0;  // 1/3 + (2/3) pcdf + u*phi((r-r')/p) + v*phi((r+r')/p)
    double residual = 0;   // lhs - predicted
    double bound = 0;      // proven residual envelope
    bool satisfied = false;
};

// measured_cdf is the aperiodic pair demerit of the plain (not
// unimodularized) instances at rotations r, r'; measured_pcdf the
// periodic pair demerit of the underlying periodic sequences.
DecompositionReport cdf_decomposition(const CyclotomicPattern& d, const CyclotomicPattern& dprime,
                                      u64 p, u64 r, u64 rprime, double measured_cdf,
                                      double measured_pcdf);

struct BoundReport {
    std::string name;
    double bound = 0;
    double measured = 0;
    bool has_measured = false;
    bool satisfied = true;  // measured <= bound whenever measured is present
};

// 2 sqrt(p) + (4/pi) sqrt(p) log(4p/pi); natural log
double peak_factor(u64 p);

BoundReport psl_bound(const CyclotomicPattern& d, u64 p, bool unimodularized);
BoundReport psl_bound(const CyclotomicPattern& d, u64 p, bool unimodularized, double measured);
BoundReport guc_bound(const CyclotomicPlan& plan, u64 p, bool unimodularized);
BoundReport guc_bound(const CyclotomicPlan& plan, u64 p, bool unimodularized, double measured);
BoundReport legendre_psl_bound(u64 p);
BoundReport legendre_psl_bound(u64 p, double measured);

}  // namespace seqcor

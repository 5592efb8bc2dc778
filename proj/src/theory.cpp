#include "seqcor/theory.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace seqcor {

double phi(double x) {
    double y = x - std::floor(x);
    return 2.0 * (y - 0.5) * (y - 0.5) - 1.0 / 6.0;
}

double xi(double x) { return phi(x) + 2.0 / 3.0; }

double asymptotic_cdf(std::size_t n, double rho) {
    if (n < 2) throw std::invalid_argument("asymptotic_cdf: index must be at least 2");
    return 1.0 + 1.0 / (3.0 * double(n - 1)) + phi(2.0 * rho) / double(n - 1);
}

double asymptotic_adjusted_df(std::size_t n, double rho) {
    return double(n - 1) * (asymptotic_cdf(n, rho) - 1.0);
}

double asymptotic_cdf_min(std::size_t n) {
    if (n < 2) throw std::invalid_argument("asymptotic_cdf_min: index must be at least 2");
    return 1.0 + 1.0 / (6.0 * double(n - 1));
}

bool rho_minimizes_limit(double rho, double tol) {
    double q = 4.0 * (rho - std::floor(rho));
    double nearest_odd = 2.0 * std::round((q - 1.0) / 2.0) + 1.0;
    return std::abs(q - nearest_odd) <= 4.0 * tol;
}

int sigma_for(u64 p, std::size_t n) {
    if (n == 0 || (p - 1) % n != 0) throw std::invalid_argument("sigma_for: n must divide p-1");
    return int(((p - 1) / n) % 2);
}

PairParams pair_params(const CyclotomicPattern& d, const CyclotomicPattern& dprime, int sigma) {
    if (d.n != dprime.n || d.n == 0) throw std::invalid_argument("pair_params: length mismatch");
    if (sigma != 0 && sigma != 1) throw std::invalid_argument("pair_params: sigma must be 0 or 1");
    const std::size_t n = d.n;
    const std::size_t shift = (n % 2 == 0) ? sigma * (n / 2) : 0;

    double nd = 0, ndp = 0;
    cplx inner(0, 0), twist(0, 0);
    for (std::size_t j = 0; j < n; ++j) {
        nd += std::norm(d.at(j));
        ndp += std::norm(dprime.at(j));
        inner += d.at(j) * std::conj(dprime.at(j));
        twist += d.at(j) * dprime.at(j + shift);  // no conjugate here
    }
    PairParams out;
    out.u = std::norm(inner) / (nd * ndp);
    out.v = std::norm(twist) / (nd * ndp);
    return out;
}

DecompositionReport cdf_decomposition(const CyclotomicPattern& d, const CyclotomicPattern& dprime,
                                      u64 p, u64 r, u64 rprime, double measured_cdf,
                                      double measured_pcdf) {
    DecompositionReport rep;
    auto params = pair_params(d, dprime, sigma_for(p, d.n));
    rep.u = params.u;
    rep.v = params.v;

    const double pd = double(p);
    rep.lhs = (pd - 1.0) / pd * measured_cdf;
    double rdiff = (double(r) - double(rprime)) / pd;
    double rsum = (double(r) + double(rprime)) / pd;
    rep.predicted = 1.0 / 3.0 + (2.0 / 3.0) * measured_pcdf + rep.u * phi(rdiff) + rep.v * phi(rsum);
    rep.residual = rep.lhs - rep.predicted;

    auto ehat = pattern_dft(d);
    auto ehatp = pattern_dft(dprime);
    double ratio = (l1_norm(ehat) * l1_norm(ehatp)) / (l2_norm(ehat) * l2_norm(ehatp));
    double lp = std::log(pd);
    rep.bound = 192.0 * ratio * ratio * std::sqrt(pd) * (1.0 + lp) * (1.0 + lp) * (1.0 + lp) /
                    (pd - 1.0) +
                (22.0 * pd - 4.0) / (3.0 * pd * (pd - 1.0));
    rep.satisfied = std::abs(rep.residual) <= rep.bound;
    return rep;
}

double peak_factor(u64 p) {
    const double pd = double(p);
    return 2.0 * std::sqrt(pd) +
           (4.0 / std::numbers::pi) * std::sqrt(pd) * std::log(4.0 * pd / std::numbers::pi);
}

namespace {

BoundReport make_report(std::string name, double bound) {
    BoundReport rep;
    rep.name = std::move(name);
    rep.bound = bound;
    return rep;
}

BoundReport with_measured(BoundReport rep, double measured) {
    rep.measured = measured;
    rep.has_measured = true;
    rep.satisfied = measured <= rep.bound;
    return rep;
}

}  // namespace

BoundReport psl_bound(const CyclotomicPattern& d, u64 p, bool unimodularized) {
    auto ehat = pattern_dft(d);
    double l1 = l1_norm(ehat);
    double b = l1 * l1 * peak_factor(p) + (unimodularized ? 2.0 : 0.0);
    return make_report("psl", b);
}

BoundReport psl_bound(const CyclotomicPattern& d, u64 p, bool unimodularized, double measured) {
    return with_measured(psl_bound(d, p, unimodularized), measured);
}

BoundReport guc_bound(const CyclotomicPlan& plan, u64 p, bool unimodularized) {
    if (plan.patterns.empty()) throw std::invalid_argument("guc_bound: empty plan");
    double worst = 0;
    for (const auto& d : plan.patterns) {
        auto ehat = pattern_dft(d);
        double l1 = l1_norm(ehat);
        worst = std::max(worst, l1 * l1);
    }
    return make_report("guc", worst * peak_factor(p) + (unimodularized ? 2.0 : 0.0));
}

BoundReport guc_bound(const CyclotomicPlan& plan, u64 p, bool unimodularized, double measured) {
    return with_measured(guc_bound(plan, p, unimodularized), measured);
}

BoundReport legendre_psl_bound(u64 p) {
    return make_report("legendre_psl", 2.0 + peak_factor(p));
}

BoundReport legendre_psl_bound(u64 p, double measured) {
    return with_measured(legendre_psl_bound(p), measured);
}

}  // namespace seqcor

#include "seqcor/plans.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace seqcor {

std::vector<int> walsh_row(int k, std::size_t row) {
    if (k < 0 || k > 16) throw std::invalid_argument("walsh_row: k out of range (0..16)");
    const std::size_t n = std::size_t(1) << k;
    if (row >= n) throw std::invalid_argument("walsh_row: row out of range");
    std::vector<int> out(n);
    for (std::size_t j = 0; j < n; ++j)
        out[j] = (std::popcount(row & j) & 1) ? -1 : 1;
    return out;
}

std::vector<std::vector<int>> walsh_hadamard_matrix(int k) {
    if (k < 0 || k > 16) throw std::invalid_argument("walsh_hadamard_matrix: k out of range (0..16)");
    const std::size_t n = std::size_t(1) << k;
    std::vector<std::vector<int>> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) rows.push_back(walsh_row(k, i));
    return rows;
}

CyclotomicPlan walsh_plan(int k) {
    if (k < 1 || k > 16) throw std::invalid_argument("walsh_plan: k out of range (1..16)");
    const std::size_t n = std::size_t(1) << k;
    CyclotomicPlan plan;
    plan.n = n;
    plan.root_order = 2;
    plan.origin = "walsh:" + std::to_string(k);
    plan.patterns.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i)
        plan.patterns.push_back(CyclotomicPattern::from_signs(walsh_row(k, i)));
    return plan;
}

CyclotomicPlan plan_subset(const CyclotomicPlan& plan, const std::vector<std::size_t>& rows) {
    CyclotomicPlan out;
    out.n = plan.n;
    out.root_order = plan.root_order;
    out.origin = plan.origin.empty() ? std::string("subset") : plan.origin + ":subset";
    out.patterns.reserve(rows.size());
    for (std::size_t r : rows) {
        if (r == 0)
            throw std::invalid_argument("plan_subset: row 0 is the all-ones row and has no pattern");
        if (r > plan.patterns.size())
            throw std::invalid_argument("plan_subset: row out of range");
        out.patterns.push_back(plan.patterns[r - 1]);
    }
    return out;
}

PlanReport validate_plan(const CyclotomicPlan& plan, double tol) {
    PlanReport rep;
    rep.n = plan.n;
    rep.count = plan.patterns.size();

    bool balanced = true, orthogonal = true, unimodular = true;
    for (const auto& d : plan.patterns) {
        if (d.n != plan.n) throw std::invalid_argument("validate_plan: pattern length mismatch");
        if (d.binary()) {
            long long s = 0;
            for (std::size_t j = 0; j < d.n; ++j) s += d.sign_at(j);
            if (s != 0) balanced = false;
        } else {
            cplx s(0, 0);
            for (const auto& v : d.values) s += v;
            if (std::abs(s) > tol) balanced = false;
            for (const auto& v : d.values)
                if (std::abs(std::abs(v) - 1.0) > tol) unimodular = false;
        }
    }
    for (std::size_t a = 0; a + 1 < plan.patterns.size(); ++a) {
        for (std::size_t b = a + 1; b < plan.patterns.size(); ++b) {
            const auto& x = plan.patterns[a];
            const auto& y = plan.patterns[b];
            if (x.binary() && y.binary()) {
                long long s = 0;
                for (std::size_t j = 0; j < plan.n; ++j) s += x.sign_at(j) * y.sign_at(j);
                if (s != 0) orthogonal = false;
            } else {
                cplx s(0, 0);
                for (std::size_t j = 0; j < plan.n; ++j) s += x.at(j) * std::conj(y.at(j));
                if (std::abs(s) > tol) orthogonal = false;
            }
        }
    }

    rep.balanced = balanced;
    rep.orthogonal = orthogonal;
    rep.unimodular = unimodular;
    rep.hadamard = balanced && orthogonal && unimodular && plan.n >= 2 && rep.count == plan.n - 1;
    return rep;
}

cplx hadamard_column_sums(const CyclotomicPlan& plan, std::size_t j, std::size_t k) {
    if (plan.n == 0) throw std::invalid_argument("hadamard_column_sums: empty plan");
    if (j >= plan.n || k >= plan.n) throw std::invalid_argument("hadamard_column_sums: column out of range");
    cplx s(0, 0);
    for (const auto& d : plan.patterns) s += d.at(j) * std::conj(d.at(k));
    return s;
}

}  // namespace seqcor

#include "seqcor/patterns.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace seqcor {

CyclotomicPattern CyclotomicPattern::from_signs(const std::vector<int>& signs) {
    CyclotomicPattern d;
    d.n = signs.size();
    d.root_order = 2;
    d.exponents.reserve(d.n);
    d.values.reserve(d.n);
    for (int s : signs) {
        if (s != 1 && s != -1) throw std::invalid_argument("pattern: sign entries must be +1 or -1");
        d.exponents.push_back(s == 1 ? 0 : 1);
        d.values.push_back(cplx(double(s), 0.0));
    }
    return d;
}

CyclotomicPattern CyclotomicPattern::from_exponents(int m, const std::vector<int>& exps) {
    if (m < 1) throw std::invalid_argument("pattern: root order must be positive");
    CyclotomicPattern d;
    d.n = exps.size();
    d.root_order = m;
    d.exponents.reserve(d.n);
    d.values.reserve(d.n);
    for (int e : exps) {
        int r = ((e % m) + m) % m;
        d.exponents.push_back(r);
        double ang = 2.0 * std::numbers::pi * double(r) / double(m);
        d.values.push_back(m == 2 ? cplx(r == 0 ? 1.0 : -1.0, 0.0) : cplx(std::cos(ang), std::sin(ang)));
    }
    return d;
}

CyclotomicPattern CyclotomicPattern::from_values(const std::vector<cplx>& vals) {
    CyclotomicPattern d;
    d.n = vals.size();
    d.root_order = 0;
    d.values = vals;
    return d;
}

CharacterPattern pattern_dft(const CyclotomicPattern& d) {
    if (d.n == 0) throw std::invalid_argument("pattern_dft: empty pattern");
    CharacterPattern e;
    e.n = d.n;
    e.values = dft_any(d.values, false);
    for (auto& v : e.values) v /= double(d.n);
    return e;
}

CyclotomicPattern pattern_idft(const CharacterPattern& e, double snap_tol) {
    if (e.n == 0) throw std::invalid_argument("pattern_idft: empty pattern");
    auto vals = dft_any(e.values, true);
    for (auto& v : vals) v *= double(e.n);

    bool all_signs = true;
    std::vector<int> signs(e.n);
    for (std::size_t j = 0; j < e.n; ++j) {
        if (std::abs(vals[j] - cplx(1, 0)) <= snap_tol)
            signs[j] = 1;
        else if (std::abs(vals[j] - cplx(-1, 0)) <= snap_tol)
            signs[j] = -1;
        else {
            all_signs = false;
            break;
        }
    }
    if (all_signs) return CyclotomicPattern::from_signs(signs);
    return CyclotomicPattern::from_values(vals);
}

double l1_norm(const CharacterPattern& e) {
    double s = 0;
    for (const auto& v : e.values) s += std::abs(v);
    return s;
}

double l2_norm(const CharacterPattern& e) {
    double s = 0;
    for (const auto& v : e.values) s += std::norm(v);
    return std::sqrt(s);
}

}  // namespace seqcor

#include "seqcor/baseline.hpp"

#include <stdexcept>
#include <string>

#include "seqcor/plans.hpp"

namespace seqcor {

std::vector<std::int8_t> m_sequence(const LfsrSpec& spec) {
    if (spec.degree < 1 || spec.degree > 24) throw std::invalid_argument("m_sequence: bad degree");
    for (int t : spec.taps)
        if (t < 1 || t > spec.degree) throw std::invalid_argument("m_sequence: tap out of range");
    const std::size_t period = (std::size_t(1) << spec.degree) - 1;
    std::vector<int> reg(std::size_t(spec.degree), 1);
    auto all_ones = [&] {
        for (int v : reg)
            if (v != 1) return false;
        return true;
    };
    std::vector<std::int8_t> out;
    out.reserve(period);
    for (std::size_t i = 0; i < period; ++i) {
        int bit = reg[std::size_t(spec.degree - 1)];
        out.push_back(bit ? -1 : 1);
        int fb = 0;
        for (int t : spec.taps) fb ^= reg[std::size_t(t - 1)];
        for (int j = spec.degree - 1; j > 0; --j) reg[std::size_t(j)] = reg[std::size_t(j - 1)];
        reg[0] = fb;
        // primitive feedback returns to the seed exactly once, at the end
        if (all_ones() != (i + 1 == period))
            throw std::invalid_argument("m_sequence: feedback taps are not primitive");
    }
    return out;
}

namespace {

// delay of the second register's sequence per PRN (1-based index 1..37)
constexpr int kG2Delay[38] = {0,  5,   6,   7,   8,   17,  18,  139, 140, 141, 251, 252, 254,
                              255, 256, 257, 258, 469, 470, 471, 472, 473, 474, 509, 512, 513,
                              514, 515, 516, 859, 860, 861, 862, 863, 950, 947, 948, 950};

}  // namespace

std::vector<std::int8_t> gps_ca_code(int prn) {
    if (prn < 1 || prn > 37) throw std::invalid_argument("gps_ca_code: prn must be 1..37");
    static const std::vector<std::int8_t> g1 = m_sequence({10, {3, 10}});
    static const std::vector<std::int8_t> g2 = m_sequence({10, {2, 3, 6, 8, 9, 10}});
    const int delay = kG2Delay[prn];
    std::vector<std::int8_t> code(1023);
    for (int i = 0; i < 1023; ++i) {
        int j = (i - delay) % 1023;
        if (j < 0) j += 1023;
        // XOR in sign form is multiplication
        code[std::size_t(i)] = std::int8_t(g1[std::size_t(i)] * g2[std::size_t(j)]);
    }
    return code;
}

Codebook gps_ca_codebook() {
    Codebook book;
    book.p = 0;
    book.n = 0;
    book.unimodularized = false;
    book.rotation_desc = "gps-ca";
    for (int prn = 1; prn <= 36; ++prn) {
        AperiodicSeq s;
        s.p = 1023;
        s.rotation = 0;
        s.integral = true;
        s.pattern_index = prn - 1;
        s.iv = gps_ca_code(prn);
        book.seqs.push_back(std::move(s));
    }
    return book;
}

const std::vector<std::size_t>& wh_comparison_rows() {
    static const std::vector<std::size_t> rows = {
        1,  2,  3,  4,  6,  8,  9,  12, 13, 16, 17, 18, 19, 21, 23, 24, 25, 27,
        29, 31, 32, 34, 35, 36, 42, 43, 44, 46, 48, 50, 51, 52, 58, 59, 60, 62};
    return rows;
}

Codebook wh_comparison_codebook() {
    auto plan = plan_subset(walsh_plan(6), wh_comparison_rows());
    return instantiate(plan, 1153, RotationSpec::uniform_shift(288), true);
}

BaselineComparison compare_gps_wh(const MetricsOptions& opt) {
    BaselineComparison cmp;
    Codebook gps = gps_ca_codebook();
    Codebook wh = wh_comparison_codebook();

    cmp.gps = metrics(gps, opt);
    cmp.wh = metrics(wh, opt);

    Codebook both;
    both.rotation_desc = "gps-ca+walsh";
    both.seqs = gps.seqs;
    for (const auto& s : wh.seqs) both.seqs.push_back(s);
    cmp.combined = metrics(both, opt);

    const std::size_t na = gps.seqs.size(), total = both.seqs.size();
    bool first = true;
    double sum_pcc = 0, sum_cdf = 0;
    std::size_t cross = 0;
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = na; j < total; ++j) {
            std::size_t t = cmp.combined.pair_index(i, j);
            double pcc = cmp.combined.pcc[t], cdf = cmp.combined.cdf[t];
            if (first) {
                cmp.cross_pcc_min = cmp.cross_pcc_max = pcc;
                cmp.cross_cdf_min = cmp.cross_cdf_max = cdf;
                first = false;
            }
            cmp.cross_pcc_min = std::min(cmp.cross_pcc_min, pcc);
            cmp.cross_pcc_max = std::max(cmp.cross_pcc_max, pcc);
            cmp.cross_cdf_min = std::min(cmp.cross_cdf_min, cdf);
            cmp.cross_cdf_max = std::max(cmp.cross_cdf_max, cdf);
            sum_pcc += pcc;
            sum_cdf += cdf;
            ++cross;
        }
    }
    cmp.cross_pcc_avg = sum_pcc / double(cross);
    cmp.cross_cdf_avg = sum_cdf / double(cross);
    return cmp;
}

}  // namespace seqcor

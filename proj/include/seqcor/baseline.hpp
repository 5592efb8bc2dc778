#pragma once

#include <cstdint>
#include <vector>

#include "seqcor/correlation.hpp"
#include "seqcor/sequences.hpp"

namespace seqcor {

// Fibonacci-style shift register: stages 1..degree, output taken from the
// last stage, feedback is the XOR of the tapped stages and enters stage 1.
// All stages start at 1.  Bits map to signs as b -> (-1)^b.
struct LfsrSpec {
    int degree = 0;
    std::vector<int> taps;  // 1-based stage numbers
};

// One full period (2^degree - 1 chips) as a +1/-1 sequence.  Throws if the
// feedback polynomial is not primitive (period falls short).
std::vector<std::int8_t> m_sequence(const LfsrSpec& spec);

// C/A spreading code for one satellite, prn in 1..37, length 1023, signs.
std::vector<std::int8_t> gps_ca_code(int prn);

// The 36 distinct C/A codes (PRN 1..36; PRN 37 duplicates PRN 34).
Codebook gps_ca_codebook();

// Same-size comparison book: 36 patterns of the index-64 Walsh plan at
// p = 1153, rotated by 288 and unimodularized with +1.
Codebook wh_comparison_codebook();

// Hadamard row numbers (in H_6) of the patterns used above.
const std::vector<std::size_t>& wh_comparison_rows();

struct BaselineComparison {
    MetricsSummary gps;       // 36 sequences, length 1023
    MetricsSummary wh;        // 36 sequences, length 1153
    MetricsSummary combined;  // all 72
    // cross-book pair statistics, extracted from the combined summary
    double cross_pcc_avg = 0, cross_pcc_min = 0, cross_pcc_max = 0;
    double cross_cdf_avg = 0, cross_cdf_min = 0, cross_cdf_max = 0;
};

BaselineComparison compare_gps_wh(const MetricsOptions& opt = {});

}  // namespace seqcor

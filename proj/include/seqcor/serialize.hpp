#pragma once

#include <string>
#include <vector>

#include "seqcor/correlation.hpp"
#include "seqcor/plans.hpp"
#include "seqcor/sequences.hpp"
#include "seqcor/theory.hpp"

namespace seqcor {

std::string plan_to_json(const CyclotomicPlan& plan);
CyclotomicPlan plan_from_json(const std::string& text);

std::string codebook_to_json(const Codebook& book);
Codebook codebook_from_json(const std::string& text);

// '+', '-' and '0' per entry, one line per sequence; sign sequences only.
std::string codebook_to_text(const Codebook& book);
Codebook codebook_from_text(const std::string& text);

// columns: shift, re, im
std::string spectrum_to_csv(const CorrelationSpectrum& spec);

enum class TableKind { Peak, Df, All };

std::string metrics_csv_header(TableKind kind);
// one row keyed by p (or another length label); 6 decimals for the ratio
// and adjusted columns, 4 for averages, exact integers for integer peaks
std::string metrics_csv_row(const MetricsSummary& m, u64 p, TableKind kind);

std::string metrics_to_json(const MetricsSummary& m, u64 p);

std::string bounds_to_json(const std::vector<BoundReport>& reports);
std::string bounds_to_csv(const std::vector<BoundReport>& reports);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace seqcor

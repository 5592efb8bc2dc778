#include "seqcor/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace seqcor {

using nlohmann::json;

namespace {

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

json pattern_entries(const CyclotomicPattern& d) {
    json arr = json::array();
    if (d.root_order == 2) {
        for (std::size_t j = 0; j < d.n; ++j) arr.push_back(d.sign_at(j));
    } else if (d.root_order > 0) {
        for (int e : d.exponents) arr.push_back(e);
    } else {
        for (const auto& v : d.values) arr.push_back(json::array({v.real(), v.imag()}));
    }
    return arr;
}

}  // namespace

std::string plan_to_json(const CyclotomicPlan& plan) {
    json j;
    j["n"] = plan.n;
    j["m"] = plan.root_order;
    if (!plan.origin.empty()) j["origin"] = plan.origin;
    j["patterns"] = json::array();
    for (const auto& d : plan.patterns) j["patterns"].push_back(pattern_entries(d));
    return j.dump(2) + "\n";
}

CyclotomicPlan plan_from_json(const std::string& text) {
    json j = json::parse(text);
    CyclotomicPlan plan;
    plan.n = j.at("n").get<std::size_t>();
    int m = j.at("m").get<int>();
    plan.root_order = m;
    if (j.contains("origin")) plan.origin = j["origin"].get<std::string>();
    for (const auto& entry : j.at("patterns")) {
        if (entry.size() != plan.n) throw std::invalid_argument("plan json: pattern length mismatch");
        if (m == 2) {
            std::vector<int> signs;
            for (const auto& v : entry) signs.push_back(v.get<int>());
            plan.patterns.push_back(CyclotomicPattern::from_signs(signs));
        } else if (m > 0) {
            std::vector<int> exps;
            for (const auto& v : entry) exps.push_back(v.get<int>());
            plan.patterns.push_back(CyclotomicPattern::from_exponents(m, exps));
        } else {
            std::vector<cplx> vals;
            for (const auto& v : entry) vals.push_back(cplx(v.at(0).get<double>(), v.at(1).get<double>()));
            plan.patterns.push_back(CyclotomicPattern::from_values(vals));
        }
    }
    return plan;
}

std::string codebook_to_json(const Codebook& book) {
    json j;
    j["p"] = book.p;
    j["n"] = book.n;
    j["unimodularized"] = book.unimodularized;
    bool uniform = !book.seqs.empty();
    for (const auto& s : book.seqs) uniform = uniform && s.rotation == book.seqs[0].rotation;
    if (uniform && !book.seqs.empty())
        j["rotation"] = book.seqs[0].rotation;
    else {
        json rots = json::array();
        for (const auto& s : book.seqs) rots.push_back(s.rotation);
        j["rotation"] = rots;
    }
    j["sequences"] = json::array();
    for (const auto& s : book.seqs) {
        json seq;
        seq["pattern_index"] = s.pattern_index;
        seq["rotation"] = s.rotation;
        json ent = json::array();
        if (s.integral)
            for (auto v : s.iv) ent.push_back(int(v));
        else
            for (const auto& v : s.cv) ent.push_back(json::array({v.real(), v.imag()}));
        seq["entries"] = ent;
        j["sequences"].push_back(seq);
    }
    if (!book.warnings.empty()) j["warnings"] = book.warnings;
    return j.dump() + "\n";
}

Codebook codebook_from_json(const std::string& text) {
    json j = json::parse(text);
    Codebook book;
    book.p = j.at("p").get<u64>();
    book.n = j.at("n").get<std::size_t>();
    book.unimodularized = j.at("unimodularized").get<bool>();
    for (const auto& seq : j.at("sequences")) {
        AperiodicSeq s;
        s.p = book.p;
        s.pattern_index = seq.value("pattern_index", -1);
        s.rotation = seq.value("rotation", u64(0));
        const auto& ent = seq.at("entries");
        bool integral = !ent.empty() && ent[0].is_number_integer();
        s.integral = integral;
        if (integral) {
            for (const auto& v : ent) {
                int x = v.get<int>();
                if (x < -1 || x > 1) throw std::invalid_argument("codebook json: entry out of range");
                s.iv.push_back(std::int8_t(x));
            }
        } else {
            for (const auto& v : ent) s.cv.push_back(cplx(v.at(0).get<double>(), v.at(1).get<double>()));
        }
        book.seqs.push_back(std::move(s));
    }
    if (j.contains("warnings"))
        for (const auto& w : j["warnings"]) book.warnings.push_back(w.get<std::string>());
    return book;
}

std::string codebook_to_text(const Codebook& book) {
    std::ostringstream os;
    for (const auto& s : book.seqs) {
        if (!s.integral)
            throw std::invalid_argument("codebook text format supports sign sequences only");
        for (auto v : s.iv) os << (v > 0 ? '+' : (v < 0 ? '-' : '0'));
        os << '\n';
    }
    return os.str();
}

Codebook codebook_from_text(const std::string& text) {
    Codebook book;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        AperiodicSeq s;
        s.integral = true;
        for (char c : line) {
            if (c == '+')
                s.iv.push_back(1);
            else if (c == '-')
                s.iv.push_back(-1);
            else if (c == '0')
                s.iv.push_back(0);
            else
                throw std::invalid_argument("codebook text: unexpected character");
        }
        s.p = s.iv.size();
        book.seqs.push_back(std::move(s));
    }
    return book;
}

std::string spectrum_to_csv(const CorrelationSpectrum& spec) {
    std::ostringstream os;
    os << "shift,re,im\n";
    for (long long s = spec.lo; s <= spec.hi; ++s) {
        cplx v = spec.value(s);
        os << s << ',';
        if (spec.integral)
            os << (long long)std::llround(v.real()) << ",0";
        else
            os << fixed(v.real(), 12) << ',' << fixed(v.imag(), 12);
        os << '\n';
    }
    return os.str();
}

std::string metrics_csv_header(TableKind kind) {
    const std::string peak = "guc_sdc_ratio,psl_avg,psl_min,psl_max,pcc_avg,pcc_min,pcc_max";
    const std::string df = "adjusted_df,adf_avg,adf_min,adf_max,cdf_avg,cdf_min,cdf_max";
    switch (kind) {
        case TableKind::Peak:
            return "p," + peak;
        case TableKind::Df:
            return "p," + df;
        case TableKind::All:
            return "p," + peak + "," + df;
    }
    return {};
}

std::string metrics_csv_row(const MetricsSummary& m, u64 p, TableKind kind) {
    auto ival = [&](double v) {
        return m.integral ? std::to_string((long long)std::llround(v)) : fixed(v, 4);
    };
    std::string peak = fixed(m.guc_over_sqrt_sdc, 6) + "," + fixed(m.psl_avg, 4) + "," +
                       ival(m.psl_min) + "," + ival(m.psl_max) + "," + fixed(m.pcc_avg, 4) + "," +
                       ival(m.pcc_min) + "," + ival(m.pcc_max);
    std::string df = fixed(m.adjusted_df, 6) + "," + fixed(m.adf_avg, 4) + "," +
                     fixed(m.adf_min, 4) + "," + fixed(m.adf_max, 4) + "," + fixed(m.cdf_avg, 4) +
                     "," + fixed(m.cdf_min, 4) + "," + fixed(m.cdf_max, 4);
    switch (kind) {
        case TableKind::Peak:
            return std::to_string(p) + "," + peak;
        case TableKind::Df:
            return std::to_string(p) + "," + df;
        case TableKind::All:
            return std::to_string(p) + "," + peak + "," + df;
    }
    return {};
}

std::string metrics_to_json(const MetricsSummary& m, u64 p) {
    json j;
    j["p"] = p;
    j["count"] = m.count;
    j["integral"] = m.integral;
    j["guc"] = m.guc;
    j["sdc"] = m.sdc;
    j["guc_sdc_ratio"] = m.guc_over_sqrt_sdc;
    j["psl"] = {{"avg", m.psl_avg}, {"min", m.psl_min}, {"max", m.psl_max}, {"per_seq", m.psl}};
    j["adf"] = {{"avg", m.adf_avg}, {"min", m.adf_min}, {"max", m.adf_max}, {"per_seq", m.adf}};
    j["pcc"] = {{"avg", m.pcc_avg}, {"min", m.pcc_min}, {"max", m.pcc_max}};
    j["cdf"] = {{"avg", m.cdf_avg}, {"min", m.cdf_min}, {"max", m.cdf_max}};
    j["cdf_overall"] = m.cdf_overall;
    j["adjusted_df"] = m.adjusted_df;
    j["max_fft_deviation"] = m.max_fft_deviation;
    return j.dump(2) + "\n";
}

std::string bounds_to_json(const std::vector<BoundReport>& reports) {
    json arr = json::array();
    for (const auto& r : reports) {
        json j;
        j["name"] = r.name;
        j["bound"] = r.bound;
        if (r.has_measured) {
            j["measured"] = r.measured;
            j["satisfied"] = r.satisfied;
        }
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

std::string bounds_to_csv(const std::vector<BoundReport>& reports) {
    std::ostringstream os;
    os << "name,bound,measured,satisfied\n";
    for (const auto& r : reports) {
        os << r.name << ',' << fixed(r.bound, 6) << ',';
        if (r.has_measured)
            os << fixed(r.measured, 6) << ',' << (r.satisfied ? "yes" : "no");
        else
            os << ",";
        os << '\n';
    }
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace seqcor

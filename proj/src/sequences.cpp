#include "seqcor/sequences.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace seqcor {

RotationSpec RotationSpec::uniform_shift(u64 r) {
    RotationSpec s;
    s.kind = Kind::Uniform;
    s.uniform = r;
    return s;
}

RotationSpec RotationSpec::per_pattern_map(std::map<std::size_t, u64> m) {
    RotationSpec s;
    s.kind = Kind::PerPattern;
    s.per_pattern = std::move(m);
    return s;
}

RotationSpec RotationSpec::of_fraction(double rho) {
    if (!(rho >= 0.0) || !(rho < 1.0))
        throw std::invalid_argument("rotation fraction must lie in [0,1)");
    RotationSpec s;
    s.kind = Kind::Fraction;
    s.fraction = rho;
    return s;
}

u64 RotationSpec::resolve(std::size_t pattern_index, u64 p) const {
    switch (kind) {
        case Kind::Uniform:
            return uniform % p;
        case Kind::PerPattern: {
            auto it = per_pattern.find(pattern_index);
            if (it == per_pattern.end())
                throw std::invalid_argument("rotation map is missing pattern " +
                                            std::to_string(pattern_index));
            return it->second % p;
        }
        case Kind::Fraction:
            return u64(std::floor(fraction * double(p))) % p;
    }
    throw std::logic_error("rotation spec: bad kind");
}

std::string RotationSpec::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Uniform:
            os << "uniform:" << uniform;
            break;
        case Kind::PerPattern:
            os << "map";
            break;
        case Kind::Fraction:
            os << "fraction:" << fraction;
            break;
    }
    return os.str();
}

PeriodicSeq derive_periodic(const FieldContext& ctx, const CyclotomicPattern& d, u64 element_cap) {
    if (d.n == 0 || (ctx.p - 1) % d.n != 0)
        throw std::invalid_argument("derive_periodic: pattern length must divide p-1");
    return derive_periodic(ctx, d, class_table(ctx, d.n, element_cap));
}

PeriodicSeq derive_periodic(const FieldContext& ctx, const CyclotomicPattern& d,
                            const std::vector<std::uint8_t>& cls) {
    if (d.n == 0 || (ctx.p - 1) % d.n != 0)
        throw std::invalid_argument("derive_periodic: pattern length must divide p-1");
    if (cls.size() != ctx.p) throw std::invalid_argument("derive_periodic: class table size mismatch");
    PeriodicSeq f;
    f.p = ctx.p;
    f.integral = d.binary();
    if (f.integral) {
        f.iv.assign(ctx.p, 0);
        for (u64 h = 1; h < ctx.p; ++h) f.iv[h] = std::int8_t(d.sign_at(cls[h]));
    } else {
        f.cv.assign(ctx.p, cplx(0, 0));
        for (u64 h = 1; h < ctx.p; ++h) f.cv[h] = d.values[cls[h]];
    }
    return f;
}

PeriodicSeq derive_via_characters(const FieldContext& ctx, const CharacterPattern& e, u64 element_cap) {
    if (e.n == 0 || (ctx.p - 1) % e.n != 0)
        throw std::invalid_argument("derive_via_characters: pattern length must divide p-1");
    if (ctx.p > element_cap)
        throw std::invalid_argument("derive_via_characters: p exceeds the element cap");
    PeriodicSeq f;
    f.p = ctx.p;
    f.integral = false;
    f.cv.assign(ctx.p, cplx(0, 0));
    // walk h = alpha^t and evaluate the character sum entry by entry
    u64 h = 1;
    for (u64 t = 0; t < ctx.p - 1; ++t) {
        cplx sum(0, 0);
        for (std::size_t j = 0; j < e.n; ++j) {
            double ang = 2.0 * std::numbers::pi * double(j) * double(t % e.n) / double(e.n);
            sum += e.values[j] * cplx(std::cos(ang), std::sin(ang));
        }
        f.cv[h] = sum;
        h = ctx.mul(h, ctx.alpha);
    }
    return f;
}

std::vector<PeriodicSeq> derive_plan(const FieldContext& ctx, const CyclotomicPlan& plan,
                                     u64 element_cap) {
    if (plan.patterns.empty()) throw std::invalid_argument("derive_plan: plan has no patterns");
    auto cls = class_table(ctx, plan.n, element_cap);
    std::vector<PeriodicSeq> out;
    out.reserve(plan.patterns.size());
    for (std::size_t i = 0; i < plan.patterns.size(); ++i) {
        PeriodicSeq f = derive_periodic(ctx, plan.patterns[i], cls);
        f.pattern_index = int(i);
        out.push_back(std::move(f));
    }
    return out;
}

PeriodicSeq unimodularize(const PeriodicSeq& f, cplx fill, double tol) {
    if (std::abs(std::abs(fill) - 1.0) > tol)
        throw std::invalid_argument("unimodularize: fill value must have unit modulus");
    if (f.p == 0) throw std::invalid_argument("unimodularize: empty sequence");
    if (std::abs(f.at(0)) > tol)
        throw std::invalid_argument("unimodularize: entry 0 is already nonzero");
    PeriodicSeq g = f;
    g.filled = true;
    bool fill_is_sign = std::abs(fill.imag()) <= tol &&
                        (std::abs(fill.real() - 1.0) <= tol || std::abs(fill.real() + 1.0) <= tol);
    if (g.integral && fill_is_sign) {
        g.iv[0] = std::int8_t(fill.real() > 0 ? 1 : -1);
    } else {
        if (g.integral) {
            g.integral = false;
            g.cv.assign(g.p, cplx(0, 0));
            for (u64 j = 0; j < g.p; ++j) g.cv[j] = cplx(double(g.iv[j]), 0.0);
            g.iv.clear();
        }
        g.cv[0] = fill;
        for (u64 j = 1; j < g.p; ++j)
            if (std::abs(std::abs(g.cv[j]) - 1.0) > tol)
                throw std::invalid_argument("unimodularize: sequence has a non-unit entry away from 0");
    }
    return g;
}

AperiodicSeq rotate(const PeriodicSeq& f, u64 r) {
    if (f.p == 0) throw std::invalid_argument("rotate: empty sequence");
    AperiodicSeq w;
    w.p = f.p;
    w.rotation = r % f.p;
    w.integral = f.integral;
    w.pattern_index = f.pattern_index;
    if (f.integral) {
        w.iv.resize(f.p);
        for (u64 j = 0; j < f.p; ++j) w.iv[j] = f.iv[(w.rotation + j) % f.p];
    } else {
        w.cv.resize(f.p);
        for (u64 j = 0; j < f.p; ++j) w.cv[j] = f.cv[(w.rotation + j) % f.p];
    }
    return w;
}

namespace {

bool same_window(const AperiodicSeq& a, const AperiodicSeq& b) {
    if (a.size() != b.size() || a.integral != b.integral) return false;
    if (a.integral) return a.iv == b.iv;
    return a.cv == b.cv;
}

}  // namespace

Codebook instantiate(const CyclotomicPlan& plan, u64 p, const RotationSpec& rot,
                     bool unimodularized, cplx fill, u64 element_cap) {
    if (plan.patterns.empty()) throw std::invalid_argument("instantiate: plan has no patterns");
    auto ctx = field_context(p);
    if ((p - 1) % plan.n != 0)
        throw std::invalid_argument("instantiate: plan index does not divide p-1");

    Codebook book;
    book.p = p;
    book.n = plan.n;
    book.unimodularized = unimodularized;
    book.rotation_desc = rot.describe();

    auto cls = class_table(ctx, plan.n, element_cap);
    for (std::size_t i = 0; i < plan.patterns.size(); ++i) {
        PeriodicSeq f = derive_periodic(ctx, plan.patterns[i], cls);
        f.pattern_index = int(i);
        if (unimodularized) f = unimodularize(f, fill);
        u64 r = rot.resolve(i, p);
        AperiodicSeq w = rotate(f, r);

        bool dup = false;
        for (const auto& prev : book.seqs) {
            if (same_window(prev, w)) {
                std::ostringstream os;
                os << "collision: pattern " << i << " at rotation " << r
                   << " repeats pattern " << prev.pattern_index << " at rotation "
                   << prev.rotation << "; dropped";
                book.warnings.push_back(os.str());
                dup = true;
                break;
            }
        }
        if (!dup) book.seqs.push_back(std::move(w));
    }
    return book;
}

}  // namespace seqcor

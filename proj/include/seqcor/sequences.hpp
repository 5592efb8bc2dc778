#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "seqcor/numtheory.hpp"
#include "seqcor/patterns.hpp"
#include "seqcor/plans.hpp"

namespace seqcor {

// Sequence indexed by F_p.  Binary-derived sequences keep an exact signed
// byte form (-1, 0, +1); anything else lives in the complex form.
struct PeriodicSeq {
    u64 p = 0;
    bool integral = true;
    std::vector<std::int8_t> iv;
    std::vector<cplx> cv;
    int pattern_index = -1;  // position in the originating plan, -1 if none
    bool filled = false;     // entry 0 replaced by a unit value

    std::size_t size() const { return std::size_t(p); }
    cplx at(std::size_t j) const { return integral ? cplx(double(iv[j]), 0.0) : cv[j]; }
};

// Finite window f^(r): entry j is the periodic value at r+j.
struct AperiodicSeq {
    u64 p = 0;
    u64 rotation = 0;
    bool integral = true;
    std::vector<std::int8_t> iv;
    std::vector<cplx> cv;
    int pattern_index = -1;

    std::size_t size() const { return integral ? iv.size() : cv.size(); }
    cplx at(std::size_t j) const { return integral ? cplx(double(iv[j]), 0.0) : cv[j]; }
};

struct Codebook {
    u64 p = 0;
    std::size_t n = 0;
    bool unimodularized = false;
    std::string rotation_desc;
    std::vector<AperiodicSeq> seqs;
    std::vector<std::string> warnings;
};

// How instantiate picks the rotation of each derived sequence.
struct RotationSpec {
    enum class Kind { Uniform, PerPattern, Fraction } kind = Kind::Uniform;
    u64 uniform = 0;
    std::map<std::size_t, u64> per_pattern;  // pattern index -> rotation
    double fraction = 0.0;                   // r = floor(fraction * p)

    static RotationSpec uniform_shift(u64 r);
    static RotationSpec per_pattern_map(std::map<std::size_t, u64> m);
    static RotationSpec of_fraction(double rho);

    u64 resolve(std::size_t pattern_index, u64 p) const;
    std::string describe() const;
};

// f_0 = 0 and f_h = d_k for h in the k-th cyclotomic class.
PeriodicSeq derive_periodic(const FieldContext& ctx, const CyclotomicPattern& d,
                            u64 element_cap = u64(1) << 26);

// Same, against a class table the caller already built.
PeriodicSeq derive_periodic(const FieldContext& ctx, const CyclotomicPattern& d,
                            const std::vector<std::uint8_t>& cls);

// Every pattern of the plan derived at ctx.p, in plan order.
std::vector<PeriodicSeq> derive_plan(const FieldContext& ctx, const CyclotomicPlan& plan,
                                     u64 element_cap = u64(1) << 26);

// Same sequence through the Fourier side: f_h is the character sum
// sum_j e_j exp(2 pi i j t / n) with h = alpha^t.  Kept deliberately
// independent of derive_periodic as a cross-check route.
PeriodicSeq derive_via_characters(const FieldContext& ctx, const CharacterPattern& e,
                                  u64 element_cap = u64(1) << 26);

// Replace the zero entry at index 0 by a unit value (default +1).
PeriodicSeq unimodularize(const PeriodicSeq& f, cplx fill = cplx(1, 0), double tol = 1e-9);

AperiodicSeq rotate(const PeriodicSeq& f, u64 r);

// Derive every pattern of the plan at prime p, optionally unimodularize,
// then cut windows at the requested rotations.  Identical windows are
// reported in warnings and deduplicated.
Codebook instantiate(const CyclotomicPlan& plan, u64 p, const RotationSpec& rot,
                     bool unimodularized, cplx fill = cplx(1, 0),
                     u64 element_cap = u64(1) << 26);

}  // namespace seqcor

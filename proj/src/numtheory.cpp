#include "seqcor/numtheory.hpp"

#include <algorithm>
#include <numeric>

namespace seqcor {

namespace {

using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

u64 powmod(u64 base, u64 e, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin_once(u64 m, u64 a, u64 d, int s) {
    u64 x = powmod(a, d, m);
    if (x == 1 || x == m - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, m);
        if (x == m - 1) return true;
    }
    return false;
}

u64 pollard_rho(u64 m) {
    if (m % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        auto step = [&](u64 x) { return (mulmod(x, x, m) + c) % m; };
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = std::gcd(x > y ? x - y : y - x, m);
        }
        if (d != m) return d;
    }
}

void factor_into(u64 m, std::vector<u64>& out) {
    if (m == 1) return;
    if (is_prime(m)) {
        out.push_back(m);
        return;
    }
    for (u64 q = 2; q * q <= m && q < (u64(1) << 21); q += (q == 2) ? 1 : 2) {
        if (m % q == 0) {
            out.push_back(q);
            while (m % q == 0) m /= q;
            factor_into(m, out);
            return;
        }
    }
    u64 d = pollard_rho(m);
    factor_into(d, out);
    factor_into(m / d, out);
}

}  // namespace

bool is_prime(u64 m) {
    if (m < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (m == q) return true;
        if (m % q == 0) return false;
    }
    u64 d = m - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // this witness set is proven deterministic for all 64-bit inputs
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!miller_rabin_once(m, a, d, s)) return false;
    }
    return true;
}

u64 next_usable_prime(u64 start, u64 n) {
    if (n == 0) throw std::invalid_argument("next_usable_prime: n must be positive");
    u64 p = std::max<u64>(start, 2);
    if (n > 1) {
        u64 r = p % n;
        if (r != 1) p += (r <= 1) ? 1 - r : n + 1 - r;
    }
    for (;; p += (n > 1) ? n : 1) {
        if (is_prime(p)) return p;
    }
}

u64 FieldContext::mul(u64 a, u64 b) const { return mulmod(a, b, p); }

u64 FieldContext::pow(u64 base, u64 e) const { return powmod(base, e, p); }

FieldContext field_context(u64 p) {
    if (p >= (u64(1) << 40)) throw std::invalid_argument("field_context: p exceeds 2^40");
    if (!is_prime(p)) throw std::invalid_argument("field_context: " + std::to_string(p) + " is not prime");
    FieldContext ctx;
    ctx.p = p;
    factor_into(p - 1, ctx.p1_prime_factors);
    std::sort(ctx.p1_prime_factors.begin(), ctx.p1_prime_factors.end());
    if (p == 2) {
        ctx.alpha = 1;
        return ctx;
    }
    for (u64 a = 2; a < p; ++a) {
        bool primitive = true;
        for (u64 q : ctx.p1_prime_factors) {
            if (powmod(a, (p - 1) / q, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            ctx.alpha = a;
            return ctx;
        }
    }
    throw std::logic_error("field_context: no primitive root found");
}

u64 cyclotomic_class_index(const FieldContext& ctx, u64 n, u64 h) {
    if (n == 0 || (ctx.p - 1) % n != 0)
        throw std::invalid_argument("cyclotomic_class_index: n does not divide p-1");
    h %= ctx.p;
    if (h == 0) throw std::invalid_argument("cyclotomic_class_index: h is 0 mod p");
    if (n == 1) return 0;
    u64 e = (ctx.p - 1) / n;
    u64 target = ctx.pow(h, e);
    u64 gamma = ctx.pow(ctx.alpha, e);  // has order exactly n
    u64 acc = 1;
    for (u64 k = 0; k < n; ++k) {
        if (acc == target) return k;
        acc = ctx.mul(acc, gamma);
    }
    throw std::logic_error("cyclotomic_class_index: no match (broken context)");
}

std::vector<std::uint8_t> class_table(const FieldContext& ctx, u64 n, u64 element_cap) {
    if (n == 0 || (ctx.p - 1) % n != 0)
        throw std::invalid_argument("class_table: n does not divide p-1");
    if (n > 255) throw std::invalid_argument("class_table: n > 255 unsupported");
    if (ctx.p > element_cap)
        throw std::invalid_argument("class_table: p exceeds the element cap");
    std::vector<std::uint8_t> table(ctx.p, 0xFF);
    u64 g = 1;
    for (u64 t = 0; t < ctx.p - 1; ++t) {
        table[g] = std::uint8_t(t % n);
        g = ctx.mul(g, ctx.alpha);
    }
    return table;
}

CyclotomicNumberTable cyclotomic_numbers(const FieldContext& ctx, u64 n, u64 element_cap) {
    auto table = class_table(ctx, n, element_cap);
    CyclotomicNumberTable out;
    out.p = ctx.p;
    out.n = n;
    out.counts.assign(n * n, 0);
    // (j,k) counts x with x in class j and 1+x in class k; x = p-1 is the
    // one element where 1+x vanishes, so it is skipped.
    for (u64 x = 1; x + 1 < ctx.p; ++x) {
        ++out.counts[u64(table[x]) * n + table[x + 1]];
    }
    return out;
}

}  // namespace seqcor

#include <hornred/polynomial.hpp>

#include <cassert>
#include <cstdint>
#include <optional>
#include <random>

#include <hornred/errors.hpp>

// Multivariate gcd over Q[x1..xn], computed as is classical for exact
// coefficient arithmetic: strip rational scale and integer content, peel the
// common monomial factor, then recurse variable by variable splitting each
// polynomial into content and primitive part, with a subresultant
// pseudo-remainder sequence on the primitive parts.  Everything returned by
// poly_gcd is the canonical associate: integer coefficients, content 1,
// positive leading coefficient under the graded-lex order.
//
// The pseudo-remainder sequence is exact but expensive on many-variable
// operands, while in practice most of the gcds requested here (normalizing
// quotients of operator coefficients) are trivial.  A modular probe therefore
// runs first: both operands are evaluated at random points over a word-size
// prime field, one variable kept symbolic at a time, and the univariate image
// gcds bound the true gcd's degree in each variable.  A zero bound everywhere
// settles the call at once, and otherwise the bounds steer exact shortcuts
// (divisibility tests, content reduction, main-variable choice).

namespace hornred {

namespace {

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

// ---- univariate-in-x views -------------------------------------------------

int deg_in(const Polynomial &p, std::size_t x) { return p.degree_in(x); }

// Coefficient of x^k, as a polynomial with the x-exponent zeroed out.
Polynomial coeff_in(const Polynomial &p, std::size_t x, int k) {
    Polynomial r(p.vars());
    for (const auto &[mono, c] : p.terms()) {
        if (mono[x] != k)
            continue;
        Exponents m = mono;
        m[x] = 0;
        r.add_term(m, c);
    }
    return r;
}

Polynomial lead_coeff_in(const Polynomial &p, std::size_t x) {
    return coeff_in(p, x, deg_in(p, x));
}

Polynomial mul_power(const Polynomial &p, std::size_t x, int k) {
    Polynomial r(p.vars());
    for (const auto &[mono, c] : p.terms()) {
        Exponents m = mono;
        m[x] += k;
        r.add_term(m, c);
    }
    return r;
}

// Pseudo-remainder: prem(a, b, x) == lc_x(b)^(deg a - deg b + 1) * a  (mod b).
Polynomial pseudo_rem(const Polynomial &a, const Polynomial &b, std::size_t x) {
    int e = deg_in(b, x);
    assert(e >= 0);
    Polynomial lcb = lead_coeff_in(b, x);
    Polynomial r = a;
    int scale_left = deg_in(a, x) - e + 1;
    while (!r.is_zero() && deg_in(r, x) >= e) {
        Polynomial lcr = lead_coeff_in(r, x);
        int shift = deg_in(r, x) - e;
        r = lcb * r - mul_power(lcr * b, x, shift);
        --scale_left;
    }
    if (scale_left > 0 && !r.is_zero())
        r *= lcb.pow((unsigned)scale_left);
    return r;
}

Polynomial one_like(const Polynomial &p) { return Polynomial::constant(p.vars(), 1); }

// ---- modular degree probe ---------------------------------------------------

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// 2^61 - 1 and the largest prime below 2^63; products fit __int128.
constexpr u64 kProbePrimes[2] = {2305843009213693951ull, 9223372036854775783ull};

u64 mulmod(u64 a, u64 b, u64 p) { return (u64)((u128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    for (; e; e >>= 1, a = mulmod(a, a, p))
        if (e & 1)
            r = mulmod(r, a, p);
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Coefficient image in Z_p; the gcd layer only ever probes integer-coefficient
// polynomials, anything else opts out of the probe.
std::optional<u64> coeff_mod(const Rational &c, u64 p) {
    if (denominator(c) != 1)
        return std::nullopt;
    Integer n = numerator(c) % Integer(p);
    if (n < 0)
        n += Integer(p);
    return n.convert_to<u64>();
}

// Dense univariate polynomials mod p, coefficients low to high, no zero back.
void trim_uni(std::vector<u64> &f) {
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

int uni_gcd_degree(std::vector<u64> a, std::vector<u64> b, u64 p) {
    trim_uni(a);
    trim_uni(b);
    while (!b.empty()) {
        const u64 inv_lead = invmod(b.back(), p);
        while (a.size() >= b.size()) {
            const u64 f = mulmod(a.back(), inv_lead, p);
            const std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i + 1 < b.size(); ++i) {
                const u64 sub = mulmod(f, b[i], p);
                u64 &dst = a[off + i];
                dst = dst >= sub ? dst - sub : dst + p - sub;
            }
            a.pop_back();
            trim_uni(a);
            if (a.empty())
                break;
        }
        std::swap(a, b);
    }
    return (int)a.size() - 1; // -1 only for gcd(0, 0)
}

// Univariate images of p along every wanted variable, the other variables
// fixed at the round's point.  False when the round degenerates for p: a
// leading coefficient vanished mod the prime, or a coefficient is not
// integral.
bool build_images(const Polynomial &p, const std::vector<char> &want, const std::vector<u64> &pt,
                  const std::vector<u64> &inv_pt, u64 prime, std::vector<std::vector<u64>> &img) {
    const std::size_t nv = pt.size();
    img.assign(nv, {});
    for (std::size_t v = 0; v < nv; ++v)
        if (want[v])
            img[v].assign((std::size_t)p.degree_in(v) + 1, 0);
    for (const auto &[mono, c] : p.terms()) {
        const auto cm = coeff_mod(c, prime);
        if (!cm)
            return false;
        u64 full = *cm;
        for (std::size_t v = 0; v < nv; ++v)
            if (mono[v] > 0)
                full = mulmod(full, powmod(pt[v], (u64)mono[v], prime), prime);
        for (std::size_t v = 0; v < nv; ++v) {
            if (!want[v])
                continue;
            const u64 t =
                mono[v] > 0 ? mulmod(full, powmod(inv_pt[v], (u64)mono[v], prime), prime) : full;
            u64 &dst = img[v][(std::size_t)mono[v]];
            dst += t;
            if (dst >= prime)
                dst -= prime;
        }
    }
    for (std::size_t v = 0; v < nv; ++v)
        if (want[v] && img[v].back() == 0)
            return false;
    return true;
}

// Per-variable degree bounds for gcd(a, b).  The univariate image of the gcd
// divides the image gcd and keeps its degree unless the evaluation kills its
// leading coefficient, so each round yields an upper bound that is exact with
// overwhelming probability; two independent rounds are combined by min.
// nullopt when no two rounds succeed, in which case the caller stays on the
// purely exact path.
std::optional<std::vector<int>> probe_gcd_degrees(const Polynomial &a, const Polynomial &b) {
    const std::size_t nv = a.vars()->size();
    std::vector<char> want(nv, 0);
    bool any = false;
    for (std::size_t v = 0; v < nv; ++v) {
        want[v] = a.degree_in(v) > 0 && b.degree_in(v) > 0;
        any |= want[v] != 0;
    }
    std::vector<int> result(nv, 0);
    if (!any)
        return result; // no shared variable: only constant common divisors

    static thread_local std::mt19937_64 rng(0x68726e64u); // fixed seed, reproducible runs
    int rounds = 0;
    for (int attempt = 0; attempt < 6 && rounds < 2; ++attempt) {
        const u64 prime = kProbePrimes[attempt >= 3 ? 1 : 0];
        std::uniform_int_distribution<u64> dist(2, prime - 2);
        std::vector<u64> pt(nv), inv_pt(nv);
        for (std::size_t v = 0; v < nv; ++v) {
            pt[v] = dist(rng);
            inv_pt[v] = invmod(pt[v], prime);
        }
        std::vector<std::vector<u64>> ia, ib;
        if (!build_images(a, want, pt, inv_pt, prime, ia) ||
            !build_images(b, want, pt, inv_pt, prime, ib))
            continue;
        std::vector<int> d(nv, 0);
        for (std::size_t v = 0; v < nv; ++v)
            if (want[v])
                d[v] = uni_gcd_degree(ia[v], ib[v], prime);
        if (rounds == 0)
            result = d;
        else
            for (std::size_t v = 0; v < nv; ++v)
                result[v] = std::min(result[v], d[v]);
        ++rounds;
    }
    if (rounds < 2)
        return std::nullopt;
    return result;
}

bool divides(const Polynomial &g, const Polynomial &p) {
    try {
        poly_div_exact(p, g);
        return true;
    } catch (const DomainError &) {
        return false;
    }
}

Polynomial content_in(const Polynomial &p, std::size_t x);
Polynomial gcd_primitive(Polynomial a, Polynomial b);

// content_in: gcd of the x-coefficients (each free of x).
Polynomial content_in(const Polynomial &p, std::size_t x) {
    Polynomial c(p.vars());
    for (int k = 0; k <= deg_in(p, x); ++k) {
        Polynomial ck = coeff_in(p, x, k);
        if (ck.is_zero())
            continue;
        ck = make_primitive(ck).primitive;
        c = c.is_zero() ? ck : gcd_primitive(c, ck);
        if (c.is_one())
            break;
    }
    return c;
}

// Componentwise minimum exponent over all terms.
Exponents min_exponents(const Polynomial &p) {
    Exponents m(p.vars()->size(), 0);
    bool init = false;
    for (const auto &[mono, c] : p.terms()) {
        (void)c;
        if (!init) {
            m = mono;
            init = true;
        } else {
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = std::min(m[i], mono[i]);
        }
    }
    return m;
}

Polynomial strip_monomial(const Polynomial &p, const Exponents &m) {
    Polynomial r(p.vars());
    for (const auto &[mono, c] : p.terms()) {
        Exponents e = mono;
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] -= m[i];
        r.add_term(e, c);
    }
    return r;
}

// gcd of integer-primitive nonzero inputs; result integer-primitive, lc > 0.
Polynomial gcd_primitive(Polynomial a, Polynomial b) {
    for (;;) {
        if (a == b)
            return a;
        if (a.is_constant() || b.is_constant())
            return one_like(a); // primitive constants are +-1

        // A monomial's divisors are monomials, so the gcd is the common one.
        if (a.terms().size() == 1 || b.terms().size() == 1) {
            const Exponents ma = min_exponents(a), mb = min_exponents(b);
            Exponents common(ma.size());
            for (std::size_t i = 0; i < ma.size(); ++i)
                common[i] = std::min(ma[i], mb[i]);
            Polynomial mono(a.vars());
            mono.add_term(common, Rational(1));
            return mono;
        }

        const auto probe = probe_gcd_degrees(a, b);
        std::size_t x = a.vars()->size(); // main variable, chosen below
        if (probe) {
            const std::vector<int> &d = *probe;
            bool all_zero = true, fills_a = true, fills_b = true;
            for (std::size_t v = 0; v < d.size(); ++v) {
                all_zero &= d[v] == 0;
                fills_a &= d[v] == a.degree_in(v);
                fills_b &= d[v] == b.degree_in(v);
            }
            if (all_zero)
                return one_like(a);
            // Full degrees in one operand suggest it divides the other; the
            // division check keeps this exact.
            if (fills_a && divides(a, b))
                return a;
            if (fills_b && divides(b, a))
                return b;
            // A shared variable the gcd avoids: the larger operand can be
            // replaced by its content there, which drops that variable while
            // leaving the gcd unchanged.
            std::size_t drop = d.size();
            const Polynomial &big = a.terms().size() >= b.terms().size() ? a : b;
            for (std::size_t v = 0; v < d.size(); ++v)
                if (d[v] == 0 && a.degree_in(v) > 0 && b.degree_in(v) > 0)
                    if (drop == d.size() || big.degree_in(v) > big.degree_in(drop))
                        drop = v;
            if (drop != d.size()) {
                if (a.terms().size() >= b.terms().size())
                    a = content_in(a, drop);
                else
                    b = content_in(b, drop);
                continue;
            }
            // Main variable: cheapest expected remainder sequence, i.e. the
            // fewest steps from the operand degree down to the gcd degree.
            long best = -1;
            for (std::size_t v = 0; v < d.size(); ++v) {
                if (d[v] <= 0)
                    continue;
                const int low = std::min(a.degree_in(v), b.degree_in(v));
                const long score = (long)(low - d[v]) * 64 + low;
                if (best < 0 || score < best) {
                    best = score;
                    x = v;
                }
            }
        } else {
            // No probe: lowest common degree keeps the sequence short.
            long best = -1;
            for (std::size_t v = 0; v < a.vars()->size(); ++v) {
                if (a.degree_in(v) <= 0 || b.degree_in(v) <= 0)
                    continue;
                const int low = std::min(a.degree_in(v), b.degree_in(v));
                if (best < 0 || low < best) {
                    best = low;
                    x = v;
                }
            }
            if (best < 0) {
                // No shared variable at all: shrink one side to its content
                // in some private variable until the pair shares none.
                for (std::size_t v = 0; v < a.vars()->size(); ++v) {
                    if (a.degree_in(v) > 0)
                        return gcd_primitive(content_in(a, v), std::move(b));
                    if (b.degree_in(v) > 0)
                        return gcd_primitive(std::move(a), content_in(b, v));
                }
                return one_like(a); // unreachable: both constant is handled above
            }
        }

        Polynomial ca = content_in(a, x);
        Polynomial cb = content_in(b, x);
        Polynomial cg = ca.is_one() || cb.is_one() ? one_like(a) : gcd_primitive(ca, cb);
        Polynomial r0 = ca.is_one() ? std::move(a) : poly_div_exact(a, ca);
        Polynomial r1 = cb.is_one() ? std::move(b) : poly_div_exact(b, cb);
        if (deg_in(r0, x) < deg_in(r1, x))
            std::swap(r0, r1);

        // Subresultant pseudo-remainder sequence on the x-primitive parts.
        Polynomial g = one_like(r0);
        Polynomial h = one_like(r0);
        while (!r1.is_zero()) {
            int delta = deg_in(r0, x) - deg_in(r1, x);
            Polynomial rem = pseudo_rem(r0, r1, x);
            r0 = r1;
            if (rem.is_zero()) {
                r1 = rem;
            } else {
                r1 = poly_div_exact(rem, g * h.pow((unsigned)delta));
            }
            g = lead_coeff_in(r0, x);
            if (delta == 1)
                h = g;
            else if (delta > 1)
                h = poly_div_exact(g.pow((unsigned)delta), h.pow((unsigned)(delta - 1)));
        }
        if (deg_in(r0, x) == 0)
            return cg; // primitive parts are coprime
        Polynomial pg = poly_div_exact(r0, content_in(r0, x));
        pg = make_primitive(pg).primitive;
        return cg * pg;
    }
}

} // namespace

PrimitivePart make_primitive(const Polynomial &p) {
    if (p.is_zero())
        throw DomainError("make_primitive of the zero polynomial");
    Integer den_lcm(1);
    for (const auto &[mono, c] : p.terms()) {
        (void)mono;
        den_lcm = lcm(den_lcm, denominator(c));
    }
    Integer num_gcd(0);
    for (const auto &[mono, c] : p.terms()) {
        (void)mono;
        num_gcd = gcd(num_gcd, Integer(numerator(c) * (den_lcm / denominator(c))));
    }
    Rational factor(num_gcd, den_lcm); // > 0 so far
    Polynomial prim(p.vars());
    for (const auto &[mono, c] : p.terms())
        prim.add_term(mono, c / factor);
    if (prim.leading_coefficient() < 0) {
        prim *= Rational(-1);
        factor = -factor;
    }
    return {factor, prim};
}

Polynomial poly_gcd(const Polynomial &a, const Polynomial &b) {
    require_same_vars(a.vars(), b.vars(), "poly_gcd");
    auto canonical_assoc = [](const Polynomial &p) {
        PrimitivePart pp = make_primitive(p);
        Rational c = abs(pp.factor);
        return denominator(c) == 1 ? pp.primitive * c : pp.primitive;
    };
    if (a.is_zero() && b.is_zero())
        return a;
    if (a.is_zero())
        return canonical_assoc(b);
    if (b.is_zero())
        return canonical_assoc(a);

    PrimitivePart na = make_primitive(a);
    PrimitivePart nb = make_primitive(b);
    // Z-style content handling: gcd of the scalar contents comes along
    // (gcd of numerators over lcm of denominators, so integer inputs give
    // the Z[x] gcd).
    Rational ca = abs(na.factor), cb = abs(nb.factor);
    Rational content_gcd(1);
    if (denominator(ca) == 1 && denominator(cb) == 1)
        content_gcd = Rational(gcd(Integer(numerator(ca)), Integer(numerator(cb))));
    Polynomial pa = na.primitive;
    Polynomial pb = nb.primitive;

    // Common monomial factor first: cheap, and it guarantees the recursive
    // part runs on operands with no monomial divisor.
    Exponents ma = min_exponents(pa);
    Exponents mb = min_exponents(pb);
    Exponents common(ma.size());
    bool have_common = false;
    for (std::size_t i = 0; i < ma.size(); ++i) {
        common[i] = std::min(ma[i], mb[i]);
        have_common |= common[i] > 0;
    }
    Polynomial sa = strip_monomial(pa, ma);
    Polynomial sb = strip_monomial(pb, mb);

    Polynomial g;
    if (sa.terms().size() == 1 || sb.terms().size() == 1) {
        // A monomial's only divisors are monomials, and the stripped parts
        // have none in common beyond the extracted factor.
        g = Polynomial::constant(a.vars(), 1);
    } else {
        g = gcd_primitive(sa, sb);
    }
    if (have_common) {
        Polynomial mono(a.vars());
        mono.add_term(common, Rational(1));
        g = g * mono;
    }
    g *= content_gcd;
    return g;
}

Polynomial poly_div_exact(const Polynomial &a, const Polynomial &b) {
    require_same_vars(a.vars(), b.vars(), "poly_div_exact");
    if (b.is_zero())
        throw DomainError("division by the zero polynomial");
    if (a.is_zero())
        return a;
    if (b.is_constant()) {
        Polynomial r = a;
        r *= Rational(1) / b.constant_value();
        return r;
    }
    std::size_t x = 0;
    for (std::size_t v = 0; v < b.vars()->size(); ++v)
        if (b.degree_in(v) > 0) {
            x = v;
            break;
        }
    int e = deg_in(b, x);
    Polynomial lcb = lead_coeff_in(b, x);
    Polynomial q(a.vars());
    Polynomial r = a;
    while (!r.is_zero() && deg_in(r, x) >= e) {
        Polynomial qc = poly_div_exact(lead_coeff_in(r, x), lcb); // throws if inexact
        int shift = deg_in(r, x) - e;
        Polynomial t = mul_power(qc, x, shift);
        q += t;
        r -= t * b;
        if (!r.is_zero() && deg_in(r, x) >= e + shift)
            throw DomainError("polynomial division leaves a remainder");
    }
    if (!r.is_zero())
        throw DomainError("polynomial division leaves a remainder");
    return q;
}

} // namespace hornred

#include "hornred/series.hpp"

#include <random>

#include "hornred/errors.hpp"

namespace hornred {

Real to_real(const Rational &q) {
    return Real(numerator(q)) / Real(denominator(q));
}

Real pochhammer_int(const Real &x, long n) {
    Real p = 1;
    if (n >= 0) {
        for (long t = 0; t < n; ++t)
            p *= x + t;
    } else {
        Real q = 1;
        for (long t = 1; t <= -n; ++t)
            q *= x - t;
        if (q == 0)
            throw EvaluationError("pochhammer_int: negative-order symbol undefined here");
        p /= q;
    }
    return p;
}

namespace {

Real factorial_real(long n) {
    Real f = 1;
    for (long t = 2; t <= n; ++t)
        f *= t;
    return f;
}

void check_params(const HornDefinition &def, std::size_t got) {
    if (got != def.params.size())
        throw DomainError(def.name + " takes " + std::to_string(def.params.size()) +
                          " parameters, got " + std::to_string(got));
}

} // namespace

Real series_coefficient(const HornDefinition &def, const std::vector<Real> &params,
                        long m1, long m2) {
    check_params(def, params.size());
    Real c = 1;
    for (std::size_t i = 0; i < def.factors.size(); ++i) {
        const PochhammerFactor &f = def.factors[i];
        const std::size_t pi = def.ctx->index_of(f.param);
        const Real p = pochhammer_int(params[pi], f.mu1 * m1 + f.mu2 * m2);
        if (f.role == FactorRole::Upper)
            c *= p;
        else
            c /= p;
    }
    return c / (factorial_real(m1) * factorial_real(m2));
}

Real series_coefficient_gamma(const HornDefinition &def, const std::vector<Real> &params,
                              long m1, long m2) {
    check_params(def, params.size());
    using boost::multiprecision::tgamma;
    Real c = 1;
    for (const PochhammerFactor &f : def.factors) {
        const Real x = params[def.ctx->index_of(f.param)];
        const long n = f.mu1 * m1 + f.mu2 * m2;
        const Real p = tgamma(x + n) / tgamma(x);
        if (f.role == FactorRole::Upper)
            c *= p;
        else
            c /= p;
    }
    return c / (tgamma(Real(m1 + 1)) * tgamma(Real(m2 + 1)));
}

Real coefficient_step_ratio(const HornDefinition &def, const std::vector<Real> &params,
                            long m1, long m2, int axis) {
    check_params(def, params.size());
    if (axis != 1 && axis != 2)
        throw DomainError("coefficient_step_ratio: axis must be 1 or 2");
    Real num = 1, den = 1;
    for (const PochhammerFactor &f : def.factors) {
        const int k = axis == 1 ? f.mu1 : f.mu2;
        if (k == 0)
            continue;
        const Real base = params[def.ctx->index_of(f.param)] + f.mu1 * m1 + f.mu2 * m2;
        // (x)_{n+k} / (x)_n with x + n = base.
        Real block = 1;
        if (k > 0)
            for (int t = 0; t < k; ++t)
                block *= base + t;
        else
            for (int t = 1; t <= -k; ++t)
                block *= base - t;
        const bool grows = (f.role == FactorRole::Upper) == (k > 0);
        (grows ? num : den) *= block;
    }
    den *= (axis == 1 ? m1 : m2) + 1;
    if (den == 0)
        throw EvaluationError(def.name + ": coefficient recurrence denominator vanishes at (" +
                              std::to_string(m1) + ", " + std::to_string(m2) + ")");
    return num / den;
}

SeriesValue eval_series(const HornDefinition &def, const std::vector<Rational> &params,
                        const Rational &z1, const Rational &z2, int max_order,
                        const Real &tail_tol) {
    check_params(def, params.size());
    std::vector<Real> pvals;
    pvals.reserve(params.size());
    for (const Rational &p : params)
        pvals.push_back(to_real(p));
    const Real x1 = to_real(z1), x2 = to_real(z2);

    const std::size_t stride = static_cast<std::size_t>(max_order) + 1;
    std::vector<Real> coeff(stride * stride, Real(0));
    auto C = [&](long i, long j) -> Real & {
        return coeff[static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(j)];
    };

    std::vector<Real> pow1(stride), pow2(stride);
    pow1[0] = pow2[0] = 1;
    for (std::size_t n = 1; n < stride; ++n) {
        pow1[n] = pow1[n - 1] * x1;
        pow2[n] = pow2[n - 1] * x2;
    }

    SeriesValue out;
    // Plain |term| shells decide `converged`; m1^2*m2^2-weighted shells decide
    // when it is safe to stop summing, so that the second-order theta moments
    // are as converged as the value itself.
    Real total_weight = 0, total_weighted = 0;
    Real shell_weight = 0, shell_weighted = 0;
    int quiet_plain = 0, quiet_weighted = 0;

    auto accumulate = [&](long i, long j) {
        const Real term = C(i, j) * pow1[static_cast<std::size_t>(i)] * pow2[static_cast<std::size_t>(j)];
        Real mi = 1;
        for (int a = 0; a <= 2; ++a) {
            Real mj = 1;
            for (int b = 0; b <= 2; ++b) {
                out.moments[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += mi * mj * term;
                mj *= j;
            }
            mi *= i;
        }
        const Real wi = i > 1 ? Real(i * i) : Real(1);
        const Real wj = j > 1 ? Real(j * j) : Real(1);
        shell_weight += abs(term);
        shell_weighted += abs(term) * wi * wj;
    };

    C(0, 0) = 1;
    for (long n = 0; n <= max_order; ++n) {
        shell_weight = 0;
        shell_weighted = 0;
        // Column m1 = n (m2 = 0..n), then row m2 = n (m1 = 0..n-1).
        for (long j = 0; j <= n; ++j) {
            if (n > 0)
                C(n, j) = j == 0 ? C(n - 1, 0) * coefficient_step_ratio(def, pvals, n - 1, 0, 1)
                                 : C(n, j - 1) * coefficient_step_ratio(def, pvals, n, j - 1, 2);
            accumulate(n, j);
        }
        for (long i = 0; i < n; ++i) {
            C(i, n) = C(i, n - 1) * coefficient_step_ratio(def, pvals, i, n - 1, 2);
            accumulate(i, n);
        }
        total_weight += shell_weight;
        total_weighted += shell_weighted;
        if (total_weight > 0)
            out.tail_bound = shell_weight / total_weight;
        if (n > 0 && shell_weight <= total_weight * tail_tol) {
            if (++quiet_plain >= 2)
                out.converged = true;
        } else {
            quiet_plain = 0;
        }
        if (n > 0 && shell_weighted <= total_weighted * tail_tol) {
            if (++quiet_weighted >= 2 && out.converged)
                break;
        } else {
            quiet_weighted = 0;
        }
    }
    return out;
}

std::vector<SamplePoint> sample_points(const HornDefinition &def, int count, unsigned seed) {
    std::mt19937 rng(seed);
    // Parameters n/41 with n not a multiple of 41 are never integers, and no
    // integer shift of them can make an exceptional form integral (that
    // property is shift-invariant, so checking the base point settles it).
    std::uniform_int_distribution<int> par_num(-60, 60);
    std::uniform_int_distribution<int> z_num(10, 40);
    std::uniform_int_distribution<int> z_sign(0, 1);

    std::vector<SamplePoint> points;
    while (points.size() < static_cast<std::size_t>(count)) {
        SamplePoint pt;
        for (std::size_t i = 0; i < def.params.size(); ++i) {
            int n = 0;
            while (n == 0 || n % 41 == 0)
                n = par_num(rng);
            pt.params.emplace_back(n, 41);
        }
        if (!exceptional_check(def, pt.params).empty())
            continue;

        pt.z1 = Rational((z_sign(rng) ? 1 : -1) * z_num(rng), 400);
        pt.z2 = Rational((z_sign(rng) ? 1 : -1) * z_num(rng), 400);

        // Some loci pass through the origin (z1 - z2 for instance), so the
        // margin has to be attainable inside the sampling box; 1/50 keeps
        // every operator denominator far enough from zero for 100-digit
        // arithmetic while remaining easy to satisfy.
        bool clear = true;
        for (const Polynomial &locus : def.singular_locus) {
            const Rational v = locus.eval({pt.z1, pt.z2});
            if (abs(v) < Rational(1, 50)) {
                clear = false;
                break;
            }
        }
        if (!clear)
            continue;
        points.push_back(std::move(pt));
    }
    return points;
}

} // namespace hornred

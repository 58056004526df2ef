#pragma once

#include <array>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "hornred/catalog.hpp"

namespace hornred {

// High-precision float used for all numerical checks.  100 decimal digits
// leave a wide safety margin between series truncation error and the
// tolerances the checks assert.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<100>>;

Real to_real(const Rational &q);

// Pochhammer symbol (x)_n for integer n of either sign:
//   n >= 0:  (x)_n = x (x+1) ... (x+n-1)
//   n <  0:  (x)_n = 1 / ((x-1) (x-2) ... (x+n))
// so that (x)_{m+n} = (x)_m * (x+m)_n holds for all integers m, n.
Real pochhammer_int(const Real &x, long n);

// Series coefficient C(m1, m2) of z1^m1 z2^m2, evaluated directly from the
// factor list as a product of Pochhammer symbols over m1! m2!.
Real series_coefficient(const HornDefinition &def, const std::vector<Real> &params,
                        long m1, long m2);

// The same coefficient through Gamma-function ratios.  Slower and numerically
// independent of the product form; used to cross-check it.
Real series_coefficient_gamma(const HornDefinition &def, const std::vector<Real> &params,
                              long m1, long m2);

// Ratio C(m + e_axis) / C(m) of neighbouring series coefficients (axis is 1
// or 2).  This is the quantity the contiguous-coefficient recurrences are
// built from; eval_series chains it to fill its coefficient table.  Throws
// EvaluationError when the ratio denominator vanishes.
Real coefficient_step_ratio(const HornDefinition &def, const std::vector<Real> &params,
                            long m1, long m2, int axis);

// A truncated series evaluation together with its theta moments:
//   moments[i][j] = sum_{m1,m2} m1^i m2^j C(m1,m2) z1^m1 z2^m2
//                 = (theta1^i theta2^j F)(z1, z2)      for i, j <= 2.
struct SeriesValue {
    std::array<std::array<Real, 3>, 3> moments{};
    bool converged = false;
    // Relative contribution of the outermost border shell that was summed.
    Real tail_bound{0};

    const Real &value() const { return moments[0][0]; }
    const Real &theta(int i, int j) const { return moments.at(i).at(j); }
};

// Sum the double series over the square [0, max_order]^2.  `converged` is set
// once two consecutive border shells contribute less than a tail_tol relative
// tail (1e-14 by default); summation then continues until the shells are
// quiet under m1^2*m2^2 moment weighting as well, so the higher theta moments
// keep their accuracy.  Oracle-grade callers may pass a tighter tail_tol.
SeriesValue eval_series(const HornDefinition &def, const std::vector<Rational> &params,
                        const Rational &z1, const Rational &z2, int max_order = 200,
                        const Real &tail_tol = Real("1e-14"));

// One admissible numerical test point for a catalogued function: parameter
// values that trigger no exceptional combination (under any integer shift)
// and a (z1, z2) pair inside the common convergence region, bounded away
// from the singular locus.
struct SamplePoint {
    std::vector<Rational> params;
    Rational z1, z2;
};

// Deterministic pseudo-random admissible points: same seed, same points.
std::vector<SamplePoint> sample_points(const HornDefinition &def, int count, unsigned seed);

} // namespace hornred

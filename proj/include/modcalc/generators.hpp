#pragma once

#include <random>

#include "modcalc/coupling.hpp"

namespace modcalc {

/// Deterministic source of random algebraic data for the property
/// suites. All draws are exact rationals; sizes are kept small so the
/// suites stay fast.
class Gen {
public:
    explicit Gen(uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi); // inclusive
    Rational rational(int max_abs = 4);
    Rational nonzero_rational(int max_abs = 4);

    Polynomial polynomial(int nvars, int max_degree, int max_terms);
    Polynomial nonzero_polynomial(int nvars, int max_degree, int max_terms);
    ScalarFunction scalar(int nvars, int max_degree = 2, int max_terms = 3);
    /// Mostly polynomial, occasionally a genuine quotient.
    ScalarFunction scalar_with_denominator(int nvars, int max_degree = 2);
    ScalarFunction nonzero_scalar(int nvars, int max_degree = 2, int max_terms = 3);

    Chart chart(int dim) const;
    Tensor tensor(const Chart& c, Variance v, int grade, int max_degree = 2,
                  int max_terms = 2, FrameKind f = FrameKind::coordinate);

    AdaptedSplit split(int p, int q) const;
    ConnectionForm connection(const AdaptedSplit& split, int max_degree = 2);

    /// Vertical Poisson bivector from families that are Poisson by
    /// construction; Jacobi-checked before being returned.
    PoissonBivector vertical_poisson(const AdaptedSplit& split);
    /// Poisson bivector on a plain chart (constants, so(3)-type,
    /// decomposable), Jacobi-checked.
    PoissonBivector poisson_on_chart(const Chart& c);

    VolumeForm leafwise_volume(const AdaptedSplit& split, int max_degree = 2);
    VolumeForm transversal_volume(const AdaptedSplit& split, int max_degree = 2);
    VolumeForm top_volume(const Chart& c, int max_degree = 2);

    /// Valid geometric data: a flat Casimir-valued instance, optionally
    /// pushed through a random horizontal exact gauge to curve it.
    GeometricData geometric_data(int p, int q, bool allow_gauge_curving = true);

    /// Horizontal exact-gauge primitive mu in Span{dx_i}, degree <= 2.
    Tensor horizontal_primitive(const AdaptedSplit& split);

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// The so(3) linear Poisson bivector on a 3-coordinate chart.
Tensor so3_bivector(const Chart& c);
/// Fiberwise so(3) on the vertical factor of a split with q = 3.
Tensor so3_vertical_bivector(const AdaptedSplit& split);

} // namespace modcalc

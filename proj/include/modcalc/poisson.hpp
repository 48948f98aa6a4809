#pragma once

#include "modcalc/foliated.hpp"

namespace modcalc {

/// Bivector with a recorded Jacobi check.
struct PoissonBivector {
    Tensor bivector;
    bool jacobi_verified = false;

    /// Runs the Jacobi check and records the outcome.
    static PoissonBivector make(const Tensor& bivector);
};

/// Leaf-tangent Poisson bivector on an adapted chart.
struct PoissonFoliationData {
    PoissonBivector P;
    AdaptedSplit split;
    bool tangency_verified = false;

    static PoissonFoliationData make(const PoissonBivector& P,
                                     const AdaptedSplit& split);
};

/// [Pi,Pi] == 0, exactly.
bool jacobi_check(const Tensor& Pi);

/// Pi#(df).
Tensor hamiltonian_field(const PoissonBivector& Pi, const ScalarFunction& f);

/// Modular vector field: the unique Z with -i_Z(Omega) = d(i_Pi(Omega)).
Tensor modular_field(const PoissonBivector& Pi, const VolumeForm& Omega);

/// Independent coordinate-divergence route: Z^i = (1/g) sum_j d_j(g Pi^{ij}).
Tensor modular_field_divergence_oracle(const Tensor& Pi, const VolumeForm& Omega);

/// Z w.r.t. f*Omega equals Z w.r.t. Omega minus Pi#(df/f), exactly.
bool modular_transition_check(const PoissonBivector& Pi, const VolumeForm& Omega,
                              const ScalarFunction& f);

/// Pi#(df) == 0.
bool is_casimir(const PoissonBivector& P, const ScalarFunction& f);

/// [X, P] == 0.
bool is_poisson_field(const PoissonBivector& P, const Tensor& X);

/// Modular vector field of the Poisson foliation: the unique vertical Z
/// with -i_Z(tau_gamma) = d01(i_P(tau_gamma)). Independent of the
/// connection used to express it.
Tensor foliated_modular_field(const PoissonFoliationData& pf, const VolumeForm& tau,
                              const ConnectionForm& gamma);

/// Z_P^Omega == Z_P^tau - P#(lambda) for Omega = varsigma ^ tau_gamma.
bool mods_reeb_identity_check(const PoissonFoliationData& pf, const VolumeForm& tau,
                              const VolumeForm& varsigma, const ConnectionForm& gamma);

/// Membership in the de Rham-Casimir complex: beta is a pure (k,0)
/// adapted form whose frame contractions are Casimirs of P.
bool casimir_complex_member(const Tensor& beta, const PoissonFoliationData& pf,
                            const ConnectionForm& gamma);

/// theta in C^1 and d10(theta) == 0.
bool casimir_cocycle_check(const Tensor& theta, const PoissonFoliationData& pf,
                           const ConnectionForm& gamma);

} // namespace modcalc

#include "modcalc/poisson.hpp"

namespace modcalc {

PoissonBivector PoissonBivector::make(const Tensor& bivector) {
    PoissonBivector out{bivector, jacobi_check(bivector)};
    return out;
}

PoissonFoliationData PoissonFoliationData::make(const PoissonBivector& P,
                                                const AdaptedSplit& split) {
    split.validate();
    const int p = split.p();
    for (const auto& [idx, c] : P.bivector.components())
        for (int i : idx)
            if (i < p)
                throw NotLeafTangent("bivector has a horizontal component");
    return PoissonFoliationData{P, split, true};
}

bool jacobi_check(const Tensor& Pi) {
    if (!Pi.is_zero() && !Pi.is_homogeneous(2))
        throw FrameMismatch("Jacobi check needs a bivector");
    return schouten_bracket(Pi, Pi).is_zero();
}

Tensor hamiltonian_field(const PoissonBivector& Pi, const ScalarFunction& f) {
    return sharp(Pi.bivector, differential(Pi.bivector.chart(), f));
}

Tensor modular_field(const PoissonBivector& Pi, const VolumeForm& Omega) {
    const int n = Pi.bivector.dim();
    Omega.validate(n);
    Tensor w = exterior_derivative(interior_product(Pi.bivector, Omega.form));
    return solve_contraction(Omega, -w);
}

Tensor modular_field_divergence_oracle(const Tensor& Pi, const VolumeForm& Omega) {
    const int n = Pi.dim();
    Omega.validate(n);
    const ScalarFunction& g = Omega.coefficient();
    Tensor Z(Pi.chart(), Variance::multivector, FrameKind::coordinate);
    for (int i = 0; i < n; ++i) {
        ScalarFunction zi = ScalarFunction::zero(n);
        for (int j = 0; j < n; ++j) {
            ScalarFunction pij = Pi.component({i, j});
            if (pij.is_zero()) continue;
            zi = zi + (g * pij).derivative(j);
        }
        Z.add_component({i}, zi / g);
    }
    return Z;
}

bool modular_transition_check(const PoissonBivector& Pi, const VolumeForm& Omega,
                              const ScalarFunction& f) {
    if (f.is_zero())
        throw DegenerateVolume("transition factor is identically zero");
    VolumeForm scaled{Omega.form * f, Omega.samples};
    Tensor lhs = modular_field(Pi, scaled);
    Tensor rhs = modular_field(Pi, Omega) -
                 sharp(Pi.bivector, dlog(Pi.bivector.chart(), f));
    return lhs == rhs;
}

bool is_casimir(const PoissonBivector& P, const ScalarFunction& f) {
    return hamiltonian_field(P, f).is_zero();
}

bool is_poisson_field(const PoissonBivector& P, const Tensor& X) {
    return schouten_bracket(X, P.bivector).is_zero();
}

Tensor foliated_modular_field(const PoissonFoliationData& pf, const VolumeForm& tau,
                              const ConnectionForm& gamma) {
    if (!pf.tangency_verified)
        throw NotLeafTangent("Poisson foliation data not tangency-verified");
    const int p = gamma.split.p(), q = gamma.split.q(), n = gamma.split.dim();
    tau.validate(q);
    Tensor P_ad = pf.P.bivector.with_frame(FrameKind::adapted);
    Tensor rhs = d_components(interior_product(P_ad, tau.form), gamma).d01;
    // Solve -i_Z tau_gamma = rhs over the vertical frame.
    Tensor Z(gamma.split.chart(), Variance::multivector, FrameKind::adapted);
    const ScalarFunction& g = tau.coefficient();
    const MultiIndex& tidx = tau.form.components().begin()->first;
    for (int a = 0; a < q; ++a) {
        Tensor basis(gamma.split.chart(), Variance::multivector, FrameKind::adapted);
        basis.add_component({p + a}, ScalarFunction::one(n));
        Tensor bi = interior_product(basis, tau.form);
        if (bi.is_zero()) continue;
        const auto& [idx, coeff] = *bi.components().begin();
        Z.add_component({p + a}, -(rhs.component(idx) / coeff));
    }
    Tensor residual = interior_product(Z, tau.form) + rhs;
    if (!residual.is_zero())
        throw DegenerateVolume("foliated modular field equation has no solution");
    (void)g;
    (void)tidx;
    // Vertical fields read the same in both frames.
    return Z.with_frame(FrameKind::coordinate);
}

bool mods_reeb_identity_check(const PoissonFoliationData& pf, const VolumeForm& tau,
                              const VolumeForm& varsigma, const ConnectionForm& gamma) {
    // Nonvanishing of the product volume is inherited from the factors;
    // the identity itself is exact and needs no sample points.
    Tensor omega_ad = wedge(varsigma.form, tau.form);
    VolumeForm Omega{to_coordinate_frame(omega_ad, gamma), {}};
    Tensor lhs = modular_field(pf.P, Omega);
    Tensor lambda = reeb_form(varsigma, gamma);
    Tensor P_ad = pf.P.bivector.with_frame(FrameKind::adapted);
    Tensor correction = form_into_multivector(lambda, P_ad).with_frame(FrameKind::coordinate);
    Tensor rhs = foliated_modular_field(pf, tau, gamma) - correction;
    return lhs == rhs;
}

bool casimir_complex_member(const Tensor& beta, const PoissonFoliationData& pf,
                            const ConnectionForm& gamma) {
    const int p = gamma.split.p();
    Tensor ad = to_adapted_frame(beta, gamma);
    for (const auto& [idx, c] : ad.components()) {
        for (int i : idx)
            if (i >= p)
                throw WrongBidegree("de Rham-Casimir members are pure (k,0) forms");
        if (!is_casimir(pf.P, c)) return false;
    }
    return true;
}

bool casimir_cocycle_check(const Tensor& theta, const PoissonFoliationData& pf,
                           const ConnectionForm& gamma) {
    Tensor ad = to_adapted_frame(theta, gamma);
    if (!ad.is_zero() && !ad.is_homogeneous(1))
        throw WrongBidegree("cocycle check takes a (1,0) form");
    if (!casimir_complex_member(ad, pf, gamma)) return false;
    return d_components(ad, gamma).d10.is_zero();
}

} // namespace modcalc

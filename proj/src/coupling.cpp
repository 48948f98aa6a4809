#include "modcalc/coupling.hpp"

namespace modcalc {

namespace {

// Horizontal-horizontal block Pi^{ij}, i,j < p, as an antisymmetric matrix.
FunMatrix horizontal_block(const Tensor& Pi, const AdaptedSplit& split) {
    const int p = split.p(), n = split.dim();
    FunMatrix A(p, p, n);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if (i != j) A.at(i, j) = Pi.component({i, j});
    return A;
}

ScalarFunction evaluate_or_zero(const ScalarFunction& f, const Point& pt) {
    return ScalarFunction::constant(f.nvars(), f.evaluate(pt));
}

} // namespace

void GeometricData::validate() const {
    gamma.validate();
    const int p = gamma.split.p();
    if (p % 2 != 0)
        throw DegenerateCouplingForm("horizontal rank must be even");
    if (sigma.frame() != FrameKind::adapted || sigma.variance() != Variance::form)
        throw FrameMismatch("coupling form must be an adapted 2-form");
    for (const auto& [idx, c] : sigma.components()) {
        if (idx.size() != 2 || idx[0] >= p || idx[1] >= p)
            throw WrongBidegree("coupling form must be pure bidegree (2,0)");
    }
    if (!(P.split == gamma.split))
        throw FrameMismatch("geometric data pieces live on different splits");
}

FunMatrix GeometricData::sigma_matrix() const {
    const int p = gamma.split.p(), n = gamma.split.dim();
    FunMatrix S(p, p, n);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if (i != j) S.at(i, j) = sigma.component({i, j});
    return S;
}

CouplingTest is_coupling(const PoissonBivector& Pi, const AdaptedSplit& split,
                         const std::vector<Point>& samples) {
    split.validate();
    FunMatrix A = horizontal_block(Pi.bivector, split);
    ScalarFunction det = A.determinant();
    CouplingTest out;
    out.generically = !det.is_zero();
    out.at_samples = out.generically;
    for (const Point& pt : samples) {
        try {
            if (det.evaluate(pt) == 0) out.at_samples = false;
        } catch (const PoleAtPoint&) {
            out.at_samples = false;
        }
    }
    return out;
}

GeometricData decompose(const PoissonBivector& Pi, const AdaptedSplit& split) {
    split.validate();
    const int p = split.p(), q = split.q(), n = split.dim();
    FunMatrix A = horizontal_block(Pi.bivector, split);
    if (A.determinant().is_zero())
        throw NotCoupling("horizontal block of the bivector is degenerate");
    FunMatrix invA = A.inverse();

    // Horizontal frame h_j = sum_i invA[j][i] Pi#(dx_i) has x-part
    // d/dx_j; the leftover y-part determines Gamma.
    ConnectionForm gamma;
    gamma.split = split;
    gamma.gamma.assign(p, std::vector<ScalarFunction>(q, ScalarFunction::zero(n)));
    for (int j = 0; j < p; ++j)
        for (int a = 0; a < q; ++a) {
            ScalarFunction acc = ScalarFunction::zero(n);
            for (int i = 0; i < p; ++i) {
                ScalarFunction pia = Pi.bivector.component({i, p + a});
                if (!pia.is_zero()) acc = acc + invA.at(j, i) * pia;
            }
            gamma.gamma[j][a] = -acc;
        }

    // Coupling form: sigma(h_i,h_j) = -(A^{-1})_{ij}.
    Tensor sigma(split.chart(), Variance::form, FrameKind::adapted);
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            sigma.add_component({i, j}, -invA.at(i, j));

    BigradedTensor big = bigrade(Pi.bivector, gamma);
    Tensor mixed = big.part(1, 1);
    if (!mixed.is_zero())
        throw NotCoupling("bivector has a mixed (1,1) part in its own frame");
    Tensor P = big.part(0, 2).with_frame(FrameKind::coordinate);

    GeometricData gd{std::move(gamma), std::move(sigma),
                     PoissonFoliationData::make(
                         PoissonBivector{P, Pi.jacobi_verified}, split)};
    return gd;
}

PoissonBivector reconstruct(const GeometricData& gd) {
    gd.validate();
    const AdaptedSplit& split = gd.gamma.split;
    const int p = split.p();
    FunMatrix S = gd.sigma_matrix();
    if (p > 0 && S.determinant().is_zero())
        throw DegenerateCouplingForm("coupling form is symbolically degenerate");
    Tensor Pi_ad(split.chart(), Variance::multivector, FrameKind::adapted);
    if (p > 0) {
        FunMatrix A = S.inverse();
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j)
                Pi_ad.add_component({i, j}, -A.at(i, j));
    }
    Pi_ad = Pi_ad + gd.P.P.bivector.with_frame(FrameKind::adapted);
    Tensor Pi = to_coordinate_frame(Pi_ad, gd.gamma);
    return PoissonBivector::make(Pi);
}

CouplingReport structure_equations_check(const GeometricData& gd) {
    gd.validate();
    const AdaptedSplit& split = gd.gamma.split;
    const int p = split.p();
    const Tensor& P = gd.P.P.bivector;
    const Chart chart = split.chart();
    CouplingReport rep;

    rep.se0_ok = true;
    for (int i = 0; i < p; ++i) {
        Tensor r = schouten_bracket(gd.gamma.horizontal_field(i), P);
        if (!r.is_zero()) {
            rep.se0_ok = false;
            rep.residuals.emplace_back("SE0 [h_" + std::to_string(i + 1) + ", P]", r);
        }
    }

    rep.se1_ok = true;
    Curvature R = curvature(gd.gamma);
    for (const auto& [key, Rij] : R) {
        ScalarFunction sij = gd.sigma.component({key.first, key.second});
        Tensor expected = -sharp(P, differential(chart, sij));
        Tensor r = Rij - expected;
        if (!r.is_zero()) {
            rep.se1_ok = false;
            rep.residuals.emplace_back(
                "SE1 R(h_" + std::to_string(key.first + 1) + ",h_" +
                    std::to_string(key.second + 1) + ") + P#d(sigma..)", r);
        }
    }

    Tensor d10sigma = d_components(gd.sigma, gd.gamma).d10;
    rep.se2_ok = d10sigma.is_zero();
    if (!rep.se2_ok) rep.residuals.emplace_back("SE2 d10(sigma)", d10sigma);

    PoissonBivector Pi = reconstruct(gd);
    rep.jacobi_ok = Pi.jacobi_verified;
    if (!rep.jacobi_ok)
        rep.residuals.emplace_back("[Pi, Pi]", schouten_bracket(Pi.bivector, Pi.bivector));
    return rep;
}

namespace {

Tensor tensor_power(const Tensor& t, int k) {
    Tensor out = Tensor::scalar(t.chart(), t.variance(), t.frame(),
                                ScalarFunction::one(t.dim()));
    for (int i = 0; i < k; ++i) out = wedge(out, t);
    return out;
}

} // namespace

ModularDecomposition modular_decomposition_check(const GeometricData& gd,
                                                 const VolumeForm& tau) {
    gd.validate();
    const AdaptedSplit& split = gd.gamma.split;
    const int p = split.p(), q = split.q(), n = split.dim();
    const int l = gd.l();
    tau.validate(q);

    Tensor sigma_l = tensor_power(gd.sigma, l);
    Tensor omega_ad = wedge(sigma_l, tau.form);
    VolumeForm Omega{to_coordinate_frame(omega_ad, gd.gamma), {}};

    PoissonBivector Pi = reconstruct(gd);
    ModularDecomposition out{Tensor::zero(split.chart(), Variance::multivector),
                             Tensor::zero(split.chart(), Variance::multivector, FrameKind::adapted),
                             Tensor::zero(split.chart(), Variance::multivector, FrameKind::adapted)};
    out.Z = modular_field(Pi, Omega);

    BigradedTensor big = bigrade(out.Z, gd.gamma);
    out.Z10 = big.part(1, 0);
    out.Z01 = big.part(0, 1);
    bool only_two_parts = (big.assemble() - (out.Z10 + out.Z01)).is_zero();

    Tensor theta = divergence_form(tau, gd.gamma);
    Tensor expected10 =
        -sharp(Pi.bivector, theta.with_frame(FrameKind::coordinate));
    Tensor expected01 = foliated_modular_field(gd.P, tau, gd.gamma);
    out.components_match =
        only_two_parts &&
        (to_coordinate_frame(out.Z10, gd.gamma) == expected10) &&
        (out.Z01.with_frame(FrameKind::coordinate) == expected01);

    // Proof identity i_{Pi_H} sigma^l = -l sigma^(l-1).
    Tensor Pi_H = bigrade(Pi.bivector, gd.gamma).part(2, 0);
    Tensor lhs_pow = interior_product(Pi_H, sigma_l);
    Tensor rhs_pow = tensor_power(gd.sigma, l - 1 >= 0 ? l - 1 : 0) *
                     ScalarFunction::constant(n, -l);
    out.interior_power_identity = l == 0 ? lhs_pow.is_zero() : (lhs_pow == rhs_pow);

    // Proof identity i_{Pi_H} R = P#(Lambda), d01(sigma^l) = Lambda ^ sigma^l.
    Curvature R = curvature(gd.gamma);
    Tensor iR(split.chart(), Variance::multivector, FrameKind::coordinate);
    for (const auto& [key, Rij] : R) {
        ScalarFunction aij = Pi_H.component({key.first, key.second});
        if (!aij.is_zero()) iR = iR + Rij * aij;
    }
    if (l == 0) {
        out.curvature_identity = iR.is_zero();
    } else {
        VolumeForm sigma_l_vol{sigma_l, {}};
        Tensor d01_sl = d_components(sigma_l, gd.gamma).d01;
        std::vector<int> support(q);
        for (int a = 0; a < q; ++a) support[a] = p + a;
        Tensor Lambda = solve_wedge_factor(d01_sl, sigma_l_vol, support);
        Tensor P_ad = gd.P.P.bivector.with_frame(FrameKind::adapted);
        Tensor PL = form_into_multivector(Lambda, P_ad).with_frame(FrameKind::coordinate);
        out.curvature_identity = (iR == PL);
    }
    return out;
}

PoissonBivector gauge_transform(const PoissonBivector& Pi, const Tensor& mu,
                                const std::vector<Point>& samples) {
    const Chart& chart = Pi.bivector.chart();
    const int n = chart.dim();
    if (mu.variance() != Variance::form || mu.frame() != FrameKind::coordinate ||
        (!mu.is_zero() && !mu.is_homogeneous(1)))
        throw FrameMismatch("gauge primitive must be a coordinate 1-form");
    Tensor B = -exterior_derivative(mu);

    // Matrices: (Pi# alpha)^i = sum_j Pi^{ji} alpha_j; (B_flat X)_j = sum_i X^i B_{ij}.
    FunMatrix Pmat(n, n, n), Bmat(n, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Pmat.at(i, j) = Pi.bivector.component({j, i});
            Bmat.at(i, j) = B.component({j, i});
        }
    FunMatrix E = FunMatrix::identity(n, n) - Bmat * Pmat;
    ScalarFunction det = E.determinant();
    if (det.is_zero())
        throw GaugeNotInvertible("Id - B_flat Pi_sharp is symbolically singular");
    for (const Point& pt : samples) {
        try {
            if (det.evaluate(pt) == 0)
                throw GaugeSingularAtSample("gauge map singular at a sample point");
        } catch (const PoleAtPoint&) {
            throw GaugeSingularAtSample("gauge determinant has a pole at a sample point");
        }
    }
    FunMatrix Ptilde = Pmat * E.inverse();
    Tensor out(chart, Variance::multivector, FrameKind::coordinate);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            // Pi~^{ij} = Ptilde[j][i]; antisymmetry of the result is a
            // consequence of B being a 2-form, checked here exactly.
            ScalarFunction pij = Ptilde.at(j, i);
            ScalarFunction pji = Ptilde.at(i, j);
            if (!(pij + pji).is_zero())
                throw GaugeNotInvertible("gauge output failed antisymmetry");
            out.add_component({i, j}, pij);
        }
    return PoissonBivector::make(out);
}

bool gauge_relations_check(const PoissonBivector& Pi, const Tensor& mu,
                           const VolumeForm& tau, const AdaptedSplit& split,
                           const std::vector<Point>& samples) {
    const Chart chart = split.chart();
    const int p = split.p();
    for (const auto& [idx, c] : mu.components())
        if (idx.size() != 1 || idx[0] >= p)
            throw WrongBidegree("gauge primitive must lie in the horizontal coframe");
    PoissonBivector Pi_t = gauge_transform(Pi, mu, samples);
    GeometricData gd = decompose(Pi, split);
    GeometricData gd_t = decompose(Pi_t, split);
    const Tensor& P = gd.P.P.bivector;

    // P is invariant under horizontal exact gauges.
    if (gd_t.P.P.bivector != P) return false;

    // Connection rule: (Gamma - Gamma~)_i^a d/dy_a = P#d(mu(h_i)).
    for (int i = 0; i < p; ++i) {
        ScalarFunction mui = mu.component({i});
        Tensor rhs = sharp(P, differential(chart, mui));
        Tensor lhs(chart, Variance::multivector, FrameKind::coordinate);
        for (int a = 0; a < split.q(); ++a)
            lhs.add_component({p + a},
                              gd.gamma.gamma[i][a] - gd_t.gamma.gamma[i][a]);
        if (lhs != rhs) return false;
    }

    // Divergence-form rule: theta~(h_i) - theta(h_i) = L_{Z_P^tau} mu(h_i).
    Tensor theta = divergence_form(tau, gd.gamma);
    Tensor theta_t = divergence_form(tau, gd_t.gamma);
    Tensor Z = foliated_modular_field(gd.P, tau, gd.gamma);
    for (int i = 0; i < p; ++i) {
        ScalarFunction mui = mu.component({i});
        ScalarFunction lhs = theta_t.component({i}) - theta.component({i});
        ScalarFunction rhs = pairing(differential(chart, mui), Z);
        if (lhs != rhs) return false;
    }
    return true;
}

UnimodularityCertificate unimodularity_certificate(const GeometricData& gd,
                                                   const VolumeForm& tau) {
    gd.validate();
    UnimodularityCertificate out;
    out.zp_zero = foliated_modular_field(gd.P, tau, gd.gamma).is_zero();
    out.theta_closed_zero = d_components(tau.form, gd.gamma).d10.is_zero();
    out.verdict = out.certified() ? "unimodular-certified" : "inconclusive";
    return out;
}

bool hamiltonian_certificate(const PoissonBivector& Pi, const VolumeForm& Omega,
                             const ScalarFunction& cert) {
    return modular_field(Pi, Omega) == hamiltonian_field(Pi, cert);
}

bool hamiltonian_certificate(const PoissonBivector& Pi, const VolumeForm& Omega,
                             const Tensor& cert_one_form) {
    if (!cert_one_form.is_zero() && !cert_one_form.is_homogeneous(1))
        throw NotClosedCertificate("certificate must be a 1-form");
    if (!exterior_derivative(cert_one_form).is_zero())
        throw NotClosedCertificate("certificate 1-form is not closed");
    return modular_field(Pi, Omega) == sharp(Pi.bivector, cert_one_form);
}

FlatCouplingResult flat_coupling_build(const AdaptedSplit& split, const Tensor& sigma0,
                                       const PoissonBivector& P,
                                       const std::vector<Point>& nondegeneracy_samples,
                                       const std::optional<LeafData>& leaf) {
    split.validate();
    GeometricData gd{ConnectionForm::flat(split), sigma0,
                     PoissonFoliationData::make(P, split)};
    gd.validate();

    // C^2 membership: every coefficient of sigma0 must be Casimir.
    for (const auto& [idx, c] : sigma0.components())
        if (!is_casimir(P, c))
            throw NotCasimirValued("coupling form coefficient is not a Casimir");

    FunMatrix S = gd.sigma_matrix();
    ScalarFunction det = S.determinant();
    if (split.p() > 0 && det.is_zero())
        throw DegenerateCouplingForm("sigma0 is symbolically degenerate");
    for (const Point& pt : nondegeneracy_samples) {
        try {
            if (det.evaluate(pt) == 0)
                throw DegenerateCouplingForm("sigma0 degenerate at a sample point");
        } catch (const PoleAtPoint&) {
            throw DegenerateCouplingForm("sigma0 has a pole at a sample point");
        }
    }

    FlatCouplingResult out{gd, structure_equations_check(gd)};

    if (leaf) {
        // Transverse Poisson structure vanishes on the leaf.
        for (const Point& pt : leaf->leaf_samples) {
            for (const auto& [idx, c] : P.bivector.components())
                if (!evaluate_or_zero(c, pt).is_zero())
                    throw LeafConditionViolated("P does not vanish at a leaf point");
            // sigma - pi*omega vanishes on the leaf.
            Tensor diff = sigma0 - leaf->base_form;
            for (const auto& [idx, c] : diff.components())
                if (!evaluate_or_zero(c, pt).is_zero())
                    throw LeafConditionViolated("sigma - pi*omega nonzero at a leaf point");
            // Rank condition: the horizontal bundle has full rank there.
            try {
                if (det.evaluate(pt) == 0)
                    throw LeafConditionViolated("horizontal bundle drops rank at a leaf point");
            } catch (const PoleAtPoint&) {
                throw LeafConditionViolated("coupling form undefined at a leaf point");
            }
        }
    }
    return out;
}

} // namespace modcalc

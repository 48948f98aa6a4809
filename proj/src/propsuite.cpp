#include "modcalc/propsuite.hpp"

#include <functional>
#include <map>

#include "modcalc/generators.hpp"

namespace modcalc {

namespace {

struct Ctx {
    Gen gen;
    int failures = 0;
    std::string detail;

    explicit Ctx(uint64_t seed) : gen(seed) {}

    void check(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            if (detail.empty()) detail = what;
        }
    }
};

using SuiteFn = std::function<void(Ctx&, int)>;

// ---------------------------------------------------------------- ratfun

void suite_ratfun_axioms(Ctx& c, int cases) {
    for (int k = 0; k < cases; ++k) {
        int n = c.gen.uniform(1, 5);
        ScalarFunction a = c.gen.scalar_with_denominator(n, 4);
        ScalarFunction b = c.gen.scalar_with_denominator(n, 4);
        ScalarFunction d = c.gen.scalar_with_denominator(n, 4);
        c.check(is_identically_zero((a + b) + d - (a + (b + d))), "associativity");
        c.check(is_identically_zero(a * (b + d) - (a * b + a * d)), "distributivity");
        c.check(is_identically_zero(a + b - (b + a)), "commutativity");
        if (!a.is_zero())
            c.check(is_identically_zero(a * (ScalarFunction::one(n) / a) -
                                        ScalarFunction::one(n)),
                    "multiplicative inverse");
    }
}

void suite_ratfun_canonical(Ctx& c, int cases) {
    for (int k = 0; k < cases; ++k) {
        int n = c.gen.uniform(1, 5);
        ScalarFunction f = c.gen.scalar_with_denominator(n, 3);
        ScalarFunction again(f.num(), f.den());
        c.check(again == f, "normalization is idempotent");
        ScalarFunction g = c.gen.nonzero_scalar(n, 2, 2);
        c.check((f * g) / g == f, "cancel common factor");
    }
}

void suite_ratfun_derivation(Ctx& c, int cases) {
    for (int k = 0; k < cases; ++k) {
        int n = c.gen.uniform(1, 5);
        int v = c.gen.uniform(0, n - 1);
        ScalarFunction f = c.gen.scalar_with_denominator(n, 3);
        ScalarFunction g = c.gen.scalar_with_denominator(n, 3);
        ScalarFunction lhs = (f * g).derivative(v);
        ScalarFunction rhs = f * g.derivative(v) + g * f.derivative(v);
        c.check(lhs == rhs, "Leibniz rule for d/dx");
    }
}

void suite_ratfun_eval(Ctx& c, int cases) {
    for (int k = 0; k < cases; ++k) {
        int n = c.gen.uniform(1, 4);
        ScalarFunction f = c.gen.scalar_with_denominator(n, 3);
        ScalarFunction g = c.gen.scalar_with_denominator(n, 3);
        Point pt;
        for (int i = 0; i < n; ++i) pt.push_back(c.gen.rational(3));
        try {
            Rational fv = f.evaluate(pt), gv = g.evaluate(pt);
            c.check((f + g).evaluate(pt) == fv + gv, "eval of sum");
            c.check((f * g).evaluate(pt) == fv * gv, "eval of product");
            if (gv != 0 && !g.is_zero())
                c.check((f / g).evaluate(pt) == fv / gv, "eval of quotient");
        } catch (const PoleAtPoint&) {
            // a pole at the sample point: nothing to compare
        }
    }
}

// -------------------------------------------------------------- exterior

void suite_d_squared(Ctx& c, int cases) {
    for (int k = 0; k < cases; ++k) {
        int n = c.gen.uniform(2, 5);
        Chart ch = c.gen.chart(n);
        int grade = c.gen.uniform(0, std::min(3, n));
        Tensor beta = c.gen.tensor(ch, Variance::form, grade, 3, 2);
        c.check(exterior_derivative(exterior_derivative(beta)).is_zero(), "d^2 = 0");
    }
}

void suite_dlog_closed(Ctx& c, int cases) {
    for (int k = 0; k < cases; ++k) {
        int n = c.gen.uniform(1, 4);
        Chart ch = c.gen.chart(n);
        ScalarFunction f = c.gen.nonzero_scalar(n, 3, 3);
        ScalarFunction g = c.gen.nonzero_scalar(n, 2, 2);
        c.check(exterior_derivative(dlog(ch, f)).is_zero(), "d(dlog f) = 0");
        Tensor lhs = dlog(ch, f * g);
        Tensor rhs = dlog(ch, f) + dlog(ch, g);
        c.check(lhs == rhs, "dlog(fg) = dlog f + dlog g");
    }
}

void suite_interior_formula(Ctx& c, int cases) {
    for (int k = 0; k < cases; ++k) {
        int n = c.gen.uniform(2, 5);
        Chart ch = c.gen.chart(n);
        int ga = c.gen.uniform(0, std::min(3, n));
        Tensor A = c.gen.tensor(ch, Variance::multivector, ga, 2, 2);
        Tensor alpha = c.gen.tensor(ch, Variance::form, 1, 2, 2);
        Tensor beta = c.gen.tensor(ch, Variance::form, c.gen.uniform(0, std::min(3, n)), 2, 2);
        Tensor lhs = interior_product(A, wedge(alpha, beta));
        Tensor rhs = wedge(alpha, interior_product(A, beta)) -
                     interior_product(form_into_multivector(alpha, A), beta);
        if (ga % 2 != 0) rhs = -rhs;
        c.check(lhs == rhs, "i_A(alpha^beta) identity");
    }
}

void suite_schouten(Ctx& c, int cases) {
    for (int k = 0; k < cases; ++k) {
        int n = c.gen.uniform(2, 5);
        Chart ch = c.gen.chart(n);
        int ga = c.gen.uniform(1, std::min(3, n));
        int gb = c.gen.uniform(0, std::min(3, n));
        int gc = c.gen.uniform(1, std::min(2, n));
        Tensor A = c.gen.tensor(ch, Variance::multivector, ga, 2, 2);
        Tensor B = c.gen.tensor(ch, Variance::multivector, gb, 2, 2);
        Tensor C = c.gen.tensor(ch, Variance::multivector, gc, 2, 2);

        // Graded antisymmetry.
        Tensor ab = schouten_bracket(A, B);
        Tensor ba = schouten_bracket(B, A);
        Tensor anti = ((ga - 1) * (gb - 1)) % 2 == 0 ? ab + ba : ab - ba;
        c.check(anti.is_zero(), "graded antisymmetry");

        // Graded Leibniz: [A, B ^ C] = [A,B] ^ C + (-1)^((|A|-1)|B|) B ^ [A,C].
        Tensor lhs = schouten_bracket(A, wedge(B, C));
        Tensor rhs = wedge(schouten_bracket(A, B), C);
        Tensor second = wedge(B, schouten_bracket(A, C));
        rhs = ((ga - 1) * gb) % 2 == 0 ? rhs + second : rhs - second;
        c.check((lhs - rhs).is_zero(), "graded Leibniz");

        // Graded Jacobi in Lichnerowicz form:
        // [A,[B,C]] = [[A,B],C] + (-1)^((|A|-1)(|B|-1)) [B,[A,C]].
        Tensor j1 = schouten_bracket(A, schouten_bracket(B, C));
        Tensor j2 = schouten_bracket(schouten_bracket(A, B), C);
        Tensor j3 = schouten_bracket(B, schouten_bracket(A, C));
        Tensor jac = ((ga - 1) * (gb - 1)) % 2 == 0 ? j1 - j2 - j3 : j1 - j2 + j3;
        c.check(jac.is_zero(), "graded Jacobi");
    }
}

void suite_lie_insertion(Ctx& c, int cases) {
    for (int k = 0; k < cases; ++k) {
        int n = c.gen.uniform(2, 5);
        Chart ch = c.gen.chart(n);
        Tensor X = c.gen.tensor(ch, Variance::multivector, 1, 2, 2);
        Tensor Y = c.gen.tensor(ch, Variance::multivector, 1, 2, 2);
        Tensor beta = c.gen.tensor(ch, Variance::form, 2, 2, 2);
        Tensor lhs = interior_product(schouten_bracket(X, Y), beta);
        Tensor rhs = lie_derivative(X, interior_product(Y, beta)) -
                     interior_product(Y, lie_derivative(X, beta));
        c.check(lhs == rhs, "i_[X,Y] = [L_X, i_Y]");
    }
}

void suite_sharp_flat(Ctx& c, int cases) {
    for (int k = 0; k < cases; ++k) {
        int n = 2 * c.gen.uniform(1, 2);
        Chart ch = c.gen.chart(n);
        // Random nondegenerate 2-form.
        Tensor sigma(ch, Variance::form, FrameKind::coordinate);
        FunMatrix S(n, n, n);
        for (int attempt = 0; attempt < 20; ++attempt) {
            sigma = Tensor(ch, Variance::form, FrameKind::coordinate);
            for (int i = 0; i < n / 2; ++i)
                sigma.add_component({2 * i, 2 * i + 1},
                                    ScalarFunction::constant(n, c.gen.nonzero_rational()));
            sigma = sigma + c.gen.tensor(ch, Variance::form, 2, 1, 1);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    S.at(i, j) = i == j ? ScalarFunction::zero(n) : sigma.component({i, j});
            if (!S.determinant().is_zero()) break;
        }
        if (S.determinant().is_zero()) continue;
        // Bivector with Pi# = -(sigma_flat)^{-1} on the coframe.
        FunMatrix A = S.inverse();
        Tensor Pi(ch, Variance::multivector, FrameKind::coordinate);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                Pi.add_component({i, j}, -A.at(i, j));
        for (int i = 0; i < n; ++i) {
            Tensor dxi(ch, Variance::form, FrameKind::coordinate);
            dxi.add_component({i}, ScalarFunction::one(n));
            Tensor back = flat(sigma, sharp(Pi, dxi));
            c.check(back == -dxi, "sigma_flat o Pi_sharp = -Id");
        }
    }
}

// -------------------------------------------------------------- foliated

AdaptedSplit random_split(Ctx& c, int pmin = 1) {
    int p = c.gen.uniform(pmin, 2);
    int q = c.gen.uniform(1, 3);
    return c.gen.split(p, q);
}

void suite_bigrade_roundtrip(Ctx& c, int cases) {
    for (int k = 0; k < cases; ++k) {
        AdaptedSplit s = random_split(c);
        ConnectionForm gamma = c.gen.connection(s);
        Chart ch = s.chart();
        Variance v = c.gen.uniform(0, 1) ? Variance::form : Variance::multivector;
        int grade = c.gen.uniform(0, std::min(3, s.dim()));
        Tensor T = c.gen.tensor(ch, v, grade, 2, 2);
        Tensor back = to_coordinate_frame(to_adapted_frame(T, gamma), gamma);
        c.check(back == T, "adapted frame round-trip");
        BigradedTensor big = bigrade(T, gamma);
        c.check(to_coordinate_frame(big.assemble(), gamma) == T,
                "bigraded parts reassemble");
    }
}

void suite_d01_squared(Ctx& c, int cases) {
    for (int k = 0; k < cases; ++k) {
        AdaptedSplit s = random_split(c);
        ConnectionForm gamma = c.gen.connection(s);
        Tensor beta = c.gen.tensor(s.chart(), Variance::form,
                                   c.gen.uniform(0, std::min(3, s.dim())), 2, 2);
        Tensor d01 = d_components(beta, gamma).d01;
        c.check(d_components(d01, gamma).d01.is_zero(), "(d01)^2 = 0");
    }
}

void suite_d_completeness(Ctx& c, int cases) {
    for (int k = 0; k < cases; ++k) {
        AdaptedSplit s = random_split(c);
        ConnectionForm gamma = c.gen.connection(s);
        Tensor beta = c.gen.tensor(s.chart(), Variance::form,
                                   c.gen.uniform(0, std::min(3, s.dim())), 2, 2);
        DComponents d = d_components(beta, gamma);
        Tensor total = to_coordinate_frame(d.d10 + d.d01 + d.d2m1, gamma);
        c.check(total == exterior_derivative(beta), "d10+d01+d2m1 = d");

        // d_{2,-1} = -i_R, and the flat case has them all zero.
        Curvature R = curvature(gamma);
        Tensor minus_iR = -curvature_insertion(R, gamma, beta);
        c.check(d.d2m1 == minus_iR, "d2m1 = -i_R");

        // (d10)^2 = i_R d01 + d01 i_R (the curvature Lie derivative).
        Tensor d10d10 = d_components(d.d10, gamma).d10;
        Tensor rhs = curvature_insertion(R, gamma, d_components(beta, gamma).d01) +
                     d_components(curvature_insertion(R, gamma, beta), gamma).d01;
        c.check(d10d10 == rhs, "(d10)^2 = L_R");
        if (is_flat(R))
            c.check(d10d10.is_zero(), "(d10)^2 = 0 for flat connections");
    }
}

void suite_theta1(Ctx& c, int cases) {
    for (int k = 0; k < cases; ++k) {
        AdaptedSplit s = random_split(c);
        ConnectionForm gamma = c.gen.connection(s);
        VolumeForm tau = c.gen.leafwise_volume(s);
        Tensor theta = divergence_form(tau, gamma);
        for (int i = 0; i < s.p(); ++i) {
            ScalarFunction lhs = theta.component({i});
            ScalarFunction rhs =
                leafwise_divergence(gamma.horizontal_field(i), tau, gamma);
            c.check(lhs == rhs, "theta(h_i) = div(h_i)");
        }
    }
}

void suite_theta2(Ctx& c, int cases) {
    for (int k = 0; k < cases; ++k) {
        int p = 2;
        int q = c.gen.uniform(1, 3);
        AdaptedSplit s = c.gen.split(p, q);
        ConnectionForm gamma = c.gen.connection(s);
        VolumeForm tau = c.gen.leafwise_volume(s);
        Tensor theta = divergence_form(tau, gamma);
        Tensor d10theta = d_components(theta, gamma).d10;
        Curvature R = curvature(gamma);
        for (const auto& [key, Rij] : R) {
            ScalarFunction lhs = d10theta.component({key.first, key.second});
            ScalarFunction rhs = leafwise_divergence(Rij, tau, gamma);
            c.check(lhs == rhs, "d10(theta)(h_i,h_j) = div(R(h_i,h_j))");
        }
    }
}

void suite_theta3(Ctx& c, int cases) {
    for (int k = 0; k < cases; ++k) {
        AdaptedSplit s = random_split(c);
        ConnectionForm gamma = c.gen.connection(s);
        VolumeForm tau = c.gen.leafwise_volume(s);
        ScalarFunction f = c.gen.nonzero_scalar(s.dim(), 2, 2);
        VolumeForm ftau{tau.form * f, {}};
        Tensor lhs = divergence_form(ftau, gamma);
        // d10 of a function, as a (1,0) form.
        Tensor f0 = Tensor::scalar(s.chart(), Variance::form, FrameKind::adapted, f);
        Tensor d10f = d_components(f0, gamma).d10;
        Tensor rhs = divergence_form(tau, gamma) +
                     d10f * (ScalarFunction::one(s.dim()) / f);
        c.check(lhs == rhs, "theta_{f tau} = theta_tau + d10(f)/f");
    }
}

void suite_reeb(Ctx& c, int cases) {
    for (int k = 0; k < cases; ++k) {
        AdaptedSplit s = random_split(c);
        ConnectionForm gamma = c.gen.connection(s);
        const int n = s.dim();

        // Pullback volume: coefficient depending on the base only.
        MultiIndex allx;
        for (int i = 0; i < s.p(); ++i) allx.push_back(i);
        Polynomial gx(n);
        Exponents e(n, 0);
        if (s.p() > 0) e[(size_t)c.gen.uniform(0, s.p() - 1)] = 2;
        gx.add_term(e, Rational(1));
        gx.add_term(Exponents(n, 0), Rational(1));
        VolumeForm pullback{Tensor::monomial(s.chart(), Variance::form,
                                             FrameKind::adapted, allx,
                                             ScalarFunction::from_polynomial(gx)),
                            {}};
        c.check(reeb_form(pullback, gamma).is_zero(), "pullback volume has lambda = 0");

        VolumeForm vs = c.gen.transversal_volume(s);
        Tensor lambda = reeb_form(vs, gamma);
        c.check(d_components(lambda, gamma).d01.is_zero(), "d01(lambda) = 0");

        // Rescaling by a base function leaves lambda unchanged.
        VolumeForm scaled{vs.form * ScalarFunction::from_polynomial(gx), {}};
        c.check(reeb_form(scaled, gamma) == lambda,
                "lambda invariant under base rescalings");
    }
}

// --------------------------------------------------------------- poisson

void suite_modular_oracle(Ctx& c, int cases) {
    for (int k = 0; k < cases; ++k) {
        int n = c.gen.uniform(2, 4);
        Chart ch = c.gen.chart(n);
        PoissonBivector Pi = c.gen.poisson_on_chart(ch);
        VolumeForm Omega = c.gen.top_volume(ch);
        Tensor by_definition = modular_field(Pi, Omega);
        Tensor by_divergence = modular_field_divergence_oracle(Pi.bivector, Omega);
        c.check(by_definition == by_divergence,
                "defining relation agrees with the divergence formula");
        c.check(is_poisson_field(Pi, by_definition), "modular field is Poisson");
    }
}

void suite_modular_transition(Ctx& c, int cases) {
    for (int k = 0; k < cases; ++k) {
        int n = c.gen.uniform(2, 4);
        Chart ch = c.gen.chart(n);
        PoissonBivector Pi = c.gen.poisson_on_chart(ch);
        VolumeForm Omega = c.gen.top_volume(ch);
        ScalarFunction f = c.gen.nonzero_scalar(n, 2, 2);
        c.check(modular_transition_check(Pi, Omega, f),
                "Z w.r.t. f Omega = Z - Pi#(df/f)");
    }
}

void suite_div_ham(Ctx& c, int cases) {
    for (int k = 0; k < cases; ++k) {
        AdaptedSplit s = random_split(c);
        ConnectionForm gamma = c.gen.connection(s);
        PoissonFoliationData pf =
            PoissonFoliationData::make(c.gen.vertical_poisson(s), s);
        VolumeForm tau = c.gen.leafwise_volume(s);
        Tensor Z = foliated_modular_field(pf, tau, gamma);
        ScalarFunction f = c.gen.scalar(s.dim(), 2, 2);
        ScalarFunction lhs = pairing(differential(s.chart(), f), Z);
        Tensor ham = hamiltonian_field(pf.P, f);
        ScalarFunction rhs = leafwise_divergence(ham, tau, gamma);
        c.check(lhs == rhs, "L_Z f = div(P# df)");
    }
}

void suite_mod_and_poiss(Ctx& c, int cases) {
    for (int k = 0; k < cases; ++k) {
        AdaptedSplit s = random_split(c);
        const int n = s.dim();
        ConnectionForm gamma = c.gen.connection(s);
        PoissonFoliationData pf =
            PoissonFoliationData::make(c.gen.vertical_poisson(s), s);
        VolumeForm tau = c.gen.leafwise_volume(s);
        Tensor Z = foliated_modular_field(pf, tau, gamma);

        // Projectable Poisson fields: Hamiltonian (vertical) ones, plus
        // base fields a(x) d/dx_i when P has no base dependence.
        Tensor X = hamiltonian_field(pf.P, c.gen.scalar(n, 2, 2));
        bool base_free = true;
        for (const auto& [idx, cf] : pf.P.bivector.components())
            for (int i = 0; i < s.p(); ++i)
                if (!cf.derivative(i).is_zero()) base_free = false;
        if (base_free && c.gen.uniform(0, 1) == 0) {
            Polynomial ax(n);
            Exponents e(n, 0);
            e[(size_t)c.gen.uniform(0, s.p() - 1)] = (unsigned)c.gen.uniform(0, 2);
            ax.add_term(e, c.gen.nonzero_rational());
            Tensor base(s.chart(), Variance::multivector, FrameKind::coordinate);
            base.add_component({c.gen.uniform(0, s.p() - 1)},
                               ScalarFunction::from_polynomial(ax));
            X = X + base;
        }
        if (!is_projectable(X, s) || !is_poisson_field(pf.P, X)) {
            c.check(false, "generator produced a non-Poisson test field");
            continue;
        }
        Tensor lhs = schouten_bracket(Z, X);
        ScalarFunction divX = leafwise_divergence(X, tau, gamma);
        Tensor rhs = hamiltonian_field(pf.P, divX);
        c.check(lhs == rhs, "[Z, X] = P# d(div X)");
    }
}

void suite_foliated_modular(Ctx& c, int cases) {
    for (int k = 0; k < cases; ++k) {
        AdaptedSplit s = random_split(c);
        ConnectionForm g1 = c.gen.connection(s);
        ConnectionForm g2 = c.gen.connection(s);
        PoissonFoliationData pf =
            PoissonFoliationData::make(c.gen.vertical_poisson(s), s);
        VolumeForm tau = c.gen.leafwise_volume(s);
        Tensor Z1 = foliated_modular_field(pf, tau, g1);
        Tensor Z2 = foliated_modular_field(pf, tau, g2);
        c.check(Z1 == Z2, "foliated modular field is connection-independent");
        c.check(is_poisson_field(pf.P, Z1), "foliated modular field is Poisson");

        // Restriction to a leaf is the leaf's own modular field.
        Point base;
        for (int i = 0; i < s.p(); ++i) base.push_back(c.gen.rational(2));
        try {
            Tensor Z_leaf = restrict_to_leaf(Z1, s, base);
            Tensor P_leaf = restrict_to_leaf(pf.P.bivector, s, base);
            Tensor tau_leaf =
                restrict_to_leaf(tau.form, s, base).with_frame(FrameKind::coordinate);
            VolumeForm tl{tau_leaf, {}};
            Tensor Z_expected =
                modular_field(PoissonBivector{P_leaf, true}, tl);
            c.check(Z_leaf.with_frame(FrameKind::coordinate) == Z_expected,
                    "restriction to a leaf is the leaf modular field");
        } catch (const PoleAtPoint&) {
            // the random leaf hit a pole of some coefficient: skip
        }
    }
}

void suite_mods_reeb(Ctx& c, int cases) {
    for (int k = 0; k < cases; ++k) {
        AdaptedSplit s = random_split(c);
        ConnectionForm gamma = c.gen.connection(s);
        PoissonFoliationData pf =
            PoissonFoliationData::make(c.gen.vertical_poisson(s), s);
        VolumeForm tau = c.gen.leafwise_volume(s);
        VolumeForm vs = c.gen.transversal_volume(s);
        c.check(mods_reeb_identity_check(pf, tau, vs, gamma),
                "Z_P^Omega = Z_P^tau - P#(lambda)");
    }
}

// -------------------------------------------------------------- coupling

void suite_coupling_roundtrip(Ctx& c, int cases) {
    for (int k = 0; k < cases; ++k) {
        int p = 2 * c.gen.uniform(1, 2);
        int q = c.gen.uniform(1, 3);
        GeometricData gd = c.gen.geometric_data(p, q);
        PoissonBivector Pi = reconstruct(gd);
        GeometricData back = decompose(Pi, gd.gamma.split);
        c.check(back.sigma == gd.sigma, "round-trip preserves sigma");
        c.check(back.P.P.bivector == gd.P.P.bivector, "round-trip preserves P");
        bool gammas_equal = true;
        for (int i = 0; i < gd.gamma.split.p(); ++i)
            for (int a = 0; a < gd.gamma.split.q(); ++a)
                if (back.gamma.gamma[i][a] != gd.gamma.gamma[i][a])
                    gammas_equal = false;
        c.check(gammas_equal, "round-trip preserves the connection");
        c.check(reconstruct(back).bivector == Pi.bivector,
                "reconstruct o decompose is the identity");
    }
}

void suite_coupling_modular(Ctx& c, int cases) {
    for (int k = 0; k < cases; ++k) {
        int p = c.gen.uniform(0, 4) < 3 ? 2 : 4;
        int q = c.gen.uniform(1, 3);
        GeometricData gd = c.gen.geometric_data(p, q);
        CouplingReport rep = structure_equations_check(gd);
        c.check(rep.all_ok(), "structure equations hold for generated data");
        if (!rep.all_ok()) continue;
        VolumeForm tau = c.gen.leafwise_volume(gd.gamma.split);
        ModularDecomposition md = modular_decomposition_check(gd, tau);
        c.check(md.components_match, "Z = (-Pi#theta, Z_P^tau)");
        c.check(md.interior_power_identity, "i_{Pi_H} sigma^l = -l sigma^{l-1}");
        c.check(md.curvature_identity, "i_{Pi_H} R = P# Lambda");
    }
}

void suite_gauge(Ctx& c, int cases) {
    for (int k = 0; k < cases; ++k) {
        int p = 2;
        int q = c.gen.uniform(1, 3);
        GeometricData gd = c.gen.geometric_data(p, q, /*allow_gauge_curving=*/false);
        PoissonBivector Pi = reconstruct(gd);
        Tensor mu = c.gen.horizontal_primitive(gd.gamma.split);
        try {
            PoissonBivector Pi_t = gauge_transform(Pi, mu, {});
            c.check(Pi_t.jacobi_verified, "gauge output satisfies Jacobi");
            if (!is_coupling(Pi_t, gd.gamma.split, {}).generically) continue;
            VolumeForm tau = c.gen.leafwise_volume(gd.gamma.split);
            c.check(gauge_relations_check(Pi, mu, tau, gd.gamma.split, {}),
                    "gauge transition rules for gamma and theta");
        } catch (const GaugeNotInvertible&) {
            continue; // a singular gauge draw is not a failure
        }
    }
}

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> reg = {
        {"ratfun_axioms", suite_ratfun_axioms},
        {"ratfun_canonical", suite_ratfun_canonical},
        {"ratfun_derivation", suite_ratfun_derivation},
        {"ratfun_eval", suite_ratfun_eval},
        {"d_squared", suite_d_squared},
        {"dlog_closed", suite_dlog_closed},
        {"interior_formula", suite_interior_formula},
        {"schouten", suite_schouten},
        {"lie_insertion", suite_lie_insertion},
        {"sharp_flat", suite_sharp_flat},
        {"bigrade_roundtrip", suite_bigrade_roundtrip},
        {"d01_squared", suite_d01_squared},
        {"d_completeness", suite_d_completeness},
        {"theta1", suite_theta1},
        {"theta2", suite_theta2},
        {"theta3", suite_theta3},
        {"reeb", suite_reeb},
        {"modular_oracle", suite_modular_oracle},
        {"modular_transition", suite_modular_transition},
        {"div_ham", suite_div_ham},
        {"mod_and_poiss", suite_mod_and_poiss},
        {"foliated_modular", suite_foliated_modular},
        {"mods_reeb", suite_mods_reeb},
        {"coupling_roundtrip", suite_coupling_roundtrip},
        {"coupling_modular", suite_coupling_modular},
        {"gauge", suite_gauge},
    };
    return reg;
}

} // namespace

SuiteResult run_property_suite(const std::string& name, uint64_t seed, int cases) {
    auto it = registry().find(name);
    if (it == registry().end())
        throw UnknownCheckName("property suite '" + name + "'");
    Ctx ctx(seed);
    it->second(ctx, cases);
    return SuiteResult{name, seed, cases, ctx.failures, ctx.detail};
}

std::vector<std::string> property_suite_names() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
}

} // namespace modcalc

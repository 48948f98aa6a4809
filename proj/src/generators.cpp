#include "modcalc/generators.hpp"

#include <cassert>

namespace modcalc {

int Gen::uniform(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng_);
}

Rational Gen::rational(int max_abs) {
    int num = uniform(-max_abs, max_abs);
    int den = uniform(1, 3);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational Gen::nonzero_rational(int max_abs) {
    Rational q = rational(max_abs);
    while (q == 0) q = rational(max_abs);
    return q;
}

Polynomial Gen::polynomial(int nvars, int max_degree, int max_terms) {
    Polynomial p(nvars);
    int terms = uniform(0, max_terms);
    for (int t = 0; t < terms; ++t) {
        Exponents e(nvars, 0);
        int deg = uniform(0, max_degree);
        for (int d = 0; d < deg; ++d) {
            if (nvars == 0) break;
            e[(size_t)uniform(0, nvars - 1)] += 1;
        }
        p.add_term(e, rational());
    }
    return p;
}

Polynomial Gen::nonzero_polynomial(int nvars, int max_degree, int max_terms) {
    Polynomial p = polynomial(nvars, max_degree, max_terms);
    while (p.is_zero()) p = polynomial(nvars, max_degree, max_terms);
    return p;
}

ScalarFunction Gen::scalar(int nvars, int max_degree, int max_terms) {
    return ScalarFunction::from_polynomial(polynomial(nvars, max_degree, max_terms));
}

ScalarFunction Gen::scalar_with_denominator(int nvars, int max_degree) {
    Polynomial num = polynomial(nvars, max_degree, 3);
    if (uniform(0, 3) == 0) {
        Polynomial den = nonzero_polynomial(nvars, 1, 2);
        return ScalarFunction(num, den);
    }
    return ScalarFunction::from_polynomial(num);
}

ScalarFunction Gen::nonzero_scalar(int nvars, int max_degree, int max_terms) {
    ScalarFunction f = scalar(nvars, max_degree, max_terms);
    while (f.is_zero()) f = scalar(nvars, max_degree, max_terms);
    return f;
}

Chart Gen::chart(int dim) const {
    Chart c;
    for (int i = 0; i < dim; ++i) c.coords.push_back("x" + std::to_string(i + 1));
    return c;
}

Tensor Gen::tensor(const Chart& c, Variance v, int grade, int max_degree,
                   int max_terms, FrameKind f) {
    Tensor t(c, v, f);
    const int n = c.dim();
    if (grade > n) return t;
    int comps = uniform(1, std::max(1, max_terms));
    for (int k = 0; k < comps; ++k) {
        MultiIndex idx;
        // Random strictly increasing grade-subset of 0..n-1.
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i) pool[i] = i;
        for (int g = 0; g < grade; ++g) {
            int pick = uniform(0, (int)pool.size() - 1);
            idx.push_back(pool[(size_t)pick]);
            pool.erase(pool.begin() + pick);
        }
        t.add_component(idx, scalar(n, max_degree, 2));
    }
    return t;
}

AdaptedSplit Gen::split(int p, int q) const {
    AdaptedSplit s;
    for (int i = 0; i < p; ++i) s.horizontal.push_back("x" + std::to_string(i + 1));
    for (int a = 0; a < q; ++a) s.vertical.push_back("y" + std::to_string(a + 1));
    return s;
}

ConnectionForm Gen::connection(const AdaptedSplit& split, int max_degree) {
    ConnectionForm g;
    g.split = split;
    const int n = split.dim();
    g.gamma.assign(split.p(), std::vector<ScalarFunction>(split.q(),
                                                          ScalarFunction::zero(n)));
    for (int i = 0; i < split.p(); ++i)
        for (int a = 0; a < split.q(); ++a)
            g.gamma[i][a] =
                ScalarFunction::from_polynomial(polynomial(n, max_degree, 2));
    return g;
}

Tensor so3_bivector(const Chart& c) {
    assert(c.dim() == 3);
    Tensor Pi(c, Variance::multivector, FrameKind::coordinate);
    Pi.add_component({1, 2}, ScalarFunction::variable(3, 0)); // x1 d2^d3
    Pi.add_component({2, 0}, ScalarFunction::variable(3, 1)); // x2 d3^d1
    Pi.add_component({0, 1}, ScalarFunction::variable(3, 2)); // x3 d1^d2
    return Pi;
}

Tensor so3_vertical_bivector(const AdaptedSplit& split) {
    assert(split.q() == 3);
    const int p = split.p(), n = split.dim();
    Tensor P(split.chart(), Variance::multivector, FrameKind::coordinate);
    P.add_component({p + 1, p + 2}, ScalarFunction::variable(n, p + 0));
    P.add_component({p + 2, p + 0}, ScalarFunction::variable(n, p + 1));
    P.add_component({p + 0, p + 1}, ScalarFunction::variable(n, p + 2));
    return P;
}

PoissonBivector Gen::vertical_poisson(const AdaptedSplit& split) {
    const int p = split.p(), q = split.q(), n = split.dim();
    Tensor P(split.chart(), Variance::multivector, FrameKind::coordinate);
    if (q >= 2) {
        switch (q >= 3 ? uniform(0, 2) : uniform(0, 1)) {
        case 0:
            break; // zero bivector
        case 1: {
            // Decomposable f d/dy_a ^ d/dy_b: Poisson for any f.
            int a = uniform(0, q - 1), b = uniform(0, q - 1);
            while (b == a) b = uniform(0, q - 1);
            P.add_component({p + a, p + b}, nonzero_scalar(n, 2, 2));
            break;
        }
        default: {
            // c(x) (1 + k r^2) * fiberwise so(3): the factor is Casimir.
            Tensor so3 = so3_vertical_bivector(split);
            ScalarFunction r2 = ScalarFunction::zero(n);
            for (int a = 0; a < 3; ++a) {
                ScalarFunction ya = ScalarFunction::variable(n, p + a);
                r2 = r2 + ya * ya;
            }
            ScalarFunction factor = ScalarFunction::constant(n, Rational(1)) +
                                    ScalarFunction::constant(n, rational(2)) * r2;
            if (p > 0 && uniform(0, 1) == 0) {
                Polynomial cx(n);
                Exponents e(n, 0);
                e[(size_t)uniform(0, p - 1)] = (unsigned)uniform(0, 1);
                cx.add_term(e, nonzero_rational());
                factor = factor * ScalarFunction::from_polynomial(cx);
            }
            P = so3 * factor;
            break;
        }
        }
    }
    PoissonBivector out{P, jacobi_check(P)};
    assert(out.jacobi_verified);
    return out;
}

PoissonBivector Gen::poisson_on_chart(const Chart& c) {
    const int n = c.dim();
    Tensor P(c, Variance::multivector, FrameKind::coordinate);
    int kind = uniform(0, n >= 3 ? 2 : 1);
    if (kind == 0 && n >= 2) {
        // Constant-coefficient bivector.
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (uniform(0, 1)) P.add_component({i, j},
                                                   ScalarFunction::constant(n, rational(2)));
        // Constant bivectors always satisfy Jacobi.
    } else if (kind == 1 && n >= 2) {
        int i = uniform(0, n - 1), j = uniform(0, n - 1);
        while (j == i) j = uniform(0, n - 1);
        P.add_component({i, j}, nonzero_scalar(n, 2, 2));
    } else if (n >= 3) {
        Tensor so3(c, Variance::multivector, FrameKind::coordinate);
        so3.add_component({1, 2}, ScalarFunction::variable(n, 0));
        so3.add_component({2, 0}, ScalarFunction::variable(n, 1));
        so3.add_component({0, 1}, ScalarFunction::variable(n, 2));
        ScalarFunction r2 = ScalarFunction::zero(n);
        for (int a = 0; a < 3; ++a) {
            ScalarFunction xa = ScalarFunction::variable(n, a);
            r2 = r2 + xa * xa;
        }
        P = so3 * (ScalarFunction::constant(n, Rational(1)) +
                   ScalarFunction::constant(n, rational(2)) * r2);
    }
    PoissonBivector out{P, jacobi_check(P)};
    assert(out.jacobi_verified);
    return out;
}

namespace {

// 1 + (positive combination of squares): never identically zero and
// positive at every rational point, so sample checks are trivial.
ScalarFunction positive_coefficient(Gen& gen, int nvars, int first, int count,
                                    int max_degree) {
    ScalarFunction f = ScalarFunction::constant(nvars, Rational(1));
    for (int k = 0; k < count; ++k) {
        if (gen.uniform(0, 1) == 0) continue;
        int v = first + gen.uniform(0, count - 1);
        ScalarFunction x = ScalarFunction::variable(nvars, v);
        ScalarFunction sq = x * x;
        if (max_degree >= 4 && gen.uniform(0, 2) == 0) sq = sq * sq;
        f = f + ScalarFunction::constant(nvars, Rational(gen.uniform(1, 3))) * sq;
    }
    return f;
}

} // namespace

VolumeForm Gen::leafwise_volume(const AdaptedSplit& split, int max_degree) {
    const int p = split.p(), q = split.q(), n = split.dim();
    MultiIndex all;
    for (int a = 0; a < q; ++a) all.push_back(p + a);
    ScalarFunction g = positive_coefficient(*this, n, 0, n, max_degree);
    VolumeForm out{Tensor::monomial(split.chart(), Variance::form,
                                    FrameKind::adapted, all, g),
                   {}};
    return out;
}

VolumeForm Gen::transversal_volume(const AdaptedSplit& split, int max_degree) {
    const int p = split.p(), n = split.dim();
    MultiIndex all;
    for (int i = 0; i < p; ++i) all.push_back(i);
    ScalarFunction g = positive_coefficient(*this, n, 0, n, max_degree);
    VolumeForm out{Tensor::monomial(split.chart(), Variance::form,
                                    FrameKind::adapted, all, g),
                   {}};
    return out;
}

VolumeForm Gen::top_volume(const Chart& c, int max_degree) {
    const int n = c.dim();
    MultiIndex all;
    for (int i = 0; i < n; ++i) all.push_back(i);
    ScalarFunction g = positive_coefficient(*this, n, 0, n, max_degree);
    return VolumeForm{
        Tensor::monomial(c, Variance::form, FrameKind::coordinate, all, g), {}};
}

Tensor Gen::horizontal_primitive(const AdaptedSplit& split) {
    const int p = split.p(), n = split.dim();
    Tensor mu(split.chart(), Variance::form, FrameKind::coordinate);
    int picks = uniform(1, std::min(2, p));
    for (int k = 0; k < picks; ++k)
        mu.add_component({uniform(0, p - 1)},
                         ScalarFunction::from_polynomial(polynomial(n, 2, 1)));
    return mu;
}

GeometricData Gen::geometric_data(int p, int q, bool allow_gauge_curving) {
    assert(p % 2 == 0 && p >= 2 && q >= 1);
    AdaptedSplit s = split(p, q);
    const int n = s.dim();

    // Flat base instance: Gamma = 0, P free of the base coordinates so
    // SE0 holds, sigma Casimir-valued with no base dependence so SE1 and
    // SE2 hold trivially.
    PoissonBivector P = vertical_poisson(s);
    {
        bool xdep = false;
        for (const auto& [idx, c] : P.bivector.components())
            for (int i = 0; i < p; ++i)
                if (!c.derivative(i).is_zero()) xdep = true;
        if (xdep) {
            Tensor Py(s.chart(), Variance::multivector, FrameKind::coordinate);
            if (q >= 3) {
                Py = so3_vertical_bivector(s);
            } else if (q >= 2) {
                Polynomial f(n);
                Exponents e(n, 0);
                e[(size_t)(p + uniform(0, q - 1))] = (unsigned)uniform(0, 2);
                f.add_term(e, nonzero_rational());
                Py.add_component({p + 0, p + 1}, ScalarFunction::from_polynomial(f));
            }
            P = PoissonBivector{Py, jacobi_check(Py)};
        }
    }

    Tensor sigma(s.chart(), Variance::form, FrameKind::adapted);
    for (int k = 0; k < p / 2; ++k) {
        ScalarFunction coeff = ScalarFunction::constant(n, nonzero_rational(3));
        if (q >= 3 && uniform(0, 1) == 0) {
            // Casimir factor 1 + r^2 for the so(3)-type fibers.
            ScalarFunction r2 = ScalarFunction::zero(n);
            for (int a = 0; a < 3; ++a) {
                ScalarFunction ya = ScalarFunction::variable(n, p + a);
                r2 = r2 + ya * ya;
            }
            if (is_casimir(P, r2)) coeff = coeff * (ScalarFunction::constant(n, Rational(1)) + r2);
        }
        sigma.add_component({2 * k, 2 * k + 1}, coeff);
    }

    GeometricData gd{ConnectionForm::flat(s), sigma, PoissonFoliationData::make(P, s)};

    if (allow_gauge_curving && uniform(0, 1) == 0) {
        // Curve it through a horizontal exact gauge; validity of the
        // result is automatic because gauge transforms of coupling
        // Poisson structures remain coupling.
        PoissonBivector Pi = reconstruct(gd);
        for (int attempt = 0; attempt < 5; ++attempt) {
            Tensor mu = horizontal_primitive(s);
            try {
                PoissonBivector Pi_t = gauge_transform(Pi, mu, {});
                CouplingTest ct = is_coupling(Pi_t, s, {});
                if (!ct.generically) continue;
                return decompose(Pi_t, s);
            } catch (const Error&) {
                continue;
            }
        }
    }
    return gd;
}

} // namespace modcalc

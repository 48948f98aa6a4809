#include <doctest.h>

#include "modcalc/generators.hpp"
#include "modcalc/propsuite.hpp"
#include "modcalc/parser.hpp"

using namespace modcalc;

namespace {

const Chart XY{{"x", "y"}};
const Chart XYZ{{"x", "y", "z"}};

ScalarFunction sf(const std::string& text, const Chart& c = XYZ) {
    return parse_scalar(text, c.coords);
}

Tensor form(const Chart& c, MultiIndex idx, const std::string& coeff) {
    return Tensor::monomial(c, Variance::form, FrameKind::coordinate, idx,
                            parse_scalar(coeff, c.coords));
}

Tensor mv(const Chart& c, MultiIndex idx, const std::string& coeff) {
    return Tensor::monomial(c, Variance::multivector, FrameKind::coordinate, idx,
                            parse_scalar(coeff, c.coords));
}

// Pi = (1/2) dz ^ (x dx + y dy) on (x, y, z).
Tensor r3_bivector() {
    Tensor Pi(XYZ, Variance::multivector, FrameKind::coordinate);
    Pi.add_component({2, 0}, sf("x/2"));
    Pi.add_component({2, 1}, sf("y/2"));
    return Pi;
}

VolumeForm euclidean(const Chart& c) {
    MultiIndex all;
    for (int i = 0; i < c.dim(); ++i) all.push_back(i);
    return VolumeForm{Tensor::monomial(c, Variance::form, FrameKind::coordinate,
                                       all, ScalarFunction::one(c.dim())),
                      {}};
}

} // namespace

TEST_CASE("wedge: antisymmetry, degree overflow, bilinearity") {
    Tensor dx = form(XY, {0}, "1");
    Tensor dy = form(XY, {1}, "1");
    CHECK(wedge(dx, dy) == -wedge(dy, dx));

    Tensor sigma = wedge(dx, dy);
    CHECK(wedge(sigma, sigma).is_zero()); // top transversal grade on a 2-chart

    Tensor a = form(XYZ, {1}, "x");
    Tensor b = form(XYZ, {2}, "y");
    CHECK(wedge(a, b) == form(XYZ, {1, 2}, "x*y"));
}

TEST_CASE("interior product: composition convention") {
    // i_{dx^dy-insertion}: i_{e_x ^ e_y}(dx^dy) = i_x(i_y(dx^dy)) = -1.
    Tensor A = mv(XY, {0, 1}, "1");
    Tensor beta = form(XY, {0, 1}, "1");
    Tensor r = interior_product(A, beta);
    CHECK(r == Tensor::scalar(XY, Variance::form, FrameKind::coordinate,
                              ScalarFunction::constant(2, -1)));

    // Degree: i_X of a 0-form vanishes.
    Tensor X = mv(XY, {0}, "1");
    Tensor f = Tensor::scalar(XY, Variance::form, FrameKind::coordinate, sf("1", XY));
    CHECK(interior_product(X, f).is_zero());
}

TEST_CASE("exterior derivative: basics and dlog") {
    CHECK(exterior_derivative(form(XY, {1}, "x")) == form(XY, {0, 1}, "1"));

    Tensor w = dlog(XY, sf("x^2+y^2", XY));
    Tensor expected(XY, Variance::form, FrameKind::coordinate);
    expected.add_component({0}, sf("2*x/(x^2+y^2)", XY));
    expected.add_component({1}, sf("2*y/(x^2+y^2)", XY));
    CHECK(w == expected);
    CHECK(exterior_derivative(w).is_zero());

    CHECK(dlog(XY, sf("5", XY)).is_zero());
}

TEST_CASE("lie derivative on forms and functions") {
    // L_X f = X(f) on 0-forms.
    Tensor X = mv(XYZ, {0}, "x") + mv(XYZ, {2}, "1");
    Tensor f = Tensor::scalar(XYZ, Variance::form, FrameKind::coordinate, sf("x*z"));
    Tensor lf = lie_derivative(X, f);
    CHECK(lf == Tensor::scalar(XYZ, Variance::form, FrameKind::coordinate,
                               sf("x*z + x")));

    // L_{e_z}(z dx^dy) = dx^dy.
    Tensor w = form(XYZ, {0, 1}, "z");
    CHECK(lie_derivative(mv(XYZ, {2}, "1"), w) == form(XYZ, {0, 1}, "1"));
}

TEST_CASE("schouten bracket: degree cases") {
    // [X, f] = X(f).
    Tensor X = mv(XYZ, {0}, "y") + mv(XYZ, {1}, "z^2");
    Tensor f = Tensor::scalar(XYZ, Variance::multivector, FrameKind::coordinate,
                              sf("x*y"));
    Tensor xf = schouten_bracket(X, f);
    CHECK(xf == Tensor::scalar(XYZ, Variance::multivector, FrameKind::coordinate,
                               sf("y^2 + x*z^2")));

    // [e_x ^ e_y, x^2 e_z]: the Leibniz-expanded oracle.
    // [X1^X2, Y] = X1 ^ [X2, Y] - X2 ^ [X1, Y] for vector fields X1, X2:
    // here [e_y, x^2 e_z] = 0 and [e_x, x^2 e_z] = 2x e_z, so the bracket
    // is -(e_y) ^ (2x e_z) ... with the chosen ordering conventions the
    // result must equal -2x e_y^e_z expanded from the oracle below.
    Tensor A = mv(XYZ, {0, 1}, "1");
    Tensor B = mv(XYZ, {2}, "x^2");
    Tensor lhs = schouten_bracket(A, B);
    Tensor e1 = mv(XYZ, {0}, "1"), e2 = mv(XYZ, {1}, "1");
    Tensor oracle = wedge(e1, schouten_bracket(e2, B)) -
                    wedge(e2, schouten_bracket(e1, B));
    CHECK(lhs == oracle);
    CHECK(lhs == mv(XYZ, {1, 2}, "-2*x"));

    // so(3) satisfies Jacobi.
    Chart c{{"x1", "x2", "x3"}};
    CHECK(jacobi_check(so3_bivector(c)));
}

TEST_CASE("sharp: paper conventions") {
    // Pi = (1/2) e_z ^ (x e_x + y e_y), alpha = -dlog(x^2+y^2) -> e_z.
    Tensor Pi = r3_bivector();
    Tensor alpha = -dlog(XYZ, sf("x^2+y^2"));
    CHECK(sharp(Pi, alpha) == mv(XYZ, {2}, "1"));

    // Casimir of so(3) maps to zero.
    Chart c{{"x1", "x2", "x3"}};
    Tensor so3 = so3_bivector(c);
    Tensor dC = differential(c, parse_scalar("x1^2+x2^2+x3^2", c.coords));
    CHECK(sharp(so3, dC).is_zero());

    // sharp(0, alpha) = 0.
    Tensor zero = Tensor::zero(XYZ, Variance::multivector);
    CHECK(sharp(zero, alpha).is_zero());
}

TEST_CASE("flat: coordinate case and linearity") {
    Tensor B = form(XY, {0, 1}, "1");
    Tensor ex = mv(XY, {0}, "1");
    CHECK(flat(B, ex) == form(XY, {1}, "1")); // i_{e_x}(dx^dy) = dy

    Tensor X = mv(XY, {0}, "x^2");
    CHECK(flat(B, X) == form(XY, {1}, "x^2"));
}

TEST_CASE("divergence: spec examples") {
    VolumeForm vol2 = euclidean(XY);
    Tensor X = mv(XY, {0}, "x") + mv(XY, {1}, "y");
    CHECK(divergence(X, vol2) == ScalarFunction::constant(2, 2));

    // div w.r.t. f Omega differs by X(f)/f.
    ScalarFunction f = sf("1 + x^2", XY);
    VolumeForm scaled{vol2.form * f, {}};
    ScalarFunction diff = divergence(X, scaled) - divergence(X, vol2);
    ScalarFunction xf = pairing(differential(XY, f), X);
    CHECK(diff == xf / f);

    // Hamiltonian field of z for the R^3 example has divergence 1.
    Tensor Pi = r3_bivector();
    Tensor ham = sharp(Pi, differential(XYZ, sf("z")));
    CHECK(ham == mv(XYZ, {0}, "x/2") + mv(XYZ, {1}, "y/2"));
    CHECK(divergence(ham, euclidean(XYZ)) == ScalarFunction::one(3));
}

TEST_CASE("randomized exterior properties") {
    for (const char* name : {"d_squared", "dlog_closed", "interior_formula",
                             "schouten", "lie_insertion", "sharp_flat"}) {
        SuiteResult r = run_property_suite(name, 11, 40);
        INFO(name << ": " << r.detail);
        CHECK(r.failures == 0);
    }
}

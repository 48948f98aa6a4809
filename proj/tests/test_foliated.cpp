#include <doctest.h>

#include "modcalc/generators.hpp"
#include "modcalc/propsuite.hpp"
#include "modcalc/parser.hpp"

using namespace modcalc;

namespace {

AdaptedSplit split_xy() { // (x | y)
    return AdaptedSplit{{"x"}, {"y"}};
}

AdaptedSplit split_xxy() { // (x1, x2 | y)
    return AdaptedSplit{{"x1", "x2"}, {"y"}};
}

ScalarFunction sf(const std::string& text, const AdaptedSplit& s) {
    return parse_scalar(text, s.chart().coords);
}

} // namespace

TEST_CASE("bigrade: flat split is the coordinate splitting") {
    AdaptedSplit s = split_xy();
    ConnectionForm g = ConnectionForm::flat(s);
    Tensor Pi(s.chart(), Variance::multivector, FrameKind::coordinate);
    Pi.add_component({0, 1}, ScalarFunction::one(2));
    BigradedTensor big = bigrade(Pi, g);
    CHECK(big.part(1, 1) == Pi.with_frame(FrameKind::adapted));
    CHECK(big.part(2, 0).is_zero());
    CHECK(to_coordinate_frame(big.assemble(), g) == Pi);
}

TEST_CASE("bigrade: dy against Gamma = (x)") {
    // Split (x | y), Gamma = (x): dy = eta - x dx.
    AdaptedSplit s = split_xy();
    ConnectionForm g = ConnectionForm::flat(s);
    g.gamma[0][0] = sf("x", s);
    Tensor dy = Tensor::monomial(s.chart(), Variance::form, FrameKind::coordinate,
                                 {1}, ScalarFunction::one(2));
    BigradedTensor big = bigrade(dy, g);
    Tensor eta = Tensor::monomial(s.chart(), Variance::form, FrameKind::adapted, {1},
                                  ScalarFunction::one(2));
    Tensor mxdx = Tensor::monomial(s.chart(), Variance::form, FrameKind::adapted, {0},
                                   sf("-x", s));
    CHECK(big.part(0, 1) == eta);
    CHECK(big.part(1, 0) == mxdx);
}

TEST_CASE("curvature: flat, and the x2-dependent example") {
    AdaptedSplit s = split_xxy();
    ConnectionForm flat = ConnectionForm::flat(s);
    CHECK(is_flat(curvature(flat)));

    // Gamma_1 = x2, Gamma_2 = 0: R(h1, h2) = [d1 - x2 dy, d2] projected
    // vertically, which is +d/dy.
    ConnectionForm g = ConnectionForm::flat(s);
    g.gamma[0][0] = sf("x2", s);
    Curvature R = curvature(g);
    Tensor expected = Tensor::monomial(s.chart(), Variance::multivector,
                                       FrameKind::coordinate, {2},
                                       ScalarFunction::one(3));
    CHECK(R.at({0, 1}) == expected);
    CHECK(!is_flat(R));
}

TEST_CASE("d2m1 vanishes exactly for flat connections") {
    AdaptedSplit s = split_xxy();
    ConnectionForm flat = ConnectionForm::flat(s);
    ConnectionForm curved = ConnectionForm::flat(s);
    curved.gamma[0][0] = sf("x2", s);
    // eta as an adapted (0,1) form feels the curvature insertion.
    Tensor eta = Tensor::monomial(s.chart(), Variance::form, FrameKind::adapted,
                                  {2}, ScalarFunction::one(3));
    CHECK(d_components(eta, flat).d2m1.is_zero());
    Tensor d2m1 = d_components(eta, curved).d2m1;
    CHECK(!d2m1.is_zero());
    // -i_R(eta) = -dx1^dx2 * eta(R(h1,h2)) = -dx1^dx2.
    CHECK(d2m1 == Tensor::monomial(s.chart(), Variance::form, FrameKind::adapted,
                                   {0, 1}, -ScalarFunction::one(3)));
}

TEST_CASE("d components: flat case splits the derivative by variables") {
    AdaptedSplit s = split_xy();
    ConnectionForm g = ConnectionForm::flat(s);
    Tensor f = Tensor::scalar(s.chart(), Variance::form, FrameKind::adapted,
                              sf("x^2*y", s));
    DComponents d = d_components(f, g);
    CHECK(d.d10 == Tensor::monomial(s.chart(), Variance::form, FrameKind::adapted,
                                    {0}, sf("2*x*y", s)));
    CHECK(d.d01 == Tensor::monomial(s.chart(), Variance::form, FrameKind::adapted,
                                    {1}, sf("x^2", s)));
    CHECK(d.d2m1.is_zero());
}

TEST_CASE("divergence form: flat examples") {
    AdaptedSplit s = split_xy();
    ConnectionForm g = ConnectionForm::flat(s);

    // tau = dy: theta = 0.
    VolumeForm tau{Tensor::monomial(s.chart(), Variance::form, FrameKind::adapted,
                                    {1}, ScalarFunction::one(2)),
                   {}};
    CHECK(divergence_form(tau, g).is_zero());

    // tau = f(x) dy: theta = d10(f)/f.
    ScalarFunction f = sf("1 + x^2", s);
    VolumeForm ftau{tau.form * f, {}};
    Tensor theta = divergence_form(ftau, g);
    Tensor expected = Tensor::monomial(s.chart(), Variance::form, FrameKind::adapted,
                                       {0}, sf("2*x/(1+x^2)", s));
    CHECK(theta == expected);
}

TEST_CASE("reeb form: pullback and the derived 1 + y^2 example") {
    AdaptedSplit s = split_xy();
    ConnectionForm g = ConnectionForm::flat(s);

    VolumeForm pullback{Tensor::monomial(s.chart(), Variance::form,
                                         FrameKind::adapted, {0},
                                         ScalarFunction::one(2)),
                        {}};
    CHECK(reeb_form(pullback, g).is_zero());

    VolumeForm vs{Tensor::monomial(s.chart(), Variance::form, FrameKind::adapted,
                                   {0}, sf("1 + y^2", s)),
                  {}};
    Tensor lambda = reeb_form(vs, g);
    Tensor expected = Tensor::monomial(s.chart(), Variance::form, FrameKind::adapted,
                                       {1}, sf("2*y/(1+y^2)", s));
    CHECK(lambda == expected);
    CHECK(d_components(lambda, g).d01.is_zero());
}

TEST_CASE("projectability") {
    AdaptedSplit s = split_xy();
    ConnectionForm g = ConnectionForm::flat(s);
    g.gamma[0][0] = sf("x*y", s);
    CHECK(is_projectable(g.horizontal_field(0), s));

    Tensor bad = Tensor::monomial(s.chart(), Variance::multivector,
                                  FrameKind::coordinate, {0}, sf("y", s));
    CHECK(!is_projectable(bad, s));
    Tensor good = Tensor::monomial(s.chart(), Variance::multivector,
                                   FrameKind::coordinate, {0}, sf("x", s)) +
                  Tensor::monomial(s.chart(), Variance::multivector,
                                   FrameKind::coordinate, {1}, sf("y", s));
    CHECK(is_projectable(good, s));
}

TEST_CASE("foliated derivative: leaf-only differentiation") {
    AdaptedSplit s = AdaptedSplit{{"x"}, {"y1", "y2"}};
    ConnectionForm g = ConnectionForm::flat(s);
    g.gamma[0][0] = sf("x*y1", s);
    Tensor f = Tensor::scalar(s.chart(), Variance::form, FrameKind::adapted,
                              sf("x*y1*y2", s));
    Tensor d = foliated_derivative(f, g);
    Tensor expected =
        Tensor::monomial(s.chart(), Variance::form, FrameKind::adapted, {1},
                         sf("x*y2", s)) +
        Tensor::monomial(s.chart(), Variance::form, FrameKind::adapted, {2},
                         sf("x*y1", s));
    CHECK(d == expected);
    CHECK(foliated_derivative(d, g).is_zero());

    // Two different connections agree after leaf restriction.
    ConnectionForm g2 = ConnectionForm::flat(s);
    g2.gamma[0][1] = sf("y2^2", s);
    Tensor d2 = foliated_derivative(f, g2);
    Point base{Rational(1)};
    CHECK(restrict_to_leaf(d, s, base) == restrict_to_leaf(d2, s, base));

    Tensor mixed = Tensor::monomial(s.chart(), Variance::form, FrameKind::adapted,
                                    {0}, sf("y1", s));
    CHECK_THROWS_AS(foliated_derivative(mixed, g), WrongBidegree);
}

TEST_CASE("randomized foliated properties") {
    for (const char* name : {"bigrade_roundtrip", "d01_squared", "d_completeness",
                             "theta1", "theta2", "theta3", "reeb"}) {
        SuiteResult r = run_property_suite(name, 23, 30);
        INFO(name << ": " << r.detail);
        CHECK(r.failures == 0);
    }
}

#include <doctest.h>

#include "modcalc/generators.hpp"
#include "modcalc/propsuite.hpp"
#include "modcalc/parser.hpp"

using namespace modcalc;

namespace {

const Chart XYZ{{"x", "y", "z"}};
const Chart SO3{{"x1", "x2", "x3"}};

ScalarFunction sf(const std::string& text, const Chart& c) {
    return parse_scalar(text, c.coords);
}

Tensor r3_bivector() {
    Tensor Pi(XYZ, Variance::multivector, FrameKind::coordinate);
    Pi.add_component({2, 0}, sf("x/2", XYZ));
    Pi.add_component({2, 1}, sf("y/2", XYZ));
    return Pi;
}

VolumeForm euclidean(const Chart& c) {
    MultiIndex all;
    for (int i = 0; i < c.dim(); ++i) all.push_back(i);
    return VolumeForm{Tensor::monomial(c, Variance::form, FrameKind::coordinate,
                                       all, ScalarFunction::one(c.dim())),
                      {}};
}

Tensor mv(const Chart& c, MultiIndex idx, const std::string& coeff) {
    return Tensor::monomial(c, Variance::multivector, FrameKind::coordinate, idx,
                            parse_scalar(coeff, c.coords));
}

} // namespace

TEST_CASE("jacobi_check: spec examples") {
    CHECK(jacobi_check(so3_bivector(SO3)));
    // The homogeneous structure f * so3 stays Poisson for the quartic.
    Tensor scaled = so3_bivector(SO3) * sf("x1^4+x2^4+x3^4", SO3);
    CHECK(jacobi_check(scaled));

    // A bivector chosen to break Jacobi: {x,y} = 1 and {z,w} = x give
    // {{z,w},y} = 1 in the cyclic sum.
    Chart c4{{"x", "y", "z", "w"}};
    Tensor bad(c4, Variance::multivector, FrameKind::coordinate);
    bad.add_component({0, 1}, ScalarFunction::one(4));
    bad.add_component({2, 3}, sf("x", c4));
    CHECK(!jacobi_check(bad));
}

TEST_CASE("hamiltonian_field: spec examples") {
    PoissonBivector Pi = PoissonBivector::make(r3_bivector());
    CHECK(hamiltonian_field(Pi, sf("z", XYZ)) ==
          mv(XYZ, {0}, "x/2") + mv(XYZ, {1}, "y/2"));

    PoissonBivector so3 = PoissonBivector::make(so3_bivector(SO3));
    CHECK(hamiltonian_field(so3, sf("x1^2+x2^2+x3^2", SO3)).is_zero());
    CHECK(hamiltonian_field(so3, sf("7", SO3)).is_zero());
    CHECK(is_casimir(so3, sf("x1^2+x2^2+x3^2", SO3)));
    CHECK(!is_casimir(so3, sf("x1", SO3)));
}

TEST_CASE("modular_field: the R^3 leaf example") {
    PoissonBivector Pi = PoissonBivector::make(r3_bivector());
    Tensor Z = modular_field(Pi, euclidean(XYZ));
    CHECK(Z == mv(XYZ, {2}, "1"));
    CHECK(is_poisson_field(Pi, Z));

    // Z admits the rational certificate -dlog(x^2+y^2).
    Tensor cert = -dlog(XYZ, sf("x^2+y^2", XYZ));
    CHECK(hamiltonian_certificate(Pi, euclidean(XYZ), cert));
}

TEST_CASE("modular_field: the so(3) pair") {
    PoissonBivector so3 = PoissonBivector::make(so3_bivector(SO3));
    CHECK(modular_field(so3, euclidean(SO3)).is_zero());

    PoissonBivector scaled =
        PoissonBivector::make(so3_bivector(SO3) * sf("x1^4+x2^4+x3^4", SO3));
    Tensor Z = modular_field(scaled, euclidean(SO3));
    Tensor expected = mv(SO3, {0}, "4*x2^3*x3 - 4*x2*x3^3") +
                      mv(SO3, {1}, "4*x3^3*x1 - 4*x3*x1^3") +
                      mv(SO3, {2}, "4*x1^3*x2 - 4*x1*x2^3");
    CHECK(Z == expected);
    CHECK(hamiltonian_certificate(scaled, euclidean(SO3), sf("0", SO3)) == false);
    CHECK(hamiltonian_certificate(so3, euclidean(SO3), sf("0", SO3)));
}

TEST_CASE("is_poisson_field: non-Hamiltonian symmetry of the plane") {
    Chart XY{{"x", "y"}};
    Tensor plane(XY, Variance::multivector, FrameKind::coordinate);
    plane.add_component({0, 1}, ScalarFunction::one(2));
    PoissonBivector Pi = PoissonBivector::make(plane);
    Tensor X = Tensor::monomial(XY, Variance::multivector, FrameKind::coordinate,
                                {1}, sf("x", XY));
    CHECK(is_poisson_field(Pi, X));
    Tensor Y = Tensor::monomial(XY, Variance::multivector, FrameKind::coordinate,
                                {1}, sf("y^2", XY));
    CHECK(!is_poisson_field(Pi, Y));
}

TEST_CASE("modular transition rule") {
    PoissonBivector so3 = PoissonBivector::make(so3_bivector(SO3));
    CHECK(modular_transition_check(so3, euclidean(SO3), sf("1", SO3)));
    CHECK(modular_transition_check(so3, euclidean(SO3), sf("x1^4+x2^4+x3^4", SO3)));

    Chart XY{{"x", "y"}};
    Tensor plane(XY, Variance::multivector, FrameKind::coordinate);
    plane.add_component({0, 1}, ScalarFunction::one(2));
    CHECK(modular_transition_check(PoissonBivector::make(plane), euclidean(XY),
                                   sf("1+x^2", XY)));
}

TEST_CASE("foliated modular field: fiberwise so(3) is unimodular") {
    Gen gen(3);
    AdaptedSplit s = gen.split(2, 3);
    ConnectionForm g = ConnectionForm::flat(s);
    PoissonFoliationData pf =
        PoissonFoliationData::make(PoissonBivector::make(so3_vertical_bivector(s)), s);
    VolumeForm tau = gen.leafwise_volume(s);
    // Unscaled leaf-wise volume: dy1^dy2^dy3.
    MultiIndex all{2, 3, 4};
    VolumeForm unit_tau{Tensor::monomial(s.chart(), Variance::form,
                                         FrameKind::adapted, all,
                                         ScalarFunction::one(5)),
                        {}};
    CHECK(foliated_modular_field(pf, unit_tau, g).is_zero());

    // P = 0 gives 0 for any volume.
    Tensor zero = Tensor::zero(s.chart(), Variance::multivector);
    PoissonFoliationData pz =
        PoissonFoliationData::make(PoissonBivector::make(zero), s);
    CHECK(foliated_modular_field(pz, tau, g).is_zero());
}

TEST_CASE("single-leaf degeneration: p = 0 collapses to the plain operators") {
    AdaptedSplit s{{}, {"x", "y", "z"}};
    ConnectionForm g = ConnectionForm::flat(s);
    Tensor Pi = r3_bivector();
    PoissonFoliationData pf =
        PoissonFoliationData::make(PoissonBivector::make(Pi), s);
    MultiIndex all{0, 1, 2};
    VolumeForm tau{Tensor::monomial(s.chart(), Variance::form, FrameKind::adapted,
                                    all, ScalarFunction::one(3)),
                   {}};
    Tensor Z = foliated_modular_field(pf, tau, g);
    VolumeForm top{tau.form.with_frame(FrameKind::coordinate), {}};
    CHECK(Z == modular_field(pf.P, top));
    CHECK(Z == mv(XYZ, {2}, "1"));
}

TEST_CASE("leaf tangency is enforced") {
    AdaptedSplit s{{"x"}, {"y1", "y2"}};
    Tensor notvertical(s.chart(), Variance::multivector, FrameKind::coordinate);
    notvertical.add_component({0, 1}, ScalarFunction::one(3));
    CHECK_THROWS_AS(
        PoissonFoliationData::make(PoissonBivector::make(notvertical), s),
        NotLeafTangent);
}

TEST_CASE("casimir complex membership and cocycles") {
    Gen gen(5);
    AdaptedSplit s = gen.split(2, 2);
    ConnectionForm g = ConnectionForm::flat(s);
    const Chart c = s.chart();
    Tensor P(c, Variance::multivector, FrameKind::coordinate);
    P.add_component({2, 3}, ScalarFunction::one(4));
    PoissonFoliationData pf = PoissonFoliationData::make(PoissonBivector::make(P), s);

    // Constant-coefficient dx1 is a member.
    Tensor beta = Tensor::monomial(c, Variance::form, FrameKind::adapted, {0},
                                   ScalarFunction::one(4));
    CHECK(casimir_complex_member(beta, pf, g));

    // y1 dx1 is not (y1 is not Casimir of d/dy1 ^ d/dy2).
    Tensor bad = Tensor::monomial(c, Variance::form, FrameKind::adapted, {0},
                                  sf("y1", c));
    CHECK(!casimir_complex_member(bad, pf, g));

    CHECK(casimir_cocycle_check(Tensor::zero(c, Variance::form, FrameKind::adapted),
                                pf, g));

    // theta = x2 dx1 fails closedness: d10(theta) = -dx1^dx2 != 0.
    Tensor theta = Tensor::monomial(c, Variance::form, FrameKind::adapted, {0},
                                    sf("x2", c));
    CHECK(!casimir_cocycle_check(theta, pf, g));

    Tensor wrong = Tensor::monomial(c, Variance::form, FrameKind::adapted, {2},
                                    ScalarFunction::one(4));
    CHECK_THROWS_AS(casimir_complex_member(wrong, pf, g), WrongBidegree);
}

TEST_CASE("mods/reeb identity: trivial and derived cases") {
    Gen gen(9);

    // Flat trivial bundle with pullback transversal volume.
    AdaptedSplit s = gen.split(1, 2);
    ConnectionForm g = ConnectionForm::flat(s);
    Tensor P(s.chart(), Variance::multivector, FrameKind::coordinate);
    P.add_component({1, 2}, sf("y1", s.chart()));
    PoissonFoliationData pf = PoissonFoliationData::make(PoissonBivector::make(P), s);
    VolumeForm tau = gen.leafwise_volume(s);
    VolumeForm vs{Tensor::monomial(s.chart(), Variance::form, FrameKind::adapted,
                                   {0}, ScalarFunction::one(3)),
                  {}};
    CHECK(mods_reeb_identity_check(pf, tau, vs, g));

    // p = 1, q = 2 toy with a random transversal volume and connection.
    ConnectionForm g2 = gen.connection(s);
    VolumeForm vs2 = gen.transversal_volume(s);
    CHECK(mods_reeb_identity_check(pf, tau, vs2, g2));
}

TEST_CASE("randomized poisson properties") {
    for (const char* name : {"modular_oracle", "modular_transition", "div_ham",
                             "mod_and_poiss", "foliated_modular", "mods_reeb"}) {
        SuiteResult r = run_property_suite(name, 31, 25);
        INFO(name << ": " << r.detail);
        CHECK(r.failures == 0);
    }
}

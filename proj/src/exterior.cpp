#include "modcalc/exterior.hpp"

#include <numeric>

namespace modcalc {

void VolumeForm::validate(int expected_grade) const {
    if (form.is_zero() || form.components().size() != 1)
        throw DegenerateVolume("volume must have exactly one component");
    const auto& [idx, g] = *form.components().begin();
    if ((int)idx.size() != expected_grade)
        throw DegenerateVolume("volume has grade " + std::to_string(idx.size()) +
                               ", expected " + std::to_string(expected_grade));
    if (g.is_zero()) throw DegenerateVolume("volume coefficient is zero");
    for (const Point& pt : samples) {
        Rational v;
        try {
            v = g.evaluate(pt);
        } catch (const PoleAtPoint&) {
            throw SampleViolatesAssertion("volume coefficient has a pole at a sample");
        }
        if (v == 0)
            throw SampleViolatesAssertion("volume coefficient vanishes at a sample");
    }
}

const ScalarFunction& VolumeForm::coefficient() const {
    return form.components().begin()->second;
}

Tensor interior_product(const Tensor& A, const Tensor& beta) {
    if (A.variance() != Variance::multivector || beta.variance() != Variance::form)
        throw FrameMismatch("interior product takes (multivector, form)");
    if (A.chart() != beta.chart() || A.frame() != beta.frame())
        throw FrameMismatch("interior product operands disagree");
    Tensor out(beta.chart(), Variance::form, beta.frame());
    for (const auto& [idx, c] : A.components()) {
        Tensor acc = beta;
        // i_{e_{i1}} o ... o i_{e_ik}: the rightmost factor acts first.
        for (auto it = idx.rbegin(); it != idx.rend(); ++it)
            acc = frame_derivative(acc, *it);
        out = out + acc * c;
    }
    return out;
}

Tensor form_into_multivector(const Tensor& alpha, const Tensor& A) {
    if (A.variance() != Variance::multivector || alpha.variance() != Variance::form)
        throw FrameMismatch("contraction takes (1-form, multivector)");
    if (A.chart() != alpha.chart() || A.frame() != alpha.frame())
        throw FrameMismatch("contraction operands disagree");
    if (!alpha.is_homogeneous(1))
        throw FrameMismatch("contraction needs a 1-form");
    Tensor out(A.chart(), Variance::multivector, A.frame());
    for (const auto& [aidx, ac] : alpha.components()) {
        Tensor d = frame_derivative(A, aidx[0]);
        out = out + d * ac;
    }
    return out;
}

ScalarFunction pairing(const Tensor& beta, const Tensor& A) {
    if (A.chart() != beta.chart() || A.frame() != beta.frame())
        throw FrameMismatch("pairing operands disagree");
    ScalarFunction acc = ScalarFunction::zero(A.dim());
    for (const auto& [idx, c] : beta.components()) {
        ScalarFunction a = A.component(idx);
        if (!a.is_zero()) acc = acc + c * a;
    }
    return acc;
}

Tensor exterior_derivative(const Tensor& beta) {
    if (beta.variance() != Variance::form)
        throw FrameMismatch("exterior derivative acts on forms");
    if (beta.frame() != FrameKind::coordinate)
        throw FrameMismatch("exterior derivative needs the coordinate frame");
    Tensor out(beta.chart(), Variance::form, FrameKind::coordinate);
    const int n = beta.dim();
    MultiIndex ext;
    for (const auto& [idx, c] : beta.components()) {
        for (int i = 0; i < n; ++i) {
            ScalarFunction dc = c.derivative(i);
            if (dc.is_zero()) continue;
            ext.clear();
            ext.push_back(i);
            ext.insert(ext.end(), idx.begin(), idx.end());
            out.add_component(ext, dc);
        }
    }
    return out;
}

Tensor differential(const Chart& chart, const ScalarFunction& f) {
    Tensor out(chart, Variance::form, FrameKind::coordinate);
    for (int i = 0; i < chart.dim(); ++i)
        out.add_component({i}, f.derivative(i));
    return out;
}

Tensor dlog(const Chart& chart, const ScalarFunction& f) {
    if (f.is_zero())
        throw DivisionByZeroFunction("dlog of the zero function");
    Tensor df = differential(chart, f);
    return df * (ScalarFunction::one(chart.dim()) / f);
}

namespace {

// Schouten bracket of grade-homogeneous parts via the odd-variable
// calculus with right Grassmann derivatives:
//   [a,b] = sum_i da/dxi_i . db/dx_i
//           - (-1)^((|a|-1)(|b|-1)) sum_i db/dxi_i . da/dx_i,
// where the right derivative is (-1)^(grade-1) times the left one.
// The signs are pinned by [X,f] = X(f), the Lie bracket on grade 1, and
// the Leibniz-expansion oracle on decomposables (see the tests).
Tensor schouten_homogeneous(const Tensor& A, int ga, const Tensor& B, int gb) {
    const int n = A.dim();
    Tensor out(A.chart(), Variance::multivector, A.frame());
    int s1 = ((ga - 1) % 2 == 0) ? 1 : -1;
    int s2 = -(((ga - 1) * (gb - 1)) % 2 == 0 ? 1 : -1) *
             (((gb - 1) % 2 == 0) ? 1 : -1);
    for (int i = 0; i < n; ++i) {
        Tensor xiA = frame_derivative(A, i);
        if (!xiA.is_zero()) {
            Tensor dB = coefficient_derivative(B, i);
            if (!dB.is_zero()) {
                Tensor w = wedge(xiA, dB);
                out = s1 > 0 ? out + w : out - w;
            }
        }
        Tensor xiB = frame_derivative(B, i);
        if (!xiB.is_zero()) {
            Tensor dA = coefficient_derivative(A, i);
            if (!dA.is_zero()) {
                Tensor w = wedge(xiB, dA);
                out = s2 > 0 ? out + w : out - w;
            }
        }
    }
    return out;
}

} // namespace

Tensor schouten_bracket(const Tensor& A, const Tensor& B) {
    require_compatible(A, B);
    if (A.variance() != Variance::multivector)
        throw FrameMismatch("Schouten bracket acts on multivectors");
    if (A.frame() != FrameKind::coordinate)
        throw FrameMismatch("Schouten bracket needs the coordinate frame");
    Tensor out(A.chart(), Variance::multivector, A.frame());
    for (int ga : A.grades())
        for (int gb : B.grades())
            out = out + schouten_homogeneous(A.grade_part(ga), ga,
                                             B.grade_part(gb), gb);
    return out;
}

Tensor lie_derivative(const Tensor& X, const Tensor& T) {
    if (!X.is_homogeneous(1) || X.variance() != Variance::multivector)
        throw FrameMismatch("Lie derivative needs a vector field");
    if (X.chart() != T.chart() || X.frame() != T.frame())
        throw FrameMismatch("Lie derivative operands disagree");
    if (T.variance() == Variance::form) {
        if (T.frame() != FrameKind::coordinate)
            throw FrameMismatch("Lie derivative needs the coordinate frame");
        return interior_product(X, exterior_derivative(T)) +
               exterior_derivative(interior_product(X, T));
    }
    return schouten_bracket(X, T);
}

Tensor sharp(const Tensor& Pi, const Tensor& alpha) {
    if (!Pi.is_homogeneous(2))
        throw FrameMismatch("sharp needs a bivector");
    return form_into_multivector(alpha, Pi);
}

Tensor flat(const Tensor& B, const Tensor& X) {
    if (!B.is_homogeneous(2))
        throw FrameMismatch("flat needs a 2-form");
    return interior_product(X, B);
}

Tensor solve_contraction(const VolumeForm& Omega, const Tensor& omega) {
    const Tensor& vol = Omega.form;
    if (omega.chart() != vol.chart() || omega.frame() != vol.frame())
        throw FrameMismatch("contraction solve operands disagree");
    const int n = vol.dim();
    const ScalarFunction& g = Omega.coefficient();
    Tensor Z(vol.chart(), Variance::multivector, vol.frame());
    for (int i = 0; i < n; ++i) {
        Tensor basis(vol.chart(), Variance::multivector, vol.frame());
        basis.add_component({i}, ScalarFunction::one(n));
        Tensor bi = interior_product(basis, vol);
        if (bi.is_zero()) continue;
        const auto& [idx, coeff] = *bi.components().begin();
        ScalarFunction zi = omega.component(idx) / coeff;
        Z.add_component({i}, zi);
    }
    // The basis contractions span everything a contraction can produce;
    // a nonzero residual means omega was not in the image.
    Tensor residual = interior_product(Z, vol) - omega;
    if (!residual.is_zero())
        throw DegenerateVolume("contraction equation has no solution");
    return Z;
}

ScalarFunction divergence(const Tensor& X, const VolumeForm& Omega) {
    if (Omega.form.components().size() != 1 ||
        (int)Omega.form.components().begin()->first.size() != X.dim())
        throw NotTopGrade("divergence needs a top-grade volume");
    Omega.validate(X.dim());
    if (!X.is_homogeneous(1) || X.variance() != Variance::multivector)
        throw NotTopGrade("divergence needs a vector field");
    if (X.frame() != FrameKind::coordinate ||
        Omega.form.frame() != FrameKind::coordinate)
        throw FrameMismatch("divergence needs the coordinate frame");
    Tensor lx = lie_derivative(X, Omega.form);
    if (lx.is_zero()) return ScalarFunction::zero(X.dim());
    const auto& [idx, g] = *Omega.form.components().begin();
    return lx.component(idx) / g;
}

} // namespace modcalc

#pragma once

#include "modcalc/tensor.hpp"

namespace modcalc {

/// Top-grade form together with user-supplied points witnessing that it
/// does not vanish (symbolic nonvanishing over an open set is not
/// decidable; the points make the assertion checkable).
struct VolumeForm {
    Tensor form;
    std::vector<Point> samples;

    /// Throws DegenerateVolume / SampleViolatesAssertion.
    void validate(int expected_grade) const;
    /// The single coefficient; requires a validated single-component form.
    const ScalarFunction& coefficient() const;
};

/// Interior product i_A(beta) of a multivector into a form, with the
/// composition convention i_{X1^...^Xk} = i_{X1} o ... o i_{Xk}.
Tensor interior_product(const Tensor& A, const Tensor& beta);

/// Contraction of a 1-form into a multivector (same position sign rule);
/// for a bivector Pi this realizes Pi#(alpha).
Tensor form_into_multivector(const Tensor& alpha, const Tensor& A);

/// Full pairing <beta, A> of a form and a multivector summed over the
/// common grades; <dx_I, e_J> = delta_IJ on increasing multi-indices.
ScalarFunction pairing(const Tensor& beta, const Tensor& A);

/// Coordinate exterior derivative of a form.
Tensor exterior_derivative(const Tensor& beta);

/// df as a coordinate 1-form.
Tensor differential(const Chart& chart, const ScalarFunction& f);

/// df/f: the exact 1-form standing in for d ln|f|.
Tensor dlog(const Chart& chart, const ScalarFunction& f);

/// Lie derivative along a vector field: Cartan's formula for forms,
/// the Schouten bracket for multivectors. Coordinate frame only.
Tensor lie_derivative(const Tensor& X, const Tensor& T);

/// Schouten-Nijenhuis bracket of multivectors (coordinate frame).
Tensor schouten_bracket(const Tensor& A, const Tensor& B);

/// Pi#(alpha) defined by <beta, Pi#(alpha)> = Pi(alpha, beta).
Tensor sharp(const Tensor& Pi, const Tensor& alpha);

/// B-flat of a vector field: i_X(B).
Tensor flat(const Tensor& B, const Tensor& X);

/// div(X) with respect to a volume: L_X(Omega) = div * Omega, exact.
ScalarFunction divergence(const Tensor& X, const VolumeForm& Omega);

/// Unique Z with i_Z(Omega) = omega, for a top volume and an
/// (n-1)-form; residual is checked to vanish.
Tensor solve_contraction(const VolumeForm& Omega, const Tensor& omega);

} // namespace modcalc

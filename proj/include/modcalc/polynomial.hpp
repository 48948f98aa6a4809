#pragma once

#include <map>
#include <string>
#include <vector>

#include "modcalc/rational.hpp"

namespace modcalc {

/// Exponent vector of a monomial; length equals the chart dimension.
using Exponents = std::vector<unsigned>;

/// Graded-lexicographic order: total degree first, then lexicographic
/// with earlier variables weighing more.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept in a grlex-ordered map with no zero coefficients, so
/// two polynomials are equal iff their representations are equal.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, GrlexLess>;

    Polynomial() : nvars_(0) {}
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int index);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term value; only meaningful when is_constant().
    Rational constant_value() const;

    void add_term(const Exponents& exps, const Rational& coeff);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(unsigned e) const;
    Polynomial derivative(int var) const;
    Rational evaluate(const Point& point) const;

    /// Substitutes rationals for the variables marked in `assign`
    /// (index -> value) and renumbers the survivors in order.
    Polynomial eliminate(const std::map<int, Rational>& assign) const;

    int total_degree() const;       // -1 for the zero polynomial
    int degree_in(int var) const;   // -1 for the zero polynomial
    bool depends_on(int var) const { return degree_in(var) > 0; }

    /// Leading (grlex-largest) term.
    const Rational& leading_coefficient() const;
    const Exponents& leading_exponents() const;

    /// Positive rational c with p/c integer-valued and content-free;
    /// zero polynomial gives 0.
    Rational rational_content() const;

    /// Exact quotient; throws on inexact division or zero divisor.
    Polynomial exact_divide(const Polynomial& divisor) const;

    /// Primitive gcd (integer coefficients, content 1, positive leading
    /// coefficient); gcd(0,0) = 0.
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    /// Writes the polynomial in the expression grammar using `names`
    /// for the variables; "0" for the zero polynomial.
    std::string to_string(const std::vector<std::string>& names) const;

private:
    int nvars_;
    TermMap terms_;
};

} // namespace modcalc

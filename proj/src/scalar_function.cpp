#include "modcalc/scalar_function.hpp"

#include <cassert>

namespace modcalc {

ScalarFunction::ScalarFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw DivisionByZeroFunction("zero denominator");
    normalize();
}

void ScalarFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.nvars(), 1);
        return;
    }
    if (!den_.is_constant()) {
        Polynomial g = Polynomial::gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.exact_divide(g);
            den_ = den_.exact_divide(g);
        }
    }
    // Scale so den is integer-primitive with positive leading coefficient.
    Rational s = den_.rational_content();
    if (den_.leading_coefficient() < 0) s = -s;
    if (s != 1) {
        Rational inv = Rational(1) / s;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

ScalarFunction ScalarFunction::operator-() const {
    ScalarFunction out = *this;
    out.num_ = -out.num_;
    return out;
}

ScalarFunction ScalarFunction::operator+(const ScalarFunction& o) const {
    if (den_ == o.den_)
        return ScalarFunction(num_ + o.num_, den_);
    return ScalarFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ScalarFunction ScalarFunction::operator-(const ScalarFunction& o) const {
    if (den_ == o.den_)
        return ScalarFunction(num_ - o.num_, den_);
    return ScalarFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

ScalarFunction ScalarFunction::operator*(const ScalarFunction& o) const {
    return ScalarFunction(num_ * o.num_, den_ * o.den_);
}

ScalarFunction ScalarFunction::operator/(const ScalarFunction& o) const {
    if (o.is_zero())
        throw DivisionByZeroFunction("division by identically zero function");
    return ScalarFunction(num_ * o.den_, den_ * o.num_);
}

ScalarFunction ScalarFunction::pow(unsigned e) const {
    if (e == 0) return one(nvars());
    // Coprime stays coprime under powers, so no gcd pass is needed.
    ScalarFunction out = *this;
    out.num_ = num_.pow(e);
    out.den_ = den_.pow(e);
    return out;
}

ScalarFunction ScalarFunction::derivative(int var) const {
    if (is_polynomial())
        return ScalarFunction(num_.derivative(var), den_);
    Polynomial dden = den_.derivative(var);
    if (dden.is_zero())
        return ScalarFunction(num_.derivative(var), den_);
    // Quotient rule with the repeated-factor part e = gcd(den, den')
    // cancelled up front, which keeps the closing gcd small.
    Polynomial e = Polynomial::gcd(den_, dden);
    Polynomial den_red = den_.exact_divide(e);
    Polynomial n = num_.derivative(var) * den_red - num_ * dden.exact_divide(e);
    return ScalarFunction(std::move(n), den_ * den_red);
}

Rational ScalarFunction::evaluate(const Point& point) const {
    Rational d = den_.evaluate(point);
    if (d == 0) throw PoleAtPoint("denominator vanishes at sample point");
    return num_.evaluate(point) / d;
}

ScalarFunction ScalarFunction::eliminate(const std::map<int, Rational>& assign) const {
    Polynomial d = den_.eliminate(assign);
    if (d.is_zero())
        throw PoleAtPoint("denominator vanishes identically on the leaf");
    return ScalarFunction(num_.eliminate(assign), std::move(d));
}

std::string ScalarFunction::to_string(const std::vector<std::string>& names) const {
    if (is_polynomial()) {
        Rational d = den_.constant_value();
        if (d == 1) return num_.to_string(names);
        // A constant denominator folds into the coefficients.
        return (num_ * (Rational(1) / d)).to_string(names);
    }
    return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

} // namespace modcalc

#pragma once

#include <map>
#include <string>
#include <vector>

#include "modcalc/polynomial.hpp"

namespace modcalc {

/// Exact multivariate rational function num/den in canonical form:
/// num and den coprime, den integer-primitive with positive leading
/// coefficient under graded-lex order. Equal functions have identical
/// representations, so equality is a syntactic check.
class ScalarFunction {
public:
    ScalarFunction() : num_(0), den_(Polynomial::constant(0, 1)) {}
    explicit ScalarFunction(int nvars)
        : num_(nvars), den_(Polynomial::constant(nvars, 1)) {}
    ScalarFunction(Polynomial num, Polynomial den);

    static ScalarFunction zero(int nvars) { return ScalarFunction(nvars); }
    static ScalarFunction constant(int nvars, const Rational& c) {
        return ScalarFunction(Polynomial::constant(nvars, c),
                              Polynomial::constant(nvars, 1));
    }
    static ScalarFunction one(int nvars) { return constant(nvars, 1); }
    static ScalarFunction variable(int nvars, int index) {
        return ScalarFunction(Polynomial::variable(nvars, index),
                              Polynomial::constant(nvars, 1));
    }
    static ScalarFunction from_polynomial(Polynomial p) {
        int n = p.nvars();
        return ScalarFunction(std::move(p), Polynomial::constant(n, 1));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    int nvars() const { return num_.nvars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }

    ScalarFunction operator-() const;
    ScalarFunction operator+(const ScalarFunction& o) const;
    ScalarFunction operator-(const ScalarFunction& o) const;
    ScalarFunction operator*(const ScalarFunction& o) const;
    ScalarFunction operator/(const ScalarFunction& o) const;
    ScalarFunction pow(unsigned e) const;

    bool operator==(const ScalarFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const ScalarFunction& o) const { return !(*this == o); }

    ScalarFunction derivative(int var) const;
    Rational evaluate(const Point& point) const;

    /// Leaf restriction: substitute the assigned variables and renumber
    /// the rest; throws PoleAtPoint if the denominator collapses to 0.
    ScalarFunction eliminate(const std::map<int, Rational>& assign) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    Polynomial num_, den_;
    void normalize();
};

inline bool is_identically_zero(const ScalarFunction& f) { return f.is_zero(); }

} // namespace modcalc

#include "modcalc/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <numeric>
#include <sstream>

namespace modcalc {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    // Same total degree: lexicographic, earlier variable dominates.
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
    if (index < 0 || index >= nvars)
        throw IndexOutOfRange("variable index " + std::to_string(index));
    Polynomial p(nvars);
    Exponents e(nvars, 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

Rational Polynomial::constant_value() const {
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

void Polynomial::add_term(const Exponents& exps, const Rational& coeff) {
    assert((int)exps.size() == nvars_);
    if (coeff == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    assert(nvars_ == o.nvars_);
    Polynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    assert(nvars_ == o.nvars_);
    Polynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    assert(nvars_ == o.nvars_);
    Polynomial out(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial out(nvars_);
    if (c == 0) return out;
    for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
    return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(nvars_, 1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= nvars_)
        throw IndexOutOfRange("derivative index " + std::to_string(var));
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        out.add_term(d, c * Rational(e[var]));
    }
    return out;
}

Rational Polynomial::evaluate(const Point& point) const {
    if ((int)point.size() != nvars_)
        throw IndexOutOfRange("point dimension mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) term *= rational_pow(point[i], e[i]);
        acc += term;
    }
    return acc;
}

Polynomial Polynomial::eliminate(const std::map<int, Rational>& assign) const {
    std::vector<int> remap(nvars_, -1);
    int kept = 0;
    for (int i = 0; i < nvars_; ++i)
        if (!assign.count(i)) remap[i] = kept++;
    Polynomial out(kept);
    Exponents e(kept);
    for (const auto& [exps, c] : terms_) {
        Rational coeff = c;
        std::fill(e.begin(), e.end(), 0u);
        for (int i = 0; i < nvars_; ++i) {
            if (remap[i] >= 0) {
                e[remap[i]] = exps[i];
            } else if (exps[i] > 0) {
                coeff *= rational_pow(assign.at(i), exps[i]);
            }
        }
        out.add_term(e, coeff);
    }
    return out;
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    const Exponents& e = terms_.rbegin()->first;
    return (int)std::accumulate(e.begin(), e.end(), 0u);
}

int Polynomial::degree_in(int var) const {
    if (terms_.empty()) return -1;
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return (int)d;
}

const Rational& Polynomial::leading_coefficient() const {
    assert(!terms_.empty());
    return terms_.rbegin()->second;
}

const Exponents& Polynomial::leading_exponents() const {
    assert(!terms_.empty());
    return terms_.rbegin()->first;
}

Rational Polynomial::rational_content() const {
    Rational c(0);
    for (const auto& [e, coeff] : terms_) c = rational_gcd(c, coeff);
    return c;
}

namespace {

bool try_exact_divide(const Polynomial& num, const Polynomial& divisor,
                      Polynomial& quot) {
    const int n = num.nvars();
    Polynomial rem = num;
    quot = Polynomial(n);
    const Exponents& lead_e = divisor.leading_exponents();
    const Rational& lead_c = divisor.leading_coefficient();
    Exponents q(n);
    while (!rem.is_zero()) {
        const Exponents& re = rem.leading_exponents();
        for (int i = 0; i < n; ++i) {
            if (re[i] < lead_e[i]) return false;
            q[i] = re[i] - lead_e[i];
        }
        Rational qc = rem.leading_coefficient() / lead_c;
        Polynomial mono(n);
        mono.add_term(q, qc);
        quot.add_term(q, qc);
        rem = rem - mono * divisor;
    }
    return true;
}

} // namespace

Polynomial Polynomial::exact_divide(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw DivisionByZeroFunction("polynomial division by zero");
    if (divisor.is_constant()) return *this * (Rational(1) / divisor.constant_value());
    Polynomial quot(nvars_);
    if (!try_exact_divide(*this, divisor, quot))
        throw DivisionByZeroFunction("inexact polynomial division");
    return quot;
}

namespace {

// Integer-primitive part with positive leading coefficient; (0 stays 0).
Polynomial primitive(const Polynomial& p) {
    if (p.is_zero()) return p;
    Rational c = p.rational_content();
    if (p.leading_coefficient() < 0) c = -c;
    return p * (Rational(1) / c);
}

// Coefficients of p viewed as a univariate polynomial in `var`; entry d
// keeps the full exponent layout with var zeroed.
std::vector<Polynomial> coefficients_in(const Polynomial& p, int var) {
    int deg = p.degree_in(var);
    std::vector<Polynomial> out((size_t)std::max(deg + 1, 1), Polynomial(p.nvars()));
    for (const auto& [e, c] : p.terms()) {
        Exponents r = e;
        unsigned d = r[var];
        r[var] = 0;
        out[d].add_term(r, c);
    }
    return out;
}

// Content of p with respect to `var`: gcd of its var-coefficients.
Polynomial content_in(const Polynomial& p, int var) {
    Polynomial c(p.nvars());
    for (const auto& coeff : coefficients_in(p, var)) {
        if (coeff.is_zero()) continue;
        c = Polynomial::gcd(c, coeff);
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c;
}

// Pseudo-remainder of a by b with respect to `var`.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, int var, int nvars) {
    auto bc = coefficients_in(b, var);
    int db = (int)bc.size() - 1;
    Polynomial lb = bc[db];
    Polynomial rem = a;
    while (!rem.is_zero() && rem.degree_in(var) >= db) {
        auto rc = coefficients_in(rem, var);
        int dr = (int)rc.size() - 1;
        // rem := lb*rem - lc(rem)*x^(dr-db)*b
        Polynomial shift(nvars);
        Exponents e(nvars, 0);
        e[var] = (unsigned)(dr - db);
        shift.add_term(e, 1);
        rem = rem * lb - rc[dr] * shift * b;
    }
    return rem;
}

} // namespace

namespace {

// Height of an integer-coefficient polynomial: max |coefficient|.
mpz_class poly_height(const Polynomial& p) {
    mpz_class h = 0;
    for (const auto& [e, c] : p.terms()) {
        mpz_class a = abs(c.get_num());
        if (a > h) h = a;
    }
    return h;
}

// Substitutes var -> xi, folding the powers into the coefficients.
Polynomial evaluate_var(const Polynomial& p, int var, const mpz_class& xi) {
    Polynomial out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Exponents r = e;
        r[var] = 0;
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), xi.get_mpz_t(), e[var]);
        out.add_term(r, c * Rational(scale));
    }
    return out;
}

// Balanced remainder in (-xi/2, xi/2].
mpz_class mods(const mpz_class& c, const mpz_class& xi) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
    if (r * 2 > xi) r -= xi;
    return r;
}

// Integer content (gcd of the coefficients, which must be integers).
mpz_class int_content(const Polynomial& p) {
    mpz_class c = 0;
    for (const auto& [e, coeff] : p.terms()) {
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), coeff.get_num_mpz_t());
        if (c == 1) break;
    }
    return c;
}

// Heuristic gcd (evaluate / reconstruct / verify), returning the full
// integer gcd including content: the content carries the images of the
// outer variables through the recursion, so it must be preserved.
// Every polynomial candidate is checked by exact division; returns
// false when an evaluation point was unlucky and the caller should
// retry or fall back to the PRS.
bool gcdheu(const Polynomial& a, const Polynomial& b, Polynomial& result, int depth) {
    const int n = a.nvars();
    if (depth > 16) return false;
    int var = -1;
    for (int i = 0; i < n; ++i)
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) { var = i; break; }
    if (var < 0) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.constant_value().get_num_mpz_t(),
                b.constant_value().get_num_mpz_t());
        result = Polynomial::constant(n, Rational(g));
        return true;
    }

    mpz_class ca = int_content(a), cb = int_content(b);
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    Polynomial a0 = a * Rational(mpz_class(1), ca);
    Polynomial b0 = b * Rational(mpz_class(1), cb);

    mpz_class ha = poly_height(a0), hb = poly_height(b0);
    mpz_class xi = 2 * (ha < hb ? ha : hb) + 29;
    const int max_digits = std::min(a0.degree_in(var), b0.degree_in(var)) + 1;

    for (int attempt = 0; attempt < 6; ++attempt) {
        Polynomial A = evaluate_var(a0, var, xi);
        Polynomial B = evaluate_var(b0, var, xi);
        Polynomial gamma(n);
        if (!A.is_zero() && !B.is_zero() && gcdheu(A, B, gamma, depth + 1)) {
            // xi-adic reconstruction with balanced digits.
            Polynomial g(n);
            Polynomial q = gamma;
            bool ok = true;
            for (int digit = 0; !q.is_zero(); ++digit) {
                if (digit > max_digits) { ok = false; break; }
                Polynomial d(n);
                Polynomial next(n);
                for (const auto& [e, cf] : q.terms()) {
                    mpz_class m = mods(cf.get_num(), xi);
                    if (m != 0) {
                        Exponents de = e;
                        de[var] = (unsigned)digit;
                        d.add_term(de, Rational(m));
                    }
                    next.add_term(e, Rational(mpz_class((cf.get_num() - m) / xi)));
                }
                g = g + d;
                q = next;
            }
            if (ok && !g.is_zero()) {
                g = primitive(g);
                Polynomial q1(n), q2(n);
                if (try_exact_divide(a0, g, q1) && try_exact_divide(b0, g, q2)) {
                    result = g * Rational(c);
                    return true;
                }
            }
        }
        xi = xi * 73794 / 27011 + 17; // grow past unlucky points
    }
    return false;
}

} // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return primitive(b);
    if (b.is_zero()) return primitive(a);
    assert(a.nvars_ == b.nvars_);
    const int n = a.nvars_;
    Polynomial pa = primitive(a);
    Polynomial pb = primitive(b);

    // Project away variables that occur on one side only: the gcd lies
    // in the content with respect to such a variable.
    for (bool changed = true; changed;) {
        changed = false;
        if (pa.is_constant() || pb.is_constant()) return constant(n, 1);
        for (int v = 0; v < n; ++v) {
            bool in_a = pa.degree_in(v) > 0, in_b = pb.degree_in(v) > 0;
            if (in_a && !in_b) {
                pa = primitive(content_in(pa, v));
                changed = true;
            } else if (in_b && !in_a) {
                pb = primitive(content_in(pb, v));
                changed = true;
            }
        }
    }

    // Cheap wins first: equal inputs and one-divides-the-other.
    if (pa == pb) return pa;
    {
        Polynomial q(n);
        if (try_exact_divide(pa, pb, q)) return pb;
        if (try_exact_divide(pb, pa, q)) return pa;
    }

    Polynomial heu(n);
    if (gcdheu(pa, pb, heu, 0)) return primitive(heu);

    // Fallback: primitive PRS in the cheapest common variable.
    int var = -1, best = INT_MAX;
    for (int v = 0; v < n; ++v) {
        int da = pa.degree_in(v), db = pb.degree_in(v);
        if (da > 0 && db > 0 && std::min(da, db) < best) {
            best = std::min(da, db);
            var = v;
        }
    }
    assert(var >= 0);

    Polynomial ca = content_in(pa, var);
    Polynomial cb = content_in(pb, var);
    Polynomial cont = gcd(ca, cb);
    Polynomial u = primitive(pa.exact_divide(ca));
    Polynomial v = primitive(pb.exact_divide(cb));
    if (u.degree_in(var) < v.degree_in(var)) std::swap(u, v);

    while (true) {
        Polynomial r = pseudo_remainder(u, v, var, n);
        if (r.is_zero()) break;
        if (r.degree_in(var) == 0) {
            // gcd of the primitive parts is free of `var`, hence trivial.
            return primitive(cont);
        }
        u = v;
        v = primitive(r.exact_divide(content_in(r, var)));
    }
    return primitive(cont * v.exact_divide(content_in(v, var)));
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending grlex order reads most naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational ac = rational_abs(c);
        // A leading "-x^2" would re-parse as (-x)^2 under the grammar's
        // unary-minus rule, so the coefficient stays explicit there.
        bool lead_negative = first && c < 0;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (ac == 1);
        bool any_var = std::any_of(e.begin(), e.end(), [](unsigned x) { return x > 0; });
        if (!unit || !any_var || lead_negative) os << ac.get_str();
        bool need_star = !unit || !any_var || lead_negative;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << names[i];
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

} // namespace modcalc

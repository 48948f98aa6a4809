#include "modcalc/parser.hpp"

#include <cctype>

namespace modcalc {

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& chart)
        : text_(text), chart_(chart) {}

    ScalarFunction parse() {
        ScalarFunction e = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return e;
    }

private:
    const std::string& text_;
    const std::vector<std::string>& chart_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw SyntaxError(msg + " at position " + std::to_string(pos_) +
                          " in '" + text_ + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    ScalarFunction expr() {
        ScalarFunction acc = term();
        while (true) {
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else return acc;
        }
    }

    ScalarFunction term() {
        ScalarFunction acc = factor();
        while (true) {
            if (eat('*')) acc = acc * factor();
            else if (eat('/')) acc = acc / factor();
            else return acc;
        }
    }

    ScalarFunction factor() {
        ScalarFunction b = base();
        if (eat('^')) {
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit((unsigned char)text_[pos_]))
                fail("expected nonnegative integer exponent");
            unsigned long e = 0;
            while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
                e = e * 10 + (unsigned long)(text_[pos_] - '0');
                if (e > 1000000) fail("exponent too large");
                ++pos_;
            }
            return b.pow((unsigned)e);
        }
        return b;
    }

    ScalarFunction base() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '-') {
            ++pos_;
            return -base();
        }
        if (c == '(') {
            ++pos_;
            ScalarFunction e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit((unsigned char)c)) return literal();
        if (std::isalpha((unsigned char)c) || c == '_') return identifier();
        fail("unexpected character");
    }

    ScalarFunction literal() {
        std::string digits = read_digits();
        Rational value(digits);
        if (peek() == '/') {
            // Lookahead: a '/' followed by digits binds as part of the
            // literal; either reading yields the same value.
            size_t save = pos_;
            ++pos_;
            skip_ws();
            if (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
                std::string d = read_digits();
                Rational den(d);
                if (den == 0) throw DivisionByZeroFunction("literal '" + digits + "/" + d + "'");
                value /= den;
            } else {
                pos_ = save;
            }
        }
        value.canonicalize();
        return ScalarFunction::constant((int)chart_.size(), value);
    }

    std::string read_digits() {
        skip_ws();
        std::string out;
        while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_]))
            out.push_back(text_[pos_++]);
        if (out.empty()) fail("expected digits");
        return out;
    }

    ScalarFunction identifier() {
        std::string name;
        name.push_back(text_[pos_++]);
        while (pos_ < text_.size() &&
               (std::isalnum((unsigned char)text_[pos_]) || text_[pos_] == '_'))
            name.push_back(text_[pos_++]);
        for (size_t i = 0; i < chart_.size(); ++i)
            if (chart_[i] == name)
                return ScalarFunction::variable((int)chart_.size(), (int)i);
        throw UnknownIdentifier("'" + name + "' is not a chart coordinate");
    }
};

} // namespace

ScalarFunction parse_scalar(const std::string& text,
                            const std::vector<std::string>& chart) {
    return Parser(text, chart).parse();
}

Rational parse_rational(const std::string& text) {
    ScalarFunction f = parse_scalar(text, {});
    return f.num().constant_value() / f.den().constant_value();
}

} // namespace modcalc

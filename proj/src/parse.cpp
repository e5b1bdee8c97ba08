#include "padicforms/parse.hpp"

#include <cctype>

namespace padicforms {

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    std::size_t pos() const { return pos_; }
    int terms() const { return terms_; }
    bool at_end()
    {
        skip();
        return pos_ == s_.size();
    }
    char peek()
    {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c)
    {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c, const char* what)
    {
        if (!accept(c)) throw ParseError(pos_, what);
    }

    QPoly poly()
    {
        QPoly out;
        terms_ = 1;
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        out += neg ? -term() : term();
        for (;;) {
            if (accept('+'))
                out += term();
            else if (accept('-'))
                out -= term();
            else
                break;
            ++terms_;
        }
        return out;
    }

    // a term, stopping before a '/' that is not followed by a digit
    QPoly term()
    {
        char c = peek();
        if (c == 't') return power(1);
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(pos_, "a number or 't'");
        Integer num = uint();
        Rational coef(num);
        std::size_t save = pos_;
        if (accept('/')) {
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                Integer den = uint();
                if (den == 0) throw ParseError(save + 1, "a nonzero denominator");
                coef = Rational(num, den);
                coef.canonicalize();
            } else {
                pos_ = save;  // belongs to a quotient of groups
            }
        }
        if (accept('*')) {
            if (peek() != 't') throw ParseError(pos_, "'t'");
            return power(coef);
        }
        if (peek() == 't') return power(coef);
        return QPoly(coef);
    }

    QPoly group()
    {
        if (accept('(')) {
            QPoly p = poly();
            expect(')', "')'");
            return p;
        }
        return term();
    }

private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    Integer uint()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError(pos_, "an unsigned integer");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    QPoly power(const Rational& coef)
    {
        expect('t', "'t'");
        long k = 1;
        if (accept('^')) {
            std::size_t at = pos_;
            Integer e = uint();
            if (!e.fits_slong_p() || e > 100000) throw ParseError(at, "a small exponent");
            k = e.get_si();
        }
        return QPoly::monomial(coef, static_cast<int>(k));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    int terms_ = 0;
};

}  // namespace

QPoly parse_poly(std::string_view text)
{
    Parser p(text);
    QPoly out = p.poly();
    if (!p.at_end()) throw ParseError(p.pos(), "'+', '-' or end of input");
    return out;
}

Rational parse_constant(std::string_view text)
{
    QPoly p = parse_poly(text);
    if (p.degree() > 0) throw ParseError(0, "a constant");
    return p[0];
}

RatFunc parse_ratfunc(std::string_view text)
{
    Parser p(text);
    QPoly num;
    bool grouped = p.peek() == '(';
    if (grouped) {
        num = p.group();
    } else {
        num = p.poly();
    }
    if (p.at_end()) return RatFunc(num);
    std::size_t at = p.pos();
    if (!p.accept('/')) throw ParseError(at, "'/' or end of input");
    if (!grouped && p.terms() > 1) throw ParseError(0, "a parenthesized numerator");
    QPoly den = p.group();
    if (!p.at_end()) throw ParseError(p.pos(), "end of input");
    if (den.is_zero()) throw ParseError(at + 1, "a nonzero denominator");
    return RatFunc(num, den);
}

}  // namespace padicforms

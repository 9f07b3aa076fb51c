#include "padic/convert.hpp"

#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

#include "padic/error.hpp"

namespace padic {

namespace {

mpz_class pow_p(const ContextPtr& ctx, long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), ctx->prime().get_mpz_t(),
               static_cast<unsigned long>(e));
    return r;
}

} // namespace

PadicNumber from_integer(const mpz_class& n, const ContextPtr& ctx) {
    return canonicalize(n, 0, ctx);
}

PadicNumber from_rational(const Rational& q, const ContextPtr& ctx) {
    if (!ctx) throw std::invalid_argument("null context");
    if (q.is_zero()) return PadicNumber::zero(ctx);
    const mpz_class& p = ctx->prime();
    mpz_class num, den;
    long v = static_cast<long>(mpz_remove(num.get_mpz_t(), q.num().get_mpz_t(),
                                          p.get_mpz_t()));
    v -= static_cast<long>(mpz_remove(den.get_mpz_t(), q.den().get_mpz_t(),
                                      p.get_mpz_t()));
    mpz_class u;
    mpz_invert(u.get_mpz_t(), den.get_mpz_t(), ctx->unit_modulus().get_mpz_t());
    u *= num;
    mpz_mod(u.get_mpz_t(), u.get_mpz_t(), ctx->unit_modulus().get_mpz_t());
    return PadicNumber::from_parts(ctx, std::move(u), v);
}

mpz_class to_integer(const PadicNumber& x) {
    if (x.is_zero()) return 0;
    if (x.val() < 0)
        throw NegativeValuation("number with valuation " +
                                std::to_string(x.val()) +
                                " has no integer lift");
    return x.unit() * pow_p(x.context(), x.val());
}

Rational to_rational(const PadicNumber& x) {
    if (x.is_zero()) return Rational();
    if (x.val() >= 0) return Rational(x.unit() * pow_p(x.context(), x.val()));
    return Rational(x.unit(), pow_p(x.context(), -x.val()));
}

namespace {

std::string power_term(const mpz_class& coeff, const mpz_class& base, long e) {
    if (e == 0) return coeff.get_str();
    if (e == 1) return coeff.get_str() + "*" + base.get_str();
    return coeff.get_str() + "*" + base.get_str() + "^" + std::to_string(e);
}

std::string format_series(const PadicNumber& x) {
    if (x.is_zero()) return "0";
    Expansion e = digits(x);
    std::string out;
    for (std::size_t i = 0; i < e.digits.size(); ++i) {
        if (e.digits[i] == 0) continue;
        if (!out.empty()) out += " + ";
        out += power_term(e.digits[i], e.prime, e.start + static_cast<long>(i));
    }
    return out;
}

std::string format_val_unit(const PadicNumber& x) {
    if (x.is_zero()) return "0";
    if (x.val() == 0) return x.unit().get_str();
    return x.unit().get_str() + "*" + x.context()->prime().get_str() + "^" +
           std::to_string(x.val());
}

} // namespace

std::string format(const PadicNumber& x, PrintMode mode) {
    switch (mode) {
        case PrintMode::Series: return format_series(x);
        case PrintMode::Terse: return to_rational(x).str();
        case PrintMode::ValUnit: return format_val_unit(x);
    }
    return format_series(x);
}

std::string format(const PadicNumber& x) {
    return format(x, x.context()->print_mode());
}

namespace {

// Tokens of the value grammar: integers and the punctuation + - * / ^.
struct Token {
    enum Kind { Int, Plus, Minus, Star, Slash, Caret, End } kind;
    mpz_class value;
    std::size_t pos;
};

std::vector<Token> lex_value(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            out.push_back({Token::Int,
                           mpz_class(std::string(text.substr(start, i - start)), 10),
                           start});
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::Plus; break;
            case '-': k = Token::Minus; break;
            case '*': k = Token::Star; break;
            case '/': k = Token::Slash; break;
            case '^': k = Token::Caret; break;
            default:
                throw SyntaxError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({k, 0, i});
        ++i;
    }
    out.push_back({Token::End, 0, text.size()});
    return out;
}

class ValueParser {
public:
    ValueParser(std::vector<Token> tokens, const ContextPtr& ctx)
        : tokens_(std::move(tokens)), ctx_(ctx) {}

    PadicNumber run() {
        // A lone fraction is its own production; everything else is a
        // sum of signed power terms.
        if (is_fraction()) return parse_fraction();
        Rational sum = parse_term();
        while (peek().kind != Token::End) {
            expect(Token::Plus, "expected '+'");
            sum = sum + parse_term();
        }
        return from_rational(sum, ctx_);
    }

private:
    bool is_fraction() const {
        std::size_t i = 0;
        if (tokens_[i].kind == Token::Minus) ++i;
        return tokens_[i].kind == Token::Int && tokens_[i + 1].kind == Token::Slash;
    }

    PadicNumber parse_fraction() {
        bool negative = accept(Token::Minus);
        mpz_class num = expect(Token::Int, "expected numerator").value;
        expect(Token::Slash, "expected '/'");
        mpz_class den = expect(Token::Int, "expected denominator").value;
        std::size_t den_pos = tokens_[pos_ - 1].pos;
        expect(Token::End, "trailing input after fraction");
        if (negative) num = -num;
        if (den == 0) throw SyntaxError("zero denominator", den_pos);
        return from_rational(Rational(std::move(num), std::move(den)), ctx_);
    }

    // term := ['-'] INT ['*' BASE ['^' ['-'] INT]]
    Rational parse_term() {
        bool negative = accept(Token::Minus);
        mpz_class coeff = expect(Token::Int, "expected integer").value;
        if (negative) coeff = -coeff;
        if (!accept(Token::Star)) return Rational(std::move(coeff));
        Token base = expect(Token::Int, "expected base after '*'");
        if (base.value != ctx_->prime())
            throw SyntaxError("base " + base.value.get_str() +
                                  " does not match the context prime " +
                                  ctx_->prime().get_str(),
                              base.pos);
        long e = 1;
        if (accept(Token::Caret)) {
            bool eneg = accept(Token::Minus);
            Token et = expect(Token::Int, "expected exponent");
            if (!et.value.fits_slong_p() || et.value > 1000000)
                throw SyntaxError("exponent out of range", et.pos);
            e = et.value.get_si();
            if (eneg) e = -e;
        }
        mpz_class pk;
        mpz_pow_ui(pk.get_mpz_t(), ctx_->prime().get_mpz_t(),
                   static_cast<unsigned long>(e < 0 ? -e : e));
        if (e >= 0) return Rational(coeff * pk);
        return Rational(std::move(coeff), std::move(pk));
    }

    const Token& peek() const { return tokens_[pos_]; }

    bool accept(Token::Kind k) {
        if (tokens_[pos_].kind != k) return false;
        ++pos_;
        return true;
    }

    Token expect(Token::Kind k, const std::string& msg) {
        if (tokens_[pos_].kind != k) throw SyntaxError(msg, tokens_[pos_].pos);
        return tokens_[pos_++];
    }

    std::vector<Token> tokens_;
    const ContextPtr& ctx_;
    std::size_t pos_ = 0;
};

} // namespace

PadicNumber parse(std::string_view text, const ContextPtr& ctx) {
    if (!ctx) throw std::invalid_argument("null context");
    return ValueParser(lex_value(text), ctx).run();
}

} // namespace padic

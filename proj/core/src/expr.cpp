#include "padic/expr.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "padic/analytic.hpp"
#include "padic/arith.hpp"
#include "padic/convert.hpp"
#include "padic/error.hpp"

namespace padic {

namespace {

struct Token {
    enum Kind {
        Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End
    } kind;
    mpz_class value;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                ++i;
            out.push_back({Token::Int,
                           mpz_class(std::string(s.substr(start, i - start)), 10),
                           {},
                           start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < s.size() &&
                   std::isalnum(static_cast<unsigned char>(s[i])))
                ++i;
            out.push_back({Token::Ident, 0,
                           std::string(s.substr(start, i - start)), start});
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::Plus; break;
            case '-': k = Token::Minus; break;
            case '*': k = Token::Star; break;
            case '/': k = Token::Slash; break;
            case '^': k = Token::Caret; break;
            case '(': k = Token::LParen; break;
            case ')': k = Token::RParen; break;
            default:
                throw SyntaxError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({k, 0, {}, i});
        ++i;
    }
    out.push_back({Token::End, 0, {}, s.size()});
    return out;
}

// Precedence, loosest to tightest: + - | * / | unary - | ^ | atom.
// The exponent of ^ is an integer literal, optionally negated.
class Evaluator {
public:
    Evaluator(std::vector<Token> tokens, const ContextPtr& ctx)
        : tokens_(std::move(tokens)), ctx_(ctx) {}

    EvalValue run() {
        EvalValue v = parse_sum();
        expect(Token::End, "trailing input");
        return v;
    }

private:
    EvalValue parse_sum() {
        EvalValue acc = parse_product();
        for (;;) {
            if (accept(Token::Plus))
                acc = add(number(acc), number(parse_product()));
            else if (accept(Token::Minus))
                acc = sub(number(acc), number(parse_product()));
            else
                return acc;
        }
    }

    EvalValue parse_product() {
        EvalValue acc = parse_unary();
        for (;;) {
            if (accept(Token::Star))
                acc = mul(number(acc), number(parse_unary()));
            else if (accept(Token::Slash))
                acc = div(number(acc), number(parse_unary()));
            else
                return acc;
        }
    }

    EvalValue parse_unary() {
        if (accept(Token::Minus)) return neg(number(parse_unary()));
        return parse_power();
    }

    EvalValue parse_power() {
        EvalValue base = parse_atom();
        if (!accept(Token::Caret)) return base;
        bool negated = accept(Token::Minus);
        Token e = expect(Token::Int, "expected integer exponent");
        if (!e.value.fits_slong_p() || e.value > 1000000)
            throw SyntaxError("exponent out of range", e.pos);
        long k = e.value.get_si();
        return pow_int(number(base), negated ? -k : k);
    }

    EvalValue parse_atom() {
        if (accept(Token::LParen)) {
            EvalValue v = parse_sum();
            expect(Token::RParen, "expected ')'");
            return v;
        }
        const Token& t = peek();
        if (t.kind == Token::Int) {
            ++pos_;
            return from_integer(t.value, ctx_);
        }
        if (t.kind == Token::Ident) {
            ++pos_;
            expect(Token::LParen, "expected '(' after function name");
            EvalValue arg = parse_sum();
            expect(Token::RParen, "expected ')'");
            return apply(t.text, t.pos, arg);
        }
        throw SyntaxError("expected a value", t.pos);
    }

    EvalValue apply(const std::string& fn, std::size_t pos, const EvalValue& arg) {
        if (fn == "sqrt") return padic::sqrt(number(arg));
        if (fn == "exp") return padic::exp(number(arg));
        if (fn == "log") return padic::log(number(arg));
        if (fn == "teich") return teichmuller(number(arg));
        if (fn == "val") return number(arg).valuation();
        if (fn == "absval") return abs_p(number(arg));
        throw SyntaxError("unknown function '" + fn + "'", pos);
    }

    // Arithmetic applies only to numbers; val/absval results are terminal.
    const PadicNumber& number(const EvalValue& v) {
        if (const PadicNumber* n = std::get_if<PadicNumber>(&v)) return *n;
        throw SyntaxError("val/absval results cannot be used as operands",
                          peek().pos);
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

EvalValue evaluate(std::string_view text, const ContextPtr& ctx) {
    if (!ctx) throw std::invalid_argument("null context");
    return Evaluator(lex(text), ctx).run();
}

std::string format_value(const EvalValue& v, PrintMode mode) {
    if (const PadicNumber* n = std::get_if<PadicNumber>(&v)) return format(*n, mode);
    if (const Valuation* val = std::get_if<Valuation>(&v)) return val->str();
    return std::get<Rational>(v).str();
}

} // namespace padic

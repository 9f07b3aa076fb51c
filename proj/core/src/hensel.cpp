#include "padic/hensel.hpp"

#include <cctype>
#include <utility>

#include "padic/convert.hpp"
#include "padic/error.hpp"

namespace padic {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs)
    : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPolynomial::coeff(long k) const {
    static const mpz_class zero_coeff(0);
    if (k < 0 || k > degree()) return zero_coeff;
    return coeffs_[static_cast<std::size_t>(k)];
}

mpz_class IntPolynomial::eval_integer(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

mpz_class IntPolynomial::eval_mod(const mpz_class& x, const mpz_class& m) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
        mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
    }
    return acc;
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (long k = degree(); k >= 0; --k) {
        const mpz_class& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (k == 0 || a != 1) {
            out += a.get_str();
            if (k > 0) out += "*";
        }
        if (k == 1) out += "x";
        else if (k > 1) out += "x^" + std::to_string(k);
    }
    return out;
}

namespace {

// Parses one polynomial term after an optional sign has been consumed:
// INT, INT*x, INT*x^K, x, x^K.  i points past leading whitespace.
struct PolyTerm {
    mpz_class coeff;
    long exponent;
};

void skip_ws(std::string_view s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

mpz_class parse_uint(std::string_view s, std::size_t& i, const char* what) {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw SyntaxError(std::string("expected ") + what, start);
    return mpz_class(std::string(s.substr(start, i - start)), 10);
}

PolyTerm parse_poly_term(std::string_view s, std::size_t& i) {
    PolyTerm t{1, 0};
    bool have_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        t.coeff = parse_uint(s, i, "integer");
        have_coeff = true;
        skip_ws(s, i);
        if (i < s.size() && s[i] == '*') {
            ++i;
            skip_ws(s, i);
        } else {
            return t; // constant term
        }
    }
    if (i >= s.size() || s[i] != 'x')
        throw SyntaxError(have_coeff ? "expected 'x' after '*'"
                                     : "expected integer or 'x'",
                          i);
    ++i;
    skip_ws(s, i);
    t.exponent = 1;
    if (i < s.size() && s[i] == '^') {
        ++i;
        skip_ws(s, i);
        std::size_t pos = i;
        mpz_class e = parse_uint(s, i, "exponent");
        if (!e.fits_slong_p() || e > 100000)
            throw SyntaxError("exponent out of range", pos);
        t.exponent = e.get_si();
    }
    return t;
}

} // namespace

IntPolynomial IntPolynomial::parse(std::string_view text) {
    std::vector<mpz_class> coeffs;
    std::size_t i = 0;
    skip_ws(text, i);
    if (i >= text.size()) throw SyntaxError("empty polynomial", i);
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws(text, i);
        } else if (!first) {
            throw SyntaxError("expected '+' or '-'", i);
        }
        PolyTerm t = parse_poly_term(text, i);
        if (t.exponent >= static_cast<long>(coeffs.size()))
            coeffs.resize(static_cast<std::size_t>(t.exponent) + 1, mpz_class(0));
        coeffs[static_cast<std::size_t>(t.exponent)] += sign * t.coeff;
        skip_ws(text, i);
        first = false;
    }
    return IntPolynomial(std::move(coeffs));
}

PadicNumber poly_eval(const IntPolynomial& f, const PadicNumber& x) {
    const ContextPtr& ctx = x.context();
    PadicNumber acc = PadicNumber::zero(ctx);
    const auto& c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = add(mul(acc, x), from_integer(*it, ctx));
    return acc;
}

IntPolynomial poly_derivative(const IntPolynomial& f) {
    if (f.degree() < 1) return IntPolynomial();
    std::vector<mpz_class> d;
    d.reserve(static_cast<std::size_t>(f.degree()));
    for (long k = 1; k <= f.degree(); ++k) d.push_back(f.coeff(k) * k);
    return IntPolynomial(std::move(d));
}

HenselResult hensel_lift(const IntPolynomial& f, const mpz_class& seed,
                         const ContextPtr& ctx) {
    if (!ctx) throw std::invalid_argument("null context");
    const mpz_class& p = ctx->prime();
    mpz_class s0;
    mpz_mod(s0.get_mpz_t(), seed.get_mpz_t(), p.get_mpz_t());
    if (f.eval_mod(s0, p) != 0)
        throw SeedNotRoot("f(" + seed.get_str() + ") != 0 mod " + p.get_str());
    IntPolynomial df = poly_derivative(f);
    if (df.eval_mod(s0, p) == 0)
        throw SingularSeed("f'(" + seed.get_str() + ") = 0 mod " + p.get_str());

    // Each Newton step at least doubles the number of correct digits,
    // so a fixed point at precision N arrives in about log2(N) steps.
    long budget = 2;
    for (long n = 1; n < ctx->precision(); n *= 2) ++budget;

    PadicNumber alpha = from_integer(seed, ctx);
    HenselResult result{alpha, 0, {alpha}};
    for (;;) {
        // alpha stays congruent to the seed mod p, so f'(alpha) stays a unit
        PadicNumber next =
            sub(alpha, div(poly_eval(f, alpha), poly_eval(df, alpha)));
        ++result.iterations;
        result.trace.push_back(next);
        if (equal(next, alpha)) {
            result.root = next;
            return result;
        }
        if (result.iterations >= budget)
            throw NoConvergence("no fixed point within " +
                                std::to_string(budget) + " steps");
        alpha = next;
    }
}

} // namespace padic

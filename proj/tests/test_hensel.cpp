#include "doctest.h"
#include "oracle/oracle.hpp"
#include "padic/padic.hpp"
#include "support.hpp"

using namespace padic;

namespace {

// Largest admissible iteration count for the given precision.
long newton_budget(long precision) {
    long budget = 2;
    for (long n = 1; n < precision; n *= 2) ++budget;
    return budget;
}

void check_trace(const IntPolynomial& f, const mpz_class& seed,
                 const HenselResult& res, const ContextPtr& ctx) {
    IntPolynomial df = poly_derivative(f);
    REQUIRE(res.trace.size() >= 2);
    CHECK(res.iterations == static_cast<long>(res.trace.size()) - 1);
    CHECK(res.iterations <= newton_budget(ctx->precision()));
    CHECK(equal(res.trace.front(), from_integer(seed, ctx)));
    CHECK(equal(res.trace.back(), res.root));
    CHECK(equal(res.trace[res.trace.size() - 2], res.root));

    for (std::size_t n = 0; n + 1 < res.trace.size(); ++n) {
        const PadicNumber& a = res.trace[n];
        const PadicNumber& b = res.trace[n + 1];
        // each entry comes from the one before by a Newton step
        PadicNumber step = sub(a, div(poly_eval(f, a), poly_eval(df, a)));
        CHECK(equal(b, step));
        if (equal(a, b)) continue;
        // progress: the residual valuation climbs until it saturates
        Valuation va = valuation(poly_eval(f, a));
        Valuation vb = valuation(poly_eval(f, b));
        CHECK((vb > va || vb >= Valuation::finite(ctx->precision())));
    }
}

} // namespace

TEST_SUITE("hensel") {

TEST_CASE("polynomial parsing and printing") {
    IntPolynomial f = IntPolynomial::parse("x^3 - 2");
    CHECK(f.degree() == 3);
    CHECK(f.coeff(0) == -2);
    CHECK(f.coeff(1) == 0);
    CHECK(f.coeff(3) == 1);
    CHECK(f.coeff(7) == 0);
    CHECK(f.str() == "x^3 - 2");

    CHECK(IntPolynomial::parse("2*x^5-x^2+7").str() == "2*x^5 - x^2 + 7");
    CHECK(IntPolynomial::parse("-x + 3").str() == "-x + 3");
    CHECK(IntPolynomial::parse("5").degree() == 0);
    CHECK(IntPolynomial::parse("x + x").str() == "2*x");
    CHECK(IntPolynomial::parse("  x ^ 2  -  6 ").str() == "x^2 - 6");
    CHECK(IntPolynomial().is_zero());
    CHECK(IntPolynomial().str() == "0");

    CHECK_THROWS_AS(IntPolynomial::parse(""), SyntaxError);
    CHECK_THROWS_AS(IntPolynomial::parse("x^"), SyntaxError);
    CHECK_THROWS_AS(IntPolynomial::parse("2**x"), SyntaxError);
    CHECK_THROWS_AS(IntPolynomial::parse("x^-1"), SyntaxError);
    CHECK_THROWS_AS(IntPolynomial::parse("y+1"), SyntaxError);
}

TEST_CASE("polynomial evaluation") {
    IntPolynomial f = IntPolynomial::parse("x^3 - 2");
    CHECK(f.eval_integer(3) == 25);
    CHECK(f.eval_integer(0) == -2);
    CHECK(f.eval_mod(3, 5) == 0);
    CHECK(f.eval_mod(3, 7) == 4);

    ContextPtr q5 = make_context(5);
    PadicNumber x3 = from_integer(3, q5);
    PadicNumber v = poly_eval(f, x3);
    CHECK(v.unit() == 1);
    CHECK(v.val() == 2);
    CHECK(poly_eval(IntPolynomial(), x3).is_zero());
    CHECK(equal(poly_eval(IntPolynomial::parse("x"), x3), x3));

    IntPolynomial df = poly_derivative(f);
    CHECK(df.str() == "3*x^2");
    CHECK(poly_derivative(IntPolynomial::parse("x")).str() == "1");
    CHECK(poly_derivative(IntPolynomial::parse("7")).is_zero());
    CHECK(poly_derivative(IntPolynomial::parse("2*x^5-x^2+7")).str() ==
          "10*x^4 - 2*x");
}

TEST_CASE("cube root of 2 in the 5-adics") {
    ContextPtr ctx = make_context(5, 20);
    IntPolynomial f = IntPolynomial::parse("x^3-2");
    HenselResult res = hensel_lift(f, 3, ctx);

    CHECK(format(res.root, PrintMode::Series) ==
          "3 + 2*5^2 + 2*5^3 + 3*5^4 + 1*5^5 + 4*5^6 + 2*5^8 + 3*5^9 + "
          "4*5^12 + 4*5^14 + 4*5^15 + 3*5^16 + 1*5^17 + 1*5^18 + 2*5^19");
    CHECK(res.iterations == 5);
    CHECK(equal(pow_int(res.root, 3), from_integer(2, ctx)));
    check_trace(f, 3, res, ctx);
}

TEST_CASE("square root of 6 at two digits") {
    ContextPtr ctx = make_context(5, 2);
    HenselResult res = hensel_lift(IntPolynomial::parse("x^2-6"), 1, ctx);
    CHECK(res.root.unit() == 16);
    CHECK(res.root.val() == 0);
    CHECK(to_rational(res.root) == Rational(16));
}

TEST_CASE("lift reaching a root of positive valuation") {
    ContextPtr ctx = make_context(5, 20);
    HenselResult res = hensel_lift(IntPolynomial::parse("3*x - 15"), 0, ctx);
    CHECK(equal(res.root, from_integer(5, ctx)));
    check_trace(IntPolynomial::parse("3*x - 15"), 0, res, ctx);
}

TEST_CASE("seed validation") {
    ContextPtr q5 = make_context(5);
    CHECK_THROWS_AS(hensel_lift(IntPolynomial::parse("x^2-6"), 2, q5),
                    SeedNotRoot);
    ContextPtr q2 = make_context(2);
    CHECK_THROWS_AS(hensel_lift(IntPolynomial::parse("x^2-1"), 1, q2),
                    SingularSeed);
    // seeds are read modulo p, so shifted seeds work too
    HenselResult res = hensel_lift(IntPolynomial::parse("x^2-6"), 11, q5);
    CHECK(equal(mul(res.root, res.root), from_integer(6, q5)));
}

TEST_CASE("lifted roots match exhaustive search at small moduli") {
    IntPolynomial f = IntPolynomial::parse("x^3-x-1");
    for (const auto& pstr : {"2", "3", "5", "7", "11"}) {
        mpz_class p(pstr);
        ContextPtr ctx = make_context(p, 4);
        mpz_class m = ctx->unit_modulus();
        if (m > 1000000) continue;
        IntPolynomial df = poly_derivative(f);
        for (unsigned long s = 0; s < p.get_ui(); ++s) {
            if (f.eval_mod(s, p) != 0 || df.eval_mod(s, p) == 0) continue;
            HenselResult res = hensel_lift(f, s, ctx);
            std::uint64_t want =
                oracle::search_polyroot_or_throw(f, s, p.get_ui(), m.get_ui());
            mpz_class lift = to_integer(res.root);
            CHECK(lift == mpz_class(want));
        }
    }
}

TEST_CASE("several roots of the same polynomial stay separate") {
    // x^2 - 1 has the two roots 1 and -1 in every Q_p with p odd
    ContextPtr q7 = make_context(7, 12);
    IntPolynomial f = IntPolynomial::parse("x^2-1");
    HenselResult a = hensel_lift(f, 1, q7);
    HenselResult b = hensel_lift(f, 6, q7);
    CHECK(equal(a.root, one(q7)));
    CHECK(equal(b.root, neg(one(q7))));
    CHECK(!equal(a.root, b.root));
}

} // TEST_SUITE

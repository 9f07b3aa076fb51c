// Command-line calculator over QQ_p: expression evaluation, Hensel
// lifting, and representation conversion.
//
// Exit codes: 0 success, 2 usage or parse error, 3 domain error
// (reported on stderr by error name).

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "padic/padic.hpp"

namespace {

struct CommonFlags {
    std::string prime;
    long prec = 20;
    std::string fmt = "series";
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("-p,--prime", flags.prime, "prime p of QQ_p")->required();
    cmd->add_option("--prec", flags.prec, "precision (stored unit digits)")
        ->capture_default_str();
    cmd->add_option("--format", flags.fmt, "output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"series", "terse", "val-unit"}));
}

padic::ContextPtr context_of(const CommonFlags& flags) {
    return padic::make_context(mpz_class(flags.prime), flags.prec,
                               padic::print_mode_from_string(flags.fmt));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-adic calculator"};
    app.require_subcommand(1);

    CommonFlags eval_flags;
    std::string expr;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
    add_common(eval_cmd, eval_flags);
    eval_cmd->add_option("expr", expr, "expression to evaluate")->required();

    CommonFlags hensel_flags;
    std::string poly, seed;
    CLI::App* hensel_cmd =
        app.add_subcommand("hensel", "lift a simple polynomial root");
    add_common(hensel_cmd, hensel_flags);
    hensel_cmd->add_option("poly", poly, "integer polynomial in x")->required();
    hensel_cmd->add_option("--seed", seed, "root of the polynomial mod p")
        ->required();

    CommonFlags convert_flags;
    std::string value, to_fmt;
    CLI::App* convert_cmd =
        app.add_subcommand("convert", "re-render a value in another format");
    add_common(convert_cmd, convert_flags);
    convert_cmd->add_option("value", value, "integer, fraction, or series")
        ->required();
    convert_cmd->add_option("--to", to_fmt, "target format")
        ->check(CLI::IsMember({"series", "terse", "val-unit"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*eval_cmd) {
            padic::ContextPtr ctx = context_of(eval_flags);
            padic::EvalValue result = padic::evaluate(expr, ctx);
            std::cout << padic::format_value(result, ctx->print_mode()) << "\n";
            std::cout << "QQ_" << ctx->prime() << " (of precision "
                      << ctx->precision() << ")\n";
        } else if (*hensel_cmd) {
            padic::ContextPtr ctx = context_of(hensel_flags);
            padic::IntPolynomial f = padic::IntPolynomial::parse(poly);
            padic::HenselResult r = padic::hensel_lift(f, mpz_class(seed), ctx);
            std::cout << padic::format(r.root, ctx->print_mode()) << "\n";
            std::cout << "iterations: " << r.iterations << "\n";
        } else {
            padic::ContextPtr ctx = context_of(convert_flags);
            if (to_fmt.empty()) to_fmt = convert_flags.fmt;
            padic::PadicNumber x = padic::parse(value, ctx);
            std::cout << padic::format(x, padic::print_mode_from_string(to_fmt))
                      << "\n";
        }
        return 0;
    } catch (const padic::SyntaxError& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 2;
    } catch (const padic::PrimalityError& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 2;
    } catch (const padic::PrecisionError& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 2;
    } catch (const padic::Error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

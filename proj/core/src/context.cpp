#include "padic/context.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "padic/primality.hpp"

namespace padic {

PrintMode print_mode_from_string(std::string_view name) {
    if (name == "series") return PrintMode::Series;
    if (name == "terse") return PrintMode::Terse;
    if (name == "val-unit") return PrintMode::ValUnit;
    throw Error("unknown print mode: " + std::string(name));
}

std::string to_string(PrintMode mode) {
    switch (mode) {
        case PrintMode::Series: return "series";
        case PrintMode::Terse: return "terse";
        case PrintMode::ValUnit: return "val-unit";
    }
    return "series";
}

PadicContext::PadicContext(mpz_class p, long n, PrintMode mode)
    : prime_(std::move(p)), precision_(n), print_mode_(mode) {
    mpz_pow_ui(unit_modulus_.get_mpz_t(), prime_.get_mpz_t(),
               static_cast<unsigned long>(precision_));
}

ContextPtr make_context(const mpz_class& p, long precision, PrintMode mode) {
    if (precision < 1)
        throw PrecisionError("precision must be at least 1, got " +
                             std::to_string(precision));
    if (!is_prime(p))
        throw PrimalityError(p.get_str() + " is not prime");

    using Key = std::tuple<mpz_class, long, PrintMode>;
    static std::map<Key, ContextPtr> registry;
    static std::mutex registry_mutex;

    std::lock_guard<std::mutex> lock(registry_mutex);
    Key key{p, precision, mode};
    auto it = registry.find(key);
    if (it != registry.end()) return it->second;
    ContextPtr ctx(new PadicContext(p, precision, mode));
    registry.emplace(std::move(key), ctx);
    return ctx;
}

} // namespace padic

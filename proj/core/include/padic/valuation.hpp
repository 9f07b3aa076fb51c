#pragma once

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace padic {

// A p-adic valuation: either a finite signed exponent or the infinite
// valuation of zero.  Infinite compares strictly greater than every
// finite valuation.
class Valuation {
public:
    static Valuation finite(long v) { return Valuation(v, false); }
    static Valuation infinite() { return Valuation(0, true); }

    bool is_infinite() const { return infinite_; }

    // The finite exponent.  Throws std::logic_error on the infinite
    // valuation, which has no exponent.
    long value() const {
        if (infinite_)
            throw std::logic_error("infinite valuation has no finite exponent");
        return value_;
    }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.value_ == b.value_;
    }
    friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
    friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
    friend bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }

    friend Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

    std::string str() const {
        return infinite_ ? std::string("infinity") : std::to_string(value_);
    }
    friend std::ostream& operator<<(std::ostream& os, const Valuation& v) {
        return os << v.str();
    }

private:
    Valuation(long v, bool inf) : value_(v), infinite_(inf) {}

    long value_;
    bool infinite_;
};

} // namespace padic

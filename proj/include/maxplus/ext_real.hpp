#pragma once

#include <cassert>
#include <string>
#include <utility>

#include <maxplus/rational.hpp>

namespace maxplus {

// Scalar of the max-plus semiring: an exact rational, or bottom (-infinity).
// bottom is the identity of oplus (max) and the annihilator of otimes (+).
//
// There is deliberately no subtraction on ExtReal: residuation-style
// "bottom - bottom" cases must be decided explicitly at each call site, so
// subtraction is only ever performed on the underlying finite values.
class ExtReal {
public:
    ExtReal() = default;  // bottom
    ExtReal(Rat v) : finite_(true), v_(std::move(v)) {}
    ExtReal(long v) : finite_(true), v_(v) {}

    static ExtReal bottom() { return {}; }

    bool is_bottom() const { return !finite_; }
    bool is_finite() const { return finite_; }

    const Rat& value() const {
        assert(finite_);
        return v_;
    }

    friend bool operator==(const ExtReal& a, const ExtReal& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.v_ == b.v_;
    }
    friend bool operator!=(const ExtReal& a, const ExtReal& b) { return !(a == b); }

    // Total order with bottom as the least element.
    friend bool operator<(const ExtReal& a, const ExtReal& b) {
        if (!a.finite_) return b.finite_;
        if (!b.finite_) return false;
        return a.v_ < b.v_;
    }
    friend bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
    friend bool operator<=(const ExtReal& a, const ExtReal& b) { return !(b < a); }
    friend bool operator>=(const ExtReal& a, const ExtReal& b) { return !(a < b); }

private:
    bool finite_ = false;
    Rat v_;
};

// Semiring addition: max, with bottom as identity.
inline ExtReal oplus(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }

// Semiring multiplication: +, with bottom as annihilator.
inline ExtReal otimes(const ExtReal& a, const ExtReal& b) {
    if (a.is_bottom() || b.is_bottom()) return ExtReal::bottom();
    return ExtReal(Rat(a.value() + b.value()));
}

// "-inf" or the lowest-terms rational text.
std::string to_string(const ExtReal& v);

}  // namespace maxplus

#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>
#include <utility>

#include "trop/errors.hpp"

namespace trop {

/// Exact rational coefficients. (max,+) only ever adds, negates and compares
/// finite values, so mpq arithmetic stays closed and equality is decidable.
struct RatNum {
    using value_type = mpq_class;

    static value_type from_int(long v) { return value_type(v); }
    static value_type add(const value_type& a, const value_type& b) { return a + b; }
    static value_type neg(const value_type& a) { return -a; }
    static bool eq(const value_type& a, const value_type& b) { return cmp(a, b) == 0; }
    static bool less(const value_type& a, const value_type& b) { return cmp(a, b) < 0; }

    static std::string str(const value_type& a);
    /// Accepts integers ("-3"), decimals ("1.25") and fractions ("-2/3").
    /// Throws std::invalid_argument on anything else.
    static value_type parse(std::string_view token);
};

/// Floating coefficients with a configurable comparison tolerance. Two values
/// closer than `epsilon` compare equal; ordering is strict beyond it.
struct FloatNum {
    using value_type = double;

    static inline double epsilon = 1e-9;

    static value_type from_int(long v) { return static_cast<double>(v); }
    static value_type add(value_type a, value_type b) { return a + b; }
    static value_type neg(value_type a) { return -a; }
    static bool eq(value_type a, value_type b) { return std::fabs(a - b) <= epsilon; }
    static bool less(value_type a, value_type b) { return a < b - epsilon; }

    static std::string str(value_type a);
    static value_type parse(std::string_view token);
};

/// Element of the (max,+) idempotent semifield: either the bottom element
/// (absorbing for ⊗, neutral for ⊕, printed "-inf") or a finite coefficient.
///
/// zero() and one() follow semiring convention: zero() is the bottom element,
/// one() the multiplicative unit (the coefficient 0). Scalars are immutable
/// values; copying and sharing across threads needs no synchronization.
template <class Num>
class Scalar {
public:
    using num_type = typename Num::value_type;

    /// Default-constructed scalar is the semifield zero.
    Scalar() = default;
    explicit Scalar(num_type v) : finite_(true), v_(std::move(v)) {}

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(Num::from_int(0)); }
    static Scalar of(long v) { return Scalar(Num::from_int(v)); }

    bool is_zero() const { return !finite_; }

    /// Finite coefficient; undefined for the zero element.
    const num_type& value() const {
        if (!finite_) throw DomainError("value() of the zero element");
        return v_;
    }

    /// Idempotent addition: the larger operand in the total order.
    friend Scalar add(const Scalar& a, const Scalar& b) {
        if (a.finite_ && b.finite_) return Num::less(a.v_, b.v_) ? b : a;
        return a.finite_ ? a : b;
    }

    /// Multiplication: coefficient sum; zero is absorbing.
    friend Scalar mul(const Scalar& a, const Scalar& b) {
        if (!a.finite_ || !b.finite_) return Scalar();
        return Scalar(Num::add(a.v_, b.v_));
    }

    /// Multiplicative inverse (coefficient negation). The zero element has none.
    friend Scalar inv(const Scalar& a) {
        if (!a.finite_) throw DomainError("inverse of the zero element");
        return Scalar(Num::neg(a.v_));
    }

    /// Total order induced by addition: a <= b iff a + b = b.
    friend bool leq(const Scalar& a, const Scalar& b) {
        if (!a.finite_) return true;
        if (!b.finite_) return false;
        return !Num::less(b.v_, a.v_);
    }

    friend bool eq(const Scalar& a, const Scalar& b) {
        if (a.finite_ && b.finite_) return Num::eq(a.v_, b.v_);
        return a.finite_ == b.finite_;
    }

    friend Scalar min(const Scalar& a, const Scalar& b) { return leq(a, b) ? a : b; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) { return add(a, b); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) { return mul(a, b); }
    friend bool operator==(const Scalar& a, const Scalar& b) { return eq(a, b); }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !eq(a, b); }

    std::string str() const { return finite_ ? Num::str(v_) : "-inf"; }

    /// Inverse of str(); also accepts "." and "@" as aliases of "-inf".
    static Scalar parse(std::string_view token) {
        if (token == "-inf" || token == "." || token == "@") return Scalar();
        return Scalar(Num::parse(token));
    }

private:
    bool finite_ = false;
    num_type v_{};
};

using RatScalar = Scalar<RatNum>;
using FloatScalar = Scalar<FloatNum>;

}  // namespace trop

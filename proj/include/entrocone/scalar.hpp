#pragma once

#include <cmath>
#include <optional>

#include "entrocone/rational.hpp"

namespace entrocone {

// Logarithm base used for entropies: either e or a rational > 1.
class LogBase {
public:
    static LogBase bits() { return LogBase(Rational(2)); }
    static LogBase base3() { return LogBase(Rational(3)); }
    static LogBase natural() { return LogBase(); }
    static LogBase of(const Rational& q) {
        if (q <= 1) throw ParseError("log base must be > 1");
        return LogBase(q);
    }

    bool is_natural() const { return natural_; }
    const Rational& value() const { return q_; }
    double ln() const { return ln_; }

private:
    LogBase() : natural_(true), q_(0), ln_(1.0) {}
    explicit LogBase(const Rational& q) : natural_(false), q_(q), ln_(std::log(q.get_d())) {}

    bool natural_;
    Rational q_;
    double ln_;
};

// A real number that is exact (rational) whenever the computation that
// produced it stayed exact, with a double approximation always available.
class Scalar {
public:
    Scalar() : exact_(Rational(0)), approx_(0.0) {}
    Scalar(const Rational& q) : exact_(q), approx_(q.get_d()) {}
    Scalar(long v) : Scalar(Rational(static_cast<long>(v))) {}
    Scalar(int v) : Scalar(Rational(v)) {}

    static Scalar approximate(double d) {
        Scalar s;
        s.exact_.reset();
        s.approx_ = d;
        return s;
    }

    bool is_exact() const { return exact_.has_value(); }
    const Rational& exact() const {
        if (!exact_) throw Error("Inexact", "no exact value available");
        return *exact_;
    }
    double value() const { return approx_; }

    Scalar& operator+=(const Scalar& o) {
        if (exact_ && o.exact_) {
            *exact_ += *o.exact_;
            approx_ = exact_->get_d();
        } else {
            exact_.reset();
            approx_ += o.approx_;
        }
        return *this;
    }
    Scalar& operator-=(const Scalar& o) { return *this += o.negated(); }

    Scalar negated() const {
        Scalar s = *this;
        if (s.exact_) *s.exact_ = -*s.exact_;
        s.approx_ = -s.approx_;
        return s;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Rational& c, const Scalar& s) {
        Scalar r = s;
        if (r.exact_) {
            *r.exact_ *= c;
            r.approx_ = r.exact_->get_d();
        } else {
            r.approx_ *= c.get_d();
        }
        return r;
    }

    // Exact comparison when both sides are exact; otherwise double compare.
    int compare(const Scalar& o) const {
        if (exact_ && o.exact_) return cmp(*exact_, *o.exact_);
        return approx_ < o.approx_ ? -1 : (approx_ > o.approx_ ? 1 : 0);
    }

private:
    std::optional<Rational> exact_;
    double approx_;
};

} // namespace entrocone

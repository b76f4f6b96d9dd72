#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entrocone/errors.hpp"

namespace entrocone {

using Rational = mpq_class;
using Integer = mpz_class;

// num/den in lowest terms (mpq_class's two-argument constructor does not
// canonicalize on its own).
inline Rational ratio(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p/q" or decimal-free rational text. Throws ParseError.
Rational parse_rational(const std::string& text);

// Canonical "p" / "p/q" rendering.
std::string rational_to_string(const Rational& q);

// Scales a nonzero rational vector to coprime integers, preserving signs.
// The zero vector is returned unchanged.
void normalize_to_coprime_integers(std::vector<Rational>& v);

// If `value` == `base`^k for an integer k, returns k. `base` must be > 1.
std::optional<long> exact_power_exponent(const Rational& base, const Rational& value);

// Exact sign of sum(coeff * ln(arg)) over the given terms; every arg must be
// positive. Decides by comparing big-integer products, so the result is exact
// regardless of magnitude. Throws SizeLimit if the products would be
// astronomically large.
int sign_of_log_combination(const std::vector<std::pair<Rational, Rational>>& terms);

// Deterministic splittable RNG (splitmix64). Used instead of std
// distributions so that streams are reproducible across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(unsigned long long seed) : state_(seed) {}

    unsigned long long next() {
        unsigned long long z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), n > 0, by rejection.
    unsigned long long below(unsigned long long n) {
        unsigned long long limit = ~0ULL - (~0ULL % n);
        unsigned long long x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    // Derives an independent stream for worker `index`.
    SplitMix64 fork(unsigned long long index) const {
        SplitMix64 tmp(state_ ^ (0x5851f42d4c957f2dULL * (index + 1)));
        tmp.next();
        return tmp;
    }

private:
    unsigned long long state_;
};

} // namespace entrocone

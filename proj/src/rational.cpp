#include "entrocone/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace entrocone {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            throw ParseError("invalid character in rational literal '" + text + "'");
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw ParseError("unparsable rational literal '" + text + "'");
    if (text.find('/') != std::string::npos && q.get_den() == 0)
        throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

void normalize_to_coprime_integers(std::vector<Rational>& v) {
    Integer lcm_den = 1;
    bool all_zero = true;
    for (const auto& x : v) {
        if (x != 0) all_zero = false;
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
    }
    if (all_zero) return;
    Integer gcd_num = 0;
    std::vector<Integer> scaled(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Rational s = v[i] * Rational(lcm_den);
        scaled[i] = s.get_num();
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled[i].get_mpz_t());
    }
    for (size_t i = 0; i < v.size(); ++i) v[i] = Rational(scaled[i] / gcd_num);
}

std::optional<long> exact_power_exponent(const Rational& base, const Rational& value) {
    if (base <= 1) return std::nullopt;
    if (value <= 0) return std::nullopt;
    if (value == 1) return 0;
    // Walk k upward in the direction matching value vs 1.
    const long kMaxExponent = 1 << 20;
    Rational acc = 1;
    if (value > 1) {
        for (long k = 1; k <= kMaxExponent; ++k) {
            acc *= base;
            if (acc == value) return k;
            if (acc > value) return std::nullopt;
        }
    } else {
        Rational inv = 1 / base;
        for (long k = 1; k <= kMaxExponent; ++k) {
            acc *= inv;
            if (acc == value) return -k;
            if (acc < value) return std::nullopt;
        }
    }
    return std::nullopt;
}

int sign_of_log_combination(const std::vector<std::pair<Rational, Rational>>& terms) {
    // Scale all coefficients to integers, then compare the two sides of
    // prod(arg^m) against 1 as exact integer products.
    Integer lcm_den = 1;
    for (const auto& [coeff, arg] : terms) {
        if (arg <= 0) throw ParseError("log of non-positive argument");
        if (coeff == 0 || arg == 1) continue;
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), coeff.get_den().get_mpz_t());
    }

    Integer lhs = 1, rhs = 1; // compare lhs (numerator side) against rhs
    double bit_estimate = 0.0;
    for (const auto& [coeff, arg] : terms) {
        if (coeff == 0 || arg == 1) continue;
        Rational scaled = coeff * Rational(lcm_den);
        Integer m = scaled.get_num();
        bool negative = m < 0;
        Integer mabs = abs(m);
        if (!mabs.fits_ulong_p()) throw SizeLimit("log-combination exponent too large");
        unsigned long e = mabs.get_ui();
        bit_estimate += static_cast<double>(e) *
                        (mpz_sizeinbase(arg.get_num().get_mpz_t(), 2) +
                         mpz_sizeinbase(arg.get_den().get_mpz_t(), 2));
        if (bit_estimate > 2.2e8) throw SizeLimit("log-combination product too large");
        Integer num_pow, den_pow;
        mpz_pow_ui(num_pow.get_mpz_t(), arg.get_num().get_mpz_t(), e);
        mpz_pow_ui(den_pow.get_mpz_t(), arg.get_den().get_mpz_t(), e);
        if (!negative) {
            lhs *= num_pow;
            rhs *= den_pow;
        } else {
            lhs *= den_pow;
            rhs *= num_pow;
        }
    }
    return cmp(lhs, rhs);
}

} // namespace entrocone

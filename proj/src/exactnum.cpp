#include "horadam/exactnum.hpp"

#include <cctype>

namespace horadam {

Integer int_gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer int_lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Integer binomial(long n, long k) {
    if (n < 0) {
        throw std::domain_error("binomial: negative n");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    // After step i the accumulator equals C(n-k+i, i), so each division is exact.
    Integer result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return result;
}

namespace {

// Consumes an optional sign. Returns true when the value is negated.
bool take_sign(std::string_view& text) {
    if (text.starts_with('-')) {
        text.remove_prefix(1);
        return true;
    }
    if (text.starts_with('+')) {
        text.remove_prefix(1);
        return false;
    }
    constexpr std::string_view unicode_minus = "\xE2\x88\x92";
    if (text.starts_with(unicode_minus)) {
        text.remove_prefix(unicode_minus.size());
        return true;
    }
    return false;
}

Integer take_digits(std::string_view text, std::string_view whole) {
    if (text.empty()) {
        throw ParseError("expected digits in rational '" + std::string(whole) + "'");
    }
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError("malformed rational '" + std::string(whole) + "'");
        }
    }
    return Integer(std::string(text), 10);
}

}  // namespace

Rational rat_parse(std::string_view text) {
    const std::string_view whole = text;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    const auto slash = text.find('/');
    std::string_view num_text = text.substr(0, slash);
    bool negative = take_sign(num_text);
    Integer num = take_digits(num_text, whole);
    Integer den = 1;
    if (slash != std::string_view::npos) {
        std::string_view den_text = text.substr(slash + 1);
        negative ^= take_sign(den_text);
        den = take_digits(den_text, whole);
        if (den == 0) {
            throw ParseError("zero denominator in '" + std::string(whole) + "'");
        }
    }
    if (negative) {
        num = -num;
    }
    return make_rational(num, den);
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) { return value.get_str(10); }

Integer pow(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational pow(const Rational& base, unsigned long exponent) {
    return Rational(pow(base.get_num(), exponent), pow(base.get_den(), exponent));
}

}  // namespace horadam

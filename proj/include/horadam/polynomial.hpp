#pragma once

// Sparse multivariate polynomials with arbitrary-precision integer
// coefficients over the fixed variable list (x, p, q, a, b, t).

#include "horadam/exactnum.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace horadam {

enum class Var : std::size_t { x = 0, p, q, a, b, t };

inline constexpr std::size_t kVarCount = 6;
inline constexpr std::array<Var, kVarCount> kAllVars = {Var::x, Var::p, Var::q,
                                                        Var::a, Var::b, Var::t};

char var_name(Var v);
std::optional<Var> var_from_name(char c);

/// Exponent vector ordered (x, p, q, a, b, t). std::array compares
/// lexicographically, which gives the canonical order with x most significant.
using Monomial = std::array<std::uint32_t, kVarCount>;

inline constexpr Monomial kUnitMonomial{};

struct Term {
    Monomial exps;
    Integer coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

class NotDivisible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(int c) : Polynomial(Integer(c)) {}  // NOLINT: implicit by design of the ring
    Polynomial(long c) : Polynomial(Integer(c)) {}  // NOLINT
    Polynomial(const Integer& c);                   // NOLINT

    static Polynomial variable(Var v, std::uint32_t exponent = 1);
    static Polynomial monomial(const Integer& coeff, const Monomial& exps);

    /// Sorts, merges like terms and drops zeros.
    static Polynomial from_terms(std::vector<Term> terms);

    /// Terms in ascending canonical order; no zero coefficients.
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the unit monomial.
    Integer constant_term() const;
    /// Coefficient of the given monomial (0 if absent).
    Integer coeff(const Monomial& exps) const;
    /// Largest term in canonical order. Precondition: nonzero.
    const Term& leading_term() const { return terms_.back(); }

    bool depends_on(Var v) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
Polynomial pow(const Polynomial& f, unsigned long exponent);

/// Returns h with h * g == f. Throws NotDivisible if g does not divide f and
/// std::domain_error if g is zero.
Polynomial poly_exact_div(const Polynomial& f, const Polynomial& g);

/// Multiplies every coefficient by an integer / divides exactly by one.
Polynomial scale(const Polynomial& f, const Integer& factor);
Polynomial divide_exact(const Polynomial& f, const Integer& divisor);

inline constexpr long kDegreeOfZero = std::numeric_limits<long>::min();

/// Highest exponent of v; kDegreeOfZero for the zero polynomial.
long degree_in(const Polynomial& f, Var v);

/// Nonnegative gcd of all coefficients (0 for the zero polynomial).
Integer content(const Polynomial& f);

/// Splits f = sum_i c_i * v^i and returns [c_0, c_1, ...]; empty for f = 0.
std::vector<Polynomial> coefficients_in(const Polynomial& f, Var v);

/// Inverse of coefficients_in.
Polynomial from_coefficients(const std::vector<Polynomial>& coeffs, Var v);

/// Text form: terms ascending by canonical order, e.g. "1 - 3*x + x^2".
/// Variables inside a term are written alphabetically ("2*t*x", "a*p").
std::string to_string(const Polynomial& f);
std::ostream& operator<<(std::ostream& os, const Polynomial& f);

/// Parses +, -, *, ^, parentheses, integers and the six variable names.
/// Juxtaposition means multiplication ("2t", "x(1-x)").
Polynomial parse_polynomial(std::string_view text);

/// JSON: list of {"coeff": "<decimal>", "exps": [x, p, q, a, b, t]}.
nlohmann::json to_json(const Polynomial& f);
Polynomial polynomial_from_json(const nlohmann::json& j);

/// Polynomial over the rationals stored as num / den with den a positive
/// integer and gcd(content(num), den) == 1.
class QPolynomial {
public:
    QPolynomial() = default;
    QPolynomial(const Polynomial& num) : num_(num) {}  // NOLINT
    QPolynomial(const Rational& value);                 // NOLINT
    QPolynomial(int value) : num_(value) {}             // NOLINT
    QPolynomial(Polynomial num, Integer den);

    const Polynomial& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant(); }
    /// Value of a constant QPolynomial. Throws std::logic_error otherwise.
    Rational constant_value() const;

    QPolynomial operator-() const { return QPolynomial(-num_, den_); }
    friend QPolynomial operator+(const QPolynomial& lhs, const QPolynomial& rhs);
    friend QPolynomial operator-(const QPolynomial& lhs, const QPolynomial& rhs);
    friend QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs);
    QPolynomial& operator+=(const QPolynomial& rhs) { return *this = *this + rhs; }
    QPolynomial& operator-=(const QPolynomial& rhs) { return *this = *this - rhs; }
    QPolynomial& operator*=(const QPolynomial& rhs) { return *this = *this * rhs; }

    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

private:
    Polynomial num_;
    Integer den_ = 1;
};

QPolynomial pow(const QPolynomial& f, unsigned long exponent);

/// "n/d" for rational constants, the polynomial text otherwise, and
/// "(num)/den" for a non-constant polynomial with a denominator.
std::string to_string(const QPolynomial& f);
std::ostream& operator<<(std::ostream& os, const QPolynomial& f);

/// Variables not present in the map stay symbolic.
using Bindings = std::map<Var, QPolynomial>;

/// Substitutes bindings into f. The result is a (Polynomial, Integer)
/// pair with the rational coefficients cleared.
QPolynomial poly_substitute(const Polynomial& f, const Bindings& bindings);

}  // namespace horadam

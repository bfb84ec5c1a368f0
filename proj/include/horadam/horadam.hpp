#pragma once

// Horadam sequences w_{n+2} = p w_{n+1} + q w_n, w_0 = a, w_1 = b, generated
// straight from the recurrence. This is the ground-truth oracle for the
// generating-function engine and shares no code path with it.

#include "horadam/polynomial.hpp"

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace horadam {

/// Each entry is a rational constant or a polynomial in the symbols
/// (p, q, a, b, t); numeric parameters are the constant case.
struct HoradamParams {
    QPolynomial a;
    QPolynomial b;
    QPolynomial p;
    QPolynomial q;

    static HoradamParams numeric(const Rational& a, const Rational& b, const Rational& p, const Rational& q);
    /// a, b, p, q bound to the symbols of the same name.
    static HoradamParams symbolic();

    bool is_numeric() const;

    friend bool operator==(const HoradamParams&, const HoradamParams&) = default;
};

/// fibonacci, lucas, pell, chebyshev-u. Throws std::invalid_argument otherwise.
HoradamParams preset(std::string_view name);

std::vector<std::string> preset_names();

/// {"a": "...", "b": "...", "p": "...", "q": "..."} in text form.
nlohmann::json to_json(const HoradamParams& params);

std::string to_string(const HoradamParams& params);

using SequencePrefix = std::vector<QPolynomial>;

/// w_0 .. w_{count-1}.
SequencePrefix horadam_seq(const HoradamParams& params, std::size_t count);

/// w_0^k .. w_{count-1}^k. Requires k >= 1.
std::vector<QPolynomial> power_series_oracle(const HoradamParams& params, unsigned k, std::size_t count);

/// Coefficients of A_{k,d}(x) = sum_n w_n^{k-d} w_{n+1}^d x^{n+1} for powers
/// x^0 .. x^max_power. Requires 1 <= d <= k.
std::vector<QPolynomial> mixed_series_oracle(const HoradamParams& params, unsigned k, unsigned d,
                                             std::size_t max_power);

/// True iff w_{n+2} - p w_{n+1} - q w_n == 0 along the whole prefix.
bool satisfies_recurrence(const SequencePrefix& prefix, const HoradamParams& params);

}  // namespace horadam

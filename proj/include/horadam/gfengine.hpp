#pragma once

// Generating function of the k-th powers of a Horadam sequence as a ratio
// of two k x k polynomial determinants (Cramer's rule on the linear system
// satisfied by H_k and the mixed series A_{k,d}).

#include "horadam/horadam.hpp"
#include "horadam/matrix.hpp"
#include "horadam/polynomial.hpp"
#include "horadam/ratfun.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace horadam {

inline constexpr std::size_t kDefaultSeriesLength = 64;

/// Raised by eval_at when the denominator vanishes at the point.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when an operation needs a function of x alone.
class SymbolicResidue : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Coefficient matrix of the system in the unknowns
/// [H_k, A_{k,k-1}, ..., A_{k,1}]. Row 0 comes from expanding
/// w_{n+2}^k; row i >= 1 expresses A_{k,d}, d = k - i, through w_{n+1} =
/// p w_n + q w_{n-1}. Rows are scaled by positive integers when the
/// parameters have rational denominators (build_delta_hat uses the same
/// scaling, so the determinant ratio is unaffected).
/// Throws std::invalid_argument for k < 1.
PolyMatrix build_delta(unsigned k, const HoradamParams& params);

/// build_delta with column 0 replaced by the right-hand side of the system:
/// a^k + (b^k - a^k p^k) x in row 0 and g_d x, g_d = (b^d - a^d p^d) a^{k-d},
/// in row i = k - d.
PolyMatrix build_delta_hat(unsigned k, const HoradamParams& params);

/// Right-hand side column on its own (column 0 of build_delta_hat).
std::vector<Polynomial> build_rhs(unsigned k, const HoradamParams& params);

/// Fraction-free determinant. With HORADAM_CROSSCHECK_DETERMINANT (the
/// default build) matrices up to 4 x 4 are also expanded by cofactors and
/// a mismatch throws std::logic_error.
Polynomial determinant(const PolyMatrix& m);

struct GfResult {
    unsigned k = 0;
    HoradamParams params;
    Polynomial numerator;    // det of build_delta_hat
    Polynomial denominator;  // det of build_delta
    RationalFunction reduced;
};

GfResult horadam_gf(unsigned k, const HoradamParams& params);

/// First `count` Taylor coefficients at x = 0 of num/den. Coefficients may
/// still involve the symbols other than x. Throws std::domain_error if the
/// x-free part of den is zero or not a constant.
std::vector<QPolynomial> series_coeffs(const Polynomial& num, const Polynomial& den, std::size_t count);
std::vector<QPolynomial> series_coeffs(const RationalFunction& rf, std::size_t count);

/// Exact value at x0. Throws SymbolicResidue if rf involves other symbols
/// and PoleError if the denominator vanishes at x0.
Rational eval_at(const RationalFunction& rf, const Rational& x0);

/// {k, params, numerator, denominator, reduced_num, reduced_den}
nlohmann::json to_json(const GfResult& result);

}  // namespace horadam

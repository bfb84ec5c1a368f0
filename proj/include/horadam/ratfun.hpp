#pragma once

#include "horadam/polynomial.hpp"

#include <string>

namespace horadam {

/// num / den over the integer polynomial ring. The constructor normalizes
/// the joint integer content and the sign; it does not cancel polynomial
/// factors (see ratfun_reduce).
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
    Polynomial num_;
    Polynomial den_;
};

/// Cancels the polynomial gcd when num and den involve no variable but x;
/// otherwise only the joint integer content is removed.
RationalFunction ratfun_reduce(const RationalFunction& rf);

/// True iff f involves no variable other than x.
bool is_univariate_in_x(const Polynomial& f);

/// Primitive gcd of two polynomials in x alone, with positive leading
/// coefficient. gcd(0, 0) = 0.
Polynomial univariate_gcd(const Polynomial& f, const Polynomial& g);

/// "num / den", parenthesizing multi-term sides; "num" when den == 1.
std::string to_string(const RationalFunction& rf);
std::ostream& operator<<(std::ostream& os, const RationalFunction& rf);

}  // namespace horadam

#pragma once

#include "horadam/exactnum.hpp"
#include "horadam/polynomial.hpp"

#include <random>
#include <vector>

namespace horadam::testing {

inline Integer random_integer(std::mt19937_64& rng, int digits) {
    std::uniform_int_distribution<int> digit(0, 9);
    std::string text;
    for (int i = 0; i < digits; ++i) {
        text.push_back(static_cast<char>('0' + digit(rng)));
    }
    Integer value(text, 10);
    return std::bernoulli_distribution(0.5)(rng) ? Integer(-value) : value;
}

inline Rational random_rational(std::mt19937_64& rng, int digits) {
    Integer den = random_integer(rng, digits);
    if (den == 0) {
        den = 1;
    }
    return make_rational(random_integer(rng, digits), den);
}

/// Random polynomial in the given variables with small exponents.
inline Polynomial random_polynomial(std::mt19937_64& rng, std::vector<Var> vars, int max_terms = 5,
                                    std::uint32_t max_exp = 3, int coeff_bound = 9) {
    std::uniform_int_distribution<int> count(0, max_terms);
    std::uniform_int_distribution<std::uint32_t> exp(0, max_exp);
    std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
    std::vector<Term> terms;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        Monomial m{};
        for (Var v : vars) {
            m[static_cast<std::size_t>(v)] = exp(rng);
        }
        terms.push_back(Term{m, coeff(rng)});
    }
    return Polynomial::from_terms(std::move(terms));
}

inline Polynomial nonzero_polynomial(std::mt19937_64& rng, std::vector<Var> vars, int max_terms = 5,
                                     std::uint32_t max_exp = 3) {
    for (;;) {
        Polynomial f = random_polynomial(rng, vars, max_terms, max_exp);
        if (!f.is_zero()) {
            return f;
        }
    }
}

inline Polynomial P(const char* text) { return parse_polynomial(text); }

inline std::vector<QPolynomial> ints(std::initializer_list<long> values) {
    std::vector<QPolynomial> out;
    for (long v : values) {
        out.emplace_back(Polynomial(v));
    }
    return out;
}

}  // namespace horadam::testing

#include "horadam/ratfun.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace horadam {

namespace {

// Dense coefficients over Q, index = power of x, no trailing zeros.
using DenseQ = std::vector<Rational>;

DenseQ to_dense(const Polynomial& f) {
    DenseQ out;
    for (const auto& c : coefficients_in(f, Var::x)) {
        out.emplace_back(c.constant_term());
    }
    return out;
}

void trim(DenseQ& f) {
    while (!f.empty() && f.back() == 0) {
        f.pop_back();
    }
}

// Remainder of f modulo g (g nonzero).
DenseQ remainder(DenseQ f, const DenseQ& g) {
    trim(f);
    while (f.size() >= g.size()) {
        const Rational factor = f.back() / g.back();
        const std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) {
            f[shift + i] -= factor * g[i];
        }
        trim(f);
    }
    return f;
}

Polynomial primitive_from_dense(const DenseQ& f) {
    Integer common_den = 1;
    for (const auto& c : f) {
        common_den = int_lcm(common_den, c.get_den());
    }
    std::vector<Term> terms;
    for (std::size_t i = 0; i < f.size(); ++i) {
        Rational scaled = f[i] * common_den;
        Monomial m{};
        m[static_cast<std::size_t>(Var::x)] = static_cast<std::uint32_t>(i);
        terms.push_back(Term{m, scaled.get_num()});
    }
    Polynomial out = Polynomial::from_terms(std::move(terms));
    if (out.is_zero()) {
        return out;
    }
    out = divide_exact(out, content(out));
    return out.leading_term().coeff < 0 ? -out : out;
}

}  // namespace

bool is_univariate_in_x(const Polynomial& f) {
    return std::all_of(kAllVars.begin() + 1, kAllVars.end(), [&](Var v) { return !f.depends_on(v); });
}

Polynomial univariate_gcd(const Polynomial& f, const Polynomial& g) {
    if (!is_univariate_in_x(f) || !is_univariate_in_x(g)) {
        throw std::invalid_argument("univariate_gcd: inputs must involve x only");
    }
    DenseQ u = to_dense(f);
    DenseQ v = to_dense(g);
    while (!v.empty()) {
        DenseQ r = remainder(u, v);
        u = std::move(v);
        v = std::move(r);
    }
    return primitive_from_dense(u);
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) {
        throw std::domain_error("RationalFunction: zero denominator");
    }
    Integer g = int_gcd(content(num_), content(den_));
    const Integer c0 = den_.constant_term();
    const bool flip = c0 != 0 ? c0 < 0 : den_.leading_term().coeff < 0;
    if (flip) {
        g = -g;
    }
    if (g != 1) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
}

RationalFunction ratfun_reduce(const RationalFunction& rf) {
    if (!is_univariate_in_x(rf.num()) || !is_univariate_in_x(rf.den())) {
        return rf;
    }
    if (rf.num().is_zero()) {
        return RationalFunction(0, 1);
    }
    const Polynomial g = univariate_gcd(rf.num(), rf.den());
    return RationalFunction(poly_exact_div(rf.num(), g), poly_exact_div(rf.den(), g));
}

std::string to_string(const RationalFunction& rf) {
    auto side = [](const Polynomial& f) {
        return f.size() > 1 ? "(" + to_string(f) + ")" : to_string(f);
    };
    if (rf.den() == Polynomial(1)) {
        return to_string(rf.num());
    }
    return side(rf.num()) + " / " + side(rf.den());
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& rf) {
    return os << to_string(rf);
}

}  // namespace horadam

#include "horadam/gfengine.hpp"

#include <algorithm>

namespace horadam {

namespace {

using QMatrix = Matrix<QPolynomial>;

void check_k(unsigned k) {
    if (k < 1) {
        throw std::invalid_argument("k must be >= 1");
    }
}

QPolynomial x_var() { return Polynomial::variable(Var::x); }

QMatrix delta_entries(unsigned k, const HoradamParams& prm) {
    const QPolynomial x = x_var();
    QMatrix m = QMatrix::Constant(k, k, QPolynomial());
    m(0, 0) = QPolynomial(1) - pow(prm.p, k) * x - pow(prm.q, k) * x * x;
    for (unsigned j = 1; j < k; ++j) {
        m(0, j) = -(x * QPolynomial(Rational(binomial(k, j))) * pow(prm.p, k - j) * pow(prm.q, j));
    }
    for (unsigned i = 1; i < k; ++i) {
        const unsigned d = k - i;
        m(i, 0) = -(pow(prm.p, d) * x);
        for (unsigned j = 1; j <= d; ++j) {
            m(i, j) = -(x * QPolynomial(Rational(binomial(d, j))) * pow(prm.p, d - j) * pow(prm.q, j));
        }
        m(i, i) += QPolynomial(1);
    }
    return m;
}

std::vector<QPolynomial> rhs_entries(unsigned k, const HoradamParams& prm) {
    const QPolynomial x = x_var();
    std::vector<QPolynomial> v(k);
    v[0] = pow(prm.a, k) + (pow(prm.b, k) - pow(prm.a, k) * pow(prm.p, k)) * x;
    for (unsigned i = 1; i < k; ++i) {
        const unsigned d = k - i;
        const QPolynomial g = (pow(prm.b, d) - pow(prm.a, d) * pow(prm.p, d)) * pow(prm.a, k - d);
        v[i] = g * x;
    }
    return v;
}

// Per-row lcm of every denominator appearing in either matrix.
std::vector<Integer> row_scales(const QMatrix& delta, const std::vector<QPolynomial>& rhs) {
    std::vector<Integer> scales(rhs.size(), Integer(1));
    for (Eigen::Index i = 0; i < delta.rows(); ++i) {
        Integer& s = scales[static_cast<std::size_t>(i)];
        s = int_lcm(s, rhs[static_cast<std::size_t>(i)].den());
        for (Eigen::Index j = 0; j < delta.cols(); ++j) {
            s = int_lcm(s, delta(i, j).den());
        }
    }
    return scales;
}

Polynomial clear(const QPolynomial& entry, const Integer& row_scale) {
    return scale(entry.num(), exact_quotient(row_scale, entry.den()));
}

struct System {
    PolyMatrix delta;
    std::vector<Polynomial> rhs;
};

System build_system(unsigned k, const HoradamParams& params) {
    check_k(k);
    const QMatrix delta = delta_entries(k, params);
    const std::vector<QPolynomial> rhs = rhs_entries(k, params);
    const std::vector<Integer> scales = row_scales(delta, rhs);
    System out{PolyMatrix(k, k), std::vector<Polynomial>(k)};
    for (unsigned i = 0; i < k; ++i) {
        for (unsigned j = 0; j < k; ++j) {
            out.delta(i, j) = clear(delta(i, j), scales[i]);
        }
        out.rhs[i] = clear(rhs[i], scales[i]);
    }
    return out;
}

}  // namespace

PolyMatrix build_delta(unsigned k, const HoradamParams& params) { return build_system(k, params).delta; }

PolyMatrix build_delta_hat(unsigned k, const HoradamParams& params) {
    System sys = build_system(k, params);
    for (unsigned i = 0; i < k; ++i) {
        sys.delta(i, 0) = sys.rhs[i];
    }
    return sys.delta;
}

std::vector<Polynomial> build_rhs(unsigned k, const HoradamParams& params) { return build_system(k, params).rhs; }

Polynomial determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("determinant: matrix is not square");
    }
    Polynomial det = bareiss_determinant(m);
#ifdef HORADAM_CROSSCHECK_DETERMINANT
    if (m.rows() <= 4 && cofactor_determinant(m) != det) {
        throw std::logic_error("determinant: Bareiss and cofactor expansion disagree");
    }
#endif
    return det;
}

GfResult horadam_gf(unsigned k, const HoradamParams& params) {
    check_k(k);
    GfResult out;
    out.k = k;
    out.params = params;
    if (k == 1) {
        // Single unknown H_1, no mixed series: the 1 x 1 system is its own determinant.
        const System sys = build_system(1, params);
        out.numerator = sys.rhs[0];
        out.denominator = sys.delta(0, 0);
    } else {
        out.numerator = determinant(build_delta_hat(k, params));
        out.denominator = determinant(build_delta(k, params));
    }
    out.reduced = ratfun_reduce(RationalFunction(out.numerator, out.denominator));
    return out;
}

std::vector<QPolynomial> series_coeffs(const Polynomial& num, const Polynomial& den, std::size_t count) {
    const std::vector<Polynomial> u = coefficients_in(num, Var::x);
    const std::vector<Polynomial> d = coefficients_in(den, Var::x);
    if (d.empty() || d[0].is_zero()) {
        throw std::domain_error("series_coeffs: denominator has zero constant term");
    }
    if (!d[0].is_constant()) {
        throw std::domain_error("series_coeffs: constant term of denominator is symbolic: " + to_string(d[0]));
    }
    const Rational inverse_d0 = make_rational(1, d[0].constant_term());
    std::vector<QPolynomial> c;
    c.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        QPolynomial acc = n < u.size() ? QPolynomial(u[n]) : QPolynomial();
        for (std::size_t i = 1; i <= std::min(n, d.size() - 1); ++i) {
            if (!d[i].is_zero()) {
                acc -= QPolynomial(d[i]) * c[n - i];
            }
        }
        c.push_back(acc * QPolynomial(inverse_d0));
    }
    return c;
}

std::vector<QPolynomial> series_coeffs(const RationalFunction& rf, std::size_t count) {
    return series_coeffs(rf.num(), rf.den(), count);
}

namespace {

Rational horner(const Polynomial& f, const Rational& x0) {
    const std::vector<Polynomial> coeffs = coefficients_in(f, Var::x);
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * x0 + Rational(it->constant_term());
    }
    return acc;
}

}  // namespace

Rational eval_at(const RationalFunction& rf, const Rational& x0) {
    if (!is_univariate_in_x(rf.num()) || !is_univariate_in_x(rf.den())) {
        throw SymbolicResidue("eval_at: " + to_string(rf) + " involves symbols other than x");
    }
    const Rational den = horner(rf.den(), x0);
    if (den == 0) {
        throw PoleError("eval_at: pole at x = " + to_string(x0));
    }
    return horner(rf.num(), x0) / den;
}

nlohmann::json to_json(const GfResult& result) {
    return {{"k", result.k},
            {"params", to_json(result.params)},
            {"numerator", to_json(result.numerator)},
            {"denominator", to_json(result.denominator)},
            {"reduced_num", to_json(result.reduced.num())},
            {"reduced_den", to_json(result.reduced.den())}};
}

}  // namespace horadam

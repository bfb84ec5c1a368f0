#include "horadam/horadam.hpp"

#include <stdexcept>

namespace horadam {

HoradamParams HoradamParams::numeric(const Rational& a, const Rational& b, const Rational& p, const Rational& q) {
    return HoradamParams{a, b, p, q};
}

HoradamParams HoradamParams::symbolic() {
    return HoradamParams{Polynomial::variable(Var::a), Polynomial::variable(Var::b),
                         Polynomial::variable(Var::p), Polynomial::variable(Var::q)};
}

bool HoradamParams::is_numeric() const {
    return a.is_constant() && b.is_constant() && p.is_constant() && q.is_constant();
}

HoradamParams preset(std::string_view name) {
    if (name == "fibonacci") {
        return HoradamParams::numeric(0, 1, 1, 1);
    }
    if (name == "lucas") {
        return HoradamParams::numeric(2, 1, 1, 1);
    }
    if (name == "pell") {
        return HoradamParams::numeric(0, 1, 2, 1);
    }
    if (name == "chebyshev-u") {
        const Polynomial two_t = 2 * Polynomial::variable(Var::t);
        return HoradamParams{1, two_t, two_t, -1};
    }
    throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

std::vector<std::string> preset_names() { return {"fibonacci", "lucas", "pell", "chebyshev-u"}; }

nlohmann::json to_json(const HoradamParams& params) {
    return {{"a", to_string(params.a)}, {"b", to_string(params.b)}, {"p", to_string(params.p)},
            {"q", to_string(params.q)}};
}

std::string to_string(const HoradamParams& params) {
    return "(a, b, p, q) = (" + to_string(params.a) + ", " + to_string(params.b) + ", " + to_string(params.p) +
           ", " + to_string(params.q) + ")";
}

SequencePrefix horadam_seq(const HoradamParams& params, std::size_t count) {
    SequencePrefix w;
    w.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        if (n == 0) {
            w.push_back(params.a);
        } else if (n == 1) {
            w.push_back(params.b);
        } else {
            w.push_back(params.p * w[n - 1] + params.q * w[n - 2]);
        }
    }
    return w;
}

std::vector<QPolynomial> power_series_oracle(const HoradamParams& params, unsigned k, std::size_t count) {
    if (k < 1) {
        throw std::invalid_argument("power_series_oracle: k must be >= 1");
    }
    std::vector<QPolynomial> out;
    out.reserve(count);
    for (const auto& w : horadam_seq(params, count)) {
        out.push_back(pow(w, k));
    }
    return out;
}

std::vector<QPolynomial> mixed_series_oracle(const HoradamParams& params, unsigned k, unsigned d,
                                             std::size_t max_power) {
    if (d < 1 || d > k) {
        throw std::invalid_argument("mixed_series_oracle: need 1 <= d <= k");
    }
    const SequencePrefix w = horadam_seq(params, max_power + 1);
    std::vector<QPolynomial> out(max_power + 1);
    for (std::size_t n = 0; n + 1 <= max_power; ++n) {
        out[n + 1] = pow(w[n], k - d) * pow(w[n + 1], d);
    }
    return out;
}

bool satisfies_recurrence(const SequencePrefix& prefix, const HoradamParams& params) {
    for (std::size_t n = 0; n + 2 < prefix.size(); ++n) {
        if (!(prefix[n + 2] - params.p * prefix[n + 1] - params.q * prefix[n]).is_zero()) {
            return false;
        }
    }
    return true;
}

}  // namespace horadam

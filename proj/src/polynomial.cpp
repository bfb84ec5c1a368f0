#include "horadam/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace horadam {

char var_name(Var v) {
    static constexpr std::array<char, kVarCount> names = {'x', 'p', 'q', 'a', 'b', 't'};
    return names[static_cast<std::size_t>(v)];
}

std::optional<Var> var_from_name(char c) {
    for (Var v : kAllVars) {
        if (var_name(v) == c) {
            return v;
        }
    }
    return std::nullopt;
}

namespace {

Monomial add_exps(const Monomial& lhs, const Monomial& rhs) {
    Monomial out;
    for (std::size_t i = 0; i < kVarCount; ++i) {
        out[i] = lhs[i] + rhs[i];
    }
    return out;
}

bool divides(const Monomial& divisor, const Monomial& dividend) {
    for (std::size_t i = 0; i < kVarCount; ++i) {
        if (divisor[i] > dividend[i]) {
            return false;
        }
    }
    return true;
}

Monomial sub_exps(const Monomial& lhs, const Monomial& rhs) {
    Monomial out;
    for (std::size_t i = 0; i < kVarCount; ++i) {
        out[i] = lhs[i] - rhs[i];
    }
    return out;
}

bool term_less(const Term& lhs, const Term& rhs) { return lhs.exps < rhs.exps; }

// Merges two sorted term lists, combining coefficients as lhs + sign * rhs.
std::vector<Term> merge(const std::vector<Term>& lhs, const std::vector<Term>& rhs, int sign) {
    std::vector<Term> out;
    out.reserve(lhs.size() + rhs.size());
    auto i = lhs.begin();
    auto j = rhs.begin();
    while (i != lhs.end() || j != rhs.end()) {
        if (j == rhs.end() || (i != lhs.end() && i->exps < j->exps)) {
            out.push_back(*i++);
        } else if (i == lhs.end() || j->exps < i->exps) {
            out.push_back(sign > 0 ? *j : Term{j->exps, -j->coeff});
            ++j;
        } else {
            Integer c = sign > 0 ? Integer(i->coeff + j->coeff) : Integer(i->coeff - j->coeff);
            if (c != 0) {
                out.push_back(Term{i->exps, std::move(c)});
            }
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Polynomial::Polynomial(const Integer& c) {
    if (c != 0) {
        terms_.push_back(Term{kUnitMonomial, c});
    }
}

Polynomial Polynomial::variable(Var v, std::uint32_t exponent) {
    Monomial m{};
    m[static_cast<std::size_t>(v)] = exponent;
    return monomial(1, m);
}

Polynomial Polynomial::monomial(const Integer& coeff, const Monomial& exps) {
    Polynomial out;
    if (coeff != 0) {
        out.terms_.push_back(Term{exps, coeff});
    }
    return out;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_less);
    Polynomial out;
    out.terms_.reserve(terms.size());
    for (auto& term : terms) {
        if (!out.terms_.empty() && out.terms_.back().exps == term.exps) {
            out.terms_.back().coeff += term.coeff;
            if (out.terms_.back().coeff == 0) {
                out.terms_.pop_back();
            }
        } else if (term.coeff != 0) {
            out.terms_.push_back(std::move(term));
        }
    }
    return out;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().exps == kUnitMonomial);
}

Integer Polynomial::constant_term() const { return coeff(kUnitMonomial); }

Integer Polynomial::coeff(const Monomial& exps) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{exps, 0}, term_less);
    if (it != terms_.end() && it->exps == exps) {
        return it->coeff;
    }
    return 0;
}

bool Polynomial::depends_on(Var v) const {
    const auto idx = static_cast<std::size_t>(v);
    return std::any_of(terms_.begin(), terms_.end(),
                       [idx](const Term& term) { return term.exps[idx] != 0; });
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& term : out.terms_) {
        term.coeff = -term.coeff;
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    terms_ = merge(terms_, rhs.terms_, +1);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    terms_ = merge(terms_, rhs.terms_, -1);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) {
        return {};
    }
    std::vector<Term> products;
    products.reserve(lhs.size() * rhs.size());
    for (const auto& u : lhs.terms_) {
        for (const auto& v : rhs.terms_) {
            products.push_back(Term{add_exps(u.exps, v.exps), u.coeff * v.coeff});
        }
    }
    return Polynomial::from_terms(std::move(products));
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial pow(const Polynomial& f, unsigned long exponent) {
    Polynomial result = 1;
    Polynomial base = f;
    while (exponent != 0) {
        if (exponent & 1U) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent != 0) {
            base *= base;
        }
    }
    return result;
}

Polynomial poly_exact_div(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) {
        throw std::domain_error("poly_exact_div: division by zero polynomial");
    }
    if (g.is_constant()) {
        return divide_exact(f, g.constant_term());
    }
    // Leading-term division; exact divisibility means the remainder reaches 0
    // under any monomial order.
    std::map<Monomial, Integer> remainder;
    for (const auto& term : f.terms()) {
        remainder.emplace(term.exps, term.coeff);
    }
    const Term& lead = g.leading_term();
    std::vector<Term> quotient;
    while (!remainder.empty()) {
        auto top = std::prev(remainder.end());
        if (!divides(lead.exps, top->first) || !mpz_divisible_p(top->second.get_mpz_t(), lead.coeff.get_mpz_t())) {
            throw NotDivisible("poly_exact_div: divisor " + to_string(g) + " does not divide " + to_string(f));
        }
        Term q{sub_exps(top->first, lead.exps), 0};
        mpz_divexact(q.coeff.get_mpz_t(), top->second.get_mpz_t(), lead.coeff.get_mpz_t());
        for (const auto& term : g.terms()) {
            const Monomial m = add_exps(term.exps, q.exps);
            auto [it, inserted] = remainder.try_emplace(m, 0);
            mpz_submul(it->second.get_mpz_t(), term.coeff.get_mpz_t(), q.coeff.get_mpz_t());
            if (it->second == 0) {
                remainder.erase(it);
            }
        }
        quotient.push_back(std::move(q));
    }
    return Polynomial::from_terms(std::move(quotient));
}

Polynomial scale(const Polynomial& f, const Integer& factor) {
    if (factor == 0) {
        return {};
    }
    std::vector<Term> terms = f.terms();
    for (auto& term : terms) {
        term.coeff *= factor;
    }
    return Polynomial::from_terms(std::move(terms));
}

Polynomial divide_exact(const Polynomial& f, const Integer& divisor) {
    if (divisor == 0) {
        throw std::domain_error("divide_exact: division by zero");
    }
    std::vector<Term> terms = f.terms();
    for (auto& term : terms) {
        if (!mpz_divisible_p(term.coeff.get_mpz_t(), divisor.get_mpz_t())) {
            throw NotDivisible("divide_exact: " + to_string(divisor) + " does not divide " + to_string(f));
        }
        mpz_divexact(term.coeff.get_mpz_t(), term.coeff.get_mpz_t(), divisor.get_mpz_t());
    }
    return Polynomial::from_terms(std::move(terms));
}

long degree_in(const Polynomial& f, Var v) {
    if (f.is_zero()) {
        return kDegreeOfZero;
    }
    const auto idx = static_cast<std::size_t>(v);
    long deg = 0;
    for (const auto& term : f.terms()) {
        deg = std::max(deg, static_cast<long>(term.exps[idx]));
    }
    return deg;
}

Integer content(const Polynomial& f) {
    Integer g = 0;
    for (const auto& term : f.terms()) {
        g = int_gcd(g, term.coeff);
        if (g == 1) {
            break;
        }
    }
    return g;
}

std::vector<Polynomial> coefficients_in(const Polynomial& f, Var v) {
    const long deg = degree_in(f, v);
    if (deg == kDegreeOfZero) {
        return {};
    }
    const auto idx = static_cast<std::size_t>(v);
    std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(deg) + 1);
    for (const auto& term : f.terms()) {
        Term stripped = term;
        stripped.exps[idx] = 0;
        buckets[term.exps[idx]].push_back(std::move(stripped));
    }
    std::vector<Polynomial> out;
    out.reserve(buckets.size());
    for (auto& bucket : buckets) {
        out.push_back(Polynomial::from_terms(std::move(bucket)));
    }
    return out;
}

Polynomial from_coefficients(const std::vector<Polynomial>& coeffs, Var v) {
    Polynomial out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        out += coeffs[i] * Polynomial::variable(v, static_cast<std::uint32_t>(i));
    }
    return out;
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) {
        return "0";
    }
    static constexpr std::array<Var, kVarCount> print_order = {Var::a, Var::b, Var::p,
                                                              Var::q, Var::t, Var::x};
    std::ostringstream out;
    bool first = true;
    for (const auto& term : f.terms()) {
        const bool negative = term.coeff < 0;
        if (first) {
            out << (negative ? "-" : "");
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        const Integer magnitude = abs(term.coeff);
        bool need_star = false;
        if (magnitude != 1 || term.exps == kUnitMonomial) {
            out << magnitude.get_str();
            need_star = true;
        }
        for (Var v : print_order) {
            const auto e = term.exps[static_cast<std::size_t>(v)];
            if (e == 0) {
                continue;
            }
            out << (need_star ? "*" : "") << var_name(v);
            if (e != 1) {
                out << '^' << e;
            }
            need_star = true;
        }
    }
    return out.str();
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    Polynomial parse() {
        Polynomial value = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected character");
        }
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what +
                         " in '" + std::string(text_) + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_factor(char c) const {
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || var_from_name(c).has_value();
    }

    Polynomial expr() {
        Polynomial value = term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            if (c == '+') {
                value += term();
            } else {
                value -= term();
            }
        }
        return value;
    }

    Polynomial term() {
        Polynomial value = unary();
        for (char c = peek();; c = peek()) {
            if (c == '*') {
                ++pos_;
                value *= unary();
            } else if (starts_factor(c)) {
                value *= power();
            } else {
                break;
            }
        }
        return value;
    }

    Polynomial unary() {
        const char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            const Integer e = digits();
            if (!e.fits_uint_p()) {
                fail("exponent too large");
            }
            return pow(base, static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    Integer digits() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected digits");
        }
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    Polynomial primary() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (peek() != ')') {
                fail("expected ')'");
            }
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return Polynomial(digits());
        }
        if (auto v = var_from_name(c)) {
            ++pos_;
            return Polynomial::variable(*v);
        }
        fail(c == '\0' ? "unexpected end of input" : "unexpected character");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

nlohmann::json to_json(const Polynomial& f) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& term : f.terms()) {
        out.push_back({{"coeff", term.coeff.get_str()}, {"exps", term.exps}});
    }
    return out;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
    std::vector<Term> terms;
    for (const auto& item : j) {
        Term term{item.at("exps").get<Monomial>(), 0};
        const auto text = item.at("coeff").get<std::string>();
        const Rational value = rat_parse(text);
        if (!is_integer(value)) {
            throw ParseError("non-integer polynomial coefficient '" + text + "'");
        }
        term.coeff = value.get_num();
        terms.push_back(std::move(term));
    }
    return Polynomial::from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// QPolynomial

QPolynomial::QPolynomial(const Rational& value) : num_(value.get_num()), den_(value.get_den()) {}

QPolynomial::QPolynomial(Polynomial num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw std::domain_error("QPolynomial: zero denominator");
    }
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    const Integer g = int_gcd(content(num_), den_);
    if (g != 1) {
        num_ = divide_exact(num_, g);
        den_ /= g;
    }
}

Rational QPolynomial::constant_value() const {
    if (!is_constant()) {
        throw std::logic_error("QPolynomial::constant_value on non-constant " + to_string(*this));
    }
    return make_rational(num_.constant_term(), den_);
}

QPolynomial operator+(const QPolynomial& lhs, const QPolynomial& rhs) {
    if (lhs.den_ == rhs.den_) {
        return QPolynomial(lhs.num_ + rhs.num_, lhs.den_);
    }
    return QPolynomial(scale(lhs.num_, rhs.den_) + scale(rhs.num_, lhs.den_), lhs.den_ * rhs.den_);
}

QPolynomial operator-(const QPolynomial& lhs, const QPolynomial& rhs) { return lhs + (-rhs); }

QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs) {
    return QPolynomial(lhs.num_ * rhs.num_, lhs.den_ * rhs.den_);
}

QPolynomial pow(const QPolynomial& f, unsigned long exponent) {
    return QPolynomial(pow(f.num(), exponent), pow(f.den(), exponent));
}

std::string to_string(const QPolynomial& f) {
    if (f.den() == 1) {
        return to_string(f.num());
    }
    if (f.is_constant()) {
        return to_string(f.constant_value());
    }
    return "(" + to_string(f.num()) + ")/" + to_string(f.den());
}

QPolynomial poly_substitute(const Polynomial& f, const Bindings& bindings) {
    // Cache powers of each bound value as they are requested.
    std::map<std::pair<Var, std::uint32_t>, QPolynomial> powers;
    auto power_of = [&](Var v, std::uint32_t e) -> const QPolynomial& {
        auto [it, inserted] = powers.try_emplace({v, e});
        if (inserted) {
            it->second = pow(bindings.at(v), e);
        }
        return it->second;
    };

    QPolynomial result;
    for (const auto& term : f.terms()) {
        Monomial residual = term.exps;
        QPolynomial factor = Polynomial(term.coeff);
        for (Var v : kAllVars) {
            const auto idx = static_cast<std::size_t>(v);
            if (residual[idx] == 0 || !bindings.contains(v)) {
                continue;
            }
            factor *= power_of(v, residual[idx]);
            residual[idx] = 0;
        }
        result += factor * QPolynomial(Polynomial::monomial(1, residual));
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
    return os << to_string(f);
}

std::ostream& operator<<(std::ostream& os, const QPolynomial& f) {
    return os << to_string(f);
}

}  // namespace horadam

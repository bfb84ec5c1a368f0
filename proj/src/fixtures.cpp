#include "horadam/fixtures.hpp"

#include <stdexcept>

namespace horadam {

namespace {

Polynomial product(const std::vector<Polynomial>& factors) {
    Polynomial out = 1;
    for (const auto& f : factors) {
        out *= f;
    }
    return out;
}

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts) {
    std::vector<Polynomial> out;
    out.reserve(texts.size());
    for (const auto& text : texts) {
        out.push_back(parse_polynomial(text));
    }
    return out;
}

std::vector<TableFixture> make_tables() {
    const auto r = [](const char* text) { return rat_parse(text); };
    return {
        // Fibonacci
        {1, 1, {"x"}, {"1-x-x^2"}, r("100/9899")},
        {1, 2, {"x", "1-x"}, {"1+x", "1-3x+x^2"}, r("9900/979801")},
        {1, 3, {"x", "1-2x-x^2"}, {"1+x-x^2", "1-4x-x^2"}, r("979900/96940301")},
        {1, 4, {"x", "1+x", "1-5x+x^2"}, {"1-x", "1+3x+x^2", "1-7x+x^2"}, r("31986700/3161716833")},
        {1, 5, {"x", "1-7x-16x^2+7x^3+x^4"}, {"1-x-x^2", "1+4x-x^2", "1-11x-x^2"}, r("9284070100/916060399199")},
        {1, 6, {"x", "1-x", "1-11x-64x^2-11x^3+x^4"}, {"1+x", "1-3x+x^2", "1+7x+x^2", "1-18x+x^2"},
         r("97194791100/9554028773189")},
        // Lucas
        {2, 1, {"2-x"}, {"1-x-x^2"}, r("19900/9899")},
        {2, 2, {"4-3x-5x^2"}, {"1+x", "1-3x+x^2"}, r("3969500/979801")},
        {2, 3, {"8-5x-36x^2+7x^3"}, {"1+x-x^2", "1-4x-x^2"}, r("794640700/96940301")},
        {2, 4, {"16-15x-180x^2+156x^3+17x^4"}, {"1-x", "1+3x+x^2", "1-7x+x^2"}, r("52773853900/3161716833")},
        {2, 5, {"32-45x-835x^2+1440x^3+745x^4-31x^5"}, {"1-x-x^2", "1+4x-x^2", "1-11x-x^2"},
         r("31467947446900/916060399199")},
        {2, 6, {"64-167x-3708x^2+12323x^3+12597x^4-3188x^5-65x^6"}, {"1+x", "1-3x+x^2", "1+7x+x^2", "1-18x+x^2"},
         r("688573873901500/9554028773189")},
        // Pell
        {3, 1, {"x"}, {"1-2x-x^2"}, std::nullopt},
        {3, 2, {"x", "1-x"}, {"1+x", "1-6x+x^2"}, std::nullopt},
        {3, 3, {"x", "1-4x-x^2"}, {"1+2x-x^2", "1-14x-x^2"}, std::nullopt},
        {3, 4, {"x", "1+x", "1-14x+x^2"}, {"1-x", "1+6x+x^2", "1-34x-x^2"}, std::nullopt},
        {3, 5, {"x", "1-38x-130x^2+38x^3+x^4"}, {"1-2x-x^2", "1-82x-x^2", "1+14x-x^2"}, std::nullopt},
        {3, 6, {"x", "x-1", "1-104x-1210x^2-104x^3+x^4"}, {"1+x", "1+34x+x^2", "1-6x+x^2", "1-198x+x^2"},
         std::nullopt},
        // Chebyshev polynomials of the second kind
        {4, 1, {"1"}, {"1-2tx+x^2"}, std::nullopt},
        {4, 2, {"1+x"}, {"1-x", "(1+x)^2-4xt^2"}, std::nullopt},
        {4, 3, {"1+4tx+x^2"}, {"1-2tx+x^2", "1+2t(3-4t^2)x+x^2"}, std::nullopt},
        {4, 4, {"1+x", "(1-x)^2+12t^2x"}, {"1-x", "(1+x)^2-4t^2x", "16t^2(1-t^2)x+(1-x)^2"}, std::nullopt},
        {4, 5, {"1-6tx+2x^2+32t^3x+96t^4x^2+32t^3x^3-32t^2x^2-6x^3t+x^4"},
         {"1+2t(3-4t^2)x+x^2", "1-2tx+x^2", "1-8t^3(4t^2-5)x-10tx+x^2"}, std::nullopt},
        {4, 6, {"1+x", "x^4+80t^4x^3-24x^3t^2-2x^2-480t^4x^2+640t^6x^2+88t^2x^2+80t^4x-24t^2x+1"},
         {"1-x", "(1+x)^2-4t^2x", "(1-x)^2+16t^2(1-t^2)x", "(1+x)^2-4t^2(4t^2-3)^2x"}, std::nullopt},
    };
}

std::vector<CorollaryFixture> make_corollary() {
    return {
        {1, "a + x(b - ap)", "1 - px - x^2q"},
        {2, "(a^2 + xb^2)(xq - 1)a^2 + a^2p^2x(xq + 1) - 2x^2pqab", "(1 + xq)(p^2x - (xq - 1)^2)"},
        {3,
         "(a^3 + b^3x - a^3p^3x)(1 - q^3x^2) - 2xpq(a^3 + b^3x) - x^2a^3p^4q + 3ab^2x^2p^2q"
         " + 3ab^2x^3pq^3 - 3a^2bx^3p^2q^3 + 3a^2bx^2pq^2 - 3p^2x^2a^3q^2",
         "(1 + pqx - q^3x^2)(1 - 3pqx - p^3x - q^3x^2)"},
        {4,
         "a^4 + (b^4 - a^4(p^4 + 3p^2q + q^2))x"
         " - q(5qa^4p^4 + b^4q + a^4q^3 + a^4p^6 + 7q^2a^4p^2 - 6qb^2a^2p^2 - 4b^3ap^3 - 4q^2ba^3p + 3b^4p^2)x^2"
         " + q^3(-8qba^3p^3 - 3b^4p^2 + a^4q^3 + 5qa^4p^4 - 6b^2a^2p^4 - b^4q + a^4p^6 - 4q^2ba^3p + 8b^3ap^3"
         " + 4q^2a^4p^2 + 4qb^3ap)x^3 + q^6(ap - b)^4x^4",
         "(1 - q^2x)((1 + q^2x)^2 + p^2qx)((1 - q^2x)^2 - p^2x(p^2 + 4q))"},
    };
}

}  // namespace

std::vector<Polynomial> TableFixture::printed_num_factors() const { return parse_all(num_factor_text); }
std::vector<Polynomial> TableFixture::printed_den_factors() const { return parse_all(den_factor_text); }
Polynomial TableFixture::printed_num() const { return product(printed_num_factors()); }
Polynomial TableFixture::printed_den() const { return product(printed_den_factors()); }

Polynomial CorollaryFixture::numerator() const { return parse_polynomial(numerator_text); }
Polynomial CorollaryFixture::denominator() const { return parse_polynomial(denominator_text); }

std::string table_preset(int table_id) {
    switch (table_id) {
        case 1: return "fibonacci";
        case 2: return "lucas";
        case 3: return "pell";
        case 4: return "chebyshev-u";
        default: throw std::out_of_range("no table " + std::to_string(table_id));
    }
}

Rational table_point() { return Rational(1, 100); }

const std::vector<TableFixture>& table_fixtures() {
    static const std::vector<TableFixture> tables = make_tables();
    return tables;
}

const TableFixture& table_fixture(int table_id, unsigned k) {
    for (const auto& row : table_fixtures()) {
        if (row.table_id == table_id && row.k == k) {
            return row;
        }
    }
    throw std::out_of_range("no fixture for table " + std::to_string(table_id) + ", k = " + std::to_string(k));
}

const std::vector<CorollaryFixture>& corollary_fixtures() {
    static const std::vector<CorollaryFixture> rows = make_corollary();
    return rows;
}

const CorollaryFixture& corollary_fixture(unsigned k) {
    for (const auto& row : corollary_fixtures()) {
        if (row.k == k) {
            return row;
        }
    }
    throw std::out_of_range("no closed form for k = " + std::to_string(k));
}

}  // namespace horadam

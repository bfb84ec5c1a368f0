// Acceptance criteria, one check per criterion. Run without arguments to
// execute all of them, or pass criterion numbers to run a subset. Prints one
// PASS/FAIL line per criterion; exit status is nonzero if any selected
// criterion fails.

#include "horadam/fixtures.hpp"
#include "horadam/gfengine.hpp"
#include "horadam/verify.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

using namespace horadam;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void add_note(Outcome& outcome, const std::string& message) {
    outcome.note += (outcome.note.empty() ? "" : "; ") + message;
}

void fail(Outcome& outcome, const std::string& message) {
    outcome.pass = false;
    add_note(outcome, message);
}

void check_runtime(Outcome& outcome, Clock::time_point start, double limit) {
    const double elapsed = seconds_since(start);
    std::ostringstream text;
    text.precision(3);
    text << elapsed << "s (limit " << limit << "s)";
    if (elapsed > limit) {
        fail(outcome, "too slow: " + text.str());
    } else {
        add_note(outcome, text.str());
    }
}

Outcome point_values(const char* preset_name, const std::vector<const char*>& expected, double limit) {
    Outcome outcome;
    const auto start = Clock::now();
    const HoradamParams params = preset(preset_name);
    for (unsigned k = 1; k <= expected.size(); ++k) {
        const Rational value = eval_at(horadam_gf(k, params).reduced, Rational(1, 100));
        const Rational want = rat_parse(expected[k - 1]);
        if (value != want) {
            fail(outcome, "k=" + std::to_string(k) + " computed " + to_string(value) + ", expected " + to_string(want));
        }
    }
    check_runtime(outcome, start, limit);
    return outcome;
}

Outcome criterion_1() {
    return point_values("fibonacci",
                        {"100/9899", "9900/979801", "979900/96940301", "31986700/3161716833",
                         "9284070100/916060399199", "97194791100/9554028773189"},
                        1.0);
}

Outcome criterion_2() {
    return point_values("lucas",
                        {"19900/9899", "3969500/979801", "794640700/96940301", "52773853900/3161716833",
                         "31467947446900/916060399199", "688573873901500/9554028773189"},
                        1.0);
}

Outcome criterion_3() {
    Outcome outcome;
    const auto start = Clock::now();
    const std::vector<std::pair<std::string, HoradamParams>> cases = {
        {"fibonacci", preset("fibonacci")},
        {"lucas", preset("lucas")},
        {"pell", preset("pell")},
        {"(3,-2,2,-3)", HoradamParams::numeric(3, -2, 2, -3)},
        {"(1,1,-1,2)", HoradamParams::numeric(1, 1, -1, 2)},
    };
    for (const auto& [name, params] : cases) {
        for (unsigned k = 1; k <= 8; ++k) {
            const GfResult gf = horadam_gf(k, params);
            if (series_coeffs(gf.numerator, gf.denominator, 64) != power_series_oracle(params, k, 64)) {
                fail(outcome, name + " k=" + std::to_string(k) + " differs from the oracle");
            }
        }
    }
    check_runtime(outcome, start, 30.0);
    return outcome;
}

Outcome criterion_4() {
    Outcome outcome;
    const HoradamParams cheb = preset("chebyshev-u");
    // n <= 16 means 17 coefficients.
    for (unsigned k = 1; k <= 4; ++k) {
        const GfResult gf = horadam_gf(k, cheb);
        if (series_coeffs(gf.reduced, 17) != power_series_oracle(cheb, k, 17)) {
            fail(outcome, "k=" + std::to_string(k) + " differs from U_n(t)^k");
        }
    }
    return outcome;
}

Outcome criterion_5() {
    Outcome outcome;
    std::map<Status, int> counts;
    for (const auto& row : table_fixtures()) {
        const VerifyReport r = verify_printed_gf(row.table_id, row.k);
        counts[r.status]++;
        const std::string where = "table " + std::to_string(row.table_id) + " k=" + std::to_string(row.k);
        if (r.status == Status::Fail) {
            fail(outcome, where + " FAIL: " + r.details);
        }
        if (row.k == 1 && r.status != Status::Pass) {
            fail(outcome, where + " must PASS");
        }
        if (r.status == Status::Erratum) {
            const HoradamParams params = preset(table_preset(row.table_id));
            if (!r.corrected || series_coeffs(*r.corrected, 64) != power_series_oracle(params, row.k, 64)) {
                fail(outcome, where + " ERRATUM without an oracle-confirmed correction");
            }
        }
    }
    outcome.note += std::to_string(counts[Status::Pass]) + " PASS, " + std::to_string(counts[Status::Erratum]) +
                    " ERRATUM";
    return outcome;
}

Outcome criterion_6() {
    Outcome outcome;
    const auto start = Clock::now();
    for (unsigned k = 1; k <= 4; ++k) {
        const VerifyReport r = verify_corollary(k);
        const std::string where = "k=" + std::to_string(k);
        if (k == 1 && r.status != Status::Pass) {
            fail(outcome, where + " must PASS");
        }
        if (r.status == Status::Fail) {
            fail(outcome, where + " FAIL: " + r.details);
        }
        if (r.status == Status::Erratum) {
            if (r.details.find("first differing monomial") == std::string::npos) {
                fail(outcome, where + " ERRATUM not localized to a monomial");
            }
            add_note(outcome, where + " ERRATUM");
        }
    }
    check_runtime(outcome, start, 10.0);
    return outcome;
}

Outcome criterion_7() {
    Outcome outcome;
    for (const char* name : {"fibonacci", "lucas", "pell"}) {
        for (unsigned k = 1; k <= 4; ++k) {
            const VerifyReport r = verify_linear_system(preset(name), k, 32);
            if (r.status != Status::Pass) {
                fail(outcome, std::string(name) + " k=" + std::to_string(k) + ": " + r.details);
            }
        }
    }
    return outcome;
}

Outcome criterion_8() {
    Outcome outcome;
    std::vector<std::pair<std::string, HoradamParams>> cases = {
        {"fibonacci", preset("fibonacci")},
        {"lucas", preset("lucas")},
        {"pell", preset("pell")},
        {"chebyshev-u", preset("chebyshev-u")},
        {"(3,-2,2,-3)", HoradamParams::numeric(3, -2, 2, -3)},
        {"(1,1,-1,2)", HoradamParams::numeric(1, 1, -1, 2)},
    };
    auto check = [&](const std::string& name, const HoradamParams& params, unsigned k) {
        const GfResult gf = horadam_gf(k, params);
        const std::string where = name + " k=" + std::to_string(k);
        const auto den = coefficients_in(gf.denominator, Var::x);
        if (den.empty() || den[0] != Polynomial(1)) {
            fail(outcome, where + ": x-constant term of det(Delta_k) is not 1");
        }
        const auto num = coefficients_in(gf.numerator, Var::x);
        const QPolynomial num0 = num.empty() ? QPolynomial() : QPolynomial(num[0]);
        if (num0 != pow(params.a, k)) {
            fail(outcome, where + ": x-constant term of det(delta_k) is not a^k");
        }
        if (degree_in(gf.denominator, Var::x) > static_cast<long>(k) + 1) {
            fail(outcome, where + ": deg_x det(Delta_k) exceeds k+1");
        }
    };
    for (const auto& [name, params] : cases) {
        for (unsigned k = 1; k <= 8; ++k) {
            check(name, params, k);
        }
    }
    for (unsigned k = 1; k <= 5; ++k) {
        check("symbolic", HoradamParams::symbolic(), k);
    }
    return outcome;
}

Outcome criterion_9() {
    Outcome outcome;
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> terms(0, 3);
    std::uniform_int_distribution<std::uint32_t> exponent(0, 2);
    std::uniform_int_distribution<int> coeff(-5, 5);
    auto entry = [&] {
        std::vector<Term> out;
        for (int i = terms(rng); i > 0; --i) {
            Monomial m{};
            m[static_cast<std::size_t>(Var::x)] = exponent(rng);
            m[static_cast<std::size_t>(Var::t)] = exponent(rng);
            out.push_back(Term{m, coeff(rng)});
        }
        return Polynomial::from_terms(std::move(out));
    };
    int disagreements = 0;
    for (int trial = 0; trial < 100; ++trial) {
        PolyMatrix m(4, 4);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                m(i, j) = entry();
            }
        }
        if (bareiss_determinant(m) != cofactor_determinant(m)) {
            ++disagreements;
        }
    }
    if (disagreements != 0) {
        fail(outcome, std::to_string(disagreements) + " of 100 matrices disagree");
    }
    return outcome;
}

const std::map<int, std::pair<const char*, std::function<Outcome()>>>& criteria() {
    static const std::map<int, std::pair<const char*, std::function<Outcome()>>> all = {
        {1, {"Fibonacci point values H_k(1/100), k=1..6", criterion_1}},
        {2, {"Lucas point values H_k(1/100), k=1..6", criterion_2}},
        {3, {"oracle equivalence, 5 parameter sets, k=1..8, 64 terms", criterion_3}},
        {4, {"symbolic Chebyshev U series, k=1..4, n<=16", criterion_4}},
        {5, {"printed-form audit of all table rows", criterion_5}},
        {6, {"closed forms k=1..4", criterion_6}},
        {7, {"linear system from oracle series, k=1..4, N=32", criterion_7}},
        {8, {"structural invariants of the determinants", criterion_8}},
        {9, {"Bareiss vs cofactor on 100 random 4x4 matrices", criterion_9}},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        selected.push_back(std::stoi(argv[i]));
    }
    if (selected.empty()) {
        for (const auto& [id, _] : criteria()) {
            selected.push_back(id);
        }
    }
    int failures = 0;
    for (int id : selected) {
        const auto it = criteria().find(id);
        if (it == criteria().end()) {
            std::cerr << "no criterion " << id << '\n';
            return 2;
        }
        Outcome outcome;
        try {
            outcome = it->second.second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        failures += outcome.pass ? 0 : 1;
        std::cout << (outcome.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << it->second.first;
        if (!outcome.note.empty()) {
            std::cout << "  [" << outcome.note << "]";
        }
        std::cout << '\n';
    }
    return failures == 0 ? 0 : 1;
}

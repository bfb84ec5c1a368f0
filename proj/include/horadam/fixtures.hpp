#pragma once

// Printed generating functions, point values and the symbolic k <= 4
// closed forms, transcribed verbatim (suspected typos included).

#include "horadam/exactnum.hpp"
#include "horadam/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace horadam {

struct TableFixture {
    int table_id = 0;  // 1 Fibonacci, 2 Lucas, 3 Pell, 4 Chebyshev U
    unsigned k = 0;
    std::vector<std::string> num_factor_text;
    std::vector<std::string> den_factor_text;
    std::optional<Rational> point_value;  // H_k(1/100), tables 1 and 2 only

    std::vector<Polynomial> printed_num_factors() const;
    std::vector<Polynomial> printed_den_factors() const;
    /// Products of the printed factors.
    Polynomial printed_num() const;
    Polynomial printed_den() const;
};

struct CorollaryFixture {
    unsigned k = 0;
    std::string numerator_text;
    std::string denominator_text;

    Polynomial numerator() const;
    Polynomial denominator() const;
};

/// Preset name used by a table ("fibonacci", "lucas", "pell", "chebyshev-u").
std::string table_preset(int table_id);

/// Evaluation point of the point-value columns.
Rational table_point();

const std::vector<TableFixture>& table_fixtures();

/// Throws std::out_of_range if no such row exists.
const TableFixture& table_fixture(int table_id, unsigned k);

const std::vector<CorollaryFixture>& corollary_fixtures();
const CorollaryFixture& corollary_fixture(unsigned k);

}  // namespace horadam

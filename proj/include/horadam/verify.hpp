#pragma once

// Checks of the determinant engine against the recurrence oracle and
// against the printed tables and closed forms. Disagreement with a printed
// formula is an ERRATUM when the engine itself agrees with the oracle; an
// engine/oracle disagreement is a FAIL.

#include "horadam/horadam.hpp"
#include "horadam/ratfun.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace horadam {

enum class Status { Pass, Erratum, Fail };

std::string to_string(Status status);

struct VerifyReport {
    std::string category;  // series, points, printed, corollary, linear
    std::string subject;
    Status status = Status::Fail;
    std::string details;
    /// Oracle-confirmed replacement carried by ERRATUM reports.
    std::optional<RationalFunction> corrected;
    std::optional<Rational> corrected_value;
};

nlohmann::json to_json(const VerifyReport& report);

inline constexpr std::uint64_t kDefaultSeed = 20030117;

/// PASS iff the engine's series equals w_n^k for n < count.
VerifyReport verify_series(const HoradamParams& params, unsigned k, std::size_t count,
                           const std::string& label = {});

/// One report per k = 1..6 of table 1 (Fibonacci) or 2 (Lucas), comparing
/// H_k(1/100) with the printed value.
std::vector<VerifyReport> verify_point_table(int table_id);

/// Cross-multiplication test of a printed table row against the engine.
VerifyReport verify_printed_gf(int table_id, unsigned k);

/// Symbolic cross-multiplication test of the k <= 4 closed forms. On
/// mismatch the engine is re-checked against the oracle on three random
/// integer quadruples drawn from [-5, 5] with the given seed.
VerifyReport verify_corollary(unsigned k, std::uint64_t seed = kDefaultSeed);

/// Checks Delta_k * [H_k, A_{k,k-1}, ..., A_{k,1}]^T = v_k modulo x^count
/// with every series taken from the oracle.
VerifyReport verify_linear_system(const HoradamParams& params, unsigned k, std::size_t count,
                                  const std::string& label = {});

struct VerifyOptions {
    std::optional<std::string> only;  // restrict to one category
    std::uint64_t seed = kDefaultSeed;
};

/// The full battery: series for every preset and k = 1..8, both point
/// tables, every printed row, the closed forms k = 1..4 and the linear
/// system for every preset and k = 1..4. Throws std::invalid_argument for
/// an unknown category.
std::vector<VerifyReport> run_verification(const VerifyOptions& options = {});

std::vector<std::string> verify_categories();

}  // namespace horadam

#pragma once

#include "hek/report.hpp"

namespace hek {

/**
 * Subcommand drivers.  Input validation failures throw
 * std::invalid_argument (CLI exit 2), mathematical anomalies throw
 * std::domain_error (CLI exit 1), and ordinary check failures are recorded
 * in the report (CLI exit 1 via all_pass).
 */

/** Line/configuration suite over six branch values. */
Report cmd_lines(const std::array<std::string, 6>& a_text, const RunConfig& cfg);

/** Normal form of a 4x6 coefficient matrix stored in a curve JSON file. */
Report cmd_normalize(const std::string& path, const RunConfig& cfg);

/** Mobius equivalence of two lambda-parameter branch sets of type n. */
Report cmd_iso(int n, const std::vector<std::string>& values, const RunConfig& cfg);

/** Whole-pipeline verification for one lambda triple. */
Report cmd_verify_all(const std::array<std::string, 3>& lambda_text, const RunConfig& cfg);

/** Deterministic fixture corpus; writes JSON to out_path when nonempty. */
Report cmd_fixtures(std::uint64_t seed, int count, const std::string& out_path,
                    const RunConfig& cfg);

}  // namespace hek

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "hek/rational.hpp"

namespace hek {

enum class Mode { Exact, Numeric, Auto };

Mode parse_mode(const std::string& name);
std::string mode_name(Mode m);

/** Knobs shared by every subcommand. */
struct RunConfig {
    Mode mode = Mode::Auto;
    Tolerance tol{};
    std::uint64_t seed = 0;
    bool parallel = false;
    bool json = false;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/**
 * Outcome of one subcommand.  Serialization is deterministic for fixed
 * inputs: checks are sorted by name, the digest covers command, input and
 * mode but not timing, and timing_ms is the only field allowed to vary
 * between identical runs.
 */
struct Report {
    std::string command;
    nlohmann::json input;
    std::string mode_used;
    std::vector<std::string> warnings;
    std::vector<CheckResult> checks;
    nlohmann::json payload = nlohmann::json::object();
    double timing_ms = 0.0;

    bool all_pass() const;
    std::string digest() const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

std::uint64_t fnv1a64(const std::string& data);

}  // namespace hek

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace hek {

/**
 * Abstract incidence structure on 16 points and 16 planes, stored as one
 * bitmask row per point (bit j = point lies on plane j).  Labels are
 * carried along for reporting; they play no role in the combinatorics.
 */
struct Config16 {
    std::array<std::uint16_t, 16> rows{};
    std::array<std::string, 16> point_labels{};
    std::array<std::string, 16> plane_labels{};

    bool entry(int i, int j) const {
        return rows[static_cast<std::size_t>(i)] >> j & 1;
    }
    void set(int i, int j, bool value) {
        const auto bit = static_cast<std::uint16_t>(1u << j);
        auto& row = rows[static_cast<std::size_t>(i)];
        row = value ? static_cast<std::uint16_t>(row | bit)
                    : static_cast<std::uint16_t>(row & ~bit);
    }
    int row_sum(int i) const;
    int col_sum(int j) const;

    friend bool operator==(const Config16& a, const Config16& b) { return a.rows == b.rows; }
};

/** True iff every point lies on exactly 6 planes and every plane contains exactly 6 points. */
bool is_config(const Config16& c);

/**
 * A (16,6)-configuration is nondegenerate when distinct points share at
 * most 2 planes and distinct planes share at most 2 points.  Requires
 * is_config(c); throws std::invalid_argument otherwise.
 */
bool is_nondegenerate(const Config16& c);

/**
 * Rosenhain tetrahedron: 4 points and 4 planes such that each plane
 * contains exactly 3 of the points and each point lies on exactly 3 of the
 * planes.  Indices refer to rows/columns of the configuration.
 */
struct RosenhainTetra {
    std::array<int, 4> points{};
    std::array<int, 4> planes{};

    friend bool operator==(const RosenhainTetra& a, const RosenhainTetra& b) {
        return a.points == b.points && a.planes == b.planes;
    }
};

/**
 * Enumerate all Rosenhain tetrahedra by brute force over the 1820 point
 * quadruples, emitting results in lexicographic point order.  A point
 * quadruple extends to a tetrahedron iff exactly four planes contain
 * exactly three of its points and the incidence count per point works out
 * to 3; both conditions are checked directly.
 */
std::vector<RosenhainTetra> rosenhain_enumerate(const Config16& c);

bool validate_tetra(const Config16& c, const RosenhainTetra& t);

/** 16 lines of 16 '0'/'1' characters, one per point. */
std::string config_to_text(const Config16& c);

/** Inverse of config_to_text; labels default to p0..p15 / h0..h15. */
Config16 config_from_text(const std::string& text);

nlohmann::json config_to_json(const Config16& c);
Config16 config_from_json(const nlohmann::json& j);

}  // namespace hek

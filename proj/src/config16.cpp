#include "hek/config16.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace hek {

int Config16::row_sum(int i) const {
    return std::popcount(rows[static_cast<std::size_t>(i)]);
}

int Config16::col_sum(int j) const {
    int n = 0;
    for (int i = 0; i < 16; ++i) n += entry(i, j);
    return n;
}

bool is_config(const Config16& c) {
    for (int i = 0; i < 16; ++i)
        if (c.row_sum(i) != 6) return false;
    for (int j = 0; j < 16; ++j)
        if (c.col_sum(j) != 6) return false;
    return true;
}

bool is_nondegenerate(const Config16& c) {
    if (!is_config(c)) throw std::invalid_argument("not a (16,6)-configuration");
    for (int i = 0; i < 16; ++i)
        for (int k = i + 1; k < 16; ++k)
            if (std::popcount(static_cast<std::uint16_t>(
                    c.rows[static_cast<std::size_t>(i)] &
                    c.rows[static_cast<std::size_t>(k)])) > 2)
                return false;
    std::array<std::uint16_t, 16> cols{};
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j)
            if (c.entry(i, j)) cols[static_cast<std::size_t>(j)] |= static_cast<std::uint16_t>(1u << i);
    for (int j = 0; j < 16; ++j)
        for (int k = j + 1; k < 16; ++k)
            if (std::popcount(static_cast<std::uint16_t>(
                    cols[static_cast<std::size_t>(j)] & cols[static_cast<std::size_t>(k)])) > 2)
                return false;
    return true;
}

std::vector<RosenhainTetra> rosenhain_enumerate(const Config16& c) {
    std::array<std::uint16_t, 16> cols{};
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j)
            if (c.entry(i, j)) cols[static_cast<std::size_t>(j)] |= static_cast<std::uint16_t>(1u << i);

    std::vector<RosenhainTetra> out;
    for (int p0 = 0; p0 < 16; ++p0)
        for (int p1 = p0 + 1; p1 < 16; ++p1)
            for (int p2 = p1 + 1; p2 < 16; ++p2)
                for (int p3 = p2 + 1; p3 < 16; ++p3) {
                    const auto quad = static_cast<std::uint16_t>(
                        1u << p0 | 1u << p1 | 1u << p2 | 1u << p3);
                    std::array<int, 4> planes{};
                    int found = 0;
                    for (int j = 0; j < 16 && found <= 4; ++j)
                        if (std::popcount(static_cast<std::uint16_t>(
                                cols[static_cast<std::size_t>(j)] & quad)) == 3) {
                            if (found < 4) planes[static_cast<std::size_t>(found)] = j;
                            ++found;
                        }
                    if (found != 4) continue;
                    RosenhainTetra t{{p0, p1, p2, p3}, planes};
                    if (validate_tetra(c, t)) out.push_back(t);
                }
    return out;
}

bool validate_tetra(const Config16& c, const RosenhainTetra& t) {
    for (int j : t.planes) {
        int on = 0;
        for (int i : t.points) on += c.entry(i, j);
        if (on != 3) return false;
    }
    for (int i : t.points) {
        int on = 0;
        for (int j : t.planes) on += c.entry(i, j);
        if (on != 3) return false;
    }
    return true;
}

std::string config_to_text(const Config16& c) {
    std::string out;
    out.reserve(16 * 17);
    for (int i = 0; i < 16; ++i) {
        for (int j = 0; j < 16; ++j) out.push_back(c.entry(i, j) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

Config16 config_from_text(const std::string& text) {
    Config16 c;
    std::istringstream in(text);
    std::string line;
    int i = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (i >= 16 || line.size() != 16)
            throw std::invalid_argument("configuration text must be 16 lines of 16 characters");
        for (int j = 0; j < 16; ++j) {
            const char ch = line[static_cast<std::size_t>(j)];
            if (ch != '0' && ch != '1')
                throw std::invalid_argument("configuration text may contain only '0' and '1'");
            c.set(i, j, ch == '1');
        }
        ++i;
    }
    if (i != 16) throw std::invalid_argument("configuration text must have 16 rows");
    for (int k = 0; k < 16; ++k) {
        c.point_labels[static_cast<std::size_t>(k)] = "p" + std::to_string(k);
        c.plane_labels[static_cast<std::size_t>(k)] = "h" + std::to_string(k);
    }
    return c;
}

nlohmann::json config_to_json(const Config16& c) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < 16; ++i) {
        std::string row;
        for (int j = 0; j < 16; ++j) row.push_back(c.entry(i, j) ? '1' : '0');
        rows.push_back(row);
    }
    return nlohmann::json{{"schema", "1"},
                          {"points", c.point_labels},
                          {"planes", c.plane_labels},
                          {"rows", rows}};
}

Config16 config_from_json(const nlohmann::json& j) {
    if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].size() != 16)
        throw std::invalid_argument("configuration JSON needs 16 rows");
    std::string text;
    for (const auto& row : j["rows"]) text += row.get<std::string>() + "\n";
    Config16 c = config_from_text(text);
    if (j.contains("points"))
        for (std::size_t k = 0; k < 16; ++k) c.point_labels[k] = j["points"].at(k).get<std::string>();
    if (j.contains("planes"))
        for (std::size_t k = 0; k < 16; ++k) c.plane_labels[k] = j["planes"].at(k).get<std::string>();
    return c;
}

}  // namespace hek

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "monofock/test_function.hpp"

namespace monofock::cli {

using Cell = std::variant<std::monostate, std::int64_t, double, Complex, std::string>;

// A result table. CSV gets a header row; JSON carries the canonical config alongside.
struct Document {
    std::string command;
    nlohmann::json config;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

std::string render_csv(const Document& doc);
std::string render_json(const Document& doc);

} // namespace monofock::cli

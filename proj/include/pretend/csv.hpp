#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pretend {

// Shortest decimal that round-trips to the same double; locale independent.
std::string format_double(double v);

// Strict parse of a decimal or exponent-form number ("1e6" is accepted).
double parse_double(std::string_view text);
std::int64_t parse_int(std::string_view text);

using Cell = std::variant<std::string, double, std::int64_t>;

// Rectangular result set shared by CSV and JSON emitters. Rows keep insertion
// order, so output bytes depend only on the computed values.
struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
    std::string to_csv() const;
    // Array of objects keyed by column name.
    std::string to_json() const;
};

}  // namespace pretend

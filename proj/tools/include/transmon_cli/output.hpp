#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace transmon::cli {

using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

/// printf("%.12g"); nan/inf are spelled "nan", "inf", "-inf".
std::string format_number(double v);

/// Header line plus one line per row, '\n' terminated, numbers via format_number.
std::string render_csv(const Table& t);

/// Column-oriented form: {"column": [values...], ...}.
nlohmann::ordered_json table_json(const Table& t);

std::uint64_t fnv1a64(const std::string& bytes);
std::string hex64(std::uint64_t v);

}  // namespace transmon::cli

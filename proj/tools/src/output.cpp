#include "transmon_cli/output.hpp"

#include <cmath>
#include <cstdio>

namespace transmon::cli {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string render_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    if (i) out += ',';
    out += t.header[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      if (const auto* d = std::get_if<double>(&row[i])) out += format_number(*d);
      else out += std::get<std::string>(row[i]);
    }
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json table_json(const Table& t) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (std::size_t c = 0; c < t.header.size(); ++c) {
    auto col = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      std::visit([&](const auto& v) { col.push_back(v); }, row[c]);
    }
    j[t.header[c]] = std::move(col);
  }
  return j;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace transmon::cli

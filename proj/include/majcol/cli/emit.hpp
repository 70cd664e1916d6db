#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace majcol::cli {

using Cell = std::variant<std::int64_t, double, bool, std::string>;

/// Flat records with a fixed column order.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row);
  friend bool operator==(const Table&, const Table&) = default;
};

enum class Format { Csv, Json };
Format parse_format(std::string_view s);

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest decimal that reads back to the same double.
std::string format_double(double x);

std::string render(const Table& t, Format f);
/// Parses CSV written by render; integers, floats and true/false are typed.
Table load_csv(std::string_view text);

/// Writes via a sibling temporary file and rename.
void write_atomic(const std::filesystem::path& path, std::string_view content);
void emit(const Table& t, Format f, const std::filesystem::path& path);

}  // namespace majcol::cli

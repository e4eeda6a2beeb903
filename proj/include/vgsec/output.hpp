#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace vgsec {

/// RFC 4180 writer: CRLF record separators, fields quoted only when needed.
class CsvWriter {
public:
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);

  CsvWriter& field(std::string_view text);
  CsvWriter& field(double value);
  CsvWriter& field(long long value);
  CsvWriter& field(unsigned long long value);
  CsvWriter& field(std::size_t value) { return field(static_cast<unsigned long long>(value)); }
  CsvWriter& field(int value) { return field(static_cast<long long>(value)); }
  CsvWriter& field(unsigned value) { return field(static_cast<unsigned long long>(value)); }
  void end_row();

  /// Flushes and throws if any write failed.
  void close();

private:
  void separator();

  std::filesystem::path path_;
  std::ofstream out_;
  std::size_t columns_ = 0;
  std::size_t in_row_ = 0;
};

/// Shortest decimal text that round-trips the double.
std::string format_number(double value);

void write_text_file(const std::filesystem::path& path, std::string_view text);
void write_json_file(const std::filesystem::path& path, const nlohmann::ordered_json& j);

} // namespace vgsec

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vgsec/output.hpp"

using namespace vgsec;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST_CASE("CSV writer follows RFC 4180") {
  const auto path = std::filesystem::temp_directory_path() / "vgsec_output_test.csv";
  {
    CsvWriter w(path, {"name", "value", "count"});
    w.field("plain").field(0.1).field(3);
    w.end_row();
    w.field("with,comma").field(-2.5e-300).field(std::size_t{7});
    w.end_row();
    w.field("say \"hi\"").field(1e21).field(-4);
    w.end_row();
    w.close();
  }
  CHECK(slurp(path) == "name,value,count\r\nplain,0.1,3\r\n\"with,comma\",-2.5e-300,7\r\n"
                       "\"say \"\"hi\"\"\",1e+21,-4\r\n");
  std::filesystem::remove(path);
}

TEST_CASE("CSV writer enforces the column count") {
  const auto path = std::filesystem::temp_directory_path() / "vgsec_output_cols.csv";
  CsvWriter w(path, {"a", "b"});
  w.field(1);
  CHECK_THROWS(w.end_row());
  std::filesystem::remove(path);
}

TEST_CASE("numbers round-trip through their text form") {
  for (double x : {0.1, 1.0 / 3.0, 1e-310, 123456789.123456789, -0.0, 2000.0}) {
    const auto s = format_number(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(2000.0) == "2000");
}

#include "smotzkin/bfile.hpp"

#include <charconv>
#include <sstream>

namespace smotzkin {

BFileParseError::BFileParseError(int line, const std::string& what)
    : std::runtime_error("b-file line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

bool is_integer_token(const std::string& s) {
  std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

BFile parse_bfile(std::istream& in) {
  BFile out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::string index_tok, value_tok, extra;
    fields >> index_tok >> value_tok;
    if (value_tok.empty()) throw BFileParseError(line_no, "expected \"index value\", got \"" + line + "\"");
    if (fields >> extra) throw BFileParseError(line_no, "trailing field \"" + extra + "\"");

    long index = 0;
    auto [ptr, ec] = std::from_chars(index_tok.data(), index_tok.data() + index_tok.size(), index);
    if (ec != std::errc() || ptr != index_tok.data() + index_tok.size())
      throw BFileParseError(line_no, "bad index \"" + index_tok + "\"");
    if (!is_integer_token(value_tok)) throw BFileParseError(line_no, "bad value \"" + value_tok + "\"");
    if (out.values.count(index) != 0)
      throw BFileParseError(line_no, "duplicate index " + std::to_string(index));
    out.values.emplace(index, BigInt(value_tok, 10));
  }
  return out;
}

}  // namespace smotzkin

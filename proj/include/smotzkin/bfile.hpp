#pragma once

#include <istream>
#include <map>
#include <stdexcept>
#include <string>

#include "smotzkin/bigint.hpp"

namespace smotzkin {

class BFileParseError : public std::runtime_error {
 public:
  BFileParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// OEIS b-file: "index value" per line, '#' comments and blank lines skipped.
struct BFile {
  std::map<long, BigInt> values;
};

BFile parse_bfile(std::istream& in);

}  // namespace smotzkin

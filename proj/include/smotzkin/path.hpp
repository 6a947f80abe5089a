#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace smotzkin {

enum class Step : std::int8_t { Down = -1, Level = 0, Up = 1 };

enum class Direction { Forward, Reverse };

// A and B label forward paths, C and D reverse paths.
enum class Family { A, B, C, D };

char family_letter(Family f);
char step_letter(Step s);

class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

  // Letters u/h/d; throws std::invalid_argument on anything else.
  static LatticePath parse(std::string_view word);

  std::size_t length() const { return steps_.size(); }
  std::span<const Step> steps() const { return steps_; }

  // Height after the first j steps, height(0) == 0.
  int height(std::size_t j) const;
  int final_height() const { return height(steps_.size()); }

  std::string to_string() const;

  bool operator==(const LatticePath&) const = default;

 private:
  std::vector<Step> steps_;
};

// Heights stay >= 0 and the non-down steps spell a prefix of huhuhu...
bool is_valid_forward(const LatticePath& path);

// Heights stay >= 0 and the non-up steps spell a prefix of dhdhdh...
bool is_valid_reverse(const LatticePath& path);

// Forward: A when the last non-down step is Up (or there is none), B when it
// is Level. Reverse: C when the last non-up step is Level (or there is none),
// D when it is Down. Throws std::invalid_argument for invalid paths.
Family classify(const LatticePath& path, Direction direction);

}  // namespace smotzkin

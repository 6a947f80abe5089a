#include "smotzkin/path.hpp"

#include <optional>
#include <stdexcept>

namespace smotzkin {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'a';
    case Family::B: return 'b';
    case Family::C: return 'c';
    case Family::D: return 'd';
  }
  return '?';
}

char step_letter(Step s) {
  switch (s) {
    case Step::Up: return 'u';
    case Step::Level: return 'h';
    case Step::Down: return 'd';
  }
  return '?';
}

LatticePath LatticePath::parse(std::string_view word) {
  std::vector<Step> steps;
  steps.reserve(word.size());
  for (char ch : word) {
    switch (ch) {
      case 'u': steps.push_back(Step::Up); break;
      case 'h': steps.push_back(Step::Level); break;
      case 'd': steps.push_back(Step::Down); break;
      default:
        throw std::invalid_argument(std::string("unknown step letter '") + ch + "'");
    }
  }
  return LatticePath(std::move(steps));
}

int LatticePath::height(std::size_t j) const {
  if (j > steps_.size()) throw std::out_of_range("height index past end of path");
  int h = 0;
  for (std::size_t s = 0; s < j; ++s) h += static_cast<int>(steps_[s]);
  return h;
}

std::string LatticePath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(step_letter(s));
  return out;
}

namespace {

// `skipped` is the step kind ignored by the alternation; `first` and
// `second` alternate among the rest.
bool valid_alternating(const LatticePath& path, Step skipped, Step first, Step second) {
  int height = 0;
  bool expect_first = true;
  for (Step s : path.steps()) {
    height += static_cast<int>(s);
    if (height < 0) return false;
    if (s == skipped) continue;
    if (s != (expect_first ? first : second)) return false;
    expect_first = !expect_first;
  }
  return true;
}

std::optional<Step> last_step_other_than(const LatticePath& path, Step skipped) {
  auto steps = path.steps();
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    if (*it != skipped) return *it;
  return std::nullopt;
}

}  // namespace

bool is_valid_forward(const LatticePath& path) {
  return valid_alternating(path, Step::Down, Step::Level, Step::Up);
}

bool is_valid_reverse(const LatticePath& path) {
  return valid_alternating(path, Step::Up, Step::Down, Step::Level);
}

Family classify(const LatticePath& path, Direction direction) {
  if (direction == Direction::Forward) {
    if (!is_valid_forward(path))
      throw std::invalid_argument("not a partial S-Motzkin path: " + path.to_string());
    auto last = last_step_other_than(path, Step::Down);
    return (!last || *last == Step::Up) ? Family::A : Family::B;
  }
  if (!is_valid_reverse(path))
    throw std::invalid_argument("not a partial reverse S-Motzkin path: " + path.to_string());
  auto last = last_step_other_than(path, Step::Up);
  return (!last || *last == Step::Level) ? Family::C : Family::D;
}

}  // namespace smotzkin

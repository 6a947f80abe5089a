#include "smotzkin/oracle.hpp"

#include <stdexcept>
#include <string>

namespace smotzkin {

namespace {

// Both validity conditions are prefix-closed, so an invalid prefix ends the
// whole subtree.
class Enumerator {
 public:
  Enumerator(Direction direction, int n_max, CountTable& first, CountTable& second)
      : direction_(direction), n_max_(n_max), first_(first), second_(second) {}

  void run() {
    std::vector<Step> steps;
    steps.reserve(static_cast<std::size_t>(n_max_));
    extend(steps);
  }

 private:
  bool valid(const LatticePath& p) const {
    return direction_ == Direction::Forward ? is_valid_forward(p) : is_valid_reverse(p);
  }

  void extend(std::vector<Step>& steps) {
    LatticePath path(steps);
    if (!valid(path)) return;
    Family f = classify(path, direction_);
    bool second = f == Family::B || f == Family::D;
    (second ? second_ : first_).at_mut(static_cast<int>(steps.size()), path.final_height()) += 1;
    if (static_cast<int>(steps.size()) == n_max_) return;
    for (Step s : {Step::Up, Step::Level, Step::Down}) {
      steps.push_back(s);
      extend(steps);
      steps.pop_back();
    }
  }

  Direction direction_;
  int n_max_;
  CountTable& first_;
  CountTable& second_;
};

}  // namespace

TablePair oracle_counts(Direction direction, int n_max, int bound) {
  if (n_max < 0) throw std::invalid_argument("oracle_counts: n_max must be non-negative");
  if (n_max > bound)
    throw std::length_error("oracle_counts: n_max " + std::to_string(n_max) +
                            " exceeds bound " + std::to_string(bound));
  bool forward = direction == Direction::Forward;
  CountTable first(forward ? Family::A : Family::C, n_max);
  CountTable second(forward ? Family::B : Family::D, n_max);
  Enumerator(direction, n_max, first, second).run();
  return {std::move(first), std::move(second)};
}

}  // namespace smotzkin

#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pathmorph/errors.hpp"

namespace pathmorph {

/// A 2n-step simple-random-walk path, stored as its position sequence
/// S_0, S_1, ..., S_2n. Immutable after construction; construction always
/// validates, so every live Path satisfies:
///   positions[0] == 0, |positions[i] - positions[i-1]| == 1, odd size >= 3.
class Path {
 public:
  /// Validates a raw position sequence and wraps it.
  /// Throws OddLength, NonZeroStart, BadStep, InvalidLength.
  static Path from_positions(std::vector<int> raw);

  /// Builds a path from unit steps by prefix summation.
  /// Throws InvalidLength (empty or odd count) and BadStep (value not +-1).
  static Path from_steps(std::span<const int> steps);

  const std::vector<int>& positions() const noexcept { return positions_; }

  /// Half-length n; the path has 2n steps and 2n+1 positions.
  int half_length() const noexcept { return static_cast<int>(positions_.size() / 2); }
  int num_steps() const noexcept { return static_cast<int>(positions_.size()) - 1; }

  int at(int i) const { return positions_.at(static_cast<std::size_t>(i)); }
  int terminal() const noexcept { return positions_.back(); }
  int max_value() const noexcept;
  int min_value() const noexcept;

  /// Step view: steps()[i] = S_{i+1} - S_i, each +-1.
  std::vector<int> steps() const;

  /// The pointwise negation -S; always a valid path.
  Path negated() const;

  friend bool operator==(const Path&, const Path&) = default;
  /// Lexicographic on positions, which coincides with lexicographic order
  /// on step sequences under -1 < +1.
  friend std::strong_ordering operator<=>(const Path&, const Path&) = default;

 private:
  explicit Path(std::vector<int> validated) : positions_(std::move(validated)) {}
  std::vector<int> positions_;
};

/// A sequence of +-1 steps; the derived, non-canonical encoding of a path.
struct StepSeq {
  std::vector<int> steps;

  friend bool operator==(const StepSeq&, const StepSeq&) = default;
};

Path path_from_steps(const StepSeq& s);
StepSeq steps_from_path(const Path& p);

/// Checks all Path invariants on a raw integer sequence.
Path validate(std::vector<int> raw);

/// Emits the tuple form "(0,S_1,...,S_2n)", no spaces.
std::string serialize(const Path& p);

/// Parses a comma-separated integer list, optionally wrapped in one pair of
/// parentheses, then validates. Left inverse of serialize.
Path parse(std::string_view text);

}  // namespace pathmorph

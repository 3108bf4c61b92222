#include "pathmorph/path.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

namespace pathmorph {

Path Path::from_positions(std::vector<int> raw) {
  if (raw.empty()) {
    raise(Errc::OddLength, "position list must have odd length 2n+1, got 0");
  }
  if (raw.front() != 0) {
    raise(Errc::NonZeroStart, "positions[0] must be 0, got " + std::to_string(raw.front()));
  }
  // a bad step is reported before a bad length, so defective tuples name the
  // first broken invariant
  for (std::size_t i = 1; i < raw.size(); ++i) {
    int d = raw[i] - raw[i - 1];
    if (d != 1 && d != -1) {
      raise(Errc::BadStep, "|S_" + std::to_string(i) + " - S_" + std::to_string(i - 1) +
                               "| != 1 (values " + std::to_string(raw[i]) + ", " +
                               std::to_string(raw[i - 1]) + ")");
    }
  }
  if (raw.size() % 2 == 0) {
    raise(Errc::OddLength, "position list must have odd length 2n+1, got " +
                               std::to_string(raw.size()));
  }
  if (raw.size() < 3) {
    raise(Errc::InvalidLength, "walk needs at least one full step pair (length >= 3)");
  }
  return Path(std::move(raw));
}

Path Path::from_steps(std::span<const int> steps) {
  if (steps.empty() || steps.size() % 2 != 0) {
    raise(Errc::InvalidLength,
          "step sequence must be non-empty and of even length, got " + std::to_string(steps.size()));
  }
  std::vector<int> pos;
  pos.reserve(steps.size() + 1);
  pos.push_back(0);
  int running = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] != 1 && steps[i] != -1) {
      raise(Errc::BadStep, "step " + std::to_string(i) + " is " + std::to_string(steps[i]));
    }
    running += steps[i];
    pos.push_back(running);
  }
  return Path(std::move(pos));
}

int Path::max_value() const noexcept { return *std::max_element(positions_.begin(), positions_.end()); }

int Path::min_value() const noexcept { return *std::min_element(positions_.begin(), positions_.end()); }

std::vector<int> Path::steps() const {
  std::vector<int> out;
  out.reserve(positions_.size() - 1);
  for (std::size_t i = 1; i < positions_.size(); ++i) {
    out.push_back(positions_[i] - positions_[i - 1]);
  }
  return out;
}

Path Path::negated() const {
  std::vector<int> neg(positions_.size());
  std::transform(positions_.begin(), positions_.end(), neg.begin(), [](int v) { return -v; });
  return Path(std::move(neg));
}

Path path_from_steps(const StepSeq& s) { return Path::from_steps(s.steps); }

StepSeq steps_from_path(const Path& p) { return StepSeq{p.steps()}; }

Path validate(std::vector<int> raw) { return Path::from_positions(std::move(raw)); }

std::string serialize(const Path& p) {
  std::string out = "(";
  const auto& pos = p.positions();
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(pos[i]);
  }
  out += ')';
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Path parse(std::string_view text) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') {
      raise(Errc::SyntaxError, "unbalanced parentheses in \"" + std::string(text) + "\"");
    }
    body.remove_prefix(1);
    body.remove_suffix(1);
  }
  if (trim(body).empty()) {
    raise(Errc::SyntaxError, "empty tuple");
  }
  std::vector<int> values;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    std::string_view tok = trim(body.substr(start, comma == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : comma - start));
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
      raise(Errc::SyntaxError, "bad integer token \"" + std::string(tok) + "\"");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return validate(std::move(values));
}

}  // namespace pathmorph

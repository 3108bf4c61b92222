#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <numeric>
#include <random>

#include "pathmorph/path.hpp"
#include "test_support.hpp"

using namespace pathmorph;
using testsupport::code_of;

namespace {

// Independent oracle: positions by plain prefix summation.
std::vector<int> prefix_sum_oracle(const std::vector<int>& steps) {
  std::vector<int> pos{0};
  for (int s : steps) pos.push_back(pos.back() + s);
  return pos;
}

// Independent oracle: steps by pairwise differences.
std::vector<int> difference_oracle(const std::vector<int>& pos) {
  std::vector<int> steps;
  for (std::size_t i = 1; i < pos.size(); ++i) steps.push_back(pos[i] - pos[i - 1]);
  return steps;
}

}  // namespace

TEST_CASE("path_from_steps computes prefix sums") {
  CHECK(path_from_steps({{1, 1, -1, -1}}).positions() == std::vector<int>{0, 1, 2, 1, 0});
  CHECK(path_from_steps({{1, -1}}).positions() == std::vector<int>{0, 1, 0});

  // value frozen from the prefix-sum oracle
  const std::vector<int> steps{-1, -1, 1, 1, 1, -1};
  CHECK(prefix_sum_oracle(steps) == std::vector<int>{0, -1, -2, -1, 0, 1, 0});
  CHECK(path_from_steps({steps}).positions() == std::vector<int>{0, -1, -2, -1, 0, 1, 0});
}

TEST_CASE("path_from_steps rejects bad input") {
  CHECK(code_of([] { path_from_steps({{}}); }) == Errc::InvalidLength);
  CHECK(code_of([] { path_from_steps({{1, -1, 1}}); }) == Errc::InvalidLength);
  CHECK(code_of([] { path_from_steps({{1, 0}}); }) == Errc::BadStep);
  CHECK(code_of([] { path_from_steps({{1, 2}}); }) == Errc::BadStep);
}

TEST_CASE("steps_from_path computes differences") {
  CHECK(steps_from_path(validate({0, 1, 0})).steps == std::vector<int>{1, -1});
  CHECK(steps_from_path(validate({0, 1, 2, 3, 2, 1, 0})).steps ==
        std::vector<int>{1, 1, 1, -1, -1, -1});

  const std::vector<int> pos{0, -1, 0, -1, 0, 1, 0};
  CHECK(difference_oracle(pos) == std::vector<int>{-1, 1, -1, 1, 1, -1});
  CHECK(steps_from_path(validate(pos)).steps == std::vector<int>{-1, 1, -1, 1, 1, -1});
}

TEST_CASE("validate accepts valid walks and reports the right defect") {
  const Path p = validate({0, 1, 2, 1, 0});
  CHECK(p.half_length() == 2);
  CHECK(p.num_steps() == 4);

  CHECK(code_of([] { validate({1, 2, 1}); }) == Errc::NonZeroStart);
  CHECK(code_of([] { validate({0, 2, 1, 0, 1}); }) == Errc::BadStep);
  CHECK(code_of([] { validate({0, 1, 0, 1}); }) == Errc::OddLength);
  CHECK(code_of([] { validate({}); }) == Errc::OddLength);
  CHECK(code_of([] { validate({0}); }) == Errc::InvalidLength);
}

TEST_CASE("serialize emits the tuple form") {
  CHECK(serialize(validate({0, 1, 0})) == "(0,1,0)");
  CHECK(serialize(validate({0, -1, -2, -1, 0})) == "(0,-1,-2,-1,0)");
}

TEST_CASE("parse reads tuples with and without parentheses") {
  CHECK(parse("(0,1,2,1,0)") == validate({0, 1, 2, 1, 0}));
  CHECK(parse("0,1,2,1,0") == validate({0, 1, 2, 1, 0}));
  CHECK(parse(" (0, 1, 0) ") == validate({0, 1, 0}));
  CHECK(parse("(0,-1,0)") == validate({0, -1, 0}));
}

TEST_CASE("parse propagates validate errors and flags bad syntax") {
  CHECK(code_of([] { parse("(0,1,1,0)"); }) == Errc::BadStep);
  CHECK(code_of([] { parse("(1,2,1)"); }) == Errc::NonZeroStart);
  CHECK(code_of([] { parse("(0,1,0"); }) == Errc::SyntaxError);
  CHECK(code_of([] { parse("(0,,0)"); }) == Errc::SyntaxError);
  CHECK(code_of([] { parse("zebra"); }) == Errc::SyntaxError);
  CHECK(code_of([] { parse(""); }) == Errc::SyntaxError);
  CHECK(code_of([] { parse("()"); }) == Errc::SyntaxError);
}

TEST_CASE("round-trips, parity and endpoint bound over random walks") {
  std::mt19937_64 rng(0x5eed5eedULL);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const std::vector<int> steps = testsupport::random_steps(rng, n);

    const Path p = path_from_steps({steps});
    CHECK(p.positions() == prefix_sum_oracle(steps));
    CHECK(steps_from_path(p).steps == steps);
    CHECK(parse(serialize(p)) == p);

    const auto& pos = p.positions();
    for (std::size_t i = 0; i < pos.size(); ++i) {
      CHECK(((pos[i] % 2 + 2) % 2) == static_cast<int>(i % 2));
      CHECK(std::abs(pos[i]) <= static_cast<int>(i));
    }
  }
}

TEST_CASE("negation is an involution preserving validity") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const Path p = path_from_steps({testsupport::random_steps(rng, 1 + static_cast<int>(rng() % 8))});
    const Path neg = p.negated();
    CHECK(validate(neg.positions()) == neg);
    CHECK(neg.negated() == p);
  }
}

TEST_CASE("paths order lexicographically like their step sequences") {
  // steps (-1,...) sort before (+1,...); positions inherit the order
  const Path a = parse("(0,-1,0)");
  const Path b = parse("(0,1,0)");
  CHECK(a < b);
  CHECK(parse("(0,1,0,-1,-2,-1,0)") < parse("(0,1,0,-1,0,-1,0)"));
}

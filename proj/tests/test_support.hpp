#pragma once

#include <functional>
#include <random>
#include <vector>

#include "pathmorph/errors.hpp"
#include "pathmorph/path.hpp"

namespace testsupport {

/// Runs f, which must throw pathmorph::Error, and returns the error code.
template <typename F>
pathmorph::Errc code_of(F&& f) {
  try {
    f();
  } catch (const pathmorph::Error& e) {
    return e.code();
  }
  throw std::logic_error("expected a pathmorph::Error, none was thrown");
}

/// Seeded generator of random valid +-1 step sequences of length 2n.
inline std::vector<int> random_steps(std::mt19937_64& rng, int n) {
  std::vector<int> steps(static_cast<std::size_t>(2 * n));
  for (auto& s : steps) s = (rng() & 1u) ? 1 : -1;
  return steps;
}

}  // namespace testsupport

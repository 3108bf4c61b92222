#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pathmorph/bijections.hpp"
#include "pathmorph/path_sets.hpp"

namespace pathmorph {

struct Counterexample {
  std::optional<Path> input;  // absent for aggregate failures (count mismatches)
  std::string detail;
};

/// Outcome of one exhaustive check. passed is true exactly when no
/// counterexample was found; for bijectivity checks domain_size equals
/// image_size whenever passed.
struct VerifyReport {
  int n = 0;
  std::string check_name;
  Cardinality domain_size = 0;
  Cardinality image_size = 0;
  bool passed = false;
  std::vector<Counterexample> counterexamples;  // capped at counterexample_cap
};

struct VerifyOptions {
  int exhaustive_limit = kDefaultExhaustiveLimit;
  int counterexample_cap = 10;
  int workers = 1;  // hint; reports are identical for any worker count
};

/// Exhaustively certifies that `forward` maps `domain` bijectively onto
/// `codomain` at size n: every image is a member, no two inputs collide,
/// the image set equals the codomain enumeration, and the inverse map
/// returns every input.
VerifyReport check_bijection(int n, BijectionId forward, SetId domain, SetId codomain,
                             const VerifyOptions& opts = {});

/// Same sweep with injectable maps; the named overload delegates here and the
/// harness self-test corrupts `forward` to prove the sweep can fail.
using PathMap = std::function<Path(const Path&)>;
VerifyReport check_bijection_fn(int n, const PathMap& forward, const PathMap& backward,
                                SetId domain, SetId codomain, const std::string& check_name,
                                const VerifyOptions& opts = {});

/// |enumerate(n,s)| == count_formula(n,s) for every family, plus the integer
/// identity C(2n-2,n-1) - C(2n-2,n) == (2n-2)!/((n-1)!n!).
VerifyReport check_counts(int n, const VerifyOptions& opts = {});

/// Convolution of closed-form |C_k| equals closed-form |C_n| for
/// 2 <= n <= n_max; pure big-integer arithmetic, no enumeration.
VerifyReport check_catalan_identity(int n_max);

/// The marker-transport laws that make the inverses work: h = M and
/// d_i = b_i on every phi1 image; nu = tau - 1 and the descent equivalence
/// on every phi2 image (the phi2 half is vacuous at n = 1).
VerifyReport check_theorem_invariants(int n, const VerifyOptions& opts = {});

}  // namespace pathmorph

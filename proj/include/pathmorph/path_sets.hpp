#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pathmorph/path.hpp"

namespace pathmorph {

/// The eight path families. S is the full 2n-step space; the others are the
/// bridge / no-return / excursion variants connected by the two bijections.
enum class SetId { S, A, B, Aprime, Bprime, T, C, D };

inline constexpr SetId kAllSets[] = {SetId::S,      SetId::A, SetId::B, SetId::Aprime,
                                     SetId::Bprime, SetId::T, SetId::C, SetId::D};

std::string_view set_name(SetId s);
std::optional<SetId> set_from_name(std::string_view name);

/// Exact cardinalities; C(2n,n) outgrows 64 bits near n = 33, so all counting
/// is arbitrary precision.
using Cardinality = boost::multiprecision::cpp_int;

namespace numbers {
Cardinality factorial(int n);
/// Binomial coefficient by the multiplicative product; 0 when k < 0 or k > n.
Cardinality binomial(int n, int k);
/// Catalan number C(2m,m)/(m+1).
Cardinality catalan(int m);
}  // namespace numbers

/// Membership test for family s at the path's own half-length.
bool is_member(const Path& p, SetId s);

/// Number of interior even-time returns to 0: |{i in 1..n-1 : S_2i = 0}|.
/// The endpoint does not count.
int zero_touch_count(const Path& p);

/// Largest n for which the 2^2n sweep is attempted by default (2^24 paths).
inline constexpr int kDefaultExhaustiveLimit = 12;

/// Visits every member of family s at size n in lexicographic step order
/// (-1 < +1), no duplicates. Constructive generator: prunes step prefixes
/// that cannot be completed, so it never materializes non-members. Throws
/// LimitExceeded when n > limit and InvalidArgument when n < 1.
void for_each_member(int n, SetId s, const std::function<void(const Path&)>& fn,
                     int limit = kDefaultExhaustiveLimit);

/// Same output as for_each_member, but by the plain filter route: walks all
/// 2^2n step sequences and keeps those passing is_member. Independent of the
/// constructive generator; kept as its cross-check.
void for_each_member_filter(int n, SetId s, const std::function<void(const Path&)>& fn,
                            int limit = kDefaultExhaustiveLimit);

std::vector<Path> enumerate_members(int n, SetId s, int limit = kDefaultExhaustiveLimit);

/// Closed-form cardinality of family s at size n; no enumeration.
Cardinality count_formula(int n, SetId s);

/// Cardinality by actually enumerating (obeys the exhaustive limit).
Cardinality count_by_enumeration(int n, SetId s, int limit = kDefaultExhaustiveLimit);

/// Deterministic exact-uniform sampler over family s at size n.
///
/// Each draw picks a uniform rank below |s| and unranks it along the
/// lexicographic enumeration order, choosing steps by completion counts.
/// Identical seed, identical draw sequence; no enumeration table is built,
/// so any n works. Throws EmptyFamily when |s| = 0 at size n.
class Sampler {
 public:
  Sampler(int n, SetId s, std::uint64_t seed);
  Path next();

  const Cardinality& family_size() const noexcept { return total_; }

 private:
  Cardinality draw_rank();
  Path unrank(Cardinality rank) const;

  int n_;
  SetId set_;
  std::mt19937_64 rng_;
  Cardinality total_;
  // completions_[t] maps reachable sampler states at time t to the number of
  // valid completions; see path_sets.cpp.
  std::vector<std::vector<Cardinality>> completions_;
  int height_offset_;
  int state_stride_;
};

/// Single draw with a fresh generator.
Path sample(int n, SetId s, std::uint64_t seed);

}  // namespace pathmorph

#include "pathmorph/path_sets.hpp"

#include <algorithm>
#include <cctype>
#include <span>
#include <string>

namespace pathmorph {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::string_view set_name(SetId s) {
  switch (s) {
    case SetId::S: return "S";
    case SetId::A: return "A";
    case SetId::B: return "B";
    case SetId::Aprime: return "Aprime";
    case SetId::Bprime: return "Bprime";
    case SetId::T: return "T";
    case SetId::C: return "C";
    case SetId::D: return "D";
  }
  return "?";
}

std::optional<SetId> set_from_name(std::string_view name) {
  std::string key = lower(name);
  for (SetId s : kAllSets) {
    if (key == lower(set_name(s))) return s;
  }
  return std::nullopt;
}

namespace numbers {

Cardinality factorial(int n) {
  if (n < 0) raise(Errc::InvalidArgument, "factorial of negative " + std::to_string(n));
  Cardinality r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Cardinality binomial(int n, int k) {
  if (n < 0) raise(Errc::InvalidArgument, "binomial with negative n");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Cardinality r = 1;
  // r stays integral after each division: r is C(n-k+i, i) at step i.
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

Cardinality catalan(int m) {
  if (m < 0) raise(Errc::InvalidArgument, "catalan of negative " + std::to_string(m));
  return binomial(2 * m, m) / (m + 1);
}

}  // namespace numbers

namespace {

int zero_touches_raw(std::span<const int> pos) {
  int n = static_cast<int>(pos.size() / 2);
  int count = 0;
  for (int i = 1; i <= n - 1; ++i) {
    if (pos[static_cast<std::size_t>(2 * i)] == 0) ++count;
  }
  return count;
}

// Membership on a raw position buffer; shared by is_member and the filter
// enumerator so the filter never constructs non-member Paths.
bool member_raw(std::span<const int> pos, SetId s) {
  const std::size_t last = pos.size() - 1;
  switch (s) {
    case SetId::S:
      return true;
    case SetId::A:
      return pos[last] == 0;
    case SetId::Aprime:
      return pos[last] == 0 && pos[1] > 0;
    case SetId::B:
      for (std::size_t i = 1; i <= last; ++i)
        if (pos[i] == 0) return false;
      return true;
    case SetId::Bprime:
      for (std::size_t i = 1; i <= last; ++i)
        if (pos[i] <= 0) return false;
      return true;
    case SetId::T:
      if (pos[last] != 0) return false;
      for (std::size_t i = 1; i < last; ++i)
        if (pos[i] < 0) return false;
      return true;
    case SetId::C:
      return member_raw(pos, SetId::T) && zero_touches_raw(pos) == 0;
    case SetId::D:
      return member_raw(pos, SetId::T) && zero_touches_raw(pos) == 1;
  }
  return false;
}

// True when a prefix of t2 steps ending at height h2 can still extend to a
// member of s (L = 2n steps total). Only prunes provably dead prefixes, so
// the constructive enumerator yields exactly the filter's output.
bool step_allowed(SetId s, int L, int t2, int h2) {
  const int remaining = L - t2;
  switch (s) {
    case SetId::S:
      return true;
    case SetId::A:
      return std::abs(h2) <= remaining;
    case SetId::Aprime:
      if (t2 == 1 && h2 != 1) return false;
      return std::abs(h2) <= remaining;
    case SetId::B:
      return h2 != 0;
    case SetId::Bprime:
      return h2 >= 1;
    case SetId::T:
    case SetId::D:
      return h2 >= 0 && h2 <= remaining;
    case SetId::C:
      if (t2 < L && h2 < 1) return false;
      return h2 >= 0 && h2 <= remaining;
  }
  return false;
}

bool accept_final(SetId s, int h, int ztouch) {
  switch (s) {
    case SetId::S:
    case SetId::B:
    case SetId::Bprime:
      return true;
    case SetId::A:
    case SetId::Aprime:
    case SetId::T:
    case SetId::C:
      return h == 0;
    case SetId::D:
      return h == 0 && ztouch == 1;
  }
  return false;
}

void check_enumeration_args(int n, int limit) {
  if (n < 1) raise(Errc::InvalidArgument, "n must be >= 1, got " + std::to_string(n));
  if (n > limit) {
    raise(Errc::LimitExceeded, "n = " + std::to_string(n) + " exceeds exhaustive limit " +
                                   std::to_string(limit) + " (raise the limit to override)");
  }
  // 4^n iterations are unreachable long before the step codes stop fitting
  // in 64 bits; refuse rather than overflow.
  if (n > 30) {
    raise(Errc::LimitExceeded, "exhaustive enumeration is not supported above n = 30");
  }
}

struct Dfs {
  SetId set;
  int L;
  const std::function<void(const Path&)>& fn;
  std::vector<int> pos;

  void run(int t, int h, int ztouch) {
    if (t == L) {
      if (accept_final(set, h, ztouch)) fn(Path::from_positions(pos));
      return;
    }
    for (int step : {-1, +1}) {
      const int t2 = t + 1;
      const int h2 = h + step;
      if (!step_allowed(set, L, t2, h2)) continue;
      int z2 = ztouch;
      if (h2 == 0 && t2 % 2 == 0 && t2 < L) ++z2;
      if (set == SetId::D && z2 > 1) continue;
      pos[static_cast<std::size_t>(t2)] = h2;
      run(t2, h2, z2);
    }
  }
};

}  // namespace

bool is_member(const Path& p, SetId s) { return member_raw(p.positions(), s); }

int zero_touch_count(const Path& p) { return zero_touches_raw(p.positions()); }

void for_each_member(int n, SetId s, const std::function<void(const Path&)>& fn, int limit) {
  check_enumeration_args(n, limit);
  Dfs dfs{s, 2 * n, fn, std::vector<int>(static_cast<std::size_t>(2 * n + 1), 0)};
  dfs.run(0, 0, 0);
}

void for_each_member_filter(int n, SetId s, const std::function<void(const Path&)>& fn, int limit) {
  check_enumeration_args(n, limit);
  const int L = 2 * n;
  std::vector<int> pos(static_cast<std::size_t>(L + 1), 0);
  // Ascending code order with the first step in the top bit is exactly
  // lexicographic order on steps under -1 < +1.
  const std::uint64_t end = std::uint64_t{1} << L;
  for (std::uint64_t code = 0; code < end; ++code) {
    int h = 0;
    for (int i = 0; i < L; ++i) {
      h += (code >> (L - 1 - i)) & 1u ? 1 : -1;
      pos[static_cast<std::size_t>(i + 1)] = h;
    }
    if (member_raw(pos, s)) fn(Path::from_positions(pos));
  }
}

std::vector<Path> enumerate_members(int n, SetId s, int limit) {
  std::vector<Path> out;
  for_each_member(n, s, [&](const Path& p) { out.push_back(p); }, limit);
  return out;
}

Cardinality count_formula(int n, SetId s) {
  if (n < 1) raise(Errc::InvalidArgument, "n must be >= 1, got " + std::to_string(n));
  switch (s) {
    case SetId::S:
      return Cardinality(1) << (2 * n);
    case SetId::A:
    case SetId::B:
      return numbers::binomial(2 * n, n);
    case SetId::Aprime:
    case SetId::Bprime:
      return numbers::binomial(2 * n, n) / 2;
    case SetId::T:
      return numbers::catalan(n);
    case SetId::C:
      // (2n-2)! / ((n-1)! n!), the (n-1)th Catalan number.
      return numbers::factorial(2 * n - 2) / (numbers::factorial(n - 1) * numbers::factorial(n));
    case SetId::D: {
      // Convolution over the first interior return; 0 at n = 1.
      Cardinality sum = 0;
      for (int k = 1; k <= n - 1; ++k) {
        sum += count_formula(k, SetId::C) * count_formula(n - k, SetId::C);
      }
      return sum;
    }
  }
  raise(Errc::InvalidArgument, "unknown set id");
}

Cardinality count_by_enumeration(int n, SetId s, int limit) {
  Cardinality count = 0;
  for_each_member(n, s, [&](const Path&) { ++count; }, limit);
  return count;
}

// ---------------------------------------------------------------------------
// Sampler

namespace {

// D needs a zero-touch flag in the DP state; everyone else just the height.
int state_stride_for(SetId s) { return s == SetId::D ? 2 : 1; }

}  // namespace

Sampler::Sampler(int n, SetId s, std::uint64_t seed)
    : n_(n), set_(s), rng_(seed), height_offset_(2 * n), state_stride_(state_stride_for(s)) {
  if (n < 1) raise(Errc::InvalidArgument, "n must be >= 1, got " + std::to_string(n));
  const int L = 2 * n;
  if (set_ == SetId::S) {
    total_ = Cardinality(1) << L;
    return;  // ranks decode directly to step bits, no table needed
  }
  const std::size_t states = static_cast<std::size_t>(2 * L + 1) * state_stride_;
  completions_.assign(static_cast<std::size_t>(L + 1), std::vector<Cardinality>(states, 0));
  auto idx = [&](int h, int z) {
    return static_cast<std::size_t>(h + height_offset_) * state_stride_ + static_cast<std::size_t>(z);
  };
  for (int h = -L; h <= L; ++h) {
    for (int z = 0; z < state_stride_; ++z) {
      completions_[static_cast<std::size_t>(L)][idx(h, z)] = accept_final(set_, h, z) ? 1 : 0;
    }
  }
  for (int t = L - 1; t >= 0; --t) {
    auto& row = completions_[static_cast<std::size_t>(t)];
    const auto& next = completions_[static_cast<std::size_t>(t + 1)];
    for (int h = -(t); h <= t; ++h) {
      for (int z = 0; z < state_stride_; ++z) {
        Cardinality total = 0;
        for (int step : {-1, +1}) {
          const int t2 = t + 1;
          const int h2 = h + step;
          if (!step_allowed(set_, L, t2, h2)) continue;
          int z2 = z;
          if (set_ == SetId::D) {
            if (h2 == 0 && t2 % 2 == 0 && t2 < L) ++z2;
            if (z2 > 1) continue;
          }
          total += next[idx(h2, z2)];
        }
        row[idx(h, z)] = total;
      }
    }
  }
  total_ = completions_[0][idx(0, 0)];
  if (total_ == 0) {
    raise(Errc::EmptyFamily,
          std::string(set_name(s)) + " is empty at n = " + std::to_string(n));
  }
}

Cardinality Sampler::draw_rank() {
  // Uniform value below total_ via fixed-width rejection; deterministic for a
  // given seed independent of platform.
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(total_)) + 1;
  const unsigned words = (bits + 63) / 64;
  const Cardinality span = Cardinality(1) << (64 * words);
  const Cardinality cutoff = span - span % total_;
  while (true) {
    Cardinality v = 0;
    for (unsigned w = 0; w < words; ++w) {
      v <<= 64;
      v += Cardinality(rng_());
    }
    if (v < cutoff) return v % total_;
  }
}

Path Sampler::unrank(Cardinality rank) const {
  const int L = 2 * n_;
  std::vector<int> pos(static_cast<std::size_t>(L + 1), 0);
  if (set_ == SetId::S) {
    for (int i = 0; i < L; ++i) {
      const bool up = boost::multiprecision::bit_test(rank, static_cast<unsigned>(L - 1 - i));
      pos[static_cast<std::size_t>(i + 1)] = pos[static_cast<std::size_t>(i)] + (up ? 1 : -1);
    }
    return Path::from_positions(std::move(pos));
  }
  auto idx = [&](int h, int z) {
    return static_cast<std::size_t>(h + height_offset_) * state_stride_ + static_cast<std::size_t>(z);
  };
  int h = 0;
  int z = 0;
  for (int t = 0; t < L; ++t) {
    bool placed = false;
    for (int step : {-1, +1}) {
      const int t2 = t + 1;
      const int h2 = h + step;
      if (!step_allowed(set_, L, t2, h2)) continue;
      int z2 = z;
      if (set_ == SetId::D) {
        if (h2 == 0 && t2 % 2 == 0 && t2 < L) ++z2;
        if (z2 > 1) continue;
      }
      const Cardinality& below = completions_[static_cast<std::size_t>(t2)][idx(h2, z2)];
      if (rank < below) {
        pos[static_cast<std::size_t>(t2)] = h2;
        h = h2;
        z = z2;
        placed = true;
        break;
      }
      rank -= below;
    }
    if (!placed) raise(Errc::InvalidArgument, "unrank walked off the completion table");
  }
  return Path::from_positions(std::move(pos));
}

Path Sampler::next() { return unrank(draw_rank()); }

Path sample(int n, SetId s, std::uint64_t seed) { return Sampler(n, s, seed).next(); }

}  // namespace pathmorph

#include "pathmorph/bijections.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace pathmorph {

namespace {

[[noreturn]] void not_in_domain(std::string_view map, SetId wanted, const Path& p) {
  raise(Errc::NotInDomain, std::string(map) + " expects a path in " +
                               std::string(set_name(wanted)) + ", got " + serialize(p));
}

// Internal consistency failures on valid domain members are bugs, not input
// errors; keep them distinguishable from pathmorph::Error.
void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("decomposition invariant broken: ") + what);
}

}  // namespace

namespace {

// One forward pass suffices: the first entry into level k+1 steps up from
// level k, so a_k is the global first-visit time of k and b_k = a_{k+1} - 1.
// The exhaustive tests pin this against the literal min/max definitions.
ValleyDecomposition valleys_unchecked(const Path& p) {
  const auto& s = p.positions();
  const int L = p.num_steps();

  ValleyDecomposition out;
  out.max_height = p.max_value();
  const int M = out.max_height;
  out.a.assign(static_cast<std::size_t>(M), 0);
  out.b.assign(static_cast<std::size_t>(M), 0);
  out.b[0] = 0;

  int reached = 0;
  for (int i = 1; i <= L && reached < M; ++i) {
    if (s[static_cast<std::size_t>(i)] == reached + 1) {
      out.a[static_cast<std::size_t>(reached)] = i;
      ++reached;
    }
  }
  require(reached == M, "maximum level never reached");
  require(out.a[0] == 1, "a_1 != 1");
  for (int k = 1; k <= M - 1; ++k) {
    out.b[static_cast<std::size_t>(k)] = out.a[static_cast<std::size_t>(k)] - 1;
    require(s[static_cast<std::size_t>(out.b[static_cast<std::size_t>(k)])] == k, "S_{b_k} != k");
    require(out.b[static_cast<std::size_t>(k)] >= out.a[static_cast<std::size_t>(k - 1)],
            "b_k < a_k");
  }
  return out;
}

// Mirror image of the valley pass: d_k is the global last-visit time of
// level k (the path never returns below k afterwards), c_k = d_{k-1} + 1.
AscentDecomposition ascents_unchecked(const Path& q) {
  const auto& t = q.positions();
  const int L = q.num_steps();

  AscentDecomposition out;
  require(q.terminal() % 2 == 0, "odd terminal value in Bprime");
  const int h = q.terminal() / 2;
  out.half_terminal = h;
  out.c.assign(static_cast<std::size_t>(h), 0);
  out.d.assign(static_cast<std::size_t>(h) + 1, 0);

  int pending = h;
  for (int i = L; i >= 1 && pending >= 1; --i) {
    if (t[static_cast<std::size_t>(i)] == pending) {
      out.d[static_cast<std::size_t>(pending)] = i;
      --pending;
    }
  }
  require(pending == 0, "some level below h is never visited");
  for (int k = 1; k <= h; ++k) {
    out.c[static_cast<std::size_t>(k - 1)] = out.d[static_cast<std::size_t>(k - 1)] + 1;
    require(t[static_cast<std::size_t>(out.c[static_cast<std::size_t>(k - 1)])] == k,
            "T_{c_k} != k");
    require(out.c[static_cast<std::size_t>(k - 1)] <= out.d[static_cast<std::size_t>(k)],
            "c_k > d_k");
  }
  return out;
}

}  // namespace

ValleyDecomposition decompose_valleys(const Path& p) {
  if (!is_member(p, SetId::Aprime)) not_in_domain("decompose_valleys", SetId::Aprime, p);
  return valleys_unchecked(p);
}

AscentDecomposition decompose_ascents(const Path& q) {
  if (!is_member(q, SetId::Bprime)) not_in_domain("decompose_ascents", SetId::Bprime, q);
  return ascents_unchecked(q);
}

namespace detail {

Path phi1_unchecked(const Path& p) {
  const ValleyDecomposition vd = valleys_unchecked(p);
  const auto& s = p.positions();
  const int L = p.num_steps();
  const int M = vd.max_height;

  std::vector<int> out(s.size(), 0);
  for (int l = 1; l <= L; ++l) {
    // Interval containing l: the last a_m <= l (the intervals tile [1, 2n]).
    auto it = std::upper_bound(vd.a.begin(), vd.a.end(), l);
    const int m = static_cast<int>(it - vd.a.begin());  // 1-based level index
    assert(m >= 1);
    const int height = (m == M) ? M : m;
    assert(m == M || l <= vd.b[static_cast<std::size_t>(m)]);
    out[static_cast<std::size_t>(l)] = 2 * height - s[static_cast<std::size_t>(l)];
  }
  return Path::from_positions(std::move(out));
}

Path psi1_unchecked(const Path& q) {
  const AscentDecomposition ad = ascents_unchecked(q);
  const auto& t = q.positions();
  const int L = q.num_steps();
  const int h = ad.half_terminal;

  std::vector<int> out(t.size(), 0);
  for (int l = 1; l <= L; ++l) {
    auto it = std::upper_bound(ad.c.begin(), ad.c.end(), l);
    const int m = static_cast<int>(it - ad.c.begin());
    assert(m >= 1);
    const int height = (m == h) ? h : m;
    assert(m == h || l <= ad.d[static_cast<std::size_t>(m)]);
    out[static_cast<std::size_t>(l)] = 2 * height - t[static_cast<std::size_t>(l)];
  }
  return Path::from_positions(std::move(out));
}

int tau_unchecked(const Path& p) {
  const auto& s = p.positions();
  for (std::size_t k = 2; k < s.size(); ++k) {
    if (s[k] == 1) return static_cast<int>(k);
  }
  throw std::logic_error("tau undefined: path never revisits 1");
}

int nu_unchecked(const Path& q) {
  const auto& t = q.positions();
  for (std::size_t k = 1; k < t.size(); ++k) {
    if (t[k] == 0) return static_cast<int>(k);
  }
  throw std::logic_error("nu undefined: path never returns to 0");
}

Path phi2_unchecked(const Path& p) {
  const int tau = tau_unchecked(p);
  const auto& s = p.positions();
  std::vector<int> out(s);
  for (int l = 2; l < tau; ++l) {
    if (s[static_cast<std::size_t>(l + 1)] == s[static_cast<std::size_t>(l)] - 1) {
      out[static_cast<std::size_t>(l)] -= 2;
    }
  }
  return Path::from_positions(std::move(out));
}

Path psi2_unchecked(const Path& q) {
  const int nu = nu_unchecked(q);
  const auto& t = q.positions();
  std::vector<int> out(t);
  for (int l = 2; l <= nu; ++l) {
    if (t[static_cast<std::size_t>(l)] == t[static_cast<std::size_t>(l - 1)] - 1) {
      out[static_cast<std::size_t>(l)] += 2;
    }
  }
  return Path::from_positions(std::move(out));
}

Path apply_unchecked(BijectionId id, const Path& p) {
  switch (id) {
    case BijectionId::Phi1: return phi1_unchecked(p);
    case BijectionId::Psi1: return psi1_unchecked(p);
    case BijectionId::Phi1Full:
      return p.at(1) > 0 ? phi1_unchecked(p) : phi1_unchecked(p.negated()).negated();
    case BijectionId::Psi1Full:
      return p.at(1) > 0 ? psi1_unchecked(p) : psi1_unchecked(p.negated()).negated();
    case BijectionId::Phi2: return phi2_unchecked(p);
    case BijectionId::Psi2: return psi2_unchecked(p);
  }
  raise(Errc::InvalidArgument, "unknown bijection id");
}

}  // namespace detail

StopTimes stop_times(const Path& p) {
  StopTimes st;
  if (p.half_length() >= 2 && is_member(p, SetId::C)) st.tau = detail::tau_unchecked(p);
  if (is_member(p, SetId::D)) st.nu = detail::nu_unchecked(p);
  return st;
}

Path phi1(const Path& p) {
  if (!is_member(p, SetId::Aprime)) not_in_domain("phi1", SetId::Aprime, p);
  return detail::phi1_unchecked(p);
}

Path psi1(const Path& q) {
  if (!is_member(q, SetId::Bprime)) not_in_domain("psi1", SetId::Bprime, q);
  return detail::psi1_unchecked(q);
}

Path phi1_full(const Path& p) {
  if (!is_member(p, SetId::A)) not_in_domain("phi1_full", SetId::A, p);
  return detail::apply_unchecked(BijectionId::Phi1Full, p);
}

Path psi1_full(const Path& q) {
  if (!is_member(q, SetId::B)) not_in_domain("psi1_full", SetId::B, q);
  return detail::apply_unchecked(BijectionId::Psi1Full, q);
}

Path phi2(const Path& p) {
  if (!is_member(p, SetId::C)) not_in_domain("phi2", SetId::C, p);
  if (p.half_length() < 2) {
    raise(Errc::NTooSmall, "phi2 needs n >= 2 (tau does not exist at n = " +
                               std::to_string(p.half_length()) + ")");
  }
  return detail::phi2_unchecked(p);
}

Path psi2(const Path& q) {
  if (!is_member(q, SetId::D)) not_in_domain("psi2", SetId::D, q);
  return detail::psi2_unchecked(q);
}

std::string_view bijection_name(BijectionId id) {
  switch (id) {
    case BijectionId::Phi1: return "phi1";
    case BijectionId::Psi1: return "psi1";
    case BijectionId::Phi1Full: return "phi1full";
    case BijectionId::Psi1Full: return "psi1full";
    case BijectionId::Phi2: return "phi2";
    case BijectionId::Psi2: return "psi2";
  }
  return "?";
}

std::optional<BijectionId> bijection_from_name(std::string_view name) {
  for (BijectionId id : kAllBijections) {
    if (name == bijection_name(id)) return id;
  }
  return std::nullopt;
}

BijectionId inverse_of(BijectionId id) {
  switch (id) {
    case BijectionId::Phi1: return BijectionId::Psi1;
    case BijectionId::Psi1: return BijectionId::Phi1;
    case BijectionId::Phi1Full: return BijectionId::Psi1Full;
    case BijectionId::Psi1Full: return BijectionId::Phi1Full;
    case BijectionId::Phi2: return BijectionId::Psi2;
    case BijectionId::Psi2: return BijectionId::Phi2;
  }
  raise(Errc::InvalidArgument, "unknown bijection id");
}

SetId domain_of(BijectionId id) {
  switch (id) {
    case BijectionId::Phi1: return SetId::Aprime;
    case BijectionId::Psi1: return SetId::Bprime;
    case BijectionId::Phi1Full: return SetId::A;
    case BijectionId::Psi1Full: return SetId::B;
    case BijectionId::Phi2: return SetId::C;
    case BijectionId::Psi2: return SetId::D;
  }
  raise(Errc::InvalidArgument, "unknown bijection id");
}

SetId codomain_of(BijectionId id) { return domain_of(inverse_of(id)); }

Path apply_bijection(BijectionId id, const Path& p) {
  switch (id) {
    case BijectionId::Phi1: return phi1(p);
    case BijectionId::Psi1: return psi1(p);
    case BijectionId::Phi1Full: return phi1_full(p);
    case BijectionId::Psi1Full: return psi1_full(p);
    case BijectionId::Phi2: return phi2(p);
    case BijectionId::Psi2: return psi2(p);
  }
  raise(Errc::InvalidArgument, "unknown bijection id");
}

}  // namespace pathmorph

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "pathmorph/path.hpp"
#include "pathmorph/path_sets.hpp"

namespace pathmorph {

/// Valley markers of a path in Aprime. The time axis [1, 2n] splits into
/// [a_1,b_1] ... [a_{M-1},b_{M-1}] [a_M, 2n]; each [a_k,b_k] is a sub-level
/// excursion with S_{a_k} = S_{b_k} = k.
struct ValleyDecomposition {
  int max_height = 0;        // M, the path maximum
  std::vector<int> a;        // a[k-1] = a_k for k = 1..M (first entries)
  std::vector<int> b;        // b[k]   = b_k for k = 0..M-1, b_0 = 0 (last visits)
};

/// Ascent markers of a path in Bprime, mirroring the valley markers: h is
/// half the terminal height, c_k/d_k the first/last visits to level k.
struct AscentDecomposition {
  int half_terminal = 0;     // h = T_2n / 2
  std::vector<int> c;        // c[k-1] = c_k for k = 1..h
  std::vector<int> d;        // d[k]   = d_k for k = 0..h, d_0 = 0
};

/// First-passage markers driving the second bijection.
/// tau is present for a C path at n >= 2: min{k>1 : S_k = 1}, 2 < tau < 2n.
/// nu is present for a D path: min{k>0 : T_k = 0}, 1 < nu < 2n-1.
struct StopTimes {
  std::optional<int> tau;
  std::optional<int> nu;
};

/// Throws NotInDomain unless p is in Aprime.
ValleyDecomposition decompose_valleys(const Path& p);

/// Throws NotInDomain unless q is in Bprime.
AscentDecomposition decompose_ascents(const Path& q);

/// tau when p is a C path of half-length >= 2, nu when p is a D path;
/// both fields empty otherwise.
StopTimes stop_times(const Path& p);

/// The valley-flip map Aprime -> Bprime and its inverse.
Path phi1(const Path& p);
Path psi1(const Path& q);

/// Sign-equivariant extensions A -> B and back: paths with a negative first
/// step are negated, mapped, and negated again.
Path phi1_full(const Path& p);
Path psi1_full(const Path& q);

/// The first-return drop map C -> D and its inverse. Throw NTooSmall at
/// n < 2 (tau does not exist), NotInDomain otherwise when membership fails.
Path phi2(const Path& p);
Path psi2(const Path& q);

enum class BijectionId { Phi1, Psi1, Phi1Full, Psi1Full, Phi2, Psi2 };

inline constexpr BijectionId kAllBijections[] = {BijectionId::Phi1,     BijectionId::Psi1,
                                                 BijectionId::Phi1Full, BijectionId::Psi1Full,
                                                 BijectionId::Phi2,     BijectionId::Psi2};

std::string_view bijection_name(BijectionId id);  // "phi1", "psi1", "phi1full", ...
std::optional<BijectionId> bijection_from_name(std::string_view name);
BijectionId inverse_of(BijectionId id);
SetId domain_of(BijectionId id);
SetId codomain_of(BijectionId id);
Path apply_bijection(BijectionId id, const Path& p);

namespace detail {
// Unchecked variants for the exhaustive verifier, which enumerates members
// directly and so already guarantees the domain precondition. Everything
// else goes through the checked entry points.
Path phi1_unchecked(const Path& p);
Path psi1_unchecked(const Path& q);
Path phi2_unchecked(const Path& p);
Path psi2_unchecked(const Path& q);
Path apply_unchecked(BijectionId id, const Path& p);
int tau_unchecked(const Path& p);
int nu_unchecked(const Path& q);
}  // namespace detail

}  // namespace pathmorph

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "pathmorph/verify.hpp"
#include "test_support.hpp"

using namespace pathmorph;
using testsupport::code_of;

namespace {

std::string report_digest(const VerifyReport& r) {
  std::ostringstream os;
  os << r.check_name << "|n=" << r.n << "|d=" << r.domain_size << "|i=" << r.image_size
     << "|passed=" << r.passed;
  for (const auto& c : r.counterexamples) {
    os << "|cex=" << (c.input ? serialize(*c.input) : "-") << ";" << c.detail;
  }
  return os.str();
}

}  // namespace

TEST_CASE("bijection checks pass on the published sizes") {
  {
    const VerifyReport r = check_bijection(3, BijectionId::Phi1, SetId::Aprime, SetId::Bprime);
    CHECK(r.passed);
    CHECK(r.domain_size == 10);
    CHECK(r.image_size == 10);
    CHECK(r.counterexamples.empty());
  }
  {
    const VerifyReport r = check_bijection(4, BijectionId::Phi2, SetId::C, SetId::D);
    CHECK(r.passed);
    CHECK(r.domain_size == 5);
    CHECK(r.image_size == 5);
  }
  {
    const VerifyReport r = check_bijection(1, BijectionId::Phi1, SetId::Aprime, SetId::Bprime);
    CHECK(r.passed);
    CHECK(r.domain_size == 1);
    CHECK(r.image_size == 1);
  }
  {
    const VerifyReport r = check_bijection(5, BijectionId::Phi1Full, SetId::A, SetId::B);
    CHECK(r.passed);
    CHECK(r.domain_size == numbers::binomial(10, 5));
  }
}

TEST_CASE("count checks match the published table") {
  {
    const VerifyReport r = check_counts(3);
    CHECK(r.passed);
    // S=64 A=20 B=20 A'=10 B'=10 T=5 C=2 D=2
    CHECK(r.domain_size == 133);
    CHECK(r.image_size == 133);
  }
  {
    const VerifyReport r = check_counts(1);
    CHECK(r.passed);
    // S=4 A=2 B=2 A'=1 B'=1 T=1 C=1 D=0
    CHECK(r.domain_size == 12);
  }
  {
    const VerifyReport r = check_counts(4);
    CHECK(r.passed);
  }
}

TEST_CASE("catalan identity check") {
  CHECK(check_catalan_identity(4).passed);
  const VerifyReport r = check_catalan_identity(30);
  CHECK(r.passed);
  CHECK(r.domain_size == 29);
  CHECK(code_of([] { check_catalan_identity(1); }) == Errc::InvalidArgument);
}

TEST_CASE("theorem invariant checks") {
  for (int n = 1; n <= 6; ++n) {
    const VerifyReport r = check_theorem_invariants(n);
    CHECK(r.passed);
    Cardinality expected = count_formula(n, SetId::Aprime);
    if (n >= 2) expected += count_formula(n, SetId::C);
    CHECK(r.domain_size == expected);
  }
}

TEST_CASE("limit guards the sweeps") {
  VerifyOptions opts;
  opts.exhaustive_limit = 2;
  CHECK(code_of([&] { check_bijection(3, BijectionId::Phi1, SetId::Aprime, SetId::Bprime, opts); }) ==
        Errc::LimitExceeded);
  CHECK(code_of([&] { check_counts(3, opts); }) == Errc::LimitExceeded);
}

TEST_CASE("mutation self-test: one corrupted image flips the verdict") {
  const auto domain = enumerate_members(3, SetId::Aprime);
  std::mt19937_64 rng(987654321);
  const Path victim = domain[rng() % domain.size()];
  const Path decoy = domain.front() == victim ? domain.back() : domain.front();

  PathMap corrupted = [&](const Path& p) -> Path {
    if (p == victim) return phi1(decoy);  // duplicate image, broken roundtrip
    return phi1(p);
  };
  PathMap backward = [](const Path& q) { return psi1(q); };

  const VerifyReport r =
      check_bijection_fn(3, corrupted, backward, SetId::Aprime, SetId::Bprime, "mutated-phi1");
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.counterexamples.empty());
  CHECK(r.domain_size == 10);

  // sanity: the uncorrupted map still passes through the same entry point
  PathMap clean = [](const Path& p) { return phi1(p); };
  CHECK(check_bijection_fn(3, clean, backward, SetId::Aprime, SetId::Bprime, "phi1").passed);
}

TEST_CASE("reports are identical for any worker count") {
  for (int workers : {1, 2, 3, 8}) {
    VerifyOptions opts;
    opts.workers = workers;
    const VerifyReport r = check_bijection(5, BijectionId::Phi1, SetId::Aprime, SetId::Bprime, opts);
    CHECK(report_digest(r) ==
          report_digest(check_bijection(5, BijectionId::Phi1, SetId::Aprime, SetId::Bprime)));
  }

  // also on a failing sweep, where counterexample order could drift
  PathMap identity = [](const Path& p) { return p; };
  VerifyOptions base;
  base.counterexample_cap = 7;
  const std::string expected = report_digest(
      check_bijection_fn(3, identity, identity, SetId::Aprime, SetId::Bprime, "identity", base));
  for (int workers : {2, 5}) {
    VerifyOptions opts;
    opts.counterexample_cap = 7;
    opts.workers = workers;
    const VerifyReport r =
        check_bijection_fn(3, identity, identity, SetId::Aprime, SetId::Bprime, "identity", opts);
    CHECK(report_digest(r) == expected);
    CHECK_FALSE(r.passed);
    CHECK(r.counterexamples.size() == 7);  // cap respected
  }
}

TEST_CASE("a throwing map is reported, not propagated") {
  PathMap thrower = [](const Path& p) -> Path {
    if (p == parse("(0,1,0,1,0,1,0)")) raise(Errc::InvalidArgument, "synthetic failure");
    return phi1(p);
  };
  PathMap backward = [](const Path& q) { return psi1(q); };
  const VerifyReport r =
      check_bijection_fn(3, thrower, backward, SetId::Aprime, SetId::Bprime, "throwing");
  CHECK_FALSE(r.passed);
  REQUIRE(!r.counterexamples.empty());
  bool found = false;
  for (const auto& c : r.counterexamples) {
    if (c.detail.find("synthetic failure") != std::string::npos) found = true;
  }
  CHECK(found);
}

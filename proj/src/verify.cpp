#include "pathmorph/verify.hpp"

#include <algorithm>
#include <thread>

namespace pathmorph {

namespace {

void add_cex(std::vector<Counterexample>& sink, std::optional<Path> input, std::string detail) {
  sink.push_back(Counterexample{std::move(input), std::move(detail)});
}

void cap_counterexamples(VerifyReport& report, int cap) {
  if (cap >= 0 && report.counterexamples.size() > static_cast<std::size_t>(cap)) {
    report.counterexamples.resize(static_cast<std::size_t>(cap));
  }
}

}  // namespace

VerifyReport check_bijection_fn(int n, const PathMap& forward, const PathMap& backward,
                                SetId domain, SetId codomain, const std::string& check_name,
                                const VerifyOptions& opts) {
  VerifyReport report;
  report.n = n;
  report.check_name = check_name;

  const std::vector<Path> domain_paths = enumerate_members(n, domain, opts.exhaustive_limit);
  const std::size_t total = domain_paths.size();
  report.domain_size = total;

  struct ChunkResult {
    std::vector<std::pair<Path, std::size_t>> images;  // (image, domain index)
    std::vector<Counterexample> cexes;
  };

  const int workers = std::max(1, opts.workers);
  const std::size_t chunk = total == 0 ? 1 : (total + workers - 1) / workers;
  std::vector<ChunkResult> results(static_cast<std::size_t>(workers));

  auto run_chunk = [&](std::size_t begin, std::size_t end, ChunkResult& out) {
    for (std::size_t i = begin; i < end; ++i) {
      const Path& p = domain_paths[i];
      try {
        Path q = forward(p);
        if (!is_member(q, codomain)) {
          add_cex(out.cexes, p,
                  "image " + serialize(q) + " is not in " + std::string(set_name(codomain)));
        }
        Path back = backward(q);
        if (back != p) {
          add_cex(out.cexes, p, "backward(forward(p)) = " + serialize(back) + " != p");
        }
        out.images.emplace_back(std::move(q), i);
      } catch (const std::exception& e) {
        add_cex(out.cexes, p, std::string("map threw: ") + e.what());
      }
    }
  };

  if (workers == 1) {
    run_chunk(0, total, results[0]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(total, static_cast<std::size_t>(w) * chunk);
      const std::size_t end = std::min(total, begin + chunk);
      pool.emplace_back(run_chunk, begin, end, std::ref(results[static_cast<std::size_t>(w)]));
    }
    for (auto& t : pool) t.join();
  }

  // Merge in chunk order so the report is identical for any worker count.
  std::vector<std::pair<Path, std::size_t>> images;
  images.reserve(total);
  for (auto& r : results) {
    for (auto& cex : r.cexes) report.counterexamples.push_back(std::move(cex));
    for (auto& im : r.images) images.push_back(std::move(im));
  }

  // Injectivity by sorted duplicate scan; counterexamples come out in image
  // order, reproducibly.
  std::sort(images.begin(), images.end());
  for (std::size_t i = 1; i < images.size(); ++i) {
    if (images[i].first == images[i - 1].first) {
      add_cex(report.counterexamples, domain_paths[images[i].second],
              "collides with " + serialize(domain_paths[images[i - 1].second]) +
                  " on image " + serialize(images[i].first));
    }
  }

  std::size_t distinct = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i == 0 || images[i].first != images[i - 1].first) ++distinct;
  }
  report.image_size = distinct;

  // Image set must be exactly the codomain enumeration. Both sides stream in
  // lex order; images outside the codomain were flagged by the membership
  // check above, so only omissions remain to be reported.
  {
    std::size_t pos = 0;
    for_each_member(
        n, codomain,
        [&](const Path& expected) {
          while (pos < images.size() && images[pos].first < expected) ++pos;
          if (pos < images.size() && images[pos].first == expected) {
            while (pos < images.size() && images[pos].first == expected) ++pos;
          } else {
            add_cex(report.counterexamples, std::nullopt,
                    "codomain member " + serialize(expected) + " is never hit");
          }
        },
        opts.exhaustive_limit);
  }

  report.passed = report.counterexamples.empty();
  cap_counterexamples(report, opts.counterexample_cap);
  return report;
}

VerifyReport check_bijection(int n, BijectionId forward, SetId domain, SetId codomain,
                             const VerifyOptions& opts) {
  if ((forward == BijectionId::Phi2 || forward == BijectionId::Psi2) && n < 2) {
    raise(Errc::NTooSmall, "the C<->D bijection is defined for n >= 2");
  }
  const BijectionId backward = inverse_of(forward);
  const std::string name = std::string(bijection_name(forward)) + ":" +
                           std::string(set_name(domain)) + "->" +
                           std::string(set_name(codomain));
  return check_bijection_fn(
      n, [forward](const Path& p) { return detail::apply_unchecked(forward, p); },
      [backward](const Path& q) { return detail::apply_unchecked(backward, q); }, domain, codomain,
      name, opts);
}

VerifyReport check_counts(int n, const VerifyOptions& opts) {
  VerifyReport report;
  report.n = n;
  report.check_name = "counts";

  Cardinality enumerated_total = 0;
  Cardinality formula_total = 0;
  for (SetId s : kAllSets) {
    const Cardinality enumerated = count_by_enumeration(n, s, opts.exhaustive_limit);
    const Cardinality formula = count_formula(n, s);
    enumerated_total += enumerated;
    formula_total += formula;
    if (enumerated != formula) {
      add_cex(report.counterexamples, std::nullopt,
              "set " + std::string(set_name(s)) + ": enumerated " + enumerated.str() +
                  " != formula " + formula.str());
    }
  }

  // Reflection-principle identity, as integers.
  const Cardinality lhs =
      numbers::binomial(2 * n - 2, n - 1) - numbers::binomial(2 * n - 2, n);
  const Cardinality rhs =
      numbers::factorial(2 * n - 2) / (numbers::factorial(n - 1) * numbers::factorial(n));
  if (lhs != rhs) {
    add_cex(report.counterexamples, std::nullopt,
            "C(2n-2,n-1) - C(2n-2,n) = " + lhs.str() + " != (2n-2)!/((n-1)!n!) = " + rhs.str());
  }

  report.domain_size = enumerated_total;
  report.image_size = formula_total;
  report.passed = report.counterexamples.empty();
  cap_counterexamples(report, opts.counterexample_cap);
  return report;
}

VerifyReport check_catalan_identity(int n_max) {
  if (n_max < 2) raise(Errc::InvalidArgument, "catalan identity check needs n_max >= 2");
  VerifyReport report;
  report.n = n_max;
  report.check_name = "catalan";

  for (int n = 2; n <= n_max; ++n) {
    const Cardinality convolution = count_formula(n, SetId::D);
    const Cardinality closed_form = count_formula(n, SetId::C);
    if (convolution != closed_form) {
      add_cex(report.counterexamples, std::nullopt,
              "n = " + std::to_string(n) + ": convolution " + convolution.str() +
                  " != closed form " + closed_form.str());
    }
  }

  report.domain_size = n_max - 1;
  report.image_size = n_max - 1;
  report.passed = report.counterexamples.empty();
  cap_counterexamples(report, 10);
  return report;
}

VerifyReport check_theorem_invariants(int n, const VerifyOptions& opts) {
  VerifyReport report;
  report.n = n;
  report.check_name = "theorems";

  Cardinality checked = 0;

  // Transport of the valley markers through phi1: h = M and d_i = b_i.
  for_each_member(
      n, SetId::Aprime,
      [&](const Path& p) {
        ++checked;
        const ValleyDecomposition vd = decompose_valleys(p);
        const Path q = detail::phi1_unchecked(p);
        if (q.terminal() != 2 * vd.max_height) {
          add_cex(report.counterexamples, p,
                  "image terminal " + std::to_string(q.terminal()) + " != 2M = " +
                      std::to_string(2 * vd.max_height));
          return;
        }
        const AscentDecomposition ad = decompose_ascents(q);
        if (ad.half_terminal != vd.max_height) {
          add_cex(report.counterexamples, p,
                  "h = " + std::to_string(ad.half_terminal) + " != M = " +
                      std::to_string(vd.max_height));
          return;
        }
        for (int i = 0; i <= vd.max_height - 1; ++i) {
          if (ad.d[static_cast<std::size_t>(i)] != vd.b[static_cast<std::size_t>(i)]) {
            add_cex(report.counterexamples, p,
                    "d_" + std::to_string(i) + " = " +
                        std::to_string(ad.d[static_cast<std::size_t>(i)]) + " != b_" +
                        std::to_string(i) + " = " +
                        std::to_string(vd.b[static_cast<std::size_t>(i)]));
            return;
          }
        }
      },
      opts.exhaustive_limit);

  // Transport of the stopping times through phi2 (vacuous at n = 1).
  if (n >= 2) {
    for_each_member(
        n, SetId::C,
        [&](const Path& p) {
          ++checked;
          const int tau = detail::tau_unchecked(p);
          const Path q = detail::phi2_unchecked(p);
          const int nu = detail::nu_unchecked(q);
          if (nu != tau - 1) {
            add_cex(report.counterexamples, p,
                    "nu = " + std::to_string(nu) + " != tau - 1 = " + std::to_string(tau - 1));
            return;
          }
          const auto& s = p.positions();
          const auto& t = q.positions();
          for (int l = 2; l < tau; ++l) {
            const bool descends = s[static_cast<std::size_t>(l + 1)] ==
                                  s[static_cast<std::size_t>(l)] - 1;
            const bool image_descends = t[static_cast<std::size_t>(l)] ==
                                        t[static_cast<std::size_t>(l - 1)] - 1;
            if (descends != image_descends) {
              add_cex(report.counterexamples, p,
                      "descent equivalence fails at l = " + std::to_string(l));
              return;
            }
          }
        },
        opts.exhaustive_limit);
  }

  report.domain_size = checked;
  report.image_size = checked;
  report.passed = report.counterexamples.empty();
  cap_counterexamples(report, opts.counterexample_cap);
  return report;
}

}  // namespace pathmorph

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pathmorph/render.hpp"
#include "svg_extract.hpp"
#include "test_support.hpp"

using namespace pathmorph;
using testsupport::code_of;
using testsupport::extract_panels;

namespace {

std::size_t count_occurrences(const std::string& doc, const std::string& needle) {
  std::size_t count = 0;
  std::size_t at = doc.find(needle);
  while (at != std::string::npos) {
    ++count;
    at = doc.find(needle, at + 1);
  }
  return count;
}

}  // namespace

TEST_CASE("render_pair draws both polylines and round-trips coordinates") {
  const Path p = parse("(0,1,0)");
  const Path q = parse("(0,1,2)");
  const std::string doc = render_pair(p, q);

  CHECK(count_occurrences(doc, "<polyline") == 2);
  CHECK(doc.find("stroke=\"blue\"") != std::string::npos);
  CHECK(doc.find("stroke=\"red\"") != std::string::npos);
  CHECK(doc.find("<svg xmlns=") != std::string::npos);

  const auto panels = extract_panels(doc);
  REQUIRE(panels.size() == 1);
  CHECK(panels[0].original == p);
  CHECK(panels[0].image == q);
}

TEST_CASE("render_pair on the first published pair") {
  const Path p = parse("(0,1,2,3,2,1,0)");
  const Path q = parse("(0,1,2,3,4,5,6)");
  const std::string doc = render_pair(p, q);
  const auto panels = extract_panels(doc);
  REQUIRE(panels.size() == 1);
  CHECK(panels[0].original.max_value() == 3);
  CHECK(panels[0].image.terminal() == 6);
}

TEST_CASE("render_pair rejects mismatched lengths") {
  CHECK(code_of([] { render_pair(parse("(0,1,0)"), parse("(0,1,2,1,0)")); }) ==
        Errc::LengthMismatch);
}

TEST_CASE("render spec is validated") {
  RenderSpec spec;
  spec.columns = 0;
  CHECK(code_of([&] { render_pair(parse("(0,1,0)"), parse("(0,1,2)"), spec); }) ==
        Errc::InvalidArgument);
}

TEST_CASE("gallery panel count equals the domain cardinality") {
  const std::string g3 = render_gallery(3, BijectionId::Phi1);
  CHECK(count_occurrences(g3, "<g class=\"panel\"") == 10);

  const std::string g4 = render_gallery(4, BijectionId::Phi2);
  CHECK(count_occurrences(g4, "<g class=\"panel\"") == 5);

  const std::string g1 = render_gallery(1, BijectionId::Phi1);
  CHECK(count_occurrences(g1, "<g class=\"panel\"") == 1);
}

TEST_CASE("gallery panels recover every pair in enumeration order") {
  for (auto [n, id] : {std::pair{3, BijectionId::Phi1}, std::pair{4, BijectionId::Phi2},
                       std::pair{3, BijectionId::Phi1Full}, std::pair{4, BijectionId::Psi2}}) {
    const auto panels = extract_panels(render_gallery(n, id));
    const auto domain = enumerate_members(n, domain_of(id));
    REQUIRE(panels.size() == domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i) {
      CHECK(panels[i].original == domain[i]);
      CHECK(panels[i].image == apply_bijection(id, domain[i]));
    }
  }
}

TEST_CASE("gallery output is byte-identical across runs") {
  CHECK(render_gallery(3, BijectionId::Phi1) == render_gallery(3, BijectionId::Phi1));
  CHECK(render_gallery(4, BijectionId::Phi2) == render_gallery(4, BijectionId::Phi2));
}

TEST_CASE("grid and axis toggles change the chrome, not the data") {
  RenderSpec plain;
  plain.show_grid = false;
  plain.show_axis = false;
  plain.original_color = "#1f77b4";
  plain.image_color = "#d62728";

  const std::string doc = render_gallery(3, BijectionId::Phi1, plain);
  CHECK(doc.find("#dddddd") == std::string::npos);
  CHECK(doc.find("class=\"axis\"") == std::string::npos);
  CHECK(doc.find("#1f77b4") != std::string::npos);

  const auto panels = extract_panels(doc);
  REQUIRE(panels.size() == 10);
  CHECK(panels[0].original == enumerate_members(3, SetId::Aprime)[0]);
}

TEST_CASE("phi2 gallery needs n >= 2, psi2 gallery may be empty") {
  CHECK(code_of([] { render_gallery(1, BijectionId::Phi2); }) == Errc::NTooSmall);
  // D is empty at n = 1: a valid document with zero panels
  const std::string doc = render_gallery(1, BijectionId::Psi2);
  CHECK(extract_panels(doc).empty());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <string>

#include "freegb/corpus.hpp"

using namespace freegb;

namespace {

int max_degree(const std::vector<FreePoly>& gens) {
  int d = -1;
  for (const auto& g : gens) d = std::max(d, g.degree());
  return d;
}

}  // namespace

// ---------------------------------------------------------------------------
// shape of the bundled examples
// ---------------------------------------------------------------------------

TEST_CASE("every example matches its generator count and degree") {
  // label -> {gens, max degree, letters, params, bound}
  const std::map<std::string, std::array<std::size_t, 5>> expect = {
      {"klein", {3, 4, 2, 0, 10}},     {"g3332", {8, 8, 4, 0, 10}},
      {"g444", {7, 6, 3, 0, 10}},      {"heckeA", {10, 3, 4, 1, 15}},
      {"heckeD", {10, 3, 4, 1, 15}},   {"heckeE", {21, 3, 6, 1, 10}},
      {"lie5", {3, 2, 5, 0, 25}},      {"lie7", {10, 2, 7, 0, 5}},
      {"templieb8", {34, 3, 7, 1, 8}}, {"templieb9", {43, 3, 8, 1, 9}}};
  const auto ls = corpus::labels();
  REQUIRE(ls.size() == expect.size());
  for (const std::string& label : ls) {
    CAPTURE(label);
    const auto& e = expect.at(label);
    const Presentation p = corpus::presentation(label);
    CHECK(p.label == label);
    CHECK(p.gens.size() == e[0]);
    CHECK(max_degree(p.gens) == static_cast<int>(e[1]));
    CHECK(p.alphabet.letter_count() == e[2]);
    CHECK(p.alphabet.param_names.size() == e[3]);
    CHECK(p.default_bound == e[4]);
    CHECK(p.default_order == (label == "klein" ? Order::right : Order::left));
    CHECK(p.default_variant == Variant::std);
  }
}

TEST_CASE("examples round-trip through emit_input") {
  for (const std::string& label : corpus::labels()) {
    CAPTURE(label);
    const Presentation p = corpus::presentation(label);
    const Presentation q = parse_presentation(emit_input(p));
    CHECK(q.gens == p.gens);
    CHECK(q.default_bound == p.default_bound);
    CHECK(q.default_order == p.default_order);
  }
}

// ---------------------------------------------------------------------------
// individual relations
// ---------------------------------------------------------------------------

TEST_CASE("spot checks of the emitted relations") {
  const Presentation klein = corpus::presentation("klein");
  CHECK(klein.gens[2].str(klein.alphabet) == "x*y*x*y - 1");

  const Presentation g = corpus::presentation("g3332");
  CHECK(g.gens[0].str(g.alphabet) == "r*R - 1");
  CHECK(g.gens[7].str(g.alphabet) == "R*S*r*s*R*S*r*s - 1");

  const Presentation a = corpus::presentation("heckeA");
  CHECK(a.gens[0].str(a.alphabet) == "T1^2 - (q-1)*T1 - q");
  CHECK(a.gens[4].str(a.alphabet) == "T1*T2*T1 - T2*T1*T2");
  CHECK(a.gens[5].str(a.alphabet) == "T1*T3 - T3*T1");

  const Presentation d = corpus::presentation("heckeD");
  CHECK(d.gens[6].str(d.alphabet) == "T1*T4 - T4*T1");
  CHECK(d.gens[8].str(d.alphabet) == "T2*T4*T2 - T4*T2*T4");

  const Presentation l = corpus::presentation("lie7");
  CHECK(l.gens[4].str(l.alphabet) ==
        "x2*x3 - x3*x2 - 1/2*x4 - 1/4*x5 + 1/8*x6 + 1/2*x7");
  CHECK(l.gens[8].str(l.alphabet) == "x3*x4 - x4*x3 + 1/2*x6");

  const Presentation t = corpus::presentation("templieb8");
  CHECK(t.gens[0].str(t.alphabet) == "e1^2 - d*e1");
  CHECK(t.gens[7].str(t.alphabet) == "e1*e3 - e3*e1");
  CHECK(t.gens[22].str(t.alphabet) == "e1*e2*e1 - e1");
  CHECK(t.gens[23].str(t.alphabet) == "e2*e1*e2 - e2");
}

// ---------------------------------------------------------------------------
// label resolution
// ---------------------------------------------------------------------------

TEST_CASE("a d-suffix overrides the bundled degree bound") {
  const Presentation p = corpus::presentation("kleind6");
  CHECK(p.label == "klein");
  CHECK(p.default_bound == 6);
  CHECK(corpus::presentation("heckeDd15").default_bound == 15);
  CHECK(corpus::presentation("templieb8d4").default_bound == 4);
  // Names whose trailing digits are not a bound suffix resolve as-is.
  CHECK(corpus::presentation("lie5").default_bound == 25);
  CHECK(corpus::presentation("templieb9").default_bound == 9);
  CHECK_THROWS_AS(corpus::presentation("nosuch"), std::invalid_argument);
  CHECK_THROWS_AS(corpus::presentation("nosuchd10"), std::invalid_argument);
  CHECK_THROWS_AS(corpus::input_text("kleind6"), std::invalid_argument);
}

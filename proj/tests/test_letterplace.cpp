#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "freegb/letterplace.hpp"

using freegb::Alphabet;
using freegb::FreePoly;
using freegb::FreeTerm;
using freegb::LPPoly;
using freegb::LPTerm;
using freegb::Order;
using freegb::Scalar;
using freegb::Word;

namespace {

const Alphabet kAb = Alphabet::make({"x", "y"});

Word w(std::initializer_list<int> letters) {
  Word out;
  for (int l : letters) out.push_back(static_cast<char>(l));
  return out;
}

FreePoly fp(std::vector<std::pair<int, Word>> ts) {
  std::vector<FreeTerm> out;
  for (auto& [c, word] : ts) out.push_back({Scalar(c), word});
  return FreePoly::from_terms(std::move(out), Order::right);
}

// Homogenized Klein four-group style generators used across the suite.
const LPPoly g1 = freegb::embed(fp({{1, w({1, 1})}, {-1, w({0, 0})}}));
const LPPoly g2 = freegb::embed(fp({{1, w({2, 2})}, {-1, w({0, 0})}}));
const LPPoly g3 =
    freegb::embed(fp({{1, w({1, 2, 1, 2})}, {-1, w({0, 0, 0, 0})}}));

LPPoly random_uniform(std::mt19937& rng, int len) {
  std::uniform_int_distribution<int> nterms(1, 4);
  std::uniform_int_distribution<int> letter(0, 2);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::vector<LPTerm> ts;
  for (int i = nterms(rng); i > 0; --i) {
    Word body;
    for (int k = 0; k < len; ++k) body.push_back(static_cast<char>(letter(rng)));
    ts.push_back({Scalar(coef(rng)), std::move(body)});
  }
  return LPPoly(0, std::move(ts));
}

}  // namespace

TEST_CASE("embedding requires homogeneous input") {
  CHECK(g1.str(kAb) == "x(1)*x(2) - t(1)*t(2)");
  CHECK(g3.str(kAb) == "x(1)*y(2)*x(3)*y(4) - t(1)*t(2)*t(3)*t(4)");
  CHECK(freegb::embed(FreePoly()).is_zero());
  CHECK_THROWS_AS((void)freegb::embed(fp({{1, w({1})}, {1, w({})}})),
                  std::invalid_argument);
}

TEST_CASE("embedding round-trips through unembed") {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 60; ++trial) {
    const LPPoly p = random_uniform(rng, 4);
    if (p.is_zero()) continue;
    CHECK(freegb::embed(freegb::unembed(p, Order::right)) == p);
  }
}

TEST_CASE("letterplace polynomials keep terms sorted and merged") {
  const LPPoly p(0, {{Scalar(1), w({1, 2})},
                     {Scalar(2), w({2, 1})},
                     {Scalar(1), w({1, 2})}});
  REQUIRE(p.terms().size() == 2);
  CHECK(p.terms()[1].coef == Scalar(2));
  // Place order from the top place down: x at place 2 beats y at place 2.
  CHECK(p.lead().body == w({2, 1}));
  CHECK(p.length() == 2);
  CHECK(p.top_place() == 2);
  CHECK(p.shifted(3).offset() == 3);
  CHECK(p.shifted(3).top_place() == 5);
  CHECK_THROWS_AS(LPPoly(0, {{Scalar(1), w({1})}, {Scalar(1), w({1, 1})}}),
                  std::invalid_argument);
}

TEST_CASE("shift lcm detects disjoint and clashing windows") {
  CHECK_FALSE(freegb::lp_lcm(g1, 0, g1, 2).has_value());  // disjoint
  CHECK_FALSE(freegb::lp_lcm(g1, 0, g2, 0).has_value());  // x vs y clash
  CHECK_FALSE(freegb::lp_lcm(g1, 0, g2, 1).has_value());  // x vs y clash
  const auto overlap = freegb::lp_lcm(g1, 0, g1, 1);
  REQUIRE(overlap.has_value());
  CHECK(overlap->first == 0);
  CHECK(overlap->second == w({1, 1, 1}));
  const auto chain = freegb::lp_lcm(g3, 0, g2, 3);
  REQUIRE(chain.has_value());
  CHECK(chain->second == w({1, 2, 1, 2, 2}));
  // Containment: the window of g1 sits inside g3's.
  const auto inside = freegb::lp_lcm(g3, 0, g1, 2);
  CHECK_FALSE(inside.has_value());  // letters y,x vs x,x clash at place 4
}

TEST_CASE("s-polynomials match the worked examples") {
  const LPPoly s11 = freegb::lp_spoly(g1, 0, g1, 1);
  CHECK(s11.str(kAb) == "- t(1)*t(2)*x(3) + x(1)*t(2)*t(3)");
  const LPPoly s32 = freegb::lp_spoly(g3, 0, g2, 3);
  // The pure padding word tops this one: place 5 holds y there but t here.
  CHECK(s32.str(kAb) ==
        "- t(1)*t(2)*t(3)*t(4)*y(5) + x(1)*y(2)*x(3)*t(4)*t(5)");
  // Swapping the pair flips the sign.
  const LPPoly s23 = freegb::lp_spoly(g2, 3, g3, 0);
  CHECK(s23.minus_scaled(s32, Scalar(-1)).is_zero());
}

TEST_CASE("saturation strips shared trailing padding") {
  LPPoly p(0, {{Scalar(1), w({1, 2, 1, 0, 0})}, {Scalar(-1), w({2, 0, 0, 0, 0})}});
  CHECK(freegb::saturate(p) == 2);
  CHECK(p.str(kAb) == "x(1)*y(2)*x(3) - y(1)*t(2)*t(3)");
  CHECK(p.length() == 3);
  // Idempotent afterwards.
  CHECK(freegb::saturate(p) == 0);

  LPPoly q(2, {{Scalar(1), w({1, 0})}});
  CHECK(freegb::saturate(q) == 1);
  CHECK(q.offset() == 2);
  CHECK(q.length() == 1);

  LPPoly none(0, {{Scalar(1), w({0, 1})}});
  CHECK(freegb::saturate(none) == 0);
}

TEST_CASE("saturating away all places reports inconsistency") {
  LPPoly p(0, {{Scalar(3), w({0, 0})}});
  CHECK_THROWS_AS((void)freegb::saturate(p), freegb::inconsistent_ideal);
}

TEST_CASE("saturation keeps term order") {
  std::mt19937 rng(808);
  std::uniform_int_distribution<int> pads(0, 3);
  for (int trial = 0; trial < 80; ++trial) {
    const LPPoly base = random_uniform(rng, 3);
    if (base.is_zero()) continue;
    // Append a shared run of padding places.
    const std::size_t shared = static_cast<std::size_t>(pads(rng));
    std::vector<LPTerm> ts;
    for (const auto& t : base.terms()) {
      Word body = t.body;
      body.append(shared, static_cast<char>(freegb::pad_letter));
      ts.push_back({t.coef, std::move(body)});
    }
    LPPoly padded(1, std::move(ts));
    std::size_t mu = 0;
    try {
      mu = freegb::saturate(padded);
    } catch (const freegb::inconsistent_ideal&) {
      continue;  // every term was pure padding
    }
    CHECK(mu >= shared);
    CHECK(padded.offset() == 1);
    for (std::size_t i = 1; i < padded.terms().size(); ++i) {
      CHECK(LPPoly::body_cmp(padded.terms()[i - 1].body,
                             padded.terms()[i].body) > 0);
    }
  }
}

TEST_CASE("spoly of shifted supports keeps natural offsets") {
  // Entries living away from offset 0, as the fixed-shift variant stores them.
  const LPPoly a = g1.with_offset(2);  // places 3..4
  const LPPoly b = g1.with_offset(3);  // places 4..5
  const auto l = freegb::lp_lcm(a, 0, b, 0);
  REQUIRE(l.has_value());
  CHECK(l->first == 2);
  CHECK(l->second == w({1, 1, 1}));
  const LPPoly s = freegb::lp_spoly(a, 0, b, 0);
  CHECK(s.offset() == 2);
  CHECK(s.str(kAb) == "- t(3)*t(4)*x(5) + x(3)*t(4)*t(5)");
}

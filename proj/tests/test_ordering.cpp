#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "freegb/ordering.hpp"

using freegb::Letter;
using freegb::Order;
using freegb::Word;

namespace {

Word w(std::initializer_list<int> letters) {
  Word out;
  for (int l : letters) out.push_back(static_cast<char>(l));
  return out;
}

std::vector<Word> all_words(int nletters, int maxlen, bool with_pad) {
  std::vector<Word> out = {Word()};
  std::vector<Word> layer = {Word()};
  for (int len = 1; len <= maxlen; ++len) {
    std::vector<Word> next;
    for (const auto& word : layer) {
      for (int l = with_pad ? 0 : 1; l <= nletters; ++l) {
        Word ext = word;
        ext.push_back(static_cast<char>(l));
        next.push_back(ext);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

int sgn(int v) { return (v > 0) - (v < 0); }

}  // namespace

TEST_CASE("letter comparison puts the padding letter lowest") {
  CHECK(freegb::letter_cmp(0, 1) < 0);
  CHECK(freegb::letter_cmp(1, 0) > 0);
  CHECK(freegb::letter_cmp(1, 1) == 0);
  // Earlier-declared letters are greater.
  CHECK(freegb::letter_cmp(1, 2) > 0);
  CHECK(freegb::letter_cmp(3, 2) < 0);
}

TEST_CASE("word comparison frozen cases") {
  // Letters: x = 1 > y = 2.
  CHECK(freegb::word_cmp(w({2, 1}), w({1, 2}), Order::right) > 0);  // yx > xy
  CHECK(freegb::word_cmp(w({2, 1}), w({1, 2}), Order::left) < 0);   // xy > yx
  CHECK(freegb::word_cmp(w({1}), w({2, 2}), Order::right) < 0);     // graded
  CHECK(freegb::word_cmp(w({}), w({0}), Order::right) < 0);
  CHECK(freegb::word_cmp(w({1, 1}), w({1, 1}), Order::left) == 0);
  // The padding letter is smallest at a place.
  CHECK(freegb::word_cmp(w({0, 1}), w({1, 1}), Order::right) < 0);
  CHECK(freegb::word_cmp(w({1, 0}), w({1, 1}), Order::right) < 0);
}

TEST_CASE("word orders are total orders compatible with degree") {
  const auto words = all_words(3, 4, true);
  for (Order order : {Order::right, Order::left}) {
    for (const auto& a : words) {
      for (const auto& b : words) {
        const int ab = freegb::word_cmp(a, b, order);
        CHECK(sgn(ab) == -sgn(freegb::word_cmp(b, a, order)));
        if (ab == 0) CHECK(a == b);
        if (a.size() < b.size()) CHECK(ab < 0);
      }
    }
  }
}

TEST_CASE("word orders are transitive") {
  const auto words = all_words(3, 3, false);
  for (Order order : {Order::right, Order::left}) {
    for (const auto& a : words) {
      for (const auto& b : words) {
        if (freegb::word_cmp(a, b, order) <= 0) continue;
        for (const auto& c : words) {
          if (freegb::word_cmp(b, c, order) > 0)
            CHECK(freegb::word_cmp(a, c, order) > 0);
        }
      }
    }
  }
}

TEST_CASE("word orders are stable under two-sided multiplication") {
  const auto words = all_words(2, 3, false);
  const auto contexts = all_words(2, 2, false);
  for (Order order : {Order::right, Order::left}) {
    for (const auto& a : words) {
      for (const auto& b : words) {
        if (a.size() != b.size()) continue;
        const int ab = freegb::word_cmp(a, b, order);
        for (const auto& u : contexts) {
          for (const auto& v : contexts) {
            CHECK(freegb::word_cmp(u + a + v, u + b + v, order) == ab);
          }
        }
      }
    }
  }
}

TEST_CASE("left comparison is right comparison of reversed words") {
  const auto words = all_words(2, 5, true);
  for (const auto& a : words) {
    for (const auto& b : words) {
      Word ra(a.rbegin(), a.rend());
      Word rb(b.rbegin(), b.rend());
      CHECK(freegb::word_cmp(a, b, Order::left) ==
            freegb::word_cmp(ra, rb, Order::right));
    }
  }
}

TEST_CASE("place comparison basics") {
  // Higher top place wins regardless of letters.
  CHECK(freegb::place_cmp(0, w({1, 1}), 0, w({1, 1, 1})) < 0);
  CHECK(freegb::place_cmp(0, w({1}), 1, w({1})) < 0);
  CHECK(freegb::place_cmp(2, w({2}), 0, w({1, 1, 1})) < 0);
  // Same support: letters decide from the top place down.
  CHECK(freegb::place_cmp(0, w({2, 1}), 0, w({1, 2})) > 0);
  CHECK(freegb::place_cmp(0, w({1, 0}), 0, w({0, 1})) < 0);
  // Equal top places, then absence below loses even against padding.
  CHECK(freegb::place_cmp(1, w({1, 1}), 0, w({1, 1, 1})) < 0);
  CHECK(freegb::place_cmp(1, w({1, 1}), 0, w({0, 1, 1})) < 0);
  CHECK(freegb::place_cmp(0, w({}), 0, w({})) == 0);
}

TEST_CASE("place comparison is shift equivariant and total") {
  const auto words = all_words(2, 3, true);
  for (const auto& a : words) {
    if (a.empty()) continue;
    for (const auto& b : words) {
      if (b.empty()) continue;
      for (std::uint32_t oa = 0; oa < 3; ++oa) {
        for (std::uint32_t ob = 0; ob < 3; ++ob) {
          const int c = freegb::place_cmp(oa, a, ob, b);
          CHECK(sgn(c) == -sgn(freegb::place_cmp(ob, b, oa, a)));
          CHECK(freegb::place_cmp(oa + 2, a, ob + 2, b) == c);
          if (c == 0) CHECK((oa == ob && a == b));
        }
      }
    }
  }
}

TEST_CASE("place comparison agrees with the right word order on embeddings") {
  const auto words = all_words(2, 5, true);
  for (const auto& a : words) {
    for (const auto& b : words) {
      if (a.size() != b.size()) continue;
      CHECK(sgn(freegb::place_cmp(0, a, 0, b)) ==
            sgn(freegb::word_cmp(a, b, Order::right)));
    }
  }
}

TEST_CASE("order and variant names round-trip") {
  CHECK(freegb::order_name(Order::right) == "right");
  CHECK(freegb::order_from_name("left") == Order::left);
  CHECK_FALSE(freegb::order_from_name("middle").has_value());
  using freegb::Variant;
  for (Variant v : {Variant::std, Variant::noc, Variant::bas}) {
    CHECK(freegb::variant_from_name(freegb::variant_name(v)) == v);
  }
}

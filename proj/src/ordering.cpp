#include "freegb/ordering.hpp"

#include <algorithm>

namespace freegb {

int letter_cmp(Letter a, Letter b) {
  if (a == b) return 0;
  if (a == pad_letter) return -1;
  if (b == pad_letter) return 1;
  // Smaller index means declared earlier, hence greater.
  return a < b ? 1 : -1;
}

int word_cmp(const Word& a, const Word& b, Order order) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  const std::size_t n = a.size();
  if (order == Order::right) {
    for (std::size_t i = n; i > 0; --i) {
      const int c = letter_cmp(static_cast<Letter>(a[i - 1]),
                               static_cast<Letter>(b[i - 1]));
      if (c != 0) return c;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const int c =
          letter_cmp(static_cast<Letter>(a[i]), static_cast<Letter>(b[i]));
      if (c != 0) return c;
    }
  }
  return 0;
}

int place_cmp(std::uint32_t offa, const Word& a, std::uint32_t offb,
              const Word& b) {
  const std::uint32_t topa = offa + static_cast<std::uint32_t>(a.size());
  const std::uint32_t topb = offb + static_cast<std::uint32_t>(b.size());
  for (std::uint32_t p = std::max(topa, topb); p > 0; --p) {
    const bool ina = p > offa && p <= topa;
    const bool inb = p > offb && p <= topb;
    if (!ina && !inb) continue;
    if (!ina) return -1;
    if (!inb) return 1;
    const int c = letter_cmp(static_cast<Letter>(a[p - offa - 1]),
                             static_cast<Letter>(b[p - offb - 1]));
    if (c != 0) return c;
  }
  return 0;
}

std::string order_name(Order order) {
  return order == Order::right ? "right" : "left";
}

std::string variant_name(Variant variant) {
  switch (variant) {
    case Variant::std:
      return "std";
    case Variant::noc:
      return "noc";
    default:
      return "bas";
  }
}

std::optional<Order> order_from_name(const std::string& name) {
  if (name == "right") return Order::right;
  if (name == "left") return Order::left;
  return std::nullopt;
}

std::optional<Variant> variant_from_name(const std::string& name) {
  if (name == "std") return Variant::std;
  if (name == "noc") return Variant::noc;
  if (name == "bas") return Variant::bas;
  return std::nullopt;
}

}  // namespace freegb

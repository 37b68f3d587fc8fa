#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "freegb/alphabet.hpp"

namespace freegb {

// Graded lexicographic word orders: ties between equal-length words break at
// the rightmost difference (Order::right) or the leftmost one (Order::left).
enum class Order : unsigned char { right, left };

// Pair scheduling strategies of the basis engine.
enum class Variant : unsigned char { std, noc, bas };

// -1/0/1 with the padding letter smallest and earlier-declared letters
// greater.
int letter_cmp(Letter a, Letter b);

// Graded comparison: shorter words are smaller, equal lengths compare per the
// chosen side.
int word_cmp(const Word& a, const Word& b, Order order);

// Place comparison of contiguous letterplace monomials occupying places
// off+1 .. off+size: scan from the top occupied place downward, an absent
// place losing to any letter.
int place_cmp(std::uint32_t offa, const Word& a, std::uint32_t offb,
              const Word& b);

std::string order_name(Order order);
std::string variant_name(Variant variant);
std::optional<Order> order_from_name(const std::string& name);
std::optional<Variant> variant_from_name(const std::string& name);

}  // namespace freegb

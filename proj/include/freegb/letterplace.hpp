#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "freegb/freepoly.hpp"

namespace freegb {

// The computed ideal turned out to contain a nonzero scalar.
struct inconsistent_ideal : std::runtime_error {
  explicit inconsistent_ideal(const std::string& msg)
      : std::runtime_error(msg) {}
};

struct LPTerm {
  Scalar coef;
  Word body;
};

// Multilinear letterplace polynomial: every term occupies the contiguous
// places offset+1 .. offset+length with a shared offset and length, and terms
// are kept sorted in strictly descending place order.
class LPPoly {
 public:
  LPPoly() = default;
  // Sorts, merges, and drops zeros; all bodies must share one length.
  LPPoly(std::uint32_t offset, std::vector<LPTerm> terms);

  bool is_zero() const { return terms_.empty(); }
  std::uint32_t offset() const { return offset_; }
  std::size_t length() const {
    return terms_.empty() ? 0 : terms_[0].body.size();
  }
  std::uint32_t top_place() const {
    return offset_ + static_cast<std::uint32_t>(length());
  }
  const std::vector<LPTerm>& terms() const { return terms_; }
  const LPTerm& lead() const { return terms_.front(); }

  LPPoly monic() const;
  LPPoly shifted(std::uint32_t by) const;
  LPPoly with_offset(std::uint32_t offset) const;
  // Everything below the leading term.
  LPPoly tail() const;
  // this - factor*rhs; offsets and lengths must agree unless a side is zero.
  LPPoly minus_scaled(const LPPoly& rhs, const Scalar& factor) const;

  bool operator==(const LPPoly& rhs) const;
  bool operator!=(const LPPoly& rhs) const { return !(*this == rhs); }

  std::string str(const Alphabet& ab) const;

  // Descending place comparison of same-length bodies at a common offset.
  static int body_cmp(const Word& a, const Word& b);

 private:
  std::uint32_t offset_ = 0;
  std::vector<LPTerm> terms_;
};

// Embedding of a homogeneous free polynomial at offset 0; throws
// std::invalid_argument when term degrees differ.
LPPoly embed(const FreePoly& f);
FreePoly unembed(const LPPoly& p, Order order);

// Strips the trailing places every term pads, returning how many were
// removed. Emptying the support means the ideal contains a nonzero scalar,
// which raises inconsistent_ideal.
std::size_t saturate(LPPoly& p);

// Least common multiple of f's leading window placed at f.offset()+fshift
// and g's at g.offset()+gshift: nullopt when the windows are disjoint or
// disagree on a shared place.
std::optional<std::pair<std::uint32_t, Word>> lp_lcm(const LPPoly& f,
                                                     std::uint32_t fshift,
                                                     const LPPoly& g,
                                                     std::uint32_t gshift);

// S-polynomial of the pair aligned as in lp_lcm, with both cofactors divided
// by their leading coefficients so the leading windows cancel exactly.
// Requires lp_lcm to exist for the same alignment.
LPPoly lp_spoly(const LPPoly& f, std::uint32_t fshift, const LPPoly& g,
                std::uint32_t gshift);

}  // namespace freegb

#pragma once

#include <utility>
#include <vector>

#include "freegb/ordering.hpp"
#include "freegb/scalar.hpp"

namespace freegb {

struct FreeTerm {
  Scalar coef;
  Word word;
};

// Polynomial in the free associative algebra over the scalar field. Terms are
// kept sorted in strictly descending word order; the order is not stored, so
// callers pass it to every operation that can reorder terms.
class FreePoly {
 public:
  FreePoly() = default;

  // Sorts, merges equal words, and drops zero coefficients.
  static FreePoly from_terms(std::vector<FreeTerm> terms, Order order);
  static FreePoly term(Scalar coef, Word word);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<FreeTerm>& terms() const { return terms_; }
  const FreeTerm& lead() const { return terms_.front(); }
  // Length of the longest word, -1 when zero.
  int degree() const;

  FreePoly add(const FreePoly& rhs, Order order) const;
  FreePoly sub(const FreePoly& rhs, Order order) const;
  FreePoly mul(const FreePoly& rhs, Order order) const;
  FreePoly scaled(const Scalar& factor) const;
  FreePoly monic() const;

  bool operator==(const FreePoly& rhs) const;
  bool operator!=(const FreePoly& rhs) const { return !(*this == rhs); }

  std::string str(const Alphabet& ab) const;

 private:
  std::vector<FreeTerm> terms_;
};

// Pads every word on the right with the reserved letter up to the maximal
// degree, making the polynomial homogeneous.
FreePoly homogenize(const FreePoly& f, Order order);

// Deletes every padding letter and collects; terms may cancel to zero.
FreePoly dehomogenize(const FreePoly& f, Order order);

// Reverses every word (an anti-automorphism, so two-sided ideals are
// preserved).
FreePoly reversed(const FreePoly& f, Order order);

// Shared term-list renderer: pairs of (coefficient, monomial text), the empty
// string standing for the empty monomial.
std::string poly_string(const std::vector<std::pair<Scalar, std::string>>& ts,
                        const Alphabet& ab);

}  // namespace freegb

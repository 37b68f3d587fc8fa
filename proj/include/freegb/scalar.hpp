#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace freegb {

using Rational = mpq_class;

// Raised when a coefficient operation needs an inverse that does not exist,
// or an exact polynomial division leaves a remainder.
struct scalar_division_error : std::runtime_error {
  explicit scalar_division_error(const std::string& msg)
      : std::runtime_error(msg) {}
};

// Sparse polynomial in the declared parameters with rational coefficients.
// Terms are kept in descending graded lexicographic order and exponent
// vectors carry no trailing zeros, so structural equality is polynomial
// equality.
class ParamPoly {
 public:
  struct Term {
    std::vector<std::uint32_t> exps;
    Rational coef;
  };

  ParamPoly() = default;
  explicit ParamPoly(Rational constant);
  static ParamPoly variable(std::uint32_t index);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Requires is_constant(); the zero polynomial yields 0.
  const Rational& constant_value() const;
  int total_degree() const;
  const std::vector<Term>& terms() const { return terms_; }

  ParamPoly operator-() const;
  ParamPoly operator+(const ParamPoly& rhs) const;
  ParamPoly operator-(const ParamPoly& rhs) const;
  ParamPoly operator*(const ParamPoly& rhs) const;
  bool operator==(const ParamPoly& rhs) const;
  bool operator!=(const ParamPoly& rhs) const { return !(*this == rhs); }

  // Quotient when divisor divides *this exactly; throws
  // scalar_division_error otherwise.
  ParamPoly div_exact(const ParamPoly& divisor) const;

  // Deterministic gcd: 0 for two zeros, the integer-content gcd when either
  // argument is constant, and otherwise an integer-primitive polynomial with
  // positive leading coefficient.
  static ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

  // values[i] substitutes parameter i; every parameter that occurs must be
  // covered.
  Rational evaluate(const std::vector<Rational>& values) const;

  // Compact rendering such as "q^2-1"; names[i] labels parameter i.
  std::string str(const std::vector<std::string>& names) const;

 private:
  std::vector<Term> terms_;
};

// Fraction of two ParamPoly values kept in canonical form: gcd-reduced, with
// an integer-primitive denominator whose leading coefficient is positive.
// Parameter-free values therefore always carry denominator 1.
class Scalar {
 public:
  Scalar() : den_(Rational(1)) {}
  Scalar(int value) : num_(Rational(value)), den_(Rational(1)) {}
  Scalar(Rational value) : num_(std::move(value)), den_(Rational(1)) {}
  explicit Scalar(ParamPoly numerator)
      : num_(std::move(numerator)), den_(Rational(1)) {}
  Scalar(ParamPoly numerator, ParamPoly denominator);

  static Scalar parameter(std::uint32_t index) {
    return Scalar(ParamPoly::variable(index));
  }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_minus_one() const;
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  // Sign of the leading numerator coefficient; false for zero.
  bool is_negative() const;
  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& rhs) const;
  Scalar operator-(const Scalar& rhs) const;
  Scalar operator*(const Scalar& rhs) const;
  Scalar operator/(const Scalar& rhs) const { return *this * rhs.inverse(); }
  Scalar inverse() const;  // throws scalar_division_error on zero
  bool operator==(const Scalar& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
  }
  bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

  // nullopt when the denominator vanishes at the given point.
  std::optional<Rational> evaluate(const std::vector<Rational>& values) const;

  std::string str(const std::vector<std::string>& names) const;
  // True when a rendering of this scalar needs parentheses before "*word".
  bool needs_parens() const;

 private:
  ParamPoly num_;
  ParamPoly den_;

  void normalize();
};

}  // namespace freegb

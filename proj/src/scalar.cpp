#include "freegb/scalar.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace freegb {

namespace {

int cmp_exps(const std::vector<std::uint32_t>& a,
             const std::vector<std::uint32_t>& b) {
  long da = 0;
  long db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da < db ? -1 : 1;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t ea = i < a.size() ? a[i] : 0;
    const std::uint32_t eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea < eb ? -1 : 1;
  }
  return 0;
}

void trim_exps(std::vector<std::uint32_t>& exps) {
  while (!exps.empty() && exps.back() == 0) exps.pop_back();
}

Rational rat_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

// gcd of numerators over lcm of denominators; positive for nonzero inputs.
Rational rat_gcd(const Rational& a, const Rational& b) {
  mpz_class num;
  mpz_class den;
  mpz_gcd(num.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
  mpz_lcm(den.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

ParamPoly::ParamPoly(Rational constant) {
  if (constant != 0) terms_.push_back({{}, std::move(constant)});
}

ParamPoly ParamPoly::variable(std::uint32_t index) {
  ParamPoly p;
  std::vector<std::uint32_t> exps(index + 1, 0);
  exps[index] = 1;
  p.terms_.push_back({std::move(exps), Rational(1)});
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exps.empty());
}

const Rational& ParamPoly::constant_value() const {
  static const Rational zero(0);
  return terms_.empty() ? zero : terms_[0].coef;
}

int ParamPoly::total_degree() const {
  if (terms_.empty()) return -1;
  long d = 0;
  for (auto e : terms_[0].exps) d += e;
  return static_cast<int>(d);
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly p(*this);
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

ParamPoly ParamPoly::operator+(const ParamPoly& rhs) const {
  ParamPoly out;
  out.terms_.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < rhs.terms_.size()) {
    int c;
    if (i == terms_.size()) {
      c = -1;
    } else if (j == rhs.terms_.size()) {
      c = 1;
    } else {
      c = cmp_exps(terms_[i].exps, rhs.terms_[j].exps);
    }
    if (c > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(rhs.terms_[j++]);
    } else {
      Rational sum = terms_[i].coef + rhs.terms_[j].coef;
      if (sum != 0) out.terms_.push_back({terms_[i].exps, std::move(sum)});
      ++i;
      ++j;
    }
  }
  return out;
}

ParamPoly ParamPoly::operator-(const ParamPoly& rhs) const {
  return *this + (-rhs);
}

ParamPoly ParamPoly::operator*(const ParamPoly& rhs) const {
  std::map<std::vector<std::uint32_t>, Rational> acc;
  for (const auto& a : terms_) {
    for (const auto& b : rhs.terms_) {
      std::vector<std::uint32_t> exps(std::max(a.exps.size(), b.exps.size()),
                                      0);
      for (std::size_t k = 0; k < a.exps.size(); ++k) exps[k] += a.exps[k];
      for (std::size_t k = 0; k < b.exps.size(); ++k) exps[k] += b.exps[k];
      trim_exps(exps);
      acc[std::move(exps)] += a.coef * b.coef;
    }
  }
  ParamPoly out;
  for (auto& [exps, coef] : acc) {
    if (coef != 0) out.terms_.push_back({exps, std::move(coef)});
  }
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const Term& a, const Term& b) {
              return cmp_exps(a.exps, b.exps) > 0;
            });
  return out;
}

bool ParamPoly::operator==(const ParamPoly& rhs) const {
  if (terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].exps != rhs.terms_[i].exps) return false;
    if (terms_[i].coef != rhs.terms_[i].coef) return false;
  }
  return true;
}

ParamPoly ParamPoly::div_exact(const ParamPoly& divisor) const {
  if (divisor.is_zero())
    throw scalar_division_error("polynomial division by zero");
  ParamPoly quotient;
  ParamPoly rem(*this);
  const Term& lead = divisor.terms_[0];
  while (!rem.is_zero()) {
    const Term& top = rem.terms_[0];
    std::vector<std::uint32_t> exps(top.exps);
    if (exps.size() < lead.exps.size())
      throw scalar_division_error("inexact polynomial division");
    for (std::size_t k = 0; k < lead.exps.size(); ++k) {
      if (exps[k] < lead.exps[k])
        throw scalar_division_error("inexact polynomial division");
      exps[k] -= lead.exps[k];
    }
    trim_exps(exps);
    ParamPoly factor;
    factor.terms_.push_back({std::move(exps), top.coef / lead.coef});
    quotient = quotient + factor;
    rem = rem - factor * divisor;
  }
  return quotient;
}

namespace {

// Positive gcd of all rational coefficients; 0 for the zero polynomial.
Rational rat_content(const ParamPoly& p) {
  Rational c(0);
  for (const auto& t : p.terms())
    c = (c == 0) ? rat_abs(t.coef) : rat_gcd(c, t.coef);
  return c;
}

ParamPoly scale(const ParamPoly& p, const Rational& factor) {
  ParamPoly one(factor);
  return p * one;
}

// Integer-primitive with positive leading coefficient.
ParamPoly canonical_primitive(const ParamPoly& p) {
  if (p.is_zero()) return p;
  Rational c = rat_content(p);
  if (p.terms()[0].coef < 0) c = -c;
  return scale(p, Rational(1) / c);
}

int main_var(const ParamPoly& p) {
  int v = -1;
  for (const auto& t : p.terms()) {
    for (std::size_t k = 0; k < t.exps.size(); ++k) {
      if (t.exps[k] > 0) v = std::max(v, static_cast<int>(k));
    }
  }
  return v;
}

int deg_in(const ParamPoly& p, std::uint32_t v) {
  int d = 0;
  for (const auto& t : p.terms()) {
    if (t.exps.size() > v) d = std::max(d, static_cast<int>(t.exps[v]));
  }
  return d;
}

// Coefficient polynomials of v^0 .. v^deg.
std::vector<ParamPoly> coeffs_in(const ParamPoly& p, std::uint32_t v) {
  std::vector<ParamPoly> cs(static_cast<std::size_t>(deg_in(p, v)) + 1);
  for (const auto& t : p.terms()) {
    const std::uint32_t e = t.exps.size() > v ? t.exps[v] : 0;
    ParamPoly mono(t.coef);
    for (std::size_t k = 0; k < t.exps.size(); ++k) {
      if (k == v) continue;
      for (std::uint32_t r = 0; r < t.exps[k]; ++r)
        mono = mono * ParamPoly::variable(static_cast<std::uint32_t>(k));
    }
    cs[e] = cs[e] + mono;
  }
  return cs;
}

ParamPoly mul_var_pow(const ParamPoly& p, std::uint32_t v, std::uint32_t e) {
  ParamPoly out(p);
  for (std::uint32_t r = 0; r < e; ++r) out = out * ParamPoly::variable(v);
  return out;
}

ParamPoly content_in(const std::vector<ParamPoly>& cs) {
  ParamPoly c;
  for (const auto& p : cs) c = ParamPoly::gcd(c, p);
  return c;
}

ParamPoly lead_coeff_in(const ParamPoly& p, std::uint32_t v) {
  auto cs = coeffs_in(p, v);
  return cs.back();
}

ParamPoly prem(const ParamPoly& a, const ParamPoly& b, std::uint32_t v) {
  const int db = deg_in(b, v);
  const ParamPoly lcb = lead_coeff_in(b, v);
  ParamPoly r(a);
  while (!r.is_zero() && deg_in(r, v) >= db) {
    const int dr = deg_in(r, v);
    const ParamPoly lcr = lead_coeff_in(r, v);
    r = lcb * r - mul_var_pow(lcr * b, v, static_cast<std::uint32_t>(dr - db));
  }
  return r;
}

}  // namespace

ParamPoly ParamPoly::gcd(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero()) return canonical_primitive(b);
  if (b.is_zero()) return canonical_primitive(a);
  if (a.is_constant() && b.is_constant())
    return ParamPoly(rat_gcd(a.constant_value(), b.constant_value()));
  if (a.is_constant())
    return ParamPoly(rat_gcd(a.constant_value(), rat_content(b)));
  if (b.is_constant())
    return ParamPoly(rat_gcd(rat_content(a), b.constant_value()));

  const int v0 = std::max(main_var(a), main_var(b));
  const auto v = static_cast<std::uint32_t>(v0);
  if (deg_in(a, v) == 0) return gcd(a, content_in(coeffs_in(b, v)));
  if (deg_in(b, v) == 0) return gcd(content_in(coeffs_in(a, v)), b);

  const ParamPoly ca = content_in(coeffs_in(a, v));
  const ParamPoly cb = content_in(coeffs_in(b, v));
  ParamPoly pa = a.div_exact(ca);
  ParamPoly pb = b.div_exact(cb);
  const ParamPoly c = gcd(ca, cb);
  if (deg_in(pa, v) < deg_in(pb, v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    ParamPoly r = prem(pa, pb, v);
    pa = std::move(pb);
    if (r.is_zero()) {
      pb = ParamPoly();
    } else {
      pb = r.div_exact(content_in(coeffs_in(r, v)));
    }
  }
  return canonical_primitive(c * pa);
}

Rational ParamPoly::evaluate(const std::vector<Rational>& values) const {
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational prod(t.coef);
    for (std::size_t k = 0; k < t.exps.size(); ++k) {
      if (t.exps[k] == 0) continue;
      if (k >= values.size())
        throw std::out_of_range("missing parameter value");
      for (std::uint32_t r = 0; r < t.exps[k]; ++r) prod *= values[k];
    }
    sum += prod;
  }
  return sum;
}

std::string ParamPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    const bool neg = t.coef < 0;
    if (i == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    const Rational mag = rat_abs(t.coef);
    std::string mono;
    for (std::size_t k = 0; k < t.exps.size(); ++k) {
      if (t.exps[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += k < names.size() ? names[k]
                               : "p" + std::to_string(k);
      if (t.exps[k] > 1) mono += "^" + std::to_string(t.exps[k]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

Scalar::Scalar(ParamPoly numerator, ParamPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  normalize();
}

void Scalar::normalize() {
  if (den_.is_zero()) throw scalar_division_error("scalar division by zero");
  if (num_.is_zero()) {
    den_ = ParamPoly(Rational(1));
    return;
  }
  const ParamPoly g = ParamPoly::gcd(num_, den_);
  num_ = num_.div_exact(g);
  den_ = den_.div_exact(g);
  Rational c = rat_content(den_);
  if (den_.terms()[0].coef < 0) c = -c;
  if (c != 1) {
    const Rational inv = Rational(1) / c;
    num_ = scale(num_, inv);
    den_ = scale(den_, inv);
  }
}

bool Scalar::is_one() const {
  return den_.is_constant() && den_.constant_value() == 1 &&
         num_.is_constant() && num_.constant_value() == 1;
}

bool Scalar::is_minus_one() const {
  return den_.is_constant() && den_.constant_value() == 1 &&
         num_.is_constant() && num_.constant_value() == -1;
}

bool Scalar::is_negative() const {
  return !num_.is_zero() && num_.terms()[0].coef < 0;
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  s.num_ = -s.num_;
  return s;
}

Scalar Scalar::operator+(const Scalar& rhs) const {
  return Scalar(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

Scalar Scalar::operator-(const Scalar& rhs) const { return *this + (-rhs); }

Scalar Scalar::operator*(const Scalar& rhs) const {
  return Scalar(num_ * rhs.num_, den_ * rhs.den_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw scalar_division_error("inverse of zero scalar");
  return Scalar(den_, num_);
}

std::optional<Rational> Scalar::evaluate(
    const std::vector<Rational>& values) const {
  const Rational d = den_.evaluate(values);
  if (d == 0) return std::nullopt;
  return num_.evaluate(values) / d;
}

std::string Scalar::str(const std::vector<std::string>& names) const {
  if (den_.is_constant()) return num_.str(names);
  std::string out;
  if (num_.terms().size() > 1) {
    out = "(" + num_.str(names) + ")";
  } else {
    out = num_.str(names);
  }
  out += "/(" + den_.str(names) + ")";
  return out;
}

bool Scalar::needs_parens() const {
  if (!den_.is_constant()) return true;
  return num_.terms().size() > 1;
}

}  // namespace freegb

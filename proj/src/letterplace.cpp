#include "freegb/letterplace.hpp"

#include <algorithm>

namespace freegb {

int LPPoly::body_cmp(const Word& a, const Word& b) {
  for (std::size_t i = a.size(); i > 0; --i) {
    const int c = letter_cmp(static_cast<Letter>(a[i - 1]),
                             static_cast<Letter>(b[i - 1]));
    if (c != 0) return c;
  }
  return 0;
}

LPPoly::LPPoly(std::uint32_t offset, std::vector<LPTerm> terms)
    : offset_(offset) {
  for (const auto& t : terms) {
    if (t.body.size() != terms[0].body.size())
      throw std::invalid_argument("letterplace term lengths differ");
  }
  std::sort(terms.begin(), terms.end(), [](const LPTerm& a, const LPTerm& b) {
    return body_cmp(a.body, b.body) > 0;
  });
  for (auto& t : terms) {
    if (t.coef.is_zero()) continue;
    if (!terms_.empty() && terms_.back().body == t.body) {
      terms_.back().coef = terms_.back().coef + t.coef;
      if (terms_.back().coef.is_zero()) terms_.pop_back();
    } else {
      terms_.push_back(std::move(t));
    }
  }
}

LPPoly LPPoly::monic() const {
  if (is_zero()) return *this;
  LPPoly out(*this);
  const Scalar inv = lead().coef.inverse();
  for (auto& t : out.terms_) t.coef = t.coef * inv;
  return out;
}

LPPoly LPPoly::shifted(std::uint32_t by) const {
  LPPoly out(*this);
  out.offset_ += by;
  return out;
}

LPPoly LPPoly::with_offset(std::uint32_t offset) const {
  LPPoly out(*this);
  out.offset_ = offset;
  return out;
}

LPPoly LPPoly::tail() const {
  LPPoly out;
  out.offset_ = offset_;
  out.terms_.assign(terms_.begin() + (terms_.empty() ? 0 : 1), terms_.end());
  return out;
}

LPPoly LPPoly::minus_scaled(const LPPoly& rhs, const Scalar& factor) const {
  if (rhs.is_zero() || factor.is_zero()) return *this;
  if (is_zero()) {
    LPPoly out(rhs);
    for (auto& t : out.terms_) t.coef = t.coef * -factor;
    return out;
  }
  if (offset_ != rhs.offset_ || length() != rhs.length())
    throw std::invalid_argument("letterplace supports differ");
  LPPoly out;
  out.offset_ = offset_;
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
      c = body_cmp(terms_[i].body, rhs.terms_[j].body);
    }
    if (c > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back({rhs.terms_[j].coef * -factor, rhs.terms_[j].body});
      ++j;
    } else {
      Scalar coef = terms_[i].coef - factor * rhs.terms_[j].coef;
      if (!coef.is_zero())
        out.terms_.push_back({std::move(coef), terms_[i].body});
      ++i;
      ++j;
    }
  }
  return out;
}

bool LPPoly::operator==(const LPPoly& rhs) const {
  if (is_zero() && rhs.is_zero()) return true;
  if (offset_ != rhs.offset_ || terms_.size() != rhs.terms_.size())
    return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].body != rhs.terms_[i].body) return false;
    if (terms_[i].coef != rhs.terms_[i].coef) return false;
  }
  return true;
}

std::string LPPoly::str(const Alphabet& ab) const {
  std::vector<std::pair<Scalar, std::string>> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < t.body.size(); ++i) {
      if (!mono.empty()) mono += "*";
      mono += ab.letter_names.at(static_cast<unsigned char>(t.body[i]));
      mono += "(" + std::to_string(offset_ + i + 1) + ")";
    }
    ts.push_back({t.coef, std::move(mono)});
  }
  return poly_string(ts, ab);
}

LPPoly embed(const FreePoly& f) {
  std::vector<LPTerm> ts;
  ts.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    if (t.word.size() != f.terms()[0].word.size())
      throw std::invalid_argument("embedding a nonhomogeneous polynomial");
    ts.push_back({t.coef, t.word});
  }
  return LPPoly(0, std::move(ts));
}

FreePoly unembed(const LPPoly& p, Order order) {
  std::vector<FreeTerm> ts;
  ts.reserve(p.terms().size());
  for (const auto& t : p.terms()) ts.push_back({t.coef, t.body});
  return FreePoly::from_terms(std::move(ts), order);
}

std::size_t saturate(LPPoly& p) {
  if (p.is_zero()) return 0;
  std::size_t mu = p.length();
  for (const auto& t : p.terms()) {
    std::size_t run = 0;
    while (run < t.body.size() &&
           t.body[t.body.size() - 1 - run] == static_cast<char>(pad_letter)) {
      ++run;
    }
    mu = std::min(mu, run);
  }
  if (mu == 0) return 0;
  if (mu == p.length())
    throw inconsistent_ideal("ideal contains a nonzero scalar");
  std::vector<LPTerm> ts;
  ts.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    ts.push_back({t.coef, t.body.substr(0, t.body.size() - mu)});
  }
  // Dropping a shared suffix of padding places never reorders terms.
  p = LPPoly(p.offset(), std::move(ts));
  return mu;
}

std::optional<std::pair<std::uint32_t, Word>> lp_lcm(const LPPoly& f,
                                                     std::uint32_t fshift,
                                                     const LPPoly& g,
                                                     std::uint32_t gshift) {
  const std::uint32_t af = f.offset() + fshift;
  const std::uint32_t ag = g.offset() + gshift;
  const Word& wf = f.lead().body;
  const Word& wg = g.lead().body;
  const std::uint32_t tf = af + static_cast<std::uint32_t>(wf.size());
  const std::uint32_t tg = ag + static_cast<std::uint32_t>(wg.size());
  const std::uint32_t lo = std::min(af, ag);
  const std::uint32_t hi = std::max(tf, tg);
  if (std::max(af, ag) >= std::min(tf, tg)) return std::nullopt;  // disjoint
  Word lcm(hi - lo, static_cast<char>(pad_letter));
  for (std::size_t i = 0; i < wf.size(); ++i) lcm[af - lo + i] = wf[i];
  for (std::size_t i = 0; i < wg.size(); ++i) {
    const std::size_t pos = ag - lo + i;
    if (pos >= af - lo && pos < af - lo + wf.size() && lcm[pos] != wg[i])
      return std::nullopt;  // shared place with different letters
    lcm[pos] = wg[i];
  }
  return std::make_pair(lo, std::move(lcm));
}

LPPoly lp_spoly(const LPPoly& f, std::uint32_t fshift, const LPPoly& g,
                std::uint32_t gshift) {
  const auto lcm = lp_lcm(f, fshift, g, gshift);
  if (!lcm) throw std::invalid_argument("pair windows admit no lcm");
  const auto& [lo, word] = *lcm;
  const std::uint32_t pf = f.offset() + fshift - lo;
  const std::uint32_t pg = g.offset() + gshift - lo;
  const Scalar invf = f.lead().coef.inverse();
  const Scalar invg = g.lead().coef.inverse();
  std::vector<LPTerm> ts;
  ts.reserve(f.terms().size() + g.terms().size());
  for (const auto& t : f.terms()) {
    Word body = word;
    body.replace(pf, t.body.size(), t.body);
    ts.push_back({t.coef * invf, std::move(body)});
  }
  for (const auto& t : g.terms()) {
    Word body = word;
    body.replace(pg, t.body.size(), t.body);
    ts.push_back({-(t.coef * invg), std::move(body)});
  }
  return LPPoly(lo, std::move(ts));
}

}  // namespace freegb

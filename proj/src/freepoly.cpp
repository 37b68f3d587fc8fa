#include "freegb/freepoly.hpp"

#include <algorithm>

namespace freegb {

FreePoly FreePoly::from_terms(std::vector<FreeTerm> terms, Order order) {
  std::sort(terms.begin(), terms.end(), [order](const FreeTerm& a,
                                                const FreeTerm& b) {
    return word_cmp(a.word, b.word, order) > 0;
  });
  FreePoly out;
  for (auto& t : terms) {
    if (t.coef.is_zero()) continue;
    if (!out.terms_.empty() && out.terms_.back().word == t.word) {
      out.terms_.back().coef = out.terms_.back().coef + t.coef;
      if (out.terms_.back().coef.is_zero()) out.terms_.pop_back();
    } else {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

FreePoly FreePoly::term(Scalar coef, Word word) {
  FreePoly out;
  if (!coef.is_zero()) out.terms_.push_back({std::move(coef), std::move(word)});
  return out;
}

int FreePoly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.word.size()));
  return d;
}

FreePoly FreePoly::add(const FreePoly& rhs, Order order) const {
  std::vector<FreeTerm> ts(terms_);
  ts.insert(ts.end(), rhs.terms_.begin(), rhs.terms_.end());
  return from_terms(std::move(ts), order);
}

FreePoly FreePoly::sub(const FreePoly& rhs, Order order) const {
  std::vector<FreeTerm> ts(terms_);
  for (const auto& t : rhs.terms_) ts.push_back({-t.coef, t.word});
  return from_terms(std::move(ts), order);
}

FreePoly FreePoly::mul(const FreePoly& rhs, Order order) const {
  std::vector<FreeTerm> ts;
  ts.reserve(terms_.size() * rhs.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : rhs.terms_) {
      ts.push_back({a.coef * b.coef, a.word + b.word});
    }
  }
  return from_terms(std::move(ts), order);
}

FreePoly FreePoly::scaled(const Scalar& factor) const {
  if (factor.is_zero()) return FreePoly();
  FreePoly out(*this);
  for (auto& t : out.terms_) t.coef = t.coef * factor;
  return out;
}

FreePoly FreePoly::monic() const {
  if (is_zero()) return *this;
  return scaled(lead().coef.inverse());
}

bool FreePoly::operator==(const FreePoly& rhs) const {
  if (terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].word != rhs.terms_[i].word) return false;
    if (terms_[i].coef != rhs.terms_[i].coef) return false;
  }
  return true;
}

std::string FreePoly::str(const Alphabet& ab) const {
  std::vector<std::pair<Scalar, std::string>> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    ts.push_back({t.coef, t.word.empty() ? "" : word_str(t.word, ab)});
  }
  return poly_string(ts, ab);
}

FreePoly homogenize(const FreePoly& f, Order order) {
  const int d = f.degree();
  if (d <= 0) return f;
  std::vector<FreeTerm> ts;
  ts.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Word w = t.word;
    w.append(static_cast<std::size_t>(d) - w.size(),
             static_cast<char>(pad_letter));
    ts.push_back({t.coef, std::move(w)});
  }
  return FreePoly::from_terms(std::move(ts), order);
}

FreePoly dehomogenize(const FreePoly& f, Order order) {
  std::vector<FreeTerm> ts;
  ts.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Word w = t.word;
    w.erase(std::remove(w.begin(), w.end(), static_cast<char>(pad_letter)),
            w.end());
    ts.push_back({t.coef, std::move(w)});
  }
  return FreePoly::from_terms(std::move(ts), order);
}

FreePoly reversed(const FreePoly& f, Order order) {
  std::vector<FreeTerm> ts;
  ts.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Word w = t.word;
    std::reverse(w.begin(), w.end());
    ts.push_back({t.coef, std::move(w)});
  }
  return FreePoly::from_terms(std::move(ts), order);
}

std::string poly_string(const std::vector<std::pair<Scalar, std::string>>& ts,
                        const Alphabet& ab) {
  if (ts.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [coef, mono] : ts) {
    const bool neg = coef.is_negative();
    const Scalar mag = neg ? -coef : coef;
    if (first) {
      if (neg) out += "- ";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    const std::string cs = mag.str(ab.param_names);
    if (mono.empty()) {
      out += cs;
    } else if (mag.is_one()) {
      out += mono;
    } else if (mag.needs_parens()) {
      out += "(" + cs + ")*" + mono;
    } else {
      out += cs + "*" + mono;
    }
  }
  return out;
}

}  // namespace freegb

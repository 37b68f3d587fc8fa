#include "freegb/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "freegb/letterplace.hpp"

namespace freegb::oracle {

namespace {

// An S-polynomial source: either the leads of left and right overlap in a
// word (right starting at pos), or right's lead sits inside left's at pos.
struct Amb {
  Word word;
  std::uint32_t left;
  std::uint32_t right;
  std::uint32_t pos;
  bool containment;
};

struct AmbLess {
  Order order;
  bool operator()(const Amb& a, const Amb& b) const {
    if (const int c = word_cmp(a.word, b.word, order)) return c < 0;
    if (a.left != b.left) return a.left < b.left;
    if (a.right != b.right) return a.right < b.right;
    if (a.pos != b.pos) return a.pos < b.pos;
    return a.containment < b.containment;
  }
};

FreePoly normal_form(FreePoly p, const std::vector<FreePoly>& basis,
                     Order order) {
  std::vector<FreeTerm> done;
  while (!p.is_zero()) {
    const Word& w = p.lead().word;
    bool reduced = false;
    for (const FreePoly& g : basis) {
      const Word& lm = g.lead().word;
      if (lm.size() > w.size()) continue;
      const std::size_t at = w.find(lm);
      if (at == Word::npos) continue;
      const FreePoly red =
          FreePoly::term(p.lead().coef, w.substr(0, at))
              .mul(g, order)
              .mul(FreePoly::term(Scalar(1), w.substr(at + lm.size())), order);
      p = p.sub(red, order);
      reduced = true;
      break;
    }
    if (!reduced) {
      done.push_back(p.lead());
      std::vector<FreeTerm> rest(p.terms().begin() + 1, p.terms().end());
      p = FreePoly::from_terms(std::move(rest), order);
    }
  }
  return FreePoly::from_terms(std::move(done), order);
}

struct Completion {
  Order order;
  std::size_t bound;
  std::vector<FreePoly> basis;
  std::set<Amb, AmbLess> queue;

  Completion(Order o, std::size_t b) : order(o), bound(b), queue(AmbLess{o}) {}

  void push_amb(Amb amb) {
    if (amb.word.size() > bound) return;
    queue.insert(std::move(amb));
  }

  // Overlap ambiguities with l's lead on the left, then both containment
  // directions; called once per oriented index pair.
  void enqueue_oriented(std::uint32_t l, std::uint32_t r) {
    const Word& a = basis[l].lead().word;
    const Word& b = basis[r].lead().word;
    for (std::size_t k = 1; k < std::min(a.size(), b.size()); ++k)
      if (a.compare(a.size() - k, k, b, 0, k) == 0)
        push_amb({a + b.substr(k), l, r,
                  static_cast<std::uint32_t>(a.size() - k), false});
    if (l != r && b.size() < a.size())
      for (std::size_t at = a.find(b); at != Word::npos;
           at = a.find(b, at + 1))
        push_amb({a, l, r, static_cast<std::uint32_t>(at), true});
  }

  void enqueue_pairs(std::uint32_t n) {
    for (std::uint32_t m = 0; m <= n; ++m) {
      enqueue_oriented(n, m);
      if (m != n) enqueue_oriented(m, n);
    }
  }

  FreePoly spoly(const Amb& amb) const {
    const FreePoly& f = basis[amb.left];
    const FreePoly& g = basis[amb.right];
    const FreePoly pre =
        FreePoly::term(Scalar(1), amb.word.substr(0, amb.pos));
    const FreePoly post = FreePoly::term(
        Scalar(1), amb.word.substr(amb.pos + g.lead().word.size()));
    const FreePoly rg = pre.mul(g, order).mul(post, order);
    if (amb.containment) return f.sub(rg, order);
    const FreePoly lf = f.mul(
        FreePoly::term(Scalar(1), amb.word.substr(f.lead().word.size())),
        order);
    return lf.sub(rg, order);
  }

  void insert(FreePoly p) {
    p = normal_form(std::move(p), basis, order);
    if (p.is_zero()) return;
    if (p.lead().word.empty())
      throw inconsistent_ideal("ideal contains a nonzero scalar");
    basis.push_back(p.monic());
    enqueue_pairs(static_cast<std::uint32_t>(basis.size() - 1));
  }

  void run(const std::vector<FreePoly>& gens) {
    for (const FreePoly& g : gens) {
      if (g.is_zero()) continue;
      if (static_cast<std::size_t>(g.degree()) > bound)
        throw std::invalid_argument("degree bound below generator degree");
      // Callers may hand us generators sorted under a different order.
      insert(FreePoly::from_terms(
          std::vector<FreeTerm>(g.terms().begin(), g.terms().end()), order));
    }
    while (!queue.empty()) {
      const Amb amb = *queue.begin();
      queue.erase(queue.begin());
      insert(spoly(amb));
    }
  }

  std::vector<FreePoly> minimal() const {
    std::vector<std::size_t> by_size(basis.size());
    for (std::size_t i = 0; i < by_size.size(); ++i) by_size[i] = i;
    std::stable_sort(by_size.begin(), by_size.end(),
                     [this](std::size_t a, std::size_t b) {
                       return basis[a].lead().word.size() <
                              basis[b].lead().word.size();
                     });
    std::vector<FreePoly> kept;
    for (const std::size_t idx : by_size) {
      const Word& lm = basis[idx].lead().word;
      bool covered = false;
      for (const FreePoly& k : kept)
        covered = covered || lm.find(k.lead().word) != Word::npos;
      if (!covered) kept.push_back(basis[idx]);
    }
    for (FreePoly& k : kept) {
      std::vector<FreeTerm> rest(k.terms().begin() + 1, k.terms().end());
      const FreePoly tail =
          normal_form(FreePoly::from_terms(std::move(rest), order), kept,
                      order);
      std::vector<FreeTerm> ts;
      ts.push_back(k.lead());
      ts.insert(ts.end(), tail.terms().begin(), tail.terms().end());
      k = FreePoly::from_terms(std::move(ts), order);
    }
    std::stable_sort(kept.begin(), kept.end(),
                     [this](const FreePoly& a, const FreePoly& b) {
                       return word_cmp(a.lead().word, b.lead().word, order) >
                              0;
                     });
    return kept;
  }
};

}  // namespace

std::vector<FreePoly> groebner_basis(const std::vector<FreePoly>& gens,
                                     Order order, std::size_t degree_bound) {
  Completion c(order, degree_bound);
  c.run(gens);
  return c.minimal();
}

}  // namespace freegb::oracle

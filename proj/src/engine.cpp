#include "freegb/engine.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace freegb {

namespace {

std::string mono_str(std::uint32_t offset, const Word& body,
                     const Alphabet& ab) {
  std::string out;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (!out.empty()) out += "*";
    out += ab.letter_names.at(static_cast<unsigned char>(body[i]));
    out += "(" + std::to_string(offset + i + 1) + ")";
  }
  return out;
}

// t(1)*x(2) - x(1)*t(2): the relation that lets padding commute past x.
LPPoly commutator_poly(Letter x) {
  Word tx{static_cast<char>(pad_letter), static_cast<char>(x)};
  Word xt{static_cast<char>(x), static_cast<char>(pad_letter)};
  return LPPoly(0, {{Scalar(1), tx}, {Scalar(-1), xt}});
}

struct Entry {
  LPPoly poly;  // always monic
  bool commutator;
  std::string label;
};

struct PairKey {
  std::uint32_t lcm_offset;
  Word lcm;
  std::uint32_t left;
  std::uint32_t right;
  std::uint32_t left_shift;
  std::uint32_t right_shift;
};

// Normal selection strategy: smallest lcm monomial first, entry indices and
// shifts breaking ties.
struct PairKeyLess {
  bool operator()(const PairKey& a, const PairKey& b) const {
    if (const int c = place_cmp(a.lcm_offset, a.lcm, b.lcm_offset, b.lcm))
      return c < 0;
    if (a.left != b.left) return a.left < b.left;
    if (a.right != b.right) return a.right < b.right;
    if (a.left_shift != b.left_shift) return a.left_shift < b.left_shift;
    return a.right_shift < b.right_shift;
  }
};

// Shared reduction machinery: divisor search, window rewriting, normal forms,
// and the saturation loop.
struct Ctx {
  const Alphabet& ab;
  // Divisors apply only at their stored offset instead of at every shift.
  bool fixed_offsets = false;
  bool saturating = true;
  std::ostream* trace = nullptr;
  std::vector<Entry> entries;
  std::size_t saturations = 0;

  std::string entry_ref(std::size_t idx, std::size_t win) const {
    const Entry& e = entries[idx];
    if (fixed_offsets || win == 0) return e.label;
    return std::to_string(win) + "*" + e.label;
  }

  // First divisor of p's leading body: entries in insertion order, then
  // window positions left to right.
  std::optional<std::pair<std::size_t, std::size_t>> find_divisor(
      const LPPoly& p) const {
    const Word& body = p.lead().body;
    for (std::size_t idx = 0; idx < entries.size(); ++idx) {
      const LPPoly& e = entries[idx].poly;
      const std::size_t le = e.length();
      if (le == 0 || le > body.size()) continue;
      const Word& lm = e.lead().body;
      if (fixed_offsets) {
        if (e.offset() < p.offset()) continue;
        const std::size_t win = e.offset() - p.offset();
        if (win + le > body.size()) continue;
        if (body.compare(win, le, lm) == 0) return {{idx, win}};
      } else {
        for (std::size_t win = 0; win + le <= body.size(); ++win)
          if (body.compare(win, le, lm) == 0) return {{idx, win}};
      }
    }
    return std::nullopt;
  }

  // p's leading body with the divisor's window replaced by each of its
  // terms; subtracting leadcoef times this cancels the lead exactly because
  // the divisor is monic.
  LPPoly rewrite(const LPPoly& p, std::size_t idx, std::size_t win) const {
    const LPPoly& e = entries[idx].poly;
    const Word& body = p.lead().body;
    std::vector<LPTerm> ts;
    ts.reserve(e.terms().size());
    for (const LPTerm& t : e.terms()) {
      Word w = body;
      w.replace(win, e.length(), t.body);
      ts.push_back({t.coef, std::move(w)});
    }
    return LPPoly(p.offset(), std::move(ts));
  }

  LPPoly normal_form(LPPoly p) {
    if (p.is_zero()) return p;
    const std::uint32_t off = p.offset();
    std::vector<LPTerm> done;
    while (!p.is_zero()) {
      const auto div = find_divisor(p);
      if (!div) {
        // Rewrites only replace a lead with strictly smaller terms, so the
        // collected heads stay strictly descending.
        done.push_back(p.lead());
        p = p.tail();
        continue;
      }
      const LPPoly r = rewrite(p, div->first, div->second);
      p = p.minus_scaled(r, p.lead().coef);
      if (trace) {
        std::vector<LPTerm> all = done;
        all.insert(all.end(), p.terms().begin(), p.terms().end());
        *trace << "reduce by " << entry_ref(div->first, div->second) << " -> "
               << LPPoly(off, std::move(all)).str(ab) << "\n";
      }
    }
    return LPPoly(off, std::move(done));
  }

  // Full normal form, then strip trailing padding and reduce again until the
  // remainder is stable or vanishes.
  LPPoly reduce_saturate(LPPoly p) {
    for (;;) {
      p = normal_form(std::move(p));
      if (p.is_zero()) {
        if (trace) *trace << "reduced to 0\n";
        return p;
      }
      if (trace) *trace << "remainder = " << p.str(ab) << "\n";
      if (!saturating) return p;
      const std::size_t mu = saturate(p);
      if (mu == 0) return p;
      ++saturations;
      if (trace)
        *trace << "saturation: drop " << mu << " trailing t-places\n";
    }
  }
};

void sort_desc(std::vector<FreePoly>& v, Order order) {
  std::stable_sort(v.begin(), v.end(),
                   [order](const FreePoly& a, const FreePoly& b) {
                     return word_cmp(a.lead().word, b.lead().word, order) > 0;
                   });
}

class Engine {
 public:
  // free_mode pads generators and saturates remainders; otherwise the input
  // must already be homogeneous and runs without the padding letter.
  Engine(const Alphabet& ab, const EngineConfig& cfg, bool free_mode)
      : ctx_{ab}, cfg_(cfg), free_mode_(free_mode) {
    ctx_.fixed_offsets = cfg.variant == Variant::bas;
    ctx_.saturating = free_mode;
    ctx_.trace = cfg.trace ? cfg.trace_out : nullptr;
  }

  GBResult run(const std::vector<FreePoly>& gens) {
    seed(gens);
    seeding_ = false;
    process_queue();
    return finish();
  }

 private:
  Ctx ctx_;
  EngineConfig cfg_;
  bool free_mode_;
  bool seeding_ = true;
  std::set<PairKey, PairKeyLess> queue_;
  RunStats stats_;
  bool truncated_ = false;
  std::size_t next_g_ = 1;
  std::size_t next_d_ = 1;

  std::ostream* tr() const { return ctx_.trace; }

  std::string side_ref(std::uint32_t idx, std::uint32_t shift) const {
    const std::string& label = ctx_.entries[idx].label;
    if (cfg_.variant == Variant::bas || shift == 0) return label;
    return std::to_string(shift) + "*" + label;
  }

  void seed(const std::vector<FreePoly>& gens) {
    std::vector<FreePoly> live;
    for (const FreePoly& g : gens) {
      if (g.is_zero()) continue;
      if (g.degree() == 0)
        throw inconsistent_ideal("ideal contains a nonzero scalar");
      live.push_back(free_mode_ ? homogenize(g, Order::right) : g);
    }
    std::size_t max_len = 0;
    for (const FreePoly& g : live)
      max_len = std::max(max_len, static_cast<std::size_t>(g.degree()));
    const std::size_t bound = cfg_.weight_bound;
    if (max_len > bound)
      throw std::invalid_argument("weight bound below generator degree");
    if (free_mode_ && !live.empty() && bound < 2)
      throw std::invalid_argument("weight bound below commutator degree");

    const bool bas = cfg_.variant == Variant::bas;
    if (free_mode_ && !live.empty()) {
      for (std::size_t x = 1; x <= ctx_.ab.letter_count(); ++x) {
        const LPPoly d = commutator_poly(static_cast<Letter>(x));
        const std::size_t copies = bas ? bound - 1 : 1;
        for (std::size_t o = 0; o < copies; ++o)
          insert_entry(bas ? d.with_offset(static_cast<std::uint32_t>(o)) : d,
                       true);
      }
    }
    for (const FreePoly& g : live) {
      const LPPoly p = embed(g);
      const std::size_t copies = bas ? bound - p.length() + 1 : 1;
      stats_.seeds += copies;
      for (std::size_t o = 0; o < copies; ++o) {
        LPPoly cand =
            bas ? p.with_offset(static_cast<std::uint32_t>(o)) : p;
        cand = ctx_.reduce_saturate(std::move(cand));
        if (!cand.is_zero()) insert_entry(std::move(cand), false);
      }
    }
  }

  void insert_entry(LPPoly p, bool commutator) {
    p = p.monic();
    for (const Entry& e : ctx_.entries)
      if (e.poly == p) return;
    std::string label = (commutator ? "d" : "g") +
                        std::to_string(commutator ? next_d_++ : next_g_++);
    if (tr())
      *tr() << (seeding_ ? "seed " : "new ") << label << " = "
            << p.str(ctx_.ab) << "\n";
    ctx_.entries.push_back({std::move(p), commutator, std::move(label)});
    enqueue_pairs(ctx_.entries.size() - 1);
  }

  void enqueue_pairs(std::size_t n) {
    if (cfg_.variant == Variant::bas) {
      for (std::size_t m = 0; m < n; ++m) try_enqueue(m, n, 0, 0);
      return;
    }
    for (std::size_t m = 0; m <= n; ++m) {
      enqueue_oriented(n, m);
      if (m != n) enqueue_oriented(m, n);
    }
  }

  // Right shifts of the right member; Variant::noc also walks the left
  // member's shifts as separate queue entries.
  void enqueue_oriented(std::size_t l, std::size_t r) {
    const std::size_t ll = ctx_.entries[l].poly.length();
    const std::size_t lr = ctx_.entries[r].poly.length();
    for (std::size_t i = (l == r) ? 1 : 0; i < ll; ++i)
      try_enqueue(l, r, 0, static_cast<std::uint32_t>(i));
    if (cfg_.variant == Variant::noc)
      for (std::size_t j = 1; j < lr; ++j)
        try_enqueue(l, r, static_cast<std::uint32_t>(j), 0);
  }

  void try_enqueue(std::size_t l, std::size_t r, std::uint32_t ls,
                   std::uint32_t rs) {
    const auto lcm =
        lp_lcm(ctx_.entries[l].poly, ls, ctx_.entries[r].poly, rs);
    if (!lcm) return;
    if (lcm->first + lcm->second.size() > cfg_.weight_bound) {
      truncated_ = true;
      return;
    }
    queue_.insert({lcm->first, lcm->second, static_cast<std::uint32_t>(l),
                   static_cast<std::uint32_t>(r), ls, rs});
  }

  void process_queue() {
    while (!queue_.empty()) {
      const PairKey k = *queue_.begin();
      queue_.erase(queue_.begin());
      ++stats_.pairs_reduced;
      if (tr())
        *tr() << "pair (" << side_ref(k.left, k.left_shift) << ", "
              << side_ref(k.right, k.right_shift)
              << ") lcm = " << mono_str(k.lcm_offset, k.lcm, ctx_.ab) << "\n";
      LPPoly s = lp_spoly(ctx_.entries[k.left].poly, k.left_shift,
                          ctx_.entries[k.right].poly, k.right_shift);
      if (tr())
        *tr() << "spoly(" << side_ref(k.left, k.left_shift) << ", "
              << side_ref(k.right, k.right_shift) << ") = " << s.str(ctx_.ab)
              << "\n";
      LPPoly rem = ctx_.reduce_saturate(std::move(s));
      if (!rem.is_zero()) insert_entry(std::move(rem), false);
    }
  }

  FreePoly out_poly(const LPPoly& p) const {
    const FreePoly f = unembed(p, Order::right);
    return free_mode_ ? dehomogenize(f, Order::right) : f;
  }

  GBResult finish() {
    GBResult res;
    res.truncated = truncated_;

    // Offset-normalized, deduplicated proper entries.
    std::vector<LPPoly> basis;
    for (const Entry& e : ctx_.entries) {
      if (e.commutator) continue;
      LPPoly p = e.poly.with_offset(0);
      bool dup = false;
      for (const LPPoly& q : basis) dup = dup || q == p;
      if (!dup) basis.push_back(std::move(p));
    }
    for (const LPPoly& p : basis) res.basis.push_back(out_poly(p));
    sort_desc(res.basis, Order::right);
    stats_.basis_count = res.basis.size();

    if (cfg_.minimalize) {
      std::vector<std::size_t> by_size(basis.size());
      std::iota(by_size.begin(), by_size.end(), 0);
      std::stable_sort(by_size.begin(), by_size.end(),
                       [&basis](std::size_t a, std::size_t b) {
                         return basis[a].length() < basis[b].length();
                       });
      // An entry whose lead contains an earlier kept lead as a contiguous
      // subword is redundant.
      std::vector<std::size_t> kept;
      for (const std::size_t idx : by_size) {
        bool covered = false;
        for (const std::size_t k : kept)
          covered = covered ||
                    basis[idx].lead().body.find(basis[k].lead().body) !=
                        Word::npos;
        if (!covered) kept.push_back(idx);
      }
      if (cfg_.tail_reduce && !kept.empty()) {
        Ctx tctx{ctx_.ab};
        tctx.saturating = false;
        if (free_mode_)
          for (std::size_t x = 1; x <= ctx_.ab.letter_count(); ++x)
            tctx.entries.push_back(
                {commutator_poly(static_cast<Letter>(x)), true, {}});
        for (const std::size_t k : kept)
          tctx.entries.push_back({basis[k], false, {}});
        for (const std::size_t k : kept) {
          const LPPoly nf = tctx.normal_form(basis[k].tail());
          std::vector<LPTerm> ts;
          ts.push_back(basis[k].lead());
          ts.insert(ts.end(), nf.terms().begin(), nf.terms().end());
          basis[k] = LPPoly(0, std::move(ts));
        }
      }
      for (const std::size_t k : kept) {
        res.minimal_basis.push_back(out_poly(basis[k]));
        stats_.max_degree =
            std::max(stats_.max_degree, static_cast<int>(basis[k].length()));
      }
      sort_desc(res.minimal_basis, Order::right);
    } else {
      for (const LPPoly& p : basis)
        stats_.max_degree =
            std::max(stats_.max_degree, static_cast<int>(p.length()));
    }

    res.certified_complete =
        certified_complete(stats_.max_degree, cfg_.weight_bound);
    stats_.saturations = ctx_.saturations;
    res.stats = stats_;
    return res;
  }
};

GBResult run_engine(const std::vector<FreePoly>& gens, const Alphabet& ab,
                    Order order, const EngineConfig& cfg, bool free_mode) {
  if (order == Order::left) {
    // A left-order run is the mirror image of a right-order run on reversed
    // words; the trace therefore shows the reversed encoding.
    std::vector<FreePoly> rev;
    rev.reserve(gens.size());
    for (const FreePoly& g : gens) rev.push_back(reversed(g, Order::right));
    GBResult res = run_engine(rev, ab, Order::right, cfg, free_mode);
    for (FreePoly& b : res.basis) b = reversed(b, Order::left);
    for (FreePoly& b : res.minimal_basis) b = reversed(b, Order::left);
    sort_desc(res.basis, Order::left);
    sort_desc(res.minimal_basis, Order::left);
    return res;
  }
  Engine e(ab, cfg, free_mode);
  return e.run(gens);
}

}  // namespace

GBResult groebner_basis(const std::vector<FreePoly>& gens, const Alphabet& ab,
                        Order order, const EngineConfig& cfg) {
  return run_engine(gens, ab, order, cfg, true);
}

GBResult homogeneous_groebner_basis(const std::vector<FreePoly>& gens,
                                    const Alphabet& ab, Order order,
                                    const EngineConfig& cfg) {
  for (const FreePoly& g : gens)
    for (const FreeTerm& t : g.terms())
      if (t.word.size() != g.lead().word.size())
        throw std::invalid_argument("generator is not homogeneous");
  return run_engine(gens, ab, order, cfg, false);
}

bool certified_complete(int max_degree, std::size_t weight_bound) {
  if (max_degree <= 0) return true;
  return weight_bound >= 2 * static_cast<std::size_t>(max_degree) - 1;
}

bool verify_completion(const std::vector<FreePoly>& basis, const Alphabet& ab,
                       Order order, std::size_t weight_bound) {
  if (order == Order::left) {
    std::vector<FreePoly> rev;
    rev.reserve(basis.size());
    for (const FreePoly& b : basis) rev.push_back(reversed(b, Order::right));
    return verify_completion(rev, ab, Order::right, weight_bound);
  }
  Ctx ctx{ab};
  ctx.saturating = false;
  for (std::size_t x = 1; x <= ab.letter_count(); ++x)
    ctx.entries.push_back({commutator_poly(static_cast<Letter>(x)), true, {}});
  for (const FreePoly& b : basis) {
    if (b.is_zero()) continue;
    ctx.entries.push_back(
        {embed(homogenize(b, Order::right)).monic(), false, {}});
  }
  const std::size_t n = ctx.entries.size();
  for (std::size_t l = 0; l < n; ++l) {
    const std::size_t ll = ctx.entries[l].poly.length();
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t i = (l == r) ? 1 : 0; i < ll; ++i) {
        const auto lcm = lp_lcm(ctx.entries[l].poly, 0, ctx.entries[r].poly,
                                static_cast<std::uint32_t>(i));
        if (!lcm) continue;
        if (lcm->first + lcm->second.size() > weight_bound) continue;
        LPPoly s = lp_spoly(ctx.entries[l].poly, 0, ctx.entries[r].poly,
                            static_cast<std::uint32_t>(i));
        if (!ctx.reduce_saturate(std::move(s)).is_zero()) return false;
      }
  }
  return true;
}

}  // namespace freegb

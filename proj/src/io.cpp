#include "freegb/io.hpp"

#include <cctype>
#include <sstream>

#include "freegb/oracle.hpp"

namespace freegb {

namespace {

std::string located(const std::string& msg, int line, int col) {
  std::ostringstream out;
  out << "line " << line << ", col " << col << ": " << msg;
  return out.str();
}

struct Tok {
  enum Kind { name, number, op, end } kind;
  std::string text;
  int col;  // 1-based
};

std::vector<Tok> lex_line(const std::string& s, int line) {
  std::vector<Tok> toks;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i + 1;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      toks.push_back({Tok::name, s.substr(i, j - i), col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
        ++j;
      toks.push_back({Tok::number, s.substr(i, j - i), col});
      i = j;
    } else if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^' ||
               c == '(' || c == ')') {
      toks.push_back({Tok::op, std::string(1, c), col});
      ++i;
    } else {
      throw parse_error(std::string("unexpected character '") + c + "'", line,
                        col);
    }
  }
  toks.push_back({Tok::end, "", static_cast<int>(s.size()) + 1});
  return toks;
}

// Recursive descent over one expression line. All intermediate arithmetic
// runs under the right order; the caller re-sorts the result if needed.
struct ExprParser {
  const Alphabet& ab;
  const std::vector<Tok>& toks;
  int line;
  std::size_t pos = 0;

  const Tok& peek() const { return toks[pos]; }
  Tok take() { return toks[pos++]; }

  [[noreturn]] void fail(const std::string& msg, const Tok& at) const {
    throw parse_error(msg, line, at.col);
  }

  bool at_op(char c) const {
    return peek().kind == Tok::op && peek().text[0] == c;
  }

  FreePoly parse() {
    FreePoly v = expr();
    if (peek().kind != Tok::end) fail("trailing input", peek());
    return v;
  }

  FreePoly expr() {
    bool negate = false;
    if (at_op('-')) {
      take();
      negate = true;
    } else if (at_op('+')) {
      take();
    }
    FreePoly v = term();
    if (negate) v = v.scaled(Scalar(-1));
    while (at_op('+') || at_op('-')) {
      const bool sub = take().text[0] == '-';
      FreePoly rhs = term();
      v = sub ? v.sub(rhs, Order::right) : v.add(rhs, Order::right);
    }
    return v;
  }

  FreePoly term() {
    FreePoly v = factor();
    while (at_op('*') || at_op('/')) {
      const Tok op = take();
      FreePoly rhs = factor();
      if (op.text[0] == '*') {
        v = v.mul(rhs, Order::right);
      } else {
        if (rhs.is_zero()) fail("division by zero", op);
        if (rhs.terms().size() != 1 || !rhs.lead().word.empty())
          fail("division by a nonscalar", op);
        v = v.scaled(rhs.lead().coef.inverse());
      }
    }
    return v;
  }

  FreePoly factor() {
    FreePoly v = primary();
    if (at_op('^')) {
      take();
      if (peek().kind != Tok::number) fail("expected an exponent", peek());
      const Tok e = take();
      if (e.text.size() > 4) fail("exponent too large", e);
      const unsigned long n = std::stoul(e.text);
      if (n > 4096) fail("exponent too large", e);
      FreePoly out = FreePoly::term(Scalar(1), Word());
      for (unsigned long k = 0; k < n; ++k) out = out.mul(v, Order::right);
      v = std::move(out);
    }
    return v;
  }

  FreePoly primary() {
    const Tok tok = take();
    if (tok.kind == Tok::number)
      return FreePoly::term(Scalar(Rational(mpz_class(tok.text))), Word());
    if (tok.kind == Tok::name) {
      const int li = ab.letter_index(tok.text);
      if (li >= 1)
        return FreePoly::term(Scalar(1),
                              Word(1, static_cast<Letter>(li)));
      const int pi = ab.param_index(tok.text);
      if (pi >= 0)
        return FreePoly::term(
            Scalar::parameter(static_cast<std::uint32_t>(pi)), Word());
      fail("unknown name '" + tok.text + "'", tok);
    }
    if (tok.kind == Tok::op && tok.text[0] == '(') {
      FreePoly v = expr();
      if (!at_op(')')) fail("expected ')'", peek());
      take();
      return v;
    }
    fail("expected a name, number, or '('", tok);
  }
};

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::string strip(const std::string& raw) {
  std::string s = raw.substr(0, raw.find('%'));
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

parse_error::parse_error(const std::string& msg, int line, int col)
    : std::runtime_error(located(msg, line, col)), line(line), col(col) {}

Presentation parse_presentation(const std::string& text) {
  Presentation p;
  bool have_vars = false;
  std::vector<std::string> letters;
  std::vector<std::string> params;
  std::vector<std::pair<int, std::string>> gen_lines;
  bool in_gens = false;
  int vars_line = 0;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = strip(raw);
    if (s.empty()) continue;
    if (in_gens) {
      gen_lines.emplace_back(line, s);
      continue;
    }
    if (s == "gens:") {
      in_gens = true;
      continue;
    }
    const std::size_t sp = s.find_first_of(" \t");
    const std::string key = s.substr(0, sp);
    const std::string rest =
        sp == std::string::npos ? std::string() : strip(s.substr(sp));
    if (key == "label") {
      p.label = rest;
    } else if (key == "vars") {
      if (have_vars) throw parse_error("duplicate vars line", line, 1);
      have_vars = true;
      vars_line = line;
      std::string chunk;
      std::istringstream parts(rest);
      while (std::getline(parts, chunk, '>')) {
        const std::string name = strip(chunk);
        if (name.empty()) throw parse_error("empty letter name", line, 1);
        letters.push_back(name);
      }
      if (letters.empty()) throw parse_error("empty letter name", line, 1);
    } else if (key == "params") {
      params = split_ws(rest);
    } else if (key == "degbound") {
      std::size_t used = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(rest, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != rest.size() || v == 0)
        throw parse_error("degbound needs a positive integer", line, 1);
      p.default_bound = v;
    } else if (key == "order") {
      const auto o = order_from_name(rest);
      if (!o) throw parse_error("unknown order '" + rest + "'", line, 1);
      p.default_order = *o;
    } else if (key == "variant") {
      const auto v = variant_from_name(rest);
      if (!v) throw parse_error("unknown variant '" + rest + "'", line, 1);
      p.default_variant = *v;
    } else {
      throw parse_error("unknown directive '" + key + "'", line, 1);
    }
  }

  if (!have_vars) throw parse_error("missing vars line", line, 1);
  try {
    p.alphabet = Alphabet::make(letters, params);
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what(), vars_line, 1);
  }

  for (const auto& [ln, s] : gen_lines) {
    const std::vector<Tok> toks = lex_line(s, ln);
    ExprParser ep{p.alphabet, toks, ln};
    FreePoly g = ep.parse();
    // Arithmetic above ran under the right order; store under the
    // presentation's own order so emit_input round-trips exactly.
    p.gens.push_back(FreePoly::from_terms(
        std::vector<FreeTerm>(g.terms().begin(), g.terms().end()),
        p.default_order));
  }
  return p;
}

std::string emit_input(const Presentation& p) {
  std::ostringstream out;
  if (!p.label.empty()) out << "label " << p.label << "\n";
  out << "vars";
  for (std::size_t i = 1; i < p.alphabet.letter_names.size(); ++i)
    out << (i == 1 ? " " : " > ") << p.alphabet.letter_names[i];
  out << "\n";
  if (!p.alphabet.param_names.empty()) {
    out << "params";
    for (const std::string& q : p.alphabet.param_names) out << " " << q;
    out << "\n";
  }
  if (p.default_bound != 0) out << "degbound " << p.default_bound << "\n";
  out << "order " << order_name(p.default_order) << "\n";
  if (p.default_variant != Variant::std)
    out << "variant " << variant_name(p.default_variant) << "\n";
  out << "gens:\n";
  for (const FreePoly& g : p.gens) out << g.str(p.alphabet) << "\n";
  return out.str();
}

RunRecord execute(const RunRequest& req) {
  RunRecord rec;
  const Presentation& p = req.presentation;
  rec.order = req.order.value_or(p.default_order);
  rec.variant = req.variant.value_or(p.default_variant);
  rec.degbound = req.degbound.value_or(p.default_bound);
  if (rec.degbound == 0)
    throw std::invalid_argument("no degree bound given");

  EngineConfig cfg;
  cfg.weight_bound = rec.degbound;
  cfg.variant = rec.variant;
  cfg.minimalize = req.minimalize;
  cfg.tail_reduce = req.tail_reduce;
  cfg.trace = req.trace;
  cfg.trace_out = req.trace_out;
  rec.result = req.homogeneous
                   ? homogeneous_groebner_basis(p.gens, p.alphabet, rec.order,
                                                cfg)
                   : groebner_basis(p.gens, p.alphabet, rec.order, cfg);

  if (req.check) {
    rec.checked = true;
    rec.oracle_basis = oracle::groebner_basis(p.gens, rec.order, rec.degbound);
    rec.check_passed = rec.oracle_basis == rec.result.minimal_basis;
  }
  return rec;
}

std::string render_record(const RunRecord& rec, const Presentation& p) {
  std::ostringstream out;
  if (!p.label.empty()) out << "label: " << p.label << "\n";
  out << "order: " << order_name(rec.order) << "\n";
  out << "variant: " << variant_name(rec.variant) << "\n";
  out << "degbound: " << rec.degbound << "\n";
  out << "gens: " << p.gens.size() << "\n";
  out << "pairs: " << rec.result.stats.pairs_reduced << "\n";
  out << "saturations: " << rec.result.stats.saturations << "\n";
  out << "seeds: " << rec.result.stats.seeds << "\n";
  out << "basis size: " << rec.result.stats.basis_count << "\n";
  out << "minimal size: " << rec.result.minimal_basis.size() << "\n";
  out << "max degree: " << rec.result.stats.max_degree << "\n";
  out << "certified: " << (rec.result.certified_complete ? "yes" : "no")
      << "\n";
  out << "truncated: " << (rec.result.truncated ? "yes" : "no") << "\n";
  if (rec.checked)
    out << "check: " << (rec.check_passed ? "ok" : "mismatch") << "\n";
  out << "basis:\n";
  for (const FreePoly& g : rec.result.basis)
    out << "  " << g.str(p.alphabet) << "\n";
  if (!rec.result.minimal_basis.empty()) {
    out << "minimal:\n";
    for (const FreePoly& g : rec.result.minimal_basis)
      out << "  " << g.str(p.alphabet) << "\n";
  }
  if (rec.checked && !rec.check_passed) {
    out << "oracle:\n";
    for (const FreePoly& g : rec.oracle_basis)
      out << "  " << g.str(p.alphabet) << "\n";
  }
  return out.str();
}

}  // namespace freegb

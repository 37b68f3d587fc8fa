#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "freegb/engine.hpp"

namespace freegb {

struct parse_error : std::runtime_error {
  int line;
  int col;
  parse_error(const std::string& msg, int line, int col);
};

// A parsed problem statement plus its preferred run options.
struct Presentation {
  Alphabet alphabet;
  std::vector<FreePoly> gens;
  std::string label;
  std::size_t default_bound = 0;
  Order default_order = Order::right;
  Variant default_variant = Variant::std;
};

// Text format: header lines "label <name>", "vars a > b > ...", "params q d",
// "degbound <n>", "order right|left", "variant std|noc|bas" in any order
// (vars is required), then "gens:" followed by one polynomial expression per
// line. "%" starts a comment. Expressions use + - * / ^ ( ) with integer
// literals; "/" accepts scalar divisors only.
Presentation parse_presentation(const std::string& text);

// Canonical serialization; parse_presentation(emit_input(p)) rebuilds p.
std::string emit_input(const Presentation& p);

// One full run; unset options fall back to the presentation defaults.
struct RunRequest {
  Presentation presentation;
  std::optional<std::size_t> degbound;
  std::optional<Order> order;
  std::optional<Variant> variant;
  bool minimalize = true;
  bool tail_reduce = true;
  bool homogeneous = false;
  bool check = false;
  bool trace = false;
  std::ostream* trace_out = nullptr;
};

struct RunRecord {
  GBResult result;
  Order order = Order::right;
  Variant variant = Variant::std;
  std::size_t degbound = 0;
  bool checked = false;
  bool check_passed = true;
  std::vector<FreePoly> oracle_basis;
};

// Resolves the effective options, runs the engine, and optionally replays
// the generators through the word-level oracle for comparison. Throws
// std::invalid_argument when no degree bound is available.
RunRecord execute(const RunRequest& req);

// Flat key: value report followed by the basis listings.
std::string render_record(const RunRecord& rec, const Presentation& p);

}  // namespace freegb

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <sys/resource.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "freegb/corpus.hpp"
#include "freegb/io.hpp"

namespace {

using namespace freegb;

// Exit codes: 0 success, 1 usage/parse/check failure, 2 inconsistent ideal,
// 3 incomplete basis under --require-complete.
constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_inconsistent = 2;
constexpr int exit_incomplete = 3;

void apply_memory_limit() {
  const char* mb = std::getenv("FREEGB_MAX_MB");
  if (!mb) return;
  const unsigned long limit = std::strtoul(mb, nullptr, 10);
  if (limit == 0) return;
  rlimit rl{};
  rl.rlim_cur = rl.rlim_max = static_cast<rlim_t>(limit) * 1024 * 1024;
  setrlimit(RLIMIT_AS, &rl);
}

nlohmann::json to_json(const RunRecord& rec, const Presentation& p) {
  nlohmann::json out;
  out["label"] = p.label;
  out["order"] = order_name(rec.order);
  out["variant"] = variant_name(rec.variant);
  out["degbound"] = rec.degbound;
  out["gens"] = p.gens.size();
  out["pairs"] = rec.result.stats.pairs_reduced;
  out["saturations"] = rec.result.stats.saturations;
  out["seeds"] = rec.result.stats.seeds;
  out["max_degree"] = rec.result.stats.max_degree;
  out["certified"] = rec.result.certified_complete;
  out["truncated"] = rec.result.truncated;
  auto list = [&p](const std::vector<FreePoly>& ps) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& g : ps) arr.push_back(g.str(p.alphabet));
    return arr;
  };
  out["basis"] = list(rec.result.basis);
  out["minimal"] = list(rec.result.minimal_basis);
  if (rec.checked) {
    out["check"] = rec.check_passed ? "ok" : "mismatch";
    if (!rec.check_passed) out["oracle"] = list(rec.oracle_basis);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  apply_memory_limit();

  CLI::App app{"Two-sided Groebner bases in free associative algebras"};
  std::string input_file, example, order_name_opt, variant_name_opt;
  std::size_t degbound = 0;
  bool minimal_only = false, check = false, trace = false, json = false;
  bool require_complete = false, emit = false, homogeneous = false;

  auto* in = app.add_option("-i,--input", input_file,
                            "Input presentation file");
  auto* ex = app.add_option("-e,--example", example,
                            "Bundled example label (see --list)");
  in->excludes(ex);
  bool list = false;
  app.add_flag("--list", list, "List the bundled example labels");
  app.add_option("-d,--degbound", degbound, "Weight bound for the run");
  app.add_option("--order", order_name_opt, "Term order: right or left");
  app.add_option("--variant", variant_name_opt,
                 "Pair strategy: std, noc, or bas");
  app.add_flag("--minimal", minimal_only,
               "Print only the minimal basis, one polynomial per line");
  app.add_flag("--check", check,
               "Cross-check against the word-level algorithm");
  app.add_flag("--trace", trace, "Write the reduction trace to stderr");
  app.add_flag("--json", json, "Emit the report as JSON");
  app.add_flag("--require-complete", require_complete,
               "Fail unless the basis is certified complete");
  app.add_flag("--emit-input", emit,
               "Print the presentation in input format and exit");
  app.add_flag("--homogeneous", homogeneous,
               "Run without padding; generators must be homogeneous");
  CLI11_PARSE(app, argc, argv);

  try {
    if (list) {
      for (const auto& label : freegb::corpus::labels())
        std::cout << label << "\n";
      return exit_ok;
    }
    if (input_file.empty() == example.empty()) {
      std::cerr << "exactly one of --input or --example is required\n";
      return exit_error;
    }

    Presentation p;
    if (!example.empty()) {
      p = freegb::corpus::presentation(example);
    } else {
      std::ifstream in_stream(input_file);
      if (!in_stream) {
        std::cerr << "cannot open '" << input_file << "'\n";
        return exit_error;
      }
      std::ostringstream buf;
      buf << in_stream.rdbuf();
      p = parse_presentation(buf.str());
    }

    if (emit) {
      std::cout << emit_input(p);
      return exit_ok;
    }

    RunRequest req;
    req.presentation = p;
    if (degbound != 0) req.degbound = degbound;
    if (!order_name_opt.empty()) {
      const auto o = order_from_name(order_name_opt);
      if (!o) {
        std::cerr << "unknown order '" << order_name_opt << "'\n";
        return exit_error;
      }
      req.order = *o;
    }
    if (!variant_name_opt.empty()) {
      const auto v = variant_from_name(variant_name_opt);
      if (!v) {
        std::cerr << "unknown variant '" << variant_name_opt << "'\n";
        return exit_error;
      }
      req.variant = *v;
    }
    req.check = check;
    req.homogeneous = homogeneous;
    req.trace = trace;
    req.trace_out = &std::cerr;

    const RunRecord rec = execute(req);

    if (json)
      std::cout << to_json(rec, p).dump(2) << "\n";
    else if (minimal_only)
      for (const auto& g : rec.result.minimal_basis)
        std::cout << g.str(p.alphabet) << "\n";
    else
      std::cout << render_record(rec, p);

    if (rec.checked && !rec.check_passed) return exit_error;
    if (require_complete && !rec.result.certified_complete)
      return exit_incomplete;
    return exit_ok;
  } catch (const inconsistent_ideal&) {
    std::cerr << "inconsistent presentation: ideal contains 1\n";
    return exit_inconsistent;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_error;
  }
}

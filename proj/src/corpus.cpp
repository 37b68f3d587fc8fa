#include "freegb/corpus.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace freegb::corpus {

namespace {

// Hecke algebra of an n x n Coxeter matrix: one quadratic relation per
// generator plus a commutation or braid relation per unordered pair.
std::string hecke_text(const std::string& label,
                       const std::vector<std::vector<int>>& m,
                       std::size_t bound) {
  const std::size_t n = m.size();
  std::ostringstream out;
  out << "label " << label << "\nvars";
  for (std::size_t i = 1; i <= n; ++i)
    out << (i == 1 ? " " : " > ") << "T" << i;
  out << "\nparams q\ndegbound " << bound << "\norder left\ngens:\n";
  for (std::size_t i = 1; i <= n; ++i)
    out << "T" << i << "^2 - (q - 1)*T" << i << " - q\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::string a = "T" + std::to_string(i + 1);
      const std::string b = "T" + std::to_string(j + 1);
      if (m[i][j] == 2)
        out << a << "*" << b << " - " << b << "*" << a << "\n";
      else if (m[i][j] == 3)
        out << a << "*" << b << "*" << a << " - " << b << "*" << a << "*" << b
            << "\n";
      else
        throw std::invalid_argument("Coxeter entry out of range");
    }
  return out.str();
}

// Temperley-Lieb algebra on n generators with loop parameter d.
std::string templieb_text(const std::string& label, std::size_t n,
                          std::size_t bound) {
  std::ostringstream out;
  out << "label " << label << "\nvars";
  for (std::size_t i = 1; i <= n; ++i)
    out << (i == 1 ? " " : " > ") << "e" << i;
  out << "\nparams d\ndegbound " << bound << "\norder left\ngens:\n";
  for (std::size_t i = 1; i <= n; ++i)
    out << "e" << i << "^2 - d*e" << i << "\n";
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 2; j <= n; ++j)
      out << "e" << i << "*e" << j << " - e" << j << "*e" << i << "\n";
  for (std::size_t i = 1; i < n; ++i) {
    out << "e" << i << "*e" << i + 1 << "*e" << i << " - e" << i << "\n";
    out << "e" << i + 1 << "*e" << i << "*e" << i + 1 << " - e" << i + 1
        << "\n";
  }
  return out.str();
}

std::string lie5_text() {
  return "label lie5\n"
         "vars x1 > x2 > x3 > x4 > x5\n"
         "degbound 25\n"
         "order left\n"
         "gens:\n"
         "x1*x2 - x2*x1 - x3\n"
         "x1*x3 - x3*x1 - x4\n"
         "x2*x5 - x5*x2 - x4\n";
}

std::string lie7_text() {
  return "label lie7\n"
         "vars x1 > x2 > x3 > x4 > x5 > x6 > x7\n"
         "degbound 5\n"
         "order left\n"
         "gens:\n"
         "x1*x2 - x2*x1 - x3\n"
         "x1*x3 - x3*x1 - x4\n"
         "x1*x4 - x4*x1 - x5\n"
         "x1*x5 - x5*x1 - x6\n"
         "x2*x3 - x3*x2 - 1/2*x4 - 1/4*x5 + 1/8*x6 + 1/2*x7\n"
         "x2*x4 - x4*x2 - 1/2*x5 - 1/4*x6\n"
         "x2*x5 - x5*x2 - x6\n"
         "x2*x7 - x7*x2 - 1/2*x5 + 1/4*x6\n"
         "x3*x4 - x4*x3 + 1/2*x6\n"
         "x3*x7 - x7*x3 - 1/2*x6\n";
}

std::string klein_text() {
  return "label klein\n"
         "vars x > y\n"
         "degbound 10\n"
         "order right\n"
         "gens:\n"
         "x^2 - 1\n"
         "y^2 - 1\n"
         "(x*y)^2 - 1\n";
}

// The group <r,s | r^3, s^3, (rs)^3, [r,s]^2> with explicit inverse letters.
std::string g3332_text() {
  return "label g3332\n"
         "vars r > s > R > S\n"
         "degbound 10\n"
         "order left\n"
         "gens:\n"
         "r*R - 1\n"
         "R*r - 1\n"
         "s*S - 1\n"
         "S*s - 1\n"
         "r^3 - 1\n"
         "s^3 - 1\n"
         "(r*s)^3 - 1\n"
         "(R*S*r*s)^2 - 1\n";
}

std::string g444_text() {
  return "label g444\n"
         "vars a > b > c\n"
         "degbound 10\n"
         "order left\n"
         "gens:\n"
         "a^4 - 1\n"
         "b^4 - 1\n"
         "c^4 - 1\n"
         "(a*b)^2 - 1\n"
         "(b*c)^2 - 1\n"
         "(c*a)^2 - 1\n"
         "(a*b*c)^2 - 1\n";
}

const std::vector<std::vector<int>> coxeter_a = {
    {1, 3, 2, 3}, {3, 1, 3, 2}, {2, 3, 1, 3}, {3, 2, 3, 1}};
const std::vector<std::vector<int>> coxeter_d = {
    {1, 3, 2, 2}, {3, 1, 3, 3}, {2, 3, 1, 2}, {2, 3, 2, 1}};
const std::vector<std::vector<int>> coxeter_e = {
    {1, 2, 3, 2, 2, 2}, {2, 1, 2, 3, 2, 2}, {3, 2, 1, 3, 2, 2},
    {2, 3, 3, 1, 3, 2}, {2, 2, 2, 3, 1, 3}, {2, 2, 2, 2, 3, 1}};

}  // namespace

std::vector<std::string> labels() {
  return {"klein",  "g3332", "g444", "heckeA",    "heckeD",
          "heckeE", "lie5",  "lie7", "templieb8", "templieb9"};
}

std::string input_text(const std::string& label) {
  if (label == "klein") return klein_text();
  if (label == "g3332") return g3332_text();
  if (label == "g444") return g444_text();
  if (label == "heckeA") return hecke_text("heckeA", coxeter_a, 15);
  if (label == "heckeD") return hecke_text("heckeD", coxeter_d, 15);
  if (label == "heckeE") return hecke_text("heckeE", coxeter_e, 10);
  if (label == "lie5") return lie5_text();
  if (label == "lie7") return lie7_text();
  if (label == "templieb8") return templieb_text("templieb8", 7, 8);
  if (label == "templieb9") return templieb_text("templieb9", 8, 9);
  throw std::invalid_argument("unknown example '" + label + "'");
}

Presentation presentation(const std::string& label) {
  std::string base = label;
  std::size_t bound = 0;
  std::size_t ds = label.size();
  while (ds > 0 && std::isdigit(static_cast<unsigned char>(label[ds - 1])))
    --ds;
  if (ds < label.size() && ds >= 2 && label[ds - 1] == 'd') {
    base = label.substr(0, ds - 1);
    bound = std::stoul(label.substr(ds));
  }
  try {
    Presentation p = parse_presentation(input_text(base));
    if (bound != 0) p.default_bound = bound;
    return p;
  } catch (const std::invalid_argument&) {
    // The label may legitimately end in "d<N>"; retry it whole.
    if (base != label) return parse_presentation(input_text(label));
    throw;
  }
}

}  // namespace freegb::corpus

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace freegb {

// Letters are indices into Alphabet::letter_names, stored as raw bytes of a
// Word. Index 0 is the reserved padding letter used to equalize term degrees;
// declared letters follow in decreasing precedence.
using Letter = unsigned char;
using Word = std::string;

constexpr Letter pad_letter = 0;
inline const std::string pad_name = "t";

struct Alphabet {
  std::vector<std::string> letter_names;  // [0] == pad_name
  std::vector<std::string> param_names;

  std::size_t letter_count() const { return letter_names.size() - 1; }
  int letter_index(const std::string& name) const;  // -1 when unknown
  int param_index(const std::string& name) const;   // -1 when unknown

  // Validates and prepends the padding letter. Throws std::invalid_argument
  // on duplicate, empty, or reserved names.
  static Alphabet make(std::vector<std::string> letters,
                       std::vector<std::string> params = {});
};

// Renders a word with exponent grouping, e.g. "x^2*y"; the empty word is "1".
std::string word_str(const Word& w, const Alphabet& ab);

}  // namespace freegb

#include "freegb/alphabet.hpp"

#include <stdexcept>

namespace freegb {

int Alphabet::letter_index(const std::string& name) const {
  for (std::size_t i = 1; i < letter_names.size(); ++i) {
    if (letter_names[i] == name) return static_cast<int>(i);
  }
  return -1;
}

int Alphabet::param_index(const std::string& name) const {
  for (std::size_t i = 0; i < param_names.size(); ++i) {
    if (param_names[i] == name) return static_cast<int>(i);
  }
  return -1;
}

Alphabet Alphabet::make(std::vector<std::string> letters,
                        std::vector<std::string> params) {
  if (letters.empty()) throw std::invalid_argument("no letters declared");
  if (letters.size() > 255) throw std::invalid_argument("too many letters");
  Alphabet ab;
  ab.letter_names.reserve(letters.size() + 1);
  ab.letter_names.push_back(pad_name);
  for (auto& name : letters) {
    if (name.empty()) throw std::invalid_argument("empty letter name");
    if (name == pad_name)
      throw std::invalid_argument("letter name '" + pad_name + "' is reserved");
    ab.letter_names.push_back(std::move(name));
  }
  for (auto& name : params) {
    if (name.empty()) throw std::invalid_argument("empty parameter name");
    if (name == pad_name)
      throw std::invalid_argument("parameter name '" + pad_name +
                                  "' is reserved");
    ab.param_names.push_back(std::move(name));
  }
  for (std::size_t i = 0; i < ab.letter_names.size(); ++i) {
    for (std::size_t j = i + 1; j < ab.letter_names.size(); ++j) {
      if (ab.letter_names[i] == ab.letter_names[j])
        throw std::invalid_argument("duplicate letter '" + ab.letter_names[i] +
                                    "'");
    }
  }
  for (std::size_t i = 0; i < ab.param_names.size(); ++i) {
    for (std::size_t j = i + 1; j < ab.param_names.size(); ++j) {
      if (ab.param_names[i] == ab.param_names[j])
        throw std::invalid_argument("duplicate parameter '" +
                                    ab.param_names[i] + "'");
    }
    if (ab.letter_index(ab.param_names[i]) >= 0)
      throw std::invalid_argument("name '" + ab.param_names[i] +
                                  "' is both letter and parameter");
  }
  return ab;
}

std::string word_str(const Word& w, const Alphabet& ab) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t run = 1;
    while (i + run < w.size() && w[i + run] == w[i]) ++run;
    if (!out.empty()) out += "*";
    out += ab.letter_names.at(static_cast<unsigned char>(w[i]));
    if (run > 1) out += "^" + std::to_string(run);
    i += run;
  }
  return out;
}

}  // namespace freegb

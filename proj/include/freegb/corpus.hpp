#pragma once

#include <string>
#include <vector>

#include "freegb/io.hpp"

namespace freegb::corpus {

// Labels of the bundled example presentations.
std::vector<std::string> labels();

// Input-format source text for one bundled example; throws
// std::invalid_argument on an unknown label.
std::string input_text(const std::string& label);

// Parsed example. A "d<N>" suffix (e.g. "kleind6") selects the base example
// with its degree bound replaced by N.
Presentation presentation(const std::string& label);

}  // namespace freegb::corpus

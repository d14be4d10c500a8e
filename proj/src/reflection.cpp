#include "hermlat/reflection.hpp"

#include <sstream>

namespace hermlat {

GroupWord parse_word(std::string_view text) {
  GroupWord w;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    Letter letter;
    while (!token.empty() && token.back() == '\'') {
      letter.inverse = !letter.inverse;
      token.pop_back();
    }
    if (token.empty()) throw ReflectionError("parse_word: inverse mark without a label");
    letter.label = token;
    w.push_back(std::move(letter));
  }
  return w;
}

std::string format_word(const GroupWord& w) {
  std::string out;
  for (const auto& letter : w) {
    if (!out.empty()) out += ' ';
    out += letter.label;
    if (letter.inverse) out += '\'';
  }
  return out;
}

}  // namespace hermlat

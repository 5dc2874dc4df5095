#include "rfg/word.hpp"

#include <cstdlib>
#include <stdexcept>

namespace rfg {

Word reduce_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int letter : w) {
    if (letter == 0) throw std::invalid_argument("word: zero letter");
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

Word invert_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (std::size_t i = w.size(); i-- > 0;) out.push_back(-w[i]);
  return out;
}

Word concat_words(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return reduce_word(out);
}

Word commutator(const Word& u, const Word& v) {
  return concat_words(concat_words(invert_word(u), invert_word(v)), concat_words(u, v));
}

Word iterated_commutator(const std::vector<int>& letters) {
  if (letters.size() < 2) throw std::invalid_argument("iterated_commutator: need at least 2 letters");
  Word acc{letters[0]};
  for (std::size_t i = 1; i < letters.size(); ++i) acc = commutator(acc, Word{letters[i]});
  return acc;
}

Word parse_word(const std::string& s) {
  Word out;
  for (char c : s) {
    if (c >= 'a' && c <= 'z')
      out.push_back(c - 'a' + 1);
    else if (c >= 'A' && c <= 'Z')
      out.push_back(-(c - 'A' + 1));
    else if (c == ' ' || c == '.')
      continue;
    else
      throw std::invalid_argument(std::string("word: bad character '") + c + "'");
  }
  return reduce_word(out);
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int letter : w)
    out += static_cast<char>(letter > 0 ? 'a' + letter - 1 : 'A' - letter - 1);
  return out;
}

int max_generator(const Word& w) {
  int m = 0;
  for (int letter : w)
    if (std::abs(letter) > m) m = std::abs(letter);
  return m;
}

}  // namespace rfg

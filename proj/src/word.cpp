#include "dehn/word.hpp"

#include <algorithm>

namespace dehn {

Word::Word(std::vector<Letter> letters) {
  for (const Letter& l : letters) {
    if (!letters_.empty() && letters_.back().generator == l.generator &&
        letters_.back().exponent == -l.exponent)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

int Word::exponent_sum() const {
  int s = 0;
  for (const auto& l : letters_) s += l.exponent;
  return s;
}

Word Word::inverse() const {
  std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
  for (auto& l : inv) l.exponent = -l.exponent;
  Word w;
  w.letters_ = std::move(inv);
  return w;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> v = a.letters_;
  v.insert(v.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(v));
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (const auto& l : letters_) {
    s += generator_name(l.generator);
    if (l.exponent != 1) s += "^" + std::to_string(l.exponent);
  }
  return s;
}

std::string generator_name(int g) {
  if (g >= 0 && g < 26) return std::string(1, static_cast<char>('a' + g));
  return "a" + std::to_string(g);
}

int generator_from_name(const std::string& name) {
  if (name.size() == 1 && name[0] >= 'a' && name[0] <= 'z') return name[0] - 'a';
  if (name.size() > 1 && name[0] == 'a' &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    int g = std::stoi(name.substr(1));
    return g >= 26 ? g : -1;
  }
  return -1;
}

std::string GroupRingTerm::to_string() const {
  std::string s = sign > 0 ? "+" : "-";
  return s + word.to_string();
}

}  // namespace dehn

#pragma once

#include <string>
#include <vector>

namespace dehn {

struct Letter {
  int generator = 0;  // arc id
  int exponent = 1;   // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word in the Wirtinger generators. Words are never rewritten
// modulo the group relations; equality in the knot group is only ever
// checked through a representation.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  static Word generator(int g, int exponent = 1) { return Word({Letter{g, exponent}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  // Image in H_1 of the knot exterior, which is Z generated by any meridian.
  int exponent_sum() const;
  Word inverse() const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

  // "ab^-1c"; "1" for the empty word.
  std::string to_string() const;

 private:
  std::vector<Letter> letters_;
};

// Display name of arc g: a, b, ..., z, then a26, a27, ...
std::string generator_name(int g);
// Inverse of generator_name; -1 if the name is not recognised.
int generator_from_name(const std::string& name);

// Element +-w of Z[pi_1].
struct GroupRingTerm {
  int sign = 1;
  Word word;
  friend bool operator==(const GroupRingTerm&, const GroupRingTerm&) = default;
  // "+1", "-a", "+ab^-1".
  std::string to_string() const;
};

}  // namespace dehn

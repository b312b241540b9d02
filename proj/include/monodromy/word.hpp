#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace monodromy {

// A letter is a nonzero signed generator id: +k is generator k (1-based),
// -k its inverse.
using Letter = std::int32_t;

// Freely reduced word in a free group.  The reduced form is a class
// invariant: every constructor and operation reduces, so operator== is
// equality in the group.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  static Word gen(int k, int exp = 1);

  const std::vector<Letter>& letters() const { return ls_; }
  std::size_t size() const { return ls_.size(); }
  bool empty() const { return ls_.empty(); }

  Word operator*(const Word& rhs) const;
  Word inverse() const;
  Word pow(int n) const;

  bool operator==(const Word& rhs) const = default;
  // Length-then-lex order; used for canonical forms and map keys.
  bool operator<(const Word& rhs) const;

  // Largest generator id appearing (0 for the identity).
  int max_gen() const;

private:
  std::vector<Letter> ls_;
};

// w x w^-1.  Named to keep the direction unambiguous.
Word conj(const Word& w, const Word& x);

// Replace generator k by images[k-1] (negative letters get the inverse
// image).  Free-reduces on the fly.  Returns nullopt if the intermediate
// result ever exceeds `budget` letters.
std::optional<Word> substitute(const Word& w, const std::vector<Word>& images,
                               std::size_t budget);

// Conjugacy class of a word: cyclically reduced, lexicographically least
// rotation.  Two words are conjugate iff their ConjClass reps are equal.
class ConjClass {
public:
  ConjClass() = default;
  explicit ConjClass(const Word& w);

  const Word& rep() const { return rep_; }
  ConjClass inverse_class() const;
  // Representative of min(this, inverse), for orientation-blind matching
  // of curves.
  Word unoriented_key() const;

  bool operator==(const ConjClass& rhs) const = default;
  bool operator<(const ConjClass& rhs) const { return rep_ < rhs.rep_; }

private:
  Word rep_;
};

// Generator naming, parsing and printing.  The word text format is
// whitespace-separated tokens `name` or `name^k` (k a nonzero integer);
// the identity is written `1`.
class Alphabet {
public:
  explicit Alphabet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int k) const;      // k is 1-based
  int id(std::string_view name) const;       // 0 if unknown

  std::string format(const Word& w) const;
  Word parse(std::string_view text) const;   // throws std::invalid_argument

  const std::vector<std::string>& names() const { return names_; }

private:
  std::vector<std::string> names_;
};

}  // namespace monodromy

#include "monodromy/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace monodromy {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == -l)
    out.pop_back();
  else
    out.push_back(l);
}

std::vector<Letter> reduce(const std::vector<Letter>& in) {
  std::vector<Letter> out;
  out.reserve(in.size());
  for (Letter l : in) {
    if (l == 0) throw std::invalid_argument("zero letter");
    push_reduced(out, l);
  }
  return out;
}

}  // namespace

Word::Word(std::vector<Letter> letters) : ls_(reduce(letters)) {}

Word Word::gen(int k, int exp) {
  if (k <= 0) throw std::invalid_argument("generator id must be positive");
  std::vector<Letter> ls(static_cast<std::size_t>(exp < 0 ? -exp : exp),
                         exp < 0 ? -k : k);
  Word w;
  w.ls_ = std::move(ls);
  return w;
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> out = ls_;
  out.reserve(out.size() + rhs.ls_.size());
  for (Letter l : rhs.ls_) push_reduced(out, l);
  Word w;
  w.ls_ = std::move(out);
  return w;
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(ls_.size());
  for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) out.push_back(-*it);
  Word w;
  w.ls_ = std::move(out);
  return w;
}

Word Word::pow(int n) const {
  Word base = n < 0 ? inverse() : *this;
  int m = n < 0 ? -n : n;
  Word acc;
  for (int i = 0; i < m; ++i) acc = acc * base;
  return acc;
}

bool Word::operator<(const Word& rhs) const {
  if (ls_.size() != rhs.ls_.size()) return ls_.size() < rhs.ls_.size();
  return std::lexicographical_compare(ls_.begin(), ls_.end(),
                                      rhs.ls_.begin(), rhs.ls_.end());
}

int Word::max_gen() const {
  int m = 0;
  for (Letter l : ls_) m = std::max(m, l < 0 ? -l : l);
  return m;
}

Word conj(const Word& w, const Word& x) { return w * x * w.inverse(); }

std::optional<Word> substitute(const Word& w, const std::vector<Word>& images,
                               std::size_t budget) {
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    int k = l < 0 ? -l : l;
    if (k > static_cast<int>(images.size()))
      throw std::logic_error("substitute: no image for generator " +
                             std::to_string(k));
    const auto& img = images[static_cast<std::size_t>(k - 1)].letters();
    if (l > 0) {
      for (Letter m : img) push_reduced(out, m);
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it)
        push_reduced(out, -*it);
    }
    if (out.size() > budget) return std::nullopt;
  }
  return Word(std::move(out));
}

ConjClass::ConjClass(const Word& w) {
  std::vector<Letter> ls = w.letters();
  // Cyclic reduction.
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == -ls[hi - 1]) {
    ++lo;
    --hi;
  }
  std::vector<Letter> cyc(ls.begin() + static_cast<std::ptrdiff_t>(lo),
                          ls.begin() + static_cast<std::ptrdiff_t>(hi));
  if (cyc.empty()) {
    rep_ = Word();
    return;
  }
  // Least rotation (words here are short; quadratic scan is fine).
  std::size_t n = cyc.size();
  std::size_t best = 0;
  for (std::size_t s = 1; s < n; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      Letter a = cyc[(s + i) % n], b = cyc[(best + i) % n];
      if (a != b) {
        if (a < b) best = s;
        break;
      }
    }
  }
  std::vector<Letter> rot;
  rot.reserve(n);
  for (std::size_t i = 0; i < n; ++i) rot.push_back(cyc[(best + i) % n]);
  rep_ = Word(std::move(rot));
}

ConjClass ConjClass::inverse_class() const { return ConjClass(rep_.inverse()); }

Word ConjClass::unoriented_key() const {
  Word inv = inverse_class().rep();
  return rep_ < inv ? rep_ : inv;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (const auto& n : names_)
    if (n.empty() || n == "1")
      throw std::invalid_argument("bad generator name");
}

const std::string& Alphabet::name(int k) const {
  if (k < 1 || k > size()) throw std::out_of_range("generator id");
  return names_[static_cast<std::size_t>(k - 1)];
}

int Alphabet::id(std::string_view name) const {
  for (int k = 1; k <= size(); ++k)
    if (names_[static_cast<std::size_t>(k - 1)] == name) return k;
  return 0;
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream os;
  const auto& ls = w.letters();
  std::size_t i = 0;
  bool first = true;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    int k = ls[i] < 0 ? -ls[i] : ls[i];
    int exp = static_cast<int>(j - i) * (ls[i] < 0 ? -1 : 1);
    if (!first) os << ' ';
    first = false;
    os << name(k);
    if (exp != 1) os << '^' << exp;
    i = j;
  }
  return os.str();
}

Word Alphabet::parse(std::string_view text) const {
  std::vector<Letter> out;
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("word parse: " + what);
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[j])))
      ++j;
    std::string_view tok = text.substr(i, j - i);
    i = j;
    if (tok == "1") continue;
    std::string_view base = tok;
    int exp = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      base = tok.substr(0, caret);
      std::string_view es = tok.substr(caret + 1);
      auto [p, ec] = std::from_chars(es.data(), es.data() + es.size(), exp);
      if (ec != std::errc() || p != es.data() + es.size() || exp == 0)
        fail("bad exponent in '" + std::string(tok) + "'");
    }
    int k = id(base);
    if (k == 0) fail("unknown generator '" + std::string(base) + "'");
    for (int t = 0; t < (exp < 0 ? -exp : exp); ++t)
      push_reduced(out, exp < 0 ? -k : k);
  }
  return Word(std::move(out));
}

}  // namespace monodromy

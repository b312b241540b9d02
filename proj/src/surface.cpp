#include "monodromy/surface.hpp"

#include <sstream>

namespace monodromy {

int SurfaceKind::a(int i) const {
  if (i < 1 || i > genus) throw std::out_of_range("SurfaceKind::a: handle index out of range");
  return 2 * i - 1;
}

int SurfaceKind::b(int i) const {
  if (i < 1 || i > genus) throw std::out_of_range("SurfaceKind::b: handle index out of range");
  return 2 * i;
}

int SurfaceKind::d2() const {
  if (boundary != 2) throw std::logic_error("SurfaceKind::d2: surface has no second boundary");
  return 2 * genus + 1;
}

Alphabet SurfaceKind::alphabet() const {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(pi1_rank()));
  for (int i = 1; i <= genus; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
  }
  if (boundary == 2) names.push_back("d2");
  return Alphabet(names);
}

std::string SurfaceKind::name() const {
  std::ostringstream os;
  os << "Sigma_" << genus;
  if (boundary > 0) os << "^" << boundary;
  return os.str();
}

HomologyClass HomologyClass::operator+(const HomologyClass& o) const {
  if (coords.size() != o.coords.size())
    throw std::invalid_argument("HomologyClass: dimension mismatch");
  HomologyClass r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

HomologyClass HomologyClass::operator-(const HomologyClass& o) const {
  if (coords.size() != o.coords.size())
    throw std::invalid_argument("HomologyClass: dimension mismatch");
  HomologyClass r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
  return r;
}

HomologyClass HomologyClass::operator-() const {
  HomologyClass r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

HomologyClass homology_of(const SurfaceKind& s, const Word& w) {
  HomologyClass h;
  h.coords.assign(static_cast<std::size_t>(s.h1_dim()), ZZ(0));
  for (Letter l : w.letters()) {
    int g = l > 0 ? l : -l;
    if (g < 1 || g > s.pi1_rank())
      throw std::invalid_argument("homology_of: letter outside surface alphabet");
    if (static_cast<std::size_t>(g) <= h.coords.size()) h.coords[static_cast<std::size_t>(g - 1)] += (l > 0 ? 1 : -1);
  }
  return h;
}

ZZ intersection(const SurfaceKind& s, const HomologyClass& x, const HomologyClass& y) {
  const auto dim = static_cast<std::size_t>(s.h1_dim());
  if (x.coords.size() != dim || y.coords.size() != dim)
    throw std::invalid_argument("intersection: dimension mismatch");
  ZZ total = 0;
  for (int i = 1; i <= s.genus; ++i) {
    const std::size_t ai = static_cast<std::size_t>(2 * i - 2);
    const std::size_t bi = static_cast<std::size_t>(2 * i - 1);
    total += x.coords[ai] * y.coords[bi] - x.coords[bi] * y.coords[ai];
  }
  return total;
}

}  // namespace monodromy

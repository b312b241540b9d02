#include "monodromy/h1_matrix.hpp"

#include <stdexcept>

namespace monodromy {

bool H1Matrix::is_identity() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

H1Matrix H1Matrix::operator*(const H1Matrix& o) const {
  if (n != o.n) throw std::invalid_argument("H1Matrix: dimension mismatch");
  H1Matrix r = identity_matrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ZZ s = 0;
      for (int k = 0; k < n; ++k) s += at(i, k) * o.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

HomologyClass H1Matrix::apply(const HomologyClass& v) const {
  if (static_cast<int>(v.coords.size()) != n) throw std::invalid_argument("H1Matrix: dimension mismatch");
  HomologyClass r;
  r.coords.assign(static_cast<std::size_t>(n), ZZ(0));
  for (int i = 0; i < n; ++i) {
    ZZ s = 0;
    for (int j = 0; j < n; ++j) s += at(i, j) * v.coords[static_cast<std::size_t>(j)];
    r.coords[static_cast<std::size_t>(i)] = s;
  }
  return r;
}

H1Matrix identity_matrix(int n) {
  H1Matrix a;
  a.n = n;
  a.m.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), ZZ(0));
  for (int i = 0; i < n; ++i) a.at(i, i) = 1;
  return a;
}

H1Matrix transvection_matrix(const SurfaceKind& s, const HomologyClass& c, int e) {
  const int n = s.h1_dim();
  if (static_cast<int>(c.coords.size()) != n)
    throw std::invalid_argument("transvection_matrix: dimension mismatch");
  H1Matrix a = identity_matrix(n);
  // Column j of the result is e_j + e * <e_j, c> c.
  for (int j = 0; j < n; ++j) {
    HomologyClass ej;
    ej.coords.assign(static_cast<std::size_t>(n), ZZ(0));
    ej.coords[static_cast<std::size_t>(j)] = 1;
    const ZZ coef = intersection(s, ej, c) * e;
    if (coef == 0) continue;
    for (int i = 0; i < n; ++i) a.at(i, j) += coef * c.coords[static_cast<std::size_t>(i)];
  }
  return a;
}

ZZ det(const H1Matrix& a) {
  const int n = a.n;
  if (n == 0) return 1;
  H1Matrix w = a;
  ZZ prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

bool preserves_intersection(const SurfaceKind& s, const H1Matrix& a) {
  const int n = s.h1_dim();
  if (a.n != n) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      HomologyClass ei, ej;
      ei.coords.assign(static_cast<std::size_t>(n), ZZ(0));
      ej.coords.assign(static_cast<std::size_t>(n), ZZ(0));
      ei.coords[static_cast<std::size_t>(i)] = 1;
      ej.coords[static_cast<std::size_t>(j)] = 1;
      if (intersection(s, a.apply(ei), a.apply(ej)) != intersection(s, ei, ej)) return false;
    }
  return true;
}

}  // namespace monodromy

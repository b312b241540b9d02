#pragma once

#include <vector>

#include "monodromy/surface.hpp"

namespace monodromy {

/// Square integer matrix acting on H_1 of a surface (row-major, exact
/// arbitrary-precision entries).
struct H1Matrix {
  int n = 0;
  std::vector<ZZ> m;  // n*n, row-major

  friend bool operator==(const H1Matrix&, const H1Matrix&) = default;

  const ZZ& at(int i, int j) const { return m[static_cast<std::size_t>(i * n + j)]; }
  ZZ& at(int i, int j) { return m[static_cast<std::size_t>(i * n + j)]; }

  bool is_identity() const;
  H1Matrix operator*(const H1Matrix& o) const;
  HomologyClass apply(const HomologyClass& v) const;
};

H1Matrix identity_matrix(int n);

/// Matrix of the transvection x -> x + e * <x, c> c in the surface basis.
/// (A right-handed Dehn twist about a curve of class c acts with e = -1;
/// see twist_matrix and the calibration note in band_model.cpp.)
H1Matrix transvection_matrix(const SurfaceKind& s, const HomologyClass& c, int e = 1);

/// Exact determinant (Bareiss fraction-free elimination).
ZZ det(const H1Matrix& a);

/// Whether the matrix preserves the intersection pairing of the surface.
bool preserves_intersection(const SurfaceKind& s, const H1Matrix& a);

}  // namespace monodromy

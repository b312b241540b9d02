#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "monodromy/word.hpp"

namespace monodromy {

using ZZ = boost::multiprecision::cpp_int;

/// Compact, orientable surface of genus `genus` with `boundary` boundary
/// components (0, 1 or 2).  The fundamental group of the bordered models is
/// free on the standard based loops a_1, b_1, ..., a_g, b_g (plus, for two
/// boundary components, one extra loop `d2` around the far boundary); the
/// closed model is the one-relator quotient by the boundary word.
struct SurfaceKind {
  int genus = 0;
  int boundary = 1;

  friend bool operator==(const SurfaceKind&, const SurfaceKind&) = default;

  bool valid() const { return genus >= 0 && boundary >= 0 && boundary <= 2; }

  /// Number of free generators of the (bordered) fundamental group model.
  int pi1_rank() const { return 2 * genus + (boundary == 2 ? 1 : 0); }

  /// Rank of H_1 of the surface (d2 survives; the basepoint boundary word
  /// is a product of commutators times d2^{±1} and contributes nothing new).
  int h1_dim() const { return 2 * genus + (boundary >= 1 ? boundary - 1 : 0); }

  /// Generator ids in the fixed alphabet order a1,b1,a2,b2,...,ag,bg[,d2].
  int a(int i) const;  // 1 <= i <= genus
  int b(int i) const;  // 1 <= i <= genus
  int d2() const;      // only when boundary == 2

  Alphabet alphabet() const;
  std::string name() const;  // e.g. "Sigma_3^1"
};

/// Element of H_1 of a SurfaceKind, as integer coordinates in the ordered
/// basis [a_1], [b_1], ..., [a_g], [b_g] (plus [d2] when boundary == 2).
struct HomologyClass {
  std::vector<ZZ> coords;

  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;

  bool is_zero() const {
    for (const auto& c : coords)
      if (c != 0) return false;
    return true;
  }
  HomologyClass operator+(const HomologyClass& o) const;
  HomologyClass operator-(const HomologyClass& o) const;
  HomologyClass operator-() const;
};

/// Abelianization of a word in the surface alphabet.  For the closed model
/// the word is expected in the same alphabet (the boundary word abelianizes
/// to zero, so the map is well defined on the quotient).
HomologyClass homology_of(const SurfaceKind& s, const Word& w);

/// Algebraic intersection pairing on H_1: <a_i, b_i> = 1 = -<b_i, a_i>,
/// all other basis pairings zero ([d2] lies in the radical).
ZZ intersection(const SurfaceKind& s, const HomologyClass& x, const HomologyClass& y);

}  // namespace monodromy

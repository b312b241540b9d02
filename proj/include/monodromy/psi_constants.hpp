#pragma once

#include <string>
#include <utility>
#include <vector>

namespace monodromy {

/// Frozen twist words for the three auxiliary mapping classes used by the
/// first construction (genus >= 3).  Each entry is (catalog curve name,
/// exponent), in display order (rightmost factor acts first).  All named
/// curves lie inside the twice-holed genus-two neighborhood of the chain
/// A_1 ∪ ... ∪ A_5, so the words are supported there, fix everything outside
/// (in particular a_g and a'_{g-1}), and remain valid on every genus >= 3.
/// Their defining properties are certified by tests:
///   psi1 sends A_1 to a_2;
///   psi2 sends A_1 to e_1 and psi3 sends A_1 to e_2, where e_1, a_2, e_2
///   are the interior curves of a lantern with boundary A_1, A_3, A_5, a_3.
/// Found once by breadth-first search over twist words in the interior
/// twists and validated by the exact lantern identity; see
/// tools/dev_psi_search.cpp.
struct PsiWords {
  std::vector<std::pair<std::string, int>> psi1, psi2, psi3;
  bool frozen = false;
};

inline const PsiWords& psi_words() {
  static const PsiWords w{
      // psi1(A_1) = a_2: slides A_1 along the once-intersecting sequence
      // A_1, A_2, A_3, A_4, a_2 (t_x t_y carries x to y when x and y meet
      // once).
      {{"A4", 1}, {"a2", 1}, {"A3", 1}, {"A4", 1}, {"A2", 1}, {"A3", 1}, {"A1", 1}, {"A2", 1}},
      // psi2(A_1) = e_1, the boundary component of a neighborhood of
      // A_3 ∪ A_4 ∪ A_5 that meets a_2.
      {{"A2", 1}, {"A3", 1}, {"A4", 1}, {"a'1", 1}, {"A5", 1}, {"A4", 1}, {"A3", 1}, {"A2", 1}},
      // psi3(A_1) = e_2, completing the lantern
      //   t_{e_1} t_{a_2} t_{e_2} = t_{A_3} t_{A_5} t_{a_3} t_{A_1}.
      {{"A4", 1}, {"a2", -1}, {"A5", 1}, {"A4", -1}, {"A2", 1}, {"A3", 1}, {"A1", 1}, {"A2", 1}},
      true,
  };
  return w;
}

}  // namespace monodromy

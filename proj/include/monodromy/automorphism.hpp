#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "monodromy/word.hpp"

namespace monodromy {

inline constexpr std::size_t kDefaultWordBudget = 1'000'000;

/// Automorphism of the free fundamental group of a bordered surface model,
/// given by generator images, together with the transformation of a fixed
/// reference arc from the basepoint to the far boundary (two-boundary
/// surfaces only; the arc maps to arc_prefix * arc).  The pair acts
/// faithfully: mapping classes of the two-boundary surface that act
/// trivially on based loops are exactly the powers of the far boundary
/// twist, and those are detected by the arc prefix.
struct Pi1Arrow {
  std::vector<Word> images;  // images[k-1] = image of generator k
  Word arc_prefix;           // identity when no arc is tracked
  bool has_arc = false;

  friend bool operator==(const Pi1Arrow&, const Pi1Arrow&) = default;

  int rank() const { return static_cast<int>(images.size()); }
  bool is_identity() const;
};

Pi1Arrow identity_arrow(int rank, bool has_arc);

/// Conjugation x -> w x w^-1 on every generator.
Pi1Arrow conjugation_arrow(int rank, const Word& w, bool has_arc, const Word& arc_prefix);

/// Image of a word under the arrow; nullopt if any intermediate exceeds the
/// letter budget.
std::optional<Word> arrow_apply(const Pi1Arrow& f, const Word& w, std::size_t budget);

/// Composition (f after g): x -> f(g(x)); arc prefixes compose as f(u_g) * u_f.
std::optional<Pi1Arrow> arrow_compose(const Pi1Arrow& f, const Pi1Arrow& g, std::size_t budget);

}  // namespace monodromy

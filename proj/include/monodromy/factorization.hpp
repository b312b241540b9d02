#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monodromy/relators.hpp"

namespace monodromy {

enum class MoveKind {
  ElementaryLeft,
  ElementaryRight,
  Conjugate,
  PartialConjugate,
  Substitute,
  CloseUp,
};

enum class EtDirection { Left, Right };

/// One applied rewriting move, kept as an auditable certificate.
struct MoveRecord {
  MoveKind kind = MoveKind::Substitute;
  std::size_t position = 0;  // leftmost display index touched
  std::string relator;       // relator tag for substitutions; free-form note otherwise
  std::string phi;           // display of the conjugating word, when any
  /// Signature increment of the move.  Unset means "no increment assigned";
  /// consuming an unset value in signature bookkeeping is a hard error.
  std::optional<int> sigma_delta;
  int cycle_delta = 0;

  friend bool operator==(const MoveRecord&, const MoveRecord&) = default;
};

/// Positive factorization on a bordered chart: the product of right-handed
/// twists about `cycles` (display order, index 0 applied last) equals the
/// product of boundary twists t_{delta_i}^{k_i}.  `closed` marks the
/// factorization as reinterpreted on the capped surface; the chart and the
/// exponents are kept for section bookkeeping.
struct Factorization {
  SurfaceKind surface;
  bool closed = false;
  std::vector<CurveRef> cycles;
  std::vector<int> boundary_exponents;  // one k per boundary component
  std::vector<MoveRecord> trace;

  friend bool operator==(const Factorization&, const Factorization&) = default;

  MappingClassExpr word() const;
  std::size_t size() const { return cycles.size(); }
};

/// Half-open display-index range [first, second).
using Segment = std::pair<std::size_t, std::size_t>;

/// Catalog name of the boundary-parallel curve of the given component
/// (1-based): component 1 is the boundary containing the basepoint.
std::string boundary_curve_name(const SurfaceKind& s, int component);

/// Standard-name rewrite: when the referenced curve's based word resolves to
/// a catalog class, the reference is replaced by that catalog name (twists
/// only depend on the unoriented class).  Falls back to the original
/// reference when no formula or budget reaches a word.
CurveRef canonical_curve(const Catalog& cat, CurveRef ref,
                         std::size_t budget = kDefaultWordBudget);

/// Unoriented class key of a referenced curve, when computable.
std::optional<std::string> curve_class_key(const Catalog& cat, const CurveRef& ref,
                                           std::size_t budget = kDefaultWordBudget);

/// Factorization carried by a relator whose negative part is entirely
/// boundary-parallel: cycles = positive part, exponents counted per
/// component.  The lift identity is checked at L1 on construction.
Factorization positive_factorization(const Catalog& cat, const Relator& r);

/// Lift identity: the cycle word equals the recorded boundary-twist product.
/// L1 compares homology matrices; L2 compares the bordered fundamental-group
/// actions exactly (boundary twists act trivially on homology, so L2 is the
/// level that actually sees the exponents).
Verdict check_lift(const Catalog& cat, const Factorization& f, Level level,
                   std::size_t budget = kDefaultWordBudget);

/// Number of boundary components with exponent exactly 1: each carries a
/// (-1)-section of the closed-up fibration.
int section_count(const Factorization& f);

/// Adjacent-pair rewrite at display positions (i, i+1):
///   left:  (t_v, t_w) -> (t_w, t_{t_w^-1(v)})
///   right: (t_v, t_w) -> (t_{t_v(w)}, t_v)
/// The two directions are mutually inverse; the pair product is checked
/// unchanged on homology (exact matrix equality).
Factorization elementary_transformation(const Catalog& cat, const Factorization& f,
                                        std::size_t i, EtDirection dir);

/// Every cycle v -> phi(v); boundary exponents unchanged.
Factorization simultaneous_conjugation(const Catalog& cat, const Factorization& f,
                                       const MappingClassExpr& phi);

/// Replaces the run of cycles at [at, at + l) matching R's negative part
/// d_1..d_l (unoriented-class comparison) by phi-images of R's positive
/// part.  R is re-verified, phi must fix every d_i, and the full product is
/// checked unchanged on homology.  Appends R's sigma_delta to the trace.
Factorization substitute(const Catalog& cat, const Factorization& f, std::size_t at,
                         const Relator& r, const MappingClassExpr& phi = {});

/// Segment cycles v -> phi(v) for several disjoint display ranges, justified
/// by phi fixing every cycle outside the segments: the rewritten word equals
/// phi (whole word) phi^-1 and boundary twists are untouched.
Factorization partial_conjugation(const Catalog& cat, const Factorization& f,
                                  const std::vector<Segment>& segments,
                                  const MappingClassExpr& phi);

/// Relator-backed partial conjugation of the run at [at, at + k) matching
/// R's positive part: an inverse substitution consuming the run followed by
/// an R^phi-substitution emitting the phi-images.  The two signature
/// increments cancel in the trace.
Factorization partial_conjugation(const Catalog& cat, const Factorization& f,
                                  std::size_t at, const Relator& r,
                                  const MappingClassExpr& phi);

/// Moves the cycle at `from` to display position `to` by iterated elementary
/// transformations (right moves when to > from, left moves otherwise); the
/// moved cycle's curve is unchanged and every crossed cycle picks up the
/// moved twist's action.  The trace records each step.
Factorization push_twist(const Catalog& cat, const Factorization& f, std::size_t from,
                         std::size_t to);

/// Reinterprets the factorization on the capped surface.  Cycles, chart and
/// exponents are kept; boundary components with exponent 1 become disjoint
/// (-1)-sections of the resulting fibration.
Factorization close_up(const Catalog& cat, const Factorization& f);

/// JSON serialization (schema "monodromy/1"); deterministic byte-exact
/// round-trip.
std::string to_json_text(const Factorization& f, int indent = 2);
Factorization factorization_from_json(const std::string& text);

}  // namespace monodromy

#pragma once

#include <optional>
#include <string>

#include "monodromy/automorphism.hpp"
#include "monodromy/catalog.hpp"
#include "monodromy/h1_matrix.hpp"
#include "monodromy/mapping_class.hpp"

namespace monodromy {

enum class Level { L1, L2 };

struct Verdict {
  enum class Status { Verified, Refuted, Inconclusive } status;
  std::string reason;

  bool verified() const { return status == Status::Verified; }
  bool refuted() const { return status == Status::Refuted; }
  static Verdict verified_ok() { return {Status::Verified, ""}; }
  static Verdict refuted(std::string r) { return {Status::Refuted, std::move(r)}; }
  static Verdict inconclusive(std::string r) { return {Status::Inconclusive, std::move(r)}; }
};

/// Evaluation failure carrying the reason (missing twist formula or budget).
struct EvalError {
  std::string reason;
};

template <class T>
using EvalResult = std::optional<T>;  // paired with an out-parameter reason

/// Homology class of a referenced curve (image classes via the matrix action).
HomologyClass curve_h1(const Catalog& cat, const CurveRef& ref);

/// Homology action of t_ref^exp: the transvection x -> x - exp * <x,c> c.
H1Matrix twist_matrix(const Catalog& cat, const CurveRef& ref, int exp = 1);

/// Matrix of a twist word on H_1 (display order, rightmost factor first).
H1Matrix evaluate_h1(const Catalog& cat, const MappingClassExpr& m);

/// Fundamental-group automorphism of the twist t_ref^exp; nullopt with
/// *reason set when no formula backs the curve or the budget is exceeded.
std::optional<Pi1Arrow> twist_arrow(const Catalog& cat, const CurveRef& ref, int exp,
                                    std::size_t budget = kDefaultWordBudget,
                                    std::string* reason = nullptr);

/// Automorphism of a twist word (display order, rightmost factor first).
std::optional<Pi1Arrow> evaluate_pi1(const Catalog& cat, const MappingClassExpr& m,
                                     std::size_t budget = kDefaultWordBudget,
                                     std::string* reason = nullptr);

/// Based word of a referenced curve (images computed through the arrows).
std::optional<Word> curve_word(const Catalog& cat, const CurveRef& ref,
                               std::size_t budget = kDefaultWordBudget,
                               std::string* reason = nullptr);

/// Unoriented isotopy-class test of a twist word against the identity.
/// L1 compares the homology matrix (Verified/Refuted); L2 compares the
/// fundamental-group action exactly and reports Inconclusive only when a
/// formula is missing or the word budget is exceeded.
Verdict is_identity(const Catalog& cat, const MappingClassExpr& m, Level level,
                    std::size_t budget = kDefaultWordBudget);

}  // namespace monodromy

#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "monodromy/band_model.hpp"
#include "monodromy/mapping_class.hpp"
#include "monodromy/surface.hpp"
#include "monodromy/word.hpp"

namespace monodromy {

/// How the Dehn twist about a catalog curve acts on the fundamental group.
struct NoFormula {};                        // only the homology action is available
struct EngineRecipe {                       // embedded band curve: combinatorial twist
  BandCurve curve;
};
struct ConjRecipe {                         // t^e: x -> w^-e x w^e on the listed generators
  Word w;
  std::vector<int> moved;                   // generator ids conjugated (others fixed)
  bool arc_moves = false;                   // two-boundary: arc picks up prefix w^-e
};
struct FarRecipe {                          // far-boundary twist: loops fixed, arc prefix d2^(-eps*e)
  int eps = 1;
};
struct ExprRecipe {                         // twist equals a word in other catalog twists
  MappingClassExpr expr;
};
using TwistRecipe = std::variant<NoFormula, EngineRecipe, ConjRecipe, FarRecipe, ExprRecipe>;

struct CurveSpec {
  std::string name;
  Word word;  // based representative in the bordered model
  ConjClass cls;
  HomologyClass h1;
  std::optional<int> separating_genus;  // separating curves: genus split off the basepoint side
  bool hyperelliptic_invariant = false;
  bool is_boundary = false;
  bool closed_trivial = false;  // becomes null-homotopic when the boundaries are capped
  TwistRecipe recipe;
  std::optional<std::pair<MappingClassExpr, std::string>> realization;  // Image(phi, base)
};

struct Catalog {
  SurfaceKind surface;
  Alphabet alphabet{std::vector<std::string>{"x"}};
  BandSurface band;  // undefined for closed surfaces (band.nbands == 0)
  std::vector<CurveSpec> curves;
  std::map<std::string, std::size_t> by_name;
  std::map<std::string, std::string> by_class;  // unoriented class key -> first curve name

  bool has(const std::string& name) const { return by_name.count(name) != 0; }
  const CurveSpec& at(const std::string& name) const;
  /// Name of a catalog curve in the unoriented isotopy class, if any.
  std::optional<std::string> find_by_class(const ConjClass& cls) const;
};

/// Serialization key for an unoriented conjugacy class.
std::string class_key(const ConjClass& cls);

/// Boundary word of the bordered model: the based class of the boundary
/// component containing the basepoint.
Word boundary_relator_word(const SurfaceKind& s);

/// Based word of the separating curve c_h enclosing the first h handles:
/// b_h^-1 ... b_1^-1 (a_1 b_1 a_1^-1) ... (a_h b_h a_h^-1).
Word c_curve_word(const SurfaceKind& s, int h);

Catalog build_catalog(const SurfaceKind& s);

}  // namespace monodromy

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monodromy/catalog.hpp"
#include "monodromy/mcg_action.hpp"

namespace monodromy {

enum class RelatorKind { Braid, Lantern, ChainEven, ChainOdd, W, MCK, Derived };
enum class BraidForm { Disjoint, Once };

/// A relation between two positive twist words, t_{v_1}..t_{v_k} =
/// t_{d_1}..t_{d_l}, in the mapping class group of `surface`.  `word()` is
/// the corresponding factorization of the identity,
/// t_{v_1}..t_{v_k} t_{d_l}^-1..t_{d_1}^-1 (display order, rightmost first).
///
/// A forward substitution consumes a consecutive run of factorization cycles
/// matching d_1..d_l (in display order) and emits images of v_1..v_k;
/// `inverted()` swaps the two sides for the reverse move.
struct Relator {
  RelatorKind kind = RelatorKind::Derived;
  std::string name;
  SurfaceKind surface;
  std::vector<CurveRef> positive;  // v_1..v_k, display order
  std::vector<CurveRef> negative;  // d_1..d_l, display order
  /// Signature increment of one forward substitution.  Unset when the move
  /// has no assigned increment; consuming an unset value in signature
  /// bookkeeping is a hard error, never a silent zero.
  std::optional<int> sigma_delta;
  /// The relation only holds once the boundary components are capped off.
  bool closed_only = false;

  MappingClassExpr word() const;
  Relator inverted() const;
};

/// Commutation of twists about disjoint curves (t_a t_b = t_b t_a) or the
/// braid relation for curves meeting once (t_a t_b t_a = t_b t_a t_b).
/// Throws std::invalid_argument when the homology pairing is incompatible
/// with the requested form or when the L2 check refutes the relation.
Relator braid_relator(const Catalog& cat, const CurveRef& alpha,
                      const CurveRef& beta, BraidForm form);

/// Chain relation on the curves A_1..A_k.  Even k = 2h:
/// (t_{A_1}..t_{A_k})^{4h+2} = t_d with d the single boundary curve of a
/// chain neighborhood.  Odd k = 2h+1: (t_{A_1}..t_{A_k})^{2h+2} =
/// t_{d_1} t_{d_2} with d_1 = a_{h+1} and d_2 its dual boundary curve.
/// The odd form carries sigma_delta = 2h(h+2) when both boundary curves
/// stay essential in the closed surface.
Relator chain_relator(const Catalog& cat, int k);

/// Four-holed-sphere relation
/// t_{e_1} t_{a_2} t_{e_2} = t_{A_3} t_{A_5} t_{a_3} t_{A_1}.
/// Requires the e-curve realizations (one-boundary catalogs of genus >= 3).
/// Carries sigma_delta = +1.
Relator lantern_relator(const Catalog& cat);

/// Two-round star relation on the spine curves B^h_*: W_{1,h} = t_{c_h}
/// drops the separating curve enclosing the first h handles; W_{2,h} =
/// t_{a_{h+1}} t_{a'_{h+1}} drops the pair of curves bounding the
/// configuration.  s = 2 with h = g needs a two-boundary catalog.
Relator w_relator(const Catalog& cat, int s, int h);

/// Closed-surface reduction of W_{2,g}: the positive part alone, a
/// factorization of the identity valid once both boundaries are capped.
Relator mck_relator(const Catalog& cat);

/// Catalog name of the dual boundary curve paired with a_j by the odd
/// chains: a_1 itself for j = 1, the catalog curve a'_{j-1} otherwise.
std::string aprime_name(int j);

/// Re-checks the defining identity.  A Refuted outcome at either level
/// raises std::logic_error: a constructed relator must never be refuted.
/// Inconclusive is returned only when L2 lacks a formula or the budget.
Verdict verify_relator(const Catalog& cat, const Relator& r, Level level,
                       std::size_t budget = kDefaultWordBudget);

}  // namespace monodromy

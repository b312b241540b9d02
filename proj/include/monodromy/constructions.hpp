#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "monodromy/catalog.hpp"
#include "monodromy/factorization.hpp"
#include "monodromy/mcg_action.hpp"
#include "monodromy/relators.hpp"

namespace monodromy {

/// The three auxiliary mapping classes driving the first construction.  All
/// are supported in the twice-holed genus-two neighborhood of the chain
/// A_1 ∪ ... ∪ A_5, so they fix a_g and the odd-chain partner curve a'_{g-1}.
struct PsiMaps {
  MappingClassExpr psi1, psi2, psi3;
};

/// Builds psi_1, psi_2, psi_3 from the frozen twist words and re-certifies
/// their defining properties on `cat`:
///   psi_i fixes a_g and a'_{g-1} (conjugacy-class check),
///   psi_1(A_1) = a_2, psi_2(A_1) = e_1, psi_3(A_1) = e_2,
///   and the lantern on e_1, a_2, e_2 verifies at L2.
/// Requires a one-boundary catalog of genus >= 3; any failed gate raises
/// std::logic_error.
PsiMaps psi_catalog(const Catalog& cat, std::size_t budget = kDefaultWordBudget);

/// Rewrites the maximal-chain factorization C_{2g} = (t_{A_1}...t_{A_2g})^{4g+2}
/// into C'_{2g} = {(t_{A_1}...t_{A_2g-1})^{2g} ·
/// t_{A_2g}...t_{A_1} t_{A_1}...t_{A_2g}}^2 by an explicit schedule of
/// elementary transformations (commutations and braid shuffles generated
/// programmatically for any genus).  Every move is certified locally; the
/// result carries the full move trace and is re-checked against the boundary
/// lift.  Requires a one-boundary catalog of genus >= 2.
Factorization lemma41(const Catalog& cat);

/// One named intermediate of a pipeline run.
struct PipelineStage {
  std::string name;
  Factorization factorization;
};

/// Full audit of a pipeline run: every named intermediate in order, from the
/// seed positive factorization to the capped result.  Each stage passes the
/// homology lift check at the time it is recorded.
struct PipelineReport {
  SurfaceKind chart;                  // bordered chart the pipeline ran on
  Catalog catalog;                    // catalog all stages refer to
  std::vector<PipelineStage> stages;  // seed first, capped result last

  const Factorization& base() const { return stages.front().factorization; }
  const Factorization& result() const { return stages.back().factorization; }
  /// Stage lookup by name; throws std::out_of_range for unknown names.
  const Factorization& stage(std::string_view name) const;
};

/// First family: genus-g fibration with one (-1)-section, built from the
/// maximal chain by the explicit move pipeline
///   C_2g -> C' -> H -> H^psi1 -> H' -> H'' -> I -> capped result.
/// Stage names: "base", "c_prime", "h", "h_psi1", "h_prime", "h_dprime",
/// "i", "closed".  Requires g >= 3.  The capped factorization has
/// 2g(4g+2) + 1 cycles and exactly one (-1)-section.
PipelineReport build_theorem1(int g);

/// The twisting class of the second family: for m = [g/2] = 2k this is
/// t_{a_1}...t_{a_k-1} t_{a_k}^n t_{b_k+2}...t_{b_2k}; for m = 2k+1 the
/// b-range starts at k+3 and ends at 2k+1.  Fixes the curves consumed by the
/// substitutions of the second pipeline.  Requires g >= 4, n >= 1.
MappingClassExpr phi_n(int g, int n);

/// Second family: genus-g fibration with two (-1)-sections, built by two
/// star-relator substitutions into the two-boundary star factorization
/// W_2^g — once untwisted and once conjugated by phi_n.  Stage names:
/// "base", "u", "closed".  Requires g >= 4, n >= 1.
PipelineReport build_theorem2(int g, int n);

}  // namespace monodromy

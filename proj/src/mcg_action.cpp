#include "monodromy/mcg_action.hpp"

#include <stdexcept>

namespace monodromy {

namespace {

void set_reason(std::string* reason, const std::string& r) {
  if (reason && reason->empty()) *reason = r;
}

std::optional<Pi1Arrow> fold_expr(const Catalog& cat, const MappingClassExpr& m, std::size_t budget,
                                  std::string* reason);

// Arrow of t_c^e for a standard catalog curve backed by a formula.
std::optional<Pi1Arrow> standard_twist_arrow(const Catalog& cat, const CurveSpec& spec, int exp,
                                             std::size_t budget, std::string* reason) {
  const int rank = cat.surface.pi1_rank();
  const bool has_arc = cat.surface.boundary == 2;
  if (exp == 0) return identity_arrow(rank, has_arc);

  if (std::holds_alternative<NoFormula>(spec.recipe)) {
    if (spec.realization) {
      // Image-realized curve: t_{phi(base)} = phi t_base phi^-1.
      CurveRef as_image;
      as_image.base = spec.realization->second;
      as_image.phi = spec.realization->first.twists;
      return twist_arrow(cat, as_image, exp, budget, reason);
    }
    set_reason(reason, "no fundamental-group twist formula for curve '" + spec.name + "'");
    return std::nullopt;
  }

  if (const auto* eng = std::get_if<EngineRecipe>(&spec.recipe)) {
    const int e = exp > 0 ? 1 : -1;
    const TwistImages ti = twist_images(cat.band, eng->curve, e);
    Pi1Arrow one{ti.images, ti.arc_prefix, has_arc};
    Pi1Arrow out = one;
    for (int i = 1; i < (exp > 0 ? exp : -exp); ++i) {
      auto next = arrow_compose(out, one, budget);
      if (!next) {
        set_reason(reason, "word budget exceeded while composing twists");
        return std::nullopt;
      }
      out = std::move(*next);
    }
    return out;
  }

  if (const auto* cj = std::get_if<ConjRecipe>(&spec.recipe)) {
    const Word w = cj->w.pow(-exp);
    Pi1Arrow f = identity_arrow(rank, has_arc);
    const Word wi = w.inverse();
    for (int gen : cj->moved) f.images[static_cast<std::size_t>(gen - 1)] = w * Word::gen(gen) * wi;
    if (cj->arc_moves) f.arc_prefix = w;
    return f;
  }

  if (const auto* fr = std::get_if<FarRecipe>(&spec.recipe)) {
    Pi1Arrow f = identity_arrow(rank, has_arc);
    f.arc_prefix = Word::gen(cat.surface.d2(), -fr->eps * exp);
    return f;
  }

  const auto& ex = std::get<ExprRecipe>(spec.recipe);
  return fold_expr(cat, expr_power(ex.expr, exp), budget, reason);
}

std::optional<Pi1Arrow> fold_expr(const Catalog& cat, const MappingClassExpr& m, std::size_t budget,
                                  std::string* reason) {
  Pi1Arrow acc = identity_arrow(cat.surface.pi1_rank(), cat.surface.boundary == 2);
  for (auto it = m.twists.rbegin(); it != m.twists.rend(); ++it) {
    auto tw = twist_arrow(cat, it->curve, it->exp, budget, reason);
    if (!tw) return std::nullopt;
    auto next = arrow_compose(*tw, acc, budget);
    if (!next) {
      set_reason(reason, "word budget exceeded while composing twists");
      return std::nullopt;
    }
    acc = std::move(*next);
  }
  return acc;
}

}  // namespace

HomologyClass curve_h1(const Catalog& cat, const CurveRef& ref) {
  const CurveSpec& spec = cat.at(ref.base);
  if (ref.is_standard()) return spec.h1;
  return evaluate_h1(cat, MappingClassExpr{ref.phi}).apply(spec.h1);
}

H1Matrix twist_matrix(const Catalog& cat, const CurveRef& ref, int exp) {
  // The positive twist acts on homology by x -> x - <x, c> c (see the
  // handedness calibration note in band_model.cpp).
  return transvection_matrix(cat.surface, curve_h1(cat, ref), -exp);
}

H1Matrix evaluate_h1(const Catalog& cat, const MappingClassExpr& m) {
  H1Matrix acc = identity_matrix(cat.surface.h1_dim());
  for (auto it = m.twists.rbegin(); it != m.twists.rend(); ++it)
    acc = twist_matrix(cat, it->curve, it->exp) * acc;
  return acc;
}

std::optional<Pi1Arrow> twist_arrow(const Catalog& cat, const CurveRef& ref, int exp, std::size_t budget,
                                    std::string* reason) {
  const CurveSpec& spec = cat.at(ref.base);
  if (ref.is_standard()) return standard_twist_arrow(cat, spec, exp, budget, reason);
  const MappingClassExpr phi{ref.phi};
  auto f = fold_expr(cat, phi, budget, reason);
  if (!f) return std::nullopt;
  auto core = standard_twist_arrow(cat, spec, exp, budget, reason);
  if (!core) return std::nullopt;
  auto fi = fold_expr(cat, expr_inverse(phi), budget, reason);
  if (!fi) return std::nullopt;
  auto inner = arrow_compose(*core, *fi, budget);
  if (!inner) {
    set_reason(reason, "word budget exceeded while composing twists");
    return std::nullopt;
  }
  auto out = arrow_compose(*f, *inner, budget);
  if (!out) {
    set_reason(reason, "word budget exceeded while composing twists");
    return std::nullopt;
  }
  return out;
}

std::optional<Pi1Arrow> evaluate_pi1(const Catalog& cat, const MappingClassExpr& m, std::size_t budget,
                                     std::string* reason) {
  return fold_expr(cat, m, budget, reason);
}

std::optional<Word> curve_word(const Catalog& cat, const CurveRef& ref, std::size_t budget,
                               std::string* reason) {
  const CurveSpec& spec = cat.at(ref.base);
  if (ref.is_standard()) return spec.word;
  auto f = fold_expr(cat, MappingClassExpr{ref.phi}, budget, reason);
  if (!f) return std::nullopt;
  auto w = arrow_apply(*f, spec.word, budget);
  if (!w) set_reason(reason, "word budget exceeded while mapping the curve word");
  return w;
}

Verdict is_identity(const Catalog& cat, const MappingClassExpr& m, Level level, std::size_t budget) {
  if (level == Level::L1) {
    if (evaluate_h1(cat, m).is_identity()) return Verdict::verified_ok();
    return Verdict::refuted("homology action differs from the identity");
  }
  std::string reason;
  auto f = evaluate_pi1(cat, m, budget, &reason);
  if (!f) return Verdict::inconclusive(reason);
  if (f->is_identity()) return Verdict::verified_ok();
  return Verdict::refuted("fundamental-group action differs from the identity");
}

}  // namespace monodromy

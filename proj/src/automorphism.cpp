#include "monodromy/automorphism.hpp"

#include <stdexcept>

namespace monodromy {

bool Pi1Arrow::is_identity() const {
  if (has_arc && !arc_prefix.empty()) return false;
  for (std::size_t k = 0; k < images.size(); ++k)
    if (images[k] != Word::gen(static_cast<int>(k) + 1)) return false;
  return true;
}

Pi1Arrow identity_arrow(int rank, bool has_arc) {
  Pi1Arrow f;
  f.has_arc = has_arc;
  f.images.reserve(static_cast<std::size_t>(rank));
  for (int k = 1; k <= rank; ++k) f.images.push_back(Word::gen(k));
  return f;
}

Pi1Arrow conjugation_arrow(int rank, const Word& w, bool has_arc, const Word& arc_prefix) {
  Pi1Arrow f;
  f.has_arc = has_arc;
  f.arc_prefix = arc_prefix;
  const Word wi = w.inverse();
  f.images.reserve(static_cast<std::size_t>(rank));
  for (int k = 1; k <= rank; ++k) f.images.push_back(w * Word::gen(k) * wi);
  return f;
}

std::optional<Word> arrow_apply(const Pi1Arrow& f, const Word& w, std::size_t budget) {
  for (Letter l : w.letters()) {
    const int g = l > 0 ? l : -l;
    if (g > f.rank()) throw std::logic_error("arrow_apply: word uses generator outside arrow rank");
  }
  return substitute(w, f.images, budget);
}

std::optional<Pi1Arrow> arrow_compose(const Pi1Arrow& f, const Pi1Arrow& g, std::size_t budget) {
  if (f.rank() != g.rank() || f.has_arc != g.has_arc)
    throw std::logic_error("arrow_compose: incompatible arrows");
  Pi1Arrow h;
  h.has_arc = f.has_arc;
  h.images.reserve(g.images.size());
  for (const Word& img : g.images) {
    auto w = arrow_apply(f, img, budget);
    if (!w) return std::nullopt;
    h.images.push_back(std::move(*w));
  }
  if (f.has_arc) {
    // The reference arc maps as tau -> u * tau, so (f∘g)(tau) = f(u_g) u_f tau.
    auto v = arrow_apply(f, g.arc_prefix, budget);
    if (!v) return std::nullopt;
    h.arc_prefix = *v * f.arc_prefix;
    if (h.arc_prefix.size() > budget) return std::nullopt;
  }
  return h;
}

}  // namespace monodromy

#include "monodromy/relators.hpp"

#include <stdexcept>
#include <utility>

namespace monodromy {
namespace {

std::string itos(int v) { return std::to_string(v); }

ZZ abs_pairing(const Catalog& cat, const HomologyClass& x, const HomologyClass& y) {
  ZZ p = intersection(cat.surface, x, y);
  if (p < 0) p = -p;
  return p;
}

int chain_top(const SurfaceKind& s) { return 2 * s.genus + (s.boundary == 2 ? 1 : 0); }

const CurveSpec& named(const Catalog& cat, const std::string& name,
                       const std::string& who) {
  if (!cat.has(name)) {
    throw std::invalid_argument(who + ": catalog has no curve '" + name + "'");
  }
  return cat.at(name);
}

/// L1 is mandatory for every freshly built relator; a refutation there means
/// the construction itself is wrong, so it must never be downgraded.
void check_l1(const Catalog& cat, const Relator& r) {
  const Verdict v = is_identity(cat, r.word(), Level::L1);
  if (!v.verified()) {
    throw std::logic_error(r.name + ": homology check failed: " + v.reason);
  }
}

}  // namespace

MappingClassExpr Relator::word() const {
  MappingClassExpr e;
  e.twists.reserve(positive.size() + negative.size());
  for (const auto& v : positive) e.twists.push_back(twist(v));
  for (auto it = negative.rbegin(); it != negative.rend(); ++it) {
    e.twists.push_back(twist(*it, -1));
  }
  return e;
}

Relator Relator::inverted() const {
  Relator r = *this;
  std::swap(r.positive, r.negative);
  if (r.sigma_delta) r.sigma_delta = -*r.sigma_delta;
  constexpr const char* kMark = "^-1";
  if (r.name.size() > 3 && r.name.compare(r.name.size() - 3, 3, kMark) == 0) {
    r.name.resize(r.name.size() - 3);
  } else {
    r.name += kMark;
  }
  return r;
}

std::string aprime_name(int j) {
  if (j < 1) throw std::invalid_argument("aprime_name: index must be positive");
  return j == 1 ? std::string("a1") : "a'" + itos(j - 1);
}

Relator braid_relator(const Catalog& cat, const CurveRef& alpha,
                      const CurveRef& beta, BraidForm form) {
  const ZZ pairing = abs_pairing(cat, curve_h1(cat, alpha), curve_h1(cat, beta));
  const ZZ expected = form == BraidForm::Disjoint ? 0 : 1;
  if (pairing != expected) {
    throw std::invalid_argument("braid_relator: homology pairing " +
                                pairing.str() + " incompatible with the form");
  }

  Relator r;
  r.kind = RelatorKind::Braid;
  r.surface = cat.surface;
  r.sigma_delta = 0;
  if (form == BraidForm::Disjoint) {
    r.name = "B0(" + alpha.display() + "," + beta.display() + ")";
    r.positive = {alpha, beta};
    r.negative = {beta, alpha};
  } else {
    r.name = "B1(" + alpha.display() + "," + beta.display() + ")";
    r.positive = {alpha, beta, alpha};
    r.negative = {beta, alpha, beta};
  }
  check_l1(cat, r);
  const Verdict v2 = is_identity(cat, r.word(), Level::L2);
  if (v2.refuted()) {
    throw std::invalid_argument(r.name + ": curves do not satisfy the " +
                                (form == BraidForm::Disjoint ? std::string("commutation")
                                                             : std::string("braid")) +
                                " relation: " + v2.reason);
  }
  return r;
}

Relator chain_relator(const Catalog& cat, int k) {
  const SurfaceKind& s = cat.surface;
  if (k < 2 || k > chain_top(s)) {
    throw std::invalid_argument("chain_relator: length " + itos(k) +
                                " out of range for this surface");
  }

  std::vector<HomologyClass> h1;
  h1.reserve(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    h1.push_back(curve_h1(cat, standard_curve("A" + itos(i))));
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const ZZ expected = j == i + 1 ? 1 : 0;
      if (abs_pairing(cat, h1[static_cast<std::size_t>(i)],
                      h1[static_cast<std::size_t>(j)]) != expected) {
        throw std::invalid_argument("chain_relator: intersection pattern violated at (A" +
                                    itos(i + 1) + ",A" + itos(j + 1) + ")");
      }
    }
  }

  Relator r;
  r.surface = s;
  r.name = "C" + itos(k);
  const int h = k / 2;
  const int copies = k % 2 == 0 ? 4 * h + 2 : 2 * h + 2;
  r.positive.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(copies));
  for (int c = 0; c < copies; ++c) {
    for (int i = 1; i <= k; ++i) r.positive.push_back(standard_curve("A" + itos(i)));
  }

  if (k % 2 == 0) {
    r.kind = RelatorKind::ChainEven;
    const auto d = cat.find_by_class(named(cat, "c" + itos(h), r.name).cls);
    if (!d) throw std::logic_error(r.name + ": boundary class missing from catalog");
    r.negative = {standard_curve(*d)};
  } else {
    r.kind = RelatorKind::ChainOdd;
    const CurveSpec& d1 = named(cat, "a" + itos(h + 1), r.name);
    const CurveSpec& d2 = named(cat, aprime_name(h + 1), r.name);
    r.negative = {standard_curve(d1.name), standard_curve(d2.name)};
    if (!d1.closed_trivial && !d2.closed_trivial) {
      r.sigma_delta = 2 * h * (h + 2);
    }
  }
  check_l1(cat, r);
  return r;
}

Relator lantern_relator(const Catalog& cat) {
  for (const char* need : {"e1", "e2", "a2", "a3", "A1", "A3", "A5"}) {
    if (!cat.has(need)) {
      throw std::invalid_argument(std::string("lantern_relator: catalog has no curve '") +
                                  need + "' (needs a one-boundary catalog of genus >= 3)");
    }
  }
  Relator r;
  r.kind = RelatorKind::Lantern;
  r.name = "L";
  r.surface = cat.surface;
  r.positive = {standard_curve("e1"), standard_curve("a2"), standard_curve("e2")};
  r.negative = {standard_curve("A3"), standard_curve("A5"), standard_curve("a3"),
                standard_curve("A1")};
  r.sigma_delta = 1;
  check_l1(cat, r);
  return r;
}

Relator w_relator(const Catalog& cat, int s, int h) {
  const int g = cat.surface.genus;
  if (s != 1 && s != 2) throw std::invalid_argument("w_relator: s must be 1 or 2");
  if (h < 1 || h > g) throw std::invalid_argument("w_relator: h out of range");
  if (s == 2 && h == g && cat.surface.boundary != 2) {
    throw std::invalid_argument(
        "w_relator: W(2,g) needs the second boundary curve (two-boundary catalog)");
  }

  Relator r;
  r.kind = RelatorKind::W;
  r.name = "W(" + itos(s) + "," + itos(h) + ")";
  r.surface = cat.surface;

  std::vector<CurveRef> round;
  round.push_back(standard_curve(named(cat, "B" + itos(h) + "_0" + itos(s), r.name).name));
  for (int k = 1; k <= h; ++k) {
    round.push_back(standard_curve(named(cat, "B" + itos(h) + "_" + itos(k), r.name).name));
  }
  if (h % 2 == 0) {
    round.push_back(standard_curve(named(cat, "c" + itos(h / 2), r.name).name));
  } else {
    const int rr = (h - 1) / 2;
    const CurveRef a = standard_curve(named(cat, "a" + itos(rr + 1), r.name).name);
    const CurveRef ap = standard_curve(named(cat, aprime_name(rr + 1), r.name).name);
    round.push_back(a);
    round.push_back(a);
    round.push_back(ap);
    round.push_back(ap);
  }
  r.positive = round;
  r.positive.insert(r.positive.end(), round.begin(), round.end());

  if (s == 1) {
    r.negative = {standard_curve(named(cat, "c" + itos(h), r.name).name)};
  } else {
    r.negative = {standard_curve(named(cat, "a" + itos(h + 1), r.name).name),
                  standard_curve(named(cat, aprime_name(h + 1), r.name).name)};
  }
  check_l1(cat, r);
  return r;
}

Relator mck_relator(const Catalog& cat) {
  if (cat.surface.boundary != 2) {
    throw std::invalid_argument("mck_relator: needs a two-boundary catalog");
  }
  Relator w = w_relator(cat, 2, cat.surface.genus);
  Relator r;
  r.kind = RelatorKind::MCK;
  r.name = "MCK(" + itos(cat.surface.genus) + ")";
  r.surface = cat.surface;
  r.positive = std::move(w.positive);
  r.closed_only = true;
  return r;
}

Verdict verify_relator(const Catalog& cat, const Relator& r, Level level,
                       std::size_t budget) {
  MappingClassExpr w;
  if (r.closed_only) {
    // The relation only holds after capping; certify the bordered statement
    // instead: the same positive part against the boundary-curve twists it
    // equals before capping.
    if (r.kind != RelatorKind::MCK) {
      throw std::invalid_argument(r.name + ": no bordered lift known for this relator");
    }
    Relator lift = w_relator(cat, 2, cat.surface.genus);
    if (lift.positive != r.positive) {
      throw std::logic_error(r.name + ": positive part does not match its bordered lift");
    }
    w = lift.word();
  } else {
    w = r.word();
  }

  const Verdict l1 = is_identity(cat, w, Level::L1, budget);
  if (!l1.verified()) {
    throw std::logic_error(r.name + ": refuted at L1: " + l1.reason);
  }
  if (level == Level::L1) return l1;
  const Verdict l2 = is_identity(cat, w, Level::L2, budget);
  if (l2.refuted()) {
    throw std::logic_error(r.name + ": refuted at L2: " + l2.reason);
  }
  return l2;
}

}  // namespace monodromy

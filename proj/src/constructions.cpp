#include "monodromy/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "monodromy/psi_constants.hpp"

namespace monodromy {

namespace {

std::string itos(int v) { return std::to_string(v); }

MappingClassExpr expr_from_pairs(const std::vector<std::pair<std::string, int>>& ps) {
  MappingClassExpr e;
  for (const auto& [name, exp] : ps) e.twists.push_back(twist(name, exp));
  return e;
}

/// Conjugacy-class gate: the phi-image of `from` must land in the unoriented
/// class of catalog curve `to`.
void require_image_class(const Catalog& cat, const MappingClassExpr& phi,
                         const std::string& phi_name, const std::string& from,
                         const std::string& to, std::size_t budget) {
  std::string reason;
  const auto w = curve_word(cat, image_curve(phi, standard_curve(from)), budget, &reason);
  if (!w) {
    throw std::logic_error(phi_name + "(" + from + "): image word unavailable: " + reason);
  }
  if (class_key(ConjClass(*w)) != class_key(cat.at(to).cls)) {
    throw std::logic_error(phi_name + "(" + from + ") is not in the class of " + to);
  }
}

/// Applies the chain-shuffle schedule to the maximal-chain factorization,
/// mirroring the word symbolically (sym_[p] = chain index of display slot p)
/// and asserting the touched slot classes after every move.
class ChainShuffle {
 public:
  ChainShuffle(const Catalog& cat, Factorization f) : cat_(cat), f_(std::move(f)) {
    n_ = 2 * cat.surface.genus;
    key_.assign(static_cast<std::size_t>(n_) + 1, "");
    for (int i = 1; i <= n_; ++i) {
      key_[static_cast<std::size_t>(i)] = class_key(cat.at("A" + itos(i)).cls);
    }
    sym_.resize(f_.cycles.size());
    for (std::size_t p = 0; p < f_.cycles.size(); ++p) {
      sym_[p] = static_cast<int>(p % static_cast<std::size_t>(n_)) + 1;
      check_slot(p);
    }
  }

  /// Rewrites the half starting at `base` from (Q t_{A_n})^{n+1} to
  /// Q^n t_{A_n}..t_{A_1} t_{A_1}..t_{A_n}, with Q = t_{A_1}..t_{A_n-1}:
  /// step j carries the descending block D_j = t_{A_n}..t_{A_n-j+1} through
  /// the next Q-copy, growing it by one.
  void rewrite_half(std::size_t base) {
    const int n = n_;
    for (int j = 1; j <= n - 1; ++j) {
      const std::size_t dstart =
          base + static_cast<std::size_t>(j) * static_cast<std::size_t>(n - 1);
      block_right(dstart, static_cast<std::size_t>(j), static_cast<std::size_t>(n - 1 - j));
      pyramid(dstart + static_cast<std::size_t>(n - 1 - j), n - j, n);
    }
  }

  /// Full-word check of the expected final pattern {Q^n ramp}^2.
  void require_final_pattern() const {
    std::vector<int> want;
    const int n = n_;
    for (int half = 0; half < 2; ++half) {
      for (int copy = 0; copy < n; ++copy) {
        for (int i = 1; i <= n - 1; ++i) want.push_back(i);
      }
      for (int i = n; i >= 1; --i) want.push_back(i);
      for (int i = 1; i <= n; ++i) want.push_back(i);
    }
    if (want != sym_) throw std::logic_error("lemma41: final slot pattern mismatch");
    for (std::size_t p = 0; p < f_.cycles.size(); ++p) check_slot(p);
  }

  Factorization take() && { return std::move(f_); }

 private:
  void check_slot(std::size_t p) const {
    const auto key = curve_class_key(cat_, f_.cycles[p]);
    if (!key || *key != key_[static_cast<std::size_t>(sym_[p])]) {
      throw std::logic_error("lemma41: slot " + std::to_string(p) +
                             " is not in the class of A" + itos(sym_[p]));
    }
  }

  void require_standard(std::size_t p) const {
    if (!f_.cycles[p].is_standard()) {
      throw std::logic_error("lemma41: slot " + std::to_string(p) +
                             " failed to canonicalize to a catalog curve");
    }
  }

  /// Swap with the right neighbor; the twists must commute (chain distance
  /// at least two).
  void move_right(std::size_t p) {
    if (std::abs(sym_[p] - sym_[p + 1]) < 2) {
      throw std::logic_error("lemma41: move_right on a non-commuting pair");
    }
    f_ = elementary_transformation(cat_, f_, p, EtDirection::Left);
    std::swap(sym_[p], sym_[p + 1]);
    check_slot(p);
    check_slot(p + 1);
  }

  /// Swap with the left neighbor; same commutation requirement.
  void move_left(std::size_t p) {
    if (p == 0 || std::abs(sym_[p - 1] - sym_[p]) < 2) {
      throw std::logic_error("lemma41: move_left on a non-commuting pair");
    }
    f_ = elementary_transformation(cat_, f_, p - 1, EtDirection::Right);
    std::swap(sym_[p - 1], sym_[p]);
    check_slot(p - 1);
    check_slot(p);
  }

  void run_right(std::size_t p, std::size_t steps) {
    for (std::size_t s = 0; s < steps; ++s) move_right(p + s);
  }

  void run_left(std::size_t p, std::size_t steps) {
    for (std::size_t s = 0; s < steps; ++s) move_left(p - s);
  }

  /// The block [lo, lo+len) commutes right past the next `steps` cycles.
  void block_right(std::size_t lo, std::size_t len, std::size_t steps) {
    for (std::size_t s = 0; s < steps; ++s) run_left(lo + len + s, len);
  }

  /// Braid shuffle t_x t_y t_x -> t_y t_x t_y at slots (p, p+1, p+2) for
  /// chain neighbors x, y, as two elementary transformations.
  void braid_triple(std::size_t p) {
    if (sym_[p] != sym_[p + 2] || std::abs(sym_[p] - sym_[p + 1]) != 1) {
      throw std::logic_error("lemma41: braid_triple on a non-braid pattern");
    }
    f_ = elementary_transformation(cat_, f_, p, EtDirection::Left);
    f_ = elementary_transformation(cat_, f_, p + 1, EtDirection::Left);
    const int x = sym_[p], y = sym_[p + 1];
    sym_[p] = y;
    sym_[p + 1] = x;
    sym_[p + 2] = y;
    for (std::size_t q = p; q <= p + 2; ++q) {
      require_standard(q);
      check_slot(q);
    }
  }

  /// Pyramid rewrite at position p, for chain indices m < top:
  ///   desc(top..m+1) asc(m..top)  -->  asc(m..top-1) desc(top..m),
  /// by recursion on the inner pyramid, two commutation runs and one braid
  /// shuffle of the top index.
  void pyramid(std::size_t p, int m, int top) {
    if (top == m) return;
    pyramid(p + 1, m, top - 1);
    const std::size_t len = static_cast<std::size_t>(top - 1 - m);
    run_right(p, len);
    run_left(p + 2 * static_cast<std::size_t>(top - m), len);
    braid_triple(p + len);
  }

  const Catalog& cat_;
  Factorization f_;
  int n_ = 0;
  std::vector<int> sym_;
  std::vector<std::string> key_;
};

/// Stage gate shared by both pipelines: the homology lift identity must hold
/// at every recorded intermediate.
void add_stage(const Catalog& cat, PipelineReport& rep, std::string name,
               Factorization f, const char* pipeline) {
  const Verdict v = check_lift(cat, f, Level::L1);
  if (!v.verified()) {
    throw std::logic_error(std::string(pipeline) + ": stage " + name +
                           " failed the homology lift check: " + v.reason);
  }
  rep.stages.push_back(PipelineStage{std::move(name), std::move(f)});
}

void expect_slot_name(const Factorization& f, std::size_t p, const std::string& name,
                      const char* what) {
  if (p >= f.cycles.size() || !f.cycles[p].is_standard() || f.cycles[p].base != name) {
    throw std::logic_error(std::string(what) + ": expected " + name + " at display slot " +
                           std::to_string(p));
  }
}

}  // namespace

const Factorization& PipelineReport::stage(std::string_view name) const {
  for (const auto& s : stages) {
    if (s.name == name) return s.factorization;
  }
  throw std::out_of_range("PipelineReport: no stage named " + std::string(name));
}

PsiMaps psi_catalog(const Catalog& cat, std::size_t budget) {
  const SurfaceKind& s = cat.surface;
  if (s.genus < 3 || s.boundary != 1) {
    throw std::invalid_argument("psi_catalog: needs a one-boundary catalog of genus >= 3");
  }
  const PsiWords& w = psi_words();
  if (!w.frozen) throw std::logic_error("psi_catalog: twist words are not frozen");
  PsiMaps m{expr_from_pairs(w.psi1), expr_from_pairs(w.psi2), expr_from_pairs(w.psi3)};

  const std::string ag = "a" + itos(s.genus);
  const std::string agp = aprime_name(s.genus);
  const std::pair<const char*, const MappingClassExpr*> named[] = {
      {"psi1", &m.psi1}, {"psi2", &m.psi2}, {"psi3", &m.psi3}};
  for (const auto& [tag, e] : named) {
    require_image_class(cat, *e, tag, ag, ag, budget);
    require_image_class(cat, *e, tag, agp, agp, budget);
  }
  require_image_class(cat, m.psi1, "psi1", "A1", "a2", budget);
  require_image_class(cat, m.psi2, "psi2", "A1", "e1", budget);
  require_image_class(cat, m.psi3, "psi3", "A1", "e2", budget);

  const Verdict lv = verify_relator(cat, lantern_relator(cat), Level::L2, budget);
  if (!lv.verified()) {
    throw std::logic_error("psi_catalog: lantern identity did not verify: " + lv.reason);
  }
  return m;
}

Factorization lemma41(const Catalog& cat) {
  const SurfaceKind& s = cat.surface;
  if (s.genus < 2 || s.boundary != 1) {
    throw std::invalid_argument("lemma41: needs a one-boundary catalog of genus >= 2");
  }
  const int n = 2 * s.genus;
  ChainShuffle shuffle(cat, positive_factorization(cat, chain_relator(cat, n)));
  const std::size_t half = static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1);
  shuffle.rewrite_half(0);
  shuffle.rewrite_half(half);
  shuffle.require_final_pattern();
  Factorization f = std::move(shuffle).take();
  const Verdict v = check_lift(cat, f, Level::L1);
  if (!v.verified()) throw std::logic_error("lemma41: lift identity failed: " + v.reason);
  return f;
}

PipelineReport build_theorem1(int g) {
  if (g < 3) throw std::invalid_argument("build_theorem1: genus must be at least 3");
  const SurfaceKind chart{g, 1};
  Catalog cat = build_catalog(chart);
  const PsiMaps psi = psi_catalog(cat);
  const std::size_t n = static_cast<std::size_t>(2 * g);
  const std::size_t L = (n - 1) * n;  // cycles emitted by one odd-chain block
  const std::size_t N = 2 * L + 4 * n;

  PipelineReport rep;
  rep.chart = chart;
  rep.catalog = cat;
  const char* me = "build_theorem1";

  add_stage(cat, rep, "base", positive_factorization(cat, chain_relator(cat, 2 * g)), me);
  add_stage(cat, rep, "c_prime", lemma41(cat), me);

  // Each half's leading (t_{A_1}..t_{A_2g-1})^2g collapses to the two
  // odd-chain boundary twists.
  const Relator codd = chain_relator(cat, 2 * g - 1);
  Factorization h = substitute(cat, rep.stage("c_prime"), 0, codd.inverted());
  h = substitute(cat, h, 2 + 2 * n, codd.inverted());
  add_stage(cat, rep, "h", std::move(h), me);

  // Conjugate both descending-ascending tails by psi1; the collapsed twists
  // are fixed and keep their slots verbatim.
  const std::vector<Segment> ramps{{2, 2 + 2 * n}, {4 + 2 * n, 4 + 4 * n}};
  add_stage(cat, rep, "h_psi1",
            partial_conjugation(cat, rep.stage("h"), ramps, psi.psi1), me);

  // Re-expand the two collapsed pairs through psi2- and psi3-twisted chains;
  // the leading images canonicalize to the lantern interior curves e1, e2.
  Factorization hp = substitute(cat, rep.stage("h_psi1"), 0, codd, psi.psi2);
  hp = substitute(cat, hp, L + 2 * n, codd, psi.psi3);
  add_stage(cat, rep, "h_prime", std::move(hp), me);

  // Collect e1, a2, e2 at the display tail.
  const Factorization& hprime = rep.stage("h_prime");
  expect_slot_name(hprime, L + 2 * n, "e2", me);
  expect_slot_name(hprime, L + n, "a2", me);
  expect_slot_name(hprime, 0, "e1", me);
  Factorization hpp = push_twist(cat, hprime, L + 2 * n, N - 1);
  hpp = push_twist(cat, hpp, L + n, N - 2);
  hpp = push_twist(cat, hpp, 0, N - 3);
  expect_slot_name(hpp, N - 3, "e1", me);
  expect_slot_name(hpp, N - 2, "a2", me);
  expect_slot_name(hpp, N - 1, "e2", me);
  add_stage(cat, rep, "h_dprime", std::move(hpp), me);

  // Trade the lantern interior for its four boundary twists.
  add_stage(cat, rep, "i",
            substitute(cat, rep.stage("h_dprime"), N - 3, lantern_relator(cat).inverted()),
            me);

  add_stage(cat, rep, "closed", close_up(cat, rep.stage("i")), me);
  if (rep.result().size() != static_cast<std::size_t>(2 * g) * (4 * g + 2) + 1) {
    throw std::logic_error("build_theorem1: unexpected final cycle count");
  }
  if (section_count(rep.result()) != 1) {
    throw std::logic_error("build_theorem1: expected exactly one (-1)-section");
  }
  return rep;
}

MappingClassExpr phi_n(int g, int n) {
  if (g < 4) throw std::invalid_argument("phi_n: genus must be at least 4");
  if (n < 1) throw std::invalid_argument("phi_n: twisting exponent must be at least 1");
  const int m = g / 2;
  const int k = m / 2;
  MappingClassExpr e;
  for (int i = 1; i <= k - 1; ++i) e.twists.push_back(twist("a" + itos(i)));
  e.twists.push_back(twist("a" + itos(k), n));
  const int blo = (m % 2 == 0) ? k + 2 : k + 3;
  const int bhi = (m % 2 == 0) ? 2 * k : 2 * k + 1;
  for (int i = blo; i <= bhi; ++i) e.twists.push_back(twist("b" + itos(i)));
  return e;
}

PipelineReport build_theorem2(int g, int n) {
  if (g < 4) throw std::invalid_argument("build_theorem2: genus must be at least 4");
  if (n < 1) throw std::invalid_argument("build_theorem2: twisting exponent must be at least 1");
  const SurfaceKind chart{g, 2};
  Catalog cat = build_catalog(chart);
  const MappingClassExpr tw = phi_n(g, n);
  const int m = g / 2;

  PipelineReport rep;
  rep.chart = chart;
  rep.catalog = cat;
  const char* me = "build_theorem2";

  add_stage(cat, rep, "base", positive_factorization(cat, w_relator(cat, 2, g)), me);

  // The inner star relator consumed twice: W_{1,m} eats a separating-curve
  // twist (g even), W_{2,m} eats one of the two middle curve pairs of each
  // tail (g odd).
  const Relator sub = (g % 2 == 0) ? w_relator(cat, 1, m) : w_relator(cat, 2, m);
  std::vector<std::string> want;
  for (const auto& d : sub.negative) {
    const auto key = curve_class_key(cat, d);
    if (!key) throw std::logic_error("build_theorem2: relator curve class unavailable");
    want.push_back(*key);
  }
  const Factorization& base = rep.base();
  std::vector<std::size_t> sites;
  for (std::size_t i = 0; i + want.size() <= base.cycles.size(); ++i) {
    bool match = true;
    for (std::size_t q = 0; q < want.size() && match; ++q) {
      const auto key = curve_class_key(cat, base.cycles[i + q]);
      match = key && *key == want[q];
    }
    if (match) {
      sites.push_back(i);
      i += want.size() - 1;
    }
  }
  if (sites.size() != 2) {
    throw std::logic_error("build_theorem2: expected exactly two substitution sites, found " +
                           std::to_string(sites.size()));
  }

  // Rightmost site first so the left index stays valid; the twisted copy is
  // the second display half.
  Factorization u = substitute(cat, base, sites[1], sub, tw);
  u = substitute(cat, u, sites[0], sub);
  add_stage(cat, rep, "u", std::move(u), me);

  add_stage(cat, rep, "closed", close_up(cat, rep.stage("u")), me);
  if (section_count(rep.result()) != 2) {
    throw std::logic_error("build_theorem2: expected exactly two (-1)-sections");
  }
  return rep;
}

}  // namespace monodromy

#include "monodromy/catalog.hpp"

#include <sstream>
#include <stdexcept>

#include "monodromy/automorphism.hpp"
#include "monodromy/mcg_action.hpp"
#include "monodromy/psi_constants.hpp"

namespace monodromy {

const CurveSpec& Catalog::at(const std::string& name) const {
  auto it = by_name.find(name);
  if (it == by_name.end()) throw std::out_of_range("catalog: unknown curve '" + name + "'");
  return curves[it->second];
}

std::optional<std::string> Catalog::find_by_class(const ConjClass& cls) const {
  auto it = by_class.find(class_key(cls));
  if (it == by_class.end()) return std::nullopt;
  return it->second;
}

std::string class_key(const ConjClass& cls) {
  const Word w = cls.unoriented_key();
  std::ostringstream os;
  for (Letter l : w.letters()) os << l << ",";
  return os.str();
}

Word c_curve_word(const SurfaceKind& s, int h) {
  if (h < 1 || h > s.genus) throw std::out_of_range("c_curve_word: index out of range");
  Word w;
  for (int i = h; i >= 1; --i) w = w * Word::gen(s.b(i), -1);
  for (int i = 1; i <= h; ++i)
    w = w * Word::gen(s.a(i)) * Word::gen(s.b(i)) * Word::gen(s.a(i), -1);
  return w;
}

Word boundary_relator_word(const SurfaceKind& s) {
  Word w = c_curve_word(s, s.genus);
  if (s.boundary == 2) w = w * Word::gen(s.d2());
  return w;
}

namespace {

struct Builder {
  SurfaceKind s;
  Catalog cat;
  bool bordered = false;

  void add(CurveSpec spec) {
    spec.cls = ConjClass(spec.word);
    spec.h1 = homology_of(s, spec.word);
    if (cat.by_name.count(spec.name)) throw std::logic_error("catalog: duplicate curve name " + spec.name);
    cat.by_name[spec.name] = cat.curves.size();
    const std::string key = class_key(spec.cls);
    cat.by_class.emplace(key, spec.name);  // keep the first name per class
    cat.curves.push_back(std::move(spec));
  }

  CurveSpec base(std::string name, Word word) {
    CurveSpec c;
    c.name = std::move(name);
    c.word = std::move(word);
    c.recipe = NoFormula{};
    return c;
  }

  std::vector<int> all_generators() const {
    std::vector<int> v;
    for (int k = 1; k <= s.pi1_rank(); ++k) v.push_back(k);
    return v;
  }

  std::vector<int> handle_generators(int h) const {
    std::vector<int> v;
    for (int i = 1; i <= h; ++i) {
      v.push_back(s.a(i));
      v.push_back(s.b(i));
    }
    return v;
  }

  // t_{a'_h} = t_{a_{h+1}}^-1 (t_{A_1} ... t_{A_{2h+1}})^{2h+2}: the odd
  // chain A_1..A_{2h+1} has neighborhood boundary curves a'_h and a_{h+1},
  // whose commuting twists the chain relation produces.
  MappingClassExpr aprime_expr(int h) const {
    MappingClassExpr chain;
    for (int k = 1; k <= 2 * h + 1; ++k) chain.twists.push_back(twist("A" + std::to_string(k)));
    MappingClassExpr e = expr_power(chain, 2 * h + 2);
    MappingClassExpr out;
    out.twists.push_back(twist("a" + std::to_string(h + 1), -1));
    return expr_product(out, e);
  }

  void add_handles() {
    for (int i = 1; i <= s.genus; ++i) {
      CurveSpec a = base("a" + std::to_string(i), Word::gen(s.a(i)));
      a.hyperelliptic_invariant = true;
      if (bordered) a.recipe = EngineRecipe{band_curve_a(s, i)};
      add(std::move(a));
      CurveSpec b = base("b" + std::to_string(i), Word::gen(s.b(i)));
      b.hyperelliptic_invariant = true;
      if (bordered) b.recipe = EngineRecipe{band_curve_b(s, i)};
      add(std::move(b));
    }
  }

  void add_boundary() {
    const int g = s.genus;
    if (s.boundary == 1) {
      CurveSpec d = base("a" + std::to_string(g + 1), c_curve_word(s, g));
      d.is_boundary = true;
      d.closed_trivial = true;
      d.hyperelliptic_invariant = true;
      d.recipe = ConjRecipe{c_curve_word(s, g), all_generators(), false};
      add(std::move(d));
    } else if (s.boundary == 2) {
      CurveSpec far = base("a" + std::to_string(g + 1), Word::gen(s.d2()));
      far.is_boundary = true;
      far.closed_trivial = true;
      far.hyperelliptic_invariant = true;
      far.recipe = FarRecipe{+1};
      add(std::move(far));
      CurveSpec near = base("a'" + std::to_string(g + 1), boundary_relator_word(s));
      near.is_boundary = true;
      near.closed_trivial = true;
      near.recipe = ConjRecipe{boundary_relator_word(s), all_generators(), true};
      add(std::move(near));
    }
  }

  void add_aprimes() {
    const int g = s.genus;
    for (int h = 1; h <= g; ++h) {
      Word w;
      bool parallel_to_boundary = h == g;
      if (h < g) {
        w = c_curve_word(s, h) * Word::gen(s.a(h + 1));
      } else if (s.boundary == 2) {
        w = boundary_relator_word(s);  // c_g * d2
      } else {
        w = c_curve_word(s, g);  // parallel to the single boundary
      }
      CurveSpec c = base("a'" + std::to_string(h), std::move(w));
      c.closed_trivial = parallel_to_boundary;
      if (bordered) {
        if (parallel_to_boundary) {
          c.recipe = ConjRecipe{c.word, all_generators(), s.boundary == 2};
        } else {
          c.recipe = ExprRecipe{aprime_expr(h)};
        }
      }
      add(std::move(c));
    }
  }

  void add_cs() {
    for (int h = 1; h <= s.genus; ++h) {
      CurveSpec c = base("c" + std::to_string(h), c_curve_word(s, h));
      c.separating_genus = h;
      c.hyperelliptic_invariant = true;
      c.closed_trivial = h == s.genus;
      if (bordered) {
        const bool all = h == s.genus && s.boundary == 1;
        c.recipe = ConjRecipe{c_curve_word(s, h), all ? all_generators() : handle_generators(h), false};
      }
      add(std::move(c));
    }
  }

  void add_chain() {
    const int g = s.genus;
    const int top = 2 * g + (s.boundary == 2 ? 1 : 0);
    for (int k = 1; k <= top; ++k) {
      Word w;
      if (k == 1) {
        w = Word::gen(s.a(1));
      } else if (k % 2 == 0) {
        w = Word::gen(s.b(k / 2));
      } else {
        const int h = (k - 1) / 2;
        w = Word::gen(s.a(h)) * (h == g ? Word::gen(s.d2(), -1) : Word::gen(s.a(h + 1), -1));
      }
      CurveSpec c = base("A" + std::to_string(k), std::move(w));
      c.hyperelliptic_invariant = true;
      if (bordered) c.recipe = EngineRecipe{band_curve_chain(s, k)};
      add(std::move(c));
    }
  }

  Word a_curve_word(int i) const {
    // Curve a_i for 1 <= i <= g+1, including the boundary cases.
    if (i <= s.genus) return Word::gen(s.a(i));
    if (s.boundary == 2) return Word::gen(s.d2());
    return c_curve_word(s, s.genus);
  }

  Word aprime_curve_word(int h) const {
    if (h < s.genus) return c_curve_word(s, h) * Word::gen(s.a(h + 1));
    return boundary_relator_word(s);
  }

  void add_bs() {
    const int g = s.genus;
    for (int h = 1; h <= g; ++h) {
      Word b01;
      for (int i = 1; i <= h; ++i) b01 = b01 * Word::gen(s.b(i));
      add(base("B" + std::to_string(h) + "_01", b01));
      add(base("B" + std::to_string(h) + "_02", b01 * aprime_curve_word(h)));
      for (int k = 1; 2 * k - 1 <= h; ++k) {
        // B^h_{2k-1} = a_k b_k b_{k+1} ... b_j c_j a_j with j = h+1-k
        const int j = h + 1 - k;
        Word w = Word::gen(s.a(k));
        for (int i = k; i <= j; ++i) w = w * Word::gen(s.b(i));
        w = w * c_curve_word(s, j) * Word::gen(s.a(j));
        add(base("B" + std::to_string(h) + "_" + std::to_string(2 * k - 1), std::move(w)));
      }
      for (int k = 1; 2 * k <= h; ++k) {
        // B^h_{2k} = a_k b_{k+1} ... b_{h-k} c_{h-k} a_{h+1-k} = a_k b_{k+1..h-k} a'_{h-k}
        Word w = Word::gen(s.a(k));
        for (int i = k + 1; i <= h - k; ++i) w = w * Word::gen(s.b(i));
        w = w * aprime_curve_word(h - k);
        add(base("B" + std::to_string(h) + "_" + std::to_string(2 * k), std::move(w)));
      }
    }
  }

  // Image of a word under a twist word in already-added catalog curves
  // (rightmost twist acts first).
  Word catalog_word_image(const std::vector<std::pair<std::string, int>>& wlist, Word w) const {
    for (auto it = wlist.rbegin(); it != wlist.rend(); ++it) {
      std::string reason;
      auto t = twist_arrow(cat, standard_curve(it->first), it->second, kDefaultWordBudget, &reason);
      if (!t) throw std::logic_error("catalog: interior-curve twist unavailable: " + reason);
      auto img = arrow_apply(*t, w, kDefaultWordBudget);
      if (!img) throw std::logic_error("catalog: interior-curve evaluation exceeded budget");
      w = std::move(*img);
    }
    return w;
  }

  void add_lantern_interiors() {
    if (!(bordered && s.boundary == 1 && s.genus >= 3 && psi_words().frozen)) return;
    const auto expr_of = [](const std::vector<std::pair<std::string, int>>& wlist) {
      MappingClassExpr e;
      for (const auto& [name, exp] : wlist) e.twists.push_back(twist(name, exp));
      return e;
    };
    const PsiWords& pw = psi_words();
    const std::pair<const char*, const std::vector<std::pair<std::string, int>>*> ents[] = {
        {"e1", &pw.psi2}, {"e2", &pw.psi3}};
    for (const auto& [name, wlist] : ents) {
      CurveSpec c = base(name, catalog_word_image(*wlist, Word::gen(s.a(1))));
      c.realization = {expr_of(*wlist), "A1"};
      c.recipe = NoFormula{};  // evaluated through the realization
      add(std::move(c));
    }
  }

  Catalog build() {
    cat.surface = s;
    cat.alphabet = s.alphabet();
    bordered = s.boundary >= 1;
    if (bordered) {
      cat.band = make_band_surface(s);
      // The arrangement is certified by tracing the boundary circles.
      if (boundary_word(cat.band, 0) != boundary_relator_word(s))
        throw std::logic_error("catalog: band arrangement traces the wrong boundary word");
      if (s.boundary == 2 &&
          ConjClass(boundary_word(cat.band, 1)).unoriented_key() != ConjClass(Word::gen(s.d2())).unoriented_key())
        throw std::logic_error("catalog: band arrangement traces the wrong far boundary");
    }
    add_handles();
    add_boundary();
    add_aprimes();
    add_cs();
    add_chain();
    add_bs();
    add_lantern_interiors();
    return std::move(cat);
  }
};

}  // namespace

Catalog build_catalog(const SurfaceKind& s) {
  if (!s.valid()) throw std::invalid_argument("build_catalog: invalid surface");
  Builder b;
  b.s = s;
  return b.build();
}

}  // namespace monodromy

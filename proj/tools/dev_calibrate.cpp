// Developer gauntlet for the band-model twist engine and the frozen sign
// conventions of the recipe twists (boundary conjugations, far-boundary arc
// prefix).  Prints one line per gate; any FAIL dumps the offending arrows so
// the convention can be flipped at its single definition site.
//
// Not part of the shipped test suite; the passing gates are mirrored there
// as assertions.

#include <cstdio>
#include <string>

#include "monodromy/catalog.hpp"
#include "monodromy/mcg_action.hpp"
#include "monodromy/psi_constants.hpp"

using namespace monodromy;

namespace {

int failures = 0;

void report(const std::string& name, bool ok) {
  std::printf("%-58s %s\n", name.c_str(), ok ? "ok" : "FAIL");
  if (!ok) ++failures;
}

std::string show(const Alphabet& al, const Pi1Arrow& f) {
  std::string out;
  for (int k = 1; k <= f.rank(); ++k) {
    out += "    " + al.format(Word::gen(k)) + " -> " + al.format(f.images[static_cast<std::size_t>(k - 1)]) + "\n";
  }
  if (f.has_arc) out += "    arc prefix: " + al.format(f.arc_prefix) + "\n";
  return out;
}

MappingClassExpr chain_expr(int upto) {
  MappingClassExpr m;
  for (int k = 1; k <= upto; ++k) m.twists.push_back(twist("A" + std::to_string(k)));
  return m;
}

Pi1Arrow eval(const Catalog& cat, const MappingClassExpr& m) {
  std::string reason;
  auto f = evaluate_pi1(cat, m, kDefaultWordBudget, &reason);
  if (!f) throw std::runtime_error("evaluation failed: " + reason);
  return *f;
}

Pi1Arrow tw(const Catalog& cat, const std::string& name, int exp = 1) {
  std::string reason;
  auto f = twist_arrow(cat, standard_curve(name), exp, kDefaultWordBudget, &reason);
  if (!f) throw std::runtime_error("twist failed: " + reason);
  return *f;
}

void compare(const Catalog& cat, const std::string& gate, const Pi1Arrow& lhs, const Pi1Arrow& rhs) {
  const bool ok = lhs == rhs;
  report(gate, ok);
  if (!ok) {
    std::printf("  lhs:\n%s  rhs:\n%s", show(cat.alphabet, lhs).c_str(), show(cat.alphabet, rhs).c_str());
  }
}

void gate_catalog_builds() {
  for (int g = 1; g <= 8; ++g)
    for (int b = 1; b <= 2; ++b) {
      bool ok = true;
      std::string why;
      try {
        (void)build_catalog({g, b});
      } catch (const std::exception& e) {
        ok = false;
        why = e.what();
      }
      report("catalog builds Sigma_" + std::to_string(g) + "^" + std::to_string(b), ok);
      if (!ok) std::printf("    %s\n", why.c_str());
    }
}

void gate_torus_images() {
  const Catalog cat = build_catalog({1, 1});
  const Alphabet& al = cat.alphabet;
  const Pi1Arrow ta = tw(cat, "a1");
  const Pi1Arrow tb = tw(cat, "b1");
  report("t_a1: a1 -> a1", al.format(ta.images[0]) == "a1");
  report("t_a1: b1 -> a1 b1", al.format(ta.images[1]) == "a1 b1");
  report("t_b1: a1 -> a1 b1^-1", al.format(tb.images[0]) == "a1 b1^-1");
  report("t_b1: b1 -> b1", al.format(tb.images[1]) == "b1");
  std::printf("  t_a1:\n%s  t_b1:\n%s", show(al, ta).c_str(), show(al, tb).c_str());
  // Inverse really inverts.
  auto c1 = arrow_compose(ta, tw(cat, "a1", -1), kDefaultWordBudget);
  report("t_a1 t_a1^-1 = id", c1 && c1->is_identity());
}

void gate_braid(const Catalog& cat, const std::string& x, const std::string& y, bool adjacent) {
  MappingClassExpr xyx, yxy;
  xyx.twists = {twist(x), twist(y), twist(x)};
  yxy.twists = {twist(y), twist(x), twist(y)};
  if (adjacent) {
    compare(cat, cat.surface.name() + " braid " + x + "," + y, eval(cat, xyx), eval(cat, yxy));
  } else {
    MappingClassExpr xy, yx;
    xy.twists = {twist(x), twist(y)};
    yx.twists = {twist(y), twist(x)};
    compare(cat, cat.surface.name() + " commute " + x + "," + y, eval(cat, xy), eval(cat, yx));
  }
}

void gate_braids() {
  const Catalog c2 = build_catalog({2, 1});
  gate_braid(c2, "a1", "b1", true);
  gate_braid(c2, "b1", "A3", true);
  gate_braid(c2, "A3", "b2", true);
  gate_braid(c2, "b2", "a2", true);
  gate_braid(c2, "a1", "a2", false);
  gate_braid(c2, "a1", "b2", false);
  gate_braid(c2, "b1", "b2", false);
  const Catalog c22 = build_catalog({2, 2});
  gate_braid(c22, "A4", "A5", true);
  gate_braid(c22, "a1", "A5", false);
}

// Even chain relation: (t_{A_1} ... t_{A_{2h}})^{4h+2} = t_{c_h}.
void gate_even_chain(int g, int b, int h) {
  const Catalog cat = build_catalog({g, b});
  const Pi1Arrow lhs = eval(cat, expr_power(chain_expr(2 * h), 4 * h + 2));
  const std::string target = h == g && b == 1 ? "a" + std::to_string(g + 1) : "c" + std::to_string(h);
  compare(cat,
          cat.surface.name() + " chain^" + std::to_string(4 * h + 2) + " = t_" + target,
          lhs, tw(cat, target));
}

// Odd chain relation: (t_{A_1} ... t_{A_{2h+1}})^{2h+2} = t_{d1} t_{d2} with
// d1 = a'_h, d2 = a_{h+1} (the two chain-neighborhood boundaries).
void gate_odd_chain(int g, int b, int h) {
  const Catalog cat = build_catalog({g, b});
  const Pi1Arrow lhs = eval(cat, expr_power(chain_expr(2 * h + 1), 2 * h + 2));
  MappingClassExpr rhs;
  rhs.twists = {twist("a'" + std::to_string(h)), twist("a" + std::to_string(h + 1))};
  compare(cat, cat.surface.name() + " odd chain (" + std::to_string(2 * h + 1) + ")", lhs, eval(cat, rhs));
}

// ExprRecipe consistency for interior a'_h: homology of the defining twist
// word (a product of chain-curve transvections) must equal the transvection
// by the stored class [a'_h], and the twist must fix the chain curves
// A_1..A_{2h+1} and the second neighborhood boundary a_{h+1}.
void gate_aprime_interior(int g, int h) {
  const Catalog cat = build_catalog({g, 1});
  const std::string name = "a'" + std::to_string(h);
  const auto& er = std::get<ExprRecipe>(cat.at(name).recipe);
  const H1Matrix lhs = evaluate_h1(cat, er.expr);
  const H1Matrix rhs = twist_matrix(cat, standard_curve(name), 1);
  report(cat.surface.name() + " t_" + name + " H1 = transvection", lhs == rhs);
  const Pi1Arrow f = tw(cat, name);
  bool fixes = true;
  std::vector<std::string> disjoint = {"a" + std::to_string(h + 1)};
  for (int k = 1; k <= 2 * h + 1; ++k) disjoint.push_back("A" + std::to_string(k));
  for (const auto& d : disjoint) {
    auto img = arrow_apply(f, cat.at(d).word, kDefaultWordBudget);
    if (!img || ConjClass(*img).unoriented_key() != cat.at(d).cls.unoriented_key()) fixes = false;
  }
  report(cat.surface.name() + " t_" + name + " fixes its chain", fixes);
}

// Star relators: two rounds of the B-curve fan plus the parity tail equal the
// one or two boundary twists of the fan's subsurface.  Checked on homology
// (the B-curve twists only carry homology actions).
std::string aprime_name(int j) {  // curve c_{j-1} a_j; for j = 1 this is a_1 itself
  return j == 1 ? "a1" : "a'" + std::to_string(j - 1);
}

void gate_w_relator(int g, int b, int h, int which) {
  const Catalog cat = build_catalog({g, b});
  const int r = h / 2;
  MappingClassExpr round;
  round.twists.push_back(twist("B" + std::to_string(h) + (which == 1 ? "_01" : "_02")));
  for (int k = 1; k <= h; ++k)
    round.twists.push_back(twist("B" + std::to_string(h) + "_" + std::to_string(k)));
  if (h % 2 == 0) {
    round.twists.push_back(twist("c" + std::to_string(r)));
  } else {
    round.twists.push_back(twist("a" + std::to_string(r + 1), 2));
    round.twists.push_back(twist(aprime_name(r + 1), 2));
  }
  MappingClassExpr w = expr_power(round, 2);
  if (which == 1) {
    w.twists.push_back(twist("c" + std::to_string(h), -1));
  } else {
    w.twists.push_back(twist("a" + std::to_string(h + 1), -1));
    w.twists.push_back(twist(aprime_name(h + 1), -1));
  }
  const H1Matrix m = evaluate_h1(cat, w);
  report(cat.surface.name() + " W_{" + std::to_string(which) + "," + std::to_string(h) + "} on H1",
         m.is_identity());
}

void gate_w_relators() {
  for (int g = 1; g <= 5; ++g)
    for (int b = 1; b <= 2; ++b)
      for (int h = 1; h <= g; ++h)
        for (int which = 1; which <= 2; ++which) {
          if (which == 2 && h == g && b == 1) continue;  // needs two boundary components
          gate_w_relator(g, b, h, which);
        }
}

// Twisted-curve identities: the map phi_n = t_{a_1}^n sends each level-two fan
// curve to an explicit left product, up to conjugation.
void gate_phi_images(int g, int n) {
  const Catalog cat = build_catalog({g, 1});
  const Pi1Arrow phi = tw(cat, "a1", n);
  const Word an = Word::gen(cat.surface.a(1)).pow(n);
  auto check = [&](const std::string& bname, const Word& stated) {
    auto img = arrow_apply(phi, cat.at(bname).word, kDefaultWordBudget);
    const bool ok = img && ConjClass(*img).unoriented_key() == ConjClass(stated).unoriented_key();
    report(cat.surface.name() + " phi_" + std::to_string(n) + "(" + bname + ")", ok);
    if (!ok && img)
      std::printf("    got %s\n    want %s\n", cat.alphabet.format(*img).c_str(),
                  cat.alphabet.format(stated).c_str());
  };
  check("B2_01", an * cat.at("B2_01").word);
  check("B2_02", an * cat.at("B2_02").word);
  check("B2_1", an * cat.at("B2_1").word);
  check("B2_2", cat.at("B2_2").word);
  check("c1", cat.at("c1").word);
}

// The frozen lantern data: psi1 carries t_{A_1} to t_{a_2}; the interior
// curves e_1 = psi2(A_1), e_2 = psi3(A_1) close the lantern with a_2; every
// psi word fixes the curves outside the chain-neighborhood it lives in.
void gate_lantern(int g) {
  const Catalog cat = build_catalog({g, 1});
  const PsiWords& pw = psi_words();
  auto expr_of = [](const std::vector<std::pair<std::string, int>>& wlist) {
    MappingClassExpr m;
    for (const auto& [name, e] : wlist) m.twists.push_back(twist(name, e));
    return m;
  };
  auto conj_twist = [&](const std::vector<std::pair<std::string, int>>& wlist) {
    const MappingClassExpr phi = expr_of(wlist);
    MappingClassExpr core;
    core.twists.push_back(twist("A1"));
    return eval(cat, expr_product(phi, expr_product(core, expr_inverse(phi))));
  };

  compare(cat, cat.surface.name() + " psi1 twist = t_a2", conj_twist(pw.psi1), tw(cat, "a2"));

  const Pi1Arrow lhs =
      *arrow_compose(conj_twist(pw.psi2),
                     *arrow_compose(tw(cat, "a2"), conj_twist(pw.psi3), kDefaultWordBudget),
                     kDefaultWordBudget);
  const Pi1Arrow rhs =
      *arrow_compose(tw(cat, "A3"),
                     *arrow_compose(tw(cat, "A5"),
                                    *arrow_compose(tw(cat, "a3"), tw(cat, "A1"), kDefaultWordBudget),
                                    kDefaultWordBudget),
                     kDefaultWordBudget);
  compare(cat, cat.surface.name() + " lantern t_e1 t_a2 t_e2", lhs, rhs);

  // The catalog's e-curves are the psi images of A_1 by construction;
  // certify their homology classes and that twists about them evaluate.
  const HomologyClass e1_class = cat.at("a1").h1 - cat.at("a3").h1;
  const HomologyClass e2_class = cat.at("a1").h1 - cat.at("a2").h1 + cat.at("a3").h1;
  report(cat.surface.name() + " [e1] = [a1] - [a3]",
         cat.at("e1").h1 == e1_class || cat.at("e1").h1 == -e1_class);
  report(cat.surface.name() + " [e2] = [a1] - [a2] + [a3]",
         cat.at("e2").h1 == e2_class || cat.at("e2").h1 == -e2_class);
  std::string reason;
  auto te1 = twist_arrow(cat, standard_curve("e1"), 1, kDefaultWordBudget, &reason);
  report(cat.surface.name() + " t_e1 evaluates via realization", te1.has_value());

  // Support: each psi fixes the subsurface boundaries a_g, a'_{g-1} and the
  // handle curves beyond the third handle.
  std::vector<std::string> fixed = {"a" + std::to_string(g), "a'" + std::to_string(g - 1)};
  if (g >= 4) fixed.push_back("b4");
  for (const auto* w : {&pw.psi1, &pw.psi2, &pw.psi3}) {
    const Pi1Arrow phi = eval(cat, expr_of(*w));
    bool ok = true;
    for (const std::string& name : fixed) {
      auto img = arrow_apply(phi, cat.at(name).word, kDefaultWordBudget);
      ok = ok && img && ConjClass(*img).unoriented_key() == cat.at(name).cls.unoriented_key();
    }
    report(cat.surface.name() + " psi word fixes boundary of its support", ok);
  }
}

}  // namespace

int main() {
  gate_catalog_builds();
  gate_torus_images();
  gate_braids();

  gate_even_chain(1, 1, 1);  // C_2 on the one-holed torus: boundary twist
  gate_even_chain(1, 2, 1);  // C_2 on the two-holed torus: t_{c_1}
  gate_even_chain(2, 1, 1);  // interior c_1
  gate_even_chain(2, 1, 2);  // C_4: boundary twist of Sigma_2^1
  gate_even_chain(2, 2, 2);  // C_4 on Sigma_2^2: t_{c_2}
  gate_even_chain(3, 1, 2);  // interior c_2

  gate_odd_chain(1, 2, 1);  // C_3 on Sigma_1^2: t_{a'_1} t_{a_2} (both boundary twists)
  gate_odd_chain(2, 1, 1);  // C_3 inside Sigma_2^1 (also checks chain^4 commutes with t_{a_2})
  gate_odd_chain(2, 2, 2);  // C_5 on Sigma_2^2: boundary twists
  gate_odd_chain(3, 1, 2);  // C_5 inside Sigma_3^1

  gate_aprime_interior(2, 1);
  gate_aprime_interior(3, 1);
  gate_aprime_interior(3, 2);
  gate_aprime_interior(4, 2);
  gate_aprime_interior(4, 3);

  gate_w_relators();

  gate_phi_images(4, 1);
  gate_phi_images(4, 2);
  gate_phi_images(4, 3);
  gate_phi_images(5, 2);

  gate_lantern(3);
  gate_lantern(4);
  gate_lantern(5);

  if (failures == 0) {
    std::printf("all gates ok\n");
    return 0;
  }
  std::printf("%d gate(s) FAILED\n", failures);
  return 1;
}

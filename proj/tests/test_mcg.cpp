#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "monodromy/catalog.hpp"
#include "monodromy/mcg_action.hpp"
#include "monodromy/psi_constants.hpp"

using namespace monodromy;

namespace {

MappingClassExpr chain_expr(int upto) {
  MappingClassExpr m;
  for (int k = 1; k <= upto; ++k) m.twists.push_back(twist("A" + std::to_string(k)));
  return m;
}

Pi1Arrow eval(const Catalog& cat, const MappingClassExpr& m) {
  std::string reason;
  auto f = evaluate_pi1(cat, m, kDefaultWordBudget, &reason);
  REQUIRE_MESSAGE(f, reason);
  return *f;
}

Pi1Arrow tw(const Catalog& cat, const std::string& name, int exp = 1) {
  std::string reason;
  auto f = twist_arrow(cat, standard_curve(name), exp, kDefaultWordBudget, &reason);
  REQUIRE_MESSAGE(f, reason);
  return *f;
}

// Name of the curve isotopic to c_{j-1} a_j (for j = 1 that is a_1 itself).
std::string aprime_name(int j) { return j == 1 ? "a1" : "a'" + std::to_string(j - 1); }

// Star relator word: two rounds of the level-h fan with the parity tail,
// then the inverse boundary twists of the fan's subsurface.
MappingClassExpr w_relator_expr(int h, int which) {
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
  return w;
}

MappingClassExpr random_expr(std::mt19937& rng, int len) {
  static const std::vector<std::string> names = {"a1", "b1", "a2", "b2", "A3", "c1", "a'1", "a3"};
  std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  MappingClassExpr m;
  for (int i = 0; i < len; ++i) m.twists.push_back(twist(names[pick(rng)], sign(rng) ? 1 : -1));
  return m;
}

}  // namespace

TEST_CASE("positive twists act as calibrated") {
  const Catalog cat = build_catalog({1, 1});
  const Alphabet& al = cat.alphabet;
  const Pi1Arrow ta = tw(cat, "a1");
  CHECK(al.format(ta.images[0]) == "a1");
  CHECK(al.format(ta.images[1]) == "a1 b1");
  const Pi1Arrow tb = tw(cat, "b1");
  CHECK(al.format(tb.images[0]) == "a1 b1^-1");
  CHECK(al.format(tb.images[1]) == "b1");
  // Homology matches: x -> x - <x, c> c.
  CHECK(twist_matrix(cat, standard_curve("a1"), 1) ==
        transvection_matrix(cat.surface, cat.at("a1").h1, -1));
}

TEST_CASE("even chain relations") {
  struct Case {
    int g, b, h;
    const char* target;
  };
  for (const Case& c : {Case{1, 1, 1, "a2"}, Case{1, 2, 1, "c1"}, Case{2, 1, 1, "c1"},
                        Case{2, 1, 2, "a3"}, Case{2, 2, 2, "c2"}, Case{3, 1, 2, "c2"}}) {
    CAPTURE(c.g);
    CAPTURE(c.h);
    const Catalog cat = build_catalog({c.g, c.b});
    CHECK(eval(cat, expr_power(chain_expr(2 * c.h), 4 * c.h + 2)) == tw(cat, c.target));
  }
}

TEST_CASE("odd chain relations") {
  struct Case {
    int g, b, h;
  };
  for (const Case& c : {Case{1, 2, 1}, Case{2, 1, 1}, Case{2, 2, 2}, Case{3, 1, 2}}) {
    CAPTURE(c.g);
    CAPTURE(c.h);
    const Catalog cat = build_catalog({c.g, c.b});
    MappingClassExpr rhs;
    rhs.twists = {twist("a'" + std::to_string(c.h)), twist("a" + std::to_string(c.h + 1))};
    CHECK(eval(cat, expr_power(chain_expr(2 * c.h + 1), 2 * c.h + 2)) == eval(cat, rhs));
  }
}

TEST_CASE("interior a'-twists are consistent") {
  struct Case {
    int g, h;
  };
  for (const Case& c : {Case{2, 1}, Case{3, 1}, Case{3, 2}, Case{4, 3}}) {
    CAPTURE(c.g);
    CAPTURE(c.h);
    const Catalog cat = build_catalog({c.g, 1});
    const std::string name = "a'" + std::to_string(c.h);
    const auto& er = std::get<ExprRecipe>(cat.at(name).recipe);
    CHECK(evaluate_h1(cat, er.expr) == twist_matrix(cat, standard_curve(name), 1));
    const Pi1Arrow f = tw(cat, name);
    std::vector<std::string> disjoint = {"a" + std::to_string(c.h + 1)};
    for (int k = 1; k <= 2 * c.h + 1; ++k) disjoint.push_back("A" + std::to_string(k));
    for (const auto& d : disjoint) {
      auto img = arrow_apply(f, cat.at(d).word, kDefaultWordBudget);
      REQUIRE(img);
      CHECK(ConjClass(*img).unoriented_key() == cat.at(d).cls.unoriented_key());
    }
  }
}

TEST_CASE("star relators hold on homology") {
  for (int g = 1; g <= 6; ++g)
    for (int b = 1; b <= 2; ++b) {
      const Catalog cat = build_catalog({g, b});
      for (int h = 1; h <= g; ++h)
        for (int which = 1; which <= 2; ++which) {
          if (which == 2 && h == g && b == 1) continue;  // needs two boundary components
          CAPTURE(g);
          CAPTURE(b);
          CAPTURE(h);
          CAPTURE(which);
          CHECK(evaluate_h1(cat, w_relator_expr(h, which)).is_identity());
        }
    }
}

TEST_CASE("twisted fan curves factor as stated") {
  // t_{a_1}^n sends the level-two fan curves to explicit left products,
  // up to conjugation.
  for (int g : {4, 5})
    for (int n : {1, 2, 3}) {
      const Catalog cat = build_catalog({g, 1});
      const Pi1Arrow phi = tw(cat, "a1", n);
      const Word an = Word::gen(cat.surface.a(1)).pow(n);
      auto image_class = [&](const std::string& bname) {
        auto img = arrow_apply(phi, cat.at(bname).word, kDefaultWordBudget);
        REQUIRE(img);
        return ConjClass(*img).unoriented_key();
      };
      CAPTURE(g);
      CAPTURE(n);
      CHECK(image_class("B2_01") == ConjClass(an * cat.at("B2_01").word).unoriented_key());
      CHECK(image_class("B2_02") == ConjClass(an * cat.at("B2_02").word).unoriented_key());
      CHECK(image_class("B2_1") == ConjClass(an * cat.at("B2_1").word).unoriented_key());
      CHECK(image_class("B2_2") == ConjClass(cat.at("B2_2").word).unoriented_key());
      CHECK(image_class("c1") == ConjClass(cat.at("c1").word).unoriented_key());
    }
}

TEST_CASE("pi1 and homology actions commute with abelianization") {
  const Catalog cat = build_catalog({2, 1});
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const MappingClassExpr m = random_expr(rng, 5);
    const Pi1Arrow f = eval(cat, m);
    const H1Matrix a = evaluate_h1(cat, m);
    CHECK(det(a) == 1);
    CHECK(preserves_intersection(cat.surface, a));
    for (int k = 1; k <= cat.surface.pi1_rank(); ++k) {
      CHECK(homology_of(cat.surface, f.images[static_cast<std::size_t>(k - 1)]) ==
            a.apply(homology_of(cat.surface, Word::gen(k))));
    }
  }
}

TEST_CASE("twists about image curves") {
  const Catalog cat = build_catalog({2, 1});
  // phi(c) with phi the empty twist word is just c.
  CurveRef dressed = image_curve(MappingClassExpr{}, standard_curve("a2"));
  CHECK(tw(cat, "a2") == *twist_arrow(cat, dressed, 1, kDefaultWordBudget, nullptr));
  // t_{phi(c)} = phi t_c phi^-1.
  MappingClassExpr phi;
  phi.twists = {twist("a1"), twist("b1", -1), twist("A3")};
  const CurveRef image = image_curve(phi, standard_curve("a2"));
  const Pi1Arrow lhs = *twist_arrow(cat, image, 1, kDefaultWordBudget, nullptr);
  MappingClassExpr core;
  core.twists = {twist("a2")};
  const Pi1Arrow rhs = eval(cat, expr_product(phi, expr_product(core, expr_inverse(phi))));
  CHECK(lhs == rhs);
  MappingClassExpr one;
  one.twists = {twist(image, 1)};
  CHECK(twist_matrix(cat, image, 1) == evaluate_h1(cat, one));
}

TEST_CASE("identity verdicts") {
  const Catalog cat = build_catalog({2, 1});
  MappingClassExpr braid;  // t_x t_y t_x (t_y t_x t_y)^-1 for adjacent x, y
  braid.twists = {twist("a1"), twist("b1"), twist("a1"), twist("b1", -1), twist("a1", -1),
                  twist("b1", -1)};
  CHECK(is_identity(cat, braid, Level::L1).verified());
  CHECK(is_identity(cat, braid, Level::L2).verified());

  MappingClassExpr wrong;  // adjacent twists do not commute
  wrong.twists = {twist("a1"), twist("b1"), twist("a1", -1), twist("b1", -1)};
  CHECK(is_identity(cat, wrong, Level::L1).refuted());
  CHECK(is_identity(cat, wrong, Level::L2).refuted());

  // Fan-curve twists carry no pi1 formula: L1 decides, L2 is inconclusive.
  const MappingClassExpr w12 = w_relator_expr(2, 1);
  CHECK(is_identity(cat, w12, Level::L1).verified());
  const Verdict v = is_identity(cat, w12, Level::L2);
  CHECK(v.status == Verdict::Status::Inconclusive);
  CHECK(!v.reason.empty());
}

TEST_CASE("frozen psi words and the lantern configuration") {
  const PsiWords& pw = psi_words();
  REQUIRE(pw.frozen);
  auto expr_of = [](const std::vector<std::pair<std::string, int>>& wlist) {
    MappingClassExpr m;
    for (const auto& [name, e] : wlist) m.twists.push_back(twist(name, e));
    return m;
  };
  for (int g : {3, 4}) {
    const Catalog cat = build_catalog({g, 1});
    auto conj_twist = [&](const std::vector<std::pair<std::string, int>>& wlist) {
      const MappingClassExpr phi = expr_of(wlist);
      MappingClassExpr core;
      core.twists.push_back(twist("A1"));
      return eval(cat, expr_product(phi, expr_product(core, expr_inverse(phi))));
    };

    // psi1 carries t_{A_1} to t_{a_2}.
    CHECK(conj_twist(pw.psi1) == tw(cat, "a2"));

    // The catalog's interior lantern curves are the psi images of A_1.
    const HomologyClass e1_class = cat.at("a1").h1 - cat.at("a3").h1;
    const HomologyClass e2_class = cat.at("a1").h1 - cat.at("a2").h1 + cat.at("a3").h1;
    CHECK((cat.at("e1").h1 == e1_class || cat.at("e1").h1 == -e1_class));
    CHECK((cat.at("e2").h1 == e2_class || cat.at("e2").h1 == -e2_class));

    // Exact lantern identity t_{e1} t_{a2} t_{e2} = t_{A3} t_{A5} t_{a3} t_{A1},
    // stated as a relator and decided on the fundamental group.
    MappingClassExpr rel;
    rel.twists = {twist(image_curve(expr_of(pw.psi2), standard_curve("A1"))),
                  twist("a2"),
                  twist(image_curve(expr_of(pw.psi3), standard_curve("A1"))),
                  twist("A1", -1),
                  twist("a3", -1),
                  twist("A5", -1),
                  twist("A3", -1)};
    CHECK(is_identity(cat, rel, Level::L1).verified());
    CHECK(is_identity(cat, rel, Level::L2).verified());

    // Twists about the catalog e-curves evaluate through their realizations
    // and agree with the conjugated chain twist.
    CHECK(tw(cat, "e1") == conj_twist(pw.psi2));
    CHECK(tw(cat, "e2") == conj_twist(pw.psi3));

    // The psi words are supported away from the subsurface boundaries.
    for (const auto* w : {&pw.psi1, &pw.psi2, &pw.psi3}) {
      const Pi1Arrow phi = eval(cat, expr_of(*w));
      for (const std::string name :
           {"a" + std::to_string(g), "a'" + std::to_string(g - 1)}) {
        auto img = arrow_apply(phi, cat.at(name).word, kDefaultWordBudget);
        REQUIRE(img);
        CHECK(ConjClass(*img).unoriented_key() == cat.at(name).cls.unoriented_key());
      }
    }
  }
}

TEST_CASE("word budget breaches are reported") {
  const Catalog cat = build_catalog({2, 1});
  const MappingClassExpr big = expr_power(MappingClassExpr{{twist("a1"), twist("b1")}}, 64);
  std::string reason;
  CHECK(!evaluate_pi1(cat, big, 50, &reason));
  CHECK(!reason.empty());
  const Verdict v = is_identity(cat, big, Level::L2, 50);
  CHECK(v.status == Verdict::Status::Inconclusive);
}

#include <doctest.h>

#include <stdexcept>

#include "monodromy/factorization.hpp"

using namespace monodromy;

namespace {

std::vector<std::string> slot_classes(const Catalog& cat, const Factorization& f) {
  std::vector<std::string> keys;
  keys.reserve(f.cycles.size());
  for (const auto& c : f.cycles) {
    const auto k = curve_class_key(cat, c);
    REQUIRE(k.has_value());
    keys.push_back(*k);
  }
  return keys;
}

MappingClassExpr single(const std::string& name, int exp = 1) {
  MappingClassExpr e;
  e.twists.push_back(twist(name, exp));
  return e;
}

}  // namespace

TEST_CASE("positive factorizations from boundary-lifted relators") {
  const Catalog g3 = build_catalog({3, 1});
  const Factorization c6 = positive_factorization(g3, chain_relator(g3, 6));
  CHECK(c6.cycles.size() == 84);
  CHECK(c6.boundary_exponents == std::vector<int>{1});
  CHECK_FALSE(c6.closed);
  CHECK(c6.trace.empty());
  CHECK(check_lift(g3, c6, Level::L1).verified());

  const Catalog t2 = build_catalog({1, 2});
  const Factorization c3 = positive_factorization(t2, chain_relator(t2, 3));
  CHECK(c3.cycles.size() == 12);
  CHECK(c3.boundary_exponents == std::vector<int>{1, 1});
  CHECK(check_lift(t2, c3, Level::L2).verified());

  // Relators whose negative part is not boundary-parallel carry no lift.
  const Catalog g2 = build_catalog({2, 1});
  CHECK_THROWS_AS(positive_factorization(g2, chain_relator(g2, 3)), std::invalid_argument);
  const Catalog g2b2 = build_catalog({2, 2});
  CHECK_THROWS_AS(positive_factorization(g2b2, mck_relator(g2b2)), std::invalid_argument);
}

TEST_CASE("elementary transformations") {
  const Catalog g2 = build_catalog({1, 1});
  const Factorization base = positive_factorization(g2, chain_relator(g2, 2));

  SUBCASE("disjoint adjacent pair swaps plainly") {
    Factorization g;
    g.surface = g2.surface;
    g.cycles = {standard_curve("a1"), standard_curve("a2")};
    g.boundary_exponents = {0};
    const Factorization left = elementary_transformation(g2, g, 0, EtDirection::Left);
    CHECK(left.cycles[0] == standard_curve("a2"));
    CHECK(left.cycles[1] == standard_curve("a1"));
    const Factorization right = elementary_transformation(g2, g, 0, EtDirection::Right);
    CHECK(right.cycles[0] == standard_curve("a2"));
    CHECK(right.cycles[1] == standard_curve("a1"));
  }

  SUBCASE("left then right is the identity on classes") {
    const Factorization once = elementary_transformation(g2, base, 3, EtDirection::Left);
    const Factorization back = elementary_transformation(g2, once, 3, EtDirection::Right);
    CHECK(slot_classes(g2, back) == slot_classes(g2, base));
    CHECK(back.cycles.size() == base.cycles.size());
    CHECK(back.trace.size() == 2);
    CHECK(back.trace[0].kind == MoveKind::ElementaryLeft);
    CHECK(back.trace[1].kind == MoveKind::ElementaryRight);
    CHECK(back.trace[1].sigma_delta == 0);
  }

  SUBCASE("right move computes the image curve exactly") {
    Factorization g;
    g.surface = g2.surface;
    g.cycles = {standard_curve("a1"), standard_curve("b1")};
    g.boundary_exponents = {0};
    const Factorization moved = elementary_transformation(g2, g, 0, EtDirection::Right);
    CHECK(moved.cycles[1] == standard_curve("a1"));
    // t_{a1}(b1) is the class of the loop a1 b1.
    const auto key = curve_class_key(g2, moved.cycles[0]);
    REQUIRE(key.has_value());
    CHECK(*key == class_key(ConjClass(g2.alphabet.parse("a1 b1"))));
  }

  CHECK_THROWS_AS(elementary_transformation(g2, base, 11, EtDirection::Left),
                  std::out_of_range);
}

TEST_CASE("simultaneous conjugation") {
  const Catalog g2 = build_catalog({2, 1});
  const Factorization base = positive_factorization(g2, chain_relator(g2, 4));

  const Factorization same = simultaneous_conjugation(g2, base, MappingClassExpr{});
  CHECK(same.cycles == base.cycles);
  CHECK(same.boundary_exponents == base.boundary_exponents);
  CHECK(same.trace.size() == 1);

  const Factorization moved = simultaneous_conjugation(g2, base, single("b1"));
  CHECK(moved.cycles.size() == base.cycles.size());
  CHECK(check_lift(g2, moved, Level::L1).verified());
  // Slotwise, the new class is the image class.
  const H1Matrix m = evaluate_h1(g2, single("b1"));
  for (std::size_t i = 0; i < base.cycles.size(); ++i) {
    const HomologyClass expect = m.apply(curve_h1(g2, base.cycles[i]));
    const HomologyClass got = curve_h1(g2, moved.cycles[i]);
    CAPTURE(i);
    CHECK((got == expect || got == -expect));
  }
}

TEST_CASE("substitutions consume and emit relator sides") {
  const Catalog g2 = build_catalog({1, 1});
  const Factorization base = positive_factorization(g2, chain_relator(g2, 2));
  const Relator braid =
      braid_relator(g2, standard_curve("A1"), standard_curve("A2"), BraidForm::Once);

  // The inverted braid consumes the leading (A1, A2, A1) run of (A1 A2)^6.
  const Factorization swapped = substitute(g2, base, 0, braid.inverted());
  CHECK(swapped.cycles.size() == base.cycles.size());
  CHECK(swapped.cycles[0].base == "A2");
  CHECK(swapped.cycles[1].base == "A1");
  CHECK(swapped.cycles[2].base == "A2");
  CHECK(swapped.trace.back().kind == MoveKind::Substitute);
  CHECK(swapped.trace.back().relator == "B1(A1,A2)^-1");
  CHECK(swapped.trace.back().sigma_delta == 0);
  CHECK(swapped.trace.back().cycle_delta == 0);
  CHECK(check_lift(g2, swapped, Level::L1).verified());

  const Factorization back = substitute(g2, swapped, 0, braid);
  CHECK(back.cycles == base.cycles);

  // Mismatch is rejected by class, not by trust.
  CHECK_THROWS_AS(substitute(g2, base, 1, braid.inverted()), std::invalid_argument);
  // phi must fix the consumed curves.
  CHECK_THROWS_AS(substitute(g2, base, 0, braid.inverted(), single("A2")),
                  std::invalid_argument);
  // phi fixing all consumed curves passes (c1 is disjoint from the run).
  CHECK_NOTHROW(substitute(g2, base, 0, braid.inverted(), single("c1")));
}

TEST_CASE("odd-chain substitution collapses a torus-with-holes block") {
  const Catalog t2 = build_catalog({1, 2});
  const Factorization base = positive_factorization(t2, chain_relator(t2, 3));
  const Relator c3 = chain_relator(t2, 3);

  const Factorization collapsed = substitute(t2, base, 0, c3.inverted());
  REQUIRE(collapsed.cycles.size() == 2);
  CHECK(collapsed.cycles[0].base == "a2");
  CHECK(collapsed.cycles[1].base == "a'1");
  CHECK(collapsed.trace.back().cycle_delta == -10);
  // Both boundary curves cap to discs here, so no signature increment is
  // assigned - and none is silently invented.
  CHECK_FALSE(collapsed.trace.back().sigma_delta.has_value());
  CHECK(check_lift(t2, collapsed, Level::L2).verified());

  const Factorization expanded = substitute(t2, collapsed, 0, c3);
  CHECK(expanded.cycles == base.cycles);
  CHECK(expanded.trace.back().cycle_delta == 10);
}

TEST_CASE("partial conjugation by segments") {
  const Catalog t2 = build_catalog({1, 2});
  const Factorization base = positive_factorization(t2, chain_relator(t2, 3));

  // phi moving a complement cycle is rejected.
  CHECK_THROWS_AS(
      partial_conjugation(t2, base, {Segment{0, 3}}, single("A1")),
      std::invalid_argument);
  CHECK_THROWS_AS(partial_conjugation(t2, base, {}, single("A1")), std::invalid_argument);
  CHECK_THROWS_AS(partial_conjugation(t2, base, {Segment{0, 0}}, single("A1")),
                  std::invalid_argument);

  // Whole-word segment: equals a simultaneous conjugation slot by slot.
  const MappingClassExpr phi = single("A2");
  const Factorization part =
      partial_conjugation(t2, base, {Segment{0, base.cycles.size()}}, phi);
  const Factorization glob = simultaneous_conjugation(t2, base, phi);
  CHECK(slot_classes(t2, part) == slot_classes(t2, glob));
  CHECK(part.boundary_exponents == base.boundary_exponents);
  CHECK(part.trace.back().kind == MoveKind::PartialConjugate);
  CHECK(part.trace.back().sigma_delta == 0);
  CHECK(check_lift(t2, part, Level::L2).verified());
}

TEST_CASE("relator-backed partial conjugation") {
  const Catalog g2 = build_catalog({2, 1});
  const Relator w11 = w_relator(g2, 1, 1);
  // The positive run of W_{1,1} as a bare word (no lift claim): the move
  // only ever preserves the product, whatever it is.
  Factorization base;
  base.surface = g2.surface;
  base.cycles = w11.positive;
  base.boundary_exponents = {0};
  REQUIRE(base.cycles.size() == 12);

  // phi = t_{a1} fixes the relator's dropped curve c1 and moves the spine.
  const Factorization twisted = partial_conjugation(g2, base, 0, w11, single("a1"));
  CHECK(twisted.cycles.size() == 12);
  CHECK(twisted.trace.size() == 2);
  CHECK(twisted.trace[0].kind == MoveKind::Substitute);
  CHECK(twisted.trace[0].relator == "W(1,1)^-1");
  CHECK(twisted.trace[1].relator == "W(1,1)");
  CHECK(twisted.trace[0].cycle_delta + twisted.trace[1].cycle_delta == 0);
  // The a1-cycles themselves are fixed; the spine cycles move.
  CHECK(twisted.cycles[2] == standard_curve("a1"));
  const auto moved = curve_class_key(g2, twisted.cycles[0]);
  const auto orig = curve_class_key(g2, base.cycles[0]);
  REQUIRE((moved.has_value() && orig.has_value()));
  CHECK(*moved != *orig);

  // phi moving the dropped curve c1 is rejected inside the second step.
  CHECK_THROWS_AS(partial_conjugation(g2, base, 0, w11, single("A3")),
                  std::invalid_argument);
}

TEST_CASE("pushing a twist to the far end and back") {
  const Catalog g2 = build_catalog({1, 1});
  const Factorization base = positive_factorization(g2, chain_relator(g2, 2));
  const std::size_t last = base.cycles.size() - 1;

  const Factorization pushed = push_twist(g2, base, 0, last);
  CHECK(pushed.cycles[last] == base.cycles[0]);  // the moved twist is unchanged
  CHECK(pushed.trace.size() == last);
  CHECK(check_lift(g2, pushed, Level::L1).verified());

  const Factorization back = push_twist(g2, pushed, last, 0);
  CHECK(slot_classes(g2, back) == slot_classes(g2, base));

  CHECK_THROWS_AS(push_twist(g2, base, 0, base.cycles.size()), std::out_of_range);
}

TEST_CASE("closing up records sections") {
  const Catalog t2 = build_catalog({1, 2});
  const Factorization base = positive_factorization(t2, chain_relator(t2, 3));
  const Factorization closed = close_up(t2, base);
  CHECK(closed.closed);
  CHECK(closed.cycles == base.cycles);
  CHECK(section_count(closed) == 2);
  CHECK(closed.trace.back().kind == MoveKind::CloseUp);
  CHECK_THROWS_AS(close_up(t2, closed), std::invalid_argument);

  const Catalog t1 = build_catalog({1, 1});
  const Factorization c2 = close_up(t1, positive_factorization(t1, chain_relator(t1, 2)));
  CHECK(section_count(c2) == 1);
}

TEST_CASE("JSON round-trip is byte-exact") {
  const Catalog g2 = build_catalog({1, 1});
  Factorization f = positive_factorization(g2, chain_relator(g2, 2));
  f = elementary_transformation(g2, f, 0, EtDirection::Right);
  f = substitute(g2, f, 3,
                 braid_relator(g2, standard_curve("A1"), standard_curve("A2"),
                               BraidForm::Once));
  f = close_up(g2, f);

  const std::string text = to_json_text(f);
  const Factorization parsed = factorization_from_json(text);
  CHECK(parsed == f);
  CHECK(to_json_text(parsed) == text);

  CHECK_THROWS_AS(factorization_from_json("{\"schema\":\"monodromy/2\"}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(factorization_from_json("{not json"), std::invalid_argument);
}

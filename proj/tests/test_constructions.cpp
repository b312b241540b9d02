#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "monodromy/constructions.hpp"

using namespace monodromy;

namespace {

std::string key_of(const Catalog& cat, const std::string& name) {
  return class_key(cat.at(name).cls);
}

std::string slot_key(const Catalog& cat, const Factorization& f, std::size_t i) {
  const auto k = curve_class_key(cat, f.cycles[i]);
  REQUIRE_MESSAGE(k.has_value(), "slot " << i << " has no computable class");
  return *k;
}

/// Chain-index pattern of one rewritten half: (A_1..A_n-1)^n then the
/// descending-ascending tail A_n..A_1 A_1..A_n.
std::vector<int> half_pattern(int n) {
  std::vector<int> out;
  for (int copy = 0; copy < n; ++copy) {
    for (int i = 1; i <= n - 1; ++i) out.push_back(i);
  }
  for (int i = n; i >= 1; --i) out.push_back(i);
  for (int i = 1; i <= n; ++i) out.push_back(i);
  return out;
}

MappingClassExpr chain_power(int n, int copies) {
  MappingClassExpr e;
  for (int c = 0; c < copies; ++c) {
    for (int i = 1; i <= n; ++i) e.twists.push_back(twist("A" + std::to_string(i)));
  }
  return e;
}

}  // namespace

TEST_CASE("chain shuffle reaches the two-block normal form at genus 2") {
  const Catalog cat = build_catalog({2, 1});
  const Factorization f = lemma41(cat);

  CHECK(f.size() == 40);  // elementary transformations preserve length
  CHECK(f.boundary_exponents == std::vector<int>{1});
  CHECK(!f.closed);

  // Both displayed sides act identically on homology.
  MappingClassExpr rhs;
  const std::vector<int> pat = half_pattern(4);
  for (int half = 0; half < 2; ++half) {
    for (int i : pat) rhs.twists.push_back(twist("A" + std::to_string(i)));
  }
  CHECK(evaluate_h1(cat, chain_power(4, 10)) == evaluate_h1(cat, rhs));

  // The realized slots match that pattern class by class.
  std::size_t p = 0;
  for (int half = 0; half < 2; ++half) {
    for (int i : pat) {
      CHECK(slot_key(cat, f, p) == key_of(cat, "A" + std::to_string(i)));
      ++p;
    }
  }
  CHECK(p == f.size());

  // The move trace is a pure elementary-transformation certificate.
  CHECK(!f.trace.empty());
  for (const auto& m : f.trace) {
    const bool et = m.kind == MoveKind::ElementaryLeft || m.kind == MoveKind::ElementaryRight;
    CHECK(et);
    CHECK(m.sigma_delta == 0);
  }
}

TEST_CASE("chain shuffle matches the displayed slot classes at genus 3") {
  const Catalog cat = build_catalog({3, 1});
  const Factorization f = lemma41(cat);

  CHECK(f.size() == 84);
  const std::vector<int> pat = half_pattern(6);
  REQUIRE(2 * pat.size() == f.size());
  for (std::size_t half = 0; half < 2; ++half) {
    for (std::size_t q = 0; q < pat.size(); ++q) {
      CHECK(slot_key(cat, f, half * pat.size() + q) ==
            key_of(cat, "A" + std::to_string(pat[q])));
    }
  }

  CHECK(to_json_text(lemma41(cat)) == to_json_text(f));  // deterministic replay
}

TEST_CASE("chain shuffle rejects unsupported charts") {
  CHECK_THROWS_AS(lemma41(build_catalog({1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(lemma41(build_catalog({2, 2})), std::invalid_argument);
}

TEST_CASE("auxiliary mapping classes certify their defining images") {
  const Catalog cat = build_catalog({3, 1});
  const PsiMaps m = psi_catalog(cat);

  auto image_key = [&](const MappingClassExpr& phi, const std::string& from) {
    std::string reason;
    const auto w = curve_word(cat, image_curve(phi, standard_curve(from)), kDefaultWordBudget,
                              &reason);
    REQUIRE_MESSAGE(w.has_value(), reason);
    return class_key(ConjClass(*w));
  };

  CHECK(image_key(m.psi1, "A1") == key_of(cat, "a2"));
  CHECK(image_key(m.psi2, "A1") == key_of(cat, "e1"));
  CHECK(image_key(m.psi3, "A1") == key_of(cat, "e2"));
  for (const auto* phi : {&m.psi1, &m.psi2, &m.psi3}) {
    CHECK(image_key(*phi, "a3") == key_of(cat, "a3"));
    CHECK(image_key(*phi, "a'2") == key_of(cat, "a'2"));
  }

  // The same words certify on any larger one-boundary catalog.
  CHECK_NOTHROW(psi_catalog(build_catalog({4, 1})));
  CHECK_THROWS_AS(psi_catalog(build_catalog({2, 1})), std::invalid_argument);
  CHECK_THROWS_AS(psi_catalog(build_catalog({3, 2})), std::invalid_argument);
}

TEST_CASE("first pipeline reproduces the displayed intermediates at genus 3") {
  const PipelineReport rep = build_theorem1(3);
  const Catalog& cat = rep.catalog;
  const int n = 6;
  const std::size_t L = 30;  // one expanded odd-chain block

  const std::vector<std::string> names{"base",    "c_prime", "h", "h_psi1",
                                       "h_prime", "h_dprime", "i", "closed"};
  REQUIRE(rep.stages.size() == names.size());
  for (std::size_t i = 0; i < names.size(); ++i) CHECK(rep.stages[i].name == names[i]);
  CHECK_THROWS_AS(rep.stage("nope"), std::out_of_range);

  // H = (t_a3 t_a'2 . t_A6..t_A1 t_A1..t_A6)^2, one boundary twist.
  const Factorization& h = rep.stage("h");
  REQUIRE(h.size() == 28);
  CHECK(h.boundary_exponents == std::vector<int>{1});
  for (std::size_t block = 0; block < 2; ++block) {
    const std::size_t at = block * 14;
    CHECK(h.cycles[at].base == "a3");
    CHECK(h.cycles[at + 1].base == "a'2");
    for (int q = 0; q < 2 * n; ++q) {
      const int idx = q < n ? n - q : q - n + 1;
      CHECK(slot_key(cat, h, at + 2 + static_cast<std::size_t>(q)) ==
            key_of(cat, "A" + std::to_string(idx)));
    }
  }

  // The conjugated tails keep the collapsed pair verbatim and canonicalize
  // the two images of A_1 to a_2.
  const Factorization& hpsi = rep.stage("h_psi1");
  REQUIRE(hpsi.size() == 28);
  for (std::size_t block = 0; block < 2; ++block) {
    const std::size_t at = block * 14;
    CHECK(hpsi.cycles[at] == h.cycles[at]);
    CHECK(hpsi.cycles[at + 1] == h.cycles[at + 1]);
    CHECK(hpsi.cycles[at + 2 + 5].base == "a2");
    CHECK(hpsi.cycles[at + 2 + 6].base == "a2");
  }

  // H' re-expands both pairs: e_1 leads the first block, e_2 the second.
  const Factorization& hp = rep.stage("h_prime");
  REQUIRE(hp.size() == 84);
  for (std::size_t copy = 0; copy < 6; ++copy) {
    CHECK(slot_key(cat, hp, copy * 5) == key_of(cat, "e1"));
    CHECK(slot_key(cat, hp, L + 12 + copy * 5) == key_of(cat, "e2"));
  }
  CHECK(hp.cycles[0].base == "e1");
  CHECK(hp.cycles[L + 6].base == "a2");
  CHECK(hp.cycles[L + 12].base == "e2");

  // H'' ends with the lantern interior triple; the head keeps 8g^2+4g-3
  // twists.
  const Factorization& hpp = rep.stage("h_dprime");
  REQUIRE(hpp.size() == 84);
  CHECK(hpp.cycles[81].base == "e1");
  CHECK(hpp.cycles[82].base == "a2");
  CHECK(hpp.cycles[83].base == "e2");

  // I swaps the triple for the four lantern boundary twists.
  const Factorization& fi = rep.stage("i");
  REQUIRE(fi.size() == 85);
  CHECK(fi.cycles[81].base == "A3");
  CHECK(fi.cycles[82].base == "A5");
  CHECK(fi.cycles[83].base == "a3");
  CHECK(fi.cycles[84].base == "A1");
  CHECK(!fi.closed);

  const Factorization& closed = rep.result();
  CHECK(closed.size() == 85);
  CHECK(closed.closed);
  CHECK(closed.boundary_exponents == std::vector<int>{1});
  CHECK(section_count(closed) == 1);

  // Signature bookkeeping: every move carries an increment and they sum to
  // the lantern trade.
  int sum = 0;
  std::multiset<int> nonzero;
  for (const auto& m : closed.trace) {
    REQUIRE(m.sigma_delta.has_value());
    sum += *m.sigma_delta;
    if (*m.sigma_delta != 0) nonzero.insert(*m.sigma_delta);
  }
  CHECK(sum == -1);
  CHECK(nonzero == std::multiset<int>{-16, -16, -1, 16, 16});
}

TEST_CASE("first pipeline is deterministic and scales to genus 4") {
  const PipelineReport rep = build_theorem1(4);
  CHECK(rep.result().size() == 145);  // 2g(4g+2)+1
  CHECK(section_count(rep.result()) == 1);
  CHECK(rep.stage("h_dprime").cycles[144 - 3 - 1].base != "");  // stage exposed

  const PipelineReport again = build_theorem1(4);
  CHECK(to_json_text(again.result()) == to_json_text(rep.result()));
  CHECK(to_json_text(again.stage("h_dprime")) == to_json_text(rep.stage("h_dprime")));

  CHECK_THROWS_AS(build_theorem1(2), std::invalid_argument);
}

TEST_CASE("twisting classes expand the two parity displays") {
  CHECK(phi_n(4, 3).display() == "t[a1]^3");
  CHECK(phi_n(5, 2).display() == "t[a1]^2");
  CHECK(phi_n(6, 1).display() == "t[a1]");
  CHECK(phi_n(7, 4).display() == "t[a1]^4");
  CHECK(phi_n(8, 2).display() == "t[a1] t[a2]^2 t[b4]");
  CHECK(phi_n(10, 1).display() == "t[a1] t[a2] t[b5]");
  CHECK(phi_n(12, 5).display() == "t[a1] t[a2] t[a3]^5 t[b5] t[b6]");

  CHECK_THROWS_AS(phi_n(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(phi_n(4, 0), std::invalid_argument);

  // The class fixes the curves the second pipeline consumes.
  for (int g = 4; g <= 8; ++g) {
    const Catalog cat = build_catalog({g, 2});
    const int m = g / 2;
    for (int n = 1; n <= 4; ++n) {
      const MappingClassExpr phi = phi_n(g, n);
      const auto fixed = [&](const std::string& name) {
        const auto k = curve_class_key(cat, image_curve(phi, standard_curve(name)));
        return k.has_value() && *k == key_of(cat, name);
      };
      if (g % 2 == 0) {
        CHECK_MESSAGE(fixed("c" + std::to_string(m)), "g=" << g << " n=" << n);
      } else {
        CHECK_MESSAGE(fixed("a" + std::to_string(m + 1)), "g=" << g << " n=" << n);
        CHECK_MESSAGE(fixed(aprime_name(m + 1)), "g=" << g << " n=" << n);
      }
    }
  }
}

TEST_CASE("second pipeline builds the twisted star factorizations") {
  const PipelineReport rep = build_theorem2(4, 1);
  const Catalog& cat = rep.catalog;

  const std::vector<std::string> names{"base", "u", "closed"};
  REQUIRE(rep.stages.size() == 3);
  for (std::size_t i = 0; i < names.size(); ++i) CHECK(rep.stages[i].name == names[i]);

  CHECK(rep.base().size() == 12);
  const Factorization& u = rep.stage("u");
  CHECK(u.size() == 26);  // each half: 5 spine twists + 8 substituted twists
  CHECK(u.boundary_exponents == std::vector<int>{1, 1});

  // Substitution trace: the twisted copy first (right site), then the plain
  // one.
  std::vector<std::string> phis;
  for (const auto& m : u.trace) {
    if (m.kind == MoveKind::Substitute) phis.push_back(m.phi);
  }
  REQUIRE(phis.size() == 2);
  CHECK(phis[0] == "t[a1]");
  CHECK(phis[1] == "1");

  // First display half is untouched catalog curves; the second half carries
  // the twisted images.
  bool any_composite_left = false, any_composite_right = false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!u.cycles[i].is_standard()) (i < 13 ? any_composite_left : any_composite_right) = true;
  }
  CHECK(!any_composite_left);
  CHECK(any_composite_right);

  const Factorization& closed = rep.result();
  CHECK(closed.closed);
  CHECK(closed.size() == 26);
  CHECK(section_count(closed) == 2);

  // The consumed separating twists are gone: no slot is in the class of c_2.
  for (std::size_t i = 0; i < u.size(); ++i) {
    CHECK(slot_key(cat, u, i) != key_of(cat, "c2"));
  }
}

TEST_CASE("second pipeline handles the odd-genus tails") {
  const PipelineReport rep = build_theorem2(5, 2);
  const Catalog& cat = rep.catalog;

  CHECK(rep.base().size() == 20);
  const Factorization& u = rep.stage("u");
  CHECK(u.size() == 32);
  CHECK(section_count(rep.result()) == 2);

  // Each original tail t_a3 t_a3 t_a'2 t_a'2 keeps its outer pair.
  int a3_count = 0, ap_count = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const std::string k = slot_key(cat, u, i);
    if (k == key_of(cat, "a3")) ++a3_count;
    if (k == key_of(cat, "a'2")) ++ap_count;
  }
  CHECK(a3_count >= 2);
  CHECK(ap_count >= 2);
}

TEST_CASE("second pipeline distinguishes twisting exponents deterministically") {
  const PipelineReport one = build_theorem2(4, 1);
  const PipelineReport two = build_theorem2(4, 2);
  CHECK(one.result().size() == two.result().size());
  CHECK(to_json_text(one.result()) != to_json_text(two.result()));

  const PipelineReport again = build_theorem2(4, 2);
  CHECK(to_json_text(again.result()) == to_json_text(two.result()));

  CHECK_THROWS_AS(build_theorem2(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_theorem2(4, 0), std::invalid_argument);
}

// Search for the three mapping classes, supported in the twice-holed
// genus-two neighborhood of the chain A_1 ∪ ... ∪ A_5, that carry the first
// chain curve A_1 to the interior curves of the lantern configuration used
// by the main construction.
//
// A candidate is a word in twists about interior curves of that neighborhood
// (the chain curves themselves plus a_2, c_1 and a'_1 — the chain twists
// alone generate only the symmetric mapping classes of the neighborhood, and
// a_2 is not symmetric, so the wider set is required).  Any such word fixes
// the neighborhood boundaries and everything outside.  BFS over the isotopy
// class of the image of A_1 (one shortest witness per unoriented class),
// filtering:
//
//   psi1: image isotopic to a_2
//   psi2: image e_1 with [e_1] = ±([a_1] - [a_3])
//   psi3: image e_2 with [e_2] = ±([a_1] - [a_2] + [a_3])
//
// A pair of candidate images (e_1, e_2) is accepted when the lantern identity
//
//   t_{e_1} t_{a_2} t_{e_2} = t_{A_3} t_{A_5} t_{a_3} t_{A_1}
//
// holds exactly on the fundamental group (the right side is the boundary
// multitwist of the four-holed sphere containing e_1, a_2, e_2).  The first
// witnesses are printed in the initializer format of psi_constants.hpp.
//
// A known explicit word for psi1 (sliding A_1 to a_2 along the chain of
// once-intersecting curves A_1, A_2, A_3, A_4, a_2 via t_x t_y(x) = y) is
// checked first as a calibration canary.

#include <cstdio>
#include <cstdlib>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "monodromy/catalog.hpp"
#include "monodromy/mcg_action.hpp"

using namespace monodromy;

namespace {

constexpr std::size_t kBudget = 1'000'000;

using Path = std::vector<std::pair<std::string, int>>;  // application order

struct Node {
  Word image;  // exact based image of the a_1 word
  Path path;
};

std::string fmt_path(const Path& path) {
  // Display order: the most recently applied twist is the leftmost factor.
  std::string out;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    out += "t_" + it->first + (it->second < 0 ? "^-1" : "") + " ";
  }
  return out.empty() ? "id" : out;
}

std::string fmt_init(const Path& path) {
  std::string out = "{";
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    if (out.size() > 1) out += ", ";
    out += "{\"" + it->first + "\", " + std::to_string(it->second) + "}";
  }
  return out + "}";
}

}  // namespace

int main(int argc, char** argv) {
  const int max_depth = argc > 1 ? std::atoi(argv[1]) : 8;
  const Catalog cat = build_catalog({3, 1});
  const SurfaceKind s = cat.surface;

  const std::vector<std::string> interior = {"A1", "A2", "A3", "A4", "A5", "a2", "c1", "a'1"};
  std::vector<Pi1Arrow> moves;
  Path move_tag;
  for (const std::string& name : interior)
    for (int e : {+1, -1}) {
      moves.push_back(*twist_arrow(cat, standard_curve(name), e, kBudget, nullptr));
      move_tag.emplace_back(name, e);
    }

  auto arrow_of_path = [&](const Path& path) {
    Pi1Arrow acc = identity_arrow(s.pi1_rank(), false);
    for (const auto& [name, e] : path) {
      auto t = twist_arrow(cat, standard_curve(name), e, kBudget, nullptr);
      acc = *arrow_compose(*t, acc, kBudget);
    }
    return acc;
  };
  // The twist about the curve path(A_1), as phi t_{A1} phi^{-1}.
  auto conj_twist = [&](const Path& path) {
    const Pi1Arrow phi = arrow_of_path(path);
    Path inv;
    for (auto it = path.rbegin(); it != path.rend(); ++it) inv.emplace_back(it->first, -it->second);
    const Pi1Arrow phii = arrow_of_path(inv);
    return *arrow_compose(phi, *arrow_compose(*twist_arrow(cat, standard_curve("A1"), 1, kBudget, nullptr), phii, kBudget),
                          kBudget);
  };

  const Pi1Arrow t_a2 = *twist_arrow(cat, standard_curve("a2"), 1, kBudget, nullptr);

  // Canary: slide A_1 along the once-intersecting chain A_1, A_2, A_3, A_4,
  // a_2 (each consecutive pair meets once; t_x t_y carries x to y).
  const Path psi1_guess = {{"A2", 1}, {"A1", 1}, {"A3", 1}, {"A2", 1},
                           {"A4", 1}, {"A3", 1}, {"a2", 1}, {"A4", 1}};
  {
    Word img = cat.at("A1").word;
    for (const auto& [name, e] : psi1_guess)
      img = *arrow_apply(*twist_arrow(cat, standard_curve(name), e, kBudget, nullptr), img, kBudget);
    const bool cls_ok = class_key(ConjClass(img)) == class_key(cat.at("a2").cls);
    const bool tw_ok = conj_twist(psi1_guess) == t_a2;
    std::printf("canary psi1 guess: image %s  class %s  twist %s\n", cat.alphabet.format(img).c_str(),
                cls_ok ? "== a2" : "!= a2", tw_ok ? "== t_a2" : "!= t_a2");
  }

  const HomologyClass e1_class = cat.at("a1").h1 - cat.at("a3").h1;
  const HomologyClass e2_class = cat.at("a1").h1 - cat.at("a2").h1 + cat.at("a3").h1;

  std::map<std::string, Node> seen;
  std::deque<const Node*> frontier;
  Node start{cat.at("A1").word, {}};
  const std::string start_key = class_key(ConjClass(start.image));
  auto [sit, sok] = seen.emplace(start_key, std::move(start));
  (void)sok;
  frontier.push_back(&sit->second);

  std::vector<Path> psi1s, psi2s, psi3s;
  int depth = 0;
  std::size_t level_end = frontier.size();
  std::size_t expanded = 0;
  while (!frontier.empty() && depth < max_depth) {
    const Node* node = frontier.front();
    frontier.pop_front();
    ++expanded;
    for (std::size_t m = 0; m < moves.size(); ++m) {
      auto img = arrow_apply(moves[m], node->image, kBudget);
      if (!img) continue;
      const std::string k2 = class_key(ConjClass(*img));
      if (seen.count(k2)) continue;
      Node next{*img, node->path};
      next.path.push_back(move_tag[m]);
      const HomologyClass h = homology_of(s, next.image);
      if (k2 == class_key(cat.at("a2").cls)) psi1s.push_back(next.path);
      if (h == e1_class || h == -e1_class) psi2s.push_back(next.path);
      if (h == e2_class || h == -e2_class) psi3s.push_back(next.path);
      auto [it, ok] = seen.emplace(k2, std::move(next));
      if (ok) frontier.push_back(&it->second);
    }
    if (--level_end == 0) {
      ++depth;
      level_end = frontier.size();
      std::printf("depth %d done: %zu classes, %zu/%zu/%zu candidates\n", depth, seen.size(),
                  psi1s.size(), psi2s.size(), psi3s.size());
      std::fflush(stdout);
    }
  }
  std::printf("expanded %zu states\n", expanded);
  if (psi1s.empty()) std::printf("note: BFS found no psi1 within depth; canary path is the fallback\n");
  if (psi2s.empty() || psi3s.empty()) {
    std::printf("no candidates for e1 or e2; deepen the search\n");
    return 1;
  }

  const Path* psi1 = nullptr;
  for (const Path& p : psi1s) {
    if (conj_twist(p) == t_a2) {
      psi1 = &p;
      break;
    }
  }
  if (!psi1 && conj_twist(psi1_guess) == t_a2) psi1 = &psi1_guess;
  if (!psi1) {
    std::printf("no psi1 candidate realizes t_{a2}\n");
    return 1;
  }
  std::printf("psi1 = %s\n", fmt_path(*psi1).c_str());

  // Lantern: t_{e1} t_{a2} t_{e2} = t_{A3} t_{A5} t_{a3} t_{A1}.
  const Pi1Arrow t_A1 = moves[0];
  const Pi1Arrow t_A3 = *twist_arrow(cat, standard_curve("A3"), 1, kBudget, nullptr);
  const Pi1Arrow t_A5 = *twist_arrow(cat, standard_curve("A5"), 1, kBudget, nullptr);
  const Pi1Arrow t_a3 = *twist_arrow(cat, standard_curve("a3"), 1, kBudget, nullptr);
  const Pi1Arrow rhs =
      *arrow_compose(t_A3, *arrow_compose(t_A5, *arrow_compose(t_a3, t_A1, kBudget), kBudget), kBudget);
  std::vector<Pi1Arrow> te1s, te2s;
  te1s.reserve(psi2s.size());
  te2s.reserve(psi3s.size());
  for (const Path& p : psi2s) te1s.push_back(conj_twist(p));
  for (const Path& p : psi3s) te2s.push_back(conj_twist(p));
  for (std::size_t i = 0; i < psi2s.size(); ++i) {
    for (std::size_t j = 0; j < psi3s.size(); ++j) {
      auto mid = arrow_compose(t_a2, te2s[j], kBudget);
      if (!mid) continue;
      auto lhs = arrow_compose(te1s[i], *mid, kBudget);
      if (!lhs) continue;
      if (*lhs == rhs) {
        std::printf("lantern closes with psi2 #%zu, psi3 #%zu\n", i, j);
        std::printf("  psi2 = %s\n", fmt_path(psi2s[i]).c_str());
        std::printf("  psi3 = %s\n", fmt_path(psi3s[j]).c_str());
        std::printf("frozen constants:\n");
        std::printf("  psi1 = %s\n", fmt_init(*psi1).c_str());
        std::printf("  psi2 = %s\n", fmt_init(psi2s[i]).c_str());
        std::printf("  psi3 = %s\n", fmt_init(psi3s[j]).c_str());
        return 0;
      }
    }
  }
  std::printf("no (e1, e2) pair closes the lantern at this depth (%zu x %zu pairs tried)\n",
              psi2s.size(), psi3s.size());
  return 1;
}

#include "monodromy/factorization.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace monodromy {
namespace {

using nlohmann::json;

std::string itos(int v) { return std::to_string(v); }

std::string segment_tag(const std::vector<Segment>& segments) {
  std::string tag = "segments";
  for (const auto& [a, b] : segments) {
    tag += " [" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return tag;
}

/// Class key or a thrown diagnostic: the rewriting moves must never match or
/// justify anything they cannot actually compute.
std::string required_class_key(const Catalog& cat, const CurveRef& ref,
                               std::size_t budget, const std::string& who) {
  std::string reason;
  const auto w = curve_word(cat, ref, budget, &reason);
  if (!w) {
    throw std::runtime_error(who + ": cannot compute the curve word of " + ref.display() +
                             ": " + reason);
  }
  return class_key(ConjClass(*w));
}

MappingClassExpr boundary_expr(const SurfaceKind& s, const std::vector<int>& exps) {
  MappingClassExpr e;
  for (int c = 1; c <= static_cast<int>(exps.size()); ++c) {
    const int k = exps[static_cast<std::size_t>(c - 1)];
    if (k != 0) e.twists.push_back(twist(boundary_curve_name(s, c), k));
  }
  return e;
}

/// Exact homology check that `after` equals phi `before` phi^-1, written
/// inversion-free as after * phi == phi * before.
void check_conjugated_product(const Catalog& cat, const Factorization& before,
                              const Factorization& after, const MappingClassExpr& phi,
                              const std::string& who) {
  const H1Matrix mphi = evaluate_h1(cat, phi);
  const H1Matrix a = evaluate_h1(cat, before.word());
  const H1Matrix b = evaluate_h1(cat, after.word());
  if (!(b * mphi == mphi * a)) {
    throw std::logic_error(who + ": product invariance failed on homology");
  }
}

void check_same_product(const Catalog& cat, const MappingClassExpr& before,
                        const MappingClassExpr& after, const std::string& who) {
  if (!(evaluate_h1(cat, before) == evaluate_h1(cat, after))) {
    throw std::logic_error(who + ": product invariance failed on homology");
  }
}

json curve_to_json(const CurveRef& ref);

json twist_to_json(const TwistRef& t) {
  return json{{"curve", curve_to_json(t.curve)}, {"exp", t.exp}};
}

json curve_to_json(const CurveRef& ref) {
  json j{{"base", ref.base}};
  if (!ref.phi.empty()) {
    json arr = json::array();
    for (const auto& t : ref.phi) arr.push_back(twist_to_json(t));
    j["phi"] = std::move(arr);
  }
  return j;
}

CurveRef curve_from_json(const json& j);

TwistRef twist_from_json(const json& j) {
  return TwistRef{curve_from_json(j.at("curve")), j.at("exp").get<int>()};
}

CurveRef curve_from_json(const json& j) {
  CurveRef ref;
  ref.base = j.at("base").get<std::string>();
  if (j.contains("phi")) {
    for (const auto& t : j.at("phi")) ref.phi.push_back(twist_from_json(t));
  }
  return ref;
}

std::string kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::ElementaryLeft: return "elementary_left";
    case MoveKind::ElementaryRight: return "elementary_right";
    case MoveKind::Conjugate: return "conjugate";
    case MoveKind::PartialConjugate: return "partial_conjugate";
    case MoveKind::Substitute: return "substitute";
    case MoveKind::CloseUp: return "close_up";
  }
  throw std::logic_error("kind_name: unknown move kind");
}

MoveKind kind_from_name(const std::string& s) {
  if (s == "elementary_left") return MoveKind::ElementaryLeft;
  if (s == "elementary_right") return MoveKind::ElementaryRight;
  if (s == "conjugate") return MoveKind::Conjugate;
  if (s == "partial_conjugate") return MoveKind::PartialConjugate;
  if (s == "substitute") return MoveKind::Substitute;
  if (s == "close_up") return MoveKind::CloseUp;
  throw std::invalid_argument("unknown move kind '" + s + "'");
}

}  // namespace

MappingClassExpr Factorization::word() const {
  MappingClassExpr e;
  e.twists.reserve(cycles.size());
  for (const auto& c : cycles) e.twists.push_back(twist(c));
  return e;
}

std::string boundary_curve_name(const SurfaceKind& s, int component) {
  if (component < 1 || component > s.boundary) {
    throw std::invalid_argument("boundary_curve_name: component " + itos(component) +
                                " out of range");
  }
  if (component == 2) return "a" + itos(s.genus + 1);
  return s.boundary == 1 ? "a" + itos(s.genus + 1) : "a'" + itos(s.genus + 1);
}

CurveRef canonical_curve(const Catalog& cat, CurveRef ref, std::size_t budget) {
  if (ref.is_standard()) return ref;
  // A catalog curve in the same unoriented class matches on homology up to
  // sign, so skip the word computation when no candidate does.
  const HomologyClass h = curve_h1(cat, ref);
  const HomologyClass hneg = -h;
  const bool candidate =
      std::any_of(cat.curves.begin(), cat.curves.end(), [&](const CurveSpec& spec) {
        return spec.h1 == h || spec.h1 == hneg;
      });
  if (!candidate) return ref;
  std::string reason;
  const auto w = curve_word(cat, ref, budget, &reason);
  if (!w) return ref;
  if (const auto name = cat.find_by_class(ConjClass(*w))) return standard_curve(*name);
  return ref;
}

std::optional<std::string> curve_class_key(const Catalog& cat, const CurveRef& ref,
                                           std::size_t budget) {
  std::string reason;
  const auto w = curve_word(cat, ref, budget, &reason);
  if (!w) return std::nullopt;
  return class_key(ConjClass(*w));
}

Factorization positive_factorization(const Catalog& cat, const Relator& r) {
  if (r.closed_only) {
    throw std::invalid_argument(r.name + ": closed-only relators carry no bordered lift");
  }
  const SurfaceKind& s = cat.surface;
  std::vector<std::string> boundary_keys;
  for (int c = 1; c <= s.boundary; ++c) {
    boundary_keys.push_back(class_key(cat.at(boundary_curve_name(s, c)).cls));
  }

  Factorization f;
  f.surface = s;
  f.cycles = r.positive;
  f.boundary_exponents.assign(static_cast<std::size_t>(s.boundary), 0);
  for (const auto& d : r.negative) {
    const std::string key =
        required_class_key(cat, d, kDefaultWordBudget, "positive_factorization");
    const auto it = std::find(boundary_keys.begin(), boundary_keys.end(), key);
    if (it == boundary_keys.end()) {
      throw std::invalid_argument("positive_factorization: negative-part curve " +
                                  d.display() + " is not boundary-parallel");
    }
    ++f.boundary_exponents[static_cast<std::size_t>(it - boundary_keys.begin())];
  }

  const Verdict v = check_lift(cat, f, Level::L1);
  if (!v.verified()) {
    throw std::logic_error("positive_factorization: lift identity failed: " + v.reason);
  }
  return f;
}

Verdict check_lift(const Catalog& cat, const Factorization& f, Level level,
                   std::size_t budget) {
  MappingClassExpr e = f.word();
  const MappingClassExpr b = boundary_expr(f.surface, f.boundary_exponents);
  const MappingClassExpr binv = expr_inverse(b);
  e.twists.insert(e.twists.end(), binv.twists.begin(), binv.twists.end());
  return is_identity(cat, e, level, budget);
}

int section_count(const Factorization& f) {
  return static_cast<int>(
      std::count(f.boundary_exponents.begin(), f.boundary_exponents.end(), 1));
}

Factorization elementary_transformation(const Catalog& cat, const Factorization& f,
                                        std::size_t i, EtDirection dir) {
  if (i + 1 >= f.cycles.size()) {
    throw std::out_of_range("elementary_transformation: no pair at index " +
                            std::to_string(i));
  }
  const CurveRef v = f.cycles[i];
  const CurveRef w = f.cycles[i + 1];
  CurveRef nv, nw;
  if (dir == EtDirection::Left) {
    nv = w;
    MappingClassExpr tw_inv;
    tw_inv.twists.push_back(twist(w, -1));
    nw = canonical_curve(cat, image_curve(tw_inv, v));
  } else {
    MappingClassExpr tv;
    tv.twists.push_back(twist(v));
    nv = canonical_curve(cat, image_curve(tv, w));
    nw = v;
  }

  MappingClassExpr before, after;
  before.twists = {twist(v), twist(w)};
  after.twists = {twist(nv), twist(nw)};
  check_same_product(cat, before, after, "elementary_transformation");

  Factorization g = f;
  g.cycles[i] = std::move(nv);
  g.cycles[i + 1] = std::move(nw);
  g.trace.push_back(MoveRecord{dir == EtDirection::Left ? MoveKind::ElementaryLeft
                                                        : MoveKind::ElementaryRight,
                               i, "", "", 0, 0});
  return g;
}

Factorization simultaneous_conjugation(const Catalog& cat, const Factorization& f,
                                       const MappingClassExpr& phi) {
  Factorization g = f;
  for (auto& c : g.cycles) c = canonical_curve(cat, image_curve(phi, c));
  check_conjugated_product(cat, f, g, phi, "simultaneous_conjugation");
  g.trace.push_back(MoveRecord{MoveKind::Conjugate, 0, "", phi.display(), 0, 0});
  return g;
}

Factorization substitute(const Catalog& cat, const Factorization& f, std::size_t at,
                         const Relator& r, const MappingClassExpr& phi) {
  if (r.closed_only) {
    throw std::invalid_argument("substitute: " + r.name +
                                " only holds on the capped surface");
  }
  verify_relator(cat, r, Level::L1);  // never trust a cached verdict

  const std::size_t l = r.negative.size();
  const std::size_t k = r.positive.size();
  if (at + l > f.cycles.size()) {
    throw std::out_of_range("substitute: run [" + std::to_string(at) + "," +
                            std::to_string(at + l) + ") exceeds the factorization");
  }

  // Match the consumed run against the negative part, orientation-agnostic.
  for (std::size_t j = 0; j < l; ++j) {
    const CurveRef& have = f.cycles[at + j];
    const CurveRef& want = r.negative[j];
    if (have == want) continue;
    const std::string have_key = required_class_key(cat, have, kDefaultWordBudget, "substitute");
    const std::string want_key = required_class_key(cat, want, kDefaultWordBudget, "substitute");
    if (have_key != want_key) {
      throw std::invalid_argument("substitute: cycle " + std::to_string(at + j) + " (" +
                                  have.display() + ") does not match " + want.display());
    }
  }

  // Def-style precondition: phi must fix the consumed curves.
  if (!phi.twists.empty()) {
    for (const auto& d : r.negative) {
      const CurveRef image = image_curve(phi, d);
      const auto image_key = curve_class_key(cat, image);
      const auto d_key = curve_class_key(cat, d);
      if (image_key && d_key) {
        if (*image_key != *d_key) {
          throw std::invalid_argument("substitute: phi does not fix " + d.display());
        }
      } else if (!(twist_matrix(cat, image) == twist_matrix(cat, d))) {
        throw std::invalid_argument("substitute: phi does not fix " + d.display() +
                                    " (homology check)");
      }
    }
  }

  Factorization g = f;
  std::vector<CurveRef> emitted;
  emitted.reserve(k);
  for (const auto& v : r.positive) emitted.push_back(canonical_curve(cat, image_curve(phi, v)));
  g.cycles.erase(g.cycles.begin() + static_cast<std::ptrdiff_t>(at),
                 g.cycles.begin() + static_cast<std::ptrdiff_t>(at + l));
  g.cycles.insert(g.cycles.begin() + static_cast<std::ptrdiff_t>(at),
                  emitted.begin(), emitted.end());

  check_same_product(cat, f.word(), g.word(), "substitute(" + r.name + ")");
  g.trace.push_back(MoveRecord{MoveKind::Substitute, at, r.name, phi.display(),
                               r.sigma_delta,
                               static_cast<int>(k) - static_cast<int>(l)});
  return g;
}

Factorization partial_conjugation(const Catalog& cat, const Factorization& f,
                                  const std::vector<Segment>& segments,
                                  const MappingClassExpr& phi) {
  if (segments.empty()) {
    throw std::invalid_argument("partial_conjugation: no segments given");
  }
  std::size_t prev_end = 0;
  for (const auto& [a, b] : segments) {
    if (a >= b || b > f.cycles.size() || a < prev_end) {
      throw std::invalid_argument("partial_conjugation: segments must be disjoint, "
                                  "ordered and within range");
    }
    prev_end = b;
  }

  std::vector<bool> inside(f.cycles.size(), false);
  for (const auto& [a, b] : segments) {
    for (std::size_t i = a; i < b; ++i) inside[i] = true;
  }
  for (std::size_t i = 0; i < f.cycles.size(); ++i) {
    if (inside[i]) continue;
    const CurveRef image = image_curve(phi, f.cycles[i]);
    const std::string moved =
        required_class_key(cat, image, kDefaultWordBudget, "partial_conjugation");
    const std::string orig =
        required_class_key(cat, f.cycles[i], kDefaultWordBudget, "partial_conjugation");
    if (moved != orig) {
      throw std::invalid_argument("partial_conjugation: phi moves cycle " +
                                  std::to_string(i) + " (" + f.cycles[i].display() +
                                  ") outside the segments");
    }
  }

  Factorization g = f;
  for (std::size_t i = 0; i < g.cycles.size(); ++i) {
    if (inside[i]) g.cycles[i] = canonical_curve(cat, image_curve(phi, g.cycles[i]));
  }
  check_conjugated_product(cat, f, g, phi, "partial_conjugation");
  g.trace.push_back(MoveRecord{MoveKind::PartialConjugate, segments.front().first,
                               segment_tag(segments), phi.display(), 0, 0});
  return g;
}

Factorization partial_conjugation(const Catalog& cat, const Factorization& f,
                                  std::size_t at, const Relator& r,
                                  const MappingClassExpr& phi) {
  const Factorization mid = substitute(cat, f, at, r.inverted(), MappingClassExpr{});
  return substitute(cat, mid, at, r, phi);
}

Factorization push_twist(const Catalog& cat, const Factorization& f, std::size_t from,
                         std::size_t to) {
  if (from >= f.cycles.size() || to >= f.cycles.size()) {
    throw std::out_of_range("push_twist: index out of range");
  }
  Factorization cur = f;
  for (std::size_t j = from; j < to; ++j) {
    cur = elementary_transformation(cat, cur, j, EtDirection::Right);
  }
  for (std::size_t j = from; j > to; --j) {
    cur = elementary_transformation(cat, cur, j - 1, EtDirection::Left);
  }
  return cur;
}

Factorization close_up(const Catalog& cat, const Factorization& f) {
  if (f.closed) throw std::invalid_argument("close_up: already closed");
  const Verdict v = check_lift(cat, f, Level::L1);
  if (!v.verified()) {
    throw std::logic_error("close_up: lift identity failed: " + v.reason);
  }
  Factorization g = f;
  g.closed = true;
  g.trace.push_back(MoveRecord{MoveKind::CloseUp, 0, "", "", 0, 0});
  return g;
}

std::string to_json_text(const Factorization& f, int indent) {
  json j;
  j["schema"] = "monodromy/1";
  j["surface"] = json{{"genus", f.surface.genus}, {"boundary", f.surface.boundary}};
  j["closed"] = f.closed;
  json cycles = json::array();
  for (const auto& c : f.cycles) cycles.push_back(curve_to_json(c));
  j["cycles"] = std::move(cycles);
  j["boundary_exponents"] = f.boundary_exponents;
  json trace = json::array();
  for (const auto& m : f.trace) {
    json rec{{"kind", kind_name(m.kind)},
             {"position", m.position},
             {"relator", m.relator},
             {"phi", m.phi},
             {"cycle_delta", m.cycle_delta}};
    rec["sigma_delta"] = m.sigma_delta ? json(*m.sigma_delta) : json(nullptr);
    trace.push_back(std::move(rec));
  }
  j["trace"] = std::move(trace);
  return j.dump(indent) + "\n";
}

Factorization factorization_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    if (!j.contains("schema") || j.at("schema").get<std::string>() != "monodromy/1") {
      throw std::invalid_argument("factorization_from_json: unsupported schema");
    }
    Factorization f;
    f.surface = SurfaceKind{j.at("surface").at("genus").get<int>(),
                            j.at("surface").at("boundary").get<int>()};
    f.closed = j.at("closed").get<bool>();
    for (const auto& c : j.at("cycles")) f.cycles.push_back(curve_from_json(c));
    f.boundary_exponents = j.at("boundary_exponents").get<std::vector<int>>();
    for (const auto& rec : j.at("trace")) {
      MoveRecord m;
      m.kind = kind_from_name(rec.at("kind").get<std::string>());
      m.position = rec.at("position").get<std::size_t>();
      m.relator = rec.at("relator").get<std::string>();
      m.phi = rec.at("phi").get<std::string>();
      if (!rec.at("sigma_delta").is_null()) m.sigma_delta = rec.at("sigma_delta").get<int>();
      m.cycle_delta = rec.at("cycle_delta").get<int>();
      f.trace.push_back(std::move(m));
    }
    return f;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("factorization_from_json: ") + e.what());
  }
}

}  // namespace monodromy

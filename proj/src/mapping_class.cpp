#include "monodromy/mapping_class.hpp"

#include <sstream>

namespace monodromy {

bool operator==(const CurveRef& x, const CurveRef& y) { return x.base == y.base && x.phi == y.phi; }

bool operator==(const TwistRef& x, const TwistRef& y) { return x.exp == y.exp && x.curve == y.curve; }

std::string CurveRef::display() const {
  if (is_standard()) return base;
  std::ostringstream os;
  os << "(" << MappingClassExpr{phi}.display() << ")(" << base << ")";
  return os.str();
}

std::string MappingClassExpr::display() const {
  if (twists.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : twists) {
    if (!first) os << " ";
    first = false;
    os << "t[" << t.curve.display() << "]";
    if (t.exp != 1) os << "^" << t.exp;
  }
  return os.str();
}

CurveRef standard_curve(std::string name) { return CurveRef{std::move(name), {}}; }

TwistRef twist(CurveRef c, int exp) { return TwistRef{std::move(c), exp}; }

TwistRef twist(std::string name, int exp) { return TwistRef{standard_curve(std::move(name)), exp}; }

CurveRef image_curve(MappingClassExpr phi, CurveRef base) {
  if (phi.twists.empty()) return base;
  return CurveRef{std::move(base.base), [&] {
                    // phi followed by the base's own realization
                    std::vector<TwistRef> composed = std::move(phi.twists);
                    composed.insert(composed.end(), base.phi.begin(), base.phi.end());
                    return composed;
                  }()};
}

MappingClassExpr expr_product(const MappingClassExpr& x, const MappingClassExpr& y) {
  MappingClassExpr r = x;
  r.twists.insert(r.twists.end(), y.twists.begin(), y.twists.end());
  return r;
}

MappingClassExpr expr_inverse(const MappingClassExpr& x) {
  MappingClassExpr r;
  r.twists.reserve(x.twists.size());
  for (auto it = x.twists.rbegin(); it != x.twists.rend(); ++it) r.twists.push_back(TwistRef{it->curve, -it->exp});
  return r;
}

MappingClassExpr expr_power(const MappingClassExpr& x, int n) {
  if (n < 0) return expr_power(expr_inverse(x), -n);
  MappingClassExpr r;
  for (int i = 0; i < n; ++i) r.twists.insert(r.twists.end(), x.twists.begin(), x.twists.end());
  return r;
}

MappingClassExpr expr_conjugate(const MappingClassExpr& phi, const MappingClassExpr& x) {
  MappingClassExpr r;
  r.twists.reserve(x.twists.size());
  for (const auto& t : x.twists) r.twists.push_back(TwistRef{image_curve(phi, t.curve), t.exp});
  return r;
}

}  // namespace monodromy

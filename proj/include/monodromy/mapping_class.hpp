#pragma once

#include <string>
#include <vector>

namespace monodromy {

struct TwistRef;

/// Reference to a simple closed curve: a named catalog curve, or the image
/// of one under a mapping class (phi applied to the base curve).
struct CurveRef {
  std::string base;
  std::vector<TwistRef> phi;  // empty: the catalog curve itself

  bool is_standard() const { return phi.empty(); }
  std::string display() const;
};

/// Signed Dehn twist about a referenced curve.
struct TwistRef {
  CurveRef curve;
  int exp = 1;
};

bool operator==(const CurveRef& x, const CurveRef& y);
bool operator==(const TwistRef& x, const TwistRef& y);

/// Word in Dehn twists, in display order: the product t_{v_1} ... t_{v_k}
/// acts with the rightmost factor first.
struct MappingClassExpr {
  std::vector<TwistRef> twists;

  friend bool operator==(const MappingClassExpr&, const MappingClassExpr&) = default;

  std::string display() const;
};

CurveRef standard_curve(std::string name);
TwistRef twist(CurveRef c, int exp = 1);
TwistRef twist(std::string name, int exp = 1);
CurveRef image_curve(MappingClassExpr phi, CurveRef base);

MappingClassExpr expr_product(const MappingClassExpr& x, const MappingClassExpr& y);
MappingClassExpr expr_inverse(const MappingClassExpr& x);
MappingClassExpr expr_power(const MappingClassExpr& x, int n);
/// phi * x * phi^-1, as a twist word (each twist's curve becomes an image).
MappingClassExpr expr_conjugate(const MappingClassExpr& phi, const MappingClassExpr& x);

}  // namespace monodromy

#pragma once
// Compactly supported bump profiles.
//
// A profile is 1 on [-inner, inner], 0 outside (-outer, outer), and crosses
// the transition zone with one of three tapers.  The plateau is exact (the
// evaluator returns the literal constants 1.0 and 0.0 there); several
// constructions rely on that to make phase identities hold to the last bit.

#include <string>

namespace displab {

enum class BumpKind {
  kCompactPolynomial,  // C^10 polynomial smoothstep taper (default)
  kCosineTaper,        // raised-cosine taper, C^1
  kGaussianTruncated,  // gaussian taper cut at the support edge
};

struct BumpProfile {
  BumpKind kind = BumpKind::kCompactPolynomial;
  double inner = 1.0;  // plateau radius
  double outer = 2.0;  // support radius

  double operator()(double x) const { return value(x); }
  double value(double x) const;

  // L^2 norm on the line, by composite Simpson over the transition zones
  // (the plateau contributes exactly 2*inner).
  double l2_norm() const;

  std::string kind_name() const;
};

BumpProfile make_bump(BumpKind kind, double inner, double outer);

// Smooth cutoff used by the dyadic decomposition and the mollifier:
// 1 for |t| <= 1, 0 for |t| >= 2, C^infinity in between.
double smooth_cutoff(double t);

}  // namespace displab

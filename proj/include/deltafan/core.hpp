#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace deltafan {

// Error conditions surfaced by the solver and its checkers.
struct UnsupportedScenario : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InconsistentFan : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// A point (u, v) in state space.
struct State {
  double u = 0.0;
  double v = 0.0;
};

inline bool isFinite(const State& s) {
  return std::isfinite(s.u) && std::isfinite(s.v);
}

/// One quadratic piece a*u^2 + b*u + c, valid from `lower` up to the next
/// piece's lower bound (the first piece starts at -inf).
struct QuadraticPiece {
  double lower = -kInf;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  double value(double u) const { return (a * u + b) * u + c; }
  double slope(double u) const { return 2.0 * a * u + b; }
  /// Inverse of the slope map; only meaningful for a != 0.
  double stateAtSlope(double xi) const { return (xi - b) / (2.0 * a); }
};

/// Scalar flux f(u) assembled from ordered quadratic pieces.
///
/// Construction enforces strictly increasing breakpoints and continuity of
/// the flux value at each breakpoint (within 1e-12 relative).
class PiecewiseQuadraticFlux {
 public:
  explicit PiecewiseQuadraticFlux(std::vector<QuadraticPiece> pieces);

  double operator()(double u) const { return pieceAt(u).value(u); }
  /// f'(u); at a breakpoint the right piece wins.
  double slope(double u) const { return pieceAt(u).slope(u); }

  const std::vector<QuadraticPiece>& pieces() const { return pieces_; }
  std::size_t pieceIndexAt(double u) const;
  const QuadraticPiece& pieceAt(double u) const {
    return pieces_[pieceIndexAt(u)];
  }
  /// Breakpoints strictly inside (lo, hi), ascending.
  std::vector<double> breakpointsIn(double lo, double hi) const;

  double maxAbsSlopeOn(double lo, double hi) const;
  /// Minimizer/maximizer of f over [lo, hi]; ties resolve to the smaller u.
  /// Returns {arg, value}.
  std::pair<double, double> minOn(double lo, double hi) const;
  std::pair<double, double> maxOn(double lo, double hi) const;

  PiecewiseQuadraticFlux negated() const;

  /// f(u) = u^2.
  static PiecewiseQuadraticFlux parabola();
  /// Double well: (u+2)^2 - 1 for u < -1, then -u^2 + 1 on [-1, 1], then
  /// (u-2)^2 - 1. The middle piece is the continuous completion of the two
  /// wells; it meets them with value 0 at u = +-1.
  static PiecewiseQuadraticFlux doubleWell();

 private:
  std::vector<QuadraticPiece> pieces_;
};

/// Flux G(u, v) of the second conservation law: u*v or u*v^2.
class VFlux {
 public:
  enum class Kind { LinearInV, QuadraticInV };

  constexpr explicit VFlux(Kind k) : kind_(k) {}
  constexpr Kind kind() const { return kind_; }

  double operator()(double u, double v) const {
    return kind_ == Kind::LinearInV ? u * v : u * v * v;
  }
  /// dG/dv, the v-family characteristic speed.
  double charSpeed(double u, double v) const {
    return kind_ == Kind::LinearInV ? u : 2.0 * u * v;
  }

  friend bool operator==(const VFlux&, const VFlux&) = default;

 private:
  Kind kind_;
};

/// The coupled pair (f, G).
struct SystemSpec {
  PiecewiseQuadraticFlux uFlux;
  VFlux vFlux;

  static SystemSpec korchinski();   // (u^2, u v)
  static SystemSpec modified();     // (u^2, u v^2)
  static SystemSpec twoDelta();     // (double well, u v)
};

/// One wave of the self-similar u-solution.
struct ElementaryWave {
  enum class Kind { Shock, Rarefaction };
  Kind kind = Kind::Shock;
  double uLeft = 0.0;
  double uRight = 0.0;
  // Shock: xiLo == xiHi == speed. Rarefaction: [xiLo, xiHi] with
  // u(xi) = (xi - branchB) / (2 branchA) on the inverted piece.
  double xiLo = 0.0;
  double xiHi = 0.0;
  double branchA = 0.0;
  double branchB = 0.0;

  double speed() const { return xiLo; }
  double uAt(double xi) const { return (xi - branchB) / (2.0 * branchA); }

  static ElementaryWave shock(double ul, double ur, double sigma);
  static ElementaryWave rarefaction(double ul, double ur,
                                    const QuadraticPiece& piece);
};

/// Ordered list of elementary waves with weakly increasing speeds.
struct WaveFan {
  std::vector<ElementaryWave> waves;
  double uLeft = 0.0;
  double uRight = 0.0;

  bool empty() const { return waves.empty(); }
  double minSpeed() const { return waves.empty() ? 0.0 : waves.front().xiLo; }
  double maxSpeed() const { return waves.empty() ? 0.0 : waves.back().xiHi; }
  /// Throws InconsistentFan when adjacency or speed ordering is broken.
  void validate() const;
};

/// u at similarity coordinate xi; left limit at discontinuities.
double evalU(const WaveFan& fan, double xi);

/// Classification of a discontinuity by speed comparisons against the two
/// characteristic families on each side.
struct ShockClass {
  enum class Tag { Overcompressive, OneLax, TwoLax, Transitional, Degenerate };
  Tag tag = Tag::Degenerate;
  std::string note;  // detail for Degenerate, empty otherwise
};

const char* toString(ShockClass::Tag tag);

/// One embedded delta shock: position x = speed * t, mass amplitudeRate * t.
struct DeltaAtom {
  double speed = 0.0;
  double amplitudeRate = 0.0;  // k', mass per unit time
  State leftTrace;
  State rightTrace;
  ShockClass classification;
};

/// Mass carried by the atom at time t >= 0 (zero initial mass).
double atomMassAt(const DeltaAtom& atom, double t);

/// One branch of the regular part of v over a xi-interval.
struct VBranch {
  enum class Kind { Constant, Ramp, Zero };  // Ramp: v = xi / (2 rampU)
  Kind kind = Kind::Constant;
  double xiLo = -kInf;
  double xiHi = kInf;
  double constValue = 0.0;
  double rampU = 0.0;

  double at(double xi) const;

  static VBranch constant(double lo, double hi, double value);
  static VBranch ramp(double lo, double hi, double u);
  static VBranch zero(double lo, double hi);
};

/// Full self-similar (u, v) profile: u-fan, regular v-branches partitioning
/// the xi-line, and the Dirac atoms riding on u-shocks.
struct SolutionProfile {
  WaveFan uFan;
  std::vector<VBranch> vBranches;
  std::vector<DeltaAtom> atoms;

  /// Throws InconsistentFan when branches do not partition the line or an
  /// atom speed matches no shock.
  void validate() const;
};

/// Regular (non-atomic) part of v at xi; left limit at discontinuities.
double evalV(const SolutionProfile& profile, double xi);

/// Largest |xi| at which the profile still varies (outermost wave edge or
/// branch cut); 0 for constant profiles.
double profileExtent(const SolutionProfile& profile);

}  // namespace deltafan

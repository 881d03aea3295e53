#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltafan/core.hpp"

namespace deltafan {

/// State where a chord from an endpoint is tangent to the flux graph.
struct TangencyPoint {
  double a = 0.0;      // tangency state
  double slope = 0.0;  // f'(a), equals the chord slope
};

/// Entropy solution of the scalar Riemann problem for u.
///
/// For uL > uR the fan realizes the upper concave envelope of f on
/// [uR, uL]; for uL < uR the lower convex envelope on [uL, uR]; equal data
/// (within 1e-14 relative) yields the empty fan. Straight envelope segments
/// become shocks, arcs of f become rarefactions. Tangency states are solved
/// per quadratic-piece pair in closed form and Newton-polished.
WaveFan solveScalar(const PiecewiseQuadraticFlux& flux, double uL, double uR);

/// Shock endpoints of the fan whose speed matches an adjacent rarefaction
/// edge (the tangential junctions).
std::vector<TangencyPoint> tangencyPoints(const WaveFan& fan, double tol = 1e-8);

struct OleinikViolation {
  std::size_t waveIndex = 0;
  double w = 0.0;           // first violating interior state
  double chordSlope = 0.0;  // chord slope from uLeft to w
  double sigma = 0.0;
};

struct OleinikReport {
  bool pass = true;
  std::string message;
  std::optional<OleinikViolation> violation;
};

/// Verifies the Oleinik E-condition for every shock of the fan by dense
/// interior sampling, and the weak monotonicity of wave speeds.
OleinikReport oleinikCheck(const PiecewiseQuadraticFlux& flux, const WaveFan& fan,
                           int samplesPerShock = 1000, double tol = 1e-9);

/// Piecewise-linear envelope of f sampled at n states, built with a
/// monotone-chain hull. Brute-force oracle for solveScalar.
struct SampledEnvelope {
  bool concave = false;      // upper hull (decreasing data) vs lower hull
  std::vector<double> u;     // hull vertices, ascending
  std::vector<double> f;
  double spacing = 0.0;

  struct Chord {
    double uFrom = 0.0;
    double uTo = 0.0;
    double slope = 0.0;
  };
  /// Hull edges spanning more than minGapFactor sample steps; their
  /// endpoints approximate the exact contact states.
  std::vector<Chord> chords(double minGapFactor = 10.0) const;
  double valueAt(double x) const;
};

SampledEnvelope sampledEnvelopeOracle(const PiecewiseQuadraticFlux& flux,
                                      double uL, double uR, int n);

}  // namespace deltafan

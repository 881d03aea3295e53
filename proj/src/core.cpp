#include "deltafan/core.hpp"

#include <algorithm>
#include <cmath>

namespace deltafan {

namespace {

double relScale(double x, double y) { return std::max({1.0, std::abs(x), std::abs(y)}); }

}  // namespace

PiecewiseQuadraticFlux::PiecewiseQuadraticFlux(std::vector<QuadraticPiece> pieces)
    : pieces_(std::move(pieces)) {
  if (pieces_.empty()) {
    throw std::invalid_argument("flux needs at least one piece");
  }
  if (pieces_.front().lower != -kInf) {
    pieces_.front().lower = -kInf;
  }
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
    const double at = pieces_[i + 1].lower;
    if (!std::isfinite(at) || !(at > pieces_[i].lower)) {
      throw std::invalid_argument("flux breakpoints must be strictly increasing");
    }
    const double vl = pieces_[i].value(at);
    const double vr = pieces_[i + 1].value(at);
    if (std::abs(vl - vr) > 1e-12 * relScale(vl, vr)) {
      throw std::invalid_argument("flux discontinuous at breakpoint " + std::to_string(at));
    }
  }
  for (const auto& p : pieces_) {
    if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.c)) {
      throw std::invalid_argument("flux coefficients must be finite");
    }
  }
}

std::size_t PiecewiseQuadraticFlux::pieceIndexAt(double u) const {
  std::size_t lo = 0, hi = pieces_.size();
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (pieces_[mid].lower <= u) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::vector<double> PiecewiseQuadraticFlux::breakpointsIn(double lo, double hi) const {
  std::vector<double> out;
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    const double x = pieces_[i].lower;
    if (x > lo && x < hi) out.push_back(x);
  }
  return out;
}

double PiecewiseQuadraticFlux::maxAbsSlopeOn(double lo, double hi) const {
  if (lo > hi) std::swap(lo, hi);
  double best = 0.0;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const double plo = std::max(lo, pieces_[i].lower);
    const double phi = std::min(hi, i + 1 < pieces_.size() ? pieces_[i + 1].lower : kInf);
    if (plo > phi) continue;
    best = std::max(best, std::abs(pieces_[i].slope(plo)));
    best = std::max(best, std::abs(pieces_[i].slope(phi)));
  }
  return best;
}

namespace {

// Scans candidate extremum locations piece by piece; ties keep the smaller u.
template <typename Better>
std::pair<double, double> extremumOn(const std::vector<QuadraticPiece>& pieces,
                                     double lo, double hi, Better better) {
  double bestArg = lo;
  double bestVal = pieces.front().value(lo);
  bool seeded = false;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const double plo = std::max(lo, pieces[i].lower);
    const double phi = std::min(hi, i + 1 < pieces.size() ? pieces[i + 1].lower : kInf);
    if (plo > phi) continue;
    double cands[3] = {plo, phi, plo};
    int n = 2;
    if (pieces[i].a != 0.0) {
      const double vtx = -pieces[i].b / (2.0 * pieces[i].a);
      if (vtx > plo && vtx < phi) cands[n++] = vtx;
    }
    for (int k = 0; k < n; ++k) {
      const double val = pieces[i].value(cands[k]);
      if (!seeded || better(val, bestVal)) {
        seeded = true;
        bestArg = cands[k];
        bestVal = val;
      }
    }
  }
  return {bestArg, bestVal};
}

}  // namespace

std::pair<double, double> PiecewiseQuadraticFlux::minOn(double lo, double hi) const {
  if (lo > hi) std::swap(lo, hi);
  return extremumOn(pieces_, lo, hi, [](double a, double b) { return a < b; });
}

std::pair<double, double> PiecewiseQuadraticFlux::maxOn(double lo, double hi) const {
  if (lo > hi) std::swap(lo, hi);
  return extremumOn(pieces_, lo, hi, [](double a, double b) { return a > b; });
}

PiecewiseQuadraticFlux PiecewiseQuadraticFlux::negated() const {
  std::vector<QuadraticPiece> neg = pieces_;
  for (auto& p : neg) {
    p.a = -p.a;
    p.b = -p.b;
    p.c = -p.c;
  }
  return PiecewiseQuadraticFlux(std::move(neg));
}

PiecewiseQuadraticFlux PiecewiseQuadraticFlux::parabola() {
  return PiecewiseQuadraticFlux({{-kInf, 1.0, 0.0, 0.0}});
}

PiecewiseQuadraticFlux PiecewiseQuadraticFlux::doubleWell() {
  // (u+2)^2 - 1 | -u^2 + 1 | (u-2)^2 - 1, breakpoints at -1 and 1.
  return PiecewiseQuadraticFlux({{-kInf, 1.0, 4.0, 3.0},
                                 {-1.0, -1.0, 0.0, 1.0},
                                 {1.0, 1.0, -4.0, 3.0}});
}

SystemSpec SystemSpec::korchinski() {
  return {PiecewiseQuadraticFlux::parabola(), VFlux(VFlux::Kind::LinearInV)};
}

SystemSpec SystemSpec::modified() {
  return {PiecewiseQuadraticFlux::parabola(), VFlux(VFlux::Kind::QuadraticInV)};
}

SystemSpec SystemSpec::twoDelta() {
  return {PiecewiseQuadraticFlux::doubleWell(), VFlux(VFlux::Kind::LinearInV)};
}

ElementaryWave ElementaryWave::shock(double ul, double ur, double sigma) {
  ElementaryWave w;
  w.kind = Kind::Shock;
  w.uLeft = ul;
  w.uRight = ur;
  w.xiLo = w.xiHi = sigma;
  return w;
}

ElementaryWave ElementaryWave::rarefaction(double ul, double ur,
                                           const QuadraticPiece& piece) {
  ElementaryWave w;
  w.kind = Kind::Rarefaction;
  w.uLeft = ul;
  w.uRight = ur;
  w.xiLo = piece.slope(ul);
  w.xiHi = piece.slope(ur);
  w.branchA = piece.a;
  w.branchB = piece.b;
  return w;
}

void WaveFan::validate() const {
  if (waves.empty()) {
    if (uLeft != uRight) {
      throw InconsistentFan("empty fan with distinct end states");
    }
    return;
  }
  const double scaleU = std::max({1.0, std::abs(uLeft), std::abs(uRight)});
  double prevU = uLeft;
  double prevSpeed = -kInf;
  double scaleS = 1.0;
  for (const auto& w : waves) {
    scaleS = std::max({scaleS, std::abs(w.xiLo), std::abs(w.xiHi)});
  }
  for (const auto& w : waves) {
    if (std::abs(w.uLeft - prevU) > 1e-9 * scaleU) {
      throw InconsistentFan("wave end states are not adjacent");
    }
    if (w.kind == ElementaryWave::Kind::Shock) {
      if (w.uLeft == w.uRight) throw InconsistentFan("zero-strength shock");
    } else {
      if (!(w.xiLo < w.xiHi + 1e-14 * scaleS)) {
        throw InconsistentFan("rarefaction speed interval is not increasing");
      }
      if (w.branchA == 0.0) throw InconsistentFan("rarefaction on a linear piece");
    }
    if (w.xiLo < prevSpeed - 1e-9 * scaleS) {
      throw InconsistentFan("wave speeds are not weakly increasing");
    }
    prevSpeed = w.xiHi;
    prevU = w.uRight;
  }
  if (std::abs(prevU - uRight) > 1e-9 * scaleU) {
    throw InconsistentFan("fan does not reach the right state");
  }
}

double evalU(const WaveFan& fan, double xi) {
  double u = fan.uLeft;
  for (const auto& w : fan.waves) {
    if (xi <= w.xiLo) return u;
    if (xi <= w.xiHi && w.kind == ElementaryWave::Kind::Rarefaction) {
      return w.uAt(xi);
    }
    u = w.uRight;
  }
  return fan.uRight;
}

const char* toString(ShockClass::Tag tag) {
  switch (tag) {
    case ShockClass::Tag::Overcompressive: return "Overcompressive";
    case ShockClass::Tag::OneLax: return "OneLax";
    case ShockClass::Tag::TwoLax: return "TwoLax";
    case ShockClass::Tag::Transitional: return "Transitional";
    case ShockClass::Tag::Degenerate: return "Degenerate";
  }
  return "Unknown";
}

double atomMassAt(const DeltaAtom& atom, double t) {
  if (!(t >= 0.0)) {
    throw std::domain_error("atom mass is defined for t >= 0");
  }
  return atom.amplitudeRate * t;
}

double VBranch::at(double xi) const {
  switch (kind) {
    case Kind::Constant: return constValue;
    case Kind::Ramp: return xi / (2.0 * rampU);
    case Kind::Zero: return 0.0;
  }
  return 0.0;
}

VBranch VBranch::constant(double lo, double hi, double value) {
  return {Kind::Constant, lo, hi, value, 0.0};
}

VBranch VBranch::ramp(double lo, double hi, double u) {
  if (u == 0.0) throw std::invalid_argument("ramp branch needs u != 0");
  return {Kind::Ramp, lo, hi, 0.0, u};
}

VBranch VBranch::zero(double lo, double hi) {
  return {Kind::Zero, lo, hi, 0.0, 0.0};
}

void SolutionProfile::validate() const {
  uFan.validate();
  if (vBranches.empty()) throw InconsistentFan("profile has no v-branches");
  if (vBranches.front().xiLo != -kInf || vBranches.back().xiHi != kInf) {
    throw InconsistentFan("v-branches must span the whole xi-line");
  }
  for (std::size_t i = 0; i + 1 < vBranches.size(); ++i) {
    if (vBranches[i].xiHi != vBranches[i + 1].xiLo) {
      throw InconsistentFan("v-branches must be contiguous");
    }
    if (!(vBranches[i].xiHi > vBranches[i].xiLo)) {
      throw InconsistentFan("v-branch interval is empty");
    }
  }
  for (const auto& atom : atoms) {
    bool hosted = false;
    const double scale = std::max(1.0, std::abs(atom.speed));
    for (const auto& w : uFan.waves) {
      if (w.kind == ElementaryWave::Kind::Shock &&
          std::abs(w.speed() - atom.speed) <= 1e-12 * scale) {
        hosted = true;
        break;
      }
    }
    if (!hosted) throw InconsistentFan("atom speed matches no u-shock");
  }
}

double evalV(const SolutionProfile& profile, double xi) {
  for (const auto& b : profile.vBranches) {
    if (xi <= b.xiHi) return b.at(xi);
  }
  return profile.vBranches.back().at(xi);
}

double profileExtent(const SolutionProfile& profile) {
  double ext = 0.0;
  if (!profile.uFan.empty()) {
    ext = std::max(std::abs(profile.uFan.minSpeed()), std::abs(profile.uFan.maxSpeed()));
  }
  for (const auto& b : profile.vBranches) {
    if (std::isfinite(b.xiLo)) ext = std::max(ext, std::abs(b.xiLo));
    if (std::isfinite(b.xiHi)) ext = std::max(ext, std::abs(b.xiHi));
  }
  for (const auto& a : profile.atoms) ext = std::max(ext, std::abs(a.speed));
  return ext;
}

}  // namespace deltafan

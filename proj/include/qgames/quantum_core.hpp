#pragma once

// Two-coin quantum state algebra: SU(2) moves, entangled states and the
// outcome distribution induced by a pair of player moves.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>

namespace qgames {

using Complex = std::complex<double>;

/// Tolerance for algebraic identities (normalization, unitarity).
inline constexpr double kIdentityTolerance = 1e-12;
/// Tolerance for the separability determinant of a two-coin state.
inline constexpr double kClassicalityTolerance = 1e-10;

/// Outcome of a single coin; doubles as the label of a binary strategy.
enum class Side : int { H = 0, T = 1 };

inline constexpr std::array<Side, 2> kSides{Side::H, Side::T};

inline constexpr int index_of(Side s) { return static_cast<int>(s); }

inline constexpr const char* to_string(Side s) { return s == Side::H ? "H" : "T"; }

/// A determinant-one unitary
///
///     | p        q      |
///     | -conj(q) conj(p) |
///
/// stored by its first row.
class SpecialUnitary {
 public:
  SpecialUnitary(Complex p, Complex q) : p_(p), q_(q) {
    if (!std::isfinite(p.real()) || !std::isfinite(p.imag()) || !std::isfinite(q.real()) ||
        !std::isfinite(q.imag())) {
      throw std::invalid_argument("SpecialUnitary: non-finite entry");
    }
    const double norm = std::norm(p) + std::norm(q);
    if (std::abs(norm - 1.0) > kIdentityTolerance) {
      throw std::invalid_argument("SpecialUnitary: |p|^2 + |q|^2 = " + std::to_string(norm) +
                                  ", expected 1");
    }
  }

  static SpecialUnitary identity() { return SpecialUnitary(1.0, 0.0); }

  /// p = e^{i a} cos(t), q = e^{i b} sin(t). Every element of SU(2) has this form.
  static SpecialUnitary from_angles(double phase_p, double phase_q, double angle) {
    return SpecialUnitary(std::polar(1.0, phase_p) * std::cos(angle),
                          std::polar(1.0, phase_q) * std::sin(angle));
  }

  Complex p() const { return p_; }
  Complex q() const { return q_; }

  /// Matrix entry, zero-based.
  Complex at(int row, int col) const {
    if (row == 0) return col == 0 ? p_ : q_;
    return col == 0 ? -std::conj(q_) : std::conj(p_);
  }

  /// |top-left|^2: probability that the coins agree after U V^T acts on HH+TT.
  double agreement() const { return std::norm(p_); }
  /// |top-right|^2.
  double disagreement() const { return std::norm(q_); }

  SpecialUnitary transpose() const { return unchecked(p_, -std::conj(q_)); }
  SpecialUnitary conjugate() const { return unchecked(std::conj(p_), std::conj(q_)); }
  SpecialUnitary adjoint() const { return unchecked(std::conj(p_), -q_); }

  friend SpecialUnitary operator*(const SpecialUnitary& a, const SpecialUnitary& b) {
    // The product keeps the (p, q; -conj q, conj p) shape, so the first row suffices.
    const Complex p = a.p_ * b.p_ - a.q_ * std::conj(b.q_);
    const Complex q = a.p_ * b.q_ + a.q_ * std::conj(b.p_);
    const double scale = 1.0 / std::sqrt(std::norm(p) + std::norm(q));
    return unchecked(p * scale, q * scale);
  }

  /// Entrywise comparison.
  bool approx_equal(const SpecialUnitary& other, double tol = kIdentityTolerance) const {
    return std::abs(p_ - other.p_) <= tol && std::abs(q_ - other.q_) <= tol;
  }

 private:
  struct Unchecked {};
  SpecialUnitary(Complex p, Complex q, Unchecked) : p_(p), q_(q) {}
  static SpecialUnitary unchecked(Complex p, Complex q) { return SpecialUnitary(p, q, Unchecked{}); }

  Complex p_;
  Complex q_;
};

/// The real rotation M(theta) = ((cos, sin), (-sin, cos)).
inline SpecialUnitary rotation(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("rotation: theta must be finite");
  return SpecialUnitary(std::cos(theta), std::sin(theta));
}

/// ((0, 1), (-1, 0)); U V^T equal to this puts all mass off the diagonal.
inline SpecialUnitary swap_unitary() { return SpecialUnitary(0.0, 1.0); }

/// Haar-distributed SU(2) element: independent uniform phases, cos^2(t) uniform on [0, 1].
template <class URBG>
SpecialUnitary random_special_unitary(URBG& rng) {
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double a = phase(rng);
  const double b = phase(rng);
  const double c2 = unit(rng);
  return SpecialUnitary(std::polar(std::sqrt(c2), a), std::polar(std::sqrt(1.0 - c2), b));
}

/// Joint state of two coins over the basis HH, HT, TH, TT. Stored normalized;
/// two states are the same when they differ by a nonzero complex scalar.
class TwoQubitState {
 public:
  TwoQubitState(Complex hh, Complex ht, Complex th, Complex tt) : amp_{hh, ht, th, tt} {
    double norm = 0.0;
    for (const Complex& a : amp_) {
      if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
        throw std::invalid_argument("TwoQubitState: non-finite amplitude");
      }
      norm += std::norm(a);
    }
    if (norm == 0.0) throw std::invalid_argument("TwoQubitState: all amplitudes are zero");
    const double scale = 1.0 / std::sqrt(norm);
    for (Complex& a : amp_) a *= scale;
  }

  /// HH + TT.
  static TwoQubitState maximally_entangled() { return TwoQubitState(1.0, 0.0, 0.0, 1.0); }

  /// (a_h H + a_t T) (b_h H + b_t T).
  static TwoQubitState product(Complex a_h, Complex a_t, Complex b_h, Complex b_t) {
    return TwoQubitState(a_h * b_h, a_h * b_t, a_t * b_h, a_t * b_t);
  }

  Complex amplitude(Side coin_one, Side coin_two) const {
    return amp_[2 * index_of(coin_one) + index_of(coin_two)];
  }
  Complex hh() const { return amp_[0]; }
  Complex ht() const { return amp_[1]; }
  Complex th() const { return amp_[2]; }
  Complex tt() const { return amp_[3]; }
  const std::array<Complex, 4>& amplitudes() const { return amp_; }

  /// Representative whose first nonzero amplitude is real and positive.
  TwoQubitState canonical() const {
    for (const Complex& a : amp_) {
      if (std::abs(a) > kIdentityTolerance) {
        const Complex phase = std::conj(a) / std::abs(a);
        return TwoQubitState(amp_[0] * phase, amp_[1] * phase, amp_[2] * phase, amp_[3] * phase);
      }
    }
    return *this;
  }

  /// Equality of rays.
  bool same_state(const TwoQubitState& other, double tol = kIdentityTolerance) const {
    const TwoQubitState a = canonical();
    const TwoQubitState b = other.canonical();
    for (int i = 0; i < 4; ++i) {
      if (std::abs(a.amp_[i] - b.amp_[i]) > tol) return false;
    }
    return true;
  }

  /// Multiplies every amplitude by a nonzero scalar (the result is renormalized,
  /// so it represents the same state).
  TwoQubitState scaled(Complex factor) const {
    return TwoQubitState(amp_[0] * factor, amp_[1] * factor, amp_[2] * factor, amp_[3] * factor);
  }

 private:
  std::array<Complex, 4> amp_;
};

/// Uniformly random pure state (normalized complex Gaussian amplitudes).
template <class URBG>
TwoQubitState random_state(URBG& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  for (;;) {
    Complex a(n(rng), n(rng)), b(n(rng), n(rng)), c(n(rng), n(rng)), d(n(rng), n(rng));
    if (std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d) > 1e-6) {
      return TwoQubitState(a, b, c, d);
    }
  }
}

/// A strategy in U u S: either a unitary applied before measuring, or a pure
/// strategy (the coin is discarded).
class PlayerMove {
 public:
  PlayerMove(SpecialUnitary u) : move_(u) {}  // NOLINT(google-explicit-constructor)
  PlayerMove(Side s) : move_(s) {}            // NOLINT(google-explicit-constructor)

  static PlayerMove unitary(SpecialUnitary u) { return PlayerMove(u); }
  static PlayerMove pure(Side s) { return PlayerMove(s); }

  bool is_unitary() const { return std::holds_alternative<SpecialUnitary>(move_); }
  bool is_pure() const { return std::holds_alternative<Side>(move_); }
  const SpecialUnitary& as_unitary() const { return std::get<SpecialUnitary>(move_); }
  Side as_pure() const { return std::get<Side>(move_); }

  std::string describe() const {
    if (is_pure()) return std::string("pure ") + to_string(as_pure());
    const auto& u = as_unitary();
    auto fmt = [](Complex z) {
      return "(" + std::to_string(z.real()) + (z.imag() < 0 ? "" : "+") + std::to_string(z.imag()) +
             "i)";
    };
    return "SU(p=" + fmt(u.p()) + ", q=" + fmt(u.q()) + ")";
  }

 private:
  std::variant<SpecialUnitary, Side> move_;
};

/// Probability vector over the four outcome pairs.
class JointOutcomeDistribution {
 public:
  JointOutcomeDistribution(double hh, double ht, double th, double tt) : p_{hh, ht, th, tt} {
    double sum = 0.0;
    for (double v : p_) {
      if (!(v >= 0.0)) throw std::invalid_argument("JointOutcomeDistribution: negative probability");
      sum += v;
    }
    if (std::abs(sum - 1.0) > kIdentityTolerance) {
      throw std::invalid_argument("JointOutcomeDistribution: probabilities sum to " +
                                  std::to_string(sum));
    }
  }

  static JointOutcomeDistribution point_mass(Side one, Side two) {
    std::array<double, 4> p{};
    p[2 * index_of(one) + index_of(two)] = 1.0;
    return JointOutcomeDistribution(p[0], p[1], p[2], p[3]);
  }

  double at(Side one, Side two) const { return p_[2 * index_of(one) + index_of(two)]; }
  double hh() const { return p_[0]; }
  double ht() const { return p_[1]; }
  double th() const { return p_[2]; }
  double tt() const { return p_[3]; }
  const std::array<double, 4>& probabilities() const { return p_; }

  double marginal_one(Side s) const { return at(s, Side::H) + at(s, Side::T); }
  double marginal_two(Side s) const { return at(Side::H, s) + at(Side::T, s); }
  double disagreement() const { return p_[1] + p_[2]; }

 private:
  std::array<double, 4> p_;
};

namespace detail {

// Coin-one basis rules:
//   HH -> P HH - conj(Q) TH     HT -> P HT - conj(Q) TT
//   TH -> Q HH + conj(P) TH     TT -> Q HT + conj(P) TT
inline std::array<Complex, 4> act_on_coin_one(const std::array<Complex, 4>& a,
                                              const SpecialUnitary& u) {
  const Complex P = u.p(), Q = u.q();
  std::array<Complex, 4> out{};
  // a[0]=HH a[1]=HT a[2]=TH a[3]=TT
  out[0] += P * a[0];
  out[2] += -std::conj(Q) * a[0];
  out[1] += P * a[1];
  out[3] += -std::conj(Q) * a[1];
  out[0] += Q * a[2];
  out[2] += std::conj(P) * a[2];
  out[1] += Q * a[3];
  out[3] += std::conj(P) * a[3];
  return out;
}

// Coin-two basis rules:
//   HH -> P HH - conj(Q) HT     HT -> Q HH + conj(P) HT
//   TH -> P TH - conj(Q) TT     TT -> Q TH + conj(P) TT
inline std::array<Complex, 4> act_on_coin_two(const std::array<Complex, 4>& a,
                                              const SpecialUnitary& v) {
  const Complex P = v.p(), Q = v.q();
  std::array<Complex, 4> out{};
  out[0] += P * a[0];
  out[1] += -std::conj(Q) * a[0];
  out[0] += Q * a[1];
  out[1] += std::conj(P) * a[1];
  out[2] += P * a[2];
  out[3] += -std::conj(Q) * a[2];
  out[2] += Q * a[3];
  out[3] += std::conj(P) * a[3];
  return out;
}

inline std::array<double, 4> squared_moduli(const std::array<Complex, 4>& a) {
  std::array<double, 4> p{};
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    p[i] = std::norm(a[i]);
    sum += p[i];
  }
  for (double& v : p) v /= sum;
  return p;
}

}  // namespace detail

/// (U (x) 1) xi (1 (x) V): player one acts on coin one, player two on coin two.
inline TwoQubitState apply_pair(const TwoQubitState& xi, const SpecialUnitary& u,
                                const SpecialUnitary& v) {
  const auto a = detail::act_on_coin_two(detail::act_on_coin_one(xi.amplitudes(), u), v);
  return TwoQubitState(a[0], a[1], a[2], a[3]);
}

/// The distribution on strategy pairs induced by two moves in environment xi.
inline JointOutcomeDistribution outcome_distribution(const TwoQubitState& xi, const PlayerMove& m1,
                                                     const PlayerMove& m2) {
  if (m1.is_pure() && m2.is_pure()) {
    return JointOutcomeDistribution::point_mass(m1.as_pure(), m2.as_pure());
  }
  if (m1.is_unitary() && m2.is_unitary()) {
    const auto p = detail::squared_moduli(apply_pair(xi, m1.as_unitary(), m2.as_unitary()).amplitudes());
    return JointOutcomeDistribution(p[0], p[1], p[2], p[3]);
  }
  std::array<double, 4> out{};
  if (m1.is_unitary()) {
    // Player two discards their coin; only coin one's marginal survives.
    const auto p = detail::squared_moduli(detail::act_on_coin_one(xi.amplitudes(), m1.as_unitary()));
    const int col = index_of(m2.as_pure());
    out[0 + col] = p[0] + p[1];
    out[2 + col] = p[2] + p[3];
  } else {
    const auto p = detail::squared_moduli(detail::act_on_coin_two(xi.amplitudes(), m2.as_unitary()));
    const int row = index_of(m1.as_pure());
    out[2 * row + 0] = p[0] + p[2];
    out[2 * row + 1] = p[1] + p[3];
  }
  return JointOutcomeDistribution(out[0], out[1], out[2], out[3]);
}

/// A state is reproducible by classical randomization iff it is a product
/// state, i.e. a_hh a_tt - a_ht a_th = 0.
inline bool is_classical(const TwoQubitState& xi) {
  return std::abs(xi.hh() * xi.tt() - xi.ht() * xi.th()) <= kClassicalityTolerance;
}

/// Reply that concentrates the outcome on the main diagonal when the state is
/// HH+TT and player one plays u: U conj(U)^T = 1.
inline SpecialUnitary diagonal_forcing_reply(const SpecialUnitary& u) { return u.conjugate(); }

/// Reply that concentrates the outcome off the diagonal when the state is
/// HH+TT: with V = J conj(U), U V^T = J^T.
inline SpecialUnitary off_diagonal_forcing_reply(const SpecialUnitary& u) {
  return swap_unitary() * u.conjugate();
}

}  // namespace qgames

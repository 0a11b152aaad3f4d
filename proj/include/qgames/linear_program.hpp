#pragma once

// Dense two-phase tableau simplex with Bland's rule. Instantiated with an
// exact rational type for the correlated-equilibrium queries and with double
// for convex-hull membership tests.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qgames {

using Rational = boost::multiprecision::cpp_rational;

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "?";
}

template <class Scalar>
struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Scalar value{};
  std::vector<Scalar> solution;
};

template <class Scalar>
struct LpTolerance {
  static Scalar pivot() { return Scalar(0); }
};

template <>
struct LpTolerance<double> {
  static double pivot() { return 1e-12; }
};

/// maximize c.x  subject to  rows (<=, =, >=) and x >= 0.
template <class Scalar>
class LinearProgram {
 public:
  enum class Relation { kLessEqual, kEqual, kGreaterEqual };

  explicit LinearProgram(std::size_t num_variables)
      : num_vars_(num_variables), objective_(num_variables, Scalar(0)) {}

  std::size_t num_variables() const { return num_vars_; }

  void set_objective(std::vector<Scalar> c) {
    if (c.size() != num_vars_) throw std::invalid_argument("LinearProgram: objective size mismatch");
    objective_ = std::move(c);
  }

  void add_constraint(std::vector<Scalar> coefficients, Relation rel, Scalar rhs) {
    if (coefficients.size() != num_vars_) {
      throw std::invalid_argument("LinearProgram: constraint size mismatch");
    }
    rows_.push_back({std::move(coefficients), rel, std::move(rhs)});
  }

  /// `feasibility_slack` bounds the phase-one residual accepted as feasible.
  LpResult<Scalar> maximize(Scalar feasibility_slack = Scalar(0)) const {
    Tableau t = build();
    LpResult<Scalar> result;

    // Phase one: drive the artificial variables to zero.
    if (t.num_artificial > 0) {
      std::vector<Scalar> phase_one(t.cols, Scalar(0));
      for (std::size_t j = t.first_artificial; j < t.first_artificial + t.num_artificial; ++j) {
        phase_one[j] = Scalar(-1);
      }
      t.load_objective(phase_one);
      if (!t.run(t.cols)) throw std::logic_error("LinearProgram: phase one unbounded");
      if (-t.objective_value() > feasibility_slack) {
        result.status = LpStatus::kInfeasible;
        return result;
      }
      t.expel_artificials();
    }

    std::vector<Scalar> phase_two(t.cols, Scalar(0));
    for (std::size_t j = 0; j < num_vars_; ++j) phase_two[j] = objective_[j];
    t.load_objective(phase_two);
    if (!t.run(t.first_artificial)) {
      result.status = LpStatus::kUnbounded;
      return result;
    }
    result.status = LpStatus::kOptimal;
    result.value = t.objective_value();
    result.solution.assign(num_vars_, Scalar(0));
    for (std::size_t i = 0; i < t.basis.size(); ++i) {
      if (t.basis[i] < num_vars_) result.solution[t.basis[i]] = t.rhs(i);
    }
    return result;
  }

 private:
  struct Row {
    std::vector<Scalar> a;
    Relation rel;
    Scalar b;
  };

  struct Tableau {
    std::size_t cols = 0;  // excluding the rhs column
    std::size_t first_artificial = 0;
    std::size_t num_artificial = 0;
    std::vector<std::vector<Scalar>> m;  // rows x (cols + 1)
    std::vector<std::size_t> basis;
    std::vector<Scalar> cost;     // objective coefficients of the current phase
    std::vector<Scalar> reduced;  // cost_j - z_j

    const Scalar& rhs(std::size_t i) const { return m[i][cols]; }

    Scalar objective_value() const {
      Scalar v(0);
      for (std::size_t i = 0; i < basis.size(); ++i) v += cost[basis[i]] * rhs(i);
      return v;
    }

    void load_objective(const std::vector<Scalar>& c) {
      cost = c;
      reduced = c;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const Scalar& cb = cost[basis[i]];
        if (cb == Scalar(0)) continue;
        for (std::size_t j = 0; j < cols; ++j) reduced[j] -= cb * m[i][j];
      }
    }

    void pivot(std::size_t row, std::size_t col) {
      const Scalar inv = Scalar(1) / m[row][col];
      for (Scalar& v : m[row]) v *= inv;
      m[row][col] = Scalar(1);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i == row) continue;
        const Scalar f = m[i][col];
        if (f == Scalar(0)) continue;
        for (std::size_t j = 0; j <= cols; ++j) m[i][j] -= f * m[row][j];
        m[i][col] = Scalar(0);
      }
      const Scalar f = reduced[col];
      if (f != Scalar(0)) {
        for (std::size_t j = 0; j < cols; ++j) reduced[j] -= f * m[row][j];
        reduced[col] = Scalar(0);
      }
      basis[row] = col;
    }

    // Columns at or beyond `column_limit` never enter. Returns false when unbounded.
    bool run(std::size_t column_limit) {
      const Scalar eps = LpTolerance<Scalar>::pivot();
      for (;;) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < column_limit; ++j) {
          if (reduced[j] > eps) {
            enter = j;
            break;
          }
        }
        if (enter == cols) return true;
        std::size_t leave = m.size();
        Scalar best_ratio{};
        for (std::size_t i = 0; i < m.size(); ++i) {
          if (m[i][enter] > eps) {
            Scalar ratio = rhs(i) / m[i][enter];
            if (leave == m.size() || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
              leave = i;
              best_ratio = std::move(ratio);
            }
          }
        }
        if (leave == m.size()) return false;
        pivot(leave, enter);
      }
    }

    void expel_artificials() {
      const Scalar eps = LpTolerance<Scalar>::pivot();
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i] < first_artificial) continue;
        for (std::size_t j = 0; j < first_artificial; ++j) {
          if (m[i][j] > eps || m[i][j] < -eps) {
            pivot(i, j);
            break;
          }
        }
        // A row with no usable column is redundant; its artificial stays at zero.
      }
    }
  };

  Tableau build() const {
    std::size_t num_slack = 0;
    std::size_t num_artificial = 0;
    for (const Row& r : rows_) {
      const Relation rel = normalized_relation(r);
      if (rel != Relation::kEqual) ++num_slack;
      if (rel != Relation::kLessEqual) ++num_artificial;
    }
    Tableau t;
    t.cols = num_vars_ + num_slack + num_artificial;
    t.first_artificial = num_vars_ + num_slack;
    t.num_artificial = num_artificial;
    std::size_t next_slack = num_vars_;
    std::size_t next_artificial = t.first_artificial;
    for (const Row& r : rows_) {
      const bool flip = r.b < Scalar(0);
      const Relation rel = normalized_relation(r);
      std::vector<Scalar> row(t.cols + 1, Scalar(0));
      for (std::size_t j = 0; j < num_vars_; ++j) row[j] = flip ? Scalar(-r.a[j]) : r.a[j];
      row[t.cols] = flip ? Scalar(-r.b) : r.b;
      std::size_t basic = 0;
      if (rel == Relation::kLessEqual) {
        row[next_slack] = Scalar(1);
        basic = next_slack++;
      } else if (rel == Relation::kGreaterEqual) {
        row[next_slack++] = Scalar(-1);
        row[next_artificial] = Scalar(1);
        basic = next_artificial++;
      } else {
        row[next_artificial] = Scalar(1);
        basic = next_artificial++;
      }
      t.m.push_back(std::move(row));
      t.basis.push_back(basic);
    }
    return t;
  }

  static Relation normalized_relation(const Row& r) {
    if (!(r.b < Scalar(0)) || r.rel == Relation::kEqual) return r.rel;
    return r.rel == Relation::kLessEqual ? Relation::kGreaterEqual : Relation::kLessEqual;
  }

  std::size_t num_vars_;
  std::vector<Scalar> objective_;
  std::vector<Row> rows_;
};

/// Exact value of a finite double.
inline Rational to_rational(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("to_rational: non-finite value");
  return Rational(v);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace qgames

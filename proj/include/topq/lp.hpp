#pragma once

#include <optional>
#include <vector>

#include "topq/rational.hpp"

namespace topq {

enum class Relation { LessEqual, GreaterEqual, Equal };

struct LinearConstraint {
  QVector coeffs;
  Relation relation = Relation::Equal;
  Rational rhs = 0;
};

struct LinearSystem {
  std::size_t num_vars = 0;
  std::vector<LinearConstraint> constraints;
  // Variables flagged here are constrained to be >= 0 without an explicit
  // row. Empty means all variables are free.
  std::vector<bool> nonnegative;
};

// Exact feasibility by the phase-1 simplex method over Q with Bland's rule
// (terminates without cycling). Returns a feasible point (a basic solution)
// or nullopt when the system is infeasible.
std::optional<QVector> lp_feasible(const LinearSystem& system);

bool satisfies(const LinearSystem& system, const QVector& x);

}  // namespace topq

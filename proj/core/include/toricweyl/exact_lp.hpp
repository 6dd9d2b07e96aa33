#ifndef TORICWEYL_EXACT_LP_HPP
#define TORICWEYL_EXACT_LP_HPP

#include "toricweyl/exact_linalg.hpp"

namespace toricweyl {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat objective;
  RatVec x;
};

/// maximize c.x subject to A x = b, x >= 0, in exact arithmetic.
/// Two-phase simplex with Bland's rule (no cycling).
LpResult lp_maximize(const RatVec& c, const RatMat& a, const RatVec& b);

/// Is {x >= 0 : A x = b} nonempty?
bool lp_feasible(const RatMat& a, const RatVec& b);

/// Barycentric slack of eta inside conv{rows of points}: the optimal value of
///   max s  s.t.  eta = sum_j lambda_j p_j, sum lambda = 1, lambda_j >= s >= 0.
/// Positive iff eta lies in the relative interior of the hull; nullopt if eta
/// is not in the hull at all.
std::optional<Rat> interior_slack(const RatMat& points, const RatVec& eta);

/// Can target be written as a convex combination of the given rows?
/// On success returns the coefficients.
std::optional<RatVec> convex_combination(const RatMat& points,
                                         const RatVec& target);

}  // namespace toricweyl

#endif

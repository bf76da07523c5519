#ifndef SYMCERT_BRANCH_BOUND_HPP
#define SYMCERT_BRANCH_BOUND_HPP

#include "symcert/interval.hpp"
#include "symcert/polynomial.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace symcert {

enum class Relation { EqualsZero, AtMostZero };

struct Constraint {
  Polynomial g;
  Relation relation;
};

using ConstraintSpec = std::vector<Constraint>;

/// Minimize `objective` over the part of `domain` satisfying every constraint,
/// aiming to prove objective >= target.
struct Problem {
  Polynomial objective;
  Box domain;
  ConstraintSpec constraints;
  Rational target;
};

struct Budget {
  int max_depth = 40;
  std::size_t max_boxes = 1'000'000;
};

enum class CertStatus { Certified, Inconclusive, InfeasibleDomain, Refuted };

std::string to_string(CertStatus s);

enum class LeafKind {
  Bound,       ///< objective enclosure lower end >= target
  Infeasible,  ///< a constraint enclosure excludes feasibility
  Open,        ///< processed at max depth without a decision
  Pending,     ///< never processed (box budget ran out); carries the parent's enclosure
};

std::string to_string(LeafKind k);

struct LeafRecord {
  /// Bisection path from the root: '0' lower half, '1' upper half; "" for the root.
  std::string path;
  Box box;
  LeafKind kind;
  /// Objective enclosure (own enclosure intersected with the parent's); unused for Infeasible.
  Interval enclosure;
  /// Index of the excluding constraint for Infeasible leaves.
  int constraint_index = -1;
};

struct CertificateResult {
  /// Always a true lower bound for the objective on the feasible part of the domain.
  Rational certified_lower_bound;
  CertStatus status = CertStatus::Inconclusive;
  std::size_t boxes_processed = 0;
  int max_depth_reached = 0;
  bool budget_exhausted = false;
  /// Exact feasible point with objective < target (status Refuted).
  std::optional<std::vector<Rational>> witness;
  std::optional<Rational> witness_value;
  /// Smallest objective value seen at an exactly feasible box midpoint.
  std::optional<Rational> best_feasible_value;
  std::vector<LeafRecord> leaves;
};

/// Index of the dimension to bisect: widest, ties to the lowest index.
std::size_t split_dimension(const Box& box);
std::pair<Box, Box> bisect(const Box& box);

/// Breadth-first interval branch-and-bound. The result, including every
/// counter and the leaf list, depends only on the inputs and the budget,
/// never on `workers`.
CertificateResult bb_lower_bound(const Problem& problem, const Budget& budget, unsigned workers = 1);

/// Replayable text certificate: problem, claimed status and bound, and every leaf.
void write_certificate(std::ostream& out, const Problem& problem, const CertificateResult& result);

struct ReplayResult {
  std::size_t leaves_checked = 0;
  std::size_t discrepancies = 0;
  bool coverage_ok = false;
  CertStatus claimed_status = CertStatus::Inconclusive;
  Rational claimed_bound;
  std::optional<Rational> recomputed_bound;
  std::vector<std::string> messages;
  bool ok() const { return coverage_ok && discrepancies == 0; }
};

/// Re-derives each leaf box from its path, re-encloses the objective and the
/// constraints, checks that the leaves tile the domain, and confirms the
/// claimed bound and status. Does not rerun the search. A malformed file is
/// reported as a discrepancy, never thrown.
ReplayResult replay_certificate(std::istream& in);

struct GridResult {
  std::optional<std::vector<Rational>> point;
  std::optional<Rational> value;
  std::size_t nodes_scanned = 0;
  std::size_t feasible_nodes = 0;
  bool empty() const { return !point.has_value(); }
};

/// Exhaustive scan of the grid lo + k*step in every dimension. Equality
/// constraints are relaxed to |g| <= step * sum_i mag(range(dg/dx_i, box)).
/// Non-certified: an upper estimate of the minimum. Ties keep the first node
/// in lexicographic grid order.
GridResult grid_oracle_min(const Polynomial& p, const Box& box, const ConstraintSpec& cons, const Rational& step);

}  // namespace symcert

#endif  // SYMCERT_BRANCH_BOUND_HPP

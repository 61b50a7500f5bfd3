// Division (normal form) against a set of uniform elements, with an
// optional rewrite trace that reconstructs x − reduce(x) exactly.
#ifndef PATHALG_REDUCE_HPP
#define PATHALG_REDUCE_HPP

#include <vector>

#include "pathalg/order.hpp"

namespace pathalg {

struct RewriteStep {
  int divisor_index = -1;  // into the divisor list
  Path left;               // u in u·g·v
  Path right;              // v in u·g·v
  Scalar factor;           // coefficient removed
};

struct ReductionResult {
  AlgebraElement normal_form;
  std::vector<RewriteStep> trace;
};

// Rewrite-site policy. kLargestFirst is the shipped default: reduce the
// order-largest reducible support path, using the leftmost occurrence of
// the largest applicable divisor tip. kSmallestFirst exists to spot-check
// that normal forms against a reduced basis are strategy-independent.
enum class ReduceStrategy { kLargestFirst, kSmallestFirst };

ReductionResult reduce_traced(const AlgebraElement& x,
                              const std::vector<AlgebraElement>& divisors,
                              const AdmissibleOrder& order,
                              ReduceStrategy strategy = ReduceStrategy::kLargestFirst);

AlgebraElement reduce(const AlgebraElement& x,
                      const std::vector<AlgebraElement>& divisors,
                      const AdmissibleOrder& order,
                      ReduceStrategy strategy = ReduceStrategy::kLargestFirst);

// Replays a trace: Σ factor·(u·g·v) over the steps.
AlgebraElement replay_trace(const Quiver& q, const Field& f,
                            const std::vector<AlgebraElement>& divisors,
                            const std::vector<RewriteStep>& trace);

}  // namespace pathalg

#endif

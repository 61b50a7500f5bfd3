// Admissible well-orders on paths. Both shipped kinds refine length, so
// the three admissibility axioms (stability under left/right products;
// domination of subwords) hold by construction; the test suite checks
// them on random triples anyway.
#ifndef PATHALG_ORDER_HPP
#define PATHALG_ORDER_HPP

#include <string>
#include <vector>

#include "pathalg/element.hpp"
#include "pathalg/quiver.hpp"

namespace pathalg {

enum class Ordering { kLess, kEqual, kGreater };

class AdmissibleOrder {
 public:
  enum class Kind { kDeglex, kDegrevlex };

  // `priorities` lists arrows from smallest to largest; arrows absent
  // from the list rank below all listed ones, in declaration order.
  AdmissibleOrder(const Quiver& q, Kind kind,
                  const std::vector<std::string>& priorities = {});

  Kind kind() const { return kind_; }
  const std::vector<std::string>& priority_names() const { return priority_names_; }

  // Length first. Ties: deglex scans left-to-right, higher-priority arrow
  // wins; degrevlex scans right-to-left, lower-priority arrow wins.
  Ordering compare(const Path& p, const Path& q) const;
  bool less(const Path& p, const Path& q) const {
    return compare(p, q) == Ordering::kLess;
  }
  bool greater(const Path& p, const Path& q) const {
    return compare(p, q) == Ordering::kGreater;
  }

  static std::string kind_name(Kind k);
  static Kind parse_kind(const std::string& name);

 private:
  const Quiver* quiver_;
  Kind kind_;
  std::vector<int> rank_;  // arrow index -> priority rank (higher = larger)
  std::vector<std::string> priority_names_;
};

// The order-largest support path of x and its coefficient; errors on 0.
std::pair<Path, Scalar> tip(const AlgebraElement& x, const AdmissibleOrder& order);

// x scaled so the tip coefficient is 1.
AlgebraElement make_monic(const AlgebraElement& x, const AdmissibleOrder& order);

}  // namespace pathalg

#endif

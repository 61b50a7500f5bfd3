// Seeded random-instance sweeps. The generator is a plain 64-bit LCG
// (state := 6364136223846793005·state + 1442695040888963407 mod 2^64,
// high bits used for bounded draws) so sweeps are reproducible across
// implementations from the seed alone; the constants are part of the
// file-format contract documented in the README.
#ifndef PATHALG_EXPERIMENT_HPP
#define PATHALG_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pathalg/io.hpp"

namespace pathalg {

class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  // Uniform-ish draw in [0, n); n ≥ 1. Uses the high 32 bits.
  std::uint64_t bounded(std::uint64_t n) {
    return (next() >> 32) % n;
  }

 private:
  std::uint64_t state_;
};

struct ExperimentSpec {
  std::uint64_t seed = 1;
  int count = 0;
  int vertices = 1;
  int arrows = 2;
  std::vector<int> profile_degrees;  // e.g. {2, 3} or {3}
  std::vector<int> profile_counts;   // relations per degree
  std::string field = "rational";
  int max_degree = 10;
  int max_n = 6;

  static ExperimentSpec from_json(const Json& j);
  Json to_json() const;
};

struct RandomInstance {
  std::shared_ptr<const Quiver> quiver;
  std::vector<Path> tips;

  TipSet tip_set() const { return TipSet(*quiver, tips); }
  AlgebraInput as_input(const Field& f) const;
};

std::shared_ptr<const Quiver> random_quiver(Lcg& rng, int vertices, int arrows);

// Draws an anti-chain with the requested degree profile by rejection:
// random composable walks, resampled on subpath conflicts. Returns
// nothing if the quiver cannot host the profile.
std::optional<RandomInstance> random_monomial_instance(Lcg& rng, int vertices,
                                                       int arrows,
                                                       const std::vector<int>& degrees,
                                                       const std::vector<int>& counts,
                                                       int attempts = 200);

// Adds order-smaller parallel normal-word tails to some relations, aiming
// to keep the reduced basis tips unchanged (verified by re-running the
// completion; retries with fresh draws otherwise). Returns the input on
// failure to perturb.
AlgebraInput perturb_same_tips(Lcg& rng, const RandomInstance& inst, const Field& f,
                               int max_degree, int attempts = 25);

struct ExperimentOutput {
  std::string csv;
  std::vector<Json> reports;  // one per instance, in index order
};

ExperimentOutput run_experiment(const ExperimentSpec& spec);

}  // namespace pathalg

#endif

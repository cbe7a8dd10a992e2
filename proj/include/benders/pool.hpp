#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include "benders/common.hpp"

namespace benders {

enum class DualKind : char { Vertex = 'V', Ray = 'R' };

struct DualSolution {
  int id = 0;
  Eigen::VectorXd values;
  DualKind kind = DualKind::Vertex;
  int origin_replication = 0;
};

enum class CurationMode { Full, Curated, RandomCurated };

// Archive of dual vertices and rays collected across replications, with the
// permanent/trial/bench partition that backs the curated view. Lookups are
// read-only; inserts and the end-of-replication update require exclusive
// access.
class DualPool {
 public:
  explicit DualPool(uint64_t curation_seed = 0)
      : curation_rng_(curation_seed) {}

  // Deduplicates on a 1e-9 rounding grid per component; re-inserting an
  // existing vector returns the original id with was_new = false. Rays are
  // normalized to unit length before storage.
  std::pair<int, bool> insert(const Eigen::VectorXd& values, DualKind kind,
                              int origin_replication);

  const DualSolution& dual(int id) const;
  int size() const { return static_cast<int>(duals_.size()); }
  bool empty() const { return duals_.empty(); }

  // All ids, ascending; the curated view (permanent + trial, or a random
  // stand-in of the same size in RandomCurated mode).
  const std::vector<int>& all_ids() const { return all_ids_; }
  const std::vector<int>& curated_ids() const { return curated_ids_; }
  int curated_size() const { return static_cast<int>(curated_ids_.size()); }
  const std::vector<int>& permanent_ids() const { return permanent_ids_; }
  const std::vector<int>& trial_ids() const { return trial_ids_; }

  struct Lookup {
    double value = 0.0;
    int id = -1;
  };

  // Best vertex in the view for the given subproblem cost vector; ties go to
  // the lowest id. Throws EmptyPool when the view holds no vertex.
  Lookup lookup(const std::vector<int>& view, const Eigen::VectorXd& cost) const;

  // Largest positive ray product in the view, if any ray has one.
  std::optional<Lookup> ray_violation(const std::vector<int>& view,
                                      const Eigen::VectorXd& cost) const;

  // Moves used duals into the permanent set, makes the newly discovered ones
  // the next trial set, benches unused trial members and recomputes the
  // curated view according to the mode.
  void end_of_replication_update(const std::vector<int>& used_ids,
                                 const std::vector<int>& new_ids,
                                 CurationMode mode);

  void write(std::ostream& os) const;
  static DualPool read(std::istream& is, uint64_t curation_seed = 0);

  // Probability that none of n stored optima is within eps * diameter of
  // optimal for a fresh coefficient draw, under the concentration premise:
  // [2 exp(-eps^2 / (8 sigma^2))]^n, clamped to 1.
  static double failure_probability_bound(double sigma, double eps, long n);

  // Smallest pool size guaranteeing the eps * diameter gap with probability
  // at least 1 - rho. Requires eps > sigma * sqrt(8 ln 2); otherwise throws
  // ThresholdViolation.
  static long sample_size_bound(double sigma, double eps, double rho);

 private:
  void check_id(int id) const;
  void recompute_curated(CurationMode mode);

  std::vector<DualSolution> duals_;
  std::vector<int> all_ids_;
  std::vector<int> permanent_ids_;
  std::vector<int> trial_ids_;
  std::vector<int> curated_ids_;
  std::map<std::vector<long long>, int> fingerprints_;
  SplitMix64 curation_rng_;
};

}  // namespace benders

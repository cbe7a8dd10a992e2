#include "benders/pool.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <set>

namespace benders {

namespace {

constexpr double kFingerprintGrid = 1e-9;

std::vector<long long> fingerprint(const Eigen::VectorXd& v) {
  std::vector<long long> key(v.size());
  for (int i = 0; i < v.size(); ++i)
    key[i] = std::llround(v[i] / kFingerprintGrid);
  return key;
}

}  // namespace

std::pair<int, bool> DualPool::insert(const Eigen::VectorXd& values,
                                      DualKind kind, int origin_replication) {
  for (int i = 0; i < values.size(); ++i)
    if (!std::isfinite(values[i]))
      throw DimensionMismatch("non-finite dual component");
  Eigen::VectorXd stored = values;
  if (kind == DualKind::Ray) {
    const double norm = stored.norm();
    if (norm <= 0.0) throw InvalidRay("zero ray");
    stored /= norm;
  }
  auto key = fingerprint(stored);
  const auto it = fingerprints_.find(key);
  if (it != fingerprints_.end()) return {it->second, false};
  const int id = static_cast<int>(duals_.size());
  duals_.push_back({id, std::move(stored), kind, origin_replication});
  all_ids_.push_back(id);
  fingerprints_.emplace(std::move(key), id);
  return {id, true};
}

const DualSolution& DualPool::dual(int id) const {
  check_id(id);
  return duals_[id];
}

void DualPool::check_id(int id) const {
  if (id < 0 || id >= static_cast<int>(duals_.size()))
    throw UnknownId("dual id " + std::to_string(id));
}

DualPool::Lookup DualPool::lookup(const std::vector<int>& view,
                                  const Eigen::VectorXd& cost) const {
  Lookup best;
  bool have = false;
  for (const int id : view) {
    check_id(id);
    const DualSolution& d = duals_[id];
    if (d.kind != DualKind::Vertex) continue;
    const double v = d.values.dot(cost);
    if (!have || v > best.value) {
      best = {v, id};
      have = true;
    }
  }
  if (!have) throw EmptyPool("no vertex in pool view");
  return best;
}

std::optional<DualPool::Lookup> DualPool::ray_violation(
    const std::vector<int>& view, const Eigen::VectorXd& cost) const {
  std::optional<Lookup> best;
  for (const int id : view) {
    check_id(id);
    const DualSolution& d = duals_[id];
    if (d.kind != DualKind::Ray) continue;
    const double v = d.values.dot(cost);
    if (v <= 0.0) continue;
    if (!best || v > best->value) best = Lookup{v, id};
  }
  return best;
}

void DualPool::end_of_replication_update(const std::vector<int>& used_ids,
                                         const std::vector<int>& new_ids,
                                         CurationMode mode) {
  for (const int id : used_ids) check_id(id);
  for (const int id : new_ids) check_id(id);
  std::set<int> perm(permanent_ids_.begin(), permanent_ids_.end());
  perm.insert(used_ids.begin(), used_ids.end());
  std::set<int> trial(new_ids.begin(), new_ids.end());
  for (const int id : perm) trial.erase(id);
  permanent_ids_.assign(perm.begin(), perm.end());
  trial_ids_.assign(trial.begin(), trial.end());
  recompute_curated(mode);
}

void DualPool::recompute_curated(CurationMode mode) {
  switch (mode) {
    case CurationMode::Full:
      curated_ids_ = all_ids_;
      return;
    case CurationMode::Curated: {
      std::set<int> cur(permanent_ids_.begin(), permanent_ids_.end());
      cur.insert(trial_ids_.begin(), trial_ids_.end());
      curated_ids_.assign(cur.begin(), cur.end());
      return;
    }
    case CurationMode::RandomCurated: {
      // same cardinality as the curated trajectory, membership uniform
      std::set<int> cur(permanent_ids_.begin(), permanent_ids_.end());
      cur.insert(trial_ids_.begin(), trial_ids_.end());
      const size_t target = std::min(cur.size(), all_ids_.size());
      std::vector<int> shuffled = all_ids_;
      for (size_t i = 0; i < target; ++i) {
        const size_t j =
            i + curation_rng_.uniform_int(shuffled.size() - i);
        std::swap(shuffled[i], shuffled[j]);
      }
      shuffled.resize(target);
      std::sort(shuffled.begin(), shuffled.end());
      curated_ids_ = std::move(shuffled);
      return;
    }
  }
}

void DualPool::write(std::ostream& os) const {
  os << std::setprecision(17);
  os << "POOL v1\n";
  os << "count " << duals_.size() << '\n';
  for (const DualSolution& d : duals_) {
    os << "dual " << d.id << ' '
       << (d.kind == DualKind::Vertex ? 'V' : 'R') << ' '
       << d.origin_replication << ' ' << d.values.size();
    for (int i = 0; i < d.values.size(); ++i) os << ' ' << d.values[i];
    os << '\n';
  }
  auto write_set = [&os](const char* tag, const std::vector<int>& ids) {
    os << tag << ' ' << ids.size();
    for (const int id : ids) os << ' ' << id;
    os << '\n';
  };
  write_set("perm", permanent_ids_);
  write_set("trial", trial_ids_);
  write_set("cur", curated_ids_);
  os << "END\n";
}

DualPool DualPool::read(std::istream& is, uint64_t curation_seed) {
  auto expect = [&is](const std::string& token) {
    std::string word;
    if (!(is >> word) || word != token)
      throw IoError("pool file: expected '" + token + "'");
  };
  expect("POOL");
  expect("v1");
  expect("count");
  size_t count;
  if (!(is >> count)) throw IoError("pool file: bad count");
  DualPool pool(curation_seed);
  for (size_t k = 0; k < count; ++k) {
    expect("dual");
    int id, origin, dim;
    char kind;
    if (!(is >> id >> kind >> origin >> dim))
      throw IoError("pool file: bad dual record");
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i)
      if (!(is >> v[i])) throw IoError("pool file: truncated dual");
    const auto [got, was_new] = pool.insert(
        v, kind == 'V' ? DualKind::Vertex : DualKind::Ray, origin);
    if (!was_new || got != id) throw IoError("pool file: id mismatch");
  }
  auto read_set = [&is, &expect](const char* tag, std::vector<int>* out) {
    expect(tag);
    size_t n;
    if (!(is >> n)) throw IoError("pool file: bad set size");
    out->resize(n);
    for (size_t i = 0; i < n; ++i)
      if (!(is >> (*out)[i])) throw IoError("pool file: truncated set");
  };
  read_set("perm", &pool.permanent_ids_);
  read_set("trial", &pool.trial_ids_);
  read_set("cur", &pool.curated_ids_);
  expect("END");
  return pool;
}

double DualPool::failure_probability_bound(double sigma, double eps, long n) {
  if (sigma <= 0 || eps < 0 || n < 1)
    throw InvalidConfig("failure bound needs sigma > 0, eps >= 0, n >= 1");
  const double per_trial = 2.0 * std::exp(-eps * eps / (8.0 * sigma * sigma));
  return std::min(1.0, std::pow(per_trial, static_cast<double>(n)));
}

long DualPool::sample_size_bound(double sigma, double eps, double rho) {
  if (sigma <= 0 || rho <= 0 || rho >= 1)
    throw InvalidConfig("sample size bound needs sigma > 0, rho in (0,1)");
  const double denom = eps * eps - 8.0 * sigma * sigma * std::log(2.0);
  if (denom <= 0)
    throw ThresholdViolation("eps must exceed sigma * sqrt(8 ln 2)");
  const double raw = 8.0 * sigma * sigma * std::log(1.0 / rho) / denom;
  return std::max(1L, static_cast<long>(std::ceil(raw)));
}

}  // namespace benders

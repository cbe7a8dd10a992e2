#include "benders/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <sstream>
#include <vector>

namespace benders {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

char sense_char(RowSense s) { return static_cast<char>(s); }

RowSense sense_from_char(char c) {
  switch (c) {
    case 'L':
      return RowSense::LessEqual;
    case 'E':
      return RowSense::Equal;
    case 'G':
      return RowSense::GreaterEqual;
    default:
      throw IoError(std::string("bad row sense '") + c + "'");
  }
}
}  // namespace

void CoreInstance::validate() const {
  const int n1 = first_stage_dim();
  const int m2 = recourse_rows();
  if (static_cast<int>(integrality.size()) != n1 ||
      x_lower.size() != n1 || x_upper.size() != n1)
    throw DimensionMismatch("first-stage mask/bounds size");
  if (first_stage_matrix.cols() != n1 ||
      first_stage_rhs.size() != first_stage_matrix.rows())
    throw DimensionMismatch("first-stage constraint dimensions");
  if (recourse_cost.size() != recourse_matrix.cols())
    throw DimensionMismatch("recourse cost length");
  if (static_cast<int>(recourse_senses.size()) != m2 ||
      h_const.size() != m2 || h_xi.rows() != m2 || technology.rows() != m2)
    throw DimensionMismatch("recourse row dimensions");
  if (technology.cols() != n1)
    throw DimensionMismatch("technology matrix column count");
  if (scenario_gen.dim() != h_xi.cols())
    throw DimensionMismatch("demand dimension vs h map");
}

LpModel CoreInstance::subproblem_model(const Eigen::VectorXd& rhs) const {
  LpModel lp;
  lp.objective = recourse_cost;
  lp.matrix = recourse_matrix;
  lp.row_senses = recourse_senses;
  lp.rhs = rhs;
  lp.lower = Eigen::VectorXd::Zero(recourse_cols());
  lp.upper = Eigen::VectorXd::Constant(recourse_cols(), kInf);
  return lp;
}

void CflpConfig::validate() const {
  if (num_facilities <= 0 || num_customers <= 0)
    throw InvalidConfig("cflp needs at least one facility and customer");
  if (setup_cost.size() != num_facilities ||
      capacity.size() != num_facilities ||
      transport_cost.rows() != num_facilities ||
      transport_cost.cols() != num_customers ||
      demand_mean.size() != num_customers)
    throw InvalidConfig("cflp data dimensions inconsistent");
  if (with_shortfall && penalty.size() != num_customers)
    throw InvalidConfig("cflp penalty dimension");
  if ((capacity.array() <= 0).any() || (setup_cost.array() <= 0).any())
    throw InvalidConfig("cflp costs and capacities must be positive");
  if ((transport_cost.array() <= 0).any())
    throw InvalidConfig("cflp transport costs must be positive");
  if (with_shortfall && (penalty.array() <= 0).any())
    throw InvalidConfig("cflp penalties must be positive");
  if (capacity.sum() < demand_mean.sum())
    throw InvalidConfig("total capacity below expected total demand");
}

CoreInstance build_cflp(const CflpConfig& config) {
  config.validate();
  const int F = config.num_facilities;
  const int C = config.num_customers;
  const int ny = F * C;
  const int n2 = ny + (config.with_shortfall ? C : 0);

  CoreInstance inst;
  inst.family = "cflp";
  inst.name = "cflp_f" + std::to_string(F) + "_c" + std::to_string(C) + "_s" +
              std::to_string(config.seed);
  inst.first_stage_cost = config.setup_cost;
  inst.first_stage_matrix.resize(0, F);
  inst.first_stage_rhs.resize(0);
  inst.integrality.assign(F, true);
  inst.x_lower = Eigen::VectorXd::Zero(F);
  inst.x_upper = Eigen::VectorXd::Ones(F);

  std::vector<Eigen::Triplet<double>> w, t, h;
  // capacity rows: sum_j y_ij <= u_i x_i
  for (int i = 0; i < F; ++i) {
    for (int j = 0; j < C; ++j) w.emplace_back(i, i * C + j, 1.0);
    t.emplace_back(i, i, -config.capacity[i]);
  }
  // demand rows: sum_i y_ij + alpha_j >= d_j
  for (int j = 0; j < C; ++j) {
    const int row = F + j;
    for (int i = 0; i < F; ++i) w.emplace_back(row, i * C + j, 1.0);
    if (config.with_shortfall) w.emplace_back(row, ny + j, 1.0);
    h.emplace_back(row, j, 1.0);
  }
  inst.recourse_matrix.resize(F + C, n2);
  inst.recourse_matrix.setFromTriplets(w.begin(), w.end());
  inst.recourse_senses.assign(F, RowSense::LessEqual);
  inst.recourse_senses.insert(inst.recourse_senses.end(), C,
                              RowSense::GreaterEqual);
  inst.recourse_cost.resize(n2);
  for (int i = 0; i < F; ++i)
    for (int j = 0; j < C; ++j)
      inst.recourse_cost[i * C + j] = config.transport_cost(i, j);
  if (config.with_shortfall)
    for (int j = 0; j < C; ++j) inst.recourse_cost[ny + j] = config.penalty[j];
  inst.h_const = Eigen::VectorXd::Zero(F + C);
  inst.h_xi.resize(F + C, C);
  inst.h_xi.setFromTriplets(h.begin(), h.end());
  inst.technology.resize(F + C, F);
  inst.technology.setFromTriplets(t.begin(), t.end());
  inst.complete_recourse = config.with_shortfall;
  inst.scenario_gen.dist = ScenarioGen::Dist::Uniform;
  inst.scenario_gen.mean = config.demand_mean;
  inst.scenario_gen.spread = config.demand_spread;
  inst.validate();
  return inst;
}

void CmndConfig::validate() const {
  const int A = static_cast<int>(arcs.size());
  const int L = static_cast<int>(commodities.size());
  if (num_nodes < 2 || A == 0 || L == 0)
    throw InvalidConfig("cmnd needs nodes, arcs and commodities");
  if (install_cost.size() != A || capacity.size() != A ||
      routing_cost.rows() != A || routing_cost.cols() != L)
    throw InvalidConfig("cmnd data dimensions inconsistent");
  if ((install_cost.array() <= 0).any() || (capacity.array() <= 0).any() ||
      (routing_cost.array() <= 0).any() || penalty <= 0)
    throw InvalidConfig("cmnd costs and capacities must be positive");
  for (const auto& a : arcs)
    if (a.from < 0 || a.from >= num_nodes || a.to < 0 || a.to >= num_nodes ||
        a.from == a.to)
      throw InvalidConfig("bad arc endpoints");
  // every commodity must have an origin->destination path
  std::vector<std::vector<int>> adj(num_nodes);
  for (const auto& a : arcs) adj[a.from].push_back(a.to);
  for (const auto& c : commodities) {
    if (c.origin == c.destination || c.origin < 0 ||
        c.origin >= num_nodes || c.destination < 0 ||
        c.destination >= num_nodes)
      throw InvalidConfig("bad commodity endpoints");
    if (c.mean_demand <= 0) throw InvalidConfig("nonpositive mean demand");
    std::vector<bool> seen(num_nodes, false);
    std::queue<int> q;
    q.push(c.origin);
    seen[c.origin] = true;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj[u])
        if (!seen[v]) {
          seen[v] = true;
          q.push(v);
        }
    }
    if (!seen[c.destination]) throw InvalidConfig("disconnected commodity");
  }
}

CoreInstance build_cmnd(const CmndConfig& config) {
  config.validate();
  const int N = config.num_nodes;
  const int A = static_cast<int>(config.arcs.size());
  const int L = static_cast<int>(config.commodities.size());
  const int ny = A * L;  // column (l, a) at l*A + a
  const int n2 = ny + L;
  const int mb = N * L;  // balance row (l, i) at l*N + i

  CoreInstance inst;
  inst.family = "cmnd";
  inst.name = "cmnd_n" + std::to_string(N) + "_a" + std::to_string(A) + "_k" +
              std::to_string(L) + "_r" + std::to_string(config.cost_ratio_tag) +
              "_s" + std::to_string(config.seed);
  inst.first_stage_cost = config.install_cost;
  inst.first_stage_matrix.resize(0, A);
  inst.first_stage_rhs.resize(0);
  inst.integrality.assign(A, true);
  inst.x_lower = Eigen::VectorXd::Zero(A);
  inst.x_upper = Eigen::VectorXd::Ones(A);

  std::vector<Eigen::Triplet<double>> w, t, h;
  for (int l = 0; l < L; ++l) {
    const auto& com = config.commodities[l];
    for (int a = 0; a < A; ++a) {
      const auto& arc = config.arcs[a];
      w.emplace_back(l * N + arc.from, l * A + a, 1.0);
      w.emplace_back(l * N + arc.to, l * A + a, -1.0);
    }
    // shortfall enters the balance rows through g_i = +-1
    w.emplace_back(l * N + com.origin, ny + l, 1.0);
    w.emplace_back(l * N + com.destination, ny + l, -1.0);
    h.emplace_back(l * N + com.origin, l, 1.0);
    h.emplace_back(l * N + com.destination, l, -1.0);
  }
  for (int a = 0; a < A; ++a) {
    const int row = mb + a;
    for (int l = 0; l < L; ++l) w.emplace_back(row, l * A + a, 1.0);
    t.emplace_back(row, a, -config.capacity[a]);
  }
  inst.recourse_matrix.resize(mb + A, n2);
  inst.recourse_matrix.setFromTriplets(w.begin(), w.end());
  inst.recourse_senses.assign(mb, RowSense::Equal);
  inst.recourse_senses.insert(inst.recourse_senses.end(), A,
                              RowSense::LessEqual);
  inst.recourse_cost.resize(n2);
  for (int l = 0; l < L; ++l)
    for (int a = 0; a < A; ++a)
      inst.recourse_cost[l * A + a] = config.routing_cost(a, l);
  for (int l = 0; l < L; ++l) inst.recourse_cost[ny + l] = config.penalty;
  inst.h_const = Eigen::VectorXd::Zero(mb + A);
  inst.h_xi.resize(mb + A, L);
  inst.h_xi.setFromTriplets(h.begin(), h.end());
  inst.technology.resize(mb + A, A);
  inst.technology.setFromTriplets(t.begin(), t.end());
  inst.complete_recourse = true;
  inst.scenario_gen.dist = ScenarioGen::Dist::Normal;
  inst.scenario_gen.mean.resize(L);
  for (int l = 0; l < L; ++l)
    inst.scenario_gen.mean[l] = config.commodities[l].mean_demand;
  inst.scenario_gen.spread = config.demand_cv;
  inst.validate();
  return inst;
}

CflpConfig random_cflp_config(int facilities, int customers, uint64_t seed,
                              double capacity_ratio, bool with_shortfall) {
  if (facilities <= 0 || customers <= 0)
    throw InvalidConfig("cflp sizes must be positive");
  if (capacity_ratio < 1.2)
    throw InvalidConfig("capacity ratio below feasibility margin");
  SplitMix64 rng(seed);
  CflpConfig c;
  c.num_facilities = facilities;
  c.num_customers = customers;
  c.seed = seed;
  c.with_shortfall = with_shortfall;
  c.demand_mean.resize(customers);
  for (int j = 0; j < customers; ++j) c.demand_mean[j] = rng.uniform(5.0, 35.0);

  // random sites on the unit square, transport cost = 10 * distance
  std::vector<std::pair<double, double>> fg(facilities), cu(customers);
  for (auto& p : fg) p = {rng.uniform01(), rng.uniform01()};
  for (auto& p : cu) p = {rng.uniform01(), rng.uniform01()};
  c.transport_cost.resize(facilities, customers);
  for (int i = 0; i < facilities; ++i)
    for (int j = 0; j < customers; ++j) {
      const double dx = fg[i].first - cu[j].first;
      const double dy = fg[i].second - cu[j].second;
      c.transport_cost(i, j) = std::max(0.5, 10.0 * std::hypot(dx, dy));
    }

  Eigen::VectorXd raw(facilities);
  for (int i = 0; i < facilities; ++i) raw[i] = rng.uniform(0.5, 1.5);
  const double target = capacity_ratio * c.demand_mean.sum();
  c.capacity = raw * (target / raw.sum());
  c.setup_cost.resize(facilities);
  for (int i = 0; i < facilities; ++i)
    c.setup_cost[i] =
        rng.uniform(100.0, 110.0) * std::sqrt(c.capacity[i]) +
        rng.uniform(0.0, 90.0);
  if (with_shortfall) {
    c.penalty.resize(customers);
    for (int j = 0; j < customers; ++j)
      c.penalty[j] = c.transport_cost.col(j).maxCoeff() * rng.uniform(1.5, 2.5);
  }
  return c;
}

CmndConfig random_cmnd_config(int nodes, int arcs, int commodities,
                              uint64_t seed, int cost_ratio_tag) {
  if (nodes < 2) throw InvalidConfig("cmnd needs at least two nodes");
  if (arcs < nodes) throw InvalidConfig("need arcs >= nodes for connectivity");
  if (arcs > nodes * (nodes - 1)) throw InvalidConfig("too many arcs requested");
  if (commodities <= 0) throw InvalidConfig("need at least one commodity");
  if (cost_ratio_tag < 1 || cost_ratio_tag > 3)
    throw InvalidConfig("cost ratio tag must be 1, 2 or 3");
  SplitMix64 rng(seed);
  CmndConfig c;
  c.num_nodes = nodes;
  c.seed = seed;
  c.cost_ratio_tag = cost_ratio_tag;

  // a directed cycle keeps the digraph strongly connected, then extras
  std::vector<std::vector<bool>> present(nodes, std::vector<bool>(nodes, false));
  for (int i = 0; i < nodes; ++i) {
    const int j = (i + 1) % nodes;
    c.arcs.push_back({i, j});
    present[i][j] = true;
  }
  while (static_cast<int>(c.arcs.size()) < arcs) {
    const int i = static_cast<int>(rng.uniform_int(nodes));
    const int j = static_cast<int>(rng.uniform_int(nodes));
    if (i == j || present[i][j]) continue;
    c.arcs.push_back({i, j});
    present[i][j] = true;
  }

  for (int l = 0; l < commodities; ++l) {
    CmndCommodity com;
    com.origin = static_cast<int>(rng.uniform_int(nodes));
    do {
      com.destination = static_cast<int>(rng.uniform_int(nodes));
    } while (com.destination == com.origin);
    com.mean_demand = rng.uniform(5.0, 20.0);
    c.commodities.push_back(com);
  }

  const int A = arcs;
  double total_demand = 0.0;
  for (const auto& com : c.commodities) total_demand += com.mean_demand;
  c.capacity.resize(A);
  c.routing_cost.resize(A, commodities);
  Eigen::VectorXd base(A);
  for (int a = 0; a < A; ++a) {
    base[a] = rng.uniform(2.0, 10.0);
    c.capacity[a] = rng.uniform(0.5, 1.2) * total_demand;
    for (int l = 0; l < commodities; ++l)
      c.routing_cost(a, l) = base[a] * rng.uniform(0.8, 1.2);
  }
  const double ratio_mult[3] = {2.5, 5.0, 10.0};
  c.install_cost.resize(A);
  for (int a = 0; a < A; ++a)
    c.install_cost[a] = ratio_mult[cost_ratio_tag - 1] * base[a] *
                        (total_demand / A) * rng.uniform(0.8, 1.2);
  c.penalty = 20.0 * c.routing_cost.maxCoeff();
  return c;
}

ScenarioSet sample_scenarios(const ScenarioGen& gen, int count, uint64_t seed) {
  if (count < 1) throw InvalidConfig("scenario count must be >= 1");
  SplitMix64 rng(seed);
  ScenarioSet set;
  set.scenarios.reserve(count);
  const double p = 1.0 / count;
  for (int k = 0; k < count; ++k) {
    Scenario s;
    s.id = k;
    s.probability = p;
    s.xi.resize(gen.dim());
    for (int j = 0; j < gen.dim(); ++j) {
      const double mu = gen.mean[j];
      double v;
      if (gen.dist == ScenarioGen::Dist::Uniform)
        v = mu * (1.0 + gen.spread * (2.0 * rng.uniform01() - 1.0));
      else
        v = mu + gen.spread * mu * rng.normal();
      s.xi[j] = std::max(0.0, v);
    }
    set.scenarios.push_back(std::move(s));
  }
  return set;
}

LpModel deterministic_equivalent(const CoreInstance& instance,
                                 const ScenarioSet& scenarios,
                                 std::vector<bool>* integrality_out,
                                 std::size_t variable_cap) {
  instance.validate();
  const int n1 = instance.first_stage_dim();
  const int n2 = instance.recourse_cols();
  const int m1 = static_cast<int>(instance.first_stage_matrix.rows());
  const int m2 = instance.recourse_rows();
  const int K = scenarios.size();
  const std::size_t cols = static_cast<std::size_t>(n1) +
                           static_cast<std::size_t>(n2) * K;
  if (cols > variable_cap)
    throw SizeLimit("deterministic equivalent exceeds the variable cap");

  LpModel lp;
  lp.objective.resize(static_cast<int>(cols));
  lp.objective.head(n1) = instance.first_stage_cost;
  for (int k = 0; k < K; ++k)
    lp.objective.segment(n1 + k * n2, n2) =
        scenarios[k].probability * instance.recourse_cost;

  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(instance.first_stage_matrix.nonZeros() +
               K * (instance.recourse_matrix.nonZeros() +
                    instance.technology.nonZeros()));
  for (int r = 0; r < m1; ++r)
    for (SparseRowMatrix::InnerIterator it(instance.first_stage_matrix, r); it;
         ++it)
      trip.emplace_back(r, static_cast<int>(it.col()), it.value());
  for (int k = 0; k < K; ++k) {
    const int row0 = m1 + k * m2;
    for (int r = 0; r < m2; ++r) {
      for (SparseRowMatrix::InnerIterator it(instance.technology, r); it; ++it)
        trip.emplace_back(row0 + r, static_cast<int>(it.col()), it.value());
      for (SparseRowMatrix::InnerIterator it(instance.recourse_matrix, r); it;
           ++it)
        trip.emplace_back(row0 + r, n1 + k * n2 + static_cast<int>(it.col()),
                          it.value());
    }
  }
  lp.matrix.resize(m1 + K * m2, static_cast<int>(cols));
  lp.matrix.setFromTriplets(trip.begin(), trip.end());

  lp.row_senses = instance.first_stage_senses;
  lp.rhs.resize(m1 + K * m2);
  lp.rhs.head(m1) = instance.first_stage_rhs;
  for (int k = 0; k < K; ++k) {
    lp.row_senses.insert(lp.row_senses.end(), instance.recourse_senses.begin(),
                         instance.recourse_senses.end());
    lp.rhs.segment(m1 + k * m2, m2) = instance.scenario_h(scenarios[k].xi);
  }
  lp.lower.resize(static_cast<int>(cols));
  lp.upper.resize(static_cast<int>(cols));
  lp.lower.head(n1) = instance.x_lower;
  lp.upper.head(n1) = instance.x_upper;
  lp.lower.tail(static_cast<int>(cols) - n1).setZero();
  lp.upper.tail(static_cast<int>(cols) - n1).setConstant(kInf);

  if (integrality_out != nullptr) {
    integrality_out->assign(cols, false);
    for (int j = 0; j < n1; ++j) (*integrality_out)[j] = instance.integrality[j];
  }
  return lp;
}

// ---- text formats ----------------------------------------------------------

namespace {

void write_vector(std::ostream& os, const Eigen::VectorXd& v) {
  for (int i = 0; i < v.size(); ++i) os << ' ' << v[i];
  os << '\n';
}

Eigen::VectorXd read_vector(std::istream& is, int n) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i)
    if (!(is >> v[i])) throw IoError("truncated numeric vector");
  return v;
}

void write_sparse(std::ostream& os, const char* tag, const SparseRowMatrix& m) {
  os << tag << ' ' << m.rows() << ' ' << m.cols() << ' ' << m.nonZeros();
  for (int r = 0; r < m.outerSize(); ++r)
    for (SparseRowMatrix::InnerIterator it(m, r); it; ++it)
      os << ' ' << it.row() << ' ' << it.col() << ' ' << it.value();
  os << '\n';
}

SparseRowMatrix read_sparse(std::istream& is, const char* tag) {
  std::string word;
  if (!(is >> word) || word != tag) throw IoError("expected sparse block tag");
  int rows, cols;
  long nnz;
  if (!(is >> rows >> cols >> nnz)) throw IoError("bad sparse header");
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(nnz);
  for (long k = 0; k < nnz; ++k) {
    int r, c;
    double v;
    if (!(is >> r >> c >> v)) throw IoError("truncated sparse block");
    trip.emplace_back(r, c, v);
  }
  SparseRowMatrix m(rows, cols);
  m.setFromTriplets(trip.begin(), trip.end());
  return m;
}

void expect(std::istream& is, const std::string& token) {
  std::string word;
  if (!(is >> word) || word != token)
    throw IoError("expected token '" + token + "'");
}

}  // namespace

void write_instance(std::ostream& os, const CoreInstance& inst) {
  os << std::setprecision(17);
  os << "SPINST v1 " << inst.family << '\n';
  os << "name " << inst.name << '\n';
  os << "FIRSTSTAGE\n";
  const int n1 = inst.first_stage_dim();
  os << "vars " << n1 << '\n';
  os << "cost";
  write_vector(os, inst.first_stage_cost);
  os << "integrality";
  for (bool b : inst.integrality) os << ' ' << (b ? 1 : 0);
  os << '\n';
  os << "lower";
  write_vector(os, inst.x_lower);
  os << "upper";
  write_vector(os, inst.x_upper);
  os << "rows " << inst.first_stage_matrix.rows() << '\n';
  os << "senses";
  for (RowSense s : inst.first_stage_senses) os << ' ' << sense_char(s);
  os << '\n';
  os << "rhs";
  write_vector(os, inst.first_stage_rhs);
  write_sparse(os, "mat", inst.first_stage_matrix);
  os << "RECOURSE\n";
  os << "vars " << inst.recourse_cols() << '\n';
  os << "rows " << inst.recourse_rows() << '\n';
  os << "complete_recourse " << (inst.complete_recourse ? 1 : 0) << '\n';
  os << "cost";
  write_vector(os, inst.recourse_cost);
  os << "senses";
  for (RowSense s : inst.recourse_senses) os << ' ' << sense_char(s);
  os << '\n';
  write_sparse(os, "w", inst.recourse_matrix);
  os << "hconst";
  write_vector(os, inst.h_const);
  write_sparse(os, "hxi", inst.h_xi);
  write_sparse(os, "tech", inst.technology);
  os << "SCENARIOGEN\n";
  os << "dist "
     << (inst.scenario_gen.dist == ScenarioGen::Dist::Uniform ? "uniform"
                                                              : "normal")
     << '\n';
  os << "dim " << inst.scenario_gen.dim() << '\n';
  os << "mean";
  write_vector(os, inst.scenario_gen.mean);
  os << "spread " << inst.scenario_gen.spread << '\n';
  os << "END\n";
}

CoreInstance read_instance(std::istream& is) {
  CoreInstance inst;
  std::string word;
  expect(is, "SPINST");
  expect(is, "v1");
  if (!(is >> inst.family)) throw IoError("missing family");
  expect(is, "name");
  if (!(is >> inst.name)) throw IoError("missing name");
  expect(is, "FIRSTSTAGE");
  expect(is, "vars");
  int n1;
  is >> n1;
  expect(is, "cost");
  inst.first_stage_cost = read_vector(is, n1);
  expect(is, "integrality");
  inst.integrality.resize(n1);
  for (int j = 0; j < n1; ++j) {
    int b;
    is >> b;
    inst.integrality[j] = b != 0;
  }
  expect(is, "lower");
  inst.x_lower = read_vector(is, n1);
  expect(is, "upper");
  inst.x_upper = read_vector(is, n1);
  expect(is, "rows");
  int m1;
  is >> m1;
  expect(is, "senses");
  inst.first_stage_senses.resize(m1);
  for (int i = 0; i < m1; ++i) {
    char c;
    is >> c;
    inst.first_stage_senses[i] = sense_from_char(c);
  }
  expect(is, "rhs");
  inst.first_stage_rhs = read_vector(is, m1);
  inst.first_stage_matrix = read_sparse(is, "mat");
  expect(is, "RECOURSE");
  expect(is, "vars");
  int n2;
  is >> n2;
  expect(is, "rows");
  int m2;
  is >> m2;
  expect(is, "complete_recourse");
  int cr;
  is >> cr;
  inst.complete_recourse = cr != 0;
  expect(is, "cost");
  inst.recourse_cost = read_vector(is, n2);
  expect(is, "senses");
  inst.recourse_senses.resize(m2);
  for (int i = 0; i < m2; ++i) {
    char c;
    is >> c;
    inst.recourse_senses[i] = sense_from_char(c);
  }
  inst.recourse_matrix = read_sparse(is, "w");
  expect(is, "hconst");
  inst.h_const = read_vector(is, m2);
  inst.h_xi = read_sparse(is, "hxi");
  inst.technology = read_sparse(is, "tech");
  expect(is, "SCENARIOGEN");
  expect(is, "dist");
  is >> word;
  inst.scenario_gen.dist = word == "uniform" ? ScenarioGen::Dist::Uniform
                                             : ScenarioGen::Dist::Normal;
  expect(is, "dim");
  int d;
  is >> d;
  expect(is, "mean");
  inst.scenario_gen.mean = read_vector(is, d);
  expect(is, "spread");
  is >> inst.scenario_gen.spread;
  expect(is, "END");
  inst.validate();
  return inst;
}

void write_scenarios(std::ostream& os, const ScenarioSet& set, uint64_t seed) {
  os << std::setprecision(17);
  os << "SCEN v1\n";
  os << "seed " << seed << '\n';
  os << "K " << set.size() << '\n';
  os << "dim " << (set.size() > 0 ? set[0].xi.size() : 0) << '\n';
  for (const Scenario& s : set.scenarios) {
    os << "scen " << s.id << ' ' << s.probability;
    write_vector(os, s.xi);
  }
  os << "END\n";
}

ScenarioSet read_scenarios(std::istream& is, uint64_t* seed_out) {
  expect(is, "SCEN");
  expect(is, "v1");
  expect(is, "seed");
  uint64_t seed;
  is >> seed;
  if (seed_out != nullptr) *seed_out = seed;
  expect(is, "K");
  int k;
  is >> k;
  expect(is, "dim");
  int d;
  is >> d;
  ScenarioSet set;
  for (int i = 0; i < k; ++i) {
    expect(is, "scen");
    Scenario s;
    if (!(is >> s.id >> s.probability)) throw IoError("bad scenario record");
    s.xi = read_vector(is, d);
    set.scenarios.push_back(std::move(s));
  }
  expect(is, "END");
  return set;
}

void save_instance_file(const std::string& path, const CoreInstance& inst) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  write_instance(os, inst);
  if (!os) throw IoError("write failed for '" + path + "'");
}

CoreInstance load_instance_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open '" + path + "'");
  return read_instance(is);
}

}  // namespace benders

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "benders/common.hpp"
#include "benders/lp.hpp"

namespace benders {

// Demand sampling spec. Uniform draws each component from
// [mean*(1-spread), mean*(1+spread)]; Normal draws from
// N(mean, (spread*mean)^2) truncated at zero.
struct ScenarioGen {
  enum class Dist : char { Uniform = 'u', Normal = 'n' };
  Dist dist = Dist::Uniform;
  Eigen::VectorXd mean;
  double spread = 0.2;

  int dim() const { return static_cast<int>(mean.size()); }
};

struct Scenario {
  int id = 0;
  Eigen::VectorXd xi;  // realized demand vector
  double probability = 1.0;
};

struct ScenarioSet {
  std::vector<Scenario> scenarios;

  int size() const { return static_cast<int>(scenarios.size()); }
  const Scenario& operator[](int k) const { return scenarios[k]; }
};

// Fixed data of a two-stage problem shared by all scenarios. The recourse
// right-hand side is affine in the demand vector: h(xi) = h_const + h_xi*xi;
// the technology matrix is scenario independent.
struct CoreInstance {
  std::string name;
  std::string family;  // "cflp" | "cmnd"

  Eigen::VectorXd first_stage_cost;
  SparseRowMatrix first_stage_matrix;        // may have zero rows
  std::vector<RowSense> first_stage_senses;
  Eigen::VectorXd first_stage_rhs;
  std::vector<bool> integrality;
  Eigen::VectorXd x_lower, x_upper;

  SparseRowMatrix recourse_matrix;  // W
  std::vector<RowSense> recourse_senses;
  Eigen::VectorXd recourse_cost;  // q
  Eigen::VectorXd h_const;
  SparseRowMatrix h_xi;        // recourse rows x demand dim
  SparseRowMatrix technology;  // T, recourse rows x first-stage dim
  bool complete_recourse = true;

  ScenarioGen scenario_gen;

  int first_stage_dim() const {
    return static_cast<int>(first_stage_cost.size());
  }
  int recourse_rows() const {
    return static_cast<int>(recourse_matrix.rows());
  }
  int recourse_cols() const {
    return static_cast<int>(recourse_matrix.cols());
  }
  int xi_dim() const { return static_cast<int>(h_xi.cols()); }

  Eigen::VectorXd scenario_h(const Eigen::VectorXd& xi) const {
    return h_const + h_xi * xi;
  }
  // h(xi) - T x, the subproblem right-hand side at first-stage decision x.
  Eigen::VectorXd subproblem_rhs(const Eigen::VectorXd& xi,
                                 const Eigen::VectorXd& x) const {
    return scenario_h(xi) - technology * x;
  }
  // The scenario subproblem as an LP in the recourse variables.
  LpModel subproblem_model(const Eigen::VectorXd& rhs) const;

  void validate() const;
};

struct CflpConfig {
  int num_facilities = 0;
  int num_customers = 0;
  Eigen::VectorXd setup_cost;      // f_i
  Eigen::VectorXd capacity;        // u_i
  Eigen::MatrixXd transport_cost;  // c_ij, facilities x customers
  Eigen::VectorXd penalty;         // lost-sale cost per customer
  Eigen::VectorXd demand_mean;
  double demand_spread = 0.2;
  bool with_shortfall = true;  // false drops the lost-sale columns
  uint64_t seed = 0;

  void validate() const;
};

struct CmndArc {
  int from = 0;
  int to = 0;
};

struct CmndCommodity {
  int origin = 0;
  int destination = 0;
  double mean_demand = 0.0;
};

struct CmndConfig {
  int num_nodes = 0;
  std::vector<CmndArc> arcs;
  std::vector<CmndCommodity> commodities;
  Eigen::VectorXd install_cost;   // f per arc
  Eigen::VectorXd capacity;       // u per arc
  Eigen::MatrixXd routing_cost;   // arcs x commodities
  double penalty = 0.0;           // per unit of unmet demand
  double demand_cv = 0.1;
  int cost_ratio_tag = 1;  // 1..3, fixed-to-variable cost ratio family
  uint64_t seed = 0;

  void validate() const;
};

CoreInstance build_cflp(const CflpConfig& config);
CoreInstance build_cmnd(const CmndConfig& config);

// Synthetic base data with the structure of the published benchmark
// families. capacity_ratio scales total capacity relative to expected
// total demand.
CflpConfig random_cflp_config(int facilities, int customers, uint64_t seed,
                              double capacity_ratio = 2.0,
                              bool with_shortfall = true);
CmndConfig random_cmnd_config(int nodes, int arcs, int commodities,
                              uint64_t seed, int cost_ratio_tag = 1);

// Pure function of (gen, K, seed); equal probabilities 1/K.
ScenarioSet sample_scenarios(const ScenarioGen& gen, int count, uint64_t seed);

// Flattens instance + scenarios into one LP (plus the integrality mask over
// the first-stage block). Used as the correctness oracle for the
// decomposition. Throws SizeLimit beyond variable_cap columns.
LpModel deterministic_equivalent(const CoreInstance& instance,
                                 const ScenarioSet& scenarios,
                                 std::vector<bool>* integrality_out = nullptr,
                                 std::size_t variable_cap = 1'000'000);

// ---- text formats ----------------------------------------------------------

void write_instance(std::ostream& os, const CoreInstance& instance);
CoreInstance read_instance(std::istream& is);
void write_scenarios(std::ostream& os, const ScenarioSet& set, uint64_t seed);
ScenarioSet read_scenarios(std::istream& is, uint64_t* seed_out = nullptr);

void save_instance_file(const std::string& path, const CoreInstance& inst);
CoreInstance load_instance_file(const std::string& path);

}  // namespace benders

#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <cstdint>
#include <optional>
#include <vector>

#include "benders/common.hpp"

namespace benders {

enum class RowSense : char { LessEqual = 'L', Equal = 'E', GreaterEqual = 'G' };
enum class ObjSense : char { Minimize = 'm', Maximize = 'M' };
enum class SolveStatus { Optimal, Infeasible, Unbounded };

using SparseRowMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

// A linear program
//   min/max  objective' * x
//   s.t.     matrix * x  (<= | = | >=)  rhs      row-wise
//            lower <= x <= upper                 (+-inf permitted)
struct LpModel {
  ObjSense objective_sense = ObjSense::Minimize;
  Eigen::VectorXd objective;
  SparseRowMatrix matrix;
  std::vector<RowSense> row_senses;
  Eigen::VectorXd rhs;
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;

  int num_rows() const { return static_cast<int>(matrix.rows()); }
  int num_cols() const { return static_cast<int>(matrix.cols()); }

  // Throws DimensionMismatch on inconsistent sizes or non-finite data.
  void validate() const;

  // Appends one row; used when growing a cut registry into the model.
  void add_row(const Eigen::SparseVector<double>& coeffs, RowSense sense,
               double rhs_value);
};

// Variable status in a basis. Columns are indexed structural-first, then one
// logical (slack) column per row: column n + i belongs to row i.
enum class VarState : uint8_t { Basic, AtLower, AtUpper, FreeZero };

struct Basis {
  std::vector<VarState> state;  // size = num_cols + num_rows

  bool empty() const { return state.empty(); }
  int size() const { return static_cast<int>(state.size()); }

  std::vector<int> basic_indices() const {
    std::vector<int> idx;
    for (int j = 0; j < size(); ++j)
      if (state[j] == VarState::Basic) idx.push_back(j);
    return idx;
  }
};

struct LpSolution {
  SolveStatus status = SolveStatus::Optimal;
  Eigen::VectorXd primal;  // structural variable values
  Eigen::VectorXd dual;    // one multiplier per row
  double objective_value = 0.0;
  Basis basis;
  // Present iff Infeasible. For a model whose variables have zero lower
  // bounds and no finite uppers (the recourse subproblem shape), the ray r
  // satisfies A' r <= 0 and r' rhs > 0.
  std::optional<Eigen::VectorXd> farkas_ray;
  long pivots = 0;
};

struct SimplexOptions {
  double feas_tol = 1e-8;
  double opt_tol = 1e-9;
  double pivot_tol = 1e-11;
  int refactor_every = 100;
  long degenerate_limit = 1000;  // pivots before Bland's rule kicks in
  long max_pivots = 2'000'000;
};

// Solver contract. Every consumer goes through this interface so the
// reference kernel can be swapped for an external solver.
class LpSolverInterface {
 public:
  virtual ~LpSolverInterface() = default;

  virtual LpSolution solve(const LpModel& model,
                           const Basis* warm_basis = nullptr) = 0;

  // Re-optimizes after a right-hand-side change, continuing from
  // prior_basis with the dual simplex. Throws StaleBasis if the basis is
  // singular for the matrix.
  virtual LpSolution reoptimize_rhs(const LpModel& model,
                                    const Eigen::VectorXd& new_rhs,
                                    const Basis& prior_basis) = 0;
};

// Reference kernel: bounded-variable revised simplex. Two-phase for cold
// starts, dual simplex continuation for warm starts and rhs changes.
// Dense LU of the basis with product-form updates, refactorized
// periodically. Deterministic: identical inputs give identical outputs.
class SimplexSolver final : public LpSolverInterface {
 public:
  SimplexSolver() = default;
  explicit SimplexSolver(const SimplexOptions& opts) : opts_(opts) {}

  LpSolution solve(const LpModel& model,
                   const Basis* warm_basis = nullptr) override;

  LpSolution reoptimize_rhs(const LpModel& model,
                            const Eigen::VectorXd& new_rhs,
                            const Basis& prior_basis) override;

  const SimplexOptions& options() const { return opts_; }

 private:
  SimplexOptions opts_;
};

}  // namespace benders

#include "benders/lp.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace benders {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool finite(double v) { return std::isfinite(v); }

}  // namespace

void LpModel::validate() const {
  const int m = num_rows();
  const int n = num_cols();
  if (objective.size() != n || lower.size() != n || upper.size() != n)
    throw DimensionMismatch("objective/bounds length != column count");
  if (rhs.size() != m || static_cast<int>(row_senses.size()) != m)
    throw DimensionMismatch("rhs/senses length != row count");
  for (int j = 0; j < n; ++j) {
    if (!finite(objective[j]))
      throw DimensionMismatch("non-finite objective coefficient");
    if (std::isnan(lower[j]) || std::isnan(upper[j]))
      throw DimensionMismatch("NaN variable bound");
    if (lower[j] > upper[j] + 1e-12)
      throw DimensionMismatch("crossed variable bounds");
  }
  for (int i = 0; i < m; ++i)
    if (!finite(rhs[i])) throw DimensionMismatch("non-finite rhs");
  for (int k = 0; k < matrix.outerSize(); ++k)
    for (SparseRowMatrix::InnerIterator it(matrix, k); it; ++it)
      if (!finite(it.value()))
        throw DimensionMismatch("non-finite matrix coefficient");
}

void LpModel::add_row(const Eigen::SparseVector<double>& coeffs, RowSense sense,
                      double rhs_value) {
  const int m = num_rows();
  const int n = num_cols();
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(matrix.nonZeros() + coeffs.nonZeros());
  for (int k = 0; k < matrix.outerSize(); ++k)
    for (SparseRowMatrix::InnerIterator it(matrix, k); it; ++it)
      trip.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()),
                        it.value());
  for (Eigen::SparseVector<double>::InnerIterator it(coeffs); it; ++it)
    trip.emplace_back(m, static_cast<int>(it.index()), it.value());
  SparseRowMatrix grown(m + 1, n);
  grown.setFromTriplets(trip.begin(), trip.end());
  matrix.swap(grown);
  row_senses.push_back(sense);
  rhs.conservativeResize(m + 1);
  rhs[m] = rhs_value;
}

namespace {

// Bounded-variable revised simplex over the augmented system
//   [A I] v = rhs,   lb <= v <= ub
// with one logical (slack) column per row. Slack bounds encode the row
// sense: <= gives [0,inf), = gives [0,0], >= gives (-inf,0]. Phase one uses
// disposable artificial unit columns. The basis inverse is a dense LU of
// the basic columns plus a product-form eta file, refactorized periodically.
class Simplex {
 public:
  Simplex(const LpModel& model, const Eigen::VectorXd& rhs,
          const SimplexOptions& opts)
      : opts_(opts),
        m_(model.num_rows()),
        n_(model.num_cols()),
        total_(n_ + m_),
        rhs_(rhs) {
    maximize_ = model.objective_sense == ObjSense::Maximize;
    cost_.assign(total_, 0.0);
    lb_.assign(total_, 0.0);
    ub_.assign(total_, 0.0);
    for (int j = 0; j < n_; ++j) {
      cost_[j] = maximize_ ? -model.objective[j] : model.objective[j];
      lb_[j] = model.lower[j];
      ub_[j] = model.upper[j];
    }
    for (int i = 0; i < m_; ++i) {
      switch (model.row_senses[i]) {
        case RowSense::LessEqual:
          lb_[n_ + i] = 0.0;
          ub_[n_ + i] = kInf;
          break;
        case RowSense::Equal:
          lb_[n_ + i] = 0.0;
          ub_[n_ + i] = 0.0;
          break;
        case RowSense::GreaterEqual:
          lb_[n_ + i] = -kInf;
          ub_[n_ + i] = 0.0;
          break;
      }
    }
    // Column-major copy of the structural part for fast column access.
    col_start_.assign(n_ + 1, 0);
    for (int k = 0; k < model.matrix.outerSize(); ++k)
      for (SparseRowMatrix::InnerIterator it(model.matrix, k); it; ++it)
        ++col_start_[it.col() + 1];
    for (int j = 0; j < n_; ++j) col_start_[j + 1] += col_start_[j];
    col_row_.resize(col_start_[n_]);
    col_val_.resize(col_start_[n_]);
    std::vector<int> fill(col_start_.begin(), col_start_.end() - 1);
    for (int k = 0; k < model.matrix.outerSize(); ++k)
      for (SparseRowMatrix::InnerIterator it(model.matrix, k); it; ++it) {
        const int j = static_cast<int>(it.col());
        col_row_[fill[j]] = static_cast<int>(it.row());
        col_val_[fill[j]] = it.value();
        ++fill[j];
      }
  }

  // ---- public driver -----------------------------------------------------

  // Cold start: phase one from an all-artificial basis, then phase two.
  LpSolution solve_cold() {
    state_.assign(total_, VarState::AtLower);
    for (int j = 0; j < total_; ++j) state_[j] = default_state(j);
    setup_artificial_basis();
    const LpSolution* infeasible = run_phase_one();
    if (infeasible) return result_;
    run_primal(/*phase_one=*/false);
    return finalize();
  }

  // Warm start from a caller basis. Returns false if the basis is unusable
  // (wrong size, wrong basic count, or singular).
  bool load_basis(const Basis& basis) {
    if (basis.size() != total_) return false;
    int basics = 0;
    for (const VarState s : basis.state)
      if (s == VarState::Basic) ++basics;
    if (basics != m_) return false;
    state_.assign(basis.state.begin(), basis.state.end());
    for (int j = 0; j < total_; ++j) {
      if (state_[j] == VarState::Basic) continue;
      state_[j] = coerce_nonbasic(j, state_[j]);
    }
    basic_.clear();
    pos_.assign(total_, -1);
    for (int j = 0; j < total_; ++j)
      if (state_[j] == VarState::Basic) {
        pos_[j] = static_cast<int>(basic_.size());
        basic_.push_back(j);
      }
    n_art_ = 0;
    return refactor(/*throw_on_singular=*/false);
  }

  LpSolution solve_warm() {
    recompute_basic_values();
    if (primal_infeasibility() <= feas_scale()) {
      run_primal(/*phase_one=*/false);
      return finalize();
    }
    if (dual_infeasibility() <= opts_.opt_tol * 10) {
      const bool feasible = run_dual();
      if (!feasible) {
        // Dual simplex proved infeasibility; rerun phase one cold so the
        // returned Farkas certificate always comes from one construction.
        return solve_cold();
      }
      run_primal(/*phase_one=*/false);
      return finalize();
    }
    return solve_cold();
  }

  // Fully determined, no simplex needed.
  LpSolution solve_empty_rows() {
    LpSolution out;
    out.primal.resize(n_);
    out.dual.resize(0);
    Basis b;
    b.state.assign(n_, VarState::AtLower);
    for (int j = 0; j < n_; ++j) {
      const double c = cost_[j];
      double v;
      if (c > 0) {
        if (!finite(lb_[j])) {
          out.status = SolveStatus::Unbounded;
          out.objective_value = maximize_ ? kInf : -kInf;
          return out;
        }
        v = lb_[j];
        b.state[j] = VarState::AtLower;
      } else if (c < 0) {
        if (!finite(ub_[j])) {
          out.status = SolveStatus::Unbounded;
          out.objective_value = maximize_ ? kInf : -kInf;
          return out;
        }
        v = ub_[j];
        b.state[j] = VarState::AtUpper;
      } else {
        if (finite(lb_[j])) {
          v = lb_[j];
          b.state[j] = VarState::AtLower;
        } else if (finite(ub_[j])) {
          v = ub_[j];
          b.state[j] = VarState::AtUpper;
        } else {
          v = 0.0;
          b.state[j] = VarState::FreeZero;
        }
      }
      out.primal[j] = v;
    }
    double obj = 0.0;
    for (int j = 0; j < n_; ++j) obj += cost_[j] * out.primal[j];
    out.objective_value = maximize_ ? -obj : obj;
    out.status = SolveStatus::Optimal;
    out.basis = std::move(b);
    return out;
  }

  long pivots() const { return pivot_count_; }

 private:
  // ---- columns -------------------------------------------------------------

  VarState default_state(int j) const {
    if (finite(lb_[j])) return VarState::AtLower;
    if (finite(ub_[j])) return VarState::AtUpper;
    return VarState::FreeZero;
  }

  VarState coerce_nonbasic(int j, VarState s) const {
    if (s == VarState::AtLower && !finite(lb_[j])) return default_state(j);
    if (s == VarState::AtUpper && !finite(ub_[j])) return default_state(j);
    if (s == VarState::FreeZero && finite(lb_[j]) && lb_[j] > 0.0)
      return default_state(j);
    if (s == VarState::FreeZero && finite(ub_[j]) && ub_[j] < 0.0)
      return default_state(j);
    return s;
  }

  double nonbasic_value(int j) const {
    switch (state_[j]) {
      case VarState::AtLower:
        return lb_[j];
      case VarState::AtUpper:
        return ub_[j];
      default:
        return 0.0;
    }
  }

  template <typename Fn>
  void for_column(int j, Fn&& fn) const {
    if (j < n_) {
      for (int k = col_start_[j]; k < col_start_[j + 1]; ++k)
        fn(col_row_[k], col_val_[k]);
    } else if (j < total_) {
      fn(j - n_, 1.0);
    } else {
      const int t = j - total_;
      fn(art_row_[t], art_sign_[t]);
    }
  }

  double column_dot(int j, const Eigen::VectorXd& y) const {
    double acc = 0.0;
    for_column(j, [&](int r, double v) { acc += v * y[r]; });
    return acc;
  }

  int column_count() const { return total_ + n_art_; }

  double var_cost(int j, bool phase_one) const {
    if (phase_one) return j >= total_ ? 1.0 : 0.0;
    return j < total_ ? cost_[j] : 0.0;
  }

  // ---- factorization -------------------------------------------------------

  bool refactor(bool throw_on_singular = true) {
    Eigen::MatrixXd b0 = Eigen::MatrixXd::Zero(m_, m_);
    for (int p = 0; p < m_; ++p)
      for_column(basic_[p], [&](int r, double v) { b0(r, p) = v; });
    lu_.compute(b0);
    const Eigen::VectorXd diag = lu_.matrixLU().diagonal().cwiseAbs();
    const double dmax = std::max(1.0, diag.maxCoeff());
    if (diag.minCoeff() <= opts_.pivot_tol * dmax) {
      if (throw_on_singular)
        throw NumericalBreakdown("singular basis during refactorization");
      return false;
    }
    etas_.clear();
    since_refactor_ = 0;
    return true;
  }

  Eigen::VectorXd ftran(const Eigen::VectorXd& v) const {
    Eigen::VectorXd z = lu_.solve(v);
    for (const auto& [r, w] : etas_) {
      const double t = z[r] / w[r];
      z -= t * w;
      z[r] = t;
    }
    return z;
  }

  Eigen::VectorXd btran(const Eigen::VectorXd& v) const {
    Eigen::VectorXd u = v;
    for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
      const auto& [r, w] = *it;
      double dot = 0.0;
      for (int i = 0; i < m_; ++i)
        if (i != r) dot += w[i] * u[i];
      u[r] = (u[r] - dot) / w[r];
    }
    const auto& lumat = lu_.matrixLU();
    Eigen::VectorXd y =
        lumat.triangularView<Eigen::Upper>().transpose().solve(u);
    lumat.triangularView<Eigen::UnitLower>().transpose().solveInPlace(y);
    return lu_.permutationP().transpose() * y;
  }

  Eigen::VectorXd dense_column(int j) const {
    Eigen::VectorXd col = Eigen::VectorXd::Zero(m_);
    for_column(j, [&](int r, double v) { col[r] = v; });
    return col;
  }

  void recompute_basic_values() {
    Eigen::VectorXd r = rhs_;
    for (int j = 0; j < column_count(); ++j) {
      if (state_[j] == VarState::Basic) continue;
      const double v = nonbasic_value(j);
      if (v != 0.0) for_column(j, [&](int row, double a) { r[row] -= a * v; });
    }
    xb_ = ftran(r);
  }

  double feas_scale() const {
    return opts_.feas_tol * (1.0 + rhs_.cwiseAbs().maxCoeff());
  }

  double primal_infeasibility() const {
    double worst = 0.0;
    for (int p = 0; p < m_; ++p) {
      const int j = basic_[p];
      worst = std::max(worst, lb_[j] - xb_[p]);
      worst = std::max(worst, xb_[p] - ub_[j]);
    }
    return worst;
  }

  Eigen::VectorXd duals(bool phase_one) const {
    Eigen::VectorXd cb(m_);
    for (int p = 0; p < m_; ++p) cb[p] = var_cost(basic_[p], phase_one);
    return btran(cb);
  }

  double dual_infeasibility() {
    const Eigen::VectorXd y = duals(false);
    double worst = 0.0;
    for (int j = 0; j < total_; ++j) {
      if (state_[j] == VarState::Basic) continue;
      if (lb_[j] == ub_[j]) continue;
      const double d = cost_[j] - column_dot(j, y);
      if (state_[j] == VarState::AtLower)
        worst = std::max(worst, -d);
      else if (state_[j] == VarState::AtUpper)
        worst = std::max(worst, d);
      else
        worst = std::max(worst, std::abs(d));
    }
    return worst;
  }

  // ---- phase one -----------------------------------------------------------

  void setup_artificial_basis() {
    Eigen::VectorXd r = rhs_;
    for (int j = 0; j < total_; ++j) {
      const double v = nonbasic_value(j);
      if (v != 0.0) for_column(j, [&](int row, double a) { r[row] -= a * v; });
    }
    n_art_ = m_;
    art_row_.resize(m_);
    art_sign_.resize(m_);
    basic_.resize(m_);
    state_.resize(total_ + m_);
    pos_.assign(total_ + m_, -1);
    for (int i = 0; i < m_; ++i) {
      art_row_[i] = i;
      art_sign_[i] = r[i] >= 0.0 ? 1.0 : -1.0;
      const int col = total_ + i;
      basic_[i] = col;
      state_[col] = VarState::Basic;
      pos_[col] = i;
    }
    lb_.resize(total_ + m_, 0.0);
    ub_.resize(total_ + m_, kInf);
    for (int i = 0; i < m_; ++i) {
      lb_[total_ + i] = 0.0;
      ub_[total_ + i] = kInf;
    }
    refactor();
    recompute_basic_values();
  }

  double artificial_mass() const {
    double s = 0.0;
    for (int p = 0; p < m_; ++p)
      if (basic_[p] >= total_) s += std::max(0.0, xb_[p]);
    for (int t = 0; t < n_art_; ++t)
      if (state_[total_ + t] != VarState::Basic)
        s += nonbasic_value(total_ + t);
    return s;
  }

  // Returns a pointer to result_ when the model is infeasible, else null.
  const LpSolution* run_phase_one() {
    run_primal(/*phase_one=*/true);
    if (artificial_mass() > feas_scale()) {
      result_ = LpSolution{};
      result_.status = SolveStatus::Infeasible;
      result_.objective_value = maximize_ ? -kInf : kInf;
      const Eigen::VectorXd ray = duals(/*phase_one=*/true);
      result_.dual = ray;
      result_.farkas_ray = ray;
      result_.primal.resize(0);
      result_.basis = export_basis();
      result_.pivots = pivot_count_;
      return &result_;
    }
    // Swap any leftover basic artificial with its row's own slack column;
    // both are unit columns on the same row so the basis stays nonsingular.
    bool swapped = false;
    for (int p = 0; p < m_; ++p) {
      if (basic_[p] < total_) continue;
      const int t = basic_[p] - total_;
      const int slack = n_ + art_row_[t];
      if (state_[slack] == VarState::Basic)
        throw NumericalBreakdown("slack and artificial basic on one row");
      pos_[basic_[p]] = -1;
      basic_[p] = slack;
      state_[slack] = VarState::Basic;
      pos_[slack] = p;
      swapped = true;
    }
    n_art_ = 0;
    state_.resize(total_);
    pos_.resize(total_);
    lb_.resize(total_);
    ub_.resize(total_);
    if (swapped || !etas_.empty()) refactor();
    recompute_basic_values();
    return nullptr;
  }

  // ---- primal simplex --------------------------------------------------------

  void run_primal(bool phase_one) {
    long degenerate_run = 0;
    bool bland = false;
    for (;;) {
      if (++loop_guard_ > opts_.max_pivots)
        throw NumericalBreakdown("pivot limit exceeded");
      if (since_refactor_ >= opts_.refactor_every) {
        refactor();
        recompute_basic_values();
      }
      if (phase_one && artificial_mass() <= feas_scale()) return;

      const Eigen::VectorXd y = duals(phase_one);
      int enter = -1;
      double best = opts_.opt_tol;
      int direction = +1;
      const int cols = column_count();
      for (int j = 0; j < cols; ++j) {
        if (state_[j] == VarState::Basic) continue;
        if (j >= total_) continue;  // artificials never re-enter
        if (lb_[j] == ub_[j]) continue;
        const double d = var_cost(j, phase_one) - column_dot(j, y);
        double score = 0.0;
        int dir = 0;
        if (state_[j] == VarState::AtLower) {
          if (d < -opts_.opt_tol) {
            score = -d;
            dir = +1;
          }
        } else if (state_[j] == VarState::AtUpper) {
          if (d > opts_.opt_tol) {
            score = d;
            dir = -1;
          }
        } else {  // FreeZero
          if (std::abs(d) > opts_.opt_tol) {
            score = std::abs(d);
            dir = d < 0 ? +1 : -1;
          }
        }
        if (dir == 0) continue;
        if (bland) {
          enter = j;
          direction = dir;
          break;
        }
        if (score > best) {
          best = score;
          enter = j;
          direction = dir;
        }
      }
      if (enter < 0) return;  // optimal for this phase

      const Eigen::VectorXd w = ftran(dense_column(enter));

      // Ratio test: first limit among the entering variable's own opposite
      // bound and every basic variable's nearest bound.
      double t_limit = kInf;
      int leave_pos = -1;
      double leave_pivot = 0.0;
      bool leave_to_upper = false;
      const double span = ub_[enter] - lb_[enter];
      if (finite(span)) t_limit = span;
      for (int p = 0; p < m_; ++p) {
        const double rate = -direction * w[p];
        if (std::abs(rate) <= opts_.pivot_tol) continue;
        const int bj = basic_[p];
        double t;
        bool to_upper;
        if (rate > 0) {
          if (!finite(ub_[bj])) continue;
          t = (ub_[bj] - xb_[p]) / rate;
          to_upper = true;
        } else {
          if (!finite(lb_[bj])) continue;
          t = (lb_[bj] - xb_[p]) / rate;
          to_upper = false;
        }
        if (t < 0) t = 0;  // already at/over the bound: degenerate step
        if (t < t_limit - 1e-12 ||
            (t < t_limit + 1e-12 &&
             (leave_pos < 0 || std::abs(w[p]) > std::abs(leave_pivot)))) {
          t_limit = t;
          leave_pos = p;
          leave_pivot = w[p];
          leave_to_upper = to_upper;
        }
      }

      if (!finite(t_limit)) {
        if (phase_one)
          throw NumericalBreakdown("unbounded phase-one objective");
        result_ = LpSolution{};
        result_.status = SolveStatus::Unbounded;
        result_.objective_value = maximize_ ? kInf : -kInf;
        result_.basis = export_basis();
        result_.pivots = pivot_count_;
        unbounded_ = true;
        return;
      }

      if (t_limit <= 1e-12)
        ++degenerate_run;
      else
        degenerate_run = 0;
      if (degenerate_run > opts_.degenerate_limit) bland = true;
      if (bland && degenerate_run == 0) bland = false;

      if (leave_pos < 0) {
        // Bound flip: entering variable crosses to its other bound.
        xb_ -= direction * t_limit * w;
        state_[enter] = state_[enter] == VarState::AtUpper ? VarState::AtLower
                                                           : VarState::AtUpper;
        continue;
      }
      if (std::abs(leave_pivot) < opts_.pivot_tol) {
        if (!bland) {
          bland = true;
          continue;
        }
        throw NumericalBreakdown("pivot below tolerance with no alternative");
      }
      pivot(enter, direction, t_limit, leave_pos, leave_to_upper, w);
    }
  }

  void pivot(int enter, int direction, double step, int leave_pos,
             bool leave_to_upper, const Eigen::VectorXd& w) {
    const int leave = basic_[leave_pos];
    const double enter_value = nonbasic_value(enter) + direction * step;
    xb_ -= direction * step * w;
    state_[leave] = leave_to_upper ? VarState::AtUpper : VarState::AtLower;
    if (state_[leave] == VarState::AtUpper && !finite(ub_[leave]))
      state_[leave] = VarState::AtLower;
    if (state_[leave] == VarState::AtLower && !finite(lb_[leave]))
      state_[leave] = VarState::FreeZero;
    pos_[leave] = -1;
    basic_[leave_pos] = enter;
    state_[enter] = VarState::Basic;
    pos_[enter] = leave_pos;
    xb_[leave_pos] = enter_value;
    etas_.emplace_back(leave_pos, w);
    ++since_refactor_;
    ++pivot_count_;
  }

  // ---- dual simplex ----------------------------------------------------------

  // Returns false when primal infeasibility is proven.
  bool run_dual() {
    long degenerate_run = 0;
    bool bland = false;
    for (;;) {
      if (++loop_guard_ > opts_.max_pivots)
        throw NumericalBreakdown("pivot limit exceeded");
      if (since_refactor_ >= opts_.refactor_every) {
        refactor();
        recompute_basic_values();
      }
      int leave_pos = -1;
      double worst = feas_scale();
      for (int p = 0; p < m_; ++p) {
        const int j = basic_[p];
        const double below = lb_[j] - xb_[p];
        const double above = xb_[p] - ub_[j];
        const double v = std::max(below, above);
        if (v > worst) {
          worst = v;
          leave_pos = p;
        }
      }
      if (leave_pos < 0) return true;  // primal feasible

      const int leave = basic_[leave_pos];
      const bool above_upper = xb_[leave_pos] > ub_[leave];
      const double delta =
          above_upper ? xb_[leave_pos] - ub_[leave] : xb_[leave_pos] - lb_[leave];

      Eigen::VectorXd e = Eigen::VectorXd::Zero(m_);
      e[leave_pos] = 1.0;
      const Eigen::VectorXd row = btran(e);
      const Eigen::VectorXd y = duals(false);

      int enter = -1;
      double best_ratio = kInf;
      double best_alpha = 0.0;
      for (int j = 0; j < total_; ++j) {
        if (state_[j] == VarState::Basic) continue;
        if (lb_[j] == ub_[j]) continue;
        const double alpha = column_dot(j, row);
        const double adj = above_upper ? alpha : -alpha;
        const double d = cost_[j] - column_dot(j, y);
        double ratio = kInf;
        if (state_[j] == VarState::AtLower || state_[j] == VarState::FreeZero) {
          if (adj > opts_.pivot_tol) ratio = std::max(0.0, d) / adj;
        }
        if (ratio == kInf &&
            (state_[j] == VarState::AtUpper || state_[j] == VarState::FreeZero)) {
          if (adj < -opts_.pivot_tol) ratio = std::min(0.0, d) / adj;
        }
        if (ratio == kInf) continue;
        if (bland) {
          enter = j;
          best_alpha = alpha;
          break;
        }
        if (ratio < best_ratio - 1e-12 ||
            (ratio < best_ratio + 1e-12 &&
             std::abs(alpha) > std::abs(best_alpha))) {
          best_ratio = ratio;
          enter = j;
          best_alpha = alpha;
        }
      }
      if (enter < 0) return false;  // no admissible pivot: infeasible

      const Eigen::VectorXd w = ftran(dense_column(enter));
      const double alpha = w[leave_pos];
      if (std::abs(alpha) < opts_.pivot_tol) {
        if (!bland) {
          refactor();
          recompute_basic_values();
          bland = true;
          continue;
        }
        throw NumericalBreakdown("dual pivot below tolerance");
      }
      const double move = delta / alpha;  // signed change of entering value
      if (std::abs(move) <= 1e-12)
        ++degenerate_run;
      else
        degenerate_run = 0;
      if (degenerate_run > opts_.degenerate_limit) bland = true;
      if (bland && degenerate_run == 0) bland = false;

      const double enter_value = nonbasic_value(enter) + move;
      xb_ -= move * w;
      state_[leave] = above_upper ? VarState::AtUpper : VarState::AtLower;
      if (state_[leave] == VarState::AtLower && !finite(lb_[leave]))
        state_[leave] = VarState::FreeZero;
      pos_[leave] = -1;
      basic_[leave_pos] = enter;
      state_[enter] = VarState::Basic;
      pos_[enter] = leave_pos;
      xb_[leave_pos] = enter_value;
      etas_.emplace_back(leave_pos, w);
      ++since_refactor_;
      ++pivot_count_;
    }
  }

  // ---- results ---------------------------------------------------------------

  Basis export_basis() const {
    Basis b;
    b.state.assign(state_.begin(), state_.begin() + total_);
    return b;
  }

  LpSolution finalize() {
    if (unbounded_) return result_;
    LpSolution out;
    out.status = SolveStatus::Optimal;
    out.primal.resize(n_);
    for (int j = 0; j < n_; ++j)
      out.primal[j] =
          state_[j] == VarState::Basic ? xb_[pos_[j]] : nonbasic_value(j);
    const Eigen::VectorXd y = duals(false);
    out.dual = maximize_ ? Eigen::VectorXd(-y) : y;
    double obj = 0.0;
    for (int j = 0; j < n_; ++j) obj += cost_[j] * out.primal[j];
    out.objective_value = maximize_ ? -obj : obj;
    out.basis = export_basis();
    out.pivots = pivot_count_;
    return out;
  }

  SimplexOptions opts_;
  int m_, n_, total_;
  Eigen::VectorXd rhs_;
  bool maximize_ = false;

  std::vector<double> cost_, lb_, ub_;
  std::vector<int> col_start_, col_row_;
  std::vector<double> col_val_;

  std::vector<VarState> state_;
  std::vector<int> basic_;
  std::vector<int> pos_;
  Eigen::VectorXd xb_;

  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
  std::vector<std::pair<int, Eigen::VectorXd>> etas_;
  long since_refactor_ = 0;
  long pivot_count_ = 0;
  long loop_guard_ = 0;

  int n_art_ = 0;
  std::vector<int> art_row_;
  std::vector<double> art_sign_;

  LpSolution result_;
  bool unbounded_ = false;
};

}  // namespace

LpSolution SimplexSolver::solve(const LpModel& model, const Basis* warm_basis) {
  model.validate();
  Simplex s(model, model.rhs, opts_);
  if (model.num_rows() == 0) return s.solve_empty_rows();
  if (warm_basis != nullptr && !warm_basis->empty()) {
    if (warm_basis->size() != model.num_cols() + model.num_rows())
      throw DimensionMismatch("warm basis size mismatch");
    if (s.load_basis(*warm_basis)) return s.solve_warm();
  }
  return s.solve_cold();
}

LpSolution SimplexSolver::reoptimize_rhs(const LpModel& model,
                                         const Eigen::VectorXd& new_rhs,
                                         const Basis& prior_basis) {
  model.validate();
  if (new_rhs.size() != model.num_rows())
    throw DimensionMismatch("new_rhs length != row count");
  for (int i = 0; i < new_rhs.size(); ++i)
    if (!std::isfinite(new_rhs[i]))
      throw DimensionMismatch("non-finite rhs entry");
  Simplex s(model, new_rhs, opts_);
  if (model.num_rows() == 0) return s.solve_empty_rows();
  if (prior_basis.size() != model.num_cols() + model.num_rows())
    throw StaleBasis("prior basis size mismatch");
  if (!s.load_basis(prior_basis))
    throw StaleBasis("prior basis singular for the matrix");
  return s.solve_warm();
}

}  // namespace benders

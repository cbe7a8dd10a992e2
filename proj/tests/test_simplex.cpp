#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <vector>

#include "benders/common.hpp"
#include "benders/lp.hpp"

using namespace benders;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

LpModel make_model(int rows, int cols) {
  LpModel m;
  m.objective = Eigen::VectorXd::Zero(cols);
  m.matrix.resize(rows, cols);
  m.row_senses.assign(rows, RowSense::LessEqual);
  m.rhs = Eigen::VectorXd::Zero(rows);
  m.lower = Eigen::VectorXd::Zero(cols);
  m.upper = Eigen::VectorXd::Constant(cols, kInf);
  return m;
}

void set_matrix(LpModel& m, const std::vector<std::vector<double>>& rows) {
  std::vector<Eigen::Triplet<double>> t;
  for (int i = 0; i < static_cast<int>(rows.size()); ++i)
    for (int j = 0; j < static_cast<int>(rows[i].size()); ++j)
      if (rows[i][j] != 0.0) t.emplace_back(i, j, rows[i][j]);
  m.matrix.setFromTriplets(t.begin(), t.end());
}

// Brute-force vertex enumeration over {z : Gz <= g, Ez = e}. Every vertex is
// the solution of d linearly independent tight constraints; equalities are
// always tight. Independent of the simplex implementation.
struct Polyhedron {
  Eigen::MatrixXd G;  // inequality rows (<=)
  Eigen::VectorXd g;
  Eigen::MatrixXd E;  // equality rows
  Eigen::VectorXd e;
};

std::vector<Eigen::VectorXd> enumerate_vertices(const Polyhedron& p,
                                                double tol = 1e-7) {
  const int d = static_cast<int>(p.G.cols());
  const int ni = static_cast<int>(p.G.rows());
  const int ne = static_cast<int>(p.E.rows());
  std::vector<Eigen::VectorXd> vertices;
  const int need = d - ne;
  if (need < 0) return vertices;
  std::vector<int> pick(need);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == need) {
      Eigen::MatrixXd A(d, d);
      Eigen::VectorXd b(d);
      for (int r = 0; r < ne; ++r) {
        A.row(r) = p.E.row(r);
        b[r] = p.e[r];
      }
      for (int r = 0; r < need; ++r) {
        A.row(ne + r) = p.G.row(pick[r]);
        b[ne + r] = p.g[pick[r]];
      }
      Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
      if (lu.rank() < d) return;
      Eigen::VectorXd z = lu.solve(b);
      if (((p.G * z - p.g).array() > tol).any()) return;
      if (ne > 0 && ((p.E * z - p.e).cwiseAbs().array() > tol).any()) return;
      for (const auto& v : vertices)
        if ((v - z).cwiseAbs().maxCoeff() < 1e-6) return;
      vertices.push_back(z);
      return;
    }
    for (int i = start; i <= ni - (need - depth); ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return vertices;
}

// Converts an LpModel with finite bounds into inequality/equality form.
Polyhedron to_polyhedron(const LpModel& m) {
  const int n = m.num_cols();
  Polyhedron p;
  std::vector<Eigen::VectorXd> ineq;
  std::vector<double> irhs;
  std::vector<Eigen::VectorXd> eq;
  std::vector<double> erhs;
  Eigen::MatrixXd dense = Eigen::MatrixXd(m.matrix);
  for (int i = 0; i < m.num_rows(); ++i) {
    if (m.row_senses[i] == RowSense::Equal) {
      eq.push_back(dense.row(i));
      erhs.push_back(m.rhs[i]);
    } else if (m.row_senses[i] == RowSense::LessEqual) {
      ineq.push_back(dense.row(i));
      irhs.push_back(m.rhs[i]);
    } else {
      ineq.push_back(-dense.row(i));
      irhs.push_back(-m.rhs[i]);
    }
  }
  for (int j = 0; j < n; ++j) {
    if (std::isfinite(m.upper[j])) {
      Eigen::VectorXd r = Eigen::VectorXd::Zero(n);
      r[j] = 1.0;
      ineq.push_back(r);
      irhs.push_back(m.upper[j]);
    }
    if (std::isfinite(m.lower[j])) {
      Eigen::VectorXd r = Eigen::VectorXd::Zero(n);
      r[j] = -1.0;
      ineq.push_back(r);
      irhs.push_back(-m.lower[j]);
    }
  }
  p.G.resize(ineq.size(), n);
  p.g.resize(ineq.size());
  for (size_t i = 0; i < ineq.size(); ++i) {
    p.G.row(i) = ineq[i];
    p.g[i] = irhs[i];
  }
  p.E.resize(eq.size(), n);
  p.e.resize(eq.size());
  for (size_t i = 0; i < eq.size(); ++i) {
    p.E.row(i) = eq[i];
    p.e[i] = erhs[i];
  }
  return p;
}

// Farkas check for the augmented system [A I]v = b with slack bounds from
// the senses: the ray must make sup over the box of r'[A I]v finite and
// strictly below r'b.
void check_farkas(const LpModel& m, const Eigen::VectorXd& ray) {
  REQUIRE(ray.size() == m.num_rows());
  double cap = 0.0;
  Eigen::VectorXd at = m.matrix.transpose() * ray;
  auto add_term = [&](double coef, double lo, double hi) {
    if (coef > 1e-8) {
      REQUIRE(std::isfinite(hi));
      cap += coef * hi;
    } else if (coef < -1e-8) {
      REQUIRE(std::isfinite(lo));
      cap += coef * lo;
    }
  };
  for (int j = 0; j < m.num_cols(); ++j) add_term(at[j], m.lower[j], m.upper[j]);
  for (int i = 0; i < m.num_rows(); ++i) {
    switch (m.row_senses[i]) {
      case RowSense::LessEqual:
        add_term(ray[i], 0.0, kInf);
        break;
      case RowSense::Equal:
        break;
      case RowSense::GreaterEqual:
        add_term(ray[i], -kInf, 0.0);
        break;
    }
  }
  CHECK(ray.dot(m.rhs) > cap + 1e-9);
}

double dual_objective(const LpModel& m, const LpSolution& s) {
  // y'b plus reduced-cost contributions of nonbasic variables at finite
  // bounds; recomputed from scratch so it is independent of the kernel.
  double obj = s.dual.dot(m.rhs);
  Eigen::VectorXd d = m.objective - m.matrix.transpose() * s.dual;
  for (int j = 0; j < m.num_cols(); ++j) {
    const VarState st = s.basis.state[j];
    if (st == VarState::AtLower)
      obj += d[j] * m.lower[j];
    else if (st == VarState::AtUpper)
      obj += d[j] * m.upper[j];
  }
  return obj;
}

LpModel random_bounded_lp(SplitMix64& rng, int rows = 5, int cols = 6) {
  LpModel m = make_model(rows, cols);
  std::vector<std::vector<double>> coef(rows, std::vector<double>(cols, 0.0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (rng.uniform01() < 0.7) coef[i][j] = rng.uniform(-2.0, 2.0);
  set_matrix(m, coef);
  for (int i = 0; i < rows; ++i) {
    const double u = rng.uniform01();
    m.row_senses[i] = u < 0.45 ? RowSense::LessEqual
                    : u < 0.9  ? RowSense::GreaterEqual
                               : RowSense::Equal;
    m.rhs[i] = rng.uniform(-3.0, 3.0);
  }
  for (int j = 0; j < cols; ++j) {
    m.lower[j] = 0.0;
    m.upper[j] = rng.uniform(1.0, 3.0);
    m.objective[j] = rng.uniform(-1.0, 1.0);
  }
  return m;
}

}  // namespace

TEST_CASE("box lp solves to the upper corner") {
  LpModel m = make_model(2, 2);
  set_matrix(m, {{1, 0}, {0, 1}});
  m.rhs << 1, 1;
  m.objective << -1, -1;
  SimplexSolver solver;
  LpSolution s = solver.solve(m);
  REQUIRE(s.status == SolveStatus::Optimal);
  CHECK(s.objective_value == doctest::Approx(-2.0).epsilon(1e-9));
  CHECK(s.primal[0] == doctest::Approx(1.0));
  CHECK(s.primal[1] == doctest::Approx(1.0));
}

TEST_CASE("empty box is infeasible with a certificate") {
  LpModel m = make_model(1, 1);
  set_matrix(m, {{1}});
  m.rhs << -1;
  m.objective << 1;
  SimplexSolver solver;
  LpSolution s = solver.solve(m);
  REQUIRE(s.status == SolveStatus::Infeasible);
  REQUIRE(s.farkas_ray.has_value());
  CHECK(s.farkas_ray->dot(m.rhs) > 0.0);
  check_farkas(m, *s.farkas_ray);
}

TEST_CASE("unbounded below is reported") {
  LpModel m = make_model(1, 2);
  set_matrix(m, {{1, -1}});
  m.rhs << 0;
  m.objective << -1, 0;
  SimplexSolver solver;
  LpSolution s = solver.solve(m);
  CHECK(s.status == SolveStatus::Unbounded);
}

TEST_CASE("malformed input is rejected") {
  LpModel m = make_model(1, 2);
  set_matrix(m, {{1, 1}});
  m.rhs << 1;
  m.objective.resize(3);
  SimplexSolver solver;
  CHECK_THROWS_AS(solver.solve(m), DimensionMismatch);
}

TEST_CASE("random bounded lps match the vertex enumeration oracle") {
  SimplexSolver solver;
  SplitMix64 rng(20240611);
  int solved = 0, infeasible = 0;
  for (int trial = 0; trial < 60; ++trial) {
    LpModel m = random_bounded_lp(rng);
    Polyhedron p = to_polyhedron(m);
    const auto vertices = enumerate_vertices(p);
    LpSolution s = solver.solve(m);
    if (vertices.empty()) {
      ++infeasible;
      REQUIRE(s.status == SolveStatus::Infeasible);
      REQUIRE(s.farkas_ray.has_value());
      check_farkas(m, *s.farkas_ray);
      continue;
    }
    double best = kInf;
    for (const auto& v : vertices) best = std::min(best, m.objective.dot(v));
    ++solved;
    REQUIRE(s.status == SolveStatus::Optimal);
    CHECK(s.objective_value ==
          doctest::Approx(best).epsilon(1e-7).scale(1.0 + std::abs(best)));
    // strong duality
    const double dual = dual_objective(m, s);
    CHECK(std::abs(s.objective_value - dual) <=
          1e-7 * (1.0 + std::abs(s.objective_value)));
    // primal feasibility
    Eigen::VectorXd act = m.matrix * s.primal;
    for (int i = 0; i < m.num_rows(); ++i) {
      if (m.row_senses[i] == RowSense::LessEqual)
        CHECK(act[i] <= m.rhs[i] + 1e-7);
      else if (m.row_senses[i] == RowSense::GreaterEqual)
        CHECK(act[i] >= m.rhs[i] - 1e-7);
      else
        CHECK(std::abs(act[i] - m.rhs[i]) <= 1e-7);
    }
  }
  // the generator must exercise both outcomes
  CHECK(solved > 10);
  CHECK(infeasible > 0);
}

TEST_CASE("maximization mirrors minimization") {
  LpModel m = make_model(1, 2);
  set_matrix(m, {{1, 1}});
  m.rhs << 4;
  m.objective << 3, 5;
  m.upper << 3, 3;
  m.objective_sense = ObjSense::Maximize;
  SimplexSolver solver;
  LpSolution s = solver.solve(m);
  REQUIRE(s.status == SolveStatus::Optimal);
  CHECK(s.objective_value == doctest::Approx(18.0));  // x = (1, 3)
}

TEST_CASE("determinism: identical inputs give identical outputs") {
  SplitMix64 rng(7);
  LpModel m = random_bounded_lp(rng);
  SimplexSolver solver;
  LpSolution a = solver.solve(m);
  LpSolution b = solver.solve(m);
  REQUIRE(a.status == b.status);
  if (a.status == SolveStatus::Optimal) {
    CHECK(a.objective_value == b.objective_value);
    CHECK((a.primal - b.primal).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.dual - b.dual).cwiseAbs().maxCoeff() == 0.0);
    CHECK(a.pivots == b.pivots);
  }
}

TEST_CASE("reoptimize with unchanged rhs does zero pivots") {
  SplitMix64 rng(99);
  SimplexSolver solver;
  for (int trial = 0; trial < 20; ++trial) {
    LpModel m = random_bounded_lp(rng);
    LpSolution s = solver.solve(m);
    if (s.status != SolveStatus::Optimal) continue;
    LpSolution r = solver.reoptimize_rhs(m, m.rhs, s.basis);
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(r.pivots == 0);
    CHECK(r.objective_value ==
          doctest::Approx(s.objective_value).epsilon(1e-12));
  }
}

TEST_CASE("dual simplex reoptimization agrees with cold solves") {
  SplitMix64 rng(4242);
  SimplexSolver solver;
  int compared = 0;
  for (int trial = 0; trial < 120; ++trial) {
    LpModel m = random_bounded_lp(rng);
    LpSolution base = solver.solve(m);
    if (base.status != SolveStatus::Optimal) continue;
    Eigen::VectorXd new_rhs = m.rhs;
    for (int i = 0; i < new_rhs.size(); ++i)
      new_rhs[i] += rng.uniform(-1.5, 1.5);
    LpSolution warm = solver.reoptimize_rhs(m, new_rhs, base.basis);
    LpModel m2 = m;
    m2.rhs = new_rhs;
    LpSolution cold = solver.solve(m2);
    REQUIRE(warm.status == cold.status);
    if (cold.status == SolveStatus::Optimal) {
      ++compared;
      CHECK(std::abs(warm.objective_value - cold.objective_value) <=
            1e-9 * (1.0 + std::abs(cold.objective_value)));
    } else if (cold.status == SolveStatus::Infeasible) {
      REQUIRE(warm.farkas_ray.has_value());
      check_farkas(m2, *warm.farkas_ray);
    }
  }
  CHECK(compared > 30);
}

TEST_CASE("stale basis is rejected") {
  LpModel m = make_model(2, 2);
  set_matrix(m, {{1, 0}, {0, 1}});
  m.rhs << 1, 1;
  m.objective << -1, -1;
  SimplexSolver solver;
  Basis junk;
  junk.state.assign(3, VarState::AtLower);
  CHECK_THROWS_AS(solver.reoptimize_rhs(m, m.rhs, junk), StaleBasis);
  // right size, but not a basis (no basic columns)
  Basis degenerate;
  degenerate.state.assign(4, VarState::AtLower);
  CHECK_THROWS_AS(solver.reoptimize_rhs(m, m.rhs, degenerate), StaleBasis);
}

TEST_CASE("duals of a transportation-style lp are vertices of the dual region") {
  // min 2 y11 + 3 y12 + 4 y21 + 1 y22
  //     y11 + y12           <= 5     (capacity)
  //            y21 + y22    <= 5
  //     y11 + y21           >= 3     (demand)
  //            y12   + y22  >= 4
  LpModel m = make_model(4, 4);
  set_matrix(m, {{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}});
  m.row_senses = {RowSense::LessEqual, RowSense::LessEqual,
                  RowSense::GreaterEqual, RowSense::GreaterEqual};
  m.rhs << 5, 5, 3, 4;
  m.objective << 2, 3, 4, 1;
  SimplexSolver solver;
  LpSolution s = solver.solve(m);
  REQUIRE(s.status == SolveStatus::Optimal);
  CHECK(s.objective_value == doctest::Approx(10.0));

  // Dual region: W'pi <= q plus sign constraints from the senses.
  Polyhedron dual;
  Eigen::MatrixXd wt = Eigen::MatrixXd(m.matrix).transpose();
  dual.G.resize(4 + 4, 4);
  dual.g.resize(8);
  dual.G.topRows(4) = wt;
  dual.g.head(4) = m.objective;
  dual.G.bottomRows(4) = Eigen::MatrixXd::Zero(4, 4);
  dual.G(4, 0) = 1.0;   // pi_1 <= 0
  dual.G(5, 1) = 1.0;   // pi_2 <= 0
  dual.G(6, 2) = -1.0;  // pi_3 >= 0
  dual.G(7, 3) = -1.0;  // pi_4 >= 0
  dual.g.tail(4).setZero();
  dual.E.resize(0, 4);
  dual.e.resize(0);
  const auto vertices = enumerate_vertices(dual);
  REQUIRE(!vertices.empty());
  bool found = false;
  for (const auto& v : vertices)
    if ((v - s.dual).cwiseAbs().maxCoeff() < 1e-7) found = true;
  CHECK(found);
}

TEST_CASE("complementary slackness holds at optimum") {
  SplitMix64 rng(31337);
  SimplexSolver solver;
  for (int trial = 0; trial < 40; ++trial) {
    LpModel m = random_bounded_lp(rng);
    LpSolution s = solver.solve(m);
    if (s.status != SolveStatus::Optimal) continue;
    Eigen::VectorXd act = m.matrix * s.primal;
    for (int i = 0; i < m.num_rows(); ++i) {
      if (m.row_senses[i] == RowSense::Equal) continue;
      const double slack = m.rhs[i] - act[i];
      CHECK(std::abs(s.dual[i] * slack) <= 1e-6 * (1.0 + std::abs(s.dual[i])));
    }
  }
}

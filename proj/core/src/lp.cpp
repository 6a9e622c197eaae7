// Copyright 2026 The ratsep Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ratsep/lp.hpp"

#include <optional>
#include <stdexcept>

#include "ratsep/errors.hpp"

namespace ratsep::lp {
namespace {

// Tableau rows 0..m-1 are constraints, the last column is the right-hand
// side. The objective row holds reduced costs for a maximization: an entry
// < 0 marks an improving column.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : cells_(rows, std::vector<Surd>(cols + 1)), basis_(rows), objective_(cols + 1) {}

  std::size_t rows() const { return cells_.size(); }
  std::size_t cols() const { return objective_.size() - 1; }
  Surd& at(std::size_t i, std::size_t j) { return cells_[i][j]; }
  Surd& rhs(std::size_t i) { return cells_[i].back(); }
  std::vector<std::size_t>& basis() { return basis_; }

  // Installs max <costs, x> as the objective row, priced out against the
  // current basis.
  void set_objective(const std::vector<Surd>& costs) {
    for (std::size_t j = 0; j <= cols(); ++j) objective_[j] = Surd();
    for (std::size_t j = 0; j < costs.size(); ++j) objective_[j] = -costs[j];
    for (std::size_t i = 0; i < rows(); ++i) {
      const Surd& factor = objective_[basis_[i]];
      if (factor.is_zero()) continue;
      Surd f = factor;
      for (std::size_t j = 0; j <= cols(); ++j) {
        if (!cells_[i][j].is_zero()) objective_[j] -= f * cells_[i][j];
      }
    }
  }

  const Surd& objective_value() const { return objective_.back(); }

  void pivot(std::size_t row, std::size_t col) {
    Surd inv = cells_[row][col].reciprocal();
    for (Surd& c : cells_[row]) {
      if (!c.is_zero()) c *= inv;
    }
    auto eliminate = [&](std::vector<Surd>& target) {
      if (target[col].is_zero()) return;
      Surd f = target[col];
      for (std::size_t j = 0; j <= cols(); ++j) {
        if (!cells_[row][j].is_zero()) target[j] -= f * cells_[row][j];
      }
    };
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i != row) eliminate(cells_[i]);
    }
    eliminate(objective_);
    basis_[row] = col;
  }

  // Runs Bland-rule pivots over columns < allowed_cols. Returns false when
  // the objective is unbounded.
  bool optimize(std::size_t allowed_cols) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed_cols; ++j) {
        if (surd_sign(objective_[j]) < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Surd best_ratio;
      for (std::size_t i = 0; i < rows(); ++i) {
        const Surd& a = cells_[i][*entering];
        if (surd_sign(a) <= 0) continue;
        Surd ratio = cells_[i].back() / a;
        if (!leaving) {
          leaving = i;
          best_ratio = ratio;
          continue;
        }
        int c = compare(ratio, best_ratio);
        if (c < 0 || (c == 0 && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  void drop_row(std::size_t row) {
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(row));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
  }

 private:
  std::vector<std::vector<Surd>> cells_;
  std::vector<std::size_t> basis_;
  std::vector<Surd> objective_;
};

struct Phase1 {
  Tableau tableau;
  std::size_t structural_cols;  // originals + slacks
  bool feasible;
};

Phase1 run_phase1(const Program& program) {
  const std::size_t n = program.num_vars;
  const std::size_t m = program.rows.size();
  std::size_t slacks = 0;
  for (const Row& row : program.rows) {
    if (row.coeffs.size() != n) throw DimensionMismatch("lp: row width differs from num_vars");
    if (row.sense != Sense::kEqual) ++slacks;
  }
  const std::size_t structural = n + slacks;
  Tableau t(m, structural + m);

  std::size_t slack = n;
  for (std::size_t i = 0; i < m; ++i) {
    const Row& row = program.rows[i];
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = row.coeffs[j];
    if (row.sense == Sense::kLessEqual) t.at(i, slack++) = Surd(1);
    if (row.sense == Sense::kGreaterEqual) t.at(i, slack++) = Surd(-1);
    t.rhs(i) = row.rhs;
    if (surd_sign(row.rhs) < 0) {
      for (std::size_t j = 0; j < structural; ++j) t.at(i, j) = -t.at(i, j);
      t.rhs(i) = -t.rhs(i);
    }
    t.at(i, structural + i) = Surd(1);
    t.basis()[i] = structural + i;
  }

  // max -sum(artificials)
  std::vector<Surd> costs(structural + m);
  for (std::size_t i = 0; i < m; ++i) costs[structural + i] = Surd(-1);
  t.set_objective(costs);
  t.optimize(structural + m);
  bool feasible = t.objective_value().is_zero();
  if (feasible) {
    // Drive zero-level artificials out of the basis; rows with no
    // structural entry are redundant.
    for (std::size_t i = t.rows(); i-- > 0;) {
      if (t.basis()[i] < structural) continue;
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < structural; ++j) {
        if (!t.at(i, j).is_zero()) {
          col = j;
          break;
        }
      }
      if (col) {
        t.pivot(i, *col);
      } else {
        t.drop_row(i);
      }
    }
  }
  return {std::move(t), structural, feasible};
}

}  // namespace

Result maximize(const Program& program) {
  Phase1 phase1 = run_phase1(program);
  Result result;
  if (!phase1.feasible) {
    result.status = Status::kInfeasible;
    return result;
  }
  Tableau& t = phase1.tableau;
  std::vector<Surd> costs(program.objective);
  costs.resize(program.num_vars);
  t.set_objective(costs);
  if (!t.optimize(phase1.structural_cols)) {
    result.status = Status::kUnbounded;
    return result;
  }
  result.status = Status::kOptimal;
  result.x.assign(program.num_vars, Surd());
  for (std::size_t i = 0; i < t.rows(); ++i) {
    std::size_t b = t.basis()[i];
    if (b < program.num_vars) result.x[b] = t.rhs(i);
  }
  result.value = t.objective_value();
  return result;
}

bool is_feasible(const Program& program) { return run_phase1(program).feasible; }

}  // namespace ratsep::lp

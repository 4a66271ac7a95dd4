#include "twofold/lp.hpp"

#include "twofold/errors.hpp"

#include <cstddef>
#include <limits>
#include <optional>

namespace twofold::lp {

namespace {

constexpr size_t kNone = std::numeric_limits<size_t>::max();

// Dense simplex tableau over the structural columns plus one artificial per
// row. The cost row is maintained incrementally through pivots.
class Tableau {
public:
    Tableau(const Problem& problem)
        : n_(problem.cost.size()), m_(problem.rows.size()), body_(m_), rhs_(m_), basis_(m_) {
        for (size_t i = 0; i < m_; ++i) {
            if (problem.rows[i].size() != n_) throw DimensionMismatchError("lp row width");
            body_[i].assign(n_ + m_, Rat(0));
            bool flip = problem.rhs[i] < 0;
            for (size_t j = 0; j < n_; ++j)
                body_[i][j] = flip ? Rat(-problem.rows[i][j]) : problem.rows[i][j];
            rhs_[i] = flip ? Rat(-problem.rhs[i]) : problem.rhs[i];
            body_[i][n_ + i] = 1;
            basis_[i] = n_ + i;
        }
    }

    // Minimizes the sum of artificial variables. Returns the phase-one optimum.
    Rat phase_one() {
        cost_.assign(n_ + m_, Rat(0));
        obj_ = 0;
        for (size_t i = 0; i < m_; ++i) {
            for (size_t j = 0; j < n_; ++j) cost_[j] -= body_[i][j];
            obj_ -= rhs_[i];
        }
        artificial_banned_ = false;
        run();
        return Rat(-obj_);
    }

    // Pivots artificials out of the basis; rows that cannot be pivoted are
    // redundant and get dropped.
    void drop_artificials() {
        for (size_t i = 0; i < m_;) {
            if (basis_[i] < n_) {
                ++i;
                continue;
            }
            size_t enter = kNone;
            for (size_t j = 0; j < n_; ++j) {
                if (body_[i][j] != 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == kNone) {
                body_.erase(body_.begin() + static_cast<std::ptrdiff_t>(i));
                rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                --m_;
            } else {
                pivot(i, enter);
                ++i;
            }
        }
    }

    // Minimizes the structural cost; artificial columns are banned.
    Status phase_two(const RatVec& cost) {
        cost_.assign(n_ + m_, Rat(0));
        obj_ = 0;
        for (size_t j = 0; j < n_; ++j) cost_[j] = cost[j];
        for (size_t i = 0; i < m_; ++i) {
            size_t b = basis_[i];
            if (cost_[b] != 0) {
                Rat factor = cost_[b];
                for (size_t j = 0; j < n_ + m_; ++j) cost_[j] -= factor * body_[i][j];
                obj_ -= factor * rhs_[i];
            }
        }
        artificial_banned_ = true;
        return run();
    }

    RatVec extract(size_t n_vars) const {
        RatVec x(n_vars, Rat(0));
        for (size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_vars) x[basis_[i]] = rhs_[i];
        return x;
    }

    Rat objective() const { return Rat(-obj_); }

private:
    Status run() {
        for (;;) {
            // Bland: entering column = lowest index with negative reduced cost.
            size_t enter = kNone;
            size_t limit = artificial_banned_ ? n_ : n_ + m_;
            for (size_t j = 0; j < limit; ++j) {
                if (cost_[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == kNone) return Status::Optimal;

            // Ratio test; ties broken by lowest basic variable index.
            size_t leave = kNone;
            Rat best_ratio;
            for (size_t i = 0; i < m_; ++i) {
                if (body_[i][enter] <= 0) continue;
                Rat ratio = rhs_[i] / body_[i][enter];
                if (leave == kNone || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == kNone) return Status::Unbounded;
            pivot(leave, enter);
        }
    }

    void pivot(size_t row, size_t col) {
        Rat p = body_[row][col];
        for (size_t j = 0; j < n_ + m_; ++j) body_[row][j] /= p;
        rhs_[row] /= p;
        for (size_t i = 0; i < m_; ++i) {
            if (i == row || body_[i][col] == 0) continue;
            Rat factor = body_[i][col];
            for (size_t j = 0; j < n_ + m_; ++j) body_[i][j] -= factor * body_[row][j];
            rhs_[i] -= factor * rhs_[row];
        }
        if (cost_[col] != 0) {
            Rat factor = cost_[col];
            for (size_t j = 0; j < n_ + m_; ++j) cost_[j] -= factor * body_[row][j];
            obj_ -= factor * rhs_[row];
        }
        basis_[row] = col;
    }

    size_t n_;
    size_t m_;
    std::vector<RatVec> body_;
    RatVec rhs_;
    RatVec cost_;
    Rat obj_ = 0;
    std::vector<size_t> basis_;
    bool artificial_banned_ = false;
};

}  // namespace

Solution solve(const Problem& problem) {
    if (problem.rows.size() != problem.rhs.size()) throw DimensionMismatchError("lp rhs length");
    Tableau tableau(problem);
    if (tableau.phase_one() != 0) return {Status::Infeasible, {}, Rat(0)};
    tableau.drop_artificials();
    Status status = tableau.phase_two(problem.cost);
    if (status != Status::Optimal) return {status, {}, Rat(0)};
    return {Status::Optimal, tableau.extract(problem.cost.size()), tableau.objective()};
}

bool feasible(const std::vector<RatVec>& rows, const RatVec& rhs) {
    Problem p;
    p.rows = rows;
    p.rhs = rhs;
    p.cost.assign(rows.empty() ? 0 : rows.front().size(), Rat(0));
    Tableau tableau(p);
    return tableau.phase_one() == 0;
}

}  // namespace twofold::lp

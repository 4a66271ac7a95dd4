#pragma once

#include "twofold/rational.hpp"

namespace twofold::lp {

enum class Status { Optimal, Infeasible, Unbounded };

/// Equality-form linear program: minimize cost·x subject to rows·x = rhs, x >= 0.
/// All data exact rationals. Problems at desk scale (tens of rows/columns).
struct Problem {
    std::vector<RatVec> rows;
    RatVec rhs;
    RatVec cost;
};

struct Solution {
    Status status = Status::Infeasible;
    RatVec x;       // only meaningful when Optimal
    Rat objective;  // only meaningful when Optimal
};

/// Two-phase dense simplex with Bland's rule (no cycling, fully deterministic).
/// Redundant-but-consistent rows are tolerated and dropped in phase one.
Solution solve(const Problem& problem);

/// Phase-one feasibility of rows·x = rhs, x >= 0.
bool feasible(const std::vector<RatVec>& rows, const RatVec& rhs);

}  // namespace twofold::lp

#pragma once

#include <vector>

namespace misched::lp {

enum class Status { Optimal, Infeasible, Unbounded };

/// maximize c.x subject to rows, x >= 0. rel per row: -1 (<=), 0 (==), +1 (>=).
struct Problem {
    int nvar = 0;
    std::vector<double> c;
    std::vector<std::vector<double>> rows;
    std::vector<int> rel;
    std::vector<double> rhs;

    explicit Problem(int n) : nvar(n), c(n, 0.0) {}
    void add(std::vector<double> row, int relation, double b);
};

struct Result {
    Status status = Status::Infeasible;
    double objective = 0.0;
    std::vector<double> x;
};

/// Dense two-phase simplex with Bland's rule (no cycling). Intended for the
/// small LPs that arise here: a few hundred variables and constraints.
Result solve(const Problem& p, double eps = 1e-9);

} // namespace misched::lp

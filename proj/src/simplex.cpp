#include "misched/simplex.hpp"

#include <cmath>
#include <stdexcept>

namespace misched::lp {

void Problem::add(std::vector<double> row, int relation, double b) {
    if (static_cast<int>(row.size()) != nvar)
        throw std::invalid_argument("constraint length does not match variable count");
    if (relation < -1 || relation > 1)
        throw std::invalid_argument("relation must be -1, 0 or 1");
    rows.push_back(std::move(row));
    rel.push_back(relation);
    rhs.push_back(b);
}

namespace {

struct Tableau {
    int m = 0, ncol = 0;            // ncol excludes the rhs column
    std::vector<double> a;          // m x (ncol+1), row-major; last column = rhs
    std::vector<int> basis;         // m entries
    std::vector<char> artificial;   // per column

    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * (ncol + 1) + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * (ncol + 1) + j]; }
    double& rhs(int i) { return at(i, ncol); }
    double rhs(int i) const { return at(i, ncol); }

    void pivot(int pr, int pc) {
        const double pv = at(pr, pc);
        for (int j = 0; j <= ncol; ++j) at(pr, j) /= pv;
        for (int i = 0; i < m; ++i) {
            if (i == pr) continue;
            const double f = at(i, pc);
            if (f == 0.0) continue;
            for (int j = 0; j <= ncol; ++j) at(i, j) -= f * at(pr, j);
        }
        basis[pr] = pc;
    }
};

// Bland's rule: entering = lowest-index column with positive reduced cost,
// leaving = min ratio with lowest basis index on ties. Returns Optimal or
// Unbounded.
Status run_simplex(Tableau& t, const std::vector<double>& cost, bool allow_artificial,
                   double eps) {
    while (true) {
        std::vector<double> y(t.m);
        for (int i = 0; i < t.m; ++i) y[i] = cost[t.basis[i]];

        int enter = -1;
        for (int j = 0; j < t.ncol; ++j) {
            if (!allow_artificial && t.artificial[j]) continue;
            double rc = cost[j];
            for (int i = 0; i < t.m; ++i)
                if (y[i] != 0.0) rc -= y[i] * t.at(i, j);
            if (rc > eps) {
                enter = j;
                break;
            }
        }
        if (enter < 0) return Status::Optimal;

        int leave = -1;
        double best_ratio = 0.0;
        for (int i = 0; i < t.m; ++i) {
            const double aij = t.at(i, enter);
            if (aij <= eps) continue;
            const double ratio = t.rhs(i) / aij;
            if (leave < 0 || ratio < best_ratio - eps ||
                (std::abs(ratio - best_ratio) <= eps && t.basis[i] < t.basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) return Status::Unbounded;
        t.pivot(leave, enter);
    }
}

} // namespace

Result solve(const Problem& p, double eps) {
    const int m = static_cast<int>(p.rows.size());
    const int n = p.nvar;

    // normalize to rhs >= 0
    std::vector<std::vector<double>> rows = p.rows;
    std::vector<int> rel = p.rel;
    std::vector<double> rhs = p.rhs;
    for (int i = 0; i < m; ++i) {
        if (rhs[i] < 0.0) {
            for (double& v : rows[i]) v = -v;
            rhs[i] = -rhs[i];
            rel[i] = -rel[i];
        }
    }

    int nslack = 0, nart = 0;
    for (int i = 0; i < m; ++i) {
        if (rel[i] != 0) ++nslack;
        if (rel[i] >= 0) ++nart; // >= needs a surplus plus an artificial; == an artificial
    }
    Tableau t;
    t.m = m;
    t.ncol = n + nslack + nart;
    t.a.assign(static_cast<std::size_t>(m) * (t.ncol + 1), 0.0);
    t.basis.assign(m, -1);
    t.artificial.assign(t.ncol, 0);

    int scol = n, acol = n + nslack;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) t.at(i, j) = rows[i][j];
        t.rhs(i) = rhs[i];
        if (rel[i] == -1) {
            t.at(i, scol) = 1.0;
            t.basis[i] = scol++;
        } else if (rel[i] == 1) {
            t.at(i, scol) = -1.0;
            ++scol;
            t.at(i, acol) = 1.0;
            t.artificial[acol] = 1;
            t.basis[i] = acol++;
        } else {
            t.at(i, acol) = 1.0;
            t.artificial[acol] = 1;
            t.basis[i] = acol++;
        }
    }

    Result res;
    if (nart > 0) {
        std::vector<double> c1(t.ncol, 0.0);
        for (int j = 0; j < t.ncol; ++j)
            if (t.artificial[j]) c1[j] = -1.0;
        if (run_simplex(t, c1, true, eps) != Status::Optimal)
            throw std::runtime_error("phase-1 simplex did not terminate at an optimum");
        double infeas = 0.0;
        for (int i = 0; i < m; ++i)
            if (t.artificial[t.basis[i]]) infeas += t.rhs(i);
        if (infeas > 1e-7) {
            res.status = Status::Infeasible;
            return res;
        }
        // drive remaining zero-level artificials out of the basis when possible
        for (int i = 0; i < m; ++i) {
            if (!t.artificial[t.basis[i]]) continue;
            for (int j = 0; j < n + nslack; ++j) {
                if (std::abs(t.at(i, j)) > eps) {
                    t.pivot(i, j);
                    break;
                }
            }
        }
    }

    std::vector<double> c2(t.ncol, 0.0);
    for (int j = 0; j < n; ++j) c2[j] = p.c[j];
    const Status st = run_simplex(t, c2, false, eps);
    if (st == Status::Unbounded) {
        res.status = Status::Unbounded;
        return res;
    }

    res.status = Status::Optimal;
    res.x.assign(n, 0.0);
    for (int i = 0; i < m; ++i)
        if (t.basis[i] < n) res.x[t.basis[i]] = t.rhs(i);
    res.objective = 0.0;
    for (int j = 0; j < n; ++j) res.objective += p.c[j] * res.x[j];
    return res;
}

} // namespace misched::lp

#include "avckit/lp.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace avckit {

namespace {

constexpr double kEps = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Tableau simplex over D[(m+2) x (n+2)], basis B, nonbasis N.
struct Tableau {
    int m, n;
    std::vector<int> nb, bs;
    std::vector<std::vector<double>> d;

    Tableau(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
            const std::vector<double>& c)
        : m(static_cast<int>(b.size())),
          n(static_cast<int>(c.size())),
          nb(n + 1),
          bs(m),
          d(m + 2, std::vector<double>(n + 2, 0.0)) {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = a[i][j];
        for (int i = 0; i < m; ++i) {
            bs[i] = n + i;
            d[i][n] = -1.0;
            d[i][n + 1] = b[i];
        }
        for (int j = 0; j < n; ++j) {
            nb[j] = j;
            d[m][j] = -c[j];
        }
        nb[n] = -1;
        d[m + 1][n] = 1.0;
    }

    void pivot(int r, int s) {
        double* a = d[r].data();
        double inv = 1.0 / a[s];
        for (int i = 0; i < m + 2; ++i) {
            if (i != r && std::fabs(d[i][s]) > kEps) {
                double* bline = d[i].data();
                double inv2 = bline[s] * inv;
                for (int j = 0; j < n + 2; ++j) bline[j] -= a[j] * inv2;
                bline[s] = a[s] * inv2;
            }
        }
        for (int j = 0; j < n + 2; ++j)
            if (j != s) d[r][j] *= inv;
        for (int i = 0; i < m + 2; ++i)
            if (i != r) d[i][s] *= -inv;
        d[r][s] = inv;
        std::swap(bs[r], nb[s]);
    }

    bool simplex(int phase) {
        int x = m + phase - 1;
        for (;;) {
            int s = -1;
            for (int j = 0; j < n + 1; ++j) {
                if (nb[j] == -phase) continue;
                if (s == -1 || std::make_pair(d[x][j], nb[j]) < std::make_pair(d[x][s], nb[s])) s = j;
            }
            if (d[x][s] >= -kEps) return true;
            int r = -1;
            for (int i = 0; i < m; ++i) {
                if (d[i][s] <= kEps) continue;
                if (r == -1 || std::make_pair(d[i][n + 1] / d[i][s], bs[i]) <
                                   std::make_pair(d[r][n + 1] / d[r][s], bs[r]))
                    r = i;
            }
            if (r == -1) return false;  // unbounded
            pivot(r, s);
        }
    }
};

}  // namespace

LpResult lp_solve(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                  const std::vector<double>& c) {
    Tableau t(a, b, c);
    LpResult res;
    int r = 0;
    for (int i = 1; i < t.m; ++i)
        if (t.d[i][t.n + 1] < t.d[r][t.n + 1]) r = i;
    if (t.m > 0 && t.d[r][t.n + 1] < -kEps) {
        t.pivot(r, t.n);
        if (!t.simplex(2) || t.d[t.m + 1][t.n + 1] < -kEps) {
            res.status = LpResult::Status::infeasible;
            return res;
        }
        for (int i = 0; i < t.m; ++i) {
            if (t.bs[i] != -1) continue;
            int s = 0;
            for (int j = 1; j <= t.n; ++j)
                if (std::make_pair(t.d[i][j], t.nb[j]) < std::make_pair(t.d[i][s], t.nb[s])) s = j;
            t.pivot(i, s);
        }
    }
    bool bounded = t.simplex(1);
    res.x.assign(t.n, 0.0);
    for (int i = 0; i < t.m; ++i)
        if (t.bs[i] < t.n) res.x[t.bs[i]] = t.d[i][t.n + 1];
    if (!bounded) {
        res.status = LpResult::Status::unbounded;
        res.value = kInf;
        return res;
    }
    res.value = t.d[t.m][t.n + 1];
    return res;
}

void LpBuilder::add_le(const std::vector<double>& row, double rhs) {
    a_.push_back(row);
    b_.push_back(rhs);
}

void LpBuilder::add_eq(const std::vector<double>& row, double rhs) {
    add_le(row, rhs);
    std::vector<double> neg(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) neg[i] = -row[i];
    add_le(neg, -rhs);
}

LpResult LpBuilder::solve() const { return lp_solve(a_, b_, c_); }

}  // namespace avckit

#ifndef AVCKIT_LP_HPP
#define AVCKIT_LP_HPP

#include <vector>

namespace avckit {

// Small dense LP:  maximize c'x  subject to  Ax <= b, x >= 0.
// Two-phase simplex with index tie-breaking (Bland-like) to avoid cycling.
// Problems in this library are tiny (at most a few hundred variables), which
// is why no external solver is used.
struct LpResult {
    enum class Status { optimal, infeasible, unbounded } status = Status::optimal;
    double value = 0.0;
    std::vector<double> x;
};

LpResult lp_solve(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                  const std::vector<double>& c);

// Convenience builder for LPs assembled row by row, with equality support
// (encoded as a pair of inequalities).
class LpBuilder {
   public:
    explicit LpBuilder(int num_vars) : nvars_(num_vars) {}
    void add_le(const std::vector<double>& row, double rhs);
    void add_eq(const std::vector<double>& row, double rhs);
    void set_objective(const std::vector<double>& c) { c_ = c; }  // maximized
    LpResult solve() const;
    int num_vars() const { return nvars_; }

   private:
    int nvars_;
    std::vector<std::vector<double>> a_;
    std::vector<double> b_;
    std::vector<double> c_;
};

}  // namespace avckit

#endif

#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "pretend/characters.hpp"
#include "pretend/csv.hpp"
#include "pretend/multfunc.hpp"
#include "pretend/ntheory.hpp"
#include "pretend/series.hpp"

namespace pretend {

enum class Verdict { holds, fails, indeterminate };

std::string to_string(Verdict v);

// holds iff margin > budget, fails iff margin < -budget.
Verdict classify(double margin, double budget);

// One evaluated inequality. lhs is the side claimed to be larger, so
// margin = lhs - rhs >= 0 means the inequality holds. The budget collects the
// certified radii and round-off estimates of every series value involved,
// propagated through log and sqrt, plus a floor of 64 eps (|lhs| + |rhs|).
struct InequalityReport {
    std::string name;
    std::vector<std::pair<std::string, double>> params;
    // Non-numeric parameters (functions, characters).
    std::string detail;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    double budget = 0.0;
    Verdict verdict = Verdict::indeterminate;
    // A square-root argument was negative within its error and set to 0.
    bool clamped = false;

    // NaN when absent.
    double param(const std::string& key) const;
};

inline constexpr double kDefaultPrecision = 1e-8;

// Proposition 1 for f, g at sigma:
//   [0] sqrt(log zeta/|F|) + sqrt(log zeta/|G|) >= sqrt(log zeta/|F(x)G|)
//   [1] sqrt(log |zeta F|) + sqrt(log |zeta G|) >= sqrt(log zeta/|F(x)G|)
// Series that cannot reach `precision` within the table use the largest
// truncation available; their radius enters the budget.
std::array<InequalityReport, 2> check_prop1(const MultiplicativeFunction& f, const MultiplicativeFunction& g,
                                            double sigma, const PrimeTable& table,
                                            double precision = kDefaultPrecision);

// Corollary 2: Proposition 1 with f = n^{-i t1}, g = n^{-i t2}, evaluated with zeta directly.
std::array<InequalityReport, 2> check_cor2(double sigma, double t1, double t2, double precision = kDefaultPrecision);

struct Report341 {
    // 3 log zeta(sigma) + 4 log|zeta(sigma+it)| + log|zeta(sigma+2it)| >= 0
    InequalityReport report;
    // The second Corollary 2 inequality at t1 = t2 = t, and lhs^2 - rhs^2 from it.
    InequalityReport cor2_second;
    double expanded_square = 0.0;
    // |report.margin - expanded_square| and the allowed 10x combined budget.
    double consistency_gap = 0.0;
    double consistency_tolerance = 0.0;
    bool consistent = false;
};

Report341 check_341(double sigma, double t, double precision = kDefaultPrecision);

// sqrt(log zeta(sigma)/|L(sigma+it1+it2, chi psi)|)
//   <= sqrt(log zeta(sigma)/|L(sigma+it1, chi)|) + sqrt(log zeta(sigma)/|L(sigma+it2, psi)|).
// chi psi is the product character mod lcm(q1, q2); `primitive` replaces it by
// its primitive inducing character, which Proposition 1 does not cover.
InequalityReport check_lfun_triangle(const DirichletCharacter& chi, const DirichletCharacter& psi, double sigma,
                                     double t1, double t2, bool primitive = false,
                                     double precision = kDefaultPrecision);

struct DerivativeReports {
    // 3 zeta'/zeta + sign 4 Re F'/F + Re (F(x)F)'/(F(x)F) <= 0, with lhs = 0, rhs = that value.
    InequalityReport squared;
    // 2 sqrt(-sign Re F'/F - zeta'/zeta) >= sqrt(Re (F(x)F)'/(F(x)F) - zeta'/zeta),
    // whose square is the inequality above.
    InequalityReport triangle;
};

DerivativeReports check_derivative_ineq(const MultiplicativeFunction& f, double sigma, int sign,
                                        const PrimeTable& table, double precision = kDefaultPrecision);

// Both Corollary 2 reports for every (sigma, t1, t2), sigma outermost; order
// does not depend on `jobs`.
std::vector<InequalityReport> sweep_cor2(const std::vector<double>& sigmas, const std::vector<double>& t1s,
                                         const std::vector<double>& t2s, double precision, unsigned jobs);

// name,sigma,t1,t2,lhs,rhs,margin,budget,verdict. A single "t" parameter fills
// both t columns; other absent parameters are empty.
ResultTable inequality_table(const std::vector<InequalityReport>& reports);

}  // namespace pretend

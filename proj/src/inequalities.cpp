#include "pretend/inequalities.hpp"

#include <cmath>
#include <limits>

#include "pretend/errors.hpp"
#include "pretend/parallel.hpp"

namespace pretend {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// A real number with an absolute error bound.
struct Bounded {
    double v;
    double e;
};

Bounded operator+(Bounded a, Bounded b) {
    const double v = a.v + b.v;
    return {v, a.e + b.e + kEps * std::abs(v)};
}

Bounded operator-(Bounded a, Bounded b) {
    const double v = a.v - b.v;
    return {v, a.e + b.e + kEps * std::abs(v)};
}

Bounded operator*(double c, Bounded a) { return {c * a.v, std::abs(c) * a.e + kEps * std::abs(c * a.v)}; }

Bounded log_abs(const CertifiedValue& x) {
    const double m = std::abs(x.value);
    const double e = x.error();
    if (!(m > e)) throw PrecisionError("series enclosure contains 0; cannot take its logarithm");
    const double l = std::log(m);
    return {l, -std::log1p(-e / m) + 2.0 * kEps * std::abs(l)};
}

Bounded real_part(const CertifiedValue& x) { return {x.value.real(), x.error()}; }

Bounded sqrt_clamped(Bounded u, bool& clamped) {
    double v = u.v;
    if (v < 0.0) {
        clamped = true;
        v = 0.0;
    }
    const double r = std::sqrt(v);
    const double e = v > u.e ? u.e / (r + std::sqrt(v - u.e)) : std::sqrt(v + u.e);
    return {r, e + kEps * r};
}

InequalityReport make_report(std::string name, std::vector<std::pair<std::string, double>> params, std::string detail,
                             Bounded lhs, Bounded rhs, bool clamped) {
    InequalityReport r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.detail = std::move(detail);
    r.lhs = lhs.v;
    r.rhs = rhs.v;
    r.margin = lhs.v - rhs.v;
    r.budget = lhs.e + rhs.e + 64.0 * kEps * (std::abs(lhs.v) + std::abs(rhs.v));
    r.verdict = classify(r.margin, r.budget);
    r.clamped = clamped;
    return r;
}

// The two Proposition 1 reports from log zeta(sigma) and log|F|, log|G|, log|F(x)G|.
std::array<InequalityReport, 2> prop1_reports(const std::string& prefix,
                                              std::vector<std::pair<std::string, double>> params,
                                              const std::string& detail, Bounded lz, Bounded lf, Bounded lg,
                                              Bounded lfg) {
    bool c1 = false, c2 = false;
    const Bounded right1 = sqrt_clamped(lz - lfg, c1);
    const Bounded left1 = sqrt_clamped(lz - lf, c1) + sqrt_clamped(lz - lg, c1);
    const Bounded right2 = sqrt_clamped(lz - lfg, c2);
    const Bounded left2 = sqrt_clamped(lz + lf, c2) + sqrt_clamped(lz + lg, c2);
    return {make_report(prefix + "_1", params, detail, left1, right1, c1),
            make_report(prefix + "_2", params, detail, left2, right2, c2)};
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds:
            return "holds";
        case Verdict::fails:
            return "fails";
        case Verdict::indeterminate:
            return "indeterminate";
    }
    return "indeterminate";
}

Verdict classify(double margin, double budget) {
    if (margin > budget) return Verdict::holds;
    if (margin < -budget) return Verdict::fails;
    return Verdict::indeterminate;
}

double InequalityReport::param(const std::string& key) const {
    for (const auto& [k, v] : params)
        if (k == key) return v;
    return std::numeric_limits<double>::quiet_NaN();
}

std::array<InequalityReport, 2> check_prop1(const MultiplicativeFunction& f, const MultiplicativeFunction& g,
                                            double sigma, const PrimeTable& table, double precision) {
    const std::complex<double> s(sigma, 0.0);
    const Bounded lz = log_abs(zeta(s, precision));
    const Bounded lf = log_abs(dirichlet_F(f, s, precision, table, Reach::best_effort));
    const Bounded lg = log_abs(dirichlet_F(g, s, precision, table, Reach::best_effort));
    const Bounded lfg =
        log_abs(dirichlet_F(MultiplicativeFunction::product(f, g), s, precision, table, Reach::best_effort));
    return prop1_reports("prop1", {{"sigma", sigma}}, "f=" + f.to_string() + ";g=" + g.to_string(), lz, lf, lg, lfg);
}

std::array<InequalityReport, 2> check_cor2(double sigma, double t1, double t2, double precision) {
    const Bounded lz = log_abs(zeta({sigma, 0.0}, precision));
    const Bounded l1 = log_abs(zeta({sigma, t1}, precision));
    const Bounded l2 = log_abs(zeta({sigma, t2}, precision));
    const Bounded l12 = log_abs(zeta({sigma, t1 + t2}, precision));
    return prop1_reports("cor2", {{"sigma", sigma}, {"t1", t1}, {"t2", t2}}, "", lz, l1, l2, l12);
}

Report341 check_341(double sigma, double t, double precision) {
    const Bounded lz = log_abs(zeta({sigma, 0.0}, precision));
    const Bounded l1 = log_abs(zeta({sigma, t}, precision));
    const Bounded l2 = log_abs(zeta({sigma, 2.0 * t}, precision));
    Report341 out;
    out.report = make_report("three_four_one", {{"sigma", sigma}, {"t", t}}, "", 3.0 * lz + 4.0 * l1 + l2,
                             Bounded{0.0, 0.0}, false);
    out.cor2_second = prop1_reports("cor2", {{"sigma", sigma}, {"t1", t}, {"t2", t}}, "", lz, l1, l1, l2)[1];
    const double a = out.cor2_second.lhs, b = out.cor2_second.rhs;
    out.expanded_square = a * a - b * b;
    out.consistency_gap = std::abs(out.report.margin - out.expanded_square);
    const double square_budget = 2.0 * (std::abs(a) + std::abs(b)) * out.cor2_second.budget +
                                 out.cor2_second.budget * out.cor2_second.budget;
    out.consistency_tolerance = 10.0 * (out.report.budget + square_budget);
    out.consistent = out.cor2_second.clamped ? out.expanded_square <= out.report.margin + out.consistency_tolerance
                                             : out.consistency_gap <= out.consistency_tolerance;
    return out;
}

InequalityReport check_lfun_triangle(const DirichletCharacter& chi, const DirichletCharacter& psi, double sigma,
                                     double t1, double t2, bool primitive, double precision) {
    DirichletCharacter prod = multiply_characters(chi, psi);
    if (primitive) prod = primitive_inducing(prod);
    const Bounded lz = log_abs(zeta({sigma, 0.0}, precision));
    const Bounded l1 = log_abs(l_function(chi, {sigma, t1}, precision));
    const Bounded l2 = log_abs(l_function(psi, {sigma, t2}, precision));
    const Bounded l12 = log_abs(l_function(prod, {sigma, t1 + t2}, precision));
    bool clamped = false;
    const Bounded left = sqrt_clamped(lz - l1, clamped) + sqrt_clamped(lz - l2, clamped);
    const Bounded right = sqrt_clamped(lz - l12, clamped);
    return make_report(primitive ? "lfun_triangle_primitive" : "lfun_triangle",
                       {{"sigma", sigma}, {"t1", t1}, {"t2", t2}},
                       "chi=" + chi.to_string() + ";psi=" + psi.to_string() + ";product=" + prod.to_string(), left,
                       right, clamped);
}

DerivativeReports check_derivative_ineq(const MultiplicativeFunction& f, double sigma, int sign,
                                        const PrimeTable& table, double precision) {
    if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
    const std::complex<double> s(sigma, 0.0);
    const Bounded zd = real_part(zeta_log_derivative(s, precision));
    const Bounded fd = real_part(log_derivative(f, s, precision, table, Reach::best_effort));
    const Bounded ffd =
        real_part(log_derivative(MultiplicativeFunction::product(f, f), s, precision, table, Reach::best_effort));
    const std::vector<std::pair<std::string, double>> params = {{"sigma", sigma}, {"sign", static_cast<double>(sign)}};
    const std::string detail = "f=" + f.to_string();

    DerivativeReports out;
    const Bounded value = 3.0 * zd + (4.0 * sign) * fd + ffd;
    const std::string suffix = sign > 0 ? "_plus" : "_minus";
    out.squared = make_report("deriv_ineq" + suffix, params, detail, Bounded{0.0, 0.0}, value, false);
    bool clamped = false;
    const Bounded left = 2.0 * sqrt_clamped(static_cast<double>(-sign) * fd - zd, clamped);
    const Bounded right = sqrt_clamped(ffd - zd, clamped);
    out.triangle = make_report("deriv_triangle" + suffix, params, detail, left, right, clamped);
    return out;
}

std::vector<InequalityReport> sweep_cor2(const std::vector<double>& sigmas, const std::vector<double>& t1s,
                                         const std::vector<double>& t2s, double precision, unsigned jobs) {
    const std::size_t n1 = t1s.size(), n2 = t2s.size();
    const std::size_t points = sigmas.size() * n1 * n2;
    std::vector<InequalityReport> out(2 * points);
    parallel_for(points, jobs, [&](std::size_t i) {
        const double sigma = sigmas[i / (n1 * n2)];
        const double t1 = t1s[(i / n2) % n1];
        const double t2 = t2s[i % n2];
        auto reports = check_cor2(sigma, t1, t2, precision);
        out[2 * i] = std::move(reports[0]);
        out[2 * i + 1] = std::move(reports[1]);
    });
    return out;
}

ResultTable inequality_table(const std::vector<InequalityReport>& reports) {
    ResultTable table;
    table.columns = {"name", "sigma", "t1", "t2", "lhs", "rhs", "margin", "budget", "verdict"};
    for (const auto& r : reports) {
        std::vector<Cell> row;
        row.emplace_back(r.name);
        for (const char* key : {"sigma", "t1", "t2"}) {
            double v = r.param(key);
            if (std::isnan(v) && std::string(key) != "sigma") v = r.param("t");
            if (std::isnan(v))
                row.emplace_back(std::string());
            else
                row.emplace_back(v);
        }
        row.emplace_back(r.lhs);
        row.emplace_back(r.rhs);
        row.emplace_back(r.margin);
        row.emplace_back(r.budget);
        row.emplace_back(to_string(r.verdict));
        table.add_row(std::move(row));
    }
    return table;
}

}  // namespace pretend

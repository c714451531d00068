// Acceptance suite: one PASS/FAIL line per criterion, artifacts under argv[1]
// (default ./acceptance_artifacts).
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "pretend/characters.hpp"
#include "pretend/charsums.hpp"
#include "pretend/csv.hpp"
#include "pretend/cyclotomic.hpp"
#include "pretend/distance.hpp"
#include "pretend/halasz.hpp"
#include "pretend/inequalities.hpp"
#include "pretend/multfunc.hpp"
#include "pretend/ntheory.hpp"
#include "pretend/parallel.hpp"
#include "pretend/series.hpp"

using namespace pretend;
namespace fs = std::filesystem;
using cd = std::complex<double>;

namespace {

fs::path g_dir;

struct Outcome {
    bool pass = true;
    std::string detail;
};

void write_file(const std::string& name, const std::string& text) {
    std::ofstream(g_dir / name, std::ios::binary) << text;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string num(double v) { return format_double(v); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const PrimeTable& big_table() {
    static const PrimeTable t = build_prime_table(10'000'000);
    return t;
}

std::vector<double> t_axis() {
    std::vector<double> ts;
    for (int k = -20; k <= 20; ++k) ts.push_back(k / 2.0);
    return ts;
}

const std::vector<double> kSigmas = {1.1, 1.25, 1.5, 2.0, 3.0};

Outcome criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto table = build_prime_table(kDefaultNormCutoff);
    Outcome out;
    ResultTable rows;
    rows.columns = {"f", "sigma", "norm_squared", "log_ratio", "difference", "tail_bound", "series_error"};
    const std::vector<MultiplicativeFunction> fs = {MultiplicativeFunction::one(), MultiplicativeFunction::liouville(),
                                                    MultiplicativeFunction::archimedean(1.0),
                                                    MultiplicativeFunction::character(parse_character("4:1"))};
    double worst = 0.0;
    for (const auto& f : fs)
        for (double sigma : {1.1, 1.5, 2.0}) {
            const auto id = norm_identity(f, sigma, kDefaultNormCutoff, table);
            const double allowed = id.tail_bound + id.series_error + 1e-9;
            worst = std::max(worst, std::abs(id.difference) / allowed);
            if (!(std::abs(id.difference) <= allowed)) out.pass = false;
            rows.add_row({f.to_string(), sigma, id.norm_squared, id.log_ratio, id.difference, id.tail_bound,
                          id.series_error});
        }
    const auto l = sigma_norm(MultiplicativeFunction::liouville(), 2.0, kDefaultNormCutoff, table);
    const double anchor_gap = std::abs(l.norm_squared - std::log(2.5));
    if (!(anchor_gap <= l.tail_bound + 1e-9)) out.pass = false;
    const double secs = seconds_since(t0);
    if (secs >= 10.0) out.pass = false;
    write_file("c1_norm_identity.csv", rows.to_csv());
    out.detail = "12 cases, worst |diff|/allowed=" + num(worst) + ", log(5/2) gap=" + num(anchor_gap) +
                 " (tail " + num(l.tail_bound) + "), " + num(secs) + "s < 10s";
    return out;
}

Outcome criterion2() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto ts = t_axis();
    const auto reports = sweep_cor2(kSigmas, ts, ts, 1e-8, default_jobs());
    std::size_t fails = 0, indeterminate = 0;
    for (const auto& r : reports) {
        fails += r.verdict == Verdict::fails;
        indeterminate += r.verdict == Verdict::indeterminate;
    }
    write_file("c2_cor2_sweep.csv", inequality_table(reports).to_csv());
    const double secs = seconds_since(t0);
    Outcome out;
    out.pass = fails == 0 && reports.size() == 2 * kSigmas.size() * ts.size() * ts.size() && secs < 300.0;
    out.detail = std::to_string(reports.size()) + " reports, fails=" + std::to_string(fails) +
                 ", indeterminate=" + std::to_string(indeterminate) + ", " + num(secs) + "s < 300s";
    return out;
}

Outcome criterion3() {
    Outcome out;
    ResultTable rows;
    rows.columns = {"sigma", "t", "margin", "budget", "expanded_square", "gap", "tolerance", "verdict"};
    std::size_t inconsistent = 0, fails = 0, n = 0;
    double worst_gap = 0.0;
    for (double sigma : kSigmas)
        for (double t : t_axis()) {
            const auto r = check_341(sigma, t, 1e-8);
            ++n;
            inconsistent += !r.consistent;
            // zeta^3 |zeta|^4 |zeta| >= 1 - budget, on the log scale
            fails += r.report.verdict == Verdict::fails;
            if (r.consistency_tolerance > 0) worst_gap = std::max(worst_gap, r.consistency_gap / r.consistency_tolerance);
            rows.add_row({sigma, t, r.report.margin, r.report.budget, r.expanded_square, r.consistency_gap,
                          r.consistency_tolerance, to_string(r.report.verdict)});
        }
    write_file("c3_341.csv", rows.to_csv());
    out.pass = inconsistent == 0 && fails == 0;
    out.detail = std::to_string(n) + " diagonal points, inconsistent=" + std::to_string(inconsistent) +
                 ", fails=" + std::to_string(fails) + ", worst gap/tolerance=" + num(worst_gap);
    return out;
}

Outcome criterion4() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t N = 10'000;
    const auto table = build_prime_table(N);
    const std::vector<WeightScheme> schemes = {WeightScheme::prime_weights(N), WeightScheme::sigma_weights(1.1, N)};
    double worst = -std::numeric_limits<double>::infinity();
    std::size_t violations = 0;
    for (std::uint64_t s = 0; s < 10'000; ++s) {
        const auto f = random_function(1'000'000 + 2 * s, RandomMode::unimodular, table);
        const auto g = random_function(1'000'001 + 2 * s, RandomMode::unimodular, table);
        const auto fg = MultiplicativeFunction::product(f, g);
        for (const auto& w : schemes) {
            const double excess = std::sqrt(weighted_norm_squared(fg, w, table)) -
                                  std::sqrt(weighted_norm_squared(f, w, table)) -
                                  std::sqrt(weighted_norm_squared(g, w, table));
            worst = std::max(worst, excess);
            violations += excess > 1e-10;
        }
    }
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto disc = [&] { return std::polar(std::sqrt(u(rng)), 2 * std::numbers::pi * u(rng)); };
    double eta_worst = -std::numeric_limits<double>::infinity();
    std::size_t eta_violations = 0;
    for (int i = 0; i < 1'000'000; ++i) {
        const cd z = disc(), w = disc();
        const double a = u(rng);
        const double excess = eta(z * w, a) - eta(z, a) - eta(w, a);
        eta_worst = std::max(eta_worst, excess);
        eta_violations += excess > 1e-12;
    }
    const double secs = seconds_since(t0);
    Outcome out;
    out.pass = violations == 0 && eta_violations == 0 && secs < 120.0;
    out.detail = "2x10^4 norm checks, max excess=" + num(worst) + "; 10^6 eta checks, max excess=" +
                 num(eta_worst) + "; " + num(secs) + "s < 120s";
    return out;
}

// sum_{a b <= x} alpha(a) conj(alpha(b)), alpha(n) = chi(n) n^{it}, in long double
std::complex<long double> dchi_reference(const std::vector<cd>& values, std::uint64_t x, double t) {
    const std::size_t q = values.size();
    std::vector<std::complex<long double>> alpha(x + 1), prefix(x + 1);
    for (std::uint64_t n = 1; n <= x; ++n) {
        const long double ang = static_cast<long double>(t) * std::log(static_cast<long double>(n));
        alpha[n] = std::complex<long double>(values[n % q]) * std::complex<long double>(std::cos(ang), std::sin(ang));
        prefix[n] = prefix[n - 1] + std::conj(alpha[n]);
    }
    std::complex<long double> total = 0;
    for (std::uint64_t a = 1; a <= x; ++a) total += alpha[a] * prefix[x / a];
    return total;
}

Outcome criterion5() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t N = 10'000;
    const auto table = build_prime_table(N);
    std::vector<std::int64_t> d2(N + 1, 0);
    for (std::size_t a = 1; a <= N; ++a)
        for (std::size_t m = a; m <= N; m += a) ++d2[m];
    std::vector<double> d4(N + 1);
    for (std::size_t n = 1; n <= N; ++n) d4[n] = static_cast<double>(divisor_count_k(n, 4, table));

    std::size_t characters = 0, conv_bad = 0, hp_bad = 0, bound_bad = 0;
    for (std::uint64_t q = 1; q <= 50; ++q)
        for (const auto& chi : all_characters(q)) {
            ++characters;
            const auto E = static_cast<unsigned>(chi.group().exponent());
            const auto dchi = d_chi_values_exact(chi, N);
            const auto h = h_sequence_exact(chi, N);
            const auto back = dirichlet_convolve<CyclotomicInteger>(dchi, h);
            for (std::size_t n = 1; n <= N; ++n) {
                if (!(back[n] == CyclotomicInteger(E, d2[n]))) ++conv_bad;
                if (!(std::abs(h[n].to_complex()) <= d4[n] + 1e-9)) ++bound_bad;
            }
            for (auto p : table.primes_upto(N)) {
                const UnitValue v = evaluate_character(chi, p);
                CyclotomicInteger expect(E, 2);
                if (!v.zero) {
                    const auto k = v.num * (E / v.den);
                    expect -= CyclotomicInteger::root(E, k);
                    expect -= CyclotomicInteger::root(E, k).conj();
                }
                if (!(h[p] == expect)) ++hp_bad;
            }
        }
    const double exact_secs = seconds_since(t0);

    // hyperbola method against the direct double loop
    double max_abs = 0.0, max_rel = 0.0;
    std::size_t sums = 0, sum_bad = 0;
    for (std::uint64_t q = 1; q <= 20; ++q)
        for (const auto& chi : all_characters(q)) {
            const auto values = character_value_table(chi);
            for (double t : {0.0, 1.0})
                for (std::uint64_t x : {10ull, 1000ull, 31'623ull, 100'000ull}) {
                    const auto ref = dchi_reference(values, x, t);
                    const cd refd(static_cast<double>(ref.real()), static_cast<double>(ref.imag()));
                    const double err = std::abs(d_chi_sum(chi, x, t) - refd);
                    max_abs = std::max(max_abs, err);
                    max_rel = std::max(max_rel, err / std::max(1.0, std::abs(refd)));
                    ++sums;
                    sum_bad += err > 1e-8;
                }
        }
    Outcome out;
    out.pass = conv_bad == 0 && hp_bad == 0 && bound_bad == 0 && sum_bad == 0;
    out.detail = std::to_string(characters) + " characters q<=50: (d_chi*h)!=d at " + std::to_string(conv_bad) +
                 ", h(p) mismatches " + std::to_string(hp_bad) + ", |h|>d4 at " + std::to_string(bound_bad) + " (" +
                 num(exact_secs) + "s); " + std::to_string(sums) + " hyperbola sums: max abs err " + num(max_abs) +
                 ", max rel err " + num(max_rel) + ", over 1e-8 " + std::to_string(sum_bad);
    return out;
}

constexpr double kPvBaseline = 0.5255268625199614;

Outcome criterion6() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto profiles = pv_scan(1, 1000, default_jobs());
    const double secs = seconds_since(t0);
    double max_ratio = 0.0;
    std::size_t over = 0;
    for (const auto& p : profiles) {
        max_ratio = std::max(max_ratio, p.ratio);
        over += !(p.ratio < 1.0);
    }
    write_file("c6_pv_scan.csv", pv_table(profiles).to_csv());
    write_file("c6_pv_baseline.txt", num(max_ratio) + "\n");
    Outcome out;
    out.pass = over == 0 && std::abs(max_ratio - kPvBaseline) <= 1e-12 && secs < 60.0 && profiles.size() == 184'829;
    out.detail = std::to_string(profiles.size()) + " characters, ratio>=1: " + std::to_string(over) +
                 ", max ratio " + num(max_ratio) + " (baseline " + num(kPvBaseline) + "), " + num(secs) + "s < 60s";
    return out;
}

Outcome criterion7() {
    const auto& table = big_table();
    Outcome out;
    const cd mean = mean_value(MultiplicativeFunction::archimedean(1.0), 1'000'000, table);
    const double gap = std::abs(std::abs(mean) - 1.0 / std::sqrt(2.0));
    if (!(gap <= 5e-3)) out.pass = false;

    ResultTable rows;
    rows.columns = {"alpha", "on_grid", "M", "t_star", "slack"};
    std::size_t on_bad = 0, off_bad = 0;
    const double T = 2.0;
    const std::uint64_t x = 100'000;
    GridConfig grid;
    grid.spacing = 0.01;
    for (double alpha : {0.0, 1.0, -1.0, 0.25, -3.5, 4.0}) {
        const auto r = halasz_report(MultiplicativeFunction::archimedean(alpha), x, T, table, grid);
        on_bad += !(r.M == 0.0 && r.t_star == alpha);
        rows.add_row({alpha, std::int64_t{1}, r.M, r.t_star, r.slack});
    }
    for (double alpha : {1.0 / 3.0, std::sqrt(2.0), -std::numbers::pi, 0.005, 3.99999}) {
        const auto r = halasz_report(MultiplicativeFunction::archimedean(alpha), x, T, table, grid);
        off_bad += !(r.M >= 0.0 && r.M <= r.slack);
        rows.add_row({alpha, std::int64_t{0}, r.M, r.t_star, r.slack});
    }
    write_file("c7_halasz.csv", rows.to_csv());
    out.pass = out.pass && on_bad == 0 && off_bad == 0;
    out.detail = "|mean|=" + num(std::abs(mean)) + " vs 1/sqrt2 gap " + num(gap) + " <= 5e-3; on-grid misses " +
                 std::to_string(on_bad) + ", off-grid M>slack " + std::to_string(off_bad);
    return out;
}

Outcome criterion8() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto& table = big_table();
    const std::vector<std::uint64_t> xs = {1000, 10'000, 100'000, 1'000'000, 10'000'000};
    Outcome out;
    const auto scan = prop6_scan(3, 300, xs, table, default_jobs());
    std::size_t decreasing = 0;
    for (std::size_t i = 1; i < scan.rows.size(); ++i) {
        const auto& a = scan.rows[i - 1];
        const auto& b = scan.rows[i];
        if (a.q == b.q && a.chi == b.chi && b.distance_squared < a.distance_squared) ++decreasing;
    }
    write_file("c8_prop6.csv", scan_table(scan.rows).to_csv());
    const auto twisted = prop6_scan(3, 300, xs, table, default_jobs(), 1.0);
    write_file("c8_prop6_t1.csv", scan_table(twisted.rows).to_csv());
    std::string lemma_counts;
    bool finite = true;
    for (int lemma : {3, 4, 5}) {
        LemmaScanConfig cfg;
        cfg.lemma = lemma;
        cfg.q_lo = 3;
        cfg.q_hi = 300;
        cfg.y = 10'000'000;
        cfg.A = lemma == 5 ? 3.0 : 1.0;
        cfg.jobs = default_jobs();
        const auto rows = lemma_distance_scan(cfg, table);
        for (const auto& r : rows) finite = finite && std::isfinite(r.lhs) && r.lhs >= 0.0;
        write_file("c8_lemma" + std::to_string(lemma) + ".csv", lemma_table(rows).to_csv());
        lemma_counts += " lemma" + std::to_string(lemma) + "=" + std::to_string(rows.size());
        if (rows.empty()) out.pass = false;
    }
    out.pass = out.pass && decreasing == 0 && finite && !scan.rows.empty() && !twisted.rows.empty();
    out.detail = std::to_string(scan.rows.size()) + " prop6 rows (min implied c " + num(scan.min_implied_c) +
                 "), decreasing steps " + std::to_string(decreasing) + ", twisted rows " +
                 std::to_string(twisted.rows.size()) + ";" + lemma_counts + "; " + num(seconds_since(t0)) + "s";
    return out;
}

Outcome criterion9() {
    const std::vector<std::vector<std::string>> suite = {
        {"sieve-info", "x=1000000"},
        {"char-list", "q=30"},
        {"distance", "f=rand:unimodular:7", "g=liouville", "x=1000,100000"},
        {"norm-identity", "f=chi:5:1", "sigma=1.1,1.5,2"},
        {"prop1", "f=rand:unimodular:11", "g=liouville", "sigma=1.5,2", "sieve-limit=200000"},
        {"cor2", "sigma=1.1,1.5,2,3", "t1=-10:10:0.5", "t2=-10:10:0.5"},
        {"three-four-one", "sigma=1.1,1.5,2", "t=-10:10:0.5"},
        {"lfun-triangle", "chi=3:1", "psi=4:1", "sigma=1.5,2"},
        {"deriv-ineq", "f=rand:unimodular:3", "sigma=2", "sieve-limit=200000"},
        {"pv-scan", "q=3:300"},
        {"dchi", "chi=7:1", "x=10,1000,100000", "t=1"},
        {"prop6-scan", "q=3:100", "x=1000,100000,1000000", "t=0.5"},
        {"lemma-scan", "lemma=5", "q=3:60", "y=1000000", "A=2"},
        {"halasz", "f=rand:unimodular:5", "x=100000", "T=3"},
        {"hall", "family=20", "seed=9", "x=100000"},
        {"mean", "f=chi:7:1", "x=1000,100000"},
        {"progression", "f=liouville", "x=100000", "q=7", "a=1,2,3,4,5,6"},
    };
    const auto det = g_dir / "c9_determinism";
    std::size_t compared = 0, differ = 0, errors = 0;
    std::string bad;
    for (const auto& entry : suite) {
        std::vector<std::string> outputs;
        for (const char* jobs : {"1", "4", "1"}) {
            cli::RunConfig cfg;
            cfg.command = entry[0];
            for (std::size_t i = 1; i < entry.size(); ++i) {
                const auto eq = entry[i].find('=');
                cfg.params[entry[i].substr(0, eq)] = entry[i].substr(eq + 1);
            }
            cfg.params["jobs"] = jobs;
            cfg.params["seed"] = cfg.params.count("seed") ? cfg.params["seed"] : "1";
            const auto dir = det / ("run" + std::to_string(outputs.size()) + "_jobs" + jobs);
            fs::create_directories(dir);
            const auto file = dir / (entry[0] + ".csv");
            cfg.params["out"] = file.string();
            std::ostringstream sink, log;
            const int code = cli::run(cfg, sink, log);
            if (code != cli::kExitOk) {
                ++errors;
                bad += " " + entry[0] + "(exit " + std::to_string(code) + ")";
            }
            outputs.push_back(slurp(file));
        }
        ++compared;
        if (outputs[0].empty() || outputs[0] != outputs[1] || outputs[0] != outputs[2]) {
            ++differ;
            bad += " " + entry[0];
        }
    }
    Outcome out;
    out.pass = differ == 0 && errors == 0;
    out.detail = std::to_string(compared) + " commands x 3 runs (jobs 1,4,1): differing " + std::to_string(differ) +
                 ", non-zero exits " + std::to_string(errors) + bad;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    g_dir = argc > 1 ? fs::path(argv[1]) : fs::path("acceptance_artifacts");
    fs::create_directories(g_dir);
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"norm identity", criterion1},
        {"corollary 2 sweep", criterion2},
        {"3-4-1 consistency", criterion3},
        {"triangle inequality properties", criterion4},
        {"convolution identities and hyperbola sums", criterion5},
        {"Polya-Vinogradov scan", criterion6},
        {"mean value anchor and Halasz grid", criterion7},
        {"character scans to 10^7", criterion8},
        {"CLI determinism across --jobs", criterion9},
    };
    int failed = 0;
    std::ostringstream summary;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const std::string line = std::string(o.pass ? "PASS" : "FAIL") + " " + std::to_string(i + 1) + " " +
                                 criteria[i].first + ": " + o.detail + " [" + num(seconds_since(t0)) + "s]";
        std::cout << line << std::endl;
        summary << line << "\n";
        failed += !o.pass;
    }
    write_file("summary.txt", summary.str());
    return failed == 0 ? 0 : 1;
}

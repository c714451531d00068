#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pretend/characters.hpp"
#include "pretend/charsums.hpp"
#include "pretend/csv.hpp"
#include "pretend/distance.hpp"
#include "pretend/errors.hpp"
#include "pretend/halasz.hpp"
#include "pretend/inequalities.hpp"
#include "pretend/multfunc.hpp"
#include "pretend/ntheory.hpp"
#include "pretend/series.hpp"

#ifndef PRETEND_VERSION
#define PRETEND_VERSION "0.0.0"
#endif

namespace pretend::cli {

namespace {

using Table = ResultTable;

struct Outcome {
    Table table;
    bool fails = false;
    std::vector<std::string> notes;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// Digits after the decimal point of a plain decimal literal.
int decimals(const std::string& s) {
    if (s.find_first_of("eE") != std::string::npos) return 17;
    const auto dot = s.find('.');
    return dot == std::string::npos ? 0 : static_cast<int>(s.size() - dot - 1);
}

// "start:stop:step" -> start, start+step, ..., rounded to the decimals written
// in start and step so grid points equal their decimal spelling.
std::vector<double> expand_range(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ParseError("range must be start:stop:step, got '" + text + "'");
    const double start = parse_double(parts[0]), stop = parse_double(parts[1]), step = parse_double(parts[2]);
    if (!(step > 0.0)) throw ParseError("range step must be positive: '" + text + "'");
    if (stop < start) throw ParseError("range stop below start: '" + text + "'");
    const double span = (stop - start) / step;
    if (span > 1e7) throw ParseError("range too long: '" + text + "'");
    const auto count = static_cast<std::int64_t>(std::floor(span + 1e-9)) + 1;
    const int d = std::max(decimals(parts[0]), decimals(parts[2]));
    std::vector<double> out;
    out.reserve(count);
    for (std::int64_t k = 0; k < count; ++k) {
        double v = start + static_cast<double>(k) * step;
        if (d <= 15) {
            const double scale = std::pow(10.0, d);
            v = std::round(v * scale) / scale;
        }
        out.push_back(v == 0.0 ? 0.0 : v);
    }
    return out;
}

// Comma list whose items are numbers or start:stop:step ranges.
std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    for (const auto& raw : split(text, ',')) {
        const std::string item = trim(raw);
        if (item.empty()) throw ParseError("empty list item in '" + text + "'");
        if (item.find(':') != std::string::npos) {
            const auto r = expand_range(item);
            out.insert(out.end(), r.begin(), r.end());
        } else {
            out.push_back(parse_double(item));
        }
    }
    return out;
}

// "sigma=1.1:3:0.1,t=-10:10:0.5"; an item without '=' continues the previous axis.
std::map<std::string, std::vector<double>> parse_grid(const std::string& text) {
    std::map<std::string, std::vector<double>> axes;
    std::string current;
    for (const auto& raw : split(text, ',')) {
        std::string item = trim(raw);
        const auto eq = item.find('=');
        if (eq != std::string::npos) {
            current = trim(item.substr(0, eq));
            item = trim(item.substr(eq + 1));
            if (current.empty()) throw ParseError("grid axis without a name in '" + text + "'");
            axes[current].clear();
        } else if (current.empty()) {
            throw ParseError("grid must start with name=values: '" + text + "'");
        }
        const auto values = parse_list(item);
        axes[current].insert(axes[current].end(), values.begin(), values.end());
    }
    return axes;
}

std::uint64_t parse_count(const std::string& text, const std::string& key) {
    const std::int64_t v = parse_int(text);
    if (v < 0) throw ParseError("--" + key + " must be nonnegative");
    return static_cast<std::uint64_t>(v);
}

class Params {
public:
    explicit Params(const RunConfig& c) : c_(c) {
        if (has("grid")) grid_ = parse_grid(get("grid"));
    }

    bool has(const std::string& key) const { return c_.params.count(key) > 0; }

    std::string get(const std::string& key, const std::string& fallback = "") const {
        const auto it = c_.params.find(key);
        return it == c_.params.end() ? fallback : it->second;
    }

    std::string require(const std::string& key) const {
        if (!has(key)) throw ParseError(c_.command + " needs --" + key);
        return get(key);
    }

    double number(const std::string& key, double fallback) const {
        return has(key) ? parse_double(get(key)) : fallback;
    }

    std::uint64_t count(const std::string& key, std::uint64_t fallback) const {
        return has(key) ? parse_count(get(key), key) : fallback;
    }

    std::vector<std::uint64_t> counts(const std::string& key, const std::string& fallback) const {
        std::vector<std::uint64_t> out;
        for (const auto& item : split(get(key, fallback), ',')) out.push_back(parse_count(trim(item), key));
        return out;
    }

    // Axis values: grid axis first ("t" in a grid feeds t1 and t2), then the flag, then the default.
    std::vector<double> axis(const std::string& key, const std::string& fallback) const {
        if (auto it = grid_.find(key); it != grid_.end()) return it->second;
        if ((key == "t1" || key == "t2") && grid_.count("t")) return grid_.at("t");
        if (key == "t" && grid_.count("t1")) return grid_.at("t1");
        return parse_list(get(key, fallback));
    }

    // "lo:hi" or "hi" (meaning 1..hi)
    std::pair<std::uint64_t, std::uint64_t> range(const std::string& key, const std::string& fallback) const {
        const auto parts = split(get(key, fallback), ':');
        if (parts.size() == 1) return {1, parse_count(trim(parts[0]), key)};
        if (parts.size() == 2) return {parse_count(trim(parts[0]), key), parse_count(trim(parts[1]), key)};
        throw ParseError("--" + key + " must be lo:hi or hi");
    }

    double precision() const { return number("precision", kDefaultPrecision); }
    unsigned jobs() const { return static_cast<unsigned>(count("jobs", 1)); }

private:
    const RunConfig& c_;
    std::map<std::string, std::vector<double>> grid_;
};

PrimeTable make_table(const Params& p, std::uint64_t needed, SieveMode mode = SieveMode::spf) {
    const std::uint64_t limit = p.count("sieve-limit", std::max<std::uint64_t>(needed, 1000));
    if (mode == SieveMode::spf && limit > PrimeTable::kMaxSpfLimit) mode = SieveMode::primes_only;
    return build_prime_table(limit, mode);
}

MultiplicativeFunction function_arg(const Params& p, const std::string& key, const std::string& fallback,
                                    const PrimeTable& table) {
    return parse_function(p.get(key, fallback), &table);
}

void add_reports(Outcome& out, const std::vector<InequalityReport>& reports) {
    out.table = inequality_table(reports);
    std::size_t fails = 0, indeterminate = 0;
    for (const auto& r : reports) {
        if (r.verdict == Verdict::fails) ++fails;
        if (r.verdict == Verdict::indeterminate) ++indeterminate;
    }
    out.fails = fails > 0;
    out.notes.push_back("reports=" + std::to_string(reports.size()) + " fails=" + std::to_string(fails) +
                        " indeterminate=" + std::to_string(indeterminate));
}

std::int64_t i64(std::uint64_t v) { return static_cast<std::int64_t>(v); }

Outcome cmd_sieve_info(const Params& p) {
    const std::uint64_t limit = p.count("x", 1'000'000);
    const PrimeTable table = make_table(p, limit);
    double theta = 0.0;
    for (auto q : table.primes()) theta += std::log(static_cast<double>(q));
    Outcome out;
    out.table.columns = {"limit", "mode", "prime_count", "largest_prime", "theta"};
    const auto primes = table.primes();
    out.table.add_row({i64(table.limit()), std::string(table.has_spf() ? "spf" : "primes_only"),
                       i64(table.prime_count()), i64(primes.empty() ? 0 : primes.back()), theta});
    return out;
}

Outcome cmd_char_list(const Params& p) {
    const std::uint64_t q = parse_count(p.require("q"), "q");
    Outcome out;
    out.table.columns = {"chi", "index", "conductor", "order", "parity", "primitive"};
    for (const auto& chi : all_characters(q)) {
        const auto inv = character_invariants(chi);
        out.table.add_row({chi.to_string(), i64(chi.index()), i64(inv.conductor), i64(inv.order),
                           static_cast<std::int64_t>(inv.parity), static_cast<std::int64_t>(chi.is_primitive())});
    }
    return out;
}

Outcome cmd_distance(const Params& p) {
    const auto xs = p.counts("x", "1000");
    const PrimeTable table = make_table(p, *std::max_element(xs.begin(), xs.end()));
    const auto f = function_arg(p, "f", "one", table);
    const auto g = parse_function(p.require("g"), &table);
    Outcome out;
    out.table.columns = {"f", "g", "x", "D2", "terms"};
    for (auto x : xs) {
        const auto d = distance(f, g, x, table);
        out.table.add_row({f.to_string(), g.to_string(), i64(x), d.squared, i64(d.terms)});
    }
    return out;
}

Outcome cmd_norm_identity(const Params& p) {
    const std::uint64_t cutoff = p.count("x", kDefaultNormCutoff);
    const PrimeTable table = make_table(p, cutoff);
    const auto f = function_arg(p, "f", "liouville", table);
    const double precision = p.number("precision", 1e-10);
    Outcome out;
    out.table.columns = {"f",         "sigma",        "cutoff",     "norm_squared", "tail_bound",
                         "log_ratio", "series_error", "difference", "consistent"};
    for (double sigma : p.axis("sigma", "1.1,1.5,2")) {
        const auto r = norm_identity(f, sigma, cutoff, table, precision);
        out.fails = out.fails || !r.consistent;
        out.table.add_row({f.to_string(), sigma, i64(cutoff), r.norm_squared, r.tail_bound, r.log_ratio,
                           r.series_error, r.difference, std::string(r.consistent ? "yes" : "no")});
    }
    return out;
}

Outcome cmd_prop1(const Params& p) {
    const PrimeTable table = make_table(p, 1'000'000);
    const auto f = function_arg(p, "f", "one", table);
    const auto g = function_arg(p, "g", "one", table);
    std::vector<InequalityReport> reports;
    for (double sigma : p.axis("sigma", "2")) {
        auto r = check_prop1(f, g, sigma, table, p.precision());
        reports.push_back(r[0]);
        reports.push_back(r[1]);
    }
    Outcome out;
    add_reports(out, reports);
    return out;
}

Outcome cmd_cor2(const Params& p) {
    Outcome out;
    add_reports(out, sweep_cor2(p.axis("sigma", "2"), p.axis("t1", "0"), p.axis("t2", "0"), p.precision(), p.jobs()));
    return out;
}

Outcome cmd_341(const Params& p) {
    std::vector<InequalityReport> reports;
    std::size_t inconsistent = 0;
    for (double sigma : p.axis("sigma", "2"))
        for (double t : p.axis("t", "0")) {
            const auto r = check_341(sigma, t, p.precision());
            reports.push_back(r.report);
            // lhs: margin of the 3-4-1 report, rhs: lhs^2 - rhs^2 of the squared Corollary 2 form
            InequalityReport c;
            c.name = "three_four_one_consistency";
            c.params = {{"sigma", sigma}, {"t", t}};
            c.lhs = r.report.margin;
            c.rhs = r.expanded_square;
            c.margin = r.consistency_tolerance - r.consistency_gap;
            c.budget = 0.0;
            c.verdict = r.consistent ? Verdict::holds : Verdict::fails;
            if (!r.consistent) ++inconsistent;
            reports.push_back(c);
        }
    Outcome out;
    add_reports(out, reports);
    out.notes.push_back("inconsistent=" + std::to_string(inconsistent));
    return out;
}

Outcome cmd_lfun(const Params& p) {
    const auto chi = parse_character(p.require("chi"));
    const auto psi = parse_character(p.require("psi"));
    const bool primitive = p.get("primitive", "0") == "1";
    std::vector<InequalityReport> reports;
    for (double sigma : p.axis("sigma", "2"))
        for (double t1 : p.axis("t1", "0"))
            for (double t2 : p.axis("t2", "0"))
                reports.push_back(check_lfun_triangle(chi, psi, sigma, t1, t2, primitive, p.precision()));
    Outcome out;
    add_reports(out, reports);
    if (primitive) out.notes.push_back("primitive product character: not covered by Proposition 1");
    return out;
}

Outcome cmd_deriv(const Params& p) {
    const PrimeTable table = make_table(p, 1'000'000);
    const auto f = function_arg(p, "f", "one", table);
    const std::string sign = p.get("sign", "both");
    std::vector<int> signs;
    if (sign == "both")
        signs = {1, -1};
    else if (sign == "+1" || sign == "1" || sign == "+")
        signs = {1};
    else if (sign == "-1" || sign == "-")
        signs = {-1};
    else
        throw ParseError("--sign must be +1, -1 or both");
    std::vector<InequalityReport> reports;
    for (double sigma : p.axis("sigma", "2"))
        for (int s : signs) {
            auto r = check_derivative_ineq(f, sigma, s, table, p.precision());
            reports.push_back(r.squared);
            reports.push_back(r.triangle);
        }
    Outcome out;
    add_reports(out, reports);
    return out;
}

Outcome cmd_pv_scan(const Params& p) {
    const auto [lo, hi] = p.range("q", "3:100");
    const auto profiles = pv_scan(lo, hi, p.jobs());
    Outcome out;
    out.table = pv_table(profiles);
    double max_ratio = 0.0;
    for (const auto& pr : profiles) max_ratio = std::max(max_ratio, pr.ratio);
    out.notes.push_back("characters=" + std::to_string(profiles.size()) + " max_ratio=" + format_double(max_ratio));
    return out;
}

Outcome cmd_dchi(const Params& p) {
    const auto chi = parse_character(p.require("chi"));
    const double t = p.number("t", 0.0);
    Outcome out;
    out.table.columns = {"chi", "x", "t", "sum_re", "sum_im", "ratio"};
    for (auto x : p.counts("x", "100000")) {
        const auto s = d_chi_sum(chi, x, t);
        const double ratio = chi.modulus() >= 2 ? dchi_ratio(chi, x, t) : std::numeric_limits<double>::quiet_NaN();
        out.table.add_row({chi.to_string(), i64(x), t, s.real(), s.imag(), ratio});
    }
    return out;
}

Outcome cmd_prop6(const Params& p) {
    const auto [lo, hi] = p.range("q", "3:100");
    const auto xs = p.counts("x", "1000000");
    const PrimeTable table = make_table(p, *std::max_element(xs.begin(), xs.end()), SieveMode::primes_only);
    const auto scan = prop6_scan(lo, hi, xs, table, p.jobs(), p.number("t", 0.0));
    Outcome out;
    out.table = scan_table(scan.rows);
    out.notes.push_back("rows=" + std::to_string(scan.rows.size()) +
                        " min_implied_c=" + format_double(scan.min_implied_c));
    return out;
}

Outcome cmd_lemma(const Params& p) {
    LemmaScanConfig cfg;
    cfg.lemma = static_cast<int>(p.count("lemma", 3));
    const auto [lo, hi] = p.range("q", "3:30");
    cfg.q_lo = lo;
    cfg.q_hi = hi;
    cfg.y = p.count("y", 1'000'000);
    cfg.A = p.number("A", cfg.lemma == 5 ? 3.0 : 1.0);
    cfg.g = static_cast<unsigned>(p.count("g", 0));
    cfg.jobs = p.jobs();
    const PrimeTable table = make_table(p, cfg.y, SieveMode::primes_only);
    Outcome out;
    out.table = lemma_table(lemma_distance_scan(cfg, table));
    out.notes.push_back("exploratory: o(1) terms make these rows diagnostic only");
    return out;
}

Outcome cmd_halasz(const Params& p) {
    const std::uint64_t x = p.count("x", 100'000);
    const PrimeTable table = make_table(p, x);
    const auto f = function_arg(p, "f", "liouville", table);
    GridConfig grid;
    grid.spacing = p.number("spacing", 0.0);
    grid.jobs = p.jobs();
    const auto r = halasz_report(f, x, p.number("T", 10.0), table, grid);
    Outcome out;
    out.table = halasz_table({r});
    out.notes.push_back("lipschitz_slack=" + format_double(r.slack));
    if (r.heuristic_used_real_part) out.notes.push_back("heuristic uses Re f(p): f is complex on primes");
    return out;
}

Outcome cmd_hall(const Params& p) {
    const std::uint64_t x = p.count("x", 100'000);
    const PrimeTable table = make_table(p, x);
    Outcome out;
    out.table.columns = {"f", "x", "mean_abs", "prime_sum", "denominator", "ratio"};
    auto add = [&](const std::string& label, const HallReport& r) {
        out.table.add_row({label, i64(x), r.mean_abs, r.prime_sum, r.denominator, r.ratio});
    };
    if (p.has("family")) {
        const std::uint64_t seed = p.count("seed", 0);
        const auto fam = hall_family(p.count("family", 100), seed, x, table, p.jobs());
        for (std::size_t i = 0; i < fam.members.size(); ++i)
            add("rand:real-signed:" + std::to_string(seed + i), fam.members[i]);
        out.notes.push_back("max_ratio=" + format_double(fam.max_ratio));
    } else {
        const auto f = function_arg(p, "f", "liouville", table);
        add(f.to_string(), hall_real_diagnostic(f, x, table));
    }
    return out;
}

Outcome cmd_mean(const Params& p) {
    const auto xs = p.counts("x", "1000000");
    const PrimeTable table = make_table(p, *std::max_element(xs.begin(), xs.end()));
    const auto f = function_arg(p, "f", "one", table);
    Outcome out;
    out.table.columns = {"f", "x", "mean_re", "mean_im", "abs"};
    for (auto x : xs) {
        const auto m = mean_value(f, x, table);
        out.table.add_row({f.to_string(), i64(x), m.real(), m.imag(), std::abs(m)});
    }
    return out;
}

Outcome cmd_progression(const Params& p) {
    const std::uint64_t x = p.count("x", 1'000'000);
    const std::uint64_t q = parse_count(p.require("q"), "q");
    const PrimeTable table = make_table(p, x);
    const auto f = function_arg(p, "f", "one", table);
    Outcome out;
    out.table.columns = {"f", "x", "q", "a", "mean_re", "mean_im", "abs"};
    for (auto a : p.counts("a", "1")) {
        const auto m = progression_mean(f, x, q, a, table);
        out.table.add_row({f.to_string(), i64(x), i64(q), i64(a), m.real(), m.imag(), std::abs(m)});
    }
    return out;
}

const std::map<std::string, std::function<Outcome(const Params&)>>& dispatch() {
    static const std::map<std::string, std::function<Outcome(const Params&)>> table = {
        {"sieve-info", cmd_sieve_info}, {"char-list", cmd_char_list},
        {"distance", cmd_distance},     {"norm-identity", cmd_norm_identity},
        {"prop1", cmd_prop1},           {"cor2", cmd_cor2},
        {"three-four-one", cmd_341},    {"lfun-triangle", cmd_lfun},
        {"deriv-ineq", cmd_deriv},      {"pv-scan", cmd_pv_scan},
        {"dchi", cmd_dchi},             {"prop6-scan", cmd_prop6},
        {"lemma-scan", cmd_lemma},      {"halasz", cmd_halasz},
        {"hall", cmd_hall},             {"mean", cmd_mean},
        {"progression", cmd_progression},
    };
    return table;
}

const std::vector<std::string> kFlags = {"sigma", "t1",  "t2",   "t",      "x",         "q",           "chi",
                                         "psi",   "f",   "g",    "T",      "grid",      "precision",   "sieve-limit",
                                         "seed",  "jobs", "out", "format", "config",    "sign",        "a",
                                         "lemma", "y",   "A",    "family", "spacing"};

}  // namespace

std::string RunConfig::serialize() const {
    std::string s = "command=" + command + "\n";
    for (const auto& [k, v] : params)
        if (k != "config") s += k + "=" + v + "\n";
    return s;
}

RunConfig RunConfig::parse(const std::string& text) {
    RunConfig c;
    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("config line " + std::to_string(number) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key == "command")
            c.command = value;
        else
            c.params[key] = value;
    }
    return c;
}

const std::vector<std::string>& commands() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, _] : dispatch()) v.push_back(k);
        return v;
    }();
    return names;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& log) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        const auto it = dispatch().find(config.command);
        if (it == dispatch().end()) throw ParseError("unknown command '" + config.command + "'");
        const std::string format = config.params.count("format") ? config.params.at("format") : "csv";
        if (format != "csv" && format != "json") throw ParseError("--format must be csv or json");
        const Params params(config);
        outcome = it->second(params);

        const std::string body = format == "json" ? outcome.table.to_json() : outcome.table.to_csv();
        const auto out_it = config.params.find("out");
        if (out_it == config.params.end()) {
            out << body;
        } else {
            std::ofstream file(out_it->second, std::ios::binary);
            if (!file) throw ParseError("cannot write '" + out_it->second + "'");
            file << body;
            const double seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            std::ofstream manifest(out_it->second + ".manifest", std::ios::binary);
            manifest << "# pretend " << PRETEND_VERSION << "\n";
            manifest << "# wall_time_seconds=" << format_double(seconds) << "\n";
            for (const auto& note : outcome.notes) manifest << "# " << note << "\n";
            manifest << config.serialize();
        }
    } catch (const Error& e) {
        log << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::bad_alloc&) {
        log << "error: out of memory\n";
        return kExitInput;
    }
    for (const auto& note : outcome.notes) log << config.command << ": " << note << "\n";
    return outcome.fails ? kExitFails : kExitOk;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& log) {
    CLI::App app{"Pretentious distances, Dirichlet series and mean values of multiplicative functions"};
    std::string command;
    app.add_option("command", command, "one of: sieve-info char-list distance norm-identity prop1 cor2 "
                                       "three-four-one lfun-triangle deriv-ineq pv-scan dchi prop6-scan "
                                       "lemma-scan halasz hall mean progression");
    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option*> options;
    for (const auto& flag : kFlags) options[flag] = app.add_option("--" + flag, values[flag]);
    bool primitive = false;
    auto* primitive_flag = app.add_flag("--primitive", primitive, "use the primitive product character");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, log);
    } catch (const CLI::ParseError& e) {
        log << "error: " << e.what() << "\n";
        return kExitInput;
    }

    RunConfig config;
    if (options["config"]->count() > 0) {
        std::ifstream in(values["config"], std::ios::binary);
        if (!in) {
            log << "error: cannot read config '" << values["config"] << "'\n";
            return kExitInput;
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        try {
            config = RunConfig::parse(buffer.str());
        } catch (const Error& e) {
            log << "error: " << e.what() << "\n";
            return kExitInput;
        }
    }
    if (!command.empty()) config.command = command;
    for (const auto& flag : kFlags)
        if (flag != "config" && options[flag]->count() > 0) config.params[flag] = values[flag];
    if (primitive_flag->count() > 0) config.params["primitive"] = primitive ? "1" : "0";
    if (config.command.empty()) {
        log << "error: no command given\n" << app.help();
        return kExitInput;
    }
    return run(config, out, log);
}

}  // namespace pretend::cli

#include "pretend/halasz.hpp"

#include <algorithm>
#include <cmath>

#include "pretend/errors.hpp"
#include "pretend/parallel.hpp"

namespace pretend {

namespace {

using cd = std::complex<double>;

constexpr std::uint64_t kBlock = 1 << 16;

void require_factorable(std::uint64_t x, const PrimeTable& table, const char* what) {
    if (x < 1) throw DomainError(std::string(what) + ": x must be >= 1");
    if (x > table.limit())
        throw CapacityError(std::string(what) + ": x = " + std::to_string(x) + " exceeds the prime table limit " +
                            std::to_string(table.limit()));
    if (!table.has_spf()) throw CapacityError(std::string(what) + ": needs a prime table in spf mode");
}

// f(1..x) via the smallest-prime-factor recurrence.
std::vector<cd> dense_values(const MultiplicativeFunction& f, std::uint64_t x, const PrimeTable& table) {
    std::vector<cd> v(x + 1, cd(0.0, 0.0));
    v[1] = 1.0;
    const auto primes = table.primes_upto(x);
    const auto fp = f.prime_values(primes);
    for (std::size_t i = 0; i < primes.size(); ++i) v[primes[i]] = fp[i];
    for (std::uint64_t n = 4; n <= x; ++n) {
        const std::uint64_t p = table.smallest_factor(n);
        if (p != n) v[n] = v[p] * v[n / p];
    }
    return v;
}

// Sum in fixed blocks of kBlock terms.
cd block_sum(const std::vector<cd>& v, std::uint64_t lo, std::uint64_t hi) {
    cd total = 0.0;
    for (std::uint64_t start = lo; start <= hi; start += kBlock) {
        cd block = 0.0;
        const std::uint64_t end = std::min(hi, start + kBlock - 1);
        for (std::uint64_t n = start; n <= end; ++n) block += v[n];
        total += block;
    }
    return total;
}

double prime_deficit(const MultiplicativeFunction& f, std::uint64_t x, const PrimeTable& table) {
    const auto primes = table.primes_upto(x);
    const auto fp = f.prime_values(primes);
    double acc = 0.0;
    for (std::size_t i = primes.size(); i-- > 0;) acc += (1.0 - fp[i].real()) / static_cast<double>(primes[i]);
    return acc;
}

}  // namespace

cd mean_value(const MultiplicativeFunction& f, std::uint64_t x, const PrimeTable& table) {
    require_factorable(x, table, "mean_value");
    const auto v = dense_values(f, x, table);
    return block_sum(v, 1, x) / static_cast<double>(x);
}

HeuristicValue heuristic_value(const MultiplicativeFunction& f, std::uint64_t x, const PrimeTable& table) {
    if (x > table.limit()) throw CapacityError("heuristic_value: x exceeds the prime table limit");
    return {std::exp(-prime_deficit(f, x, table)), !f.real_on_primes()};
}

HallReport hall_real_diagnostic(const MultiplicativeFunction& f, std::uint64_t x, const PrimeTable& table) {
    if (!f.real_on_primes()) throw DomainError("hall_real_diagnostic needs a real-valued function");
    const double mean_abs = std::abs(mean_value(f, x, table));
    const double sum = prime_deficit(f, x, table);
    const double denom = std::exp(-kHallKappa * sum);
    return {mean_abs, sum, denom, mean_abs / denom};
}

HallFamily hall_family(std::size_t count, std::uint64_t seed, std::uint64_t x, const PrimeTable& table,
                       unsigned jobs) {
    HallFamily out{std::vector<HallReport>(count), 0.0};
    parallel_for(count, jobs, [&](std::size_t i) {
        const auto f = random_function(seed + i, RandomMode::real_signed, table);
        out.members[i] = hall_real_diagnostic(f, x, table);
    });
    for (const auto& m : out.members) out.max_ratio = std::max(out.max_ratio, m.ratio);
    return out;
}

MeanValueReport halasz_report(const MultiplicativeFunction& f, std::uint64_t x, double T, const PrimeTable& table,
                              const GridConfig& grid) {
    MeanValueReport r;
    r.f = f.to_string();
    r.x = x;
    r.T = T;
    r.mean = mean_value(f, x, table);
    const auto h = heuristic_value(f, x, table);
    r.heuristic = h.value;
    r.heuristic_used_real_part = h.used_real_part;
    const auto m = halasz_M(f, x, T, table, grid);
    r.M = m.M;
    r.t_star = m.t_star;
    r.slack = m.slack;
    r.halasz_rhs = (1.0 + m.M) * std::exp(-m.M) + 1.0 / std::sqrt(T);
    r.ratio_heur = std::abs(r.mean) / r.heuristic;
    r.ratio_halasz = std::abs(r.mean) / r.halasz_rhs;
    return r;
}

ResultTable halasz_table(const std::vector<MeanValueReport>& reports) {
    ResultTable table;
    table.columns = {"f",         "x", "T",          "mean_re",    "mean_im",     "heuristic",
                     "M",         "t_star", "halasz_rhs", "ratio_heur", "ratio_halasz"};
    for (const auto& r : reports)
        table.add_row({r.f, static_cast<std::int64_t>(r.x), r.T, r.mean.real(), r.mean.imag(), r.heuristic, r.M,
                       r.t_star, r.halasz_rhs, r.ratio_heur, r.ratio_halasz});
    return table;
}

cd progression_mean(const MultiplicativeFunction& f, std::uint64_t x, std::uint64_t q, std::uint64_t a,
                    const PrimeTable& table) {
    if (q < 1) throw DomainError("progression_mean: q must be >= 1");
    if (gcd_u64(a % q, q) != 1) throw DomainError("progression_mean: gcd(a, q) must be 1");
    if (q >= x) throw DomainError("progression_mean: needs q < x");
    require_factorable(x, table, "progression_mean");
    std::uint64_t start = a % q;
    if (start == 0) start = q;
    const auto primes = table.primes_upto(x);
    const auto fp = f.prime_values(primes);
    cd total = 0.0, block = 0.0;
    std::uint64_t in_block = 0;
    for (std::uint64_t n = start; n <= x; n += q) {
        // factor through the spf chain, looking prime values up by index
        cd value = 1.0;
        std::uint64_t m = n;
        while (m > 1) {
            const std::uint64_t p = table.smallest_factor(m);
            const auto it = std::lower_bound(primes.begin(), primes.end(), static_cast<std::uint32_t>(p));
            value *= fp[static_cast<std::size_t>(it - primes.begin())];
            m /= p;
        }
        block += value;
        if (++in_block == kBlock) {
            total += block;
            block = 0.0;
            in_block = 0;
        }
    }
    total += block;
    return total * (static_cast<double>(q) / static_cast<double>(x));
}

}  // namespace pretend

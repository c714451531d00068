#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "pretend/csv.hpp"
#include "pretend/distance.hpp"
#include "pretend/multfunc.hpp"
#include "pretend/ntheory.hpp"

namespace pretend {

// Hall's constant as printed (0.3286...), truncated.
inline constexpr double kHallKappa = 0.3286;

// (1/x) sum_{n <= x} f(n). Values come from the recurrence
// f(n) = f(spf(n)) f(n / spf(n)); the table needs spf mode.
std::complex<double> mean_value(const MultiplicativeFunction& f, std::uint64_t x, const PrimeTable& table);

struct HeuristicValue {
    double value;
    // f is complex on some prime, so Re f(p) was used.
    bool used_real_part;
};

// exp(-sum_{p <= x} (1 - Re f(p)) / p)
HeuristicValue heuristic_value(const MultiplicativeFunction& f, std::uint64_t x, const PrimeTable& table);

struct HallReport {
    double mean_abs;
    double prime_sum;    // sum_{p <= x} (1 - f(p)) / p
    double denominator;  // exp(-kappa prime_sum)
    double ratio;
};

// Real-valued f only; DomainError otherwise.
HallReport hall_real_diagnostic(const MultiplicativeFunction& f, std::uint64_t x, const PrimeTable& table);

struct HallFamily {
    std::vector<HallReport> members;
    double max_ratio;
};

// `count` random real-signed functions with seeds seed, seed+1, ...
HallFamily hall_family(std::size_t count, std::uint64_t seed, std::uint64_t x, const PrimeTable& table,
                       unsigned jobs);

struct MeanValueReport {
    std::string f;
    std::uint64_t x;
    double T;
    std::complex<double> mean;
    double heuristic;
    bool heuristic_used_real_part;
    double M;
    double t_star;
    double slack;
    double halasz_rhs;  // (1 + M) e^{-M} + 1/sqrt(T)
    double ratio_heur;
    double ratio_halasz;
};

MeanValueReport halasz_report(const MultiplicativeFunction& f, std::uint64_t x, double T, const PrimeTable& table,
                              const GridConfig& grid = {});

// f,x,T,mean_re,mean_im,heuristic,M,t_star,halasz_rhs,ratio_heur,ratio_halasz
ResultTable halasz_table(const std::vector<MeanValueReport>& reports);

// (q/x) sum_{n <= x, n = a mod q} f(n). gcd(a, q) > 1 -> DomainError; needs q < x.
std::complex<double> progression_mean(const MultiplicativeFunction& f, std::uint64_t x, std::uint64_t q,
                                      std::uint64_t a, const PrimeTable& table);

}  // namespace pretend

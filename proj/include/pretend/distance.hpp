#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "pretend/multfunc.hpp"
#include "pretend/ntheory.hpp"

namespace pretend {

// |z| may exceed 1 by this much (round-off in unimodular archetypes).
inline constexpr double kUnitTolerance = 1e-12;

// eta(z)^2 = a (1 - Re z). Throws DomainError when |z| > 1 + kUnitTolerance or a < 0.
double eta(std::complex<double> z, double a);

// Weights a_q on prime powers q = p^k.
//   sigma_weights: a_q = Lambda(q) / (q^sigma log q) = 1 / (k p^{k sigma}), q <= cutoff
//   prime_weights: a_q = 1/p for primes p <= x, 0 otherwise
struct WeightScheme {
    enum class Kind { sigma_weights, prime_weights };
    Kind kind = Kind::prime_weights;
    double sigma = 2.0;
    std::uint64_t cutoff = 0;

    static WeightScheme sigma_weights(double sigma, std::uint64_t cutoff);
    static WeightScheme prime_weights(std::uint64_t x);

    double weight(std::uint64_t p, unsigned k) const;
};

// sum_q a_q (1 - Re f(q)) over the scheme's support, primes in descending order.
double weighted_norm_squared(const MultiplicativeFunction& f, const WeightScheme& weights, const PrimeTable& table);

inline constexpr std::uint64_t kDefaultNormCutoff = 1000000;

struct NormResult {
    double norm;
    double norm_squared;
    // Bound on the omitted mass sum_{q > cutoff} a_q (1 - Re f(q)).
    double tail_bound;
    std::uint64_t cutoff;
};

// Lambda-weighted norm truncated at prime powers <= cutoff. The tail bound is
// min(2 (log zeta(sigma) - partial weight sum), 2 * 1.03883 sigma cutoff^{1-sigma} / ((sigma-1) log cutoff)),
// with log zeta(sigma) taken from a certified upper enclosure.
NormResult sigma_norm(const MultiplicativeFunction& f, double sigma, std::uint64_t cutoff, const PrimeTable& table);

struct NormIdentity {
    double norm_squared;   // truncated sum
    double tail_bound;
    double log_ratio;      // log(zeta(sigma) / |F(sigma)|) from certified series values
    double series_error;   // error of log_ratio propagated from the series enclosures
    double difference;     // norm_squared - log_ratio
    bool consistent;       // |difference| <= tail_bound + series_error + 1e-9
};

// Compares the truncated norm with log(zeta(sigma)/|F(sigma)|).
NormIdentity norm_identity(const MultiplicativeFunction& f, double sigma, std::uint64_t cutoff,
                           const PrimeTable& table, double precision = 1e-10);

struct DistanceResult {
    double squared;
    std::uint64_t x;
    std::size_t terms;
};

// D(f, g; x)^2 = sum_{p <= x} (1 - Re f(p) conj(g(p))) / p, summed from the
// largest prime down.
DistanceResult distance(const MultiplicativeFunction& f, const MultiplicativeFunction& g, std::uint64_t x,
                        const PrimeTable& table);

struct GridConfig {
    // Grid spacing; 0 selects min(0.01, 1 / log x).
    double spacing = 0.0;
    // Golden-section steps inside the best grid cell.
    unsigned refine_steps = 60;
    unsigned jobs = 1;
    bool keep_grid = false;
};

struct HalaszResult {
    double M;
    double t_star;
    // The true minimum over |t| <= 2T is at least grid_min - slack, with
    // slack = (h/2) sum_{p <= x} log p / p + 1e-12 sum_{p <= x} 1/p; the second
    // term covers the rotated evaluation of the grid values.
    double slack;
    double grid_min;
    double spacing;
    std::size_t grid_points;
    // (t, D(t)) for every grid point when keep_grid is set.
    std::vector<std::pair<double, double>> grid;
};

// D(t) = sum_{p <= x} (1 - Re f(p) p^{-it}) / p
double halasz_D(const MultiplicativeFunction& f, std::uint64_t x, double t, const PrimeTable& table);

// M(x, T) = min_{|t| <= 2T} D(t): uniform grid, then refinement in the best
// cell. Grid points are t_k = k h for |k| <= 2T/h, computed as k/n when
// h = 1/n for an integer n so decimal grid points are hit exactly. Ties go to
// the smallest |t|, then the smallest t.
HalaszResult halasz_M(const MultiplicativeFunction& f, std::uint64_t x, double T, const PrimeTable& table,
                      const GridConfig& grid = {});

}  // namespace pretend

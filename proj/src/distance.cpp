#include "pretend/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pretend/errors.hpp"
#include "pretend/parallel.hpp"
#include "pretend/series.hpp"

namespace pretend {

namespace {

void require_covered(std::uint64_t x, const PrimeTable& table, const char* what) {
    if (x > table.limit())
        throw CapacityError(std::string(what) + ": cutoff " + std::to_string(x) + " exceeds the prime table limit " +
                            std::to_string(table.limit()));
}

// Prime data for D(t): base values, log p, 1/p.
struct TwistData {
    std::vector<std::complex<double>> base;
    std::vector<double> log_p;
    std::vector<double> inv_p;
    double twist;
};

TwistData twist_data(const MultiplicativeFunction& f, std::uint64_t x, const PrimeTable& table) {
    const auto primes = table.primes_upto(x);
    TwistData d;
    d.twist = f.twist();
    d.base.reserve(primes.size());
    d.log_p.reserve(primes.size());
    d.inv_p.reserve(primes.size());
    for (auto p : primes) {
        d.base.push_back(f.base_at_prime(p));
        d.log_p.push_back(std::log(static_cast<double>(p)));
        d.inv_p.push_back(1.0 / static_cast<double>(p));
    }
    return d;
}

double eval_D(const TwistData& d, double t) {
    const double shift = d.twist - t;
    double acc = 0.0;
    for (std::size_t i = d.base.size(); i-- > 0;) {
        const std::complex<double> z = shift == 0.0 ? d.base[i] : d.base[i] * std::polar(1.0, shift * d.log_p[i]);
        acc += std::max(0.0, 1.0 - z.real()) * d.inv_p[i];
    }
    return acc;
}

// Grid points per rotation block. Within a block p^{-it} advances by one
// complex multiplication per point, restarting from an exact value at the
// block's first point.
constexpr std::size_t kRotationBlock = 256;
// Per-term bound on |computed - exact| for rotated values (256 products, each
// off by a few ulps, plus the grid step's own rounding times log p).
constexpr double kRotationError = 1e-12;

// D at t0 + j step for j < count, primes descending as in eval_D.
void eval_D_block(const TwistData& d, double t0, double step, std::size_t count, double* out) {
    std::fill(out, out + count, 0.0);
    for (std::size_t i = d.base.size(); i-- > 0;) {
        std::complex<double> z = d.base[i] * std::polar(1.0, (d.twist - t0) * d.log_p[i]);
        const std::complex<double> w = std::polar(1.0, -step * d.log_p[i]);
        const double ip = d.inv_p[i];
        for (std::size_t j = 0; j < count; ++j) {
            out[j] += std::max(0.0, 1.0 - z.real()) * ip;
            z *= w;
        }
    }
}

bool better(double value, double t, double best_value, double best_t) {
    if (value != best_value) return value < best_value;
    if (std::abs(t) != std::abs(best_t)) return std::abs(t) < std::abs(best_t);
    return t < best_t;
}

}  // namespace

double eta(std::complex<double> z, double a) {
    if (!(a >= 0.0)) throw DomainError("eta: weight must be nonnegative");
    if (!(std::abs(z) <= 1.0 + kUnitTolerance)) throw DomainError("eta: |z| exceeds 1");
    return std::sqrt(a * std::max(0.0, 1.0 - z.real()));
}

WeightScheme WeightScheme::sigma_weights(double sigma, std::uint64_t cutoff) {
    if (!(sigma > 1.0)) throw DomainError("sigma weights need sigma > 1");
    return {Kind::sigma_weights, sigma, cutoff};
}

WeightScheme WeightScheme::prime_weights(std::uint64_t x) { return {Kind::prime_weights, 0.0, x}; }

double WeightScheme::weight(std::uint64_t p, unsigned k) const {
    if (kind == Kind::prime_weights) return (k == 1 && p <= cutoff) ? 1.0 / static_cast<double>(p) : 0.0;
    const double q = std::pow(static_cast<double>(p), static_cast<double>(k));
    if (q > static_cast<double>(cutoff)) return 0.0;
    return 1.0 / (k * std::pow(q, sigma));
}

double weighted_norm_squared(const MultiplicativeFunction& f, const WeightScheme& weights, const PrimeTable& table) {
    require_covered(weights.cutoff, table, "norm");
    const auto primes = table.primes_upto(weights.cutoff);
    const auto values = f.prime_values(primes);
    const double cutoff = static_cast<double>(weights.cutoff);
    double acc = 0.0;
    for (std::size_t i = primes.size(); i-- > 0;) {
        const double p = primes[i];
        if (weights.kind == WeightScheme::Kind::prime_weights) {
            acc += std::max(0.0, 1.0 - values[i].real()) / p;
            continue;
        }
        std::complex<double> power = values[i];
        double q = p;
        for (unsigned k = 1; q <= cutoff; ++k) {
            acc += std::max(0.0, 1.0 - power.real()) / (k * std::pow(q, weights.sigma));
            power *= values[i];
            q *= p;
        }
    }
    return acc;
}

NormResult sigma_norm(const MultiplicativeFunction& f, double sigma, std::uint64_t cutoff, const PrimeTable& table) {
    if (!(sigma > 1.0)) throw DomainError("sigma_norm requires sigma > 1");
    if (cutoff < 2) throw DomainError("sigma_norm requires cutoff >= 2");
    const WeightScheme weights = WeightScheme::sigma_weights(sigma, cutoff);
    const double squared = weighted_norm_squared(f, weights, table);

    const double c = static_cast<double>(cutoff);
    double tail = 2.0 * 1.03883 * sigma * std::pow(c, 1.0 - sigma) / ((sigma - 1.0) * std::log(c));
    if (sigma >= 1.0 + kDeltaMin) {
        // partial sum of the weights themselves
        double total = 0.0;
        const auto primes = table.primes_upto(cutoff);
        for (std::size_t i = primes.size(); i-- > 0;) {
            const double p = primes[i];
            double q = p;
            for (unsigned k = 1; q <= c; ++k, q *= p) total += 1.0 / (k * std::pow(q, sigma));
        }
        const CertifiedValue z = zeta({sigma, 0.0}, 1e-12);
        const double log_zeta_upper = std::log(z.value.real() + z.error());
        tail = std::min(tail, 2.0 * std::max(0.0, log_zeta_upper - total));
    }
    return {std::sqrt(squared), squared, tail, cutoff};
}

NormIdentity norm_identity(const MultiplicativeFunction& f, double sigma, std::uint64_t cutoff,
                           const PrimeTable& table, double precision) {
    const NormResult norm = sigma_norm(f, sigma, cutoff, table);
    const CertifiedValue z = zeta({sigma, 0.0}, precision);
    const CertifiedValue F = dirichlet_F(f, {sigma, 0.0}, precision, table, Reach::best_effort);
    const double mz = std::abs(z.value), mf = std::abs(F.value);
    if (!(mz > z.error()) || !(mf > F.error())) throw PrecisionError("norm_identity: series enclosure contains 0");
    NormIdentity out;
    out.norm_squared = norm.norm_squared;
    out.tail_bound = norm.tail_bound;
    out.log_ratio = std::log(mz) - std::log(mf);
    out.series_error = -std::log1p(-z.error() / mz) - std::log1p(-F.error() / mf) +
                       4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(out.log_ratio));
    out.difference = out.norm_squared - out.log_ratio;
    out.consistent = std::abs(out.difference) <= out.tail_bound + out.series_error + 1e-9;
    return out;
}

DistanceResult distance(const MultiplicativeFunction& f, const MultiplicativeFunction& g, std::uint64_t x,
                        const PrimeTable& table) {
    if (x < 2) throw DomainError("distance requires x >= 2");
    require_covered(x, table, "distance");
    const auto primes = table.primes_upto(x);
    const auto fv = f.prime_values(primes);
    const auto gv = g.prime_values(primes);
    double acc = 0.0;
    for (std::size_t i = primes.size(); i-- > 0;)
        acc += std::max(0.0, 1.0 - (fv[i] * std::conj(gv[i])).real()) / static_cast<double>(primes[i]);
    return {acc, x, primes.size()};
}

double halasz_D(const MultiplicativeFunction& f, std::uint64_t x, double t, const PrimeTable& table) {
    require_covered(x, table, "halasz");
    return eval_D(twist_data(f, x, table), t);
}

HalaszResult halasz_M(const MultiplicativeFunction& f, std::uint64_t x, double T, const PrimeTable& table,
                      const GridConfig& grid) {
    if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("halasz_M requires T > 0");
    if (x < 2) throw DomainError("halasz_M requires x >= 2");
    require_covered(x, table, "halasz");
    const TwistData data = twist_data(f, x, table);

    double h = grid.spacing > 0.0 ? grid.spacing : std::min(0.01, 1.0 / std::log(static_cast<double>(x)));
    const double n = std::round(1.0 / h);
    const bool reciprocal = n >= 1.0 && std::abs(n * h - 1.0) < 1e-12;
    const double span = 2.0 * T;
    const auto K = static_cast<std::int64_t>(std::floor(span / h + 1e-9));
    if (K > 50'000'000) throw CapacityError("halasz grid too fine: " + std::to_string(2 * K + 1) + " points");

    std::vector<double> ts;
    ts.reserve(2 * K + 3);
    auto point = [&](std::int64_t k) { return reciprocal ? static_cast<double>(k) / n : static_cast<double>(k) * h; };
    if (point(-K) > -span) ts.push_back(-span);
    for (std::int64_t k = -K; k <= K; ++k) ts.push_back(point(k));
    if (point(K) < span) ts.push_back(span);

    std::vector<double> values(ts.size());
    // ts = [optional -span] + uniform points k = -K..K + [optional span]
    const std::size_t first = point(-K) > -span ? 1 : 0;
    const std::size_t uniform = static_cast<std::size_t>(2 * K + 1);
    const double step = reciprocal ? 1.0 / n : h;
    const std::size_t blocks = (uniform + kRotationBlock - 1) / kRotationBlock;
    parallel_for(blocks, grid.jobs, [&](std::size_t b) {
        const std::size_t lo = first + b * kRotationBlock;
        const std::size_t count = std::min(kRotationBlock, first + uniform - lo);
        eval_D_block(data, ts[lo], step, count, values.data() + lo);
    });
    for (std::size_t i = 0; i < ts.size(); ++i)
        if (i < first || i >= first + uniform || ts[i] == data.twist) values[i] = eval_D(data, ts[i]);

    std::size_t best = 0;
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (better(values[i], ts[i], values[best], ts[best])) best = i;

    HalaszResult out;
    out.grid_min = values[best];
    out.M = eval_D(data, ts[best]);
    out.t_star = ts[best];
    out.spacing = h;
    out.grid_points = ts.size();

    if (out.M > 0.0 && grid.refine_steps > 0) {
        const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
        double lo = std::max(-span, ts[best] - h), hi = std::min(span, ts[best] + h);
        double c = hi - invphi * (hi - lo), d = lo + invphi * (hi - lo);
        double fc = eval_D(data, c), fd = eval_D(data, d);
        for (unsigned step = 0; step < grid.refine_steps; ++step) {
            if (fc <= fd) {
                hi = d;
                d = c;
                fd = fc;
                c = hi - invphi * (hi - lo);
                fc = eval_D(data, c);
            } else {
                lo = c;
                c = d;
                fc = fd;
                d = lo + invphi * (hi - lo);
                fd = eval_D(data, d);
            }
        }
        const double tr = fc <= fd ? c : d;
        const double vr = std::min(fc, fd);
        if (vr < out.M) {
            out.M = vr;
            out.t_star = tr;
        }
    }

    double lipschitz = 0.0, mass = 0.0;
    for (std::size_t i = data.log_p.size(); i-- > 0;) {
        lipschitz += data.log_p[i] * data.inv_p[i];
        mass += data.inv_p[i];
    }
    out.slack = 0.5 * h * lipschitz + kRotationError * mass;
    if (grid.keep_grid) {
        out.grid.reserve(ts.size());
        for (std::size_t i = 0; i < ts.size(); ++i) out.grid.emplace_back(ts[i], values[i]);
    }
    return out;
}

}  // namespace pretend

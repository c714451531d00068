#pragma once

// Independent reference computations for the unit and acceptance tests. None
// of these call into the library's sieves, series or scan code.

#include <cmath>
#include <complex>
#include <cstdint>
#include <algorithm>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

inline bool trial_is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> trial_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; n <= limit; ++n)
        if (trial_is_prime(n)) out.push_back(n);
    return out;
}

// Lambda(n) by trial division.
inline double trial_lambda(std::uint64_t n) {
    if (n < 2) return 0.0;
    std::uint64_t p = 2;
    while (p * p <= n && n % p != 0) ++p;
    if (n % p != 0) p = n;
    while (n % p == 0) n /= p;
    return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

// Ordered k-tuples with product n, by recursion over divisors.
inline std::uint64_t brute_dk(std::uint64_t n, unsigned k) {
    if (k == 1) return 1;
    std::uint64_t total = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) total += brute_dk(n / d, k - 1);
    return total;
}

// Plain Eratosthenes list of Lambda(n) for n <= N.
inline std::vector<double> lambda_table(std::uint64_t N) {
    std::vector<double> lam(N + 1, 0.0);
    std::vector<bool> composite(N + 1, false);
    for (std::uint64_t p = 2; p <= N; ++p) {
        if (composite[p]) continue;
        for (std::uint64_t m = p * p; m <= N; m += p) composite[m] = true;
        const double lp = std::log(static_cast<double>(p));
        for (std::uint64_t q = p; q <= N; q *= p) {
            lam[q] = lp;
            if (q > N / p) break;
        }
    }
    return lam;
}

inline std::vector<std::uint64_t> sieve_primes(std::uint64_t N) {
    std::vector<bool> composite(N + 1, false);
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= N; ++p) {
        if (composite[p]) continue;
        out.push_back(p);
        for (std::uint64_t m = p * p; m <= N; m += p) composite[m] = true;
    }
    return out;
}

// Enclosure of zeta(sigma), sigma > 1 real: sum_{n <= N} n^{-sigma} (small
// terms first) plus the integral tail bounds
// (N+1)^{1-sigma}/(sigma-1) <= sum_{n > N} n^{-sigma} <= N^{1-sigma}/(sigma-1).
struct Interval {
    double lo;
    double hi;
};

inline Interval zeta_brute(double sigma, std::uint64_t N) {
    long double acc = 0.0L;
    for (std::uint64_t n = N; n >= 1; --n) acc += std::pow(static_cast<double>(n), -sigma);
    const double s = static_cast<double>(acc);
    const double lo = std::pow(static_cast<double>(N + 1), 1.0 - sigma) / (sigma - 1.0);
    const double hi = std::pow(static_cast<double>(N), 1.0 - sigma) / (sigma - 1.0);
    const double slack = 1e-15 * s;
    return {s + lo - slack, s + hi + slack};
}

// Catalan's constant by the alternating series; the error is below the first omitted term.
inline Interval catalan_series(std::uint64_t K) {
    long double acc = 0.0L;
    for (std::uint64_t k = K; k-- > 0;) {
        const long double d = 2.0L * k + 1.0L;
        acc += (k % 2 == 0 ? 1.0L : -1.0L) / (d * d);
    }
    const double next = 1.0 / ((2.0 * K + 1.0) * (2.0 * K + 1.0));
    return {static_cast<double>(acc) - next - 1e-16, static_cast<double>(acc) + next + 1e-16};
}

// sum_{n <= x} d_{chi,t}(n) by the direct double loop over a b <= x.
inline std::complex<double> d_chi_direct(const std::function<std::complex<double>(std::uint64_t)>& chi,
                                         std::uint64_t x, double t) {
    std::vector<std::complex<double>> alpha(x + 1);
    for (std::uint64_t n = 1; n <= x; ++n)
        alpha[n] = chi(n) * std::polar(1.0, t * std::log(static_cast<double>(n)));
    std::complex<double> total = 0.0;
    for (std::uint64_t a = 1; a <= x; ++a) {
        if (alpha[a] == std::complex<double>(0.0, 0.0)) continue;
        std::complex<double> inner = 0.0;
        for (std::uint64_t b = 1; a * b <= x; ++b) inner += std::conj(alpha[b]);
        total += alpha[a] * inner;
    }
    return total;
}

// min over a dense grid of D(t) = sum_{p <= x} (1 - Re fp(p) p^{-it}) / p.
// A coarse pass at `coarse` spacing over [-span, span] selects the best
// `keep` points; each is re-scanned at `fine` spacing over +-coarse.
inline double dense_halasz_min(const std::vector<std::uint64_t>& primes,
                               const std::vector<std::complex<double>>& values, double span, double coarse,
                               double fine, std::size_t keep) {
    auto D = [&](double t) {
        double acc = 0.0;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            const double lp = std::log(static_cast<double>(primes[i]));
            const std::complex<double> z = values[i] * std::complex<double>(std::cos(t * lp), -std::sin(t * lp));
            acc += (1.0 - z.real()) / static_cast<double>(primes[i]);
        }
        return acc;
    };
    std::vector<std::pair<double, double>> pts;
    const auto K = static_cast<long>(std::floor(span / coarse));
    for (long k = -K; k <= K; ++k) pts.emplace_back(D(k * coarse), k * coarse);
    std::sort(pts.begin(), pts.end());
    double best = pts.front().first;
    for (std::size_t j = 0; j < std::min(keep, pts.size()); ++j) {
        const double c = pts[j].second;
        const auto F = static_cast<long>(std::round(coarse / fine));
        for (long k = -F; k <= F; ++k) {
            const double t = c + k * fine;
            if (std::abs(t) <= span) best = std::min(best, D(t));
        }
    }
    return best;
}

}  // namespace oracle

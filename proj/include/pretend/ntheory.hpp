#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "pretend/errors.hpp"

namespace pretend {

enum class SieveMode {
    primes_only,  // segmented bit sieve, primes list only
    spf,          // linear sieve, also stores the smallest prime factor of every n
};

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    bool operator==(const PrimePower&) const = default;
};

struct Factorization {
    std::uint64_t n = 1;
    std::vector<PrimePower> factors;  // primes strictly ascending

    // Number of prime factors counted with multiplicity.
    unsigned big_omega() const;
};

// Immutable prime sieve up to `limit`. Safe to share between threads.
//
// Ceilings: kMaxPrimesOnlyLimit for primes-only mode (about 200 MB of primes),
// kMaxSpfLimit for spf mode (4 bytes per integer).
class PrimeTable {
public:
    static constexpr std::uint64_t kMaxPrimesOnlyLimit = 1'000'000'000;
    static constexpr std::uint64_t kMaxSpfLimit = 100'000'000;

    PrimeTable(std::uint64_t limit, SieveMode mode);

    std::uint64_t limit() const { return limit_; }
    SieveMode mode() const { return mode_; }
    bool has_spf() const { return mode_ == SieveMode::spf; }

    std::span<const std::uint32_t> primes() const { return primes_; }
    // Primes p <= min(x, limit()).
    std::span<const std::uint32_t> primes_upto(std::uint64_t x) const;
    std::size_t prime_count() const { return primes_.size(); }

    bool is_prime(std::uint64_t n) const;
    // Smallest prime factor of 2 <= n <= limit. Uses the stored map in spf mode
    // and trial division by stored primes otherwise.
    std::uint64_t smallest_factor(std::uint64_t n) const;

private:
    void check_range(std::uint64_t n) const;

    std::uint64_t limit_;
    SieveMode mode_;
    std::vector<std::uint32_t> primes_;
    std::vector<std::uint32_t> spf_;
};

PrimeTable build_prime_table(std::uint64_t limit, SieveMode mode = SieveMode::spf);

Factorization factorize(std::uint64_t n, const PrimeTable& table);

// log p if n = p^k, else 0.
double von_mangoldt(std::uint64_t n, const PrimeTable& table);

// Number of ordered k-tuples of positive integers with product n.
std::uint64_t divisor_count_k(std::uint64_t n, unsigned k, const PrimeTable& table);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
// Euler's totient via trial division; meant for moduli, not for hot loops.
std::uint64_t euler_phi(std::uint64_t n);

// Arithmetic-function sequences use "index n holds the value at n"; entry 0 is
// ignored, so a sequence for 1..N has size N+1.

inline bool is_one(const std::complex<double>& z) { return z == std::complex<double>(1.0, 0.0); }
inline bool is_zero(const std::complex<double>& z) { return z == std::complex<double>(0.0, 0.0); }

// (a * b)(n) = sum over l | n of a(l) b(n/l), for 1 <= n <= N.
template <class T>
std::vector<T> dirichlet_convolve(std::span<const T> a, std::span<const T> b) {
    if (a.size() != b.size() || a.size() < 2)
        throw DomainError("dirichlet_convolve: sequences must share a length covering n = 1");
    const std::size_t n_max = a.size() - 1;
    std::vector<T> out;
    out.reserve(a.size());
    out.push_back(a[1] - a[1]);
    for (std::size_t n = 1; n <= n_max; ++n)
        out.push_back(a[1] * b[n]);
    for (std::size_t l = 2; l <= n_max; ++l) {
        if (is_zero(a[l])) continue;
        for (std::size_t m = 1; l * m <= n_max; ++m)
            out[l * m] += a[l] * b[m];
    }
    return out;
}

// Returns h with (g * h)(n) = d(n) for n <= N via the triangular recursion
// h(n) = d(n) - sum_{l | n, l < n} h(l) g(n/l). Requires g(1) = 1.
//
// Over doubles each output carries roughly N * eps of accumulated round-off.
template <class T>
std::vector<T> dirichlet_deconvolve(std::span<const T> d, std::span<const T> g) {
    if (d.size() != g.size() || d.size() < 2)
        throw DomainError("dirichlet_deconvolve: sequences must share a length covering n = 1");
    if (!is_one(g[1]))
        throw NonInvertibleError("dirichlet_deconvolve: g(1) must equal 1");
    const std::size_t n_max = d.size() - 1;
    std::vector<T> h(d.begin(), d.end());
    // Once the loop reaches l, every contribution h(l') g(l/l') with l' < l has
    // been subtracted, so h[l] is final.
    for (std::size_t l = 1; l <= n_max; ++l) {
        if (is_zero(h[l])) continue;
        for (std::size_t m = 2; l * m <= n_max; ++m) {
            if (is_zero(g[m])) continue;
            h[l * m] -= h[l] * g[m];
        }
    }
    return h;
}

// Complex-valued entry point of the deconvolution.
std::vector<std::complex<double>> dirichlet_deconvolve(std::span<const std::complex<double>> d,
                                                       std::span<const std::complex<double>> g);

}  // namespace pretend

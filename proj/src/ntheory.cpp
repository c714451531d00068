#include "pretend/ntheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace pretend {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<std::uint32_t> simple_sieve(std::uint64_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

// Segmented sieve over odd numbers, one bit per odd candidate.
std::vector<std::uint32_t> segmented_sieve(std::uint64_t limit) {
    const std::uint64_t root = isqrt(limit);
    const std::vector<std::uint32_t> base = simple_sieve(root);

    std::vector<std::uint32_t> primes;
    primes.reserve(static_cast<std::size_t>(1.3 * limit / std::log(static_cast<double>(limit))) + 16);
    primes.push_back(2);

    constexpr std::uint64_t kSegmentOdds = 1u << 18;  // odd numbers per segment
    std::vector<std::uint64_t> bits(kSegmentOdds / 64);
    // next odd multiple to strike for each odd base prime
    std::vector<std::uint64_t> next;
    for (std::size_t i = 1; i < base.size(); ++i) next.push_back(std::uint64_t{base[i]} * base[i]);

    // Segment covers odd numbers lo, lo+2, ..., lo + 2*(kSegmentOdds-1).
    for (std::uint64_t lo = 3; lo <= limit; lo += 2 * kSegmentOdds) {
        const std::uint64_t hi = std::min(limit, lo + 2 * (kSegmentOdds - 1));
        std::fill(bits.begin(), bits.end(), ~std::uint64_t{0});
        for (std::size_t i = 0; i < next.size(); ++i) {
            const std::uint64_t p = base[i + 1];
            std::uint64_t m = next[i];
            for (; m <= hi; m += 2 * p) {
                const std::uint64_t idx = (m - lo) / 2;
                bits[idx >> 6] &= ~(std::uint64_t{1} << (idx & 63));
            }
            next[i] = m;
        }
        const std::uint64_t count = (hi - lo) / 2 + 1;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            if (bits[idx >> 6] >> (idx & 63) & 1u)
                primes.push_back(static_cast<std::uint32_t>(lo + 2 * idx));
        }
    }
    return primes;
}

}  // namespace

unsigned Factorization::big_omega() const {
    unsigned total = 0;
    for (const auto& f : factors) total += f.exponent;
    return total;
}

PrimeTable::PrimeTable(std::uint64_t limit, SieveMode mode) : limit_(limit), mode_(mode) {
    const std::uint64_t ceiling = mode == SieveMode::spf ? kMaxSpfLimit : kMaxPrimesOnlyLimit;
    if (limit < 2 || limit > ceiling)
        throw CapacityError("prime table limit " + std::to_string(limit) + " outside [2, " +
                            std::to_string(ceiling) + "]");

    if (mode == SieveMode::primes_only) {
        primes_ = segmented_sieve(limit);
        return;
    }

    // Linear sieve: every composite is struck exactly once by its smallest prime.
    spf_.assign(limit + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<std::uint32_t>(i);
            primes_.push_back(static_cast<std::uint32_t>(i));
        }
        const std::uint32_t si = spf_[i];
        for (std::uint32_t p : primes_) {
            if (p > si || std::uint64_t{p} * i > limit) break;
            spf_[p * i] = p;
        }
    }
}

std::span<const std::uint32_t> PrimeTable::primes_upto(std::uint64_t x) const {
    auto end = std::upper_bound(primes_.begin(), primes_.end(), x,
                                [](std::uint64_t v, std::uint32_t p) { return v < p; });
    return {primes_.data(), static_cast<std::size_t>(end - primes_.begin())};
}

void PrimeTable::check_range(std::uint64_t n) const {
    if (n > limit_)
        throw CapacityError(std::to_string(n) + " exceeds prime table limit " + std::to_string(limit_));
}

bool PrimeTable::is_prime(std::uint64_t n) const {
    check_range(n);
    if (n < 2) return false;
    if (has_spf()) return spf_[n] == n;
    return std::binary_search(primes_.begin(), primes_.end(), static_cast<std::uint32_t>(n));
}

std::uint64_t PrimeTable::smallest_factor(std::uint64_t n) const {
    check_range(n);
    if (n < 2) throw DomainError("smallest_factor requires n >= 2");
    if (has_spf()) return spf_[n];
    for (std::uint32_t p : primes_) {
        if (std::uint64_t{p} * p > n) break;
        if (n % p == 0) return p;
    }
    return n;
}

PrimeTable build_prime_table(std::uint64_t limit, SieveMode mode) { return PrimeTable(limit, mode); }

Factorization factorize(std::uint64_t n, const PrimeTable& table) {
    if (n < 1) throw DomainError("factorize requires n >= 1");
    if (n > table.limit())
        throw CapacityError(std::to_string(n) + " exceeds prime table limit " + std::to_string(table.limit()));
    Factorization out;
    out.n = n;
    std::uint64_t m = n;
    while (m > 1) {
        const std::uint64_t p = table.smallest_factor(m);
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        out.factors.push_back({p, e});
    }
    return out;
}

double von_mangoldt(std::uint64_t n, const PrimeTable& table) {
    const Factorization f = factorize(n, table);
    if (f.factors.size() != 1) return 0.0;
    return std::log(static_cast<double>(f.factors.front().prime));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::uint64_t divisor_count_k(std::uint64_t n, unsigned k, const PrimeTable& table) {
    if (k < 1) throw DomainError("divisor_count_k requires k >= 1");
    std::uint64_t r = 1;
    for (const auto& [p, e] : factorize(n, table).factors) r *= binomial(e + k - 1, k - 1);
    return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<std::complex<double>> dirichlet_deconvolve(std::span<const std::complex<double>> d,
                                                       std::span<const std::complex<double>> g) {
    return dirichlet_deconvolve<std::complex<double>>(d, g);
}

}  // namespace pretend

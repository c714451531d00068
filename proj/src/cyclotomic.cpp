#include "pretend/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "pretend/errors.hpp"

namespace pretend {

namespace {

void require_same_order(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    if (a.order() != b.order())
        throw DomainError("cyclotomic integers of different orders " + std::to_string(a.order()) + " and " +
                          std::to_string(b.order()));
}

// Exact quotient of num by a monic divisor; both constant term first.
std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
    const std::size_t dn = den.size() - 1;
    std::vector<std::int64_t> quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        const std::int64_t c = num[i];
        quot[i - dn] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    return quot;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(unsigned m) {
    static std::mutex mu;
    static std::map<unsigned, std::vector<std::int64_t>> cache;
    if (m == 0) throw DomainError("cyclotomic polynomial of order 0");
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    std::vector<std::int64_t> poly(m + 1, 0);
    poly[0] = -1;
    poly[m] = 1;
    for (unsigned d = 1; d < m; ++d)
        if (m % d == 0) poly = divide_exact(poly, cyclotomic_polynomial(d));
    std::lock_guard lock(mu);
    return cache.emplace(m, std::move(poly)).first->second;
}

CyclotomicInteger::CyclotomicInteger(unsigned order, std::int64_t value) : coeffs_(order == 0 ? 1 : order, 0) {
    if (order == 0) throw DomainError("cyclotomic order must be positive");
    coeffs_[0] = value;
}

CyclotomicInteger CyclotomicInteger::root(unsigned order, std::uint64_t k) {
    CyclotomicInteger z(order, 0);
    z.coeffs_[k % order] = 1;
    return z;
}

CyclotomicInteger& CyclotomicInteger::operator+=(const CyclotomicInteger& other) {
    require_same_order(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

CyclotomicInteger& CyclotomicInteger::operator-=(const CyclotomicInteger& other) {
    require_same_order(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

CyclotomicInteger CyclotomicInteger::operator-() const {
    CyclotomicInteger r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    require_same_order(a, b);
    const std::size_t m = a.coeffs_.size();
    CyclotomicInteger r(static_cast<unsigned>(m), 0);
    for (std::size_t i = 0; i < m; ++i) {
        const std::int64_t ai = a.coeffs_[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < m; ++j) {
            const std::int64_t bj = b.coeffs_[j];
            if (bj == 0) continue;
            std::size_t k = i + j;
            if (k >= m) k -= m;
            r.coeffs_[k] += ai * bj;
        }
    }
    return r;
}

CyclotomicInteger CyclotomicInteger::conj() const {
    CyclotomicInteger r(order(), 0);
    const std::size_t m = coeffs_.size();
    for (std::size_t i = 0; i < m; ++i) r.coeffs_[(m - i) % m] = coeffs_[i];
    return r;
}

std::vector<std::int64_t> CyclotomicInteger::canonical() const {
    const auto& phi = cyclotomic_polynomial(order());
    const std::size_t deg = phi.size() - 1;
    std::vector<std::int64_t> rem = coeffs_;
    for (std::size_t i = rem.size(); i-- > deg;) {
        const std::int64_t c = rem[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= deg; ++j) rem[i - deg + j] -= c * phi[j];
    }
    rem.resize(deg);
    return rem;
}

bool CyclotomicInteger::equals_zero() const {
    for (auto c : canonical())
        if (c != 0) return false;
    return true;
}

bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b) { return (a - b).equals_zero(); }

std::complex<double> CyclotomicInteger::to_complex() const {
    const std::size_t m = coeffs_.size();
    std::complex<double> acc = 0;
    for (std::size_t k = 0; k < m; ++k) {
        if (coeffs_[k] == 0) continue;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
        acc += static_cast<double>(coeffs_[k]) * std::polar(1.0, angle);
    }
    return acc;
}

bool is_one(const CyclotomicInteger& z) { return z == CyclotomicInteger(z.order(), 1); }

}  // namespace pretend

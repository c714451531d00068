#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace pretend {

// Exact element of the cyclotomic integers Z[zeta_m], stored as a polynomial in
// Z[x]/(x^m - 1) with x standing for zeta_m = e^{2 pi i / m}. The storage is not
// canonical; equality reduces the difference modulo the m-th cyclotomic
// polynomial, which is exact.
class CyclotomicInteger {
public:
    explicit CyclotomicInteger(unsigned order = 1, std::int64_t value = 0);

    // zeta_m^k
    static CyclotomicInteger root(unsigned order, std::uint64_t k);

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()); }
    const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

    CyclotomicInteger& operator+=(const CyclotomicInteger& other);
    CyclotomicInteger& operator-=(const CyclotomicInteger& other);
    CyclotomicInteger operator-() const;
    friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) { return a += b; }
    friend CyclotomicInteger operator-(CyclotomicInteger a, const CyclotomicInteger& b) { return a -= b; }
    friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b);

    // Complex conjugate: zeta^k -> zeta^{-k}.
    CyclotomicInteger conj() const;

    // Coefficients of the unique representative of degree < phi(m).
    std::vector<std::int64_t> canonical() const;
    bool equals_zero() const;

    friend bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b);

    std::complex<double> to_complex() const;

private:
    std::vector<std::int64_t> coeffs_;
};

// Hooks used by the generic Dirichlet convolution templates.
inline bool is_zero(const CyclotomicInteger& z) {
    for (auto c : z.coefficients())
        if (c != 0) return false;
    return true;
}
bool is_one(const CyclotomicInteger& z);

// Integer coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(unsigned m);

}  // namespace pretend

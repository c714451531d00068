#pragma once

#include <complex>

#include "pretend/characters.hpp"
#include "pretend/multfunc.hpp"
#include "pretend/ntheory.hpp"

namespace pretend {

// Complex value with a rigorous truncation radius. Floating-point round-off is
// not part of `radius`; `roundoff` carries a separate estimate of
// (terms summed) x eps x (largest magnitude involved).
struct CertifiedValue {
    std::complex<double> value;
    double radius = 0.0;
    double roundoff = 0.0;

    double error() const { return radius + roundoff; }
};

// Evaluations require Re s >= 1 + kDeltaMin.
inline constexpr double kDeltaMin = 0.01;

enum class Reach {
    strict,       // throw PrecisionError when the target radius is out of reach
    best_effort,  // use the largest truncation available and report its radius
};

// zeta(s) = sum n^{-s}: partial sum plus Euler-Maclaurin tail with the
// remainder bound 4 |(s)_{2M}| / (2 pi)^{2M} * N^{1-sigma-2M} / (sigma+2M-1).
CertifiedValue zeta(std::complex<double> s, double target_radius);
CertifiedValue zeta_derivative(std::complex<double> s, double target_radius);
// zeta'/zeta at s
CertifiedValue zeta_log_derivative(std::complex<double> s, double target_radius);

// Hurwitz zeta(s, w) = sum_{k >= 0} (w + k)^{-s}, w > 0, and its s-derivative.
struct HurwitzValue {
    CertifiedValue value;
    CertifiedValue derivative;
};
HurwitzValue hurwitz_zeta(std::complex<double> s, double w, double target_radius);

// L(s, chi). Principal characters use zeta(s) prod_{p | q} (1 - p^{-s});
// others use q^{-s} sum_a chi(a) zeta(s, a/q).
CertifiedValue l_function(const DirichletCharacter& chi, std::complex<double> s, double target_radius);
CertifiedValue l_log_derivative(const DirichletCharacter& chi, std::complex<double> s, double target_radius);

// exp(-sum_{p <= P} log(1 - f(p) p^{-s})), P the smallest cutoff whose tail
// bound meets the target. The tail uses pi(u) < 1.25506 u / log u:
//   |log F - log F_P| <= 1.25506 sigma P^{1-sigma} / ((sigma-1) log P (1 - P^{-sigma})).
CertifiedValue euler_product(const MultiplicativeFunction& f, std::complex<double> s, double target_radius,
                             const PrimeTable& table, Reach reach = Reach::strict);

// F(s) = sum f(n) n^{-s}. Archetypes and their products/conjugates
// (lambda^e chi n^{it}) are evaluated in closed form through L-functions:
//   e = 0: L(s - it, chi);   e = 1: L(2(s - it), chi^2) / L(s - it, chi).
// Table-valued functions fall back to euler_product.
CertifiedValue dirichlet_F(const MultiplicativeFunction& f, std::complex<double> s, double target_radius,
                           const PrimeTable& table, Reach reach = Reach::strict);

// F'/F(sigma) = -sum Lambda(n) f(n) n^{-sigma} truncated at prime powers <= N;
// tail via psi(u) < 1.03883 u: 1.03883 sigma N^{1-sigma} / (sigma - 1).
CertifiedValue von_mangoldt_series(const MultiplicativeFunction& f, std::complex<double> s, double target_radius,
                                   const PrimeTable& table, Reach reach = Reach::strict);

// F'/F at s. Closed form for archetypes (as in dirichlet_F), Lambda-series otherwise.
CertifiedValue log_derivative(const MultiplicativeFunction& f, std::complex<double> s, double target_radius,
                              const PrimeTable& table, Reach reach = Reach::strict);

// Explicit upper bound for sum_{p > P} p^{-sigma}.
double prime_tail_bound(double P, double sigma);

// Error propagation helpers on certified values.
CertifiedValue certified_quotient(const CertifiedValue& a, const CertifiedValue& b);
CertifiedValue certified_product(const CertifiedValue& a, const CertifiedValue& b);

}  // namespace pretend

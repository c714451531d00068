#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "pretend/characters.hpp"
#include "pretend/csv.hpp"
#include "pretend/cyclotomic.hpp"
#include "pretend/multfunc.hpp"
#include "pretend/ntheory.hpp"

namespace pretend {

// Longest sum over n <= x the character-sum routines accept.
inline constexpr std::uint64_t kMaxSumLength = 1'000'000'000;

// Complex values of chi on [0, q): value_table[r] = chi(r), exact for real characters.
std::vector<std::complex<double>> character_value_table(const DirichletCharacter& chi);

struct CharSumProfile {
    DirichletCharacter chi;
    double max_abs;
    std::uint64_t argmax_N;
    double pv_bound;  // sqrt(q) log q
    double ratio;
};

// max over N of |sum_{n <= N} chi(n)|, scanning one period. Principal chi -> DomainError.
CharSumProfile pv_profile(const DirichletCharacter& chi);

// Profiles of every primitive nonprincipal character with q_lo <= q <= q_hi,
// ordered by (q, character index).
std::vector<CharSumProfile> pv_scan(std::uint64_t q_lo, std::uint64_t q_hi, unsigned jobs);

// q,chi,max_abs,argmax_N,pv_bound,ratio
ResultTable pv_table(const std::vector<CharSumProfile>& profiles);

// sum_{n <= x} d_{chi,t}(n), d_{chi,t}(n) = sum_{ab = n} chi(a) a^{it} conj(chi(b)) b^{-it},
// through the hyperbola split with y = floor(sqrt x):
//   sum_{a <= y} alpha(a) conj(A(x/a)) + sum_{b <= y} conj(alpha(b)) A(x/b) - |A(y)|^2,
// alpha(n) = chi(n) n^{it}, A(u) = sum_{n <= u} alpha(n). One pass over n <= x.
std::complex<double> d_chi_sum(const DirichletCharacter& chi, std::uint64_t x, double t = 0.0);

// |sum_{n<=x} d_{chi,t}(n)| / (sqrt(qx) log q (1+|t| log x) + q log^2 q (1+|t| log x)^2); t = 0 is the untwisted estimate.
double dchi_ratio(const DirichletCharacter& chi, std::uint64_t x, double t = 0.0);

// max_{N <= x} |sum_{n <= N} chi(n) n^{it}| / (sqrt(q) log q (1 + |t| log x))
double twisted_pv_ratio(const DirichletCharacter& chi, double t, std::uint64_t x);

// d_chi(n) for n <= N (index 0 unused).
std::vector<std::complex<double>> d_chi_values(const DirichletCharacter& chi, std::uint64_t N);

// h with d = d_chi * h for n <= N, by deconvolution over complex numbers.
std::vector<std::complex<double>> h_sequence(const DirichletCharacter& chi, std::uint64_t N, const PrimeTable& table);

// Exact versions in Z[zeta_E], E = chi.group().exponent().
std::vector<CyclotomicInteger> d_chi_values_exact(const DirichletCharacter& chi, std::uint64_t N);
std::vector<CyclotomicInteger> h_sequence_exact(const DirichletCharacter& chi, std::uint64_t N);

struct ScanRow {
    std::uint64_t q;
    std::string chi;
    std::uint64_t x;
    double distance_squared;
    // 1/2 log(log x / log(q (1 + |t|))): the lower bound with c = 1
    double bound;
    // c making the bound tight: log(q (1 + |t|)) / log x * exp(2 D^2)
    double implied_c;
};

struct Prop6Scan {
    std::vector<ScanRow> rows;
    double min_implied_c;
};

// D(1, chi n^{it}; x)^2 for every primitive nonprincipal chi with modulus in
// [q_lo, q_hi] and every x >= q. Prime reciprocals (and p^{it}/p when t != 0)
// are aggregated by residue class mod q with cumulative snapshots; for t = 0
// this makes D^2 non-decreasing in x exactly. Rows ordered by (q, character
// index, x ascending).
Prop6Scan prop6_scan(std::uint64_t q_lo, std::uint64_t q_hi, std::vector<std::uint64_t> x_values,
                     const PrimeTable& table, unsigned jobs, double t = 0.0);

// q,chi,x,D2,bound,implied_c
ResultTable scan_table(const std::vector<ScanRow>& rows);

// Second part of Proposition 6: D(f,chi;x)^2 + D(f,psi;x)^2 against
// 1/8 log(c log x / (2 log Q)). Reported, never asserted.
struct PairReport {
    double lhs;
    double bound;
};
PairReport prop6_pair(const MultiplicativeFunction& f, const DirichletCharacter& chi, const DirichletCharacter& psi,
                      std::uint64_t x, std::uint64_t Q, double c, const PrimeTable& table);

struct LemmaScanConfig {
    int lemma = 3;
    // moduli of the characters chi under test
    std::uint64_t q_lo = 3;
    std::uint64_t q_hi = 50;
    std::uint64_t y = 1'000'000;
    // Lemma 3: conductors m <= (log y)^A. Lemma 5: neighbours j <= A.
    double A = 1.0;
    // Lemma 3: order of chi (odd, >= 3). Lemma 4: tuple length (>= 2). 0 picks 3 resp. 2.
    unsigned g = 0;
    unsigned jobs = 1;
};

struct LemmaRow {
    int lemma;
    std::string params;
    double lhs;
    double loglogy;
    // (lhs / loglogy) / main_coeff; NaN when main_coeff = 0
    double ratio;
    double main_coeff;
};

// Main-term coefficients: 1 - (g/pi) sin(pi/g), 1/g, 1 - 1/sqrt(j).
double lemma_main_coefficient(int lemma, double g_or_j);

// Exploratory distance scans for Lemmas 3-5.
//   3: chi primitive of odd order g; lhs = min over primitive xi, conductor
//      <= (log y)^A, chi(-1) xi(-1) = -1, of D(chi, xi; y)^2.
//   4: tuples (chi, ..., chi, conj(chi)^{g-1}), product trivial; lhs = min over
//      primitive xi_j, conductors <= log y, with nontrivial product, of
//      sum_j D(chi_j, xi_j; y)^2 (exact: best per coordinate, or the cheapest
//      single substitution when the best tuple has trivial product).
//   5: the A nearest primitive psi != chi with conductor < log y, one row per j.
// Empty family -> DomainError.
std::vector<LemmaRow> lemma_distance_scan(const LemmaScanConfig& config, const PrimeTable& table);

// lemma,params,lhs,loglogy,ratio,main_coeff
ResultTable lemma_table(const std::vector<LemmaRow>& rows);

}  // namespace pretend

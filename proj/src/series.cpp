#include "pretend/series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pretend/errors.hpp"

namespace pretend {

namespace {

using cd = std::complex<double>;

constexpr double kEps = std::numeric_limits<double>::epsilon();

// B_{2j} / (2j)! for j = 1..40
constexpr std::array<double, 40> kBernoulliRatio = {
    8.3333333333333333e-2,   -1.3888888888888889e-3,  3.3068783068783069e-5,   -8.2671957671957672e-7,
    2.0876756987868099e-8,   -5.2841901386874932e-10, 1.3382536530684679e-11,  -3.3896802963225829e-13,
    8.5860620562778446e-15,  -2.1748686985580619e-16, 5.5090028283602295e-18,  -1.3954464685812523e-19,
    3.5347070396294675e-21,  -8.9535174270375469e-23, 2.2679524523376831e-24,  -5.7447906688722024e-26,
    1.4551724756148649e-27,  -3.6859949406653102e-29, 9.3367342570950447e-31,  -2.3650224157006299e-32,
    5.9906717624821343e-34,  -1.5174548844682903e-35, 3.8437581254541882e-37,  -9.736353072646691e-39,
    2.466247044200681e-40,   -6.2470767418207437e-42, 1.5824030244644914e-43,  -4.008273685948936e-45,
    1.0153075855569556e-46,  -2.5718041582418717e-48, 6.5144560352338149e-50,  -1.6501309906896525e-51,
    4.1798306285394759e-53,  -1.0587634667702909e-54, 2.6818791912607707e-56,  -6.7932793511074212e-58,
    1.7207577616681405e-59,  -4.3587303293488938e-61, 1.1040792903684667e-62,  -2.7966655133781345e-64,
};

constexpr unsigned kMaxTerms = 1u << 24;

// Rosser-Schoenfeld: pi(x) < 1.25506 x / log x (x > 1), psi(x) < 1.03883 x (x > 0).
constexpr double kPiConstant = 1.25506;
constexpr double kPsiConstant = 1.03883;

void require_half_plane(cd s, const char* what) {
    if (!(s.real() >= 1.0 + kDeltaMin - 1e-15) || !std::isfinite(s.imag()))
        throw DomainError(std::string(what) + ": requires Re s >= 1 + " + std::to_string(kDeltaMin) + ", got " +
                          std::to_string(s.real()));
}

void require_target(double target) {
    if (!(target > 0.0)) throw DomainError("target radius must be positive");
}

struct EmPlan {
    unsigned terms;   // N
    unsigned order;   // M
};

struct Remainder {
    double value;
    double derivative;
};

// Euler-Maclaurin remainder bounds for sum_{k >= N} (w + k)^{-s} with a = w + N.
Remainder em_remainder(cd s, double a, unsigned M) {
    cd poch = 1.0, dpoch = 0.0;  // (s)_{2M} and its s-derivative
    for (unsigned i = 0; i < 2 * M; ++i) {
        dpoch = dpoch * (s + static_cast<double>(i)) + poch;
        poch *= s + static_cast<double>(i);
    }
    const double alpha = s.real() + 2.0 * M - 1.0;
    const double la = std::log(a);
    const double scale = 4.0 * std::exp(-2.0 * M * std::log(2.0 * std::numbers::pi) - alpha * la);
    return {scale * std::abs(poch) / alpha,
            scale * (std::abs(dpoch) / alpha + std::abs(poch) * (la / alpha + 1.0 / (alpha * alpha)))};
}

EmPlan plan_em(cd s, double w, double target, bool need_derivative) {
    for (unsigned n = 8; n <= kMaxTerms; n *= 2) {
        const double a = w + n;
        for (unsigned m = 1; m <= kBernoulliRatio.size(); ++m) {
            const Remainder r = em_remainder(s, a, m);
            if (r.value <= target && (!need_derivative || r.derivative <= target)) return {n, m};
        }
    }
    throw PrecisionError("Euler-Maclaurin cannot reach radius " + std::to_string(target) + " at s = " +
                         std::to_string(s.real()) + "+" + std::to_string(s.imag()) + "i");
}

// sum_{k >= 0} (w + k)^{-s} and its s-derivative with the given plan.
HurwitzValue hurwitz_em(cd s, double w, EmPlan plan) {
    const unsigned N = plan.terms, M = plan.order;
    const double abs_s = std::abs(s);
    cd sum = 0.0, dsum = 0.0;
    double err = 0.0, derr = 0.0;
    // Descending k: smallest terms first.
    for (unsigned k = N; k-- > 0;) {
        const double x = w + k;
        const double lx = std::log(x);
        const cd term = std::exp(-s * lx);
        const double mag = std::abs(term);
        sum += term;
        dsum -= lx * term;
        err += (abs_s * lx + 4.0) * kEps * mag + kEps * std::abs(sum);
        derr += (abs_s * lx + 6.0) * kEps * mag * lx + kEps * std::abs(dsum);
    }
    const double a = w + N;
    const double la = std::log(a);
    const cd A = std::exp(-s * la);
    const cd inv_sm1 = 1.0 / (s - 1.0);
    const cd t1 = a * A * inv_sm1;
    const cd dt1 = -la * t1 - t1 * inv_sm1;
    const cd t2 = 0.5 * A;
    const cd dt2 = -la * t2;
    sum += t1 + t2;
    dsum += dt1 + dt2;
    err += (abs_s * la + 8.0) * kEps * (std::abs(t1) + std::abs(t2));
    derr += (abs_s * la + 8.0) * kEps * (std::abs(dt1) + std::abs(dt2));

    cd poch = s, dpoch = 1.0;  // (s)_{2j-1}
    double apow = 1.0 / a;     // a^{-(2j-1)}
    for (unsigned j = 1; j <= M; ++j) {
        const double c = kBernoulliRatio[j - 1];
        const cd term = c * poch * A * apow;
        const cd dterm = c * (dpoch - la * poch) * A * apow;
        sum += term;
        dsum += dterm;
        err += (4.0 * j + abs_s * la) * kEps * std::abs(term);
        derr += (4.0 * j + abs_s * la) * kEps * std::abs(dterm);
        for (unsigned i = 2 * j - 1; i <= 2 * j; ++i) {
            dpoch = dpoch * (s + static_cast<double>(i)) + poch;
            poch *= s + static_cast<double>(i);
        }
        apow /= a * a;
    }
    const Remainder rem = em_remainder(s, a, M);
    return {{sum, rem.value, err}, {dsum, rem.derivative, derr}};
}

// -log(1 - z), |z| < 1, accurate for small |z|.
cd neg_log_one_minus(cd z) {
    if (std::abs(z) < 0.25) {
        cd power = z, acc = 0.0;
        for (unsigned k = 1; k < 64; ++k) {
            const cd term = power / static_cast<double>(k);
            acc += term;
            if (std::abs(term) <= 0.25 * kEps * std::abs(acc)) break;
            power *= z;
        }
        return acc;
    }
    return -std::log(1.0 - z);
}

// Retry `eval(target')` with a tighter ingredient target until the combined
// radius meets `target`.
template <class Eval>
CertifiedValue refine(double target, Eval eval) {
    double inner = target / 4.0;
    CertifiedValue v = eval(inner);
    for (int round = 0; round < 6 && v.radius > target; ++round) {
        inner *= std::max(1e-6, 0.5 * target / v.radius);
        v = eval(inner);
    }
    if (v.radius > target)
        throw PrecisionError("combined radius " + std::to_string(v.radius) + " above target " + std::to_string(target));
    return v;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t q) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= q; ++p) {
        if (q % p) continue;
        out.push_back(p);
        while (q % p == 0) q /= p;
    }
    if (q > 1) out.push_back(q);
    return out;
}

double euler_log_tail(double P, double sigma) {
    return prime_tail_bound(P, sigma) / (1.0 - std::pow(P, -sigma));
}

double von_mangoldt_tail(double N, double sigma) {
    return kPsiConstant * sigma * std::pow(N, 1.0 - sigma) / (sigma - 1.0);
}

}  // namespace

double prime_tail_bound(double P, double sigma) {
    P = std::max(P, 2.0);
    return kPiConstant * sigma * std::pow(P, 1.0 - sigma) / ((sigma - 1.0) * std::log(P));
}

CertifiedValue certified_quotient(const CertifiedValue& a, const CertifiedValue& b) {
    const double mb = std::abs(b.value);
    if (!(mb > b.radius)) throw PrecisionError("denominator enclosure contains zero");
    const cd q = a.value / b.value;
    const double rad = (a.radius + std::abs(q) * b.radius) / (mb - b.radius);
    const double ro = (a.roundoff + std::abs(q) * b.roundoff) / mb + 4.0 * kEps * std::abs(q);
    return {q, rad, ro};
}

CertifiedValue certified_product(const CertifiedValue& a, const CertifiedValue& b) {
    const double ma = std::abs(a.value), mb = std::abs(b.value);
    const double rad = ma * b.radius + mb * a.radius + a.radius * b.radius;
    const double ro = ma * b.roundoff + mb * a.roundoff + 4.0 * kEps * ma * mb;
    return {a.value * b.value, rad, ro};
}

HurwitzValue hurwitz_zeta(cd s, double w, double target_radius) {
    require_half_plane(s, "hurwitz_zeta");
    require_target(target_radius);
    if (!(w > 0.0)) throw DomainError("hurwitz_zeta requires w > 0");
    return hurwitz_em(s, w, plan_em(s, w, target_radius, true));
}

CertifiedValue zeta(cd s, double target_radius) {
    require_half_plane(s, "zeta");
    require_target(target_radius);
    return hurwitz_em(s, 1.0, plan_em(s, 1.0, target_radius, false)).value;
}

CertifiedValue zeta_derivative(cd s, double target_radius) {
    require_half_plane(s, "zeta_derivative");
    require_target(target_radius);
    return hurwitz_em(s, 1.0, plan_em(s, 1.0, target_radius, true)).derivative;
}

CertifiedValue zeta_log_derivative(cd s, double target_radius) {
    require_half_plane(s, "zeta_log_derivative");
    require_target(target_radius);
    return refine(target_radius, [&](double inner) {
        const HurwitzValue h = hurwitz_em(s, 1.0, plan_em(s, 1.0, inner, true));
        return certified_quotient(h.derivative, h.value);
    });
}

namespace {

// L(s, chi) and L'(s, chi) with ingredient radius `inner` per Hurwitz term.
std::pair<CertifiedValue, CertifiedValue> l_and_derivative(const DirichletCharacter& chi, cd s, double inner) {
    const std::uint64_t q = chi.modulus();
    if (chi.is_principal()) {
        const HurwitzValue z = hurwitz_em(s, 1.0, plan_em(s, 1.0, inner, true));
        // L = zeta * E, E = prod (1 - p^{-s}); L' = zeta' E + zeta E'
        cd e = 1.0, de = 0.0;
        for (std::uint64_t p : prime_divisors(q)) {
            const double lp = std::log(static_cast<double>(p));
            const cd ps = std::exp(-s * lp);
            const cd factor = 1.0 - ps;
            de = de * factor + e * (lp * ps);
            e *= factor;
        }
        const CertifiedValue ev{e, 0.0, 8.0 * kEps * std::abs(e)};
        const CertifiedValue dev{de, 0.0, 8.0 * kEps * std::abs(de)};
        const CertifiedValue l = certified_product(z.value, ev);
        CertifiedValue dl = certified_product(z.derivative, ev);
        const CertifiedValue extra = certified_product(z.value, dev);
        dl.value += extra.value;
        dl.radius += extra.radius;
        dl.roundoff += extra.roundoff;
        return {l, dl};
    }
    const double qd = static_cast<double>(q);
    const double lq = std::log(qd);
    const double units = static_cast<double>(chi.group().size());
    const double scale = std::exp(-s.real() * lq);  // |q^{-s}|
    const double per_term = inner / (scale * units * (1.0 + lq));
    const EmPlan plan = plan_em(s, 1.0 / qd, per_term, true);
    cd sum = 0.0, dsum = 0.0;
    double rad = 0.0, drad = 0.0, ro = 0.0, dro = 0.0;
    for (std::uint64_t a = 1; a <= q; ++a) {
        const UnitValue v = chi.value(a);
        if (v.zero) continue;
        const cd c = v.to_complex();
        const HurwitzValue h = hurwitz_em(s, static_cast<double>(a) / qd, plan);
        sum += c * h.value.value;
        dsum += c * (h.derivative.value - lq * h.value.value);
        rad += h.value.radius;
        drad += h.derivative.radius + lq * h.value.radius;
        ro += h.value.roundoff + kEps * std::abs(sum);
        dro += h.derivative.roundoff + lq * h.value.roundoff + kEps * std::abs(dsum);
    }
    const cd qs = std::exp(-s * lq);
    return {{qs * sum, scale * rad, scale * ro + 4.0 * kEps * std::abs(qs * sum)},
            {qs * dsum, scale * drad, scale * dro + 4.0 * kEps * std::abs(qs * dsum)}};
}

}  // namespace

CertifiedValue l_function(const DirichletCharacter& chi, cd s, double target_radius) {
    require_half_plane(s, "l_function");
    require_target(target_radius);
    return refine(target_radius, [&](double inner) { return l_and_derivative(chi, s, inner).first; });
}

CertifiedValue l_log_derivative(const DirichletCharacter& chi, cd s, double target_radius) {
    require_half_plane(s, "l_log_derivative");
    require_target(target_radius);
    return refine(target_radius, [&](double inner) {
        const auto [l, dl] = l_and_derivative(chi, s, inner);
        return certified_quotient(dl, l);
    });
}

CertifiedValue euler_product(const MultiplicativeFunction& f, cd s, double target_radius, const PrimeTable& table,
                             Reach reach) {
    require_half_plane(s, "euler_product");
    require_target(target_radius);
    const double sigma = s.real();
    // |F| <= zeta(sigma) <= sigma / (sigma - 1)
    const double log_target = std::log1p(target_radius * (sigma - 1.0) / sigma);
    const auto primes = table.primes();
    double cutoff = static_cast<double>(table.limit());
    std::size_t count = primes.size();
    if (euler_log_tail(cutoff, sigma) > log_target) {
        if (reach == Reach::strict)
            throw PrecisionError("Euler product needs primes beyond the table limit " + std::to_string(table.limit()) +
                                 " for radius " + std::to_string(target_radius));
    } else {
        // smallest prime cutoff meeting the bound
        std::size_t lo = 0, hi = primes.size() - 1;
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (euler_log_tail(primes[mid], sigma) <= log_target)
                hi = mid;
            else
                lo = mid + 1;
        }
        count = lo + 1;
        cutoff = primes[lo];
    }
    const auto used = primes.first(count);
    const auto values = f.prime_values(used);
    cd log_f = 0.0;
    double ro = 0.0;
    for (std::size_t i = count; i-- > 0;) {
        const double lp = std::log(static_cast<double>(used[i]));
        const cd z = values[i] * std::exp(-s * lp);
        const cd term = neg_log_one_minus(z);
        log_f += term;
        ro += (std::abs(s) * lp + 8.0) * kEps * std::abs(term) + kEps * std::abs(log_f);
    }
    const double log_rad = euler_log_tail(cutoff, sigma);
    const cd value = std::exp(log_f);
    const double mag = std::abs(value);
    return {value, mag * std::expm1(log_rad), mag * (std::expm1(ro) + 4.0 * kEps)};
}

CertifiedValue dirichlet_F(const MultiplicativeFunction& f, cd s, double target_radius, const PrimeTable& table,
                           Reach reach) {
    require_half_plane(s, "dirichlet_F");
    require_target(target_radius);
    const auto form = f.archetype_form();
    if (!form) return euler_product(f, s, target_radius, table, reach);
    const cd shifted = s - cd(0.0, form->t);
    if (!form->liouville) return l_function(form->chi, shifted, target_radius);
    const DirichletCharacter chi2 = multiply_characters(form->chi, form->chi);
    return refine(target_radius, [&](double inner) {
        return certified_quotient(l_function(chi2, 2.0 * shifted, inner), l_function(form->chi, shifted, inner));
    });
}

CertifiedValue von_mangoldt_series(const MultiplicativeFunction& f, cd s, double target_radius,
                                   const PrimeTable& table, Reach reach) {
    require_half_plane(s, "von_mangoldt_series");
    require_target(target_radius);
    const double sigma = s.real();
    double cutoff = static_cast<double>(table.limit());
    if (von_mangoldt_tail(cutoff, sigma) > target_radius) {
        if (reach == Reach::strict)
            throw PrecisionError("Lambda-series needs terms beyond the table limit " + std::to_string(table.limit()) +
                                 " for radius " + std::to_string(target_radius));
    } else {
        // N with 1.03883 sigma N^{1-sigma} / (sigma-1) = target
        const double n = std::pow(target_radius * (sigma - 1.0) / (kPsiConstant * sigma), 1.0 / (1.0 - sigma));
        cutoff = std::clamp(std::ceil(n), 2.0, cutoff);
    }
    const auto primes = table.primes_upto(static_cast<std::uint64_t>(cutoff));
    const auto values = f.prime_values(primes);
    cd acc = 0.0;
    double ro = 0.0;
    for (std::size_t i = primes.size(); i-- > 0;) {
        const double p = primes[i];
        const double lp = std::log(p);
        const cd z = values[i] * std::exp(-s * lp);
        cd power = z;
        double pk = p;
        while (pk <= cutoff) {
            acc += lp * power;
            ro += kEps * std::abs(acc) + (std::abs(s) * lp + 8.0) * kEps * lp * std::abs(power);
            power *= z;
            pk *= p;
        }
    }
    return {-acc, von_mangoldt_tail(cutoff, sigma), ro};
}

CertifiedValue log_derivative(const MultiplicativeFunction& f, cd s, double target_radius, const PrimeTable& table,
                              Reach reach) {
    require_half_plane(s, "log_derivative");
    require_target(target_radius);
    const auto form = f.archetype_form();
    if (!form) return von_mangoldt_series(f, s, target_radius, table, reach);
    const cd shifted = s - cd(0.0, form->t);
    if (!form->liouville) return l_log_derivative(form->chi, shifted, target_radius);
    const DirichletCharacter chi2 = multiply_characters(form->chi, form->chi);
    const CertifiedValue a = l_log_derivative(chi2, 2.0 * shifted, target_radius / 4.0);
    const CertifiedValue b = l_log_derivative(form->chi, shifted, target_radius / 2.0);
    return {2.0 * a.value - b.value, 2.0 * a.radius + b.radius, 2.0 * a.roundoff + b.roundoff + 4.0 * kEps * std::abs(b.value)};
}

}  // namespace pretend

#include "pretend/charsums.hpp"

#include <algorithm>
#include <map>
#include <cmath>
#include <limits>
#include <numbers>

#include "pretend/distance.hpp"
#include "pretend/errors.hpp"
#include "pretend/parallel.hpp"

namespace pretend {

namespace {

using cd = std::complex<double>;

void require_length(std::uint64_t x, const char* what) {
    if (x < 1) throw DomainError(std::string(what) + ": x must be >= 1");
    if (x > kMaxSumLength)
        throw CapacityError(std::string(what) + ": x above " + std::to_string(kMaxSumLength));
}

void require_covered(std::uint64_t x, const PrimeTable& table, const char* what) {
    if (x > table.limit())
        throw CapacityError(std::string(what) + ": " + std::to_string(x) + " exceeds the prime table limit " +
                            std::to_string(table.limit()));
}

// alpha(n) = chi(n) n^{it}
cd alpha(const std::vector<cd>& values, std::uint64_t n, double t) {
    const cd v = values[n % values.size()];
    if (t == 0.0 || v == cd(0.0, 0.0)) return v;
    return v * std::polar(1.0, t * std::log(static_cast<double>(n)));
}

std::vector<DirichletCharacter> nonprincipal_primitive(std::uint64_t q) {
    std::vector<DirichletCharacter> out;
    for (auto& chi : primitive_characters(q))
        if (!chi.is_principal()) out.push_back(std::move(chi));
    return out;
}

std::vector<std::uint64_t> divisor_counts(std::uint64_t N) {
    std::vector<std::uint64_t> d(N + 1, 0);
    for (std::uint64_t a = 1; a <= N; ++a)
        for (std::uint64_t m = a; m <= N; m += a) ++d[m];
    return d;
}

// Primes up to y with reciprocals, for repeated character distances.
struct PrimeWeights {
    std::vector<std::uint32_t> primes;
    std::vector<double> inv;
};

PrimeWeights prime_weights(std::uint64_t y, const PrimeTable& table) {
    const auto ps = table.primes_upto(y);
    PrimeWeights w;
    w.primes.assign(ps.begin(), ps.end());
    w.inv.reserve(ps.size());
    for (auto p : ps) w.inv.push_back(1.0 / static_cast<double>(p));
    return w;
}

// Sum of 1/p over primes p <= y in each residue class mod L.
std::vector<double> residue_weights(std::uint64_t L, const PrimeWeights& w) {
    std::vector<double> W(L, 0.0);
    for (std::size_t i = w.primes.size(); i-- > 0;) W[w.primes[i] % L] += w.inv[i];
    return W;
}

// D(chi, psi; y)^2 from value tables and residue weights mod a common multiple
// of both moduli.
double residue_distance(const std::vector<cd>& a, const std::vector<cd>& b, const std::vector<double>& W) {
    double acc = 0.0;
    for (std::size_t r = 0; r < W.size(); ++r) {
        if (W[r] == 0.0) continue;
        const cd z = a[r % a.size()] * std::conj(b[r % b.size()]);
        acc += std::max(0.0, 1.0 - z.real()) * W[r];
    }
    return acc;
}

struct Candidate {
    DirichletCharacter chi;
    std::vector<cd> values;
};

// Primitive characters with conductor in [1, m_max], by (modulus, index).
std::vector<Candidate> primitive_candidates(std::uint64_t m_max) {
    std::vector<Candidate> out;
    for (std::uint64_t m = 1; m <= m_max; ++m)
        for (auto& chi : primitive_characters(m)) {
            auto values = character_value_table(chi);
            out.push_back({std::move(chi), std::move(values)});
        }
    return out;
}

std::string fmt(double v) { return format_double(v); }

}  // namespace

std::vector<cd> character_value_table(const DirichletCharacter& chi) {
    const std::uint64_t E = chi.group().exponent();
    std::vector<cd> roots(E);
    for (std::uint64_t k = 0; k < E; ++k) roots[k] = UnitValue::fraction(static_cast<std::int64_t>(k), E).to_complex();
    const auto phases = chi.phase_table();
    std::vector<cd> out(phases.size());
    for (std::size_t r = 0; r < phases.size(); ++r) out[r] = phases[r] < 0 ? cd(0.0, 0.0) : roots[phases[r]];
    return out;
}

CharSumProfile pv_profile(const DirichletCharacter& chi) {
    if (chi.is_principal()) throw DomainError("pv_profile: principal character has unbounded partial sums");
    const auto values = character_value_table(chi);
    const std::uint64_t q = chi.modulus();
    cd sum = 0.0;
    double best = 0.0;
    std::uint64_t arg = 0;
    for (std::uint64_t n = 1; n <= q; ++n) {
        sum += values[n % q];
        const double m = std::abs(sum);
        if (m > best) {
            best = m;
            arg = n;
        }
    }
    const double qd = static_cast<double>(q);
    const double bound = std::sqrt(qd) * std::log(qd);
    return {chi, best, arg, bound, best / bound};
}

std::vector<CharSumProfile> pv_scan(std::uint64_t q_lo, std::uint64_t q_hi, unsigned jobs) {
    q_lo = std::max<std::uint64_t>(q_lo, 1);
    if (q_hi < q_lo) return {};
    std::vector<std::vector<CharSumProfile>> slots(q_hi - q_lo + 1);
    parallel_for(slots.size(), jobs, [&](std::size_t i) {
        for (const auto& chi : nonprincipal_primitive(q_lo + i)) slots[i].push_back(pv_profile(chi));
    });
    std::vector<CharSumProfile> out;
    for (auto& s : slots)
        for (auto& p : s) out.push_back(std::move(p));
    return out;
}

ResultTable pv_table(const std::vector<CharSumProfile>& profiles) {
    ResultTable table;
    table.columns = {"q", "chi", "max_abs", "argmax_N", "pv_bound", "ratio"};
    for (const auto& p : profiles)
        table.add_row({static_cast<std::int64_t>(p.chi.modulus()), p.chi.to_string(), p.max_abs,
                       static_cast<std::int64_t>(p.argmax_N), p.pv_bound, p.ratio});
    return table;
}

cd d_chi_sum(const DirichletCharacter& chi, std::uint64_t x, double t) {
    require_length(x, "d_chi_sum");
    const auto values = character_value_table(chi);
    std::uint64_t y = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (y * y > x) --y;
    while ((y + 1) * (y + 1) <= x) ++y;

    std::vector<cd> head(y + 1);      // alpha(a), a <= y
    std::vector<cd> at_quot(y + 1);   // A(x / a), a <= y
    cd A = 0.0, A_y = 0.0;
    std::uint64_t next = y;  // thresholds x/a ascend as a descends
    for (std::uint64_t n = 1; n <= x; ++n) {
        const cd v = alpha(values, n, t);
        A += v;
        if (n <= y) head[n] = v;
        if (n == y) A_y = A;
        while (next >= 1 && x / next == n) at_quot[next--] = A;
    }
    cd first = 0.0, second = 0.0;
    for (std::uint64_t a = 1; a <= y; ++a) {
        first += head[a] * std::conj(at_quot[a]);
        second += std::conj(head[a]) * at_quot[a];
    }
    return first + second - A_y * std::conj(A_y);
}

double dchi_ratio(const DirichletCharacter& chi, std::uint64_t x, double t) {
    const double q = static_cast<double>(chi.modulus());
    if (q < 2) throw DomainError("dchi_ratio needs q >= 2");
    const double lq = std::log(q);
    const double twist = 1.0 + std::abs(t) * std::log(static_cast<double>(x));
    const double bound = std::sqrt(q * static_cast<double>(x)) * lq * twist + q * lq * lq * twist * twist;
    return std::abs(d_chi_sum(chi, x, t)) / bound;
}

double twisted_pv_ratio(const DirichletCharacter& chi, double t, std::uint64_t x) {
    require_length(x, "twisted_pv_ratio");
    const double q = static_cast<double>(chi.modulus());
    if (q < 2) throw DomainError("twisted_pv_ratio needs q >= 2");
    const auto values = character_value_table(chi);
    cd sum = 0.0;
    double best = 0.0;
    for (std::uint64_t n = 1; n <= x; ++n) {
        sum += alpha(values, n, t);
        best = std::max(best, std::abs(sum));
    }
    return best / (std::sqrt(q) * std::log(q) * (1.0 + std::abs(t) * std::log(static_cast<double>(x))));
}

std::vector<cd> d_chi_values(const DirichletCharacter& chi, std::uint64_t N) {
    require_length(N, "d_chi_values");
    const auto values = character_value_table(chi);
    std::vector<cd> a(N + 1), b(N + 1);
    for (std::uint64_t n = 1; n <= N; ++n) {
        a[n] = values[n % values.size()];
        b[n] = std::conj(a[n]);
    }
    return dirichlet_convolve<cd>(a, b);
}

std::vector<cd> h_sequence(const DirichletCharacter& chi, std::uint64_t N, const PrimeTable& table) {
    require_covered(N, table, "h_sequence");
    const auto dchi = d_chi_values(chi, N);
    const auto counts = divisor_counts(N);
    std::vector<cd> d(N + 1);
    for (std::uint64_t n = 1; n <= N; ++n) d[n] = static_cast<double>(counts[n]);
    return dirichlet_deconvolve(std::span<const cd>(d), std::span<const cd>(dchi));
}

std::vector<CyclotomicInteger> d_chi_values_exact(const DirichletCharacter& chi, std::uint64_t N) {
    require_length(N, "d_chi_values_exact");
    const auto E = static_cast<unsigned>(chi.group().exponent());
    const auto phases = chi.phase_table();
    const std::uint64_t q = chi.modulus();
    std::vector<CyclotomicInteger> a(N + 1, CyclotomicInteger(E, 0)), b(N + 1, CyclotomicInteger(E, 0));
    for (std::uint64_t n = 1; n <= N; ++n) {
        const std::int64_t k = phases[n % q];
        if (k < 0) continue;
        a[n] = CyclotomicInteger::root(E, static_cast<std::uint64_t>(k));
        b[n] = CyclotomicInteger::root(E, (E - static_cast<std::uint64_t>(k)) % E);
    }
    return dirichlet_convolve<CyclotomicInteger>(a, b);
}

std::vector<CyclotomicInteger> h_sequence_exact(const DirichletCharacter& chi, std::uint64_t N) {
    const auto E = static_cast<unsigned>(chi.group().exponent());
    const auto dchi = d_chi_values_exact(chi, N);
    const auto counts = divisor_counts(N);
    std::vector<CyclotomicInteger> d(N + 1, CyclotomicInteger(E, 0));
    for (std::uint64_t n = 1; n <= N; ++n) d[n] = CyclotomicInteger(E, static_cast<std::int64_t>(counts[n]));
    return dirichlet_deconvolve<CyclotomicInteger>(d, dchi);
}

Prop6Scan prop6_scan(std::uint64_t q_lo, std::uint64_t q_hi, std::vector<std::uint64_t> x_values,
                     const PrimeTable& table, unsigned jobs, double t) {
    std::sort(x_values.begin(), x_values.end());
    x_values.erase(std::unique(x_values.begin(), x_values.end()), x_values.end());
    if (x_values.empty()) throw DomainError("prop6_scan: no x values");
    if (x_values.front() < 2) throw DomainError("prop6_scan: x must be >= 2");
    require_covered(x_values.back(), table, "prop6_scan");
    q_lo = std::max<std::uint64_t>(q_lo, 2);
    if (q_hi < q_lo) return {{}, std::numeric_limits<double>::infinity()};

    const PrimeWeights w = prime_weights(x_values.back(), table);
    // index of the first prime above each x
    std::vector<std::size_t> ends;
    for (auto x : x_values) ends.push_back(table.primes_upto(x).size());
    const double twist = 1.0 + std::abs(t);
    std::vector<cd> phases;
    if (t != 0.0) {
        phases.reserve(ends.back());
        for (std::size_t i = 0; i < ends.back(); ++i)
            phases.push_back(std::polar(1.0, t * std::log(static_cast<double>(w.primes[i]))));
    }

    std::vector<std::vector<ScanRow>> slots(q_hi - q_lo + 1);
    parallel_for(slots.size(), jobs, [&](std::size_t slot) {
        const std::uint64_t q = q_lo + slot;
        const auto chars = nonprincipal_primitive(q);
        if (chars.empty()) return;
        const double lq = std::log(static_cast<double>(q) * twist);
        auto emit = [&](const DirichletCharacter& chi, std::size_t xi, double d2) {
            const std::uint64_t x = x_values[xi];
            if (x < q) return;
            const double lx = std::log(static_cast<double>(x));
            slots[slot].push_back({q, chi.to_string(), x, d2, 0.5 * std::log(lx / lq), lq / lx * std::exp(2.0 * d2)});
        };
        if (t == 0.0) {
            // W[r] = sum of 1/p over primes p = r mod q, p <= x, one snapshot per x.
            std::vector<std::vector<double>> snapshots;
            std::vector<double> W(q, 0.0);
            std::size_t i = 0;
            for (std::size_t xi = 0; xi < x_values.size(); ++xi) {
                for (; i < ends[xi]; ++i) W[w.primes[i] % q] += w.inv[i];
                snapshots.push_back(W);
            }
            for (const auto& chi : chars) {
                const auto values = character_value_table(chi);
                std::vector<double> weight(q);
                for (std::uint64_t r = 0; r < q; ++r) weight[r] = std::max(0.0, 1.0 - values[r].real());
                for (std::size_t xi = 0; xi < x_values.size(); ++xi) {
                    double d2 = 0.0;
                    for (std::uint64_t r = 0; r < q; ++r) d2 += snapshots[xi][r] * weight[r];
                    emit(chi, xi, d2);
                }
            }
        } else {
            // W[r] as above and V[r] = sum of p^{it} / p over the same primes:
            // D^2 = sum_r W[r] - Re chi(r) V[r].
            std::vector<std::vector<double>> w_snap;
            std::vector<std::vector<cd>> v_snap;
            std::vector<double> W(q, 0.0);
            std::vector<cd> V(q, 0.0);
            std::size_t i = 0;
            for (std::size_t xi = 0; xi < x_values.size(); ++xi) {
                for (; i < ends[xi]; ++i) {
                    const std::uint64_t r = w.primes[i] % q;
                    W[r] += w.inv[i];
                    V[r] += phases[i] * w.inv[i];
                }
                w_snap.push_back(W);
                v_snap.push_back(V);
            }
            for (const auto& chi : chars) {
                const auto values = character_value_table(chi);
                for (std::size_t xi = 0; xi < x_values.size(); ++xi) {
                    double d2 = 0.0;
                    for (std::uint64_t r = 0; r < q; ++r) d2 += w_snap[xi][r] - (values[r] * v_snap[xi][r]).real();
                    emit(chi, xi, std::max(0.0, d2));
                }
            }
        }
    });
    Prop6Scan out{{}, std::numeric_limits<double>::infinity()};
    for (auto& s : slots)
        for (auto& row : s) {
            out.min_implied_c = std::min(out.min_implied_c, row.implied_c);
            out.rows.push_back(std::move(row));
        }
    return out;
}

ResultTable scan_table(const std::vector<ScanRow>& rows) {
    ResultTable table;
    table.columns = {"q", "chi", "x", "D2", "bound", "implied_c"};
    for (const auto& r : rows)
        table.add_row({static_cast<std::int64_t>(r.q), r.chi, static_cast<std::int64_t>(r.x), r.distance_squared,
                       r.bound, r.implied_c});
    return table;
}

PairReport prop6_pair(const MultiplicativeFunction& f, const DirichletCharacter& chi, const DirichletCharacter& psi,
                      std::uint64_t x, std::uint64_t Q, double c, const PrimeTable& table) {
    if (Q < 2) throw DomainError("prop6_pair needs Q >= 2");
    const double lhs = distance(f, MultiplicativeFunction::character(chi), x, table).squared +
                       distance(f, MultiplicativeFunction::character(psi), x, table).squared;
    const double bound =
        std::log(c * std::log(static_cast<double>(x)) / (2.0 * std::log(static_cast<double>(Q)))) / 8.0;
    return {lhs, bound};
}

double lemma_main_coefficient(int lemma, double g_or_j) {
    switch (lemma) {
        case 3:
            return 1.0 - g_or_j / std::numbers::pi * std::sin(std::numbers::pi / g_or_j);
        case 4:
            return 1.0 / g_or_j;
        case 5:
            return 1.0 - 1.0 / std::sqrt(g_or_j);
    }
    throw DomainError("lemma must be 3, 4 or 5");
}

std::vector<LemmaRow> lemma_distance_scan(const LemmaScanConfig& config, const PrimeTable& table) {
    const int lemma = config.lemma;
    if (lemma < 3 || lemma > 5) throw DomainError("lemma must be 3, 4 or 5");
    if (config.y < 16) throw DomainError("lemma scans need y >= 16");
    require_covered(config.y, table, "lemma_distance_scan");
    const unsigned g = config.g != 0 ? config.g : (lemma == 3 ? 3 : 2);
    if (lemma == 3 && (g < 3 || g % 2 == 0)) throw DomainError("Lemma 3 needs an odd order g >= 3");
    if (lemma == 4 && g < 2) throw DomainError("Lemma 4 needs g >= 2");
    if (!(config.A > 0.0)) throw DomainError("A must be positive");

    const double log_y = std::log(static_cast<double>(config.y));
    const double loglogy = std::log(log_y);
    const PrimeWeights w = prime_weights(config.y, table);

    std::uint64_t m_max = 0;
    if (lemma == 3) m_max = static_cast<std::uint64_t>(std::floor(std::pow(log_y, config.A)));
    if (lemma == 4) m_max = static_cast<std::uint64_t>(std::floor(log_y));
    if (lemma == 5) m_max = static_cast<std::uint64_t>(std::ceil(log_y)) - 1;
    const auto candidates = primitive_candidates(m_max);

    std::vector<DirichletCharacter> family;
    std::vector<DirichletCharacter> partner;  // Lemma 4: conj(chi)^{g-1}
    for (std::uint64_t q = std::max<std::uint64_t>(config.q_lo, 1); q <= config.q_hi; ++q)
        for (auto& chi : nonprincipal_primitive(q)) {
            if (lemma == 3 && chi.order() != g) continue;
            if (lemma == 4) {
                DirichletCharacter last = DirichletCharacter::principal(q);
                for (unsigned k = 1; k < g; ++k) last = multiply_characters(last, chi.conj());
                if (!last.is_primitive()) continue;
                partner.push_back(last);
            }
            family.push_back(chi);
        }
    if (family.empty()) throw DomainError("lemma scan: empty character family");

    // family members sharing a modulus share their residue weights
    std::vector<std::size_t> group_start;
    for (std::size_t i = 0; i < family.size(); ++i)
        if (i == 0 || family[i].modulus() != family[i - 1].modulus()) group_start.push_back(i);
    group_start.push_back(family.size());

    auto lemma_rows = [&](std::size_t i, auto& dist, std::vector<LemmaRow>& rows) {
        const auto& chi = family[i];
        const auto values = character_value_table(chi);
        const std::string base = "q=" + std::to_string(chi.modulus()) + ";chi=" + chi.to_string();
        auto push = [&](std::string params, double lhs, double coeff) {
            const double ratio = coeff == 0.0 ? std::numeric_limits<double>::quiet_NaN() : lhs / loglogy / coeff;
            rows.push_back({lemma, std::move(params), lhs, loglogy, ratio, coeff});
        };
        if (lemma == 3) {
            double best = std::numeric_limits<double>::infinity();
            const Candidate* arg = nullptr;
            for (const auto& c : candidates) {
                if (c.chi.parity() * chi.parity() != -1) continue;
                const double d = dist(values, c);
                if (d < best) {
                    best = d;
                    arg = &c;
                }
            }
            if (!arg) return;
            push(base + ";g=" + std::to_string(g) + ";A=" + fmt(config.A) + ";xi=" + arg->chi.to_string(), best,
                 lemma_main_coefficient(3, g));
        } else if (lemma == 4) {
            if (candidates.size() < 2) return;
            const auto last_values = character_value_table(partner[i]);
            // best and second-best candidate for the repeated coordinate and the last one
            struct Pick {
                double best = std::numeric_limits<double>::infinity();
                double second = std::numeric_limits<double>::infinity();
                std::size_t arg = 0;
            };
            Pick rep, fin;
            auto offer = [](Pick& pk, double d, std::size_t j) {
                if (d < pk.best) {
                    pk.second = pk.best;
                    pk.best = d;
                    pk.arg = j;
                } else if (d < pk.second) {
                    pk.second = d;
                }
            };
            for (std::size_t j = 0; j < candidates.size(); ++j) {
                offer(rep, dist(values, candidates[j]), j);
                offer(fin, dist(last_values, candidates[j]), j);
            }
            DirichletCharacter prod = candidates[fin.arg].chi;
            for (unsigned k = 1; k < g; ++k) prod = multiply_characters(prod, candidates[rep.arg].chi);
            const bool trivial = prod.is_principal();
            double lhs = (g - 1) * rep.best + fin.best;
            if (trivial) lhs += std::min(rep.second - rep.best, fin.second - fin.best);
            push(base + ";g=" + std::to_string(g) + ";xi=" + candidates[rep.arg].chi.to_string() +
                     ";xi_g=" + candidates[fin.arg].chi.to_string() + ";best_tuple_trivial=" + (trivial ? "1" : "0"),
                 lhs, lemma_main_coefficient(4, g));
        } else {
            std::vector<std::pair<double, std::size_t>> ranked;
            for (std::size_t j = 0; j < candidates.size(); ++j) {
                if (candidates[j].chi == chi) continue;
                ranked.emplace_back(dist(values, candidates[j]), j);
            }
            std::stable_sort(ranked.begin(), ranked.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            const auto count = std::min<std::size_t>(ranked.size(), static_cast<std::size_t>(std::floor(config.A)));
            for (std::size_t j = 1; j <= count; ++j)
                push(base + ";j=" + std::to_string(j) + ";psi=" + candidates[ranked[j - 1].second].chi.to_string(),
                     ranked[j - 1].first, lemma_main_coefficient(5, static_cast<double>(j)));
        }
    };

    std::vector<std::vector<LemmaRow>> slots(family.size());
    parallel_for(group_start.size() - 1, config.jobs, [&](std::size_t grp) {
        const std::uint64_t q = family[group_start[grp]].modulus();
        std::map<std::uint64_t, std::vector<double>> by_modulus;
        auto dist = [&](const std::vector<cd>& a, const Candidate& c) {
            const std::uint64_t m = c.chi.modulus();
            auto it = by_modulus.find(m);
            if (it == by_modulus.end()) it = by_modulus.emplace(m, residue_weights(lcm_u64(q, m), w)).first;
            return residue_distance(a, c.values, it->second);
        };
        for (std::size_t i = group_start[grp]; i < group_start[grp + 1]; ++i)
            lemma_rows(i, dist, slots[i]);
    });
    std::vector<LemmaRow> out;
    for (auto& s : slots)
        for (auto& r : s) out.push_back(std::move(r));
    if (out.empty()) throw DomainError("lemma scan: no admissible comparison characters");
    return out;
}

ResultTable lemma_table(const std::vector<LemmaRow>& rows) {
    ResultTable table;
    table.columns = {"lemma", "params", "lhs", "loglogy", "ratio", "main_coeff"};
    for (const auto& r : rows)
        table.add_row({static_cast<std::int64_t>(r.lemma), r.params, r.lhs, r.loglogy, r.ratio, r.main_coeff});
    return table;
}

}  // namespace pretend

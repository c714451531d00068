#include "pretend/characters.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include "pretend/errors.hpp"

namespace pretend {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Inverse of a modulo m, gcd(a, m) = 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        const std::int64_t quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

// x = r1 (mod m1), x = r2 (mod m2), coprime moduli; result in [0, m1 m2).
std::uint64_t crt(std::uint64_t r1, std::uint64_t m1, std::uint64_t r2, std::uint64_t m2) {
    if (m2 == 1) return r1 % m1;
    if (m1 == 1) return r2 % m2;
    const std::uint64_t m = m1 * m2;
    const std::uint64_t diff = (r2 % m2 + m2 - r1 % m2) % m2;
    const std::uint64_t k = mulmod(diff, inverse_mod(m1 % m2, m2), m2);
    return (r1 % m1 + m1 * k) % m;
}

std::uint64_t smallest_primitive_root(std::uint64_t p, std::uint64_t pe) {
    const std::uint64_t phi = pe / p * (p - 1);
    const auto factors = distinct_prime_factors(phi);
    for (std::uint64_t g = 2; g < pe; ++g) {
        if (g % p == 0) continue;
        bool generates = true;
        for (std::uint64_t r : factors) {
            if (powmod(g, phi / r, pe) == 1) {
                generates = false;
                break;
            }
        }
        if (generates) return g;
    }
    return 1;  // pe = 2: the trivial group
}

// Exponents of the character on `group` whose value at each component
// generator is given by value_at.
template <class ValueAt>
DirichletCharacter character_from_generator_values(std::shared_ptr<const CharacterGroup> group, ValueAt value_at) {
    std::vector<std::uint64_t> exps;
    for (const auto& c : group->components()) {
        const UnitValue v = value_at(c.generator);
        if (v.zero || c.order % v.den != 0)
            throw DomainError("values do not define a character mod " + std::to_string(group->modulus()));
        exps.push_back(v.num * (c.order / v.den));
    }
    return DirichletCharacter(std::move(group), std::move(exps));
}

}  // namespace

// ---------------------------------------------------------------------------
// UnitValue

UnitValue UnitValue::fraction(std::int64_t num, std::uint64_t den) {
    if (den == 0) throw DomainError("root of unity with zero denominator");
    const auto d = static_cast<std::int64_t>(den);
    std::int64_t r = num % d;
    if (r < 0) r += d;
    const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(r), den);
    return {false, static_cast<std::uint64_t>(r) / g, den / g};
}

UnitValue UnitValue::conj() const {
    if (zero) return *this;
    return fraction(-static_cast<std::int64_t>(num), den);
}

UnitValue operator*(const UnitValue& a, const UnitValue& b) {
    if (a.zero || b.zero) return UnitValue::zero_value();
    const std::uint64_t l = std::lcm(a.den, b.den);
    const std::uint64_t n = (a.num * (l / a.den) + b.num * (l / b.den)) % l;
    return UnitValue::fraction(static_cast<std::int64_t>(n), l);
}

std::complex<double> UnitValue::to_complex() const {
    if (zero) return {0.0, 0.0};
    switch (den) {
        case 1: return {1.0, 0.0};
        case 2: return {-1.0, 0.0};
        case 4: return num == 1 ? std::complex<double>(0.0, 1.0) : std::complex<double>(0.0, -1.0);
        default: break;
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den));
}

CyclotomicInteger UnitValue::to_cyclotomic(unsigned order) const {
    if (zero) return CyclotomicInteger(order, 0);
    if (order % den != 0)
        throw DomainError("root of unity of order " + std::to_string(den) + " not in Z[zeta_" +
                          std::to_string(order) + "]");
    return CyclotomicInteger::root(order, num * (order / den));
}

// ---------------------------------------------------------------------------
// CharacterGroup

CharacterGroup::CharacterGroup(std::uint64_t q) : q_(q) {
    if (q < 1 || q > kMaxModulus)
        throw CapacityError("character modulus " + std::to_string(q) + " outside [1, " +
                            std::to_string(kMaxModulus) + "]");
    std::uint64_t rest = q;
    for (std::uint64_t p : distinct_prime_factors(q)) {
        LocalPart part{p, 0, 1, components_.size(), 0, {}, {}};
        while (rest % p == 0) {
            rest /= p;
            part.modulus *= p;
            ++part.exponent;
        }
        const std::uint64_t pe = part.modulus;
        const std::uint64_t others = q / pe;
        const auto lift = [&](std::uint64_t g) { return crt(g % pe, pe, 1, others); };
        part.log_a.assign(pe, -1);

        if (p == 2 && part.exponent >= 3) {
            part.log_b.assign(pe, -1);
            const std::uint64_t half_order = pe / 4;
            std::uint64_t five_pow = 1;
            for (std::uint64_t b = 0; b < half_order; ++b) {
                part.log_a[five_pow] = 0;
                part.log_b[five_pow] = static_cast<std::int32_t>(b);
                part.log_a[pe - five_pow] = 1;
                part.log_b[pe - five_pow] = static_cast<std::int32_t>(b);
                five_pow = five_pow * 5 % pe;
            }
            components_.push_back({lift(pe - 1), 2, p, part.exponent});
            components_.push_back({lift(5), half_order, p, part.exponent});
            part.component_count = 2;
        } else if (pe == 2) {
            part.log_a[1] = 0;
        } else {
            const std::uint64_t g = smallest_primitive_root(p, pe);
            const std::uint64_t order = pe / p * (p - 1);
            std::uint64_t x = 1;
            for (std::uint64_t k = 0; k < order; ++k) {
                part.log_a[x] = static_cast<std::int32_t>(k);
                x = x * g % pe;
            }
            components_.push_back({lift(g), order, p, part.exponent});
            part.component_count = 1;
        }
        parts_.push_back(std::move(part));
    }
    for (const auto& c : components_) {
        size_ *= c.order;
        exponent_ = std::lcm(exponent_, c.order);
    }
}

bool CharacterGroup::is_unit(std::uint64_t a) const { return std::gcd(a % q_, q_) == 1; }

bool CharacterGroup::dlog(std::uint64_t a, std::span<std::uint64_t> out) const {
    if (out.size() < components_.size()) throw DomainError("dlog output span too small");
    for (const auto& part : parts_) {
        const std::uint64_t r = a % part.modulus;
        const std::int32_t la = part.log_a[r];
        if (la < 0) return false;
        if (part.component_count >= 1) out[part.first_component] = static_cast<std::uint64_t>(la);
        if (part.component_count == 2) out[part.first_component + 1] = static_cast<std::uint64_t>(part.log_b[r]);
    }
    return true;
}

std::vector<std::uint64_t> CharacterGroup::dlog(std::uint64_t a) const {
    std::vector<std::uint64_t> out(components_.size());
    if (!dlog(a, out)) throw DomainError(std::to_string(a) + " is not a unit mod " + std::to_string(q_));
    return out;
}

std::uint64_t CharacterGroup::compose(std::span<const std::uint64_t> exponents) const {
    if (exponents.size() != components_.size()) throw DomainError("exponent vector has the wrong length");
    std::uint64_t r = 1 % q_;
    for (std::size_t i = 0; i < components_.size(); ++i)
        r = mulmod(r, powmod(components_[i].generator, exponents[i], q_), q_);
    return r;
}

std::span<const std::uint32_t> CharacterGroup::scaled_dlog_table() const {
    std::call_once(table_once_, [this] {
        const std::size_t k = components_.size();
        scaled_table_.assign(q_ * k, kNonUnit);
        std::array<std::uint64_t, 32> x{};
        for (std::uint64_t r = 0; r < q_; ++r) {
            if (!dlog(r, std::span<std::uint64_t>(x.data(), k))) continue;
            for (std::size_t i = 0; i < k; ++i)
                scaled_table_[r * k + i] = static_cast<std::uint32_t>(x[i] * (exponent_ / components_[i].order));
        }
    });
    return scaled_table_;
}

std::shared_ptr<const CharacterGroup> build_character_group(std::uint64_t q) {
    static std::mutex mu;
    static std::map<std::uint64_t, std::weak_ptr<const CharacterGroup>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(q); it != cache.end())
            if (auto sp = it->second.lock()) return sp;
    }
    auto group = std::make_shared<const CharacterGroup>(q);
    std::lock_guard lock(mu);
    auto& slot = cache[q];
    if (auto sp = slot.lock()) return sp;
    slot = group;
    return group;
}

// ---------------------------------------------------------------------------
// DirichletCharacter

DirichletCharacter::DirichletCharacter(std::shared_ptr<const CharacterGroup> group,
                                       std::vector<std::uint64_t> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
    if (!group_) throw DomainError("character without a group");
    const auto comps = group_->components();
    if (exponents_.size() != comps.size())
        throw DomainError("character mod " + std::to_string(group_->modulus()) + " needs " +
                          std::to_string(comps.size()) + " exponents, got " + std::to_string(exponents_.size()));
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (exponents_[i] >= comps[i].order)
            throw DomainError("character exponent " + std::to_string(exponents_[i]) + " not below component order " +
                              std::to_string(comps[i].order));
}

DirichletCharacter DirichletCharacter::principal(std::uint64_t q) {
    auto g = build_character_group(q);
    std::vector<std::uint64_t> zeros(g->rank(), 0);
    return DirichletCharacter(std::move(g), std::move(zeros));
}

DirichletCharacter DirichletCharacter::from_index(std::shared_ptr<const CharacterGroup> group, std::uint64_t index) {
    if (index >= group->size())
        throw DomainError("character index " + std::to_string(index) + " out of range mod " +
                          std::to_string(group->modulus()));
    std::vector<std::uint64_t> exps;
    for (const auto& c : group->components()) {
        exps.push_back(index % c.order);
        index /= c.order;
    }
    return DirichletCharacter(std::move(group), std::move(exps));
}

std::uint64_t DirichletCharacter::index() const {
    std::uint64_t idx = 0, radix = 1;
    const auto comps = group_->components();
    for (std::size_t i = 0; i < comps.size(); ++i) {
        idx += exponents_[i] * radix;
        radix *= comps[i].order;
    }
    return idx;
}

UnitValue DirichletCharacter::value(std::uint64_t n) const {
    const auto comps = group_->components();
    std::array<std::uint64_t, 32> x{};
    if (!group_->dlog(n, std::span<std::uint64_t>(x.data(), comps.size()))) return UnitValue::zero_value();
    const std::uint64_t L = group_->exponent();
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < comps.size(); ++i)
        acc = (acc + mulmod(exponents_[i] * (L / comps[i].order), x[i], L)) % L;
    return UnitValue::fraction(static_cast<std::int64_t>(acc), L);
}

std::uint64_t DirichletCharacter::order() const {
    std::uint64_t ord = 1;
    const auto comps = group_->components();
    for (std::size_t i = 0; i < comps.size(); ++i)
        ord = std::lcm(ord, comps[i].order / std::gcd(exponents_[i], comps[i].order));
    return ord;
}

int DirichletCharacter::parity() const {
    const UnitValue v = value(modulus() - 1 + (modulus() == 1 ? 1 : 0));
    return v.den == 1 ? 1 : -1;
}

bool DirichletCharacter::is_principal() const {
    for (auto e : exponents_)
        if (e != 0) return false;
    return true;
}

std::uint64_t DirichletCharacter::conductor() const {
    // Local conductor of each prime power, from the exponent of its component(s).
    const auto comps = group_->components();
    std::uint64_t cond = 1;
    std::size_t i = 0;
    while (i < comps.size()) {
        const std::uint64_t p = comps[i].prime;
        const unsigned k = comps[i].prime_exponent;
        if (p == 2 && k >= 3) {
            const std::uint64_t a = exponents_[i], b = exponents_[i + 1];
            if (b != 0) {
                // smallest c >= 3 with 2^{k-c} | b
                unsigned c = 3;
                while ((b % (std::uint64_t{1} << (k - c))) != 0) ++c;
                cond *= std::uint64_t{1} << c;
            } else if (a != 0) {
                cond *= 4;
            }
            i += 2;
            continue;
        }
        const std::uint64_t e = exponents_[i];
        if (e != 0) {
            // smallest c >= 1 with p^{k-c} | e (the character is trivial on 1 + p^c Z)
            unsigned c = 1;
            auto divides = [&](unsigned cc) {
                std::uint64_t pk = 1;
                for (unsigned j = 0; j < k - cc; ++j) pk *= p;
                return e % pk == 0;
            };
            while (!divides(c)) ++c;
            for (unsigned j = 0; j < c; ++j) cond *= p;
        }
        ++i;
    }
    return cond;
}

DirichletCharacter DirichletCharacter::conj() const {
    std::vector<std::uint64_t> exps(exponents_.size());
    const auto comps = group_->components();
    for (std::size_t i = 0; i < exps.size(); ++i)
        exps[i] = exponents_[i] == 0 ? 0 : comps[i].order - exponents_[i];
    return DirichletCharacter(group_, std::move(exps));
}

std::vector<std::int64_t> DirichletCharacter::phase_table() const {
    const std::uint64_t q = modulus();
    const std::size_t k = group_->rank();
    const std::uint64_t L = group_->exponent();
    const auto table = group_->scaled_dlog_table();
    std::vector<std::int64_t> out(q, -1);
    for (std::uint64_t r = 0; r < q; ++r) {
        if (k == 0) {
            if (group_->is_unit(r)) out[r] = 0;
            continue;
        }
        const std::uint32_t* row = table.data() + r * k;
        if (row[0] == CharacterGroup::kNonUnit) continue;
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < k; ++i) acc += exponents_[i] * row[i] % L;
        out[r] = static_cast<std::int64_t>(acc % L);
    }
    return out;
}

std::string DirichletCharacter::to_string() const {
    std::string s = std::to_string(modulus()) + ":";
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(exponents_[i]);
    }
    return s;
}

bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.modulus() == b.modulus() && a.exponents_ == b.exponents_;
}

UnitValue evaluate_character(const DirichletCharacter& chi, std::uint64_t n) { return chi.value(n); }

CharacterInvariants character_invariants(const DirichletCharacter& chi) {
    return {chi.conductor(), chi.order(), chi.parity()};
}

std::uint64_t conductor_by_divisor_search(const DirichletCharacter& chi) {
    const std::uint64_t q = chi.modulus();
    for (std::uint64_t f = 1; f <= q; ++f) {
        if (q % f) continue;
        bool factors = true;
        for (std::uint64_t a = 1; a < q + 1 && factors; a += f) {
            if (std::gcd(a, q) != 1) continue;
            if (!(chi.value(a) == UnitValue::one())) factors = false;
        }
        if (factors) return f;
    }
    return q;
}

DirichletCharacter multiply_characters(const DirichletCharacter& chi, const DirichletCharacter& psi) {
    const std::uint64_t q1 = chi.modulus(), q2 = psi.modulus();
    const std::uint64_t l = std::lcm(q1, q2);
    if (l > CharacterGroup::kMaxModulus)
        throw CapacityError("product character modulus " + std::to_string(l) + " exceeds " +
                            std::to_string(CharacterGroup::kMaxModulus));
    return character_from_generator_values(build_character_group(l),
                                           [&](std::uint64_t g) { return chi.value(g) * psi.value(g); });
}

DirichletCharacter primitive_inducing(const DirichletCharacter& chi) {
    const std::uint64_t q = chi.modulus();
    const std::uint64_t f = chi.conductor();
    if (f == q) return chi;
    // Part of q coprime to f: lifts must be 1 there to stay units mod q.
    std::uint64_t coprime_part = 1;
    {
        std::uint64_t rest = q;
        for (std::uint64_t p : distinct_prime_factors(q)) {
            std::uint64_t pe = 1;
            while (rest % p == 0) {
                rest /= p;
                pe *= p;
            }
            if (f % p != 0) coprime_part *= pe;
        }
    }
    return character_from_generator_values(build_character_group(f), [&](std::uint64_t g) {
        return chi.value(crt(g, f, 1, coprime_part));
    });
}

std::vector<DirichletCharacter> all_characters(std::uint64_t q) {
    auto group = build_character_group(q);
    std::vector<DirichletCharacter> out;
    out.reserve(group->size());
    for (std::uint64_t i = 0; i < group->size(); ++i) out.push_back(DirichletCharacter::from_index(group, i));
    return out;
}

std::vector<DirichletCharacter> primitive_characters(std::uint64_t q) {
    std::vector<DirichletCharacter> out;
    for (auto& chi : all_characters(q))
        if (chi.is_primitive()) out.push_back(std::move(chi));
    return out;
}

DirichletCharacter parse_character(const std::string& text) {
    const auto colon = text.find(':');
    const std::string qs = text.substr(0, colon);
    std::uint64_t q = 0;
    auto [ptr, ec] = std::from_chars(qs.data(), qs.data() + qs.size(), q);
    if (ec != std::errc() || ptr != qs.data() + qs.size() || q == 0)
        throw ParseError("bad character modulus in '" + text + "' (expected q:e1,e2,...)");
    std::vector<std::uint64_t> exps;
    if (colon != std::string::npos) {
        std::string rest = text.substr(colon + 1);
        std::size_t pos = 0;
        while (!rest.empty() && pos <= rest.size()) {
            const auto comma = rest.find(',', pos);
            const std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            std::uint64_t e = 0;
            auto [p2, ec2] = std::from_chars(item.data(), item.data() + item.size(), e);
            if (ec2 != std::errc() || p2 != item.data() + item.size() || item.empty())
                throw ParseError("bad character exponent '" + item + "' in '" + text + "'");
            exps.push_back(e);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    auto group = build_character_group(q);
    if (exps.empty() && group->rank() > 0 && colon == std::string::npos) exps.assign(group->rank(), 0);
    try {
        return DirichletCharacter(std::move(group), std::move(exps));
    } catch (const DomainError& e) {
        throw ParseError(std::string("character '") + text + "': " + e.what());
    }
}

}  // namespace pretend

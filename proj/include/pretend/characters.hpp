#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "pretend/cyclotomic.hpp"

namespace pretend {

// Zero, or the root of unity e^{2 pi i num/den} with 0 <= num < den and
// gcd(num, den) = 1.
struct UnitValue {
    bool zero = false;
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static UnitValue zero_value() { return {true, 0, 1}; }
    static UnitValue one() { return {false, 0, 1}; }
    // e^{2 pi i num/den}, reduced to lowest terms.
    static UnitValue fraction(std::int64_t num, std::uint64_t den);

    UnitValue conj() const;
    friend UnitValue operator*(const UnitValue& a, const UnitValue& b);
    bool operator==(const UnitValue&) const = default;

    // Exact for den in {1, 2, 4}.
    std::complex<double> to_complex() const;
    // The same value inside Z[zeta_order]; den must divide order.
    CyclotomicInteger to_cyclotomic(unsigned order) const;
};

// One cyclic factor of (Z/qZ)^*.
struct GroupComponent {
    std::uint64_t generator;      // lifted to a unit mod q, = 1 mod the other prime powers
    std::uint64_t order;
    std::uint64_t prime;          // the prime power p^e this factor lives in
    unsigned prime_exponent;
};

// (Z/qZ)^* as a product of cyclic groups: CRT over prime powers, the smallest
// primitive root for odd p^e, and <-1> x <5> for 2^k with k >= 3 (just <-1> for 4).
// Components are ordered by prime, with -1 before 5 at p = 2.
//
// Immutable once built; moduli up to kMaxModulus.
class CharacterGroup {
public:
    static constexpr std::uint64_t kMaxModulus = 1'000'000;

    explicit CharacterGroup(std::uint64_t q);

    std::uint64_t modulus() const { return q_; }
    std::span<const GroupComponent> components() const { return components_; }
    std::size_t rank() const { return components_.size(); }
    // phi(q), the number of characters.
    std::uint64_t size() const { return size_; }
    // lcm of the component orders.
    std::uint64_t exponent() const { return exponent_; }

    bool is_unit(std::uint64_t a) const;
    // Exponent vector x with prod g_i^{x_i} = a (mod q); false if a is not a unit.
    bool dlog(std::uint64_t a, std::span<std::uint64_t> out) const;
    std::vector<std::uint64_t> dlog(std::uint64_t a) const;
    std::uint64_t compose(std::span<const std::uint64_t> exponents) const;

    // Table of size rank() * q: entry [r * rank() + i] is the i-th discrete log
    // of r scaled to the group exponent, or kNonUnit. Built on first use.
    static constexpr std::uint32_t kNonUnit = 0xffffffffu;
    std::span<const std::uint32_t> scaled_dlog_table() const;

private:
    struct LocalPart {
        std::uint64_t prime;
        unsigned exponent;
        std::uint64_t modulus;  // p^e
        std::size_t first_component;
        std::size_t component_count;  // 0, 1 or 2
        std::vector<std::int32_t> log_a;  // per residue mod p^e, -1 for non-units
        std::vector<std::int32_t> log_b;  // second log for 2^k, k >= 3
    };

    std::uint64_t q_;
    std::uint64_t size_ = 1;
    std::uint64_t exponent_ = 1;
    std::vector<GroupComponent> components_;
    std::vector<LocalPart> parts_;

    mutable std::once_flag table_once_;
    mutable std::vector<std::uint32_t> scaled_table_;
};

// Shared, memoized group for modulus q.
std::shared_ptr<const CharacterGroup> build_character_group(std::uint64_t q);

struct CharacterInvariants {
    std::uint64_t conductor;
    std::uint64_t order;
    int parity;  // chi(-1)

    bool operator==(const CharacterInvariants&) const = default;
};

// A Dirichlet character, stored as exponents against the group's generators:
// chi(g_i) = e^{2 pi i e_i / order_i}.
class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const CharacterGroup> group, std::vector<std::uint64_t> exponents);

    // Principal character mod q.
    static DirichletCharacter principal(std::uint64_t q);
    // Character number `index` in mixed radix, first component fastest.
    static DirichletCharacter from_index(std::shared_ptr<const CharacterGroup> group, std::uint64_t index);

    const CharacterGroup& group() const { return *group_; }
    const std::shared_ptr<const CharacterGroup>& group_ptr() const { return group_; }
    std::uint64_t modulus() const { return group_->modulus(); }
    std::span<const std::uint64_t> exponents() const { return exponents_; }
    std::uint64_t index() const;

    UnitValue value(std::uint64_t n) const;
    std::complex<double> complex_value(std::uint64_t n) const { return value(n).to_complex(); }

    std::uint64_t order() const;
    int parity() const;
    std::uint64_t conductor() const;
    bool is_principal() const;
    bool is_primitive() const { return conductor() == modulus(); }
    bool is_real() const { return order() <= 2; }

    DirichletCharacter conj() const;

    // For r in [0, q): numerator k of chi(r) = e^{2 pi i k / group().exponent()},
    // or -1 when gcd(r, q) > 1.
    std::vector<std::int64_t> phase_table() const;

    // "q:e1,e2,..."
    std::string to_string() const;

    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b);

private:
    std::shared_ptr<const CharacterGroup> group_;
    std::vector<std::uint64_t> exponents_;
};

UnitValue evaluate_character(const DirichletCharacter& chi, std::uint64_t n);
CharacterInvariants character_invariants(const DirichletCharacter& chi);

// Conductor by testing each divisor f of q in ascending order for
// factorization through (Z/fZ)^*. Quadratic-ish in q; kept as a reference.
std::uint64_t conductor_by_divisor_search(const DirichletCharacter& chi);

// Character mod lcm(q1, q2) with value chi(n) psi(n) on units.
DirichletCharacter multiply_characters(const DirichletCharacter& chi, const DirichletCharacter& psi);
// The unique primitive character mod conductor(chi) inducing chi.
DirichletCharacter primitive_inducing(const DirichletCharacter& chi);

std::vector<DirichletCharacter> all_characters(std::uint64_t q);
std::vector<DirichletCharacter> primitive_characters(std::uint64_t q);

// Parses "q:e1,e2,..." (the exponent list is empty when (Z/qZ)^* is trivial).
DirichletCharacter parse_character(const std::string& text);

}  // namespace pretend

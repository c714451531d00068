#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pretend/characters.hpp"
#include "pretend/ntheory.hpp"

namespace pretend {

enum class RandomMode { unimodular, real_signed, nonneg };

RandomMode parse_random_mode(const std::string& text);
std::string to_string(RandomMode mode);

// f(n) = liouville(n)^e * chi(n) * n^{it}: the closed form every archetype,
// product and conjugate of archetypes reduces to.
struct ArchetypeForm {
    bool liouville = false;
    DirichletCharacter chi = DirichletCharacter::principal(1);
    double t = 0.0;
};

// A completely multiplicative function with values in the closed unit disc,
// determined by its values at primes. Instances are immutable and cheap to
// copy (shared structure); evaluation is pure and thread-safe.
class MultiplicativeFunction {
public:
    enum class Kind { one, liouville, archimedean, character, twisted_character, product, conjugate, table };

    static MultiplicativeFunction one();
    static MultiplicativeFunction liouville();
    // n^{it}
    static MultiplicativeFunction archimedean(double t);
    static MultiplicativeFunction character(DirichletCharacter chi);
    // chi(n) n^{it}
    static MultiplicativeFunction twisted_character(DirichletCharacter chi, double t);
    static MultiplicativeFunction product(const MultiplicativeFunction& f, const MultiplicativeFunction& g);
    static MultiplicativeFunction conjugate(const MultiplicativeFunction& f);
    // Explicit prime values. Throws DomainError if any |value| > 1.
    static MultiplicativeFunction table(std::vector<std::pair<std::uint64_t, std::complex<double>>> prime_values,
                                        std::string label = "table");

    Kind kind() const;
    bool unimodular() const;
    // True when every prime value is real (imaginary part exactly 0).
    bool real_on_primes() const;

    std::complex<double> at_prime(std::uint64_t p) const;
    // Values at the given primes, in order.
    std::vector<std::complex<double>> prime_values(std::span<const std::uint32_t> primes) const;

    // Archimedean shift T and base value f(p) p^{-iT}. For archetypes the base
    // carries no n^{it} factor, so f(p) p^{-it} at t = T is computed exactly.
    double twist() const;
    std::complex<double> base_at_prime(std::uint64_t p) const;

    std::optional<ArchetypeForm> archetype_form() const;

    // Product of f(p)^e over the factorization of n.
    std::complex<double> evaluate(std::uint64_t n, const PrimeTable& table) const;

    // Textual form in the CLI syntax.
    std::string to_string() const;

private:
    struct Node;
    explicit MultiplicativeFunction(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

inline std::complex<double> evaluate(const MultiplicativeFunction& f, std::uint64_t n, const PrimeTable& table) {
    return f.evaluate(n, table);
}

// Table-kind function with i.i.d. prime values for every prime <= table.limit():
// uniform on the unit circle, uniform in [-1, 1], or uniform in [0, 1]. Drawn
// in ascending prime order from mt19937_64, so identical seeds give identical
// values on every platform.
MultiplicativeFunction random_function(std::uint64_t seed, RandomMode mode, const PrimeTable& table);

// Parses the CLI function syntax:
//   one | liouville | nit:<t> | chi:<q>:<e1,e2,...> | chit:<q>:<e...>:<t>
//   | rand:<mode>:<seed> | conj(<f>) | <f>*<g>
// rand needs a prime table.
MultiplicativeFunction parse_function(const std::string& text, const PrimeTable* table);

}  // namespace pretend

#include "pretend/multfunc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "pretend/csv.hpp"
#include "pretend/errors.hpp"

namespace pretend {

namespace {

// Values that drift slightly past the unit circle through rounding.
constexpr double kUnitTolerance = 1e-12;

std::complex<double> ipow(std::complex<double> z, unsigned e) {
    std::complex<double> r = 1.0;
    while (e) {
        if (e & 1) r *= z;
        z *= z;
        e >>= 1;
    }
    return r;
}

std::complex<double> unit_phase(double t, std::uint64_t p) {
    return std::polar(1.0, t * std::log(static_cast<double>(p)));
}

}  // namespace

struct MultiplicativeFunction::Node {
    Kind kind = Kind::one;
    double t = 0.0;
    std::optional<DirichletCharacter> chi;
    std::shared_ptr<const Node> left, right;
    std::vector<std::pair<std::uint64_t, std::complex<double>>> table;  // sorted by prime
    std::string label;
};

RandomMode parse_random_mode(const std::string& text) {
    if (text == "unimodular") return RandomMode::unimodular;
    if (text == "real-signed" || text == "real_signed") return RandomMode::real_signed;
    if (text == "nonneg") return RandomMode::nonneg;
    throw ParseError("unknown random mode '" + text + "' (unimodular, real-signed, nonneg)");
}

std::string to_string(RandomMode mode) {
    switch (mode) {
        case RandomMode::unimodular: return "unimodular";
        case RandomMode::real_signed: return "real-signed";
        case RandomMode::nonneg: return "nonneg";
    }
    return "?";
}

MultiplicativeFunction MultiplicativeFunction::one() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::one;
    return MultiplicativeFunction(std::move(n));
}

MultiplicativeFunction MultiplicativeFunction::liouville() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::liouville;
    return MultiplicativeFunction(std::move(n));
}

MultiplicativeFunction MultiplicativeFunction::archimedean(double t) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::archimedean;
    n->t = t;
    return MultiplicativeFunction(std::move(n));
}

MultiplicativeFunction MultiplicativeFunction::character(DirichletCharacter chi) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::character;
    n->chi = std::move(chi);
    return MultiplicativeFunction(std::move(n));
}

MultiplicativeFunction MultiplicativeFunction::twisted_character(DirichletCharacter chi, double t) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::twisted_character;
    n->chi = std::move(chi);
    n->t = t;
    return MultiplicativeFunction(std::move(n));
}

MultiplicativeFunction MultiplicativeFunction::product(const MultiplicativeFunction& f,
                                                       const MultiplicativeFunction& g) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::product;
    n->left = f.node_;
    n->right = g.node_;
    return MultiplicativeFunction(std::move(n));
}

MultiplicativeFunction MultiplicativeFunction::conjugate(const MultiplicativeFunction& f) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::conjugate;
    n->left = f.node_;
    return MultiplicativeFunction(std::move(n));
}

MultiplicativeFunction MultiplicativeFunction::table(
    std::vector<std::pair<std::uint64_t, std::complex<double>>> prime_values, std::string label) {
    std::sort(prime_values.begin(), prime_values.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < prime_values.size(); ++i) {
        if (std::abs(prime_values[i].second) > 1.0 + kUnitTolerance)
            throw DomainError("prime value at " + std::to_string(prime_values[i].first) + " lies outside the unit disc");
        if (i && prime_values[i].first == prime_values[i - 1].first)
            throw DomainError("duplicate prime " + std::to_string(prime_values[i].first) + " in function table");
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::table;
    n->table = std::move(prime_values);
    n->label = std::move(label);
    return MultiplicativeFunction(std::move(n));
}

MultiplicativeFunction::Kind MultiplicativeFunction::kind() const { return node_->kind; }

bool MultiplicativeFunction::unimodular() const {
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::one:
        case Kind::liouville:
        case Kind::archimedean: return true;
        case Kind::character:
        case Kind::twisted_character: return n.chi->modulus() == 1;
        case Kind::product:
            return MultiplicativeFunction(n.left).unimodular() && MultiplicativeFunction(n.right).unimodular();
        case Kind::conjugate: return MultiplicativeFunction(n.left).unimodular();
        case Kind::table:
            return std::all_of(n.table.begin(), n.table.end(),
                               [](const auto& e) { return std::abs(std::abs(e.second) - 1.0) <= kUnitTolerance; });
    }
    return false;
}

bool MultiplicativeFunction::real_on_primes() const {
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::one:
        case Kind::liouville: return true;
        case Kind::archimedean: return n.t == 0.0;
        case Kind::character: return n.chi->is_real();
        case Kind::twisted_character: return n.chi->is_real() && n.t == 0.0;
        case Kind::product: {
            if (auto form = archetype_form()) return form->chi.is_real() && form->t == 0.0;
            return MultiplicativeFunction(n.left).real_on_primes() && MultiplicativeFunction(n.right).real_on_primes();
        }
        case Kind::conjugate: return MultiplicativeFunction(n.left).real_on_primes();
        case Kind::table:
            return std::all_of(n.table.begin(), n.table.end(), [](const auto& e) { return e.second.imag() == 0.0; });
    }
    return false;
}

std::complex<double> MultiplicativeFunction::at_prime(std::uint64_t p) const {
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::one: return 1.0;
        case Kind::liouville: return -1.0;
        case Kind::archimedean: return unit_phase(n.t, p);
        case Kind::character: return n.chi->complex_value(p);
        case Kind::twisted_character: {
            const UnitValue v = n.chi->value(p);
            if (v.zero) return 0.0;
            return v.to_complex() * unit_phase(n.t, p);
        }
        case Kind::product: return MultiplicativeFunction(n.left).at_prime(p) * MultiplicativeFunction(n.right).at_prime(p);
        case Kind::conjugate: return std::conj(MultiplicativeFunction(n.left).at_prime(p));
        case Kind::table: {
            auto it = std::lower_bound(n.table.begin(), n.table.end(), p,
                                       [](const auto& e, std::uint64_t v) { return e.first < v; });
            if (it == n.table.end() || it->first != p)
                throw CapacityError("prime " + std::to_string(p) + " not covered by function table '" + n.label + "'");
            return it->second;
        }
    }
    return 0.0;
}

std::vector<std::complex<double>> MultiplicativeFunction::prime_values(std::span<const std::uint32_t> primes) const {
    std::vector<std::complex<double>> out(primes.size());
    const Node& n = *node_;
    if (n.kind == Kind::table) {
        // merge walk: both lists ascending
        std::size_t j = 0;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            while (j < n.table.size() && n.table[j].first < primes[i]) ++j;
            if (j == n.table.size() || n.table[j].first != primes[i])
                throw CapacityError("prime " + std::to_string(primes[i]) + " not covered by function table '" +
                                    n.label + "'");
            out[i] = n.table[j].second;
        }
        return out;
    }
    if (n.kind == Kind::product) {
        auto a = MultiplicativeFunction(n.left).prime_values(primes);
        auto b = MultiplicativeFunction(n.right).prime_values(primes);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i];
        return out;
    }
    if (n.kind == Kind::conjugate) {
        auto a = MultiplicativeFunction(n.left).prime_values(primes);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::conj(a[i]);
        return out;
    }
    for (std::size_t i = 0; i < primes.size(); ++i) out[i] = at_prime(primes[i]);
    return out;
}

double MultiplicativeFunction::twist() const {
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::archimedean:
        case Kind::twisted_character: return n.t;
        case Kind::product: return MultiplicativeFunction(n.left).twist() + MultiplicativeFunction(n.right).twist();
        case Kind::conjugate: return -MultiplicativeFunction(n.left).twist();
        default: return 0.0;
    }
}

std::complex<double> MultiplicativeFunction::base_at_prime(std::uint64_t p) const {
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::archimedean: return 1.0;
        case Kind::twisted_character: return n.chi->complex_value(p);
        case Kind::product:
            return MultiplicativeFunction(n.left).base_at_prime(p) * MultiplicativeFunction(n.right).base_at_prime(p);
        case Kind::conjugate: return std::conj(MultiplicativeFunction(n.left).base_at_prime(p));
        default: return at_prime(p);
    }
}

std::optional<ArchetypeForm> MultiplicativeFunction::archetype_form() const {
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::one: return ArchetypeForm{};
        case Kind::liouville: return ArchetypeForm{true, DirichletCharacter::principal(1), 0.0};
        case Kind::archimedean: return ArchetypeForm{false, DirichletCharacter::principal(1), n.t};
        case Kind::character: return ArchetypeForm{false, *n.chi, 0.0};
        case Kind::twisted_character: return ArchetypeForm{false, *n.chi, n.t};
        case Kind::product: {
            auto a = MultiplicativeFunction(n.left).archetype_form();
            auto b = MultiplicativeFunction(n.right).archetype_form();
            if (!a || !b) return std::nullopt;
            return ArchetypeForm{a->liouville != b->liouville, multiply_characters(a->chi, b->chi), a->t + b->t};
        }
        case Kind::conjugate: {
            auto a = MultiplicativeFunction(n.left).archetype_form();
            if (!a) return std::nullopt;
            return ArchetypeForm{a->liouville, a->chi.conj(), -a->t};
        }
        case Kind::table: return std::nullopt;
    }
    return std::nullopt;
}

std::complex<double> MultiplicativeFunction::evaluate(std::uint64_t n, const PrimeTable& table) const {
    if (n == 0) throw DomainError("multiplicative functions are evaluated at n >= 1");
    std::complex<double> r = 1.0;
    for (const auto& [p, e] : factorize(n, table).factors) r *= ipow(at_prime(p), e);
    return r;
}

std::string MultiplicativeFunction::to_string() const {
    const Node& n = *node_;
    auto exps = [](const DirichletCharacter& chi) {
        const std::string s = chi.to_string();
        return s;
    };
    switch (n.kind) {
        case Kind::one: return "one";
        case Kind::liouville: return "liouville";
        case Kind::archimedean: return "nit:" + format_double(n.t);
        case Kind::character: return "chi:" + exps(*n.chi);
        case Kind::twisted_character: return "chit:" + exps(*n.chi) + ":" + format_double(n.t);
        case Kind::product:
            return MultiplicativeFunction(n.left).to_string() + "*" + MultiplicativeFunction(n.right).to_string();
        case Kind::conjugate: return "conj(" + MultiplicativeFunction(n.left).to_string() + ")";
        case Kind::table: return n.label;
    }
    return "?";
}

MultiplicativeFunction random_function(std::uint64_t seed, RandomMode mode, const PrimeTable& table) {
    std::mt19937_64 engine(seed);
    // 53 random bits -> [0, 1), independent of the standard library's distributions
    auto uniform = [&engine] { return static_cast<double>(engine() >> 11) * 0x1.0p-53; };
    std::vector<std::pair<std::uint64_t, std::complex<double>>> values;
    values.reserve(table.prime_count());
    for (std::uint32_t p : table.primes()) {
        const double u = uniform();
        std::complex<double> v;
        switch (mode) {
            case RandomMode::unimodular: v = std::polar(1.0, 2.0 * std::numbers::pi * u); break;
            case RandomMode::real_signed: v = 2.0 * u - 1.0; break;
            case RandomMode::nonneg: v = u; break;
        }
        values.emplace_back(p, v);
    }
    return MultiplicativeFunction::table(std::move(values), "rand:" + to_string(mode) + ":" + std::to_string(seed));
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        const auto next = s.find(sep, pos);
        out.push_back(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

// Split at '*' outside parentheses.
std::vector<std::string> split_product(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (depth < 0) throw ParseError("unbalanced parentheses in '" + s + "'");
        if (s[i] == '*' && depth == 0) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    if (depth != 0) throw ParseError("unbalanced parentheses in '" + s + "'");
    out.push_back(s.substr(start));
    return out;
}

}  // namespace

MultiplicativeFunction parse_function(const std::string& text, const PrimeTable* table) {
    if (text.empty()) throw ParseError("empty function specification");
    const auto factors = split_product(text);
    if (factors.size() > 1) {
        MultiplicativeFunction acc = parse_function(factors[0], table);
        for (std::size_t i = 1; i < factors.size(); ++i)
            acc = MultiplicativeFunction::product(acc, parse_function(factors[i], table));
        return acc;
    }
    if (text.rfind("conj(", 0) == 0 && text.back() == ')')
        return MultiplicativeFunction::conjugate(parse_function(text.substr(5, text.size() - 6), table));
    if (text == "one") return MultiplicativeFunction::one();
    if (text == "liouville") return MultiplicativeFunction::liouville();

    const auto parts = split(text, ':');
    const std::string& head = parts[0];
    if (head == "nit" && parts.size() == 2) return MultiplicativeFunction::archimedean(parse_double(parts[1]));
    if (head == "chi" && (parts.size() == 2 || parts.size() == 3))
        return MultiplicativeFunction::character(
            parse_character(parts.size() == 3 ? parts[1] + ":" + parts[2] : parts[1]));
    if (head == "chit" && parts.size() == 4)
        return MultiplicativeFunction::twisted_character(parse_character(parts[1] + ":" + parts[2]),
                                                         parse_double(parts[3]));
    if (head == "rand" && parts.size() == 3) {
        if (!table) throw ParseError("random functions need a prime table");
        const std::int64_t seed = parse_int(parts[2]);
        if (seed < 0) throw ParseError("random seed must be non-negative");
        return random_function(static_cast<std::uint64_t>(seed), parse_random_mode(parts[1]), *table);
    }
    throw ParseError("unrecognized function '" + text +
                     "' (one, liouville, nit:<t>, chi:<q>:<e...>, chit:<q>:<e...>:<t>, rand:<mode>:<seed>)");
}

}  // namespace pretend

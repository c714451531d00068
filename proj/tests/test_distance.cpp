#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "pretend/distance.hpp"

using namespace pretend;
using cd = std::complex<double>;
using std::numbers::pi;

namespace {

const PrimeTable& table() {
    static const PrimeTable t = build_prime_table(1'000'000);
    return t;
}

}  // namespace

TEST_CASE("eta examples") {
    CHECK(eta(1.0, 0.7) == 0.0);
    CHECK(eta(-1.0, 1.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    for (double theta : {0.1, 0.25, 0.3, 0.77}) {
        const double a = 0.4;
        const double e = eta(std::polar(1.0, 2 * pi * theta), a);
        CHECK(e * e == doctest::Approx(2 * a * std::sin(pi * theta) * std::sin(pi * theta)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(eta(cd(1.1, 0.0), 1.0), DomainError);
    CHECK_THROWS_AS(eta(1.0, -1.0), DomainError);
}

TEST_CASE("eta subadditivity on the disc") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto disc = [&] { return std::polar(std::sqrt(u(rng)), 2 * pi * u(rng)); };
    for (int i = 0; i < 100'000; ++i) {
        const cd z = disc(), w = disc();
        const double a = u(rng);
        REQUIRE(eta(z * w, a) <= eta(z, a) + eta(w, a) + 1e-12);
    }
}

TEST_CASE("distance examples") {
    const auto& t = table();
    const auto one = MultiplicativeFunction::one();
    const auto chi4 = MultiplicativeFunction::character(parse_character("4:1"));
    // independent loop over trial-division primes
    double expect = 0.0;
    for (auto p : oracle::trial_primes(100)) {
        const double c = p == 2 ? 0.0 : (p % 4 == 1 ? 1.0 : -1.0);
        expect += (1.0 - c) / static_cast<double>(p);
    }
    const auto d = distance(one, chi4, 100, t);
    CHECK(d.squared == doctest::Approx(expect).epsilon(1e-14));
    CHECK(d.squared == doctest::Approx(2.121330668937879).epsilon(1e-12));
    CHECK(d.terms == 25);
    double two_over_p = 0.0;
    for (auto p : oracle::trial_primes(1000)) two_over_p += 2.0 / static_cast<double>(p);
    CHECK(distance(one, MultiplicativeFunction::liouville(), 1000, t).squared == doctest::Approx(two_over_p).epsilon(1e-14));
    for (const auto& f : {MultiplicativeFunction::archimedean(2.0), random_function(4, RandomMode::unimodular, t),
                          MultiplicativeFunction::liouville()})
        CHECK(std::abs(distance(f, f, 100'000, t).squared) <= 1e-12);
    CHECK_THROWS_AS(distance(one, one, 2'000'000, t), CapacityError);
}

TEST_CASE("distance triangle inequality") {
    const auto& t = table();
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto f = random_function(3 * s + 1, RandomMode::unimodular, t);
        const auto g = random_function(3 * s + 2, RandomMode::unimodular, t);
        const auto h = random_function(3 * s + 3, RandomMode::unimodular, t);
        const double fh = std::sqrt(distance(f, h, 10'000, t).squared);
        const double fg = std::sqrt(distance(f, g, 10'000, t).squared);
        const double gh = std::sqrt(distance(g, h, 10'000, t).squared);
        REQUIRE(fh <= fg + gh + 1e-10);
    }
}

TEST_CASE("weighted norm is subadditive under products, both schemes") {
    const auto& t = table();
    for (const auto& w : {WeightScheme::prime_weights(5000), WeightScheme::sigma_weights(1.3, 5000)})
        for (std::uint64_t s = 0; s < 100; ++s) {
            const auto f = random_function(1000 + 2 * s, RandomMode::unimodular, t);
            const auto g = random_function(1001 + 2 * s, RandomMode::unimodular, t);
            const double nf = std::sqrt(weighted_norm_squared(f, w, t));
            const double ng = std::sqrt(weighted_norm_squared(g, w, t));
            const double nfg = std::sqrt(weighted_norm_squared(MultiplicativeFunction::product(f, g), w, t));
            REQUIRE(nfg <= nf + ng + 1e-10);
        }
    CHECK(WeightScheme::sigma_weights(2.0, 100).weight(2, 3) == doctest::Approx(1.0 / (3 * 64.0)));
    CHECK(WeightScheme::prime_weights(100).weight(2, 3) == 0.0);
    CHECK(WeightScheme::prime_weights(100).weight(7, 1) == doctest::Approx(1.0 / 7));
}

TEST_CASE("sigma_norm examples") {
    const auto& t = table();
    CHECK(sigma_norm(MultiplicativeFunction::one(), 2.0, kDefaultNormCutoff, t).norm == 0.0);
    const auto l = sigma_norm(MultiplicativeFunction::liouville(), 2.0, kDefaultNormCutoff, t);
    CHECK(std::abs(l.norm_squared - std::log(2.5)) <= l.tail_bound + 1e-12);
    CHECK(l.tail_bound < 1e-5);
    // brute force over prime powers with the trial-division prime list
    double brute = 0.0;
    for (auto p : oracle::trial_primes(1000)) {
        double q = static_cast<double>(p);
        for (unsigned k = 1; q <= 1000.0; ++k, q *= static_cast<double>(p)) {
            const double re = (k % 2 == 0) ? 1.0 : -1.0;
            brute += (1.0 - re) / (k * std::pow(static_cast<double>(p), 2.0 * k));
        }
    }
    CHECK(sigma_norm(MultiplicativeFunction::liouville(), 2.0, 1000, t).norm_squared ==
          doctest::Approx(brute).epsilon(1e-13));
}

TEST_CASE("norm identity across functions and sigmas") {
    const auto& t = table();
    const std::vector<MultiplicativeFunction> fs = {MultiplicativeFunction::one(), MultiplicativeFunction::liouville(),
                                                    MultiplicativeFunction::archimedean(1.0),
                                                    MultiplicativeFunction::character(parse_character("4:1"))};
    for (const auto& f : fs)
        for (double sigma : {1.1, 1.5, 2.0}) {
            const auto r = norm_identity(f, sigma, kDefaultNormCutoff, t);
            INFO(f.to_string(), " sigma=", sigma, " diff=", r.difference, " tail=", r.tail_bound);
            CHECK(r.consistent);
            CHECK(std::abs(r.difference) <= r.tail_bound + r.series_error + 1e-9);
        }
    const auto a = norm_identity(MultiplicativeFunction::archimedean(1.0), 1.5, kDefaultNormCutoff, t);
    // log(zeta(sigma)/|zeta(sigma + it)|) with the conjugate convention
    CHECK(a.log_ratio > 0.0);
    CHECK(norm_identity(MultiplicativeFunction::liouville(), 2.0, kDefaultNormCutoff, t).log_ratio ==
          doctest::Approx(0.916290731874155).epsilon(1e-10));
}

TEST_CASE("Halasz M: archimedean and one") {
    const auto& t = table();
    const auto r1 = halasz_M(MultiplicativeFunction::one(), 100'000, 5.0, t);
    CHECK(r1.M == 0.0);
    CHECK(r1.t_star == 0.0);
    for (double alpha : {1.0, -0.37, 2.5, 10.0}) {
        GridConfig g;
        g.spacing = 0.01;
        const auto r = halasz_M(MultiplicativeFunction::archimedean(alpha), 100'000, 5.0, t, g);
        CHECK(r.M == 0.0);
        CHECK(r.t_star == alpha);
    }
    GridConfig g;
    g.spacing = 0.01;
    const auto off = halasz_M(MultiplicativeFunction::archimedean(1.23456), 100'000, 5.0, t, g);
    CHECK(off.M <= off.slack);
    CHECK(std::abs(off.t_star - 1.23456) < 1e-3);
}

TEST_CASE("Halasz M: liouville against the dense oracle") {
    const auto& t = table();
    const std::uint64_t x = 100'000;
    const auto lv = MultiplicativeFunction::liouville();
    const auto r = halasz_M(lv, x, 10.0, t);
    std::vector<std::uint64_t> primes = oracle::trial_primes(x);
    std::vector<cd> vals(primes.size(), cd(-1.0));
    const double dense = oracle::dense_halasz_min(primes, vals, 20.0, 0.01, 1e-4, 20);
    INFO("M=", r.M, " dense=", dense, " slack=", r.slack);
    CHECK(r.M > 0.0);
    CHECK(dense >= r.M - r.slack - 1e-12);
    CHECK(r.M <= dense + 1e-9);
    // Lipschitz certificate: every sampled D(t) is at least M - slack
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    for (int i = 0; i < 500; ++i) REQUIRE(halasz_D(lv, x, u(rng), t) >= r.M - r.slack);
    CHECK(halasz_D(lv, x, r.t_star, t) == doctest::Approx(r.M).epsilon(1e-14));
}

TEST_CASE("Halasz grid bookkeeping") {
    const auto& t = table();
    GridConfig g;
    g.spacing = 0.5;
    g.keep_grid = true;
    const auto r = halasz_M(MultiplicativeFunction::liouville(), 1000, 1.0, t, g);
    CHECK(r.grid_points == 9);
    REQUIRE(r.grid.size() == 9);
    CHECK(r.grid.front().first == -2.0);
    CHECK(r.grid.back().first == 2.0);
    // endpoints added when the spacing misses them
    g.spacing = 0.3;
    const auto r2 = halasz_M(MultiplicativeFunction::liouville(), 1000, 1.0, t, g);
    CHECK(r2.grid.front().first == -2.0);
    CHECK(r2.grid.back().first == 2.0);
    // job count does not change the answer
    GridConfig a, b;
    b.jobs = 4;
    const auto f = random_function(8, RandomMode::unimodular, t);
    const auto ra = halasz_M(f, 50'000, 3.0, t, a), rb = halasz_M(f, 50'000, 3.0, t, b);
    CHECK(ra.M == rb.M);
    CHECK(ra.t_star == rb.t_star);
}

TEST_CASE("Halasz grid values match direct evaluation") {
    const auto& t = table();
    const std::uint64_t x = 100'000;
    const auto f = random_function(21, RandomMode::unimodular, t);
    GridConfig g;
    g.spacing = 0.01;
    g.keep_grid = true;
    const auto r = halasz_M(f, x, 3.0, t, g);
    REQUIRE(r.grid.size() == 1201);
    double mass = 0.0;
    for (auto p : t.primes_upto(x)) mass += 1.0 / p;
    double worst = 0.0;
    for (std::size_t i = 0; i < r.grid.size(); i += 7)
        worst = std::max(worst, std::abs(r.grid[i].second - halasz_D(f, x, r.grid[i].first, t)));
    CHECK(worst <= 1e-12 * mass);
    CHECK(r.grid[600].first == 0.0);
    CHECK(r.grid[601].first == 0.01);
}

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "spikesweep/stimulus.hpp"

using namespace spikesweep;

TEST_CASE("regular generator")
{
    StimulusSpec s;
    s.rate = 25.0;
    const auto ev = generate_stimulus(s, 200.0, 0.1);
    REQUIRE(ev.size() == 5);
    for (std::size_t i = 0; i < ev.size(); ++i) CHECK(ev[i] == doctest::Approx(40.0 * i));
}

TEST_CASE("regular generator with phase snaps to the grid")
{
    StimulusSpec s;
    s.rate = 25.0;
    const auto ev = generate_stimulus(s, 100.0, 0.1, 13.333);
    REQUIRE(ev.size() == 3);
    CHECK(ev[0] == doctest::Approx(13.3));
    CHECK(ev[1] == doctest::Approx(53.3));
    for (double t : ev) CHECK(std::abs(std::round(t / 0.1) * 0.1 - t) < 1e-9);
}

TEST_CASE("poisson generator is deterministic per seed")
{
    StimulusSpec s;
    s.kind = StimulusKind::poisson;
    s.rate = 50.0;
    s.seed = 42;
    CHECK(generate_stimulus(s, 1000.0, 0.1) == generate_stimulus(s, 1000.0, 0.1));
    CHECK(generate_stimulus(s, 1000.0, 0.1, 0.0, 1) != generate_stimulus(s, 1000.0, 0.1, 0.0, 2));
}

TEST_CASE("poisson counts match rate * duration")
{
    // Count ~ Poisson(500); sigma = sqrt(500) ~ 22.4.
    StimulusSpec s;
    s.kind = StimulusKind::poisson;
    s.rate = 50.0;
    double total = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto ev = generate_stimulus(s, 10000.0, 0.1, 0.0, seed);
        CHECK(std::abs(static_cast<double>(ev.size()) - 500.0) <= 3.0 * std::sqrt(500.0));
        for (std::size_t i = 1; i < ev.size(); ++i) CHECK(ev[i] > ev[i - 1]);
        total += static_cast<double>(ev.size());
    }
    CHECK(std::abs(total / 100.0 - 500.0) <= 3.0 * std::sqrt(500.0) / 10.0);
}

TEST_CASE("stimulus errors")
{
    StimulusSpec s;
    CHECK_THROWS_AS(generate_stimulus(s, 0.0, 0.1), std::invalid_argument);
    s.rate = 20000.0;  // period 0.05 ms < dt
    CHECK_THROWS_AS(generate_stimulus(s, 100.0, 0.1), std::invalid_argument);
    s.rate = -1.0;
    CHECK_THROWS_AS(generate_stimulus(s, 100.0, 0.1), std::invalid_argument);
}

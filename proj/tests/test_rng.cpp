#include <algorithm>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "dwellsim/rng.hpp"

using namespace dwellsim;

TEST_CASE("identical seeds give identical streams") {
    Rng a(42), b(42);
    for (int i = 0; i < 1000; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
    Rng c(42), d(43);
    bool all_equal = true;
    for (int i = 0; i < 16; ++i) {
        if (c.next_u64() != d.next_u64()) {
            all_equal = false;
        }
    }
    CHECK_FALSE(all_equal);
}

TEST_CASE("uniform_below stays in range and covers values") {
    Rng rng(7);
    std::vector<int> counts(10, 0);
    for (int i = 0; i < 10000; ++i) {
        auto x = rng.uniform_below(10);
        REQUIRE(x < 10);
        ++counts[static_cast<std::size_t>(x)];
    }
    for (int c : counts) {
        CHECK(c > 800);  // fair coin would be 1000 each
        CHECK(c < 1200);
    }
}

TEST_CASE("uniform01 bounds and mean") {
    Rng rng(11);
    double sum = 0.0;
    for (int i = 0; i < 20000; ++i) {
        double x = rng.uniform01();
        REQUIRE(x >= 0.0);
        REQUIRE(x < 1.0);
        sum += x;
    }
    CHECK(sum / 20000.0 == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("normal sample moments") {
    Rng rng(5);
    const int n = 50000;
    double sum = 0.0, ss = 0.0;
    for (int i = 0; i < n; ++i) {
        double x = rng.normal(10.0, 3.0);
        sum += x;
        ss += x * x;
    }
    double mean = sum / n;
    double var = ss / n - mean * mean;
    CHECK(mean == doctest::Approx(10.0).epsilon(0.01));
    CHECK(std::sqrt(var) == doctest::Approx(3.0).epsilon(0.03));
}

TEST_CASE("lognormal mean matches closed form") {
    Rng rng(9);
    const double mu = 3.0, sigma = 0.5;
    const int n = 100000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        sum += rng.lognormal(mu, sigma);
    }
    double expected = std::exp(mu + sigma * sigma / 2.0);
    CHECK(sum / n == doctest::Approx(expected).epsilon(0.02));
}

TEST_CASE("bernoulli frequency") {
    Rng rng(13);
    int hits = 0;
    for (int i = 0; i < 20000; ++i) {
        if (rng.bernoulli(0.3)) ++hits;
    }
    CHECK(hits / 20000.0 == doctest::Approx(0.3).epsilon(0.05));
}

TEST_CASE("weighted_index respects weights") {
    Rng rng(17);
    std::vector<double> weights{1.0, 3.0, 6.0};
    std::vector<int> counts(3, 0);
    for (int i = 0; i < 30000; ++i) {
        ++counts[rng.weighted_index(weights)];
    }
    CHECK(counts[0] / 30000.0 == doctest::Approx(0.1).epsilon(0.15));
    CHECK(counts[1] / 30000.0 == doctest::Approx(0.3).epsilon(0.10));
    CHECK(counts[2] / 30000.0 == doctest::Approx(0.6).epsilon(0.05));
}

TEST_CASE("shuffle is a deterministic permutation") {
    std::vector<int> v(100);
    for (int i = 0; i < 100; ++i) v[static_cast<std::size_t>(i)] = i;
    std::vector<int> w = v;
    Rng a(3), b(3);
    a.shuffle(v);
    b.shuffle(w);
    CHECK(v == w);
    std::vector<int> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 100; ++i) {
        CHECK(sorted[static_cast<std::size_t>(i)] == i);
    }
}

TEST_CASE("mix_seed separates salts") {
    CHECK(mix_seed(1, 0) != mix_seed(1, 1));
    CHECK(mix_seed(1, 0) != mix_seed(2, 0));
    CHECK(mix_seed(123, 7) == mix_seed(123, 7));
}

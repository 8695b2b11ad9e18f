#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "lazynd/lazynd.hpp"

using namespace lazynd;
using namespace lazynd::studies;

namespace {

double brute_string_prob(std::size_t n, bool (*pred)(const std::string&)) {
    std::size_t hits = 0, total = std::size_t{1} << n;
    for (std::size_t mask = 0; mask < total; ++mask) {
        std::string s;
        for (std::size_t i = 0; i < n; ++i)
            s += (mask >> i & 1) ? 'b' : 'a';
        hits += pred(s);
    }
    return static_cast<double>(hits) / static_cast<double>(total);
}

bool is_pal(const std::string& s) { return std::equal(s.begin(), s.end(), s.rbegin()); }
bool has_bb(const std::string& s) { return s.find("bb") != std::string::npos; }

std::uint64_t fib(int n) { return n < 2 ? static_cast<std::uint64_t>(n) : fib(n - 1) + fib(n - 2); }

double derangement_failure(int n) {
    // !n = (n - 1)(!(n-1) + !(n-2))
    double d0 = 1, d1 = 0, fact = 1;
    for (int k = 2; k <= n; ++k) {
        double dk = (k - 1) * (d1 + d0);
        d0 = d1;
        d1 = dk;
    }
    for (int k = 2; k <= n; ++k)
        fact *= k;
    return n == 1 ? 1.0 : 1.0 - d1 / fact;
}

// Host recursion over hat states, one branch per drawn name.
double santa_oracle(SantaVariant v, const std::vector<int>& ps, std::size_t i, std::vector<int> hat, int limit,
                    bool self_seen) {
    if (i == ps.size())
        return self_seen ? 1.0 : 0.0;
    int p = ps[i];
    auto without = [](std::vector<int> h, int x) {
        h.erase(std::find(h.begin(), h.end(), x));
        return h;
    };
    switch (v) {
    case SantaVariant::naive: {
        double acc = 0;
        for (int q : hat)
            acc += santa_oracle(v, ps, i + 1, without(hat, q), limit, self_seen || q == p) / hat.size();
        return acc;
    }
    case SantaVariant::no_self_pick: {
        std::vector<int> options;
        for (int q : hat)
            if (q != p)
                options.push_back(q);
        if (options.empty())
            return 1.0;
        double acc = 0;
        for (int q : options)
            acc += santa_oracle(v, ps, i + 1, without(hat, q), limit, self_seen) / options.size();
        return acc;
    }
    case SantaVariant::pick_and_check: {
        double acc = 0;
        for (int q : hat) {
            auto rest = without(hat, q);
            if (q != p) {
                acc += santa_oracle(v, ps, i + 1, rest, limit, self_seen) / hat.size();
            } else if (rest.empty()) {
                acc += 1.0 / hat.size();
            } else {
                for (int r : rest) {
                    auto back = without(rest, r);
                    back.push_back(p);
                    acc += santa_oracle(v, ps, i + 1, back, limit, self_seen) / hat.size() / rest.size();
                }
            }
        }
        return acc;
    }
    case SantaVariant::repeat: {
        if (limit == 0)
            return 1.0;
        double acc = 0;
        for (int q : hat) {
            if (q == p)
                acc += santa_oracle(v, ps, i, hat, limit - 1, self_seen) / hat.size();
            else
                acc += santa_oracle(v, ps, i + 1, without(hat, q), limit, self_seen) / hat.size();
        }
        return acc;
    }
    }
    return 0;
}

double santa_oracle(SantaVariant v, int n, int limit) {
    auto ps = players(n);
    return santa_oracle(v, ps, 0, ps, limit, false);
}

// Joint table of the sprinkler network.
double grass_oracle(bool need_rain, bool need_wet) {
    double total = 0;
    for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s)
            for (int w = 0; w < 2; ++w) {
                double pr = r ? 0.2 : 0.8;
                double ps_on = r ? 0.01 : 0.4;
                double pw_on = s ? (r ? 0.99 : 0.9) : (r ? 0.8 : 0.0);
                double p = pr * (s ? ps_on : 1 - ps_on) * (w ? pw_on : 1 - pw_on);
                if ((!need_rain || r) && (!need_wet || w))
                    total += p;
            }
    return total;
}

} // namespace

TEST(Dice, AllSixClosedForm) {
    for (std::size_t n = 1; n <= 8; ++n) {
        double expect = std::pow(1.0 / 6.0, static_cast<double>(n));
        EXPECT_NEAR(all_six(n).probability / expect, 1.0, 1e-12) << "n=" << n;
        EXPECT_NEAR(all_five_or_six(n).probability / std::pow(1.0 / 3.0, static_cast<double>(n)), 1.0, 1e-12);
    }
}

TEST(Dice, LazyBindPrunesAtFirstMismatch) {
    for (std::size_t n : {1, 10, 50, 100}) {
        auto r = all_six(n);
        EXPECT_LE(r.stats.choice_expansions, 12 * n + 12) << "n=" << n;
        EXPECT_EQ(r.stats.leaves, 1u);
    }
}

TEST(Dice, StrictBindVisitsEveryOutcome) {
    for (std::size_t n = 1; n <= 4; ++n) {
        auto lazy = all_six(n, BindMode::lazy);
        auto strict = all_six(n, BindMode::strict);
        EXPECT_NEAR(strict.probability, lazy.probability, 1e-15);
        EXPECT_GE(strict.stats.leaves + strict.stats.failures, static_cast<std::uint64_t>(std::pow(6, n)));
    }
}

TEST(Dice, FiveOrSixStrictAgrees) {
    EXPECT_NEAR(all_five_or_six(3, BindMode::strict).probability, 1.0 / 27.0, 1e-15);
}

TEST(Grass, JointAndConditional) {
    EXPECT_NEAR(grass_wet_and_rain().probability, grass_oracle(true, true), 1e-12);
    EXPECT_NEAR(grass_wet_prob().probability, grass_oracle(false, true), 1e-12);
    EXPECT_NEAR(rain_given_wet().probability, grass_oracle(true, true) / grass_oracle(false, true), 1e-12);
    EXPECT_NEAR(query_stats<GrassModel>(is_raining, grass_model()).probability, 0.2, 1e-12);
}

TEST(Grass, StrictModelAgrees) {
    auto strict = all_prob<GrassModel>({is_grass_wet, is_raining}, grass_model(BindMode::strict));
    EXPECT_NEAR(strict, grass_oracle(true, true), 1e-12);
}

TEST(Grass, TotalIsOne) { EXPECT_NEAR(query(always_true<GrassModel>(), grass_model()), 1.0, 1e-12); }

TEST(Strings, PalindromeMatchesBruteForce) {
    for (std::size_t n = 0; n <= 10; ++n)
        EXPECT_DOUBLE_EQ(palindrome_prob(n).probability, brute_string_prob(n, is_pal)) << "n=" << n;
}

TEST(Strings, ConsecutiveBsMatchesFibonacci) {
    for (std::size_t n = 0; n <= 12; ++n) {
        double fib_form = 1.0 - static_cast<double>(fib(static_cast<int>(n) + 2)) / std::pow(2.0, static_cast<double>(n));
        double p = consecutive_bs_prob(n).probability;
        EXPECT_DOUBLE_EQ(p, fib_form) << "n=" << n;
        EXPECT_DOUBLE_EQ(p, brute_string_prob(n, has_bb)) << "n=" << n;
    }
}

TEST(Strings, RandomStringTotal) {
    for (std::size_t n = 0; n <= 6; ++n)
        EXPECT_DOUBLE_EQ(query(always_true<LiftedList<char>>(), random_string(n)), 1.0);
}

TEST(Santa, NaiveIsOneMinusDerangementRatio) {
    for (int n = 2; n <= 6; ++n)
        EXPECT_NEAR(santa_failure_prob(SantaVariant::naive, n).probability, derangement_failure(n), 1e-12) << n;
}

TEST(Santa, VariantsMatchHostRecursion) {
    for (auto v : {SantaVariant::naive, SantaVariant::no_self_pick, SantaVariant::pick_and_check})
        for (int n = 2; n <= 5; ++n)
            EXPECT_NEAR(santa_failure_prob(v, n).probability, santa_oracle(v, n, 0), 1e-12)
                << variant_name(v) << " n=" << n;
}

TEST(Santa, RepeatMatchesHostRecursion) {
    for (int n = 2; n <= 4; ++n)
        for (int limit : {0, 1, 2, 3, 5})
            EXPECT_NEAR(santa_failure_prob(SantaVariant::repeat, n, limit).probability,
                        santa_oracle(SantaVariant::repeat, n, limit), 1e-12)
                << "n=" << n << " limit=" << limit;
}

TEST(Santa, ThreePlayers) {
    EXPECT_NEAR(santa_failure_prob(SantaVariant::naive, 3).probability, 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(santa_failure_prob(SantaVariant::no_self_pick, 3).probability, 0.25, 1e-12);
    EXPECT_NEAR(santa_failure_prob(SantaVariant::pick_and_check, 3).probability, 0.25, 1e-12);
}

TEST(Santa, GamesAreProbabilityPreserving) {
    Predicate<Game> any = [](const Eff<Game>&) { return pure(true); };
    for (auto v : {SantaVariant::naive, SantaVariant::no_self_pick, SantaVariant::pick_and_check, SantaVariant::repeat})
        EXPECT_NEAR(query(any, santa_game(v, 4, 3)), 1.0, 1e-12) << variant_name(v);
}

TEST(Santa, NamesAndHelpers) {
    EXPECT_EQ(variant_name(SantaVariant::pick_and_check), "pick-and-check");
    EXPECT_EQ(remove_one({1, 2, 2, 3}, 2), (Hat{1, 2, 3}));
    EXPECT_EQ(players(3), (std::vector<Person>{1, 2, 3}));
    EXPECT_TRUE(is_failed_game(Game{false, {{1, 2}, {2, 2}}}));
    EXPECT_FALSE(is_failed_game(Game{false, {{1, 2}, {2, 1}}}));
    EXPECT_TRUE(is_failed_game(Game{true, {}}));
}

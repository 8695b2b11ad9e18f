#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "lazynd/lazynd.hpp"

using namespace lazynd;

namespace {

template <class V>
std::vector<std::pair<nf_t<V>, double>> outcomes(const Dist<V>& d) {
    return enumerate(nf(make_pair(event_of(d), prob_of(d))), SearchConfig{}).values;
}

template <class T>
std::vector<T> sorted(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    return v;
}

Dist<bool> fair_coin() { return flip(0.5); }

Dist<bool> conj_example(BindMode mode) {
    return dist_bind(
        fair_coin(),
        [mode](const Eff<bool>& x) {
            return dist_bind(fair_coin(), [x](const Eff<bool>& y) { return certainly(land(x, y)); }, mode);
        },
        mode);
}

Eff<bool> is_false(const Eff<bool>& b) { return lnot(b); }

// Random distributions built only from the public combinators.
Dist<int> random_combinator_dist(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 3 : 0);
    switch (pick(rng)) {
    case 0: {
        std::size_t n = 1 + rng() % 4;
        std::vector<int> vs;
        std::vector<double> ws;
        for (std::size_t i = 0; i < n; ++i) {
            vs.push_back(static_cast<int>(rng() % 10));
            ws.push_back(1.0 + static_cast<double>(rng() % 100));
        }
        double total = 0;
        for (double w : ws)
            total += w;
        for (double& w : ws)
            w /= total;
        return enum_values(vs, ws);
    }
    case 1: {
        auto inner = random_combinator_dist(rng, depth - 1);
        auto k = static_cast<int>(rng() % 3);
        std::uint64_t seed = rng();
        return dist_bind(inner, [k, seed, depth](const Eff<int>& x) {
            std::mt19937_64 r2(seed);
            auto next = random_combinator_dist(r2, depth - 1);
            if (k == 0)
                return certainly(x);
            if (k == 1)
                return next;
            return join_with<int, int>([](const Eff<int>& a, const Eff<int>& b) { return lift2(std::plus<>{}, a, b); },
                                       certainly(x), next);
        });
    }
    case 2:
        return join_with<int, int>([](const Eff<int>& a, const Eff<int>& b) { return lift2(std::minus<>{}, a, b); },
                                   random_combinator_dist(rng, depth - 1), random_combinator_dist(rng, depth - 1));
    default:
        return uniform(std::vector<int>{1, 2, 3});
    }
}

} // namespace

TEST(Enum, Validation) {
    EXPECT_THROW(enum_values(std::vector<int>{}, {}), validation_error);
    EXPECT_THROW(enum_values(std::vector<int>{1, 2}, {0.5, 0.4}), validation_error);
    EXPECT_THROW(enum_values(std::vector<int>{1, 2}, {-0.5, 1.5}), validation_error);
    EXPECT_THROW(flip(1.5), validation_error);
    EXPECT_THROW(flip(-0.1), validation_error);
    EXPECT_THROW(uniform(std::vector<int>{}), validation_error);
}

TEST(Enum, PairsUpToShorterList) {
    auto d = enum_values(std::vector<int>{1, 2, 3}, {0.5, 0.5});
    EXPECT_EQ(outcomes(d), (std::vector<std::pair<int, double>>{{1, 0.5}, {2, 0.5}}));
}

TEST(Enum, CoinHasTwoHalves) {
    EXPECT_EQ(outcomes(fair_coin()), (std::vector<std::pair<bool, double>>{{true, 0.5}, {false, 0.5}}));
    EXPECT_EQ(outcomes(flip(1.0)), (std::vector<std::pair<bool, double>>{{true, 1.0}, {false, 0.0}}));
}

TEST(Enum, UniformDie) {
    auto r = outcomes(uniform(std::vector<int>{1, 2, 3, 4, 5, 6}));
    ASSERT_EQ(r.size(), 6u);
    for (std::size_t i = 0; i < 6; ++i) {
        EXPECT_EQ(r[i].first, static_cast<int>(i + 1));
        EXPECT_DOUBLE_EQ(r[i].second, 1.0 / 6.0);
    }
}

TEST(Certainly, SingleSureEvent) {
    EXPECT_EQ(outcomes(certainly_value(7)), (std::vector<std::pair<int, double>>{{7, 1.0}}));
    EXPECT_EQ(query(always_true<int>(), certainly_value(7)), 1.0);
}

TEST(LazyBind, ConstructorAvailableWithoutChoices) {
    auto d = dist_bind(certainly_value(0), [](const Eff<int>&) { return fair_coin(); });
    EXPECT_TRUE(d.node().is_pure());
    auto e = dist_bind(fair_coin(), [](const Eff<bool>& x) { return certainly(x); });
    EXPECT_TRUE(e.node().is_pure());
    EXPECT_EQ(enumerate(lift1([](const DistPair<bool>&) { return true; }, e), SearchConfig{}).values.size(), 1u);
    EXPECT_EQ(enumerate(lift1([](const DistPair<bool>&) { return true; }, fair_coin()), SearchConfig{}).values.size(), 2u);
}

TEST(LazyBind, NonStrictConjunctionLosesAnEvent) {
    auto r = enumerate(event_of(conj_example(BindMode::lazy)), SearchConfig{}).values;
    EXPECT_EQ(sorted(r), (std::vector<bool>{false, false, true}));
}

TEST(LazyBind, ProbabilitiesAreNotLost) {
    auto ps = enumerate(prob_of(conj_example(BindMode::lazy)), SearchConfig{}).values;
    EXPECT_EQ(ps, std::vector<double>(4, 0.25));
    EXPECT_EQ(query<bool>(is_false, conj_example(BindMode::lazy)), 0.75);
    EXPECT_EQ(query(always_true<bool>(), conj_example(BindMode::lazy)), 1.0);
}

TEST(StrictBind, EveryCombinationIsAnEvent) {
    auto r = enumerate(event_of(conj_example(BindMode::strict)), SearchConfig{}).values;
    EXPECT_EQ(r.size(), 4u);
    EXPECT_EQ(query<bool>(is_false, conj_example(BindMode::strict)), 0.75);
}

TEST(Replicate, GeneratorDrawsFreshCoins) {
    auto d = replicate_dist<bool>(2, fair_coin);
    using R = std::pair<std::vector<bool>, double>;
    EXPECT_EQ(sorted(outcomes(d)), sorted(std::vector<R>{{{true, true}, 0.25},
                                                         {{true, false}, 0.25},
                                                         {{false, true}, 0.25},
                                                         {{false, false}, 0.25}}));
}

TEST(Replicate, SharedValueRepeatsOneDecision) {
    auto d = replicate_shared<bool>(2, fair_coin());
    using R = std::pair<std::vector<bool>, double>;
    EXPECT_EQ(sorted(outcomes(d)), sorted(std::vector<R>{{{true, true}, 0.25}, {{false, false}, 0.25}}));
}

TEST(Replicate, ZeroIsCertainlyEmpty) {
    using R = std::pair<std::vector<bool>, double>;
    EXPECT_EQ(outcomes(replicate_dist<bool>(0, fair_coin)), (std::vector<R>{{{}, 1.0}}));
}

TEST(Query, AtLeastTwoHeadsInFour) {
    int hits = 0;
    for (int mask = 0; mask < 16; ++mask)
        hits += __builtin_popcount(static_cast<unsigned>(mask)) >= 2;
    double oracle = hits / 16.0;
    Predicate<LiftedList<bool>> two_heads = [](const Eff<LiftedList<bool>>& xs) {
        auto n = length(filter_nd<bool, ND>([](const Eff<bool>& b) { return b; }, xs));
        return lift1([](std::size_t k) { return k >= 2; }, n);
    };
    for (auto mode : {BindMode::lazy, BindMode::strict}) {
        EXPECT_EQ(query(two_heads, replicate_dist<bool>(4, fair_coin, mode)), oracle);
        EXPECT_EQ(query(two_heads, replicate_dist<bool>(4, fair_coin, mode)), 0.6875);
    }
}

TEST(Query, TotalProbabilityIsOne) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 100; ++i) {
        auto d = random_combinator_dist(rng, 3);
        EXPECT_NEAR(query(always_true<int>(), d), 1.0, 1e-9) << "case " << i;
    }
}

TEST(Query, LazyAndStrictAgree) {
    std::mt19937_64 rng(99);
    Predicate<int> even = [](const Eff<int>& x) { return lift1([](int v) { return v % 2 == 0; }, x); };
    for (int i = 0; i < 50; ++i) {
        std::uint64_t seed = rng();
        std::mt19937_64 a(seed), b(seed);
        auto d = random_combinator_dist(a, 3);
        auto k = [](const Eff<int>& x) { return join_with<int, int>(
                     [](const Eff<int>& u, const Eff<int>& v) { return lift2(std::plus<>{}, u, v); }, certainly(x),
                     uniform(std::vector<int>{0, 1})); };
        double lazy = query(even, dist_bind(d, k, BindMode::lazy));
        double strict = query(even, dist_bind(random_combinator_dist(b, 3), k, BindMode::strict));
        EXPECT_NEAR(lazy, strict, 1e-12);
    }
}

TEST(Filter, NeverForcesTheProbability) {
    int forced = 0;
    Eff<Probability> p = delay([&] {
        ++forced;
        return pure(1.0);
    });
    Dist<int> d = pure(DistPair<int>{pure(3), p});
    auto kept = filter_dist<int>([](const Eff<int>&) { return pure(true); }, d);
    EXPECT_EQ(enumerate(event_of(kept), SearchConfig{}).values, std::vector<int>{3});
    EXPECT_EQ(forced, 0);
    EXPECT_EQ(query(always_true<int>(), d), 1.0);
    EXPECT_EQ(forced, 1);
}

TEST(Filter, FalsePredicateGivesZero) {
    EXPECT_EQ(query<bool>([](const Eff<bool>&) { return pure(false); }, fair_coin()), 0.0);
}

TEST(Filter, FailingHeadPrunesUnforcedTail) {
    int forced = 0;
    Dist<LiftedList<int>> rest = delay([&] {
        ++forced;
        return certainly(from_host(std::vector<int>{6, 6}));
    });
    auto d = join_with<int, LiftedList<int>>([](const Eff<int>& x, const ListEff<int>& xs) { return cons(x, xs); },
                                            certainly_value(1), rest);
    Predicate<LiftedList<int>> all_six = [](const ListEff<int>& xs) {
        return all_of<int, ND>([](const Eff<int>& x) { return lift1([](int v) { return v == 6; }, x); }, xs);
    };
    auto r = query_stats(all_six, d);
    EXPECT_EQ(r.probability, 0.0);
    EXPECT_EQ(forced, 0);
}

TEST(Conditional, EmptyPredicateLists) {
    Predicate<bool> id = [](const Eff<bool>& b) { return b; };
    auto d = flip(0.3);
    EXPECT_EQ(all_prob<bool>({}, d), 1.0);
    EXPECT_DOUBLE_EQ(cond_prob<bool>({id}, {}, d), all_prob<bool>({id}, d));
    EXPECT_DOUBLE_EQ(cond_prob<bool>({id}, {id}, d), 1.0);
}

TEST(Conditional, ZeroDenominatorIsAnError) {
    Predicate<bool> never = [](const Eff<bool>&) { return pure(false); };
    EXPECT_THROW(cond_prob<bool>({}, {never}, fair_coin()), validation_error);
}

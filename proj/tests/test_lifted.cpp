#include <gtest/gtest.h>

#include <algorithm>
#include <string>

#include "lazynd/lazynd.hpp"

using namespace lazynd;

namespace {

struct Probe {
    int forced = 0;

    template <class V>
    Eff<V> value(V v) {
        return delay([this, v] {
            ++forced;
            return pure(v);
        });
    }

    ListEff<int> list(std::vector<int> xs) {
        return delay([this, xs] {
            ++forced;
            return from_host(xs);
        });
    }
};

std::vector<std::vector<int>> insertions_oracle(int x, const std::vector<int>& ys) {
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i <= ys.size(); ++i) {
        auto v = ys;
        v.insert(v.begin() + static_cast<std::ptrdiff_t>(i), x);
        out.push_back(v);
    }
    return out;
}

std::vector<std::vector<int>> subsequences_oracle(const std::vector<int>& xs) {
    // keep bit = left branch, enumerated depth-first from the first element
    std::vector<std::vector<int>> out;
    std::size_t n = xs.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<int> v;
        for (std::size_t i = 0; i < n; ++i)
            if (!(mask >> (n - 1 - i) & 1))
                v.push_back(xs[i]);
        out.push_back(v);
    }
    return out;
}

template <class T, class S>
std::vector<nf_t<T>> values(const Eff<T, S>& e) {
    return enumerate(nf(e), SearchConfig{}).values;
}

} // namespace

TEST(LiftedList, HostRoundTrip) {
    for (int n = 0; n < 6; ++n) {
        std::vector<int> xs(static_cast<std::size_t>(n));
        std::iota(xs.begin(), xs.end(), 10);
        EXPECT_EQ(values(from_host(xs)), std::vector<std::vector<int>>{xs});
    }
}

TEST(LiftedList, ConsDoesNotForceComponents) {
    Probe p;
    auto xs = cons(p.value(1), p.list({2, 3}));
    EXPECT_EQ(enumerate(null(xs), SearchConfig{}).values, std::vector<bool>{false});
    EXPECT_EQ(p.forced, 0);
    EXPECT_EQ(enumerate(head(xs), SearchConfig{}).values, std::vector<int>{1});
    EXPECT_EQ(p.forced, 1);
}

TEST(LiftedList, UnforcedTailStaysUnforced) {
    int forced = 0;
    ListEff<int> never = delay([&] {
        ++forced;
        return fail<LiftedList<int>>();
    });
    auto xs = cons(pure(1), never);
    EXPECT_EQ(enumerate(head(xs), SearchConfig{}).values, std::vector<int>{1});
    EXPECT_EQ(forced, 0);
    EXPECT_TRUE(values(xs).empty());
    EXPECT_EQ(forced, 1);
}

TEST(LiftedList, FailureBeforeSuspensionNeverForcesIt) {
    Probe p;
    auto e = lift2([](int a, int b) { return a + b; }, fail<int>(), p.value(5));
    EXPECT_TRUE(enumerate(e, SearchConfig{}).values.empty());
    EXPECT_EQ(p.forced, 0);
}

TEST(LiftedList, AppendIsLazyInItsSecondArgument) {
    Probe p;
    auto ys = p.list({9});
    auto zs = append(from_host(std::vector<int>{1, 2}), ys);
    EXPECT_EQ(enumerate(head(zs), SearchConfig{}).values, std::vector<int>{1});
    EXPECT_EQ(p.forced, 0);
    EXPECT_EQ(values(zs), (std::vector<std::vector<int>>{{1, 2, 9}}));
    EXPECT_EQ(p.forced, 1);
}

TEST(LiftedList, LengthReverseEqual) {
    std::vector<int> xs{3, 1, 4, 1, 5};
    auto l = from_host(xs);
    EXPECT_EQ(enumerate(length(l), SearchConfig{}).values, std::vector<std::size_t>{5});
    auto r = xs;
    std::reverse(r.begin(), r.end());
    EXPECT_EQ(values(reverse(l)), std::vector<std::vector<int>>{r});
    EXPECT_EQ(enumerate(list_equal(l, from_host(xs)), SearchConfig{}).values, std::vector<bool>{true});
    EXPECT_EQ(enumerate(list_equal(l, from_host(r)), SearchConfig{}).values, std::vector<bool>{false});
    EXPECT_EQ(enumerate(list_equal(l, from_host(std::vector<int>{3, 1})), SearchConfig{}).values,
              std::vector<bool>{false});
}

TEST(LiftedList, LengthDoesNotForceElements) {
    Probe p;
    auto l = cons(p.value(1), cons(p.value(2), nil<int>()));
    EXPECT_EQ(enumerate(length(l), SearchConfig{}).values, std::vector<std::size_t>{2});
    EXPECT_EQ(p.forced, 0);
}

TEST(LiftedBool, ShortCircuit) {
    Probe p;
    EXPECT_EQ(enumerate(land(pure(false), p.value(true)), SearchConfig{}).values, std::vector<bool>{false});
    EXPECT_EQ(enumerate(lor(pure(true), p.value(false)), SearchConfig{}).values, std::vector<bool>{true});
    EXPECT_EQ(p.forced, 0);
    EXPECT_EQ(enumerate(lnot(land(pure(true), p.value(true))), SearchConfig{}).values, std::vector<bool>{false});
    EXPECT_EQ(p.forced, 1);
}

TEST(LiftedBool, AllOfStopsAtFirstFalse) {
    Probe p;
    auto l = cons(pure(2), cons(pure(3), cons(p.value(4), nil<int>())));
    auto even = [](const Eff<int>& e) { return lift1([](int v) { return v % 2 == 0; }, e); };
    EXPECT_EQ(enumerate(all_of<int, ND>(even, l), SearchConfig{}).values, std::vector<bool>{false});
    EXPECT_EQ(p.forced, 0);
}

TEST(LiftedPair, ProjectionsForceOnlyTheirSide) {
    Probe p;
    auto pr = make_pair(p.value(1), p.value(std::string("x")));
    EXPECT_EQ(enumerate(fst(pr), SearchConfig{}).values, std::vector<int>{1});
    EXPECT_EQ(p.forced, 1);
    EXPECT_EQ(values(pr), (std::vector<std::pair<int, std::string>>{{1, "x"}}));
    EXPECT_EQ(p.forced, 2);
}

TEST(LiftedPair, NormalFormPullsChoicesOut) {
    auto pr = make_pair(choose(pure(1), pure(2)), from_host(std::vector<int>{7}));
    using R = std::pair<int, std::vector<int>>;
    EXPECT_EQ(values(pr), (std::vector<R>{{1, {7}}, {2, {7}}}));
}

TEST(Insert, AllPositions) {
    std::vector<int> ys{2, 3, 4, 5};
    auto r = values(insert_nd(pure(1), from_host(ys)));
    EXPECT_EQ(r, insertions_oracle(1, ys));
}

TEST(Insert, HeadNeedsOneChoice) {
    auto e = enumerate(head(insert_nd(pure(1), from_host(std::vector<int>{2, 3, 4, 5}))), SearchConfig{});
    EXPECT_EQ(e.values, (std::vector<int>{1, 2}));
    EXPECT_EQ(e.stats.choice_expansions, 1u);
}

TEST(Insert, EveryResultHasFullLength) {
    for (int n = 0; n < 6; ++n) {
        std::vector<int> ys(static_cast<std::size_t>(n), 0);
        auto r = enumerate(length(insert_nd(pure(1), from_host(ys))), SearchConfig{});
        EXPECT_EQ(r.values.size(), static_cast<std::size_t>(n + 1));
        for (auto len : r.values)
            EXPECT_EQ(len, static_cast<std::size_t>(n + 1));
    }
}

TEST(Filter, CoinPredicateYieldsAllSubsequences) {
    auto coin = [](const Eff<int>&) { return choose(pure(true), pure(false)); };
    for (int n = 0; n <= 5; ++n) {
        auto xs = iota_list(n);
        EXPECT_EQ(values(filter_nd<int, ND>(coin, from_host(xs))), subsequences_oracle(xs));
    }
}

TEST(Filter, DeterministicPredicate) {
    auto odd = [](const Eff<int>& e) { return lift1([](int v) { return v % 2 != 0; }, e); };
    EXPECT_EQ(values(filter_nd<int, ND>(odd, from_host(iota_list(7)))),
              (std::vector<std::vector<int>>{{1, 3, 5, 7}}));
}

TEST(Signatures, MaybeListPropagatesNothing) {
    auto xs = cons(pure<One>(1), nothing<LiftedList<int, One>>());
    auto ys = from_host<One>(std::vector<int>{2});
    auto r = enumerate(nf(append(xs, ys)), SearchConfig{});
    EXPECT_TRUE(r.values.empty());
    EXPECT_EQ(r.stats.failures, 1u);
    EXPECT_EQ(enumerate(head(xs), SearchConfig{}).values, std::vector<int>{1});
}

TEST(Signatures, TotalListsNeverFail) {
    auto xs = from_host<Zero>(std::vector<int>{1, 2});
    auto r = enumerate(nf(append(xs, reverse(xs))), SearchConfig{});
    EXPECT_EQ(r.values, (std::vector<std::vector<int>>{{1, 2, 2, 1}}));
}

TEST(Signatures, ErrorPayloadSurvivesAppend) {
    using Err = Const<std::string>;
    auto bad = cons(raise<int>(std::string("oops")), nil<int, Err>());
    std::vector<std::string> seen;
    search(nf(append(from_host<Err>(std::vector<int>{1}), bad)), SearchConfig{}, [](std::vector<int>&&) {},
           [&](const auto& n) { seen.push_back(n.payload()); });
    EXPECT_EQ(seen, std::vector<std::string>{"oops"});
}

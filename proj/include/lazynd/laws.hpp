#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "display.hpp"
#include "lifted.hpp"
#include "pflp.hpp"
#include "search.hpp"

namespace lazynd {

// Sorted normal forms of all values; with no values, the failure marker
// (and for exceptions, the error payloads) is what is compared.
template <class T>
struct Observation {
    std::vector<T> values;
    std::vector<std::string> failures;

    bool is_failure() const { return values.empty(); }

    friend bool operator==(const Observation& a, const Observation& b) {
        if (a.values != b.values)
            return false;
        if (!a.values.empty())
            return true;
        return a.failures == b.failures;
    }
};

template <class V, class S>
Observation<nf_t<V>> observe(const Eff<V, S>& e, const SearchConfig& config = {}) {
    using T = nf_t<V>;
    Observation<T> o;
    search(
        nf(e), config, [&](T&& v) { o.values.push_back(std::move(v)); },
        [&](const Node<T, S>& n) {
            std::string marker = "failure";
            if constexpr (requires { show(n.payload()); })
                if (n.shape() == Shape::raise)
                    marker += ":" + show(n.payload());
            o.failures.push_back(marker);
        });
    std::sort(o.values.begin(), o.values.end());
    std::sort(o.failures.begin(), o.failures.end());
    if constexpr (!S::has(Shape::raise))
        o.failures.assign(o.failures.empty() ? 0 : 1, "failure");
    return o;
}

template <class V, class S>
bool obs_equal(const Eff<V, S>& a, const Eff<V, S>& b, const SearchConfig& config = {}) {
    return observe(a, config) == observe(b, config);
}

// p :: Eff<V> -> Eff<bool>; true iff every value satisfies p
template <class V, class S, class P>
bool check_for_all(P p, const Eff<V, S>& e, const SearchConfig& config = {}) {
    bool ok = true;
    search(bind(e, [p](const V& v) { return p(pure<S>(v)); }), config, [&](bool&& b) { ok = ok && b; });
    return ok;
}

struct LawReport {
    std::string law;
    std::size_t cases = 0;
    std::size_t passed = 0;
    std::size_t rejected = 0; // samples violating the premise
    bool premise_holds = true;
    std::vector<std::string> counterexamples;

    bool ok() const { return premise_holds && passed == cases && counterexamples.empty(); }

    void record(bool holds, const std::string& what) {
        ++cases;
        if (holds)
            ++passed;
        else if (counterexamples.size() < 5)
            counterexamples.push_back(what);
    }
};

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Random finite ND tree over ints; shared subtrees are reused occasionally.
inline Eff<int> random_tree(Rng& rng, int depth) {
    int r = uniform_int(rng, 0, 9);
    if (depth <= 0 || r < 3)
        return pure(uniform_int(rng, -5, 9));
    if (r == 3)
        return fail<int>();
    if (r == 4) {
        auto shared = random_tree(rng, depth - 1);
        return lift2(std::plus<>{}, shared, shared);
    }
    return choose(random_tree(rng, depth - 1), random_tree(rng, depth - 1));
}

inline std::string describe_tree(const Eff<int>& e) {
    auto o = observe(e);
    return o.is_failure() ? "Failure" : show(o.values);
}

// A small family of continuations int -> Eff<int>, indexed by k.
inline std::function<Eff<int>(const int&)> continuation(int k) {
    switch (k % 5) {
    case 0: return [k](const int& x) { return pure(x + k); };
    case 1: return [k](const int& x) { return choose(pure(x * 2), pure(x - k)); };
    case 2: return [](const int& x) { return x % 3 == 0 ? fail<int>() : pure(x); };
    case 3: return [k](const int& x) { return choose(pure(x), choose(fail<int>(), pure(x + k))); };
    default: return [](const int& x) { return x > 2 ? choose(pure(x), pure(-x)) : pure(x * x); };
    }
}

template <class S>
ListEff<int, S> random_list(Rng& rng, int max_len) {
    int len = uniform_int(rng, 0, max_len);
    ListEff<int, S> out = nil<int, S>();
    for (int i = 0; i < len; ++i) {
        Eff<int, S> h = pure<S>(uniform_int(rng, 0, 9));
        if constexpr (std::is_same_v<S, ND>) {
            int r = uniform_int(rng, 0, 9);
            if (r == 0)
                h = choose(h, pure(uniform_int(rng, 0, 9)));
            else if (r == 1)
                out = choose(out, nil<int>());
            else if (r == 2 && coin(rng, 0.3))
                out = fail<LiftedList<int>>();
        } else if constexpr (std::is_same_v<S, One>) {
            if (coin(rng, 0.1))
                h = nothing<int>();
            if (coin(rng, 0.05))
                out = nothing<LiftedList<int, One>>();
        } else if constexpr (S::has(Shape::raise)) {
            if (coin(rng, 0.1))
                h = raise<int>(typename S::payload_type("e" + std::to_string(i)));
        }
        out = cons(std::move(h), std::move(out));
    }
    return out;
}

template <class S>
LawReport check_append_assoc(std::size_t budget, std::uint64_t seed) {
    LawReport r;
    r.law = "append associativity over " + std::string(S::name);
    Rng rng(seed);
    for (std::size_t i = 0; i < budget; ++i) {
        auto xs = random_list<S>(rng, 4);
        auto ys = random_list<S>(rng, 3);
        auto zs = random_list<S>(rng, 3);
        bool holds = obs_equal(append(append(xs, ys), zs), append(xs, append(ys, zs)));
        r.record(holds, "case " + std::to_string(i));
    }
    return r;
}

// Premise: f e == e >>= \z -> f (pure z), sampled first. Only when no sample
// violates it is the law f (l ? r) == f l ? f r checked.
template <class R>
LawReport check_pulltab(const std::function<Eff<R>(const Eff<int>&)>& f, std::size_t budget, std::uint64_t seed,
                        std::string name = "f") {
    LawReport r;
    r.law = "pull-tab if strict (" + name + ")";
    Rng rng(seed);
    for (std::size_t i = 0; i < budget; ++i) {
        auto e = random_tree(rng, 3);
        if (!obs_equal(f(e), bind(e, [f](const int& z) { return f(pure(z)); })))
            ++r.rejected;
    }
    if (r.rejected > 0) {
        r.premise_holds = false;
        return r;
    }
    for (std::size_t i = 0; i < budget; ++i) {
        auto l = random_tree(rng, 2);
        auto rt = random_tree(rng, 2);
        bool holds = obs_equal(f(choose(l, rt)), choose(f(l), f(rt)));
        r.record(holds, describe_tree(l) + " ? " + describe_tree(rt));
    }
    return r;
}

inline LawReport check_effect_monad_laws(std::size_t budget, std::uint64_t seed) {
    LawReport r;
    r.law = "monad laws (effect trees)";
    Rng rng(seed);
    for (std::size_t i = 0; i < budget; ++i) {
        auto m = random_tree(rng, 3);
        int a = uniform_int(rng, -5, 9);
        auto f = continuation(uniform_int(rng, 0, 9));
        auto g = continuation(uniform_int(rng, 0, 9));
        std::string tag = "case " + std::to_string(i);
        r.record(obs_equal(bind(pure(a), f), f(a)), tag + " left identity");
        r.record(obs_equal(bind(m, [](const int& x) { return pure(x); }), m), tag + " right identity");
        r.record(obs_equal(bind(bind(m, f), g), bind(m, [f, g](const int& x) { return bind(f(x), g); })),
                 tag + " associativity");
    }
    return r;
}

// ---- distributions ----

inline Dist<int> random_dist(Rng& rng) {
    int k = uniform_int(rng, 1, 4);
    std::vector<int> vs;
    std::vector<double> ws;
    double total = 0;
    for (int i = 0; i < k; ++i) {
        vs.push_back(uniform_int(rng, 0, 9));
        ws.push_back(uniform_int(rng, 1, 8));
        total += ws.back();
    }
    for (auto& w : ws)
        w /= total;
    return enum_values(vs, ws);
}

inline std::function<Dist<int>(const Eff<int>&)> dist_continuation(int k) {
    switch (k % 4) {
    case 0: return [k](const Eff<int>& x) { return certainly(lift1([k](int v) { return v + k; }, x)); };
    case 1:
        return [k](const Eff<int>& x) {
            return bind(x, [k](int v) { return enum_values(std::vector<int>{v, v * k % 7}, {0.25, 0.75}); });
        };
    case 2: return [](const Eff<int>&) { return uniform(std::vector<int>{1, 2, 3}); };
    default:
        return [](const Eff<int>& x) {
            return bind(x, [](int v) { return v % 2 == 0 ? enum_values(std::vector<int>{0, 1}, {0.3, 0.7}) : certainly_value(v); });
        };
    }
}

inline Predicate<int> int_predicate(int k) {
    switch (k % 4) {
    case 0: return [](const Eff<int>& x) { return lift1([](int v) { return v % 2 == 0; }, x); };
    case 1: return [k](const Eff<int>& x) { return lift1([k](int v) { return v > k % 6; }, x); };
    case 2: return [](const Eff<int>&) { return pure(true); };
    default: return [](const Eff<int>& x) { return lift1([](int v) { return v != 3; }, x); };
    }
}

inline LawReport check_dist_monad_laws(std::size_t budget, std::uint64_t seed, double tolerance = 1e-12) {
    LawReport r;
    r.law = "monad laws (distributions, under a query)";
    Rng rng(seed);
    auto close = [tolerance](double a, double b) { return std::abs(a - b) <= tolerance; };
    for (std::size_t i = 0; i < budget; ++i) {
        auto d = random_dist(rng);
        int a = uniform_int(rng, 0, 9);
        auto f = dist_continuation(uniform_int(rng, 0, 9));
        auto g = dist_continuation(uniform_int(rng, 0, 9));
        auto p = int_predicate(uniform_int(rng, 0, 9));
        std::string tag = "case " + std::to_string(i);
        r.record(close(query(p, dist_bind(certainly_value(a), f)), query(p, f(pure(a)))), tag + " left identity");
        r.record(close(query(p, dist_bind(d, [](const Eff<int>& x) { return certainly(x); })), query(p, d)),
                 tag + " right identity");
        auto lhs = dist_bind(dist_bind(d, f), g);
        auto rhs = dist_bind(d, [f, g](const Eff<int>& x) { return dist_bind(f(x), g); });
        r.record(close(query(p, lhs), query(p, rhs)), tag + " associativity");
        r.record(close(query(p, dist_bind(d, f)), query(p, dist_bind_strict(d, f))), tag + " lazy vs strict bind");
        r.record(close(query(always_true<int>(), dist_bind(d, f)), 1.0), tag + " total probability");
    }
    return r;
}

// ---- sharing ----

inline Eff<int> one_or_two() { return choose(pure(1), pure(2)); }

inline Eff<bool> is_even(const Eff<int>& e) {
    return lift1([](int v) { return v % 2 == 0; }, e);
}

inline Eff<int> double_mult(const Eff<int>& e) { return lift2(std::multiplies<>{}, e, pure(2)); }

inline Eff<int> double_plus(const Eff<int>& e) { return lift2(std::plus<>{}, e, e); }

struct SharingReport {
    std::vector<bool> double_mult;
    std::vector<bool> double_plus_independent;
    std::vector<bool> double_plus_shared;
    bool double_plus_failed_is_failure = false;
    bool ok = false;
};

inline SharingReport check_sharing_examples() {
    SharingReport s;
    s.double_mult = enumerate(is_even(double_mult(one_or_two()))).values;
    s.double_plus_independent = enumerate(is_even(lift2(std::plus<>{}, one_or_two(), one_or_two()))).values;
    s.double_plus_shared = enumerate(is_even(double_plus(one_or_two()))).values;
    s.double_plus_failed_is_failure = observe(is_even(double_plus(fail<int>()))).is_failure();
    s.ok = s.double_mult == std::vector<bool>{true, true} &&
           s.double_plus_independent == std::vector<bool>{true, false, false, true} &&
           s.double_plus_shared == std::vector<bool>{true, true} && s.double_plus_failed_is_failure;
    return s;
}

// nf (nf e) observes like nf e
inline LawReport check_nf_idempotent(std::size_t budget, std::uint64_t seed) {
    LawReport r;
    r.law = "normal form idempotence";
    Rng rng(seed);
    for (std::size_t i = 0; i < budget; ++i) {
        auto xs = random_list<ND>(rng, 4);
        auto once = nf(xs);
        auto twice = bind(once, [](const std::vector<int>& v) { return nf(from_host(v)); });
        r.record(observe(once) == observe(twice), "case " + std::to_string(i));
    }
    return r;
}

inline LawReport sharing_report() {
    auto s = check_sharing_examples();
    LawReport r;
    r.law = "sharing examples";
    r.record(s.double_mult == std::vector<bool>{true, true}, "even (doubleMult oneOrTwo)");
    r.record(s.double_plus_independent == std::vector<bool>{true, false, false, true}, "independent doublePlus");
    r.record(s.double_plus_shared == std::vector<bool>{true, true}, "shared doublePlus");
    r.record(s.double_plus_failed_is_failure, "doublePlus failed");
    return r;
}

// Every permutation produced by inserting 1 into [2,3] has length 3.
inline LawReport all_nd_insert_report() {
    LawReport r;
    r.law = "all results of insert 1 [2,3] have length 3";
    auto perms = nf(insert_nd(pure(1), from_host(std::vector<int>{2, 3})));
    r.record(check_for_all([](const Eff<std::vector<int>>& v) {
        return lift1([](const std::vector<int>& xs) { return xs.size() == 3; }, v);
    }, perms), "insert 1 [2,3]");
    return r;
}

inline std::vector<LawReport> pulltab_reports(std::size_t budget, std::uint64_t seed) {
    using F = std::function<Eff<int>(const Eff<int>&)>;
    std::vector<LawReport> out;
    out.push_back(check_pulltab<int>(F([](const Eff<int>& e) { return lift1([](int v) { return v + 1; }, e); }), budget,
                                     seed, "succ"));
    out.push_back(check_pulltab<int>(F([](const Eff<int>& e) {
        return bind(e, [](const int& v) { return v % 2 == 0 ? fail<int>() : choose(pure(v), pure(-v)); });
    }), budget, seed + 1, "odd-or-fail"));
    out.push_back(check_pulltab<int>(F([](const Eff<int>& e) { return double_plus(e); }), budget, seed + 2,
                                     "doublePlus"));
    // not strict: the premise check must reject it
    auto lazy = check_pulltab<int>(F([](const Eff<int>&) { return pure(7); }), budget, seed + 3, "const 7");
    LawReport rejected;
    rejected.law = "pull-tab premise rejects const 7";
    rejected.record(!lazy.premise_holds, "const 7 accepted as strict");
    out.push_back(rejected);
    return out;
}

// suite: monad | pulltab | append | sharing | all
inline std::vector<LawReport> run_law_suite(const std::string& suite, std::size_t budget, std::uint64_t seed) {
    std::vector<LawReport> out;
    bool all = suite == "all";
    if (all || suite == "monad") {
        out.push_back(check_effect_monad_laws(budget, seed));
        out.push_back(check_dist_monad_laws(budget, seed));
    }
    if (all || suite == "pulltab") {
        for (auto& r : pulltab_reports(budget, seed))
            out.push_back(std::move(r));
    }
    if (all || suite == "append") {
        out.push_back(check_append_assoc<Zero>(budget, seed));
        out.push_back(check_append_assoc<One>(budget, seed));
        out.push_back(check_append_assoc<ND>(budget, seed));
    }
    if (all || suite == "sharing")
        out.push_back(sharing_report());
    if (all) {
        out.push_back(check_nf_idempotent(budget, seed));
        out.push_back(all_nd_insert_report());
    }
    if (out.empty())
        throw validation_error("unknown law suite: " + suite);
    return out;
}

} // namespace lazynd

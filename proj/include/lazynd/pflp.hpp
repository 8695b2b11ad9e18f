#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lifted.hpp"
#include "search.hpp"

namespace lazynd {

using Probability = double;

inline constexpr double probability_tolerance = 1e-6;

// Event and probability stay separately suspended.
template <class V>
struct DistPair {
    Eff<V> event;
    Eff<Probability> prob;
};

template <class V>
using Dist = Eff<DistPair<V>>;

template <class V>
using Predicate = std::function<Eff<bool>(const Eff<V>&)>;

template <class V>
Eff<V> event_of(const Dist<V>& d) {
    return bind(d, [](const DistPair<V>& p) { return p.event; });
}

template <class V>
Eff<Probability> prob_of(const Dist<V>& d) {
    return bind(d, [](const DistPair<V>& p) { return p.prob; });
}

template <class V>
Dist<V> certainly(Eff<V> x) {
    return pure(DistPair<V>{std::move(x), pure(1.0)});
}

template <class V>
Dist<V> certainly_value(V x) {
    return certainly(pure(std::move(x)));
}

// anyOf = foldr (?) failed over the zipped pairs; labels are fresh per call.
template <class V>
Dist<V> enum_dist(const std::vector<Eff<V>>& events, const std::vector<Probability>& probs) {
    std::size_t n = std::min(events.size(), probs.size());
    if (n == 0)
        throw validation_error("enum: empty distribution");
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(probs[i] >= 0.0) || probs[i] > 1.0 + probability_tolerance)
            throw validation_error("enum: probability outside [0,1]: " + std::to_string(probs[i]));
        total += probs[i];
    }
    if (std::abs(total - 1.0) > probability_tolerance)
        throw validation_error("enum: probabilities sum to " + std::to_string(total));

    Dist<V> acc = fail<DistPair<V>>();
    for (std::size_t i = n; i-- > 0;)
        acc = choose(pure(DistPair<V>{events[i], pure(probs[i])}), std::move(acc));
    return acc;
}

template <class V>
Dist<V> enum_values(const std::vector<V>& values, const std::vector<Probability>& probs) {
    std::vector<Eff<V>> events;
    events.reserve(values.size());
    for (const auto& v : values)
        events.push_back(pure(v));
    return enum_dist(events, probs);
}

template <class V>
Dist<V> uniform(const std::vector<V>& values) {
    if (values.empty())
        throw validation_error("uniform: empty list");
    return enum_values(values, std::vector<Probability>(values.size(), 1.0 / static_cast<double>(values.size())));
}

inline Dist<bool> flip(Probability p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw validation_error("flip: probability outside [0,1]");
    return enum_values(std::vector<bool>{true, false}, {p, 1.0 - p});
}

// Lazy bind: the result pair is available at once; f runs at most once, on
// demand of either component, and sees the shared event of d.
template <class V, class F>
auto dist_bind(Dist<V> d, F f) {
    using R = std::remove_cvref_t<std::invoke_result_t<F&, const Eff<V>&>>;
    using W = decltype(std::declval<typename R::value_type>().event)::value_type;
    Eff<V> x = event_of(d);
    Eff<Probability> p = prob_of(d);
    Dist<W> fx = delay([x, f = std::move(f)]() mutable { return f(x); });
    Eff<Probability> pq = lift2(std::multiplies<>{}, p, prob_of(fx));
    return pure(DistPair<W>{event_of(fx), std::move(pq)});
}

// Strict bind: forces d's pair and f's pair before building the result.
template <class V, class F>
auto dist_bind_strict(Dist<V> d, F f) {
    using R = std::remove_cvref_t<std::invoke_result_t<F&, const Eff<V>&>>;
    using W = decltype(std::declval<typename R::value_type>().event)::value_type;
    return bind(std::move(d), [f = std::move(f)](const DistPair<V>& a) {
        return bind(f(a.event), [p = a.prob](const DistPair<W>& b) {
            return pure(DistPair<W>{b.event, lift2(std::multiplies<>{}, p, b.prob)});
        });
    });
}

enum class BindMode { lazy, strict };

template <class V, class F>
auto dist_bind(Dist<V> d, F f, BindMode mode) {
    return mode == BindMode::lazy ? dist_bind(std::move(d), std::move(f)) : dist_bind_strict(std::move(d), std::move(f));
}

// g :: (Eff<A>, Eff<B>) -> Eff<C>
template <class A, class B, class G>
auto join_with(G g, Dist<A> d1, Dist<B> d2, BindMode mode = BindMode::lazy) {
    return dist_bind(
        std::move(d1),
        [g, d2, mode](const Eff<A>& x) {
            return dist_bind(d2, [g, x](const Eff<B>& y) { return certainly(g(x, y)); }, mode);
        },
        mode);
}

// Run-time choice: gen() is called once per position, drawing fresh labels.
template <class V>
Dist<LiftedList<V>> replicate_dist(std::size_t n, std::function<Dist<V>()> gen, BindMode mode = BindMode::lazy) {
    if (n == 0)
        return certainly(nil<V>());
    auto rest = delay([n, gen, mode] { return replicate_dist<V>(n - 1, gen, mode); });
    return join_with<V, LiftedList<V>>([](const Eff<V>& x, const ListEff<V>& xs) { return cons(x, xs); }, gen(), rest, mode);
}

// Call-time choice: the same distribution (and labels) at every position.
template <class V>
Dist<LiftedList<V>> replicate_shared(std::size_t n, Dist<V> d, BindMode mode = BindMode::lazy) {
    return replicate_dist<V>(n, [d] { return d; }, mode);
}

// Only the event is inspected; the probability stays suspended.
template <class V>
Dist<V> filter_dist(const Predicate<V>& p, Dist<V> d) {
    Eff<V> ev = event_of(d);
    Eff<Probability> pr = prob_of(d);
    return bind(p(ev), [ev, pr](bool keep) { return keep ? pure(DistPair<V>{ev, pr}) : fail<DistPair<V>>(); });
}

struct QueryResult {
    Probability probability = 0.0;
    SearchStats stats;
};

template <class V>
QueryResult query_stats(const Predicate<V>& p, Dist<V> d, const SearchConfig& config = {}) {
    QueryResult r;
    r.stats = search(prob_of(filter_dist(p, std::move(d))), config, [&](Probability&& q) { r.probability += q; });
    return r;
}

// p ?? d
template <class V>
Probability query(const Predicate<V>& p, Dist<V> d, const SearchConfig& config = {}) {
    return query_stats(p, std::move(d), config).probability;
}

template <class V>
Predicate<V> always_true() {
    return [](const Eff<V>&) { return pure(true); };
}

template <class V>
Predicate<V> conjunction(std::vector<Predicate<V>> ps) {
    return [ps = std::move(ps)](const Eff<V>& x) {
        Eff<bool> acc = pure(true);
        for (auto it = ps.rbegin(); it != ps.rend(); ++it)
            acc = land((*it)(x), acc);
        return acc;
    };
}

template <class V>
QueryResult all_prob_stats(const std::vector<Predicate<V>>& ps, Dist<V> d, const SearchConfig& config = {}) {
    return query_stats(conjunction(ps), std::move(d), config);
}

template <class V>
Probability all_prob(const std::vector<Predicate<V>>& ps, Dist<V> d, const SearchConfig& config = {}) {
    return all_prob_stats(ps, std::move(d), config).probability;
}

// P(ps1 | ps2) = allProb (ps1 ++ ps2) / allProb ps2
template <class V>
QueryResult cond_prob_stats(const std::vector<Predicate<V>>& ps1, const std::vector<Predicate<V>>& ps2, Dist<V> d,
                            const SearchConfig& config = {}) {
    auto both = ps1;
    both.insert(both.end(), ps2.begin(), ps2.end());
    QueryResult num = all_prob_stats(both, d, config);
    QueryResult den = all_prob_stats(ps2, d, config);
    if (den.probability == 0.0)
        throw validation_error("condProb: conditioning event has probability 0");
    QueryResult r;
    r.probability = num.probability / den.probability;
    r.stats = num.stats;
    r.stats += den.stats;
    return r;
}

template <class V>
Probability cond_prob(const std::vector<Predicate<V>>& ps1, const std::vector<Predicate<V>>& ps2, Dist<V> d,
                      const SearchConfig& config = {}) {
    return cond_prob_stats(ps1, ps2, std::move(d), config).probability;
}

} // namespace lazynd

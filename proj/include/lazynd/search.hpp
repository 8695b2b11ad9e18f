#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "eff.hpp"

namespace lazynd {

enum class SearchStrategy { dfs, bfs };
enum class Side : std::uint8_t { left, right };

struct PathStep {
    std::uint64_t label;
    Side side;
    bool followed; // label was already decided higher up the path
};

using PathView = std::span<const PathStep>;

// Immutable label -> side map; extending shares the parent.
class DecisionMap {
    struct Entry {
        std::uint64_t label;
        Side side;
        std::shared_ptr<const Entry> parent;
        ~Entry() { detail::Reclaimer::drop(std::const_pointer_cast<Entry>(std::move(parent))); }
    };

public:
    std::optional<Side> lookup(std::uint64_t label) const {
        for (const Entry* e = head_.get(); e; e = e->parent.get())
            if (e->label == label)
                return e->side;
        return std::nullopt;
    }

    DecisionMap extend(std::uint64_t label, Side side) const {
        DecisionMap m;
        m.head_ = std::make_shared<const Entry>(Entry{label, side, head_});
        m.size_ = size_ + 1;
        return m;
    }

    std::size_t size() const { return size_; }

private:
    std::shared_ptr<const Entry> head_;
    std::size_t size_ = 0;
};

inline std::size_t env_depth_cap() {
    const char* s = std::getenv("LAZYND_DEPTH_CAP");
    if (!s)
        return default_depth_cap;
    std::string_view sv(s);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
    if (ec != std::errc() || ptr != sv.data() + sv.size() || v == 0)
        return default_depth_cap;
    return v;
}

struct SearchConfig {
    SearchStrategy strategy = SearchStrategy::dfs;
    std::size_t depth_cap = env_depth_cap();
};

template <class V>
class Multiset {
public:
    Multiset() = default;
    explicit Multiset(std::vector<V> items) : items_(std::move(items)) {}

    const std::vector<V>& items() const { return items_; }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    std::size_t count(const V& v) const { return static_cast<std::size_t>(std::count(items_.begin(), items_.end(), v)); }

    std::vector<V> sorted() const {
        auto s = items_;
        std::sort(s.begin(), s.end());
        return s;
    }

    friend bool operator==(const Multiset& a, const Multiset& b) {
        return a.size() == b.size() && a.sorted() == b.sorted();
    }

private:
    std::vector<V> items_;
};

template <class V>
struct Enumeration {
    std::vector<V> values;
    SearchStats stats;
};

namespace detail {

struct CapScope {
    ForceState& st = force_state();
    std::size_t saved_limit = st.limit;
    std::size_t saved_cap = st.reported_cap;
    std::size_t base = st.depth;
    std::size_t cap;

    explicit CapScope(std::size_t c) : cap(c) { st.reported_cap = c; }
    ~CapScope() {
        st.limit = saved_limit;
        st.reported_cap = saved_cap;
    }

    void enter(std::size_t path_depth, const SearchStats& stats) const {
        if (path_depth > cap)
            throw depth_cap_exceeded(cap, stats);
        st.limit = base + std::min(max_nested_forces, cap - path_depth);
    }
};

template <class F, class V>
void emit_value(F& f, V&& v, PathView path) {
    if constexpr (std::is_invocable_v<F&, V&&, PathView>)
        f(std::forward<V>(v), path);
    else
        f(std::forward<V>(v));
}

struct IgnoreFailure {
    template <class N>
    void operator()(const N&) const {}
};

template <class V, class S, class OnValue, class OnFailure>
void dfs(Eff<V, S> root, const CapScope& scope, SearchStats& stats, OnValue& on_value, OnFailure& on_failure) {
    struct Entry {
        Eff<V, S> eff;
        std::size_t trace_len;
        std::optional<PathStep> pending;
        std::size_t depth;
    };
    std::vector<Entry> stack;
    std::vector<PathStep> trace;
    std::unordered_map<std::uint64_t, Side> decided;

    stack.push_back({std::move(root), 0, std::nullopt, 0});
    while (!stack.empty()) {
        Entry en = std::move(stack.back());
        stack.pop_back();
        while (trace.size() > en.trace_len) {
            if (!trace.back().followed)
                decided.erase(trace.back().label);
            trace.pop_back();
        }
        if (en.pending) {
            trace.push_back(*en.pending);
            decided.emplace(en.pending->label, en.pending->side);
        }

        Eff<V, S> cur = std::move(en.eff);
        std::size_t depth = en.depth;
        for (;;) {
            scope.enter(depth, stats);
            Node<V, S> n = std::move(cur).take();
            if (n.is_pure()) {
                ++stats.leaves;
                emit_value(on_value, std::move(n.value()), PathView(trace));
                break;
            }
            if (n.shape() != Shape::choice) {
                ++stats.failures;
                on_failure(n);
                break;
            }
            ++depth;
            std::uint64_t id = n.label().id();
            if (auto it = decided.find(id); it != decided.end()) {
                ++stats.consistent_follows;
                trace.push_back({id, it->second, true});
                cur = std::move(n.child(it->second == Side::left ? 0 : 1));
                continue;
            }
            ++stats.choice_expansions;
            stack.push_back({std::move(n.child(1)), trace.size(), PathStep{id, Side::right, false}, depth});
            stack.push_back({std::move(n.child(0)), trace.size(), PathStep{id, Side::left, false}, depth});
            break;
        }
    }
}

template <class V, class S, class OnValue, class OnFailure>
void bfs(Eff<V, S> root, const CapScope& scope, SearchStats& stats, OnValue& on_value, OnFailure& on_failure) {
    struct TraceNode {
        PathStep step;
        std::shared_ptr<const TraceNode> parent;
        ~TraceNode() { Reclaimer::drop(std::const_pointer_cast<TraceNode>(std::move(parent))); }
    };
    struct Entry {
        Eff<V, S> eff;
        DecisionMap decided;
        std::shared_ptr<const TraceNode> trace;
        std::size_t depth;
    };
    constexpr bool wants_path = std::is_invocable_v<OnValue&, V&&, PathView>;

    std::deque<Entry> queue;
    queue.push_back({std::move(root), {}, nullptr, 0});
    std::vector<PathStep> path;
    while (!queue.empty()) {
        Entry en = std::move(queue.front());
        queue.pop_front();
        for (;;) {
            scope.enter(en.depth, stats);
            Node<V, S> n = std::move(en.eff).take();
            if (n.is_pure()) {
                ++stats.leaves;
                path.clear();
                if constexpr (wants_path) {
                    for (const TraceNode* t = en.trace.get(); t; t = t->parent.get())
                        path.push_back(t->step);
                    std::reverse(path.begin(), path.end());
                }
                emit_value(on_value, std::move(n.value()), PathView(path));
                break;
            }
            if (n.shape() != Shape::choice) {
                ++stats.failures;
                on_failure(n);
                break;
            }
            ++en.depth;
            std::uint64_t id = n.label().id();
            if (auto side = en.decided.lookup(id)) {
                ++stats.consistent_follows;
                if constexpr (wants_path)
                    en.trace = std::make_shared<const TraceNode>(TraceNode{{id, *side, true}, en.trace});
                en.eff = std::move(n.child(*side == Side::left ? 0 : 1));
                continue;
            }
            ++stats.choice_expansions;
            for (Side side : {Side::left, Side::right}) {
                std::shared_ptr<const TraceNode> t;
                if constexpr (wants_path)
                    t = std::make_shared<const TraceNode>(TraceNode{{id, side, false}, en.trace});
                queue.push_back({std::move(n.child(side == Side::left ? 0 : 1)), en.decided.extend(id, side), std::move(t), en.depth});
            }
            break;
        }
    }
}

} // namespace detail

// Visits every pure leaf reachable under consistent decisions. Each label is
// decided once per path; later occurrences on the same path follow it.
template <class V, class S, class OnValue, class OnFailure = detail::IgnoreFailure>
SearchStats search(Eff<V, S> root, const SearchConfig& config, OnValue&& on_value, OnFailure&& on_failure = {}) {
    SearchStats stats;
    detail::CapScope scope(config.depth_cap);
    try {
        if (config.strategy == SearchStrategy::dfs)
            detail::dfs(std::move(root), scope, stats, on_value, on_failure);
        else
            detail::bfs(std::move(root), scope, stats, on_value, on_failure);
    } catch (const depth_cap_exceeded& e) {
        throw depth_cap_exceeded(config.depth_cap, stats);
    }
    return stats;
}

template <class V, class S>
Enumeration<V> enumerate(Eff<V, S> root, const SearchConfig& config = {}) {
    Enumeration<V> out;
    out.stats = search(std::move(root), config, [&](V&& v) { out.values.push_back(std::move(v)); });
    return out;
}

template <class V, class S>
Enumeration<V> enumerate(Eff<V, S> root, SearchStrategy strategy) {
    SearchConfig c;
    c.strategy = strategy;
    return enumerate(std::move(root), c);
}

template <class V, class S>
Multiset<V> all_values(Eff<V, S> root, const SearchConfig& config = {}) {
    return Multiset<V>(enumerate(std::move(root), config).values);
}

template <class V, class S>
std::size_t count_values(Eff<V, S> root, const SearchConfig& config = {}) {
    return search(std::move(root), config, [](V&&) {}).leaves;
}

template <class V, class Op, class A>
A fold_values(Op op, A init, const Multiset<V>& m) {
    for (const auto& v : m)
        init = op(std::move(init), v);
    return init;
}

template <class V, class G>
auto map_values(G g, const Multiset<V>& m) {
    using W = std::remove_cvref_t<std::invoke_result_t<G&, const V&>>;
    std::vector<W> out;
    out.reserve(m.size());
    for (const auto& v : m)
        out.push_back(g(v));
    return Multiset<W>(std::move(out));
}

} // namespace lazynd

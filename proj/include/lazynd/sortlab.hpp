#pragma once

#include <functional>
#include <memory>
#include <numeric>
#include <string_view>
#include <utility>
#include <vector>

#include "display.hpp"
#include "lifted.hpp"
#include "search.hpp"

namespace lazynd {

template <class V>
using Comparator = std::function<Eff<bool>(const Eff<V>&, const Eff<V>&)>;

// Fresh True ? False per call; operands are recorded for display but never forced.
template <class V>
Comparator<V> coin_cmp() {
    return [](const Eff<V>& x, const Eff<V>& y) {
        auto ann = std::make_shared<const Annotation>(
            Annotation{[x] { return describe_if_evaluated(x); }, [y] { return describe_if_evaluated(y); }});
        return choose(pure(true), pure(false), std::move(ann));
    };
}

template <class V>
Comparator<V> leq_cmp() {
    return [](const Eff<V>& x, const Eff<V>& y) { return lift2([](const V& a, const V& b) { return a <= b; }, x, y); };
}

enum class SortAlgorithm { insertion, selection, bubble, quick_filter, quick_split, merge };
enum class Strictness { lazy, strict };

inline constexpr SortAlgorithm all_sort_algorithms[] = {SortAlgorithm::insertion, SortAlgorithm::selection,
                                                        SortAlgorithm::bubble, SortAlgorithm::quick_filter,
                                                        SortAlgorithm::quick_split, SortAlgorithm::merge};

inline std::string_view algorithm_name(SortAlgorithm a) {
    switch (a) {
    case SortAlgorithm::insertion: return "insertion";
    case SortAlgorithm::selection: return "selection";
    case SortAlgorithm::bubble: return "bubble";
    case SortAlgorithm::quick_filter: return "quick-filter";
    case SortAlgorithm::quick_split: return "quick-split";
    case SortAlgorithm::merge: return "merge";
    }
    return "?";
}

template <class V>
using ListPair = LiftedPair<LiftedList<V>, LiftedList<V>>;

// ---- lazy versions over lifted lists ----

template <class V>
ListEff<V> insert_by(const Comparator<V>& c, Eff<V> x, ListEff<V> xs) {
    return bind(std::move(xs), [c, x = std::move(x)](const LiftedList<V>& l) {
        if (l.is_nil())
            return cons(x, nil<V>());
        return bind(c(x, l.head()), [c, x, y = l.head(), ys = l.tail()](bool b) {
            return b ? cons(x, cons(y, ys)) : cons(y, insert_by(c, x, ys));
        });
    });
}

template <class V>
ListEff<V> insertion_sort(const Comparator<V>& c, ListEff<V> xs) {
    return bind(std::move(xs), [c](const LiftedList<V>& l) {
        if (l.is_nil())
            return nil<V>();
        return insert_by(c, l.head(), insertion_sort(c, l.tail()));
    });
}

// The recursive call is one shared suspension, projected twice.
template <class V>
Eff<LiftedPair<V, LiftedList<V>>> pick_min(const Comparator<V>& c, ListEff<V> xs) {
    using P = LiftedPair<V, LiftedList<V>>;
    return bind(std::move(xs), [c](const LiftedList<V>& l) {
        if (l.is_nil())
            return fail<P>();
        return bind(l.tail(), [c, x = l.head(), rest = l.tail()](const LiftedList<V>& r) {
            if (r.is_nil())
                return make_pair(x, nil<V>());
            auto rec = pick_min(c, rest);
            auto m = fst(rec);
            auto ml = snd(rec);
            return bind(c(x, m), [x, rest, m, ml](bool b) {
                return b ? make_pair(x, rest) : make_pair(m, cons(x, ml));
            });
        });
    });
}

template <class V>
ListEff<V> selection_sort(const Comparator<V>& c, ListEff<V> xs) {
    return bind(xs, [c, xs](const LiftedList<V>& l) {
        if (l.is_nil())
            return nil<V>();
        auto pm = pick_min(c, xs);
        return cons(fst(pm), selection_sort(c, snd(pm)));
    });
}

template <class V>
ListEff<V> bubble(const Comparator<V>& c, ListEff<V> xs) {
    return bind(std::move(xs), [c](const LiftedList<V>& l) {
        if (l.is_nil())
            return fail<LiftedList<V>>();
        return bind(l.tail(), [c, x = l.head(), rest = l.tail()](const LiftedList<V>& r) {
            if (r.is_nil())
                return cons(x, rest);
            auto rec = bubble(c, rest);
            auto y = head(rec);
            auto ys = tail(rec);
            return bind(c(x, y), [x, y, ys](bool b) { return b ? cons(x, cons(y, ys)) : cons(y, cons(x, ys)); });
        });
    });
}

template <class V>
ListEff<V> bubble_sort(const Comparator<V>& c, ListEff<V> xs) {
    return bind(xs, [c, xs](const LiftedList<V>& l) {
        if (l.is_nil())
            return nil<V>();
        auto rec = bubble(c, xs);
        return cons(head(rec), bubble_sort(c, tail(rec)));
    });
}

template <class V>
ListEff<V> quick_sort_filter(const Comparator<V>& c, ListEff<V> xs) {
    return bind(std::move(xs), [c](const LiftedList<V>& l) {
        if (l.is_nil())
            return nil<V>();
        auto x = l.head();
        auto l1 = filter_nd<V, ND>([c, x](const Eff<V>& y) { return c(y, x); }, l.tail());
        auto l2 = filter_nd<V, ND>([c, x](const Eff<V>& y) { return lnot(c(y, x)); }, l.tail());
        return append(quick_sort_filter(c, l1), cons(x, quick_sort_filter(c, l2)));
    });
}

// One traversal; elements y with `y <= pivot` go to the first list.
template <class V>
Eff<ListPair<V>> split_by(const Comparator<V>& c, Eff<V> pivot, ListEff<V> ys, ListEff<V> l1, ListEff<V> l2) {
    return bind(std::move(ys), [c, pivot = std::move(pivot), l1 = std::move(l1), l2 = std::move(l2)](const LiftedList<V>& l) {
        if (l.is_nil())
            return make_pair(l1, l2);
        return bind(c(l.head(), pivot), [c, pivot, y = l.head(), rest = l.tail(), l1, l2](bool b) {
            return b ? split_by(c, pivot, rest, cons(y, l1), l2) : split_by(c, pivot, rest, l1, cons(y, l2));
        });
    });
}

template <class V>
ListEff<V> quick_sort_split(const Comparator<V>& c, ListEff<V> xs) {
    return bind(std::move(xs), [c](const LiftedList<V>& l) {
        if (l.is_nil())
            return nil<V>();
        auto s = split_by(c, l.head(), l.tail(), nil<V>(), nil<V>());
        return append(quick_sort_split(c, fst(s)), cons(l.head(), quick_sort_split(c, snd(s))));
    });
}

template <class V>
Eff<ListPair<V>> divide_at(ListEff<V> xs, std::size_t k) {
    return bind(xs, [xs, k](const LiftedList<V>& l) {
        if (l.is_nil())
            return make_pair(nil<V>(), nil<V>());
        if (k == 0)
            return make_pair(nil<V>(), xs);
        auto r = divide_at(l.tail(), k - 1);
        return make_pair(cons(l.head(), fst(r)), snd(r));
    });
}

template <class V>
Eff<ListPair<V>> divide(ListEff<V> xs) {
    return bind(length(xs), [xs](std::size_t n) { return divide_at(xs, n / 2); });
}

template <class V>
ListEff<V> merge(const Comparator<V>& c, ListEff<V> xs, ListEff<V> ys) {
    return bind(xs, [c, xs, ys](const LiftedList<V>& a) {
        if (a.is_nil())
            return ys;
        return bind(ys, [c, xs, ys, a](const LiftedList<V>& b) {
            if (b.is_nil())
                return xs;
            return bind(c(a.head(), b.head()), [c, xs, ys, a, b](bool le) {
                return le ? cons(a.head(), merge(c, a.tail(), ys)) : cons(b.head(), merge(c, xs, b.tail()));
            });
        });
    });
}

template <class V>
ListEff<V> merge_sort(const Comparator<V>& c, ListEff<V> xs) {
    return bind(xs, [c, xs](const LiftedList<V>& l) {
        if (l.is_nil())
            return nil<V>();
        return bind(l.tail(), [c, xs](const LiftedList<V>& r) {
            if (r.is_nil())
                return xs;
            auto d = divide(xs);
            return merge(c, merge_sort(c, fst(d)), merge_sort(c, snd(d)));
        });
    });
}

// ---- strict versions: list-monad style over host vectors ----

namespace strict {

template <class V>
using Vec = std::vector<V>;

template <class V>
Vec<V> prepend(const V& x, const Vec<V>& xs) {
    Vec<V> out;
    out.reserve(xs.size() + 1);
    out.push_back(x);
    out.insert(out.end(), xs.begin(), xs.end());
    return out;
}

template <class V>
Vec<V> drop1(const Vec<V>& xs) {
    return Vec<V>(xs.begin() + 1, xs.end());
}

template <class V>
Eff<bool> cmp(const Comparator<V>& c, const V& x, const V& y) {
    return c(pure(x), pure(y));
}

template <class V>
Eff<Vec<V>> insert(const Comparator<V>& c, V x, Vec<V> ys) {
    if (ys.empty())
        return pure(Vec<V>{x});
    return bind(cmp(c, x, ys[0]), [c, x, ys](bool b) {
        if (b)
            return pure(prepend(x, ys));
        return bind(insert(c, x, drop1(ys)), [y = ys[0]](const Vec<V>& zs) { return pure(prepend(y, zs)); });
    });
}

template <class V>
Eff<Vec<V>> insertion_sort(const Comparator<V>& c, const Vec<V>& xs) {
    if (xs.empty())
        return pure(Vec<V>{});
    return bind(insertion_sort(c, drop1(xs)), [c, x = xs[0]](const Vec<V>& ys) { return insert(c, x, ys); });
}

template <class V>
Eff<std::pair<V, Vec<V>>> pick_min(const Comparator<V>& c, const Vec<V>& xs) {
    using P = std::pair<V, Vec<V>>;
    if (xs.empty())
        return fail<P>();
    if (xs.size() == 1)
        return pure(P{xs[0], {}});
    return bind(pick_min(c, drop1(xs)), [c, xs](const P& ml) {
        return bind(cmp(c, xs[0], ml.first), [xs, ml](bool b) {
            return pure(b ? P{xs[0], drop1(xs)} : P{ml.first, prepend(xs[0], ml.second)});
        });
    });
}

template <class V>
Eff<Vec<V>> selection_sort(const Comparator<V>& c, const Vec<V>& xs) {
    if (xs.empty())
        return pure(Vec<V>{});
    return bind(pick_min(c, xs), [c](const std::pair<V, Vec<V>>& ml) {
        return bind(selection_sort(c, ml.second), [m = ml.first](const Vec<V>& ys) { return pure(prepend(m, ys)); });
    });
}

template <class V>
Eff<Vec<V>> bubble(const Comparator<V>& c, const Vec<V>& xs) {
    if (xs.size() <= 1)
        return pure(xs);
    return bind(bubble(c, drop1(xs)), [c, x = xs[0]](const Vec<V>& r) {
        return bind(cmp(c, x, r[0]), [x, r](bool b) {
            Vec<V> out = prepend(x, r);
            if (!b)
                std::swap(out[0], out[1]);
            return pure(std::move(out));
        });
    });
}

template <class V>
Eff<Vec<V>> bubble_sort(const Comparator<V>& c, const Vec<V>& xs) {
    if (xs.empty())
        return pure(Vec<V>{});
    return bind(bubble(c, xs), [c](const Vec<V>& r) {
        return bind(bubble_sort(c, drop1(r)), [y = r[0]](const Vec<V>& zs) { return pure(prepend(y, zs)); });
    });
}

template <class V, class P>
Eff<Vec<V>> filter(P p, const Vec<V>& xs) {
    if (xs.empty())
        return pure(Vec<V>{});
    return bind(p(xs[0]), [p, xs](bool b) {
        return bind(filter<V>(p, drop1(xs)), [b, x = xs[0]](const Vec<V>& ys) { return pure(b ? prepend(x, ys) : ys); });
    });
}

template <class V>
Eff<Vec<V>> quick_sort_filter(const Comparator<V>& c, const Vec<V>& xs) {
    if (xs.empty())
        return pure(Vec<V>{});
    V x = xs[0];
    Vec<V> rest = drop1(xs);
    return bind(filter<V>([c, x](const V& y) { return cmp(c, y, x); }, rest), [c, x, rest](const Vec<V>& l1) {
        return bind(filter<V>([c, x](const V& y) { return lnot(cmp(c, y, x)); }, rest), [c, x, l1](const Vec<V>& l2) {
            return bind(quick_sort_filter(c, l1), [c, x, l2](const Vec<V>& s1) {
                return bind(quick_sort_filter(c, l2), [x, s1](const Vec<V>& s2) {
                    Vec<V> out = s1;
                    out.push_back(x);
                    out.insert(out.end(), s2.begin(), s2.end());
                    return pure(std::move(out));
                });
            });
        });
    });
}

template <class V>
Eff<std::pair<Vec<V>, Vec<V>>> split(const Comparator<V>& c, V pivot, Vec<V> ys, Vec<V> l1, Vec<V> l2) {
    if (ys.empty())
        return pure(std::pair{std::move(l1), std::move(l2)});
    return bind(cmp(c, ys[0], pivot), [c, pivot, ys, l1, l2](bool b) {
        return b ? split(c, pivot, drop1(ys), prepend(ys[0], l1), l2) : split(c, pivot, drop1(ys), l1, prepend(ys[0], l2));
    });
}

template <class V>
Eff<Vec<V>> quick_sort_split(const Comparator<V>& c, const Vec<V>& xs) {
    if (xs.empty())
        return pure(Vec<V>{});
    return bind(split(c, xs[0], drop1(xs), {}, {}), [c, x = xs[0]](const std::pair<Vec<V>, Vec<V>>& s) {
        return bind(quick_sort_split(c, s.first), [c, x, l2 = s.second](const Vec<V>& s1) {
            return bind(quick_sort_split(c, l2), [x, s1](const Vec<V>& s2) {
                Vec<V> out = s1;
                out.push_back(x);
                out.insert(out.end(), s2.begin(), s2.end());
                return pure(std::move(out));
            });
        });
    });
}

template <class V>
Eff<Vec<V>> merge(const Comparator<V>& c, const Vec<V>& xs, const Vec<V>& ys) {
    if (xs.empty())
        return pure(ys);
    if (ys.empty())
        return pure(xs);
    return bind(cmp(c, xs[0], ys[0]), [c, xs, ys](bool le) {
        if (le)
            return bind(merge(c, drop1(xs), ys), [x = xs[0]](const Vec<V>& zs) { return pure(prepend(x, zs)); });
        return bind(merge(c, xs, drop1(ys)), [y = ys[0]](const Vec<V>& zs) { return pure(prepend(y, zs)); });
    });
}

template <class V>
Eff<Vec<V>> merge_sort(const Comparator<V>& c, const Vec<V>& xs) {
    if (xs.size() <= 1)
        return pure(xs);
    auto mid = xs.begin() + static_cast<std::ptrdiff_t>(xs.size() / 2);
    Vec<V> l1(xs.begin(), mid), l2(mid, xs.end());
    return bind(merge_sort(c, l1), [c, l2](const Vec<V>& s1) {
        return bind(merge_sort(c, l2), [c, s1](const Vec<V>& s2) { return merge(c, s1, s2); });
    });
}

template <class V>
Eff<Vec<V>> sort(SortAlgorithm algo, const Comparator<V>& c, const Vec<V>& xs) {
    switch (algo) {
    case SortAlgorithm::insertion: return insertion_sort(c, xs);
    case SortAlgorithm::selection: return selection_sort(c, xs);
    case SortAlgorithm::bubble: return bubble_sort(c, xs);
    case SortAlgorithm::quick_filter: return quick_sort_filter(c, xs);
    case SortAlgorithm::quick_split: return quick_sort_split(c, xs);
    case SortAlgorithm::merge: return merge_sort(c, xs);
    }
    return fail<Vec<V>>();
}

} // namespace strict

template <class V>
ListEff<V> sort(SortAlgorithm algo, const Comparator<V>& c, ListEff<V> xs, Strictness mode = Strictness::lazy) {
    if (mode == Strictness::strict) {
        return bind(nf(xs), [algo, c](const std::vector<nf_t<V>>& v) {
            return bind(strict::sort(algo, c, v), [](const std::vector<V>& r) { return from_host(r); });
        });
    }
    switch (algo) {
    case SortAlgorithm::insertion: return insertion_sort(c, std::move(xs));
    case SortAlgorithm::selection: return selection_sort(c, std::move(xs));
    case SortAlgorithm::bubble: return bubble_sort(c, std::move(xs));
    case SortAlgorithm::quick_filter: return quick_sort_filter(c, std::move(xs));
    case SortAlgorithm::quick_split: return quick_sort_split(c, std::move(xs));
    case SortAlgorithm::merge: return merge_sort(c, std::move(xs));
    }
    return fail<LiftedList<V>>();
}

inline std::vector<int> iota_list(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return v;
}

// Sorting [1..n] under coin_cmp, normal forms of all results.
inline Enumeration<std::vector<int>> permutations(SortAlgorithm algo, int n, Strictness mode = Strictness::lazy,
                                                  const SearchConfig& config = {}) {
    return enumerate(nf(sort(algo, coin_cmp<int>(), from_host(iota_list(n)), mode)), config);
}

// Only the head of the sorted list is demanded.
inline SearchStats head_demand_stats(SortAlgorithm algo, int n, Strictness mode = Strictness::lazy,
                                     const SearchConfig& config = {}) {
    return search(head(sort(algo, coin_cmp<int>(), from_host(iota_list(n)), mode)), config, [](int&&) {});
}

inline SearchStats strict_pick_min_stats(int n, const SearchConfig& config = {}) {
    return search(strict::pick_min(coin_cmp<int>(), iota_list(n)), config, [](std::pair<int, std::vector<int>>&&) {});
}

} // namespace lazynd

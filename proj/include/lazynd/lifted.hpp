#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "eff.hpp"

namespace lazynd {

template <class V, class S = ND>
class LiftedList;

template <class V, class S = ND>
using ListEff = Eff<LiftedList<V, S>, S>;

// Nil | Cons (Eff head) (Eff tail); both components stay suspended.
template <class V, class S>
class LiftedList {
    struct Cell {
        Eff<V, S> head;
        ListEff<V, S> tail;
    };

public:
    using element_type = V;

    LiftedList() = default;
    LiftedList(Eff<V, S> head, ListEff<V, S> tail)
        : cell_(std::make_shared<const Cell>(Cell{std::move(head), std::move(tail)})) {}

    bool is_nil() const { return !cell_; }
    const Eff<V, S>& head() const { return cell_->head; }
    const ListEff<V, S>& tail() const { return cell_->tail; }

private:
    std::shared_ptr<const Cell> cell_;
};

template <class A, class B, class S = ND>
struct LiftedPair {
    Eff<A, S> first;
    Eff<B, S> second;
};

template <class V, class S = ND>
ListEff<V, S> nil() {
    return pure<S>(LiftedList<V, S>());
}

template <class V, class S>
ListEff<V, S> cons(Eff<V, S> head, ListEff<V, S> tail) {
    return pure<S>(LiftedList<V, S>(std::move(head), std::move(tail)));
}

namespace detail {

template <class V, class S>
ListEff<V, S> host_suffix(std::shared_ptr<const std::vector<V>> xs, std::size_t i) {
    if (i == xs->size())
        return nil<V, S>();
    return ListEff<V, S>::deferred([xs = std::move(xs), i] {
        return Node<LiftedList<V, S>, S>::pure(LiftedList<V, S>(pure<S>((*xs)[i]), host_suffix<V, S>(xs, i + 1)));
    });
}

} // namespace detail

// Deterministic list; cons cells are built as the spine is demanded.
template <class S = ND, class V>
ListEff<V, S> from_host(std::vector<V> xs) {
    return detail::host_suffix<V, S>(std::make_shared<const std::vector<V>>(std::move(xs)), 0);
}

template <class A, class B, class S>
Eff<LiftedPair<A, B, S>, S> make_pair(Eff<A, S> a, Eff<B, S> b) {
    return pure<S>(LiftedPair<A, B, S>{std::move(a), std::move(b)});
}

template <class A, class B, class S>
Eff<A, S> fst(Eff<LiftedPair<A, B, S>, S> p) {
    return bind(std::move(p), [](const LiftedPair<A, B, S>& q) { return q.first; });
}

template <class A, class B, class S>
Eff<B, S> snd(Eff<LiftedPair<A, B, S>, S> p) {
    return bind(std::move(p), [](const LiftedPair<A, B, S>& q) { return q.second; });
}

template <class V, class S>
Eff<V, S> head(ListEff<V, S> xs) {
    return bind(std::move(xs), [](const LiftedList<V, S>& l) {
        return l.is_nil() ? signature_failure<V, S>("head of empty list") : l.head();
    });
}

template <class V, class S>
ListEff<V, S> tail(ListEff<V, S> xs) {
    return bind(std::move(xs), [](const LiftedList<V, S>& l) {
        return l.is_nil() ? signature_failure<LiftedList<V, S>, S>("tail of empty list") : l.tail();
    });
}

template <class V, class S>
Eff<bool, S> null(ListEff<V, S> xs) {
    return bind(std::move(xs), [](const LiftedList<V, S>& l) { return pure<S>(l.is_nil()); });
}

template <class V, class S>
ListEff<V, S> append(ListEff<V, S> xs, ListEff<V, S> ys) {
    return bind(std::move(xs), [ys = std::move(ys)](const LiftedList<V, S>& l) {
        if (l.is_nil())
            return ys;
        return cons(l.head(), append(l.tail(), ys));
    });
}

// Forces the spine only.
template <class V, class S>
Eff<std::size_t, S> length(ListEff<V, S> xs, std::size_t acc = 0) {
    return bind(std::move(xs), [acc](const LiftedList<V, S>& l) {
        return l.is_nil() ? pure<S>(acc) : length(l.tail(), acc + 1);
    });
}

template <class V, class S>
ListEff<V, S> reverse(ListEff<V, S> xs, ListEff<V, S> acc = nil<V, S>()) {
    return bind(std::move(xs), [acc = std::move(acc)](const LiftedList<V, S>& l) {
        return l.is_nil() ? acc : reverse(l.tail(), cons(l.head(), acc));
    });
}

template <class S>
Eff<bool, S> land(Eff<bool, S> a, Eff<bool, S> b) {
    return bind(std::move(a), [b = std::move(b)](bool x) { return x ? b : pure<S>(false); });
}

template <class S>
Eff<bool, S> lor(Eff<bool, S> a, Eff<bool, S> b) {
    return bind(std::move(a), [b = std::move(b)](bool x) { return x ? pure<S>(true) : b; });
}

template <class S>
Eff<bool, S> lnot(Eff<bool, S> a) {
    return lift1([](bool x) { return !x; }, std::move(a));
}

// p :: Eff<V> -> Eff<bool>
template <class V, class S, class P>
Eff<bool, S> all_of(P p, ListEff<V, S> xs) {
    return bind(std::move(xs), [p = std::move(p)](const LiftedList<V, S>& l) {
        if (l.is_nil())
            return pure<S>(true);
        return land(p(l.head()), all_of<V, S>(p, l.tail()));
    });
}

template <class V, class S>
Eff<bool, S> list_equal(ListEff<V, S> xs, ListEff<V, S> ys) {
    return bind(std::move(xs), [ys = std::move(ys)](const LiftedList<V, S>& a) {
        return bind(ys, [a](const LiftedList<V, S>& b) {
            if (a.is_nil() || b.is_nil())
                return pure<S>(a.is_nil() && b.is_nil());
            auto same = lift2([](const V& x, const V& y) { return x == y; }, a.head(), b.head());
            return land(same, list_equal(a.tail(), b.tail()));
        });
    });
}

// Normal forms: primitives are their own, lifted lists and pairs become host values.
template <class T>
struct nf_traits {
    using type = T;
    template <class S>
    static Eff<T, S> eval(const Eff<T, S>& e) {
        return e;
    }
};

template <class T>
using nf_t = typename nf_traits<T>::type;

template <class T, class S>
Eff<nf_t<T>, S> nf(const Eff<T, S>& e) {
    return nf_traits<T>::eval(e);
}

template <class V, class S>
struct nf_traits<LiftedList<V, S>> {
    using type = std::vector<nf_t<V>>;

    static Eff<type, S> eval(const ListEff<V, S>& e) { return go(e, {}); }

    static Eff<type, S> go(ListEff<V, S> xs, type acc) {
        return bind(std::move(xs), [acc = std::move(acc)](const LiftedList<V, S>& l) {
            if (l.is_nil())
                return pure<S>(acc);
            return bind(nf(l.head()), [acc, t = l.tail()](const nf_t<V>& h) {
                auto a = acc;
                a.push_back(h);
                return go(t, std::move(a));
            });
        });
    }
};

template <class A, class B, class S>
struct nf_traits<LiftedPair<A, B, S>> {
    using type = std::pair<nf_t<A>, nf_t<B>>;

    static Eff<type, S> eval(const Eff<LiftedPair<A, B, S>, S>& e) {
        return bind(e, [](const LiftedPair<A, B, S>& p) {
            return bind(nf(p.first), [second = p.second](const nf_t<A>& a) {
                return lift1([a](const nf_t<B>& b) { return type(a, b); }, nf(second));
            });
        });
    }
};

// insert x [] = [x]; insert x (y:ys) = (x:y:ys) ? (y : insert x ys)
template <class V>
ListEff<V> insert_nd(Eff<V> x, ListEff<V> xs) {
    return bind(std::move(xs), [x = std::move(x)](const LiftedList<V>& l) {
        if (l.is_nil())
            return cons(x, nil<V>());
        return choose(cons(x, cons(l.head(), l.tail())), cons(l.head(), insert_nd(x, l.tail())));
    });
}

// p :: Eff<V> -> Eff<bool>
template <class V, class S, class P>
ListEff<V, S> filter_nd(P p, ListEff<V, S> xs) {
    return bind(std::move(xs), [p = std::move(p)](const LiftedList<V, S>& l) {
        if (l.is_nil())
            return nil<V, S>();
        return bind(p(l.head()), [p, h = l.head(), t = l.tail()](bool keep) {
            auto rest = filter_nd<V, S>(p, t);
            return keep ? cons(h, rest) : rest;
        });
    });
}

} // namespace lazynd

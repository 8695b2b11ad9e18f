#pragma once

#include <array>
#include <functional>
#include <memory>
#include <type_traits>
#include <utility>
#include <variant>

#include "errors.hpp"
#include "label.hpp"
#include "signature.hpp"
#include "suspension.hpp"

namespace lazynd {

template <class V, class S>
class Node;

// Handle to a memoized effect tree. Copies share the cell, so reusing a handle
// reuses its choice labels (call-time choice); building a new tree draws fresh ones.
template <class V, class S = ND>
class Eff {
public:
    using value_type = V;
    using signature = S;
    using node_type = Node<V, S>;

    Eff() = default;

    static Eff from_node(node_type n) { return Eff(Suspension<node_type>::evaluated(std::move(n))); }
    template <class F>
    static Eff deferred(F producer) {
        return Eff(Suspension<node_type>::deferred(std::move(producer)));
    }

    const node_type& node() const { return susp_.force(); }
    node_type take() && { return std::move(susp_).take(); }

    bool empty() const { return susp_.empty(); }
    bool is_evaluated() const { return susp_.is_evaluated(); }
    bool same_as(const Eff& o) const { return susp_.same_cell(o.susp_); }

private:
    explicit Eff(Suspension<node_type> s) : susp_(std::move(s)) {}
    Suspension<node_type> susp_;
};

template <class V, class S>
class Node {
public:
    using payload_type = typename S::payload_type;

    struct Impure {
        Shape shape;
        ChoiceLabel label;
        std::array<Eff<V, S>, 2> children;
        payload_type payload;
    };

    static Node pure(V v) { return Node(std::in_place_index<0>, std::move(v)); }

    static Node operation(Shape shape, payload_type payload = {}) {
        check(shape);
        return Node(std::in_place_index<1>, Impure{shape, {}, {}, std::move(payload)});
    }

    static Node choice(ChoiceLabel label, Eff<V, S> left, Eff<V, S> right) {
        check(Shape::choice);
        return Node(std::in_place_index<1>, Impure{Shape::choice, std::move(label), {std::move(left), std::move(right)}, {}});
    }

    bool is_pure() const { return data_.index() == 0; }
    const V& value() const { return std::get<0>(data_); }
    V& value() { return std::get<0>(data_); }

    Shape shape() const { return std::get<1>(data_).shape; }
    const ChoiceLabel& label() const { return std::get<1>(data_).label; }
    const Eff<V, S>& child(std::size_t i) const { return std::get<1>(data_).children[i]; }
    Eff<V, S>& child(std::size_t i) { return std::get<1>(data_).children[i]; }
    const payload_type& payload() const { return std::get<1>(data_).payload; }

private:
    static void check(Shape shape) {
        if (!S::has(shape))
            throw effect_error("operation not in signature");
    }

    template <std::size_t I, class... A>
    explicit Node(std::in_place_index_t<I> i, A&&... a) : data_(i, std::forward<A>(a)...) {}

    std::variant<V, Impure> data_;
};

template <class T>
struct is_eff : std::false_type {};
template <class V, class S>
struct is_eff<Eff<V, S>> : std::true_type {};
template <class T>
inline constexpr bool is_eff_v = is_eff<std::remove_cvref_t<T>>::value;

template <class S = ND, class V>
Eff<std::decay_t<V>, S> pure(V&& v) {
    using W = std::decay_t<V>;
    return Eff<W, S>::from_node(Node<W, S>::pure(std::forward<V>(v)));
}

template <class V>
Eff<V, ND> fail() {
    return Eff<V, ND>::from_node(Node<V, ND>::operation(Shape::fail));
}

template <class V>
Eff<V, One> nothing() {
    return Eff<V, One>::from_node(Node<V, One>::operation(Shape::nothing));
}

template <class V, class E>
Eff<V, Const<E>> raise(E e) {
    return Eff<V, Const<E>>::from_node(Node<V, Const<E>>::operation(Shape::raise, std::move(e)));
}

// Each call draws a fresh label.
template <class V>
Eff<V, ND> choose(Eff<V, ND> left, Eff<V, ND> right, std::shared_ptr<const Annotation> annotation = nullptr) {
    return Eff<V, ND>::from_node(
        Node<V, ND>::choice(ChoiceLabel::fresh(std::move(annotation)), std::move(left), std::move(right)));
}

// The failure a partial operation produces in signature S.
template <class V, class S>
Eff<V, S> signature_failure(const char* what) {
    if constexpr (S::has(Shape::fail))
        return Eff<V, S>::from_node(Node<V, S>::operation(Shape::fail));
    else if constexpr (S::has(Shape::nothing))
        return Eff<V, S>::from_node(Node<V, S>::operation(Shape::nothing));
    else if constexpr (S::has(Shape::raise) && std::is_constructible_v<typename S::payload_type, const char*>)
        return Eff<V, S>::from_node(Node<V, S>::operation(Shape::raise, typename S::payload_type(what)));
    else
        throw effect_error(std::string(what) + " in a signature without failure");
}

namespace detail {

template <class V, class S>
Node<V, S> resolve(Eff<V, S>&& e) {
    return std::move(e).take();
}

template <class W, class V, class S>
Node<W, S> retag(const Node<V, S>& n) {
    return Node<W, S>::operation(n.shape(), n.payload());
}

template <class R, class V, class S, class F>
R bind_shared(Eff<V, S> e, std::shared_ptr<const F> f) {
    using W = typename R::value_type;
    return R::deferred([e = std::move(e), f = std::move(f)]() -> Node<W, S> {
        const Node<V, S>& n = e.node();
        if (n.is_pure())
            return resolve((*f)(n.value()));
        if (n.shape() == Shape::choice)
            return Node<W, S>::choice(n.label(), bind_shared<R>(n.child(0), f), bind_shared<R>(n.child(1), f));
        return retag<W>(n);
    });
}

} // namespace detail

// Lazy: nothing is forced until the result is. Choices of e are pulled up
// with their labels unchanged.
template <class V, class S, class F>
auto bind(Eff<V, S> e, F&& f) {
    using Fn = std::decay_t<F>;
    using R = std::remove_cvref_t<std::invoke_result_t<const Fn&, const V&>>;
    static_assert(is_eff_v<R>, "continuation must return an Eff");
    static_assert(std::is_same_v<typename R::signature, S>, "continuation changes the signature");
    return detail::bind_shared<R>(std::move(e), std::make_shared<const Fn>(std::forward<F>(f)));
}

template <class V, class S, class G>
auto lift1(G g, Eff<V, S> e) {
    return bind(std::move(e), [g = std::move(g)](const V& v) { return pure<S>(g(v)); });
}

template <class A, class B, class S, class G>
auto lift2(G g, Eff<A, S> ea, Eff<B, S> eb) {
    return bind(std::move(ea), [g = std::move(g), eb = std::move(eb)](const A& a) {
        return bind(eb, [g, a](const B& b) { return pure<S>(g(a, b)); });
    });
}

// Memoized suspension of a computation producing a tree; the producer runs
// at most once, on first demand.
template <class P>
auto delay(P producer) {
    using R = std::remove_cvref_t<std::invoke_result_t<P&>>;
    return R::deferred([p = std::move(producer)]() mutable { return detail::resolve(p()); });
}

// Handles are memo cells already; share makes reuse explicit at call sites.
template <class V, class S>
Eff<V, S> share(Eff<V, S> e) {
    return e;
}

} // namespace lazynd

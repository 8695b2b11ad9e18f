#pragma once

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "eff.hpp"

namespace lazynd {

template <class T>
struct Show;

template <class T>
concept Showable = requires(const T& v) {
    { Show<T>::show(v) } -> std::convertible_to<std::string>;
};

template <Showable T>
std::string show(const T& v) {
    return Show<T>::show(v);
}

template <>
struct Show<bool> {
    static std::string show(bool b) { return b ? "True" : "False"; }
};

template <>
struct Show<char> {
    static std::string show(char c) { return std::string("'") + c + "'"; }
};

template <class T>
    requires std::is_integral_v<T>
struct Show<T> {
    static std::string show(T v) { return std::to_string(v); }
};

template <>
struct Show<double> {
    static std::string show(double v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", v);
        return buf;
    }
};

template <>
struct Show<std::string> {
    static std::string show(const std::string& s) { return "\"" + s + "\""; }
};

template <Showable T>
struct Show<std::vector<T>> {
    static std::string show(const std::vector<T>& xs) {
        if constexpr (std::is_same_v<T, char>) {
            return "\"" + std::string(xs.begin(), xs.end()) + "\"";
        } else {
            std::string out = "[";
            for (std::size_t i = 0; i < xs.size(); ++i) {
                if (i)
                    out += ",";
                out += Show<T>::show(xs[i]);
            }
            return out + "]";
        }
    }
};

template <Showable A, Showable B>
struct Show<std::pair<A, B>> {
    static std::string show(const std::pair<A, B>& p) {
        return "(" + Show<A>::show(p.first) + "," + Show<B>::show(p.second) + ")";
    }
};

template <Showable T>
struct Show<std::optional<T>> {
    static std::string show(const std::optional<T>& o) { return o ? "Just " + Show<T>::show(*o) : "Nothing"; }
};

// Shows an operand only if it is already a pure value; never forces.
template <class V, class S>
std::optional<std::string> describe_if_evaluated(const Eff<V, S>& e) {
    if constexpr (Showable<V>) {
        if (e.is_evaluated() && e.node().is_pure())
            return show(e.node().value());
    }
    return std::nullopt;
}

} // namespace lazynd

#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <variant>

namespace lazynd {

// Operation shapes of the supported signatures. Pure leaves are not shapes.
enum class Shape : std::uint8_t { nothing, raise, fail, choice };

constexpr std::size_t arity(Shape s) { return s == Shape::choice ? 2 : 0; }

constexpr std::string_view shape_name(Shape s) {
    switch (s) {
    case Shape::nothing: return "Nothing";
    case Shape::raise: return "Error";
    case Shape::fail: return "Fail";
    case Shape::choice: return "Choice";
    }
    return "?";
}

// no operations: trees are single pure leaves
struct Zero {
    using payload_type = std::monostate;
    static constexpr std::string_view name = "Zero";
    static constexpr bool has(Shape) { return false; }
};

// partiality (Maybe)
struct One {
    using payload_type = std::monostate;
    static constexpr std::string_view name = "One";
    static constexpr bool has(Shape s) { return s == Shape::nothing; }
};

// exceptions carrying an E
template <class E>
struct Const {
    using payload_type = E;
    static constexpr std::string_view name = "Const";
    static constexpr bool has(Shape s) { return s == Shape::raise; }
};

// non-determinism
struct ND {
    using payload_type = std::monostate;
    static constexpr std::string_view name = "ND";
    static constexpr bool has(Shape s) { return s == Shape::fail || s == Shape::choice; }
};

template <class S>
concept Signature = requires {
    typename S::payload_type;
    { S::has(Shape::fail) } -> std::same_as<bool>;
};

template <class S>
inline constexpr bool has_failure_v = S::has(Shape::fail) || S::has(Shape::nothing) || S::has(Shape::raise);

} // namespace lazynd

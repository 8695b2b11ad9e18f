#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lazynd {

struct SearchStats {
    std::uint64_t choice_expansions = 0;
    std::uint64_t consistent_follows = 0;
    std::uint64_t failures = 0;
    std::uint64_t leaves = 0;

    SearchStats& operator+=(const SearchStats& o) {
        choice_expansions += o.choice_expansions;
        consistent_follows += o.consistent_follows;
        failures += o.failures;
        leaves += o.leaves;
        return *this;
    }
    friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

class depth_cap_exceeded : public std::runtime_error {
public:
    explicit depth_cap_exceeded(std::size_t cap, SearchStats partial = {})
        : std::runtime_error("depth cap of " + std::to_string(cap) + " forced nodes exceeded"),
          cap_(cap), stats_(partial) {}

    std::size_t cap() const { return cap_; }
    const SearchStats& stats() const { return stats_; }

private:
    std::size_t cap_;
    SearchStats stats_;
};

// a suspension demanded its own value while being evaluated
class cyclic_suspension : public std::logic_error {
public:
    cyclic_suspension() : std::logic_error("suspension forced while under evaluation") {}
};

// partial operation on a signature without a failure shape, empty handles, ...
class effect_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class validation_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace lazynd

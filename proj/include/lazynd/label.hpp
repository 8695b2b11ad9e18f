#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>

namespace lazynd {

// Operand descriptions are looked up when displayed; an absent one means the
// operand had not been evaluated at that point.
struct Annotation {
    std::function<std::optional<std::string>()> left;
    std::function<std::optional<std::string>()> right;
};

inline std::uint64_t next_label_id() {
    static std::atomic<std::uint64_t> counter{0};
    return counter.fetch_add(1, std::memory_order_relaxed) + 1;
}

class ChoiceLabel {
public:
    ChoiceLabel() = default;

    static ChoiceLabel fresh(std::shared_ptr<const Annotation> annotation = nullptr) {
        ChoiceLabel l;
        l.id_ = next_label_id();
        l.annotation_ = std::move(annotation);
        return l;
    }

    std::uint64_t id() const { return id_; }
    const Annotation* annotation() const { return annotation_.get(); }

    friend bool operator==(const ChoiceLabel& a, const ChoiceLabel& b) { return a.id_ == b.id_; }

private:
    std::uint64_t id_ = 0;
    std::shared_ptr<const Annotation> annotation_;
};

} // namespace lazynd

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace lazynd {

inline constexpr std::size_t default_depth_cap = 1'000'000;

// Bound on nested forcing (native stack depth), independent of the search cap.
inline constexpr std::size_t max_nested_forces = 10'000;

namespace detail {

struct ForceState {
    std::size_t depth = 0;
    std::size_t limit = max_nested_forces;
    std::size_t reported_cap = default_depth_cap;
};

inline ForceState& force_state() {
    thread_local ForceState state;
    return state;
}

// Releases cells without unbounded destructor recursion: past max_nesting the
// release is queued and finished by the outermost drop.
struct Reclaimer {
    static constexpr std::size_t max_nesting = 512;

    static std::vector<std::shared_ptr<void>>& pending() {
        thread_local std::vector<std::shared_ptr<void>> q;
        return q;
    }

    static void drop(std::shared_ptr<void>&& p) {
        if (!p)
            return;
        if (p.use_count() > 1) {
            p.reset();
            return;
        }
        thread_local std::size_t nesting = 0;
        thread_local bool queued = false;
        if (nesting >= max_nesting) {
            pending().push_back(std::move(p));
            queued = true;
            return;
        }
        ++nesting;
        p.reset();
        --nesting;
        if (nesting == 0 && queued) {
            auto& q = pending();
            ++nesting;
            while (!q.empty()) {
                std::shared_ptr<void> next = std::move(q.back());
                q.pop_back();
                next.reset();
            }
            --nesting;
            queued = false;
        }
    }
};

} // namespace detail

// Call-by-need cell: the producer runs at most once, later forces reuse the value.
template <class T>
class Suspension {
    struct Cell {
        std::optional<T> value;
        bool forcing = false;
        virtual ~Cell() = default;
        virtual T produce() { throw effect_error("suspension without producer"); }
        virtual void release() {}
    };

    template <class F>
    struct Deferred final : Cell {
        std::optional<F> fn;
        explicit Deferred(F f) : fn(std::move(f)) {}
        T produce() override { return (*fn)(); }
        void release() override { fn.reset(); }
    };

public:
    Suspension() = default;
    Suspension(const Suspension&) = default;
    Suspension(Suspension&&) noexcept = default;
    Suspension& operator=(Suspension o) noexcept {
        cell_.swap(o.cell_);
        return *this;
    }
    ~Suspension() {
        if (cell_)
            detail::Reclaimer::drop(std::move(cell_));
    }

    static Suspension evaluated(T value) {
        Suspension s;
        s.cell_ = std::make_shared<Cell>();
        s.cell_->value.emplace(std::move(value));
        return s;
    }

    template <class F>
    static Suspension deferred(F producer) {
        Suspension s;
        s.cell_ = std::make_shared<Deferred<F>>(std::move(producer));
        return s;
    }

    bool empty() const { return !cell_; }
    bool is_evaluated() const { return cell_ && cell_->value.has_value(); }
    bool unique() const { return cell_.use_count() == 1; }
    bool same_cell(const Suspension& o) const { return cell_ == o.cell_; }

    const T& force() const {
        if (!cell_)
            throw effect_error("forcing an empty suspension");
        if (cell_->value)
            return *cell_->value;
        std::shared_ptr<Cell> keep = cell_;
        Cell& c = *keep;
        if (c.forcing)
            throw cyclic_suspension();

        auto& st = detail::force_state();
        if (st.depth >= st.limit)
            throw depth_cap_exceeded(st.reported_cap);

        struct Guard {
            Cell& c;
            detail::ForceState& st;
            ~Guard() {
                c.forcing = false;
                --st.depth;
            }
        } guard{c, st};
        c.forcing = true;
        ++st.depth;

        T v = c.produce();
        c.value.emplace(std::move(v));
        c.release();
        return *c.value;
    }

    // Forces, then moves the value out when nobody else can observe this cell.
    T take() && {
        const T& v = force();
        if (unique()) {
            T out = std::move(*cell_->value);
            detail::Reclaimer::drop(std::move(cell_));
            return out;
        }
        T out = v;
        detail::Reclaimer::drop(std::move(cell_));
        return out;
    }

private:
    std::shared_ptr<Cell> cell_;
};

} // namespace lazynd

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "display.hpp"
#include "search.hpp"

namespace lazynd {

// Reduced decision tree: choices already decided on the current path are not
// shown again, only the branch the search would take.
struct DecisionTree {
    enum class Kind { value, failure, choice };

    Kind kind = Kind::value;
    std::string text;
    std::uint64_t label = 0; // renumbered in order of first appearance
    bool annotated = false;
    std::optional<std::string> left_operand;
    std::optional<std::string> right_operand;
    std::vector<DecisionTree> children;

    friend bool operator==(const DecisionTree&, const DecisionTree&) = default;
};

namespace detail {

template <class V, class S, class Render>
struct TreeBuilder {
    Render& render;
    std::size_t budget;
    std::unordered_map<std::uint64_t, Side> decided;
    std::unordered_map<std::uint64_t, std::uint64_t> numbering;
    std::size_t visited = 0;

    DecisionTree build(const Eff<V, S>& e) {
        if (++visited > budget)
            throw depth_cap_exceeded(budget);
        const Node<V, S>& n = e.node();
        DecisionTree t;
        if (n.is_pure()) {
            t.kind = DecisionTree::Kind::value;
            t.text = render(n.value());
            return t;
        }
        if (n.shape() != Shape::choice) {
            t.kind = DecisionTree::Kind::failure;
            t.text = n.shape() == Shape::fail ? "failed" : std::string(shape_name(n.shape()));
            if constexpr (requires { show(n.payload()); })
                if (n.shape() == Shape::raise)
                    t.text += " " + show(n.payload());
            return t;
        }
        std::uint64_t id = n.label().id();
        if (auto it = decided.find(id); it != decided.end())
            return build(n.child(it->second == Side::left ? 0 : 1));

        t.kind = DecisionTree::Kind::choice;
        t.label = numbering.emplace(id, numbering.size() + 1).first->second;
        if (const Annotation* a = n.label().annotation()) {
            t.annotated = true;
            if (a->left)
                t.left_operand = a->left();
            if (a->right)
                t.right_operand = a->right();
        }
        for (Side side : {Side::left, Side::right}) {
            decided.emplace(id, side);
            t.children.push_back(build(n.child(side == Side::left ? 0 : 1)));
            decided.erase(id);
        }
        return t;
    }
};

inline void render_lines(const DecisionTree& t, const std::string& prefix, const std::string& child_prefix,
                         std::string& out) {
    out += prefix;
    switch (t.kind) {
    case DecisionTree::Kind::value:
    case DecisionTree::Kind::failure: out += t.text; break;
    case DecisionTree::Kind::choice:
        out += "?" + std::to_string(t.label);
        if (t.annotated)
            out += " " + t.left_operand.value_or("?") + " <= " + t.right_operand.value_or("?");
        break;
    }
    out += "\n";
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        bool last = i + 1 == t.children.size();
        render_lines(t.children[i], child_prefix + (last ? "`- " : "+- "), child_prefix + (last ? "   " : "|  "), out);
    }
}

} // namespace detail

// Operands are shown as they were when the choice was reached; "?" marks an
// operand nobody had evaluated yet.
template <class V, class S, class Render>
DecisionTree build_decision_tree(const Eff<V, S>& e, Render render, std::size_t node_budget = 100'000) {
    detail::TreeBuilder<V, S, Render> b{render, node_budget, {}, {}};
    return b.build(e);
}

template <class V, class S>
DecisionTree build_decision_tree(const Eff<V, S>& e) {
    return build_decision_tree(e, [](const V& v) { return show(v); });
}

inline std::string render_text(const DecisionTree& t) {
    std::string out;
    detail::render_lines(t, "", "", out);
    return out;
}

template <class V, class S>
std::string render_decision_tree(const Eff<V, S>& e) {
    return render_text(build_decision_tree(e));
}

} // namespace lazynd

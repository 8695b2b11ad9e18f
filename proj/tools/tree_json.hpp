#pragma once

#include <json.hpp>

#include "lazynd/decision_tree.hpp"

namespace lazynd {

inline nlohmann::json to_json(const DecisionTree& t) {
    using nlohmann::json;
    json j;
    switch (t.kind) {
    case DecisionTree::Kind::value:
        j["kind"] = "value";
        j["value"] = t.text;
        break;
    case DecisionTree::Kind::failure:
        j["kind"] = "failure";
        j["value"] = t.text;
        break;
    case DecisionTree::Kind::choice:
        j["kind"] = "choice";
        j["label"] = t.label;
        if (t.annotated) {
            j["annotation"] = {{"left", t.left_operand ? json(*t.left_operand) : json(nullptr)},
                               {"right", t.right_operand ? json(*t.right_operand) : json(nullptr)}};
        } else {
            j["annotation"] = nullptr;
        }
        j["left"] = to_json(t.children.at(0));
        j["right"] = to_json(t.children.at(1));
        break;
    }
    return j;
}

inline DecisionTree tree_from_json(const nlohmann::json& j) {
    DecisionTree t;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "value" || kind == "failure") {
        t.kind = kind == "value" ? DecisionTree::Kind::value : DecisionTree::Kind::failure;
        t.text = j.at("value").get<std::string>();
        return t;
    }
    if (kind != "choice")
        throw std::invalid_argument("unknown tree node kind: " + kind);
    t.kind = DecisionTree::Kind::choice;
    t.label = j.at("label").get<std::uint64_t>();
    const auto& a = j.at("annotation");
    if (!a.is_null()) {
        t.annotated = true;
        if (!a.at("left").is_null())
            t.left_operand = a.at("left").get<std::string>();
        if (!a.at("right").is_null())
            t.right_operand = a.at("right").get<std::string>();
    }
    t.children.push_back(tree_from_json(j.at("left")));
    t.children.push_back(tree_from_json(j.at("right")));
    return t;
}

} // namespace lazynd

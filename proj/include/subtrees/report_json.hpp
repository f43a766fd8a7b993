#pragma once

#include <json.hpp>

#include "subtrees/count.hpp"
#include "subtrees/counting.hpp"
#include "subtrees/families.hpp"
#include "subtrees/invariants.hpp"
#include "subtrees/io.hpp"
#include "subtrees/transforms.hpp"
#include "subtrees/verify.hpp"

// JSON views of the library's records. Every count is written as a decimal
// string so no consumer ever rounds it through a double. Key order is fixed
// (ordered_json), which keeps output byte-stable.

namespace subtrees::json {

using Json = nlohmann::ordered_json;

inline Json count_report(const CountReport& r) {
  Json f = Json::object();
  Json fstar = Json::object();
  for (std::size_t v = 0; v < r.f.size(); ++v) f[std::to_string(v)] = to_decimal(r.f[v]);
  for (std::size_t v = 0; v < r.fstar.size(); ++v) fstar[std::to_string(v)] = to_decimal(r.fstar[v]);
  return Json{{"n", r.n},
              {"F", to_decimal(r.F)},
              {"Fstar", to_decimal(r.Fstar)},
              {"W", to_decimal(r.wiener)},
              {"f", std::move(f)},
              {"fstar", std::move(fstar)}};
}

inline Json profile(const InvariantProfile& p) {
  return Json{{"matching", p.matching},     {"domination", p.domination},
              {"diameter", p.diameter},     {"leafCount", p.leaf_count},
              {"maxDegree", p.max_degree},  {"centers", p.centers},
              {"hasPerfectMatching", p.has_perfect_matching}};
}

inline Json transform_report(const Tree& before, const TransformResult& result, TreeFormat format) {
  return Json{{"kind", std::string(to_string(result.kind))},
              {"tree", serialize_tree(result.tree, format)},
              {"label_map", result.label_map},
              {"F_before", to_decimal(count_subtrees(before))},
              {"F_after", to_decimal(count_subtrees(result.tree))},
              {"Fstar_before", to_decimal(count_leaf_subtrees(before))},
              {"Fstar_after", to_decimal(count_leaf_subtrees(result.tree))}};
}

inline Json closed_form(const ClosedForm& c) {
  return Json{{"family", std::string(to_string(c.family))},
              {"which", std::string(to_string(c.which))},
              {"value", to_decimal(c.value)},
              {"formula_id", c.formula_id}};
}

inline Json verification_result(const VerificationResult& r) {
  Json extremizers = Json::array();
  for (const auto& form : r.extremizers) extremizers.push_back(form.to_string());
  auto optional_count = [](const std::optional<Count>& c) { return c ? Json(to_decimal(*c)) : Json(nullptr); };
  return Json{{"theorem", r.theorem},
              {"n", r.n},
              {"params", r.params},
              {"quantity", r.quantity},
              {"direction", r.direction},
              {"claimed", optional_count(r.claimed)},
              {"achieved", optional_count(r.achieved)},
              {"class_size", r.class_size},
              {"extremizers", std::move(extremizers)},
              {"expected", r.expected ? Json(r.expected->to_string()) : Json(nullptr)},
              {"uniqueness_asserted", r.uniqueness_asserted},
              {"pass", r.pass},
              {"counterexample", r.counterexample ? Json(serialize_tree(*r.counterexample)) : Json(nullptr)},
              {"note", r.note}};
}

inline Json verification_report(const std::vector<VerificationResult>& results) {
  Json out = Json::array();
  for (const auto& r : results) out.push_back(verification_result(r));
  return out;
}

}  // namespace subtrees::json

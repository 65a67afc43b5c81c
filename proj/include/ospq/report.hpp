// JSON serialization of verification reports.  One document shape covers
// every command; the schema ships at schemas/verify-report.schema.json.
// Reports are deterministic up to the elapsed_ms field: instance lists are
// key-sorted and nlohmann::json orders object members lexicographically.

#pragma once

#include <string>

#include <json.hpp>

#include "ospq/matrix_realization.hpp"
#include "ospq/presentations.hpp"
#include "ospq/verify.hpp"

namespace ospq {

using nlohmann::json;

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[v & 0xF];
    v >>= 4;
  }
  return s;
}

inline json suite_report_json(const SuiteReport& rep) {
  json instances = json::array();
  std::size_t proved = 0, refuted = 0, inconclusive = 0;
  for (const auto& iv : rep.instances) {
    json j{{"key", iv.key},
           {"status", verdict_name(iv.verdict.status)},
           {"reduction_steps", iv.verdict.reduction_steps}};
    if (iv.verdict.status == VerdictStatus::Refuted) j["witness"] = iv.verdict.witness;
    if (iv.verdict.status == VerdictStatus::Inconclusive) j["bound_used"] = iv.verdict.bound_used;
    instances.push_back(std::move(j));
    switch (iv.verdict.status) {
      case VerdictStatus::Proved: ++proved; break;
      case VerdictStatus::Refuted: ++refuted; break;
      case VerdictStatus::Inconclusive: ++inconclusive; break;
    }
  }
  return json{{"name", rep.suite},
              {"signature", {{"m", rep.sig.m}, {"n", rep.sig.n}}},
              {"degree_bound", rep.degree_bound},
              {"rule_count", rep.rule_count},
              {"completion_closed", rep.completion_closed},
              {"presentation_fingerprint", hex64(rep.presentation_fingerprint)},
              {"q_mode", rep.q_mode},
              {"instances", instances},
              {"counts",
               {{"proved", proved},
                {"refuted", refuted},
                {"inconclusive", inconclusive},
                {"total", rep.instances.size()}}}};
}

inline json classical_report_json(const ClassicalReport& rep) {
  json instances = json::array();
  std::size_t proved = 0, refuted = 0;
  for (const auto& r : rep.instances) {
    json j{{"key", r.key},
           {"status", r.proved ? "proved" : "refuted"},
           {"reduction_steps", 0}};
    if (!r.proved) j["witness"] = "lhs: " + r.lhs + " ; rhs: " + r.rhs;
    instances.push_back(std::move(j));
    if (r.proved) ++proved; else ++refuted;
  }
  return json{{"name", "classical-" + rep.family},
              {"signature", {{"m", rep.sig.m}, {"n", rep.sig.n}}},
              {"degree_bound", 0},
              {"rule_count", 0},
              {"completion_closed", true},
              {"q_mode", "matrix"},
              {"instances", instances},
              {"counts",
               {{"proved", proved},
                {"refuted", refuted},
                {"inconclusive", 0},
                {"total", rep.instances.size()}}}};
}

inline json cartan_json(const CartanMatrix& cm) {
  json rows = json::array();
  for (int i = 1; i <= cm.N; ++i) {
    json row = json::array();
    for (int j = 1; j <= cm.N; ++j) row.push_back(cm.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Exit codes: 0 all proved, 1 any refuted, 2 inconclusive but none refuted.
inline int exit_code_for(std::size_t refuted, std::size_t inconclusive) {
  if (refuted > 0) return 1;
  if (inconclusive > 0) return 2;
  return 0;
}

}  // namespace ospq

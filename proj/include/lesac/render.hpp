#pragma once

#include <string>

#include "lesac/pipeline.hpp"

namespace lesac {

std::string render_validation_text(const ValidationReport& rep);
std::string render_validation_json(const ValidationReport& rep);

std::string render_conclusions_text(const Analysis& an, const std::vector<Extension>& exts, Stance stance);
std::string render_conclusions_json(const Analysis& an, const std::vector<Extension>& exts, Stance stance);

std::string render_explanation_text(const Analysis& an, const Explanation& ex);
std::string render_explanation_json(const Analysis& an, const Explanation& ex);

std::string render_graph_text(const Analysis& an);
std::string render_graph_json(const Analysis& an);

struct CheckSummary {
  std::vector<PostulateReport> postulates;  // one per complete extension
  std::vector<OrderingViolation> ordering;
  bool ok() const;
};

std::string render_check_text(const CheckSummary& c);
std::string render_check_json(const CheckSummary& c);

}  // namespace lesac

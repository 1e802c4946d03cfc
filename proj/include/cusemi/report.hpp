#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cusemi/audit.hpp"
#include "cusemi/model.hpp"

namespace cusemi {

enum class ReportFormat { Json, Markdown, Dot };

std::optional<ReportFormat> parse_format(const std::string& name);

/// One run's worth of results: audit sections plus ordered key/value facts.
/// Serialization is deterministic; identical content emits identical bytes.
struct Report {
  std::string title;
  Window window;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<AuditReport> sections;
  /// Carrier whose window order a dot emission draws. Not serialized.
  ModelPtr dot_subject;

  /// 0 when every section passed (expected failures count as matched),
  /// 1 when any failed, 2 when the only blemishes are exhausted bounds.
  int exit_code() const;
};

std::string emit(const Report& r, ReportFormat f);
std::string emit_json(const Report& r);
std::string emit_markdown(const Report& r);
/// Hasse diagram (cover relation) of the canonical window order at the bound.
std::string emit_dot(const ModelPtr& m, int bound);

/// Inverse of emit_json up to the dot subject: re-emitting the parse gives the
/// original bytes. Throws std::invalid_argument on malformed documents.
Report report_from_json(const std::string& text);

}  // namespace cusemi

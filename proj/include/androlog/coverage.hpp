/*
 * Copyright (C) 2026 The androlog authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "androlog/instrumenter.hpp"
#include "androlog/ir.hpp"
#include "androlog/parser.hpp"

namespace androlog {

// Per-granularity totals of instrumentable elements: the coverage
// denominator. element_ids are exactly the payloads the instrumenter would
// generate under the same configuration.
struct AppSummary {
  std::string app;
  InstrumentationConfig config;
  std::map<ProbeKind, std::set<std::string>> element_ids;
  std::map<ProbeKind, int> skipped;  // uninstrumentable elements per kind

  int total(ProbeKind kind) const;

  bool operator==(const AppSummary&) const = default;
};

struct SummaryResult {
  std::optional<AppSummary> summary;
  std::vector<std::string> errors;

  bool ok() const { return summary.has_value(); }
};

// Builds the summary from the ORIGINAL (non-instrumented) app, applying the
// same filters and eligibility rules as instrumentation. An app that already
// carries a log checker is rejected.
SummaryResult summarize_app(const App& app, const InstrumentationConfig& cfg);

// One deduplicated runtime log observation.
struct ProbeEvent {
  ProbeKind kind = ProbeKind::Method;
  std::string payload;
  int first_seen_line = 0;

  bool operator==(const ProbeEvent&) const = default;
};

// A line that carried the identifier. `kind` is empty when the payload does
// not start with a known kind key; such lines surface as unparsed material.
struct LogRecord {
  std::optional<ProbeKind> kind;
  std::string payload;
};

// Total function over arbitrary text: accepts the bare `<identifier>: <payload>`
// form and logcat-prefixed forms (any prefix ending with the identifier
// token, optional "( pid)" decoration, then ": "). Returns nullopt for lines
// not carrying the identifier.
std::optional<LogRecord> parse_log_line(const std::string& line,
                                        const std::string& identifier);

struct LogScan {
  std::vector<ProbeEvent> events;     // in first-appearance order, undeduped
  std::vector<std::string> unparsed;  // identifier hits with unusable payloads
  int identifier_hits = 0;
};

// Folds a log stream; `line_counter` carries 1-based line numbers across
// multiple files.
LogScan scan_log_stream(std::istream& in, const std::string& identifier,
                        int& line_counter);
void merge_scans(LogScan& into, const LogScan& from);

// Unique by payload, keeping the earliest first_seen_line.
std::vector<ProbeEvent> dedup_events(const std::vector<ProbeEvent>& events);

struct KindCoverage {
  int covered = 0;
  int total = 0;
  double percentage = 0.0;  // covered/total*100, half-up, 2 decimals
  std::vector<std::string> uncovered;  // sorted
  std::vector<std::string> unknown;    // sorted, deduped

  bool operator==(const KindCoverage&) const = default;
};

struct CoverageReport {
  std::string app;
  std::string identifier;
  std::map<ProbeKind, KindCoverage> kinds;
  std::map<ProbeKind, int> skipped;
  std::vector<std::string> unparsed;

  bool operator==(const CoverageReport&) const = default;
};

// covered/total*100 rounded half-up to two decimals; 0.00 when total == 0;
// never reports 100.00 unless covered == total.
double coverage_percentage(int covered, int total);

// covered(kind) = |events(kind) ∩ element_ids(kind)|; events outside
// element_ids go to the kind's unknown list.
CoverageReport compute_coverage(const AppSummary& summary,
                                const std::vector<ProbeEvent>& events,
                                const std::vector<std::string>& unparsed = {});

enum class ReportFormat { Text, Machine };

std::string render_report(const CoverageReport& report, ReportFormat format,
                          bool show_uncovered = false);

// Machine round-trips and the persisted summary file.
std::string report_to_json(const CoverageReport& report);
std::optional<CoverageReport> report_from_json(const std::string& text,
                                               std::string* error = nullptr);
std::string summary_to_json(const AppSummary& summary);
std::optional<AppSummary> summary_from_json(const std::string& text,
                                            std::string* error = nullptr);
std::string instrumentation_report_to_json(const InstrumentationReport& report,
                                           const std::string& app);

}  // namespace androlog

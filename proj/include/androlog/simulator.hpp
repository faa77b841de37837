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

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "androlog/coverage.hpp"
#include "androlog/instrumenter.hpp"
#include "androlog/parser.hpp"

namespace androlog {

// A declared execution over original statements: the stand-in for running
// the instrumented app on a device.
struct ExecutionPath {
  struct Step {
    std::string method_id;
    int statement_index = 0;

    bool operator==(const Step&) const = default;
  };
  std::vector<Step> steps;

  bool operator==(const ExecutionPath&) const = default;
};

// Fixture format: one `methodId<TAB>index` per line, `#` comments.
std::optional<ExecutionPath> load_path(const std::filesystem::path& file,
                                       std::string* error = nullptr);
std::optional<ExecutionPath> parse_path(std::string_view text,
                                        std::string* error = nullptr);
std::string path_to_text(const ExecutionPath& path);

// In-memory model of the injected checker's runtime behaviour: an atomic
// test-and-insert on the message set, emitting a record only on first
// insertion. Safe under concurrent callers.
class DedupLog {
 public:
  struct Record {
    std::string message;
    std::string tag;
  };

  // Returns true when the message was newly inserted (and recorded).
  bool log(const std::string& message, const std::string& tag);
  std::vector<Record> records() const;

 private:
  mutable std::mutex mu_;
  std::unordered_set<std::string> seen_;
  std::vector<Record> records_;
};

struct SimulationResult {
  std::string log_text;
  std::vector<std::string> errors;

  bool ok() const { return errors.empty(); }
};

// Emits exactly the log stream a device would produce for `path` under
// checker dedup semantics: each step fires the statement probe of its index,
// and the first step into a method fires the probes planted at its entry.
// Probe placement is read back from the instrumented bodies, not assumed.
SimulationResult simulate_trace(const App& instrumented,
                                const ExecutionPath& path,
                                const std::string& identifier);

struct OracleResult {
  std::optional<CoverageReport> report;
  std::vector<std::string> errors;

  bool ok() const { return report.has_value(); }
};

// Reference coverage computed directly from path-derived sets and the app
// summary, without logs. Independent of the log-processing path.
OracleResult oracle_coverage(const App& original,
                             const InstrumentationConfig& cfg,
                             const ExecutionPath& path);

}  // namespace androlog

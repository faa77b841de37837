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
#include <optional>
#include <string>
#include <vector>

#include "androlog/coverage.hpp"
#include "androlog/instrumenter.hpp"

namespace androlog {

// Exit codes shared by both subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;

// External command templates with {in}/{out} placeholders. Disassembly and
// reassembly are required only when the input is an APK rather than a smali
// tree; align/sign run on the assembled APK when configured.
struct ToolHooks {
  std::optional<std::string> disassemble_cmd;
  std::optional<std::string> assemble_cmd;
  std::optional<std::string> align_cmd;
  std::optional<std::string> sign_cmd;

  bool any() const;
};

inline constexpr const char* kHooksEnvVar = "ANDROLOG_HOOKS";
inline constexpr const char* kHooksDefaultFile = "androlog-hooks.conf";

// key=command-template lines, '#' comments.
std::optional<ToolHooks> load_hooks_file(const std::string& path,
                                         std::string* error);
// Resolution order: explicit path, then $ANDROLOG_HOOKS, then
// ./androlog-hooks.conf when present, else no hooks.
std::optional<ToolHooks> resolve_hooks(
    const std::optional<std::string>& explicit_path, std::string* error);

struct InstrumentOptions {
  std::string input;  // smali tree directory, or APK file with hooks
  std::string output_dir;
  InstrumentationConfig config;
  std::optional<std::string> hooks_path;
};

// Output layout under --output:
//   smali/                     instrumented tree
//   app-summary.json           persisted summary for later coverage runs
//   instrumentation-report.json
//   app-instrumented.apk / app-aligned.apk / app-signed.apk  (per hooks)
int run_instrument(const InstrumentOptions& opts, std::ostream& out,
                   std::ostream& err);

struct CoverageOptions {
  std::vector<std::string> log_files;
  std::optional<std::string> summary_file;
  std::optional<std::string> app_path;  // original app, re-summarized
  InstrumentationConfig config;         // used with app_path
  std::optional<std::string> identifier_override;
  ReportFormat format = ReportFormat::Text;
  bool show_uncovered = false;
};

// Prints the report to `out`. Coverage level is data, not failure: exit 0
// even at 0%. Zero identifier hits warn on `err`.
int run_coverage(const CoverageOptions& opts, std::ostream& out,
                 std::ostream& err);

}  // namespace androlog

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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "androlog/ir.hpp"
#include "androlog/parser.hpp"

namespace androlog {

inline constexpr const char* kDefaultIdentifier = "ANDROLOG";
inline constexpr const char* kLogCheckerDescriptorBase =
    "Lcom/androlog/LogChecker";

enum class Granularity { Classes, Methods, Statements, Components };

struct InstrumentationConfig {
  std::string identifier = kDefaultIdentifier;
  std::set<Granularity> granularities;
  std::vector<std::string> library_prefixes;
  bool exclude_libraries = false;

  bool has(Granularity g) const { return granularities.count(g) != 0; }
  // Probe kinds this configuration measures.
  std::vector<ProbeKind> enabled_kinds() const;
  // Non-empty identifier with no whitespace, ':' or newline, and at least
  // one granularity selected. Returns an error message when invalid.
  std::optional<std::string> validate() const;

  static std::vector<std::string> default_library_prefixes();
};

bool is_library_class(const std::string& descriptor,
                      const InstrumentationConfig& cfg);

enum class ComponentKind { Activity, Service, BroadcastReceiver, ContentProvider };

ProbeKind probe_kind_for(ComponentKind kind);

// Framework/library base classes that make a subclass an Android component.
using ComponentBaseMap = std::map<std::string, ComponentKind>;
const ComponentBaseMap& default_component_bases();

// Framework entry points probed per component kind (matched by name).
const std::vector<std::string>& lifecycle_methods(ComponentKind kind);

struct ComponentDetection {
  std::optional<ComponentKind> kind;
  std::optional<std::string> error;  // set on a cyclic superclass chain
};

// Walks the superclass chain through app classes until a base-map hit or an
// unknown external superclass.
ComponentDetection detect_component_kind(const SmaliClass& cls, const App& app,
                                         const ComponentBaseMap& bases);

struct SkipRecord {
  std::string class_descriptor;
  std::string method;  // empty for class-level skips
  std::string reason;

  bool operator==(const SkipRecord&) const = default;
};

struct InstrumentationReport {
  std::map<ProbeKind, int> probes_inserted;
  std::vector<SkipRecord> skipped;
  std::string logchecker_descriptor;

  int inserted(ProbeKind kind) const;
};

struct MethodEligibility {
  bool eligible = false;
  std::string reason;      // set when ineligible
  int old_locals = 0;      // locals before the probe register is added
  int probe_register = 0;  // == old_locals when eligible
};

// Whether a probe register can be carved out of this method: it needs a
// body, the fresh register must stay within const-string's operand width,
// and every raw v-reference that the +1 shift touches must still fit its
// instruction's encoding.
MethodEligibility probe_eligibility(const SmaliMethod& method);

struct AllocationResult {
  SmaliMethod method;  // untouched when ineligible
  MethodEligibility eligibility;
};

// Adds one local register for probe string constants. Raw v-references to
// parameter registers shift by one; p-aliases are untouched.
AllocationResult allocate_probe_registers(const SmaliMethod& method);

// The injected class: a synchronized message set plus
//   log(Ljava/lang/String;Ljava/lang/String;)V  - test-and-insert message,
//       log once with the given tag on first insertion
//   log(Ljava/lang/String;)V                    - same, tag = `identifier`
// Probe call sites use the one-argument form so a single register suffices.
SmaliClass synthesize_logchecker(const std::string& identifier,
                                 const std::string& descriptor);

// Descriptor of a log-checker class injected by a previous run, if any.
// Matches on the descriptor pattern plus both log methods, so an app's own
// unrelated class that merely reuses the name does not count.
std::optional<std::string> find_logchecker(const App& app);

// First free descriptor for the checker: the default, then numeric suffixes.
std::string choose_logchecker_descriptor(const App& app);

// Inserts the two probe instructions (string-constant load into
// `probe_register`, then the static log invocation) at body item index
// `position`. Throws std::out_of_range when position is past the body.
void insert_probe(SmaliMethod& method, size_t position, const Probe& probe,
                  const std::string& identifier, int probe_register,
                  const std::string& checker_descriptor);

// Per-class instrumentation driver. Phases may be applied in any subset;
// probe registers are allocated once per touched method.
class ClassInstrumenter {
 public:
  ClassInstrumenter(const SmaliClass& cls, const InstrumentationConfig& cfg,
                    std::string checker_descriptor);

  void add_class_probes(InstrumentationReport& report);
  void add_method_probes(InstrumentationReport& report);
  void add_statement_probes(InstrumentationReport& report);
  void add_component_probes(ComponentKind kind, InstrumentationReport& report);

  SmaliClass finish();

 private:
  struct MethodPlan;
  MethodPlan* plan_for(size_t method_idx, InstrumentationReport& report,
                       ProbeKind kind_for_skip);
  bool payload_ok(const std::string& payload) const;

  SmaliClass cls_;
  const InstrumentationConfig& cfg_;
  std::string checker_;
  std::vector<MethodPlan> plans_;
};

// Single-phase conveniences mirroring the instrumentation phases; used by
// tests and by instrument_app.
SmaliClass instrument_class_probes(const SmaliClass& cls,
                                   const InstrumentationConfig& cfg,
                                   const std::string& checker_descriptor,
                                   InstrumentationReport& report);
SmaliClass instrument_method_probes(const SmaliClass& cls,
                                    const InstrumentationConfig& cfg,
                                    const std::string& checker_descriptor,
                                    InstrumentationReport& report);
SmaliClass instrument_statement_probes(const SmaliClass& cls,
                                       const InstrumentationConfig& cfg,
                                       const std::string& checker_descriptor,
                                       InstrumentationReport& report);
SmaliClass instrument_component_probes(const SmaliClass& cls,
                                       ComponentKind kind,
                                       const InstrumentationConfig& cfg,
                                       const std::string& checker_descriptor,
                                       InstrumentationReport& report);

struct InstrumentResult {
  std::optional<App> app;
  InstrumentationReport report;
  std::vector<std::string> errors;

  bool ok() const { return app.has_value(); }
};

// Applies the library filter, runs the enabled phases over every class and
// injects the synthesized log-checker. Refuses to touch an app that already
// carries a checker from a previous run.
InstrumentResult instrument_app(const App& app,
                                const InstrumentationConfig& cfg);

struct VerifierIssue {
  std::string class_descriptor;
  std::string method;
  std::string message;
};

// Post-instrumentation structural checks: move-result* adjacency, probe
// instruction operand widths, frame-size consistency, and that no original
// instruction touches the probe register.
std::vector<VerifierIssue> verify_app(const App& app,
                                      const std::string& checker_descriptor);

// One probe call site found in a method body.
struct ProbeSite {
  size_t const_pos = 0;  // body index of the const-string
  std::string payload;   // unescaped value
  int reg = 0;
};

// Probe pairs of a method, in body order: a const-string immediately
// followed by a static invocation of `checker_descriptor`'s log taking the
// same register.
std::vector<ProbeSite> scan_probes(const SmaliMethod& method,
                                   const std::string& checker_descriptor);

}  // namespace androlog

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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "androlog/ir.hpp"

namespace androlog {

enum class Severity { Warning, Error };

struct ParseDiagnostic {
  std::string file;
  int line = 0;  // 1-based
  std::string message;
  Severity severity = Severity::Error;

  std::string to_string() const;
};

bool has_errors(const std::vector<ParseDiagnostic>& diagnostics);

struct ClassParseResult {
  std::optional<SmaliClass> cls;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return cls.has_value(); }
};

// Parses one smali class file. Recognizes the directive subset emitted by
// mainstream disassemblers; unrecognized lines inside known scopes are
// preserved opaquely with a warning. Any error diagnostic aborts production
// of the class.
ClassParseResult parse_class(std::string_view source,
                             std::string_view filename = "<memory>");

// Prints a class back to smali source. Output reparses to a structurally
// equal class: single-line items are emitted whitespace-normalized, opaque
// blocks byte-identical. UTF-8, LF line endings.
std::string print_class(const SmaliClass& cls);

struct App {
  // Keyed by class descriptor; iteration order is deterministic.
  std::map<std::string, SmaliClass> classes;

  const SmaliClass* find_class(const std::string& descriptor) const;
  const SmaliMethod* find_method(const std::string& method_id) const;
};

struct AppLoadResult {
  std::optional<App> app;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return app.has_value(); }
};

// Loads every *.smali file under `root` (arbitrary nesting). Files are
// parsed in lexicographic path order; duplicate descriptors and file-level
// parse errors abort with diagnostics listing every failing file.
AppLoadResult load_app(const std::filesystem::path& root);

// Writes each class to `root`/<relative_path>, creating directories.
// Returns an error message on I/O failure.
std::optional<std::string> write_app(const App& app,
                                     const std::filesystem::path& root);

}  // namespace androlog

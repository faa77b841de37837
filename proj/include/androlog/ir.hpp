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

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace androlog {

// Granularities a probe can measure. The four component kinds map 1:1 onto
// the four Android component base types.
enum class ProbeKind {
  Class,
  Method,
  Statement,
  Activity,
  Service,
  Receiver,
  Provider,
};

inline constexpr std::array<ProbeKind, 7> kAllProbeKinds = {
    ProbeKind::Class,    ProbeKind::Method,  ProbeKind::Statement,
    ProbeKind::Activity, ProbeKind::Service, ProbeKind::Receiver,
    ProbeKind::Provider,
};

// Payload key, e.g. "METHOD" for ProbeKind::Method, "BROADCASTRECEIVER" for
// ProbeKind::Receiver.
const char* kind_key(ProbeKind kind);
std::optional<ProbeKind> kind_from_key(std::string_view key);

enum class BodyItemKind {
  Instruction,
  Label,
  Directive,
  Comment,
};

// One line (or one opaque multi-line block) of a method body. Multi-line
// directive blocks (.annotation, .packed-switch, ...) keep their original
// text byte-identical; single-line items are whitespace-normalized.
struct BodyItem {
  BodyItemKind kind = BodyItemKind::Instruction;
  std::string text;
  // Statement index, assigned only to instructions: consecutive integers
  // starting at 0 over the instructions of a body, in body order.
  std::optional<int> index;

  bool operator==(const BodyItem&) const = default;
};

enum class RegistersSpecKind {
  Registers,  // .registers N: total frame size
  Locals,     // .locals N: non-parameter register count
};

struct RegistersSpec {
  RegistersSpecKind kind = RegistersSpecKind::Locals;
  int count = 0;

  bool operator==(const RegistersSpec&) const = default;
};

struct SmaliMethod {
  std::string name;        // e.g. "foo", "<init>"
  std::string descriptor;  // e.g. "(ILjava/lang/String;)V"
  std::vector<std::string> access_flags;
  std::optional<RegistersSpec> registers_spec;
  std::vector<BodyItem> body;
  bool is_abstract_or_native = false;

  bool is_static() const;
  bool is_constructor() const;  // <init> or <clinit>
  int instruction_count() const;
  std::string signature() const { return name + descriptor; }

  bool operator==(const SmaliMethod&) const = default;
};

struct SmaliClass {
  std::string descriptor;  // e.g. "Lcom/example/MyClass;"
  std::vector<std::string> access_flags;
  std::string super_descriptor;
  std::vector<std::string> interfaces;
  std::optional<std::string> source_file;  // raw token, quotes included
  // Opaque preserved blocks: class-level annotations, and fields together
  // with any other unrecognized class-level lines, in source order.
  std::vector<std::string> annotations_raw;
  std::vector<std::string> fields_raw;
  std::vector<SmaliMethod> methods;
  // Where the class lives inside its tree, e.g. "com/example/MyClass.smali".
  std::string relative_path;

  const SmaliMethod* find_method(std::string_view name,
                                 std::string_view descriptor) const;

  bool operator==(const SmaliClass&) const = default;
};

// One injected log call site.
struct Probe {
  ProbeKind kind = ProbeKind::Method;
  std::string payload;  // begins with "<KINDKEY>="
  std::string class_descriptor;
  std::string method_id;
  int position = 0;  // body item index the probe pair is anchored at
};

// `<classDescriptor>-><name><methodDescriptor>`; injective over an app
// because the descriptor distinguishes overloads.
std::string canonical_method_id(const SmaliClass& cls,
                                const SmaliMethod& method);
std::string canonical_method_id(const std::string& class_descriptor,
                                const SmaliMethod& method);

// `STATEMENT=<method_id>|<instr_text>|<index>`. `|` and newline inside
// instr_text are escaped (as "|" and "\n") so the payload always splits
// into exactly three fields.
std::string statement_payload(const std::string& method_id,
                              const std::string& instr_text, int index);

// Registers consumed by the parameters of a method (wide types take two),
// including the implicit `this` for non-static methods.
int param_register_count(std::string_view method_descriptor, bool is_static);

// `L` (identifier `/`)* identifier `;`
bool is_class_descriptor(std::string_view descriptor);

// "La/b/C;" -> "a/b/C.smali"
std::string descriptor_to_relative_path(std::string_view descriptor);

}  // namespace androlog

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

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace androlog {

// First whitespace-separated token of an instruction line.
std::string_view mnemonic_of(std::string_view instr_text);

// Unconditional leavers of the current position: return*, throw, goto*.
bool is_terminator(std::string_view mnemonic);

// Instructions whose result is consumed by a following move-result*:
// invoke-* and filled-new-array*.
bool is_invoke_like(std::string_view mnemonic);

bool is_move_result(std::string_view mnemonic);

// One register operand occurrence inside an instruction's text.
struct RegisterRef {
  size_t pos = 0;  // offset of 'v'/'p' in the text
  size_t len = 0;  // token length, e.g. 2 for "v0"
  char bank = 'v';
  int index = 0;
};

// Scans the operand part of an instruction for register tokens. The
// mnemonic is skipped, string/char literals are skipped, and a token only
// counts when delimited on both sides (so "div2", "La/b/v2/C;" and string
// contents never match).
std::vector<RegisterRef> scan_register_refs(std::string_view instr_text);

// Rewrites register operands through `remap` (return the new index, or
// nullopt to keep). Everything outside the rewritten tokens is preserved
// byte-for-byte.
std::string rewrite_registers(
    std::string_view instr_text,
    const std::function<std::optional<int>(char bank, int index)>& remap);

// Largest register index the encoding of `mnemonic` can address, as a
// conservative lower bound: unknown mnemonics are assumed to take 4-bit
// operands. Used to decide whether a +1 remap would still assemble.
int max_register_index_for(std::string_view mnemonic);

// smali string-literal escaping (the value -> what goes between quotes).
std::string escape_smali_string(std::string_view value);
std::optional<std::string> unescape_smali_string(std::string_view quoted_body);

// Value of the string literal of a const-string instruction, unescaped.
std::optional<std::string> extract_string_literal(std::string_view instr_text);

}  // namespace androlog

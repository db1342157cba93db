// Copyright 2026 The sdcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdcodes/linalg.hpp"

namespace sdcodes {

/// Text form of a generator matrix:
///
///   p n k
///   k lines of n residues separated by single spaces
///   # key: value            (optional, after the matrix)
struct CodeFile {
  Matrix generator;
  std::vector<std::pair<std::string, std::string>> metadata;

  std::optional<std::string> get(const std::string& key) const;
  void set(const std::string& key, const std::string& value);

  friend bool operator==(const CodeFile& a, const CodeFile& b) {
    return a.generator == b.generator && a.metadata == b.metadata;
  }
};

/// Throws ParseError on malformed input.
CodeFile parse_code_file(std::istream& in);
CodeFile parse_code_file(const std::string& text);
CodeFile read_code_file(const std::string& path);

void write_code_file(std::ostream& out, const CodeFile& file);
std::string format_code_file(const CodeFile& file);
void save_code_file(const std::string& path, const CodeFile& file);

}  // namespace sdcodes

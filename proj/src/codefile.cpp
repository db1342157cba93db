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

#include "sdcodes/codefile.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "sdcodes/errors.hpp"

namespace sdcodes {

namespace {

std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_number(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line) + ": '" + std::string(tok) + "' is not a non-negative integer");
  return v;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::optional<std::string> CodeFile::get(const std::string& key) const {
  for (const auto& [k, v] : metadata)
    if (k == key) return v;
  return std::nullopt;
}

void CodeFile::set(const std::string& key, const std::string& value) {
  for (auto& [k, v] : metadata)
    if (k == key) {
      v = value;
      return;
    }
  metadata.emplace_back(key, value);
}

CodeFile parse_code_file(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };

  if (!next()) throw ParseError("empty code file");
  const auto head = split_spaces(line);
  if (head.size() != 3) throw ParseError("line 1: expected 'p n k'");
  const std::uint64_t p = parse_number(head[0], 1), n = parse_number(head[1], 1), k = parse_number(head[2], 1);
  if (p > 0xFFFFFFFFULL || !is_prime(p)) throw ParseError("line 1: p = " + std::to_string(p) + " is not a prime");
  if (n == 0 || k == 0 || k > n) throw ParseError("line 1: need 0 < k <= n");
  const PrimeField field = [&] {
    try {
      return PrimeField(static_cast<std::uint32_t>(p));
    } catch (const InvalidField& e) {
      throw ParseError(std::string("line 1: ") + e.what());
    }
  }();

  std::vector<Residue> entries;
  entries.reserve(n * k);
  for (std::uint64_t r = 0; r < k; ++r) {
    if (!next()) throw ParseError("expected " + std::to_string(k) + " matrix rows, found " + std::to_string(r));
    const auto toks = split_spaces(line);
    if (toks.size() != n)
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(n) + " entries, found " +
                       std::to_string(toks.size()));
    for (auto t : toks) {
      const std::uint64_t v = parse_number(t, lineno);
      if (v >= p) throw ParseError("line " + std::to_string(lineno) + ": entry " + std::to_string(v) + " >= p");
      entries.push_back(static_cast<Residue>(v));
    }
  }

  CodeFile out{Matrix(field, k, n, std::move(entries)), {}};
  while (next()) {
    if (trim(line).empty()) continue;
    if (line[0] != '#') throw ParseError("line " + std::to_string(lineno) + ": trailing data after the matrix");
    const std::string body = trim(std::string_view(line).substr(1));
    const auto colon = body.find(':');
    if (colon == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": metadata needs 'key: value'");
    out.metadata.emplace_back(trim(std::string_view(body).substr(0, colon)),
                              trim(std::string_view(body).substr(colon + 1)));
  }
  return out;
}

CodeFile parse_code_file(const std::string& text) {
  std::istringstream in(text);
  return parse_code_file(in);
}

CodeFile read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_code_file(in);
}

void write_code_file(std::ostream& out, const CodeFile& file) {
  const Matrix& g = file.generator;
  out << g.field().p() << ' ' << g.cols() << ' ' << g.rows() << '\n';
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      if (c) out << ' ';
      out << g(r, c);
    }
    out << '\n';
  }
  for (const auto& [k, v] : file.metadata) out << "# " << k << ": " << v << '\n';
}

std::string format_code_file(const CodeFile& file) {
  std::ostringstream out;
  write_code_file(out, file);
  return out.str();
}

void save_code_file(const std::string& path, const CodeFile& file) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write " + path);
  write_code_file(out, file);
}

}  // namespace sdcodes

// Copyright 2026 The qecv Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qecv/error.hpp"
#include "qecv/hoare.hpp"

namespace qecv {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      if (pos < text.size()) out.emplace_back(text.substr(pos));
      break;
    }
    out.emplace_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return out;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Sigma parse_sigma(const std::string &val, int line) {
  Sigma out;
  std::stringstream ss(val);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw SyntaxError("expected 'svar=pauli'", line, 1);
    out[trim(item.substr(0, eq))] = parse_pauli(trim(item.substr(eq + 1)));
  }
  return out;
}

}  // namespace

Triple parse_triple(std::string_view text, const std::string &base_dir) {
  Triple t;
  bool have_pre = false, have_post = false, have_program = false;
  std::map<int, std::string> decoders;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    const std::string line = trim(lines[i]);
    if (line.empty() || line.rfind("//", 0) == 0) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw SyntaxError("expected 'key: value'", lineno, 1);
    const std::string key = trim(line.substr(0, colon));
    const std::string val = trim(line.substr(colon + 1));
    try {
      if (key == "name") {
        t.name = val;
      } else if (key == "tag") {
        t.tag = val;
      } else if (key == "pre") {
        t.pre = parse_assertion(val);
        have_pre = true;
      } else if (key == "post") {
        t.post = parse_assertion(val);
        have_post = true;
      } else if (key == "sigma") {
        t.sigma = parse_sigma(val, lineno);
      } else if (key.rfind("invariant", 0) == 0) {
        const std::string label = trim(key.substr(9));
        if (label.empty()) throw SyntaxError("invariant needs a loop label", lineno, 1);
        t.invariants[label] = parse_assertion(val);
      } else if (key.rfind("decoder", 0) == 0) {
        decoders[std::stoi(trim(key.substr(7)))] = val;
      } else if (key == "program") {
        if (!val.empty()) {
          std::filesystem::path p(val);
          if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
          t.program = parse_program(read_file(p.string()));
        } else {
          std::string block;
          std::size_t indent = std::string::npos;
          while (i + 1 < lines.size()) {
            const auto &next = lines[i + 1];
            const bool blank = trim(next).empty();
            if (!blank && next[0] != ' ' && next[0] != '\t') break;
            ++i;
            if (!blank) {
              indent = std::min(indent, next.find_first_not_of(" \t"));
            }
            block += next + "\n";
          }
          std::string dedented;
          for (const auto &l : split_lines(block)) {
            dedented += (indent != std::string::npos && l.size() >= indent ? l.substr(indent) : trim(l));
            dedented += "\n";
          }
          t.program = parse_program(dedented);
        }
        have_program = true;
      } else {
        throw SyntaxError("unknown key '" + key + "'", lineno, 1);
      }
    } catch (const std::invalid_argument &) {
      throw SyntaxError("bad value for '" + key + "'", lineno, 1);
    }
  }
  if (!have_pre || !have_post || !have_program) {
    throw SyntaxError("triple needs pre, post and program", static_cast<int>(lines.size()), 1);
  }
  for (const auto &[site, name] : decoders) t.program.decoder_bindings[site] = name;
  if (t.name.empty()) t.name = t.program.name;
  return t;
}

Triple load_triple(const std::string &path) {
  const auto dir = std::filesystem::path(path).parent_path();
  return parse_triple(read_file(path), dir.empty() ? "." : dir.string());
}

std::string print_triple(const Triple &t) {
  std::ostringstream os;
  os << "name: " << t.name << "\n";
  if (!t.tag.empty()) os << "tag: " << t.tag << "\n";
  os << "pre: " << to_string(t.pre) << "\n";
  os << "post: " << to_string(t.post) << "\n";
  if (!t.sigma.empty()) {
    os << "sigma: ";
    bool first = true;
    for (const auto &[k, v] : t.sigma) {
      if (!first) os << ", ";
      first = false;
      os << k << "=" << to_string(v);
    }
    os << "\n";
  }
  for (const auto &[label, inv] : t.invariants) {
    os << "invariant " << label << ": " << to_string(inv) << "\n";
  }
  os << "program:\n";
  for (const auto &l : split_lines(print_program(t.program))) os << "  " << l << "\n";
  return os.str();
}

}  // namespace qecv

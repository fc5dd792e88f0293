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

#include <json.hpp>

#include "qecv/corpus.hpp"
#include "qecv/error.hpp"

namespace qecv {

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path &p, const std::string &text) {
  std::ofstream out(p);
  if (!out) throw InputError("cannot write '" + p.string() + "'");
  out << text;
}

nlohmann::ordered_json manifest_json(const std::vector<CaseStudy> &cases) {
  nlohmann::ordered_json doc;
  doc["cases"] = nlohmann::ordered_json::array();
  for (const auto &c : cases) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["family"] = c.family;
    j["program"] = c.name + ".qecv";
    j["qubits"] = c.program.n_qubits;
    j["oracle_eligible"] = c.oracle_eligible;
    j["triples"] = nlohmann::ordered_json::array();
    for (const auto &t : c.triples) {
      j["triples"].push_back({{"name", t.name}, {"tag", t.tag}, {"file", t.name + ".qtrip"}});
    }
    j["decoders"] = nlohmann::ordered_json::array();
    for (const auto &[name, unit] : c.registry) j["decoders"].push_back("decoders/" + name + ".qecv");
    j["flags"] = c.flags;
    doc["cases"].push_back(j);
  }
  return doc;
}

}  // namespace

std::string corpus_manifest(const std::vector<CaseStudy> &cases) {
  return manifest_json(cases).dump(2) + "\n";
}

std::vector<std::string> emit_corpus(const std::vector<CaseStudy> &cases, const std::string &dir) {
  const fs::path root(dir);
  fs::create_directories(root);
  std::vector<std::string> paths;
  auto emit = [&](const fs::path &p, const std::string &text) {
    write_file(p, text);
    paths.push_back(p.string());
  };
  for (const auto &c : cases) {
    emit(root / (c.name + ".qecv"), print_program(c.program));
    for (const auto &t : c.triples) {
      std::string text = print_triple(t);
      // Point at the shared program file instead of inlining it.
      text = text.substr(0, text.find("program:\n")) + "program: " + c.name + ".qecv\n";
      emit(root / (t.name + ".qtrip"), text);
    }
    if (!c.registry.empty()) fs::create_directories(root / "decoders");
    for (const auto &[name, unit] : c.registry) {
      emit(root / "decoders" / (name + ".qecv"), print_program(unit));
    }
  }
  emit(root / "manifest.json", corpus_manifest(cases));
  return paths;
}

}  // namespace qecv

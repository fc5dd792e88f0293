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
#include <set>

#include <gtest/gtest.h>

#include "qecv/corpus.hpp"
#include "qecv/error.hpp"

namespace qecv {
namespace {

using Status = VerificationOutcome::Status;

Status verify_in(const CaseStudy &c, const Triple &t) {
  VerifyConfig cfg;
  cfg.registry = c.registry;
  return verify_triple(t, cfg).status;
}

TEST(Corpus, GoldenSuiteCoversEveryTag) {
  std::set<std::string> tags;
  int triples = 0;
  for (const auto &c : golden_suite()) {
    for (const auto &t : c.triples) {
      tags.insert(t.tag);
      ++triples;
    }
  }
  for (const char *want :
       {"repetition/init", "repetition/logical_x", "repetition/logical_z", "repetition/cnot",
        "repetition/noisy_x", "repetition/noisyfail", "surface/init_plus", "surface/logical_z",
        "surface/vertical_move", "surface/logical_h", "surface/noisy_z", "surface/noisyfail",
        "surface/init_zero", "surface/logical_x", "surface/braiding", "lemma/implication",
        "lemma/boolean", "lemma/worked_example"}) {
    EXPECT_TRUE(tags.count(want)) << want;
  }
  EXPECT_GE(triples, 20);
}

TEST(Corpus, RepetitionAndLemmaTriplesVerify) {
  for (const auto &c : golden_suite()) {
    if (c.family == "surface") continue;
    for (const auto &t : c.triples) EXPECT_EQ(verify_in(c, t), Status::Verified) << t.name;
  }
}

TEST(Corpus, SurfaceTriplesVerify) {
  for (const auto &c : gen_surface_suite()) {
    for (const auto &t : c.triples) EXPECT_EQ(verify_in(c, t), Status::Verified) << t.name;
  }
}

TEST(Corpus, FailureCasesDoNotGiveTheDesiredBehaviour) {
  for (const auto &c : golden_suite()) {
    for (const auto &t : c.triples) {
      if (t.tag.find("noisyfail") == std::string::npos) continue;
      // The desired behaviour flips the logical observable relative to the
      // stated one, which keeps or loses it.
      Triple desired = t;
      const auto lit = t.post.kind == Assertion::Kind::And ? t.post.children[0] : t.post;
      ASSERT_TRUE(lit.as_literal()) << t.name;
      auto children = t.post.kind == Assertion::Kind::And ? t.post.children
                                                          : std::vector<Assertion>{t.post};
      children[0] = Assertion::leaf(lit.as_literal()->negated());
      desired.post = Assertion::conj(children);
      EXPECT_NE(verify_in(c, desired), Status::Verified) << t.name;
    }
  }
}

TEST(Corpus, SurfaceLayoutsCommute) {
  for (const auto &c : gen_surface_suite()) {
    for (const auto &t : c.triples) {
      std::vector<SignedPauli> vals;
      for (const auto &[k, v] : t.sigma) vals.push_back(v);
      for (std::size_t i = 0; i < vals.size(); ++i) {
        for (std::size_t j = i + 1; j < vals.size(); ++j) {
          EXPECT_TRUE(commutes(vals[i], vals[j])) << t.name;
        }
      }
    }
  }
}

TEST(Corpus, LargerRepetitionCodes) {
  for (int d : {5, 7}) {
    for (const auto &c : gen_repetition_suite(d)) {
      for (const auto &t : c.triples) EXPECT_EQ(verify_in(c, t), Status::Verified) << t.name;
    }
  }
  EXPECT_THROW(gen_repetition_suite(4), InvalidDistance);
  EXPECT_THROW(gen_repetition_suite(1), InvalidDistance);
}

TEST(Corpus, LogicalXStatementCount) {
  for (int d : {3, 5, 7}) {
    for (const auto &c : gen_repetition_suite(d)) {
      if (c.name != "rep" + std::to_string(d) + ".logical_x") continue;
      EXPECT_EQ(program_stats(c.program).statement_count, 2 * (d - 1) + 1);
    }
  }
}

TEST(Corpus, StatementRatio) {
  for (int d : {3, 5, 7}) {
    const int stabs = d - 1;
    const int qecv = program_stats(qecv_syndrome_round(d)).statement_count;
    const int gates = program_stats(gate_level_syndrome_round(d)).statement_count;
    EXPECT_EQ(qecv, stabs);
    EXPECT_GE(gates / stabs, 8 * (qecv / stabs));
  }
}

TEST(Corpus, EmitAndReload) {
  const auto dir = std::filesystem::temp_directory_path() / "qecv_corpus_test";
  std::filesystem::remove_all(dir);
  auto cases = gen_repetition_suite(3);
  for (auto &c : gen_lemma_suite()) cases.push_back(std::move(c));
  const auto paths = emit_corpus(cases, dir.string());
  EXPECT_TRUE(std::filesystem::exists(dir / "manifest.json"));
  EXPECT_TRUE(std::filesystem::exists(dir / "decoders" / "rep3_lookup.qecv"));
  int reloaded = 0;
  for (const auto &c : cases) {
    for (const auto &t : c.triples) {
      const auto back = load_triple((dir / (t.name + ".qtrip")).string());
      EXPECT_TRUE(program_equal(back.program, c.program)) << t.name;
      EXPECT_EQ(verify_in(c, back), Status::Verified) << t.name;
      ++reloaded;
    }
  }
  EXPECT_GT(reloaded, 10);
  std::filesystem::remove_all(dir);
}

TEST(Corpus, ManifestListsFlagsAndEligibility) {
  const auto m = corpus_manifest(golden_suite());
  EXPECT_NE(m.find("\"oracle_eligible\": true"), std::string::npos);
  EXPECT_NE(m.find("surface.braiding"), std::string::npos);
  EXPECT_NE(m.find("braid_move12"), std::string::npos);
  for (const auto &c : gen_surface_suite()) {
    if (c.name == "surface.braiding" || c.name == "surface.init_zero" ||
        c.name == "surface.vertical_move") {
      EXPECT_FALSE(c.flags.empty()) << c.name;
    }
  }
}

}  // namespace
}  // namespace qecv

// Copyright 2026 The tsforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>

#include "tsforge/augment.hpp"
#include "tsforge/dual_ce.hpp"
#include "tsforge/errors.hpp"
#include "tsforge/ngram_lm.hpp"
#include "tsforge/rng.hpp"
#include "tsforge/span_sampler.hpp"

using namespace tsforge;
namespace fs = std::filesystem;

namespace {

// Scripted scorer/LM for boundary tests.
class FixedScorer final : public QualityScorer {
 public:
  explicit FixedScorer(double value) : value_(value) {}
  double score(const TokenSeq&, const TokenSeq&) const override { return value_; }

 private:
  double value_;
};

class ThrowingScorer final : public QualityScorer {
 public:
  double score(const TokenSeq&, const TokenSeq&) const override {
    throw DataError("scripted scorer failure");
  }
};

// mean_nll keyed on the first token, default 1.0.
class KeyedLM final : public LanguageModel {
 public:
  KeyedLM(std::string key, double keyed, double fallback)
      : key_(std::move(key)), keyed_(keyed), fallback_(fallback) {}
  double mean_nll(const TokenSeq& s) const override {
    return (!s.empty() && s[0] == key_) ? keyed_ : fallback_;
  }

 private:
  std::string key_;
  double keyed_;
  double fallback_;
};

Triplet revenue_triplet() {
  return Triplet{tokenize("die Einnahmen des Systems"),
                 tokenize("All revenue of the system"),
                 tokenize("All revenues from the system")};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("tsforge_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int& counter() {
    static int c = 0;
    return c;
  }
  std::string file(const std::string& name, const std::string& content) const {
    const fs::path p = path / name;
    std::ofstream out(p);
    out << content;
    return p.string();
  }
  std::string sub(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// A small deterministic pipeline setup over in-test corpora.
PipelineConfig toy_config(const TempDir& dir) {
  PipelineConfig cfg;
  cfg.golden_input = dir.file("golden.tsv",
                              "der Umsatz des Systems\tthe revenue of the system\n"
                              "kurz\tshort\n"
                              "die Katze schläft gern\tthe cat likes to sleep\n");
  cfg.pseudo_input = dir.file("pseudo.tsv",
                              "all revenue of the system\tder ganze Umsatz des Systems\n"
                              "系统 的 收入\tEinnahmen des Systems\n");
  cfg.triplet_input = dir.file("triplets.tsv",
                               "die Einnahmen des Systems\tAll revenue of the system\t"
                               "All revenues from the system\n");
  cfg.alignment_input = dir.file("triplets.align", "0-0 1-1 2-2 3-3 4-4\n");
  cfg.output = dir.sub("examples.tsv");
  cfg.stats_output = dir.sub("stats.txt");
  cfg.bounds = LengthBounds{2, 60};
  cfg.lid_lang = LangTag::en;
  cfg.seed = 42;

  auto lm = std::make_shared<NgramLM>(2, 0.1);
  lm->add_sentence(tokenize("All revenues from the system are collected"));
  lm->add_sentence(tokenize("revenues from the system"));
  lm->add_sentence(tokenize("the system works"));
  cfg.lm = lm;
  cfg.scorer = std::make_shared<FixedScorer>(1.0);  // always under beta1
  return cfg;
}

}  // namespace

TEST_CASE("candidate construction splices the reference phrase") {
  const Triplet t = revenue_triplet();
  const PhrasePair pair{Span{1, 2}, Span{1, 2}};  // "revenue of" <-> "revenues from"
  const Candidate c = build_candidate(t, pair);
  CHECK(c.corrected == tokenize("All revenues from the system"));
  CHECK(c.corrected.size() == t.mt.size() - pair.y_span.len + pair.r_span.len);

  // Identical phrase content: splice is a no-op.
  const PhrasePair same{Span{3, 2}, Span{3, 2}};  // "the system" both sides
  CHECK(build_candidate(t, same).corrected == t.mt);

  // Deletion: empty reference span removes the MT span.
  const PhrasePair deletion{Span{1, 1}, Span{1, 0}};
  CHECK(build_candidate(t, deletion).corrected == tokenize("All of the system"));

  CHECK_THROWS_AS(build_candidate(t, PhrasePair{Span{4, 3}, Span{0, 1}}), DataError);
}

TEST_CASE("splice length arithmetic under fuzz") {
  Rng rng(8);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t mt_len = rng.between(1, 12);
    const std::size_t ref_len = rng.between(1, 12);
    std::vector<std::string> mt_toks, ref_toks;
    for (std::size_t k = 0; k < mt_len; ++k) mt_toks.push_back("m" + std::to_string(k));
    for (std::size_t k = 0; k < ref_len; ++k) ref_toks.push_back("r" + std::to_string(k));
    const Triplet t{tokenize("s"), TokenSeq(mt_toks), TokenSeq(ref_toks)};
    const std::size_t yl = rng.between(1, mt_len);
    const std::size_t rl = rng.between(1, ref_len);
    const PhrasePair pair{Span{rng.below(mt_len - yl + 1), yl},
                          Span{rng.below(ref_len - rl + 1), rl}};
    CHECK(build_candidate(t, pair).corrected.size() == mt_len - yl + rl);
  }
}

TEST_CASE("acceptance thresholds use strict and inclusive boundaries") {
  const Triplet t = revenue_triplet();
  const PhrasePair pair{Span{1, 2}, Span{1, 2}};
  const Thresholds thresholds;  // beta1 = 2.5, beta2 = 0.05

  // Quality exactly beta1 -> reject ("smaller than").
  {
    Candidate c = build_candidate(t, pair);
    const FixedScorer scorer(2.5);
    const KeyedLM lm("All", 1.0, 1.0);
    CHECK_FALSE(accept_candidate(c, scorer, lm, thresholds));
    CHECK(c.quality == 2.5);
  }
  // Quality just under, reduction exactly beta2 -> accept ("at least").
  {
    Candidate c = build_candidate(t, pair);
    const FixedScorer scorer(2.4999999);
    struct GapLM final : LanguageModel {
      double mean_nll(const TokenSeq& s) const override {
        return s.contains("revenue") ? 1.05 : 1.0;  // mt has "revenue", corrected not
      }
    } gap;
    CHECK(accept_candidate(c, scorer, gap, thresholds));
    CHECK(c.nll_mt == 1.05);
    CHECK(c.nll_corrected == 1.0);
    CHECK(c.quality == 2.4999999);
  }
  // Reduction just under beta2 -> reject.
  {
    Candidate c = build_candidate(t, pair);
    const FixedScorer scorer(0.1);
    struct GapLM final : LanguageModel {
      double mean_nll(const TokenSeq& s) const override {
        return s.contains("revenue") ? 1.0499999 : 1.0;
      }
    } gap;
    CHECK_FALSE(accept_candidate(c, scorer, gap, thresholds));
  }
}

TEST_CASE("acceptance is monotone in the thresholds") {
  const Triplet t = revenue_triplet();
  const PhrasePair pair{Span{1, 2}, Span{1, 2}};
  Rng rng(13);
  for (int i = 0; i < 1000; ++i) {
    const double quality = static_cast<double>(rng.below(500)) / 100.0;   // 0..5
    const double reduction = static_cast<double>(rng.below(200)) / 1000.0 - 0.05;
    const FixedScorer scorer(quality);
    struct GapLM final : LanguageModel {
      explicit GapLM(double gap) : gap_(gap) {}
      double mean_nll(const TokenSeq& s) const override {
        return s.contains("revenue") ? 1.0 + gap_ : 1.0;
      }
      double gap_;
    } lm(reduction);

    const Thresholds base{2.5, 0.05};
    Candidate c1 = build_candidate(t, pair);
    const bool accepted = accept_candidate(c1, scorer, lm, base);

    // Raising beta1 or lowering beta2 must never flip accept -> reject.
    Thresholds looser = base;
    looser.beta1 += static_cast<double>(rng.below(300)) / 100.0;
    looser.beta2 -= static_cast<double>(rng.below(300)) / 1000.0;
    Candidate c2 = build_candidate(t, pair);
    const bool looser_accepted = accept_candidate(c2, scorer, lm, looser);
    if (accepted) CHECK(looser_accepted);
  }
}

TEST_CASE("aligned examples mask the MT side and label with the reference phrase") {
  const Triplet t = revenue_triplet();
  Candidate c = build_candidate(t, PhrasePair{Span{1, 2}, Span{1, 2}});
  const TSExample e = make_aligned_example(c, "<MASK_REP>");
  CHECK(e.source == t.source);
  CHECK(e.masked_target.tokens() ==
        std::vector<std::string>{"All", "<MASK_REP>", "the", "system"});
  CHECK(e.label == tokenize("revenues from"));
  CHECK(e.origin == Origin::aligned);

  // Dual round-trip: mask restores y; label splices to the corrected sentence.
  CHECK(splice_mask(e.masked_target, "<MASK_REP>", tokenize("revenue of")) == t.mt);
  CHECK(splice_mask(e.masked_target, "<MASK_REP>", e.label) == c.corrected);

  // Insertion candidate: mask sits between tokens.
  Candidate ins = build_candidate(t, PhrasePair{Span{2, 0}, Span{1, 2}});
  const TSExample ie = make_aligned_example(ins, "<MASK_REP>");
  CHECK(ie.masked_target.tokens() ==
        std::vector<std::string>{"All", "revenue", "<MASK_REP>", "of", "the", "system"});
  CHECK(ie.label == tokenize("revenues from"));

  // Deletion candidate needs the empty-label allowance.
  Candidate del = build_candidate(t, PhrasePair{Span{1, 1}, Span{1, 0}});
  CHECK_THROWS_AS(make_aligned_example(del, "<MASK_REP>"), DataError);
  const TSExample de = make_aligned_example(del, "<MASK_REP>", /*allow_empty_label=*/true);
  CHECK(de.label.empty());
  CHECK(de.masked_target.size() == t.mt.size());
}

TEST_CASE("committed decision with the real scorer and LM") {
  // Lexical tables and LM small enough to evaluate by hand.
  LexicalTable fwd;
  fwd.add("der", "the", 0.9);
  fwd.add("hund", "dog", 0.8);
  fwd.add("hund", "hound", 0.1);
  LexicalTable bwd;
  bwd.add("the", "der", 0.9);
  bwd.add("dog", "hund", 0.85);
  const DualCEScorer scorer(std::make_shared<LexicalCrossEntropy>(std::move(fwd)),
                            std::make_shared<LexicalCrossEntropy>(std::move(bwd)));

  NgramLM lm(2, 0.1);
  lm.add_sentence(tokenize("the hound"));
  lm.add_sentence(tokenize("the hound"));
  lm.add_sentence(tokenize("the dog"));

  const Triplet t{tokenize("der hund"), tokenize("the dog"), tokenize("the hound")};
  Candidate c = build_candidate(t, PhrasePair{Span{1, 1}, Span{1, 1}});
  CHECK(c.corrected == tokenize("the hound"));

  const bool accepted = accept_candidate(c, scorer, lm, Thresholds{2.5, 0.05});

  // Hand-evaluated oracles.
  //   quality: H_f = -(ln 0.5 + ln 0.1)/2 over P(the|src), P(hound|src)
  //            H_b = -(ln((0.9 + 1e-6)/2) + ln((0.1 + 1e-6)/2))/2
  const double h_f = -(std::log((0.9 + 0.1) / 2) + std::log((0.1 + 0.1) / 2)) / 2;
  const double h_b = -(std::log((0.9 + 1e-6) / 2) + std::log((0.1 + 1e-6) / 2)) / 2;
  CHECK(c.quality == doctest::Approx(DualCEScorer::combine(h_f, h_b)).epsilon(1e-12));
  //   counts: BOS->the:3 (C=3); the->hound:2, the->dog:1 (C=3); V=3
  const double p_the = (3 + 0.1) / (3 + 0.4);
  CHECK(c.nll_mt ==
        doctest::Approx(-(std::log(p_the) + std::log(1.1 / 3.4)) / 2).epsilon(1e-12));
  CHECK(c.nll_corrected ==
        doctest::Approx(-(std::log(p_the) + std::log(2.1 / 3.4)) / 2).epsilon(1e-12));

  // reduction = ln(2.1/1.1)/2 = 0.3232... >= 0.05 and quality ~2.1 < 2.5.
  CHECK(c.nll_mt - c.nll_corrected ==
        doctest::Approx(std::log(2.1 / 1.1) / 2).epsilon(1e-12));
  CHECK(accepted);  // frozen decision

  // Same candidate against a tighter beta1 flips the decision.
  Candidate c2 = build_candidate(t, PhrasePair{Span{1, 1}, Span{1, 1}});
  CHECK_FALSE(accept_candidate(c2, scorer, lm, Thresholds{2.0, 0.05}));
}

TEST_CASE("identity candidates cannot pass a positive beta2") {
  const Triplet t = revenue_triplet();
  Candidate c = build_candidate(t, PhrasePair{Span{3, 2}, Span{3, 2}});
  CHECK(c.corrected == t.mt);  // identity splice
  const FixedScorer scorer(0.0);
  NgramLM lm(2, 0.1);
  lm.add_sentence(t.mt);
  // nll(y) - nll(y) == 0 < beta2.
  CHECK_FALSE(accept_candidate(c, scorer, lm, Thresholds{2.5, 0.05}));
}

TEST_CASE("pipeline runs all routes deterministically") {
  const TempDir dir;
  PipelineConfig cfg = toy_config(dir);
  const PipelineStats stats = run_pipeline(cfg);

  // Golden route: 3 read, the 1-token pair length-filtered out.
  CHECK(stats.golden.read == 3);
  CHECK(stats.golden.length_kept == 2);
  CHECK(stats.golden.quality_kept == 2);  // no threshold -> passthrough
  CHECK(stats.golden.emitted == 2);

  // Pseudo route: 2 read, CJK source rejected by en LID.
  CHECK(stats.pseudo.read == 2);
  CHECK(stats.pseudo.length_kept == 2);
  CHECK(stats.pseudo.lid_kept == 1);
  CHECK(stats.pseudo.emitted == 1);

  // Aligned route: diagonal alignment yields the revenue/revenues pair.
  CHECK(stats.aligned.read == 1);
  CHECK(stats.aligned.phrases >= 1);
  CHECK(stats.aligned.accepted >= 1);
  CHECK(stats.aligned.emitted == stats.aligned.accepted);
  CHECK(stats.aligned.skipped == 0);

  // Monotone stage counts per route.
  CHECK(stats.golden.read >= stats.golden.length_kept);
  CHECK(stats.golden.length_kept >= stats.golden.quality_kept);
  CHECK(stats.golden.quality_kept >= stats.golden.emitted);
  CHECK(stats.pseudo.length_kept >= stats.pseudo.lid_kept);
  CHECK(stats.aligned.phrases >= stats.aligned.accepted);
  CHECK(stats.aligned.accepted >= stats.aligned.emitted);

  CHECK(stats.total_emitted() == 4);

  const std::string first_run = slurp(cfg.output);
  CHECK_FALSE(first_run.empty());

  // Identical bytes on a rerun and with more threads.
  PipelineConfig rerun = cfg;
  rerun.output = dir.sub("examples2.tsv");
  rerun.stats_output = dir.sub("stats2.txt");
  rerun.threads = 4;
  run_pipeline(rerun);
  CHECK(slurp(rerun.output) == first_run);
  CHECK(slurp(rerun.stats_output) == slurp(cfg.stats_output));

  // Emitted examples parse and validate; repeat factor multiplies sampling.
  const auto examples = read_example_file(cfg.output);
  REQUIRE(examples.size() == 4);
  for (const auto& e : examples) validate_example(e, cfg.mask_token);
  CHECK(examples[0].origin == Origin::golden);
  CHECK(examples[2].origin == Origin::pseudo);
  CHECK(examples[3].origin == Origin::aligned);
  // With beta2 > 0, no aligned example keeps the original MT tokens.
  CHECK(examples[3].label != tokenize("revenue of"));

  PipelineConfig repeated = cfg;
  repeated.output = dir.sub("examples3.tsv");
  repeated.stats_output.clear();
  repeated.repeat = 3;
  const PipelineStats rs = run_pipeline(repeated);
  CHECK(rs.golden.emitted == 6);
  CHECK(rs.pseudo.emitted == 3);
}

TEST_CASE("golden quality filter and its standalone scorer") {
  const TempDir dir;
  PipelineConfig cfg = toy_config(dir);
  cfg.pseudo_input.clear();
  cfg.triplet_input.clear();
  cfg.alignment_input.clear();
  cfg.stats_output.clear();
  cfg.quality_threshold = 0.5;  // FixedScorer(1.0) fails this
  const PipelineStats rejected = run_pipeline(cfg);
  CHECK(rejected.golden.length_kept == 2);
  CHECK(rejected.golden.quality_kept == 0);
  CHECK(rejected.golden.emitted == 0);

  // The corpus filter may use its own scorer instance, independent of the
  // candidate scorer.
  cfg.output = dir.sub("examples_corpus_scorer.tsv");
  cfg.corpus_scorer = std::make_shared<FixedScorer>(0.1);
  const PipelineStats kept = run_pipeline(cfg);
  CHECK(kept.golden.quality_kept == 2);
  CHECK(kept.golden.emitted == 2);
}

TEST_CASE("pipeline stats text formats") {
  const TempDir dir;
  PipelineConfig cfg = toy_config(dir);
  const PipelineStats stats = run_pipeline(cfg);
  const std::string kv = stats.key_values();
  CHECK(kv.find("golden.read=3") != std::string::npos);
  CHECK(kv.find("total.emitted=4") != std::string::npos);
  CHECK(slurp(cfg.stats_output).find("golden.read=3") != std::string::npos);
  CHECK(stats.table().find("golden") != std::string::npos);
}

TEST_CASE("pipeline validation failures") {
  const TempDir dir;
  PipelineConfig empty;
  empty.output = dir.sub("out.tsv");
  CHECK_THROWS_AS(run_pipeline(empty), ConfigError);  // no routes

  PipelineConfig cfg = toy_config(dir);
  cfg.alignment_input.clear();
  CHECK_THROWS_AS(run_pipeline(cfg), ConfigError);  // triplets without alignments

  cfg = toy_config(dir);
  cfg.scorer.reset();
  CHECK_THROWS_AS(run_pipeline(cfg), ConfigError);  // aligned route needs scorer

  cfg = toy_config(dir);
  cfg.golden_input = dir.sub("missing.tsv");
  CHECK_THROWS_AS(run_pipeline(cfg), ConfigError);  // input must exist

  cfg = toy_config(dir);
  cfg.repeat = 0;
  CHECK_THROWS_AS(run_pipeline(cfg), ConfigError);

  cfg = toy_config(dir);
  cfg.mask_token = "two words";
  CHECK_THROWS_AS(run_pipeline(cfg), ConfigError);

  // Existing output without force.
  cfg = toy_config(dir);
  run_pipeline(cfg);
  CHECK_THROWS_AS(run_pipeline(cfg), ConfigError);
  cfg.force = true;
  CHECK_NOTHROW(run_pipeline(cfg));
}

TEST_CASE("pipeline data failures") {
  const TempDir dir;

  // Row-count mismatch between triplets and alignments.
  PipelineConfig cfg = toy_config(dir);
  cfg.triplet_input = dir.file("extra.tsv",
                               "s\tm\tr\n"
                               "s2\tm2\tr2\n");
  CHECK_THROWS_AS(run_pipeline(cfg), DataError);

  // Malformed parallel row fails fast with the path in the message.
  cfg = toy_config(dir);
  cfg.golden_input = dir.file("bad.tsv", "only-one-column\n");
  cfg.force = true;
  CHECK_THROWS_WITH_AS(run_pipeline(cfg), doctest::Contains("bad.tsv"), DataError);
}

TEST_CASE("per-record semantic failures are skipped, not fatal") {
  const TempDir dir;
  PipelineConfig cfg = toy_config(dir);
  cfg.golden_input.clear();
  cfg.pseudo_input.clear();
  // Second triplet's alignment is out of bounds; first still processes.
  cfg.triplet_input = dir.file("triplets2.tsv",
                               "die Einnahmen des Systems\tAll revenue of the system\t"
                               "All revenues from the system\n"
                               "s\tkurz eins\tkurz zwei\n");
  cfg.alignment_input = dir.file("triplets2.align", "0-0 1-1 2-2 3-3 4-4\n0-9\n");
  const PipelineStats stats = run_pipeline(cfg);
  CHECK(stats.aligned.read == 2);
  CHECK(stats.aligned.skipped == 1);
  CHECK(stats.aligned.emitted >= 1);

  // A scorer that always throws rejects candidates but keeps the run alive.
  PipelineConfig throwing = toy_config(dir);
  throwing.golden_input.clear();
  throwing.pseudo_input.clear();
  throwing.scorer = std::make_shared<ThrowingScorer>();
  throwing.output = dir.sub("none.tsv");
  throwing.stats_output.clear();
  const PipelineStats ts = run_pipeline(throwing);
  CHECK(ts.aligned.read == 1);
  CHECK(ts.aligned.accepted == 0);
  CHECK(ts.aligned.emitted == 0);
}

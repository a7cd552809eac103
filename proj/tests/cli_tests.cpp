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

// End-to-end checks of the tsforge executable: subcommands, exit codes,
// stdin/stdout plumbing, determinism and the overwrite guard.

#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const std::string kBin = TSFORGE_CLI_PATH;
const std::string kData = TSFORGE_TEST_DATA_DIR;

struct CmdResult {
  int exit_code = -1;
  std::string output;
};

// Runs through /bin/sh and captures stdout (append 2>&1 to capture stderr).
CmdResult run(const std::string& command) {
  CmdResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::string out;
  while (fgets(buf, sizeof(buf), pipe) != nullptr) out += buf;
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.output = std::move(out);
  return result;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("tsforge_cli_" + std::to_string(::getpid()) + "_" + std::to_string(next()++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int& next() {
    static int n = 0;
    return n;
  }
  std::string file(const std::string& name, const std::string& content) const {
    std::ofstream out(path / name);
    out << content;
    return (path / name).string();
  }
  std::string sub(const std::string& name) const { return (path / name).string(); }
};

bool has(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("filter keeps rows inside the bounds and reports stats") {
  const TempDir dir;
  const std::string input = dir.file("corpus.tsv",
                                     "a b c\tx y z\n"
                                     "a\tx\n"
                                     "a b c d\tx y z w\n");
  const CmdResult r = run(kBin + " filter --input " + input + " --min 2 --max 10 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "a b c\tx y z\na b c d\tx y z w\n");

  const CmdResult stats =
      run(kBin + " filter --input " + input + " --min 2 --max 10 2>&1 >/dev/null");
  CHECK(has(stats.output, "read=3"));
  CHECK(has(stats.output, "kept=2"));
}

TEST_CASE("filter reads stdin and applies LID") {
  const CmdResult r = run("printf 'all revenue\\t系统 收入\\n系统 的\\tder Umsatz\\n' | " + kBin +
                          " filter --min 1 --max 10 --lid-lang en --lid-side source 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "all revenue\t系统 收入\n");
}

TEST_CASE("filter rejects malformed rows with exit code 2") {
  const TempDir dir;
  const std::string input = dir.file("bad.tsv", "no tabs here\n");
  const CmdResult r = run(kBin + " filter --input " + input + " 2>&1");
  CHECK(r.exit_code == 2);
  CHECK(has(r.output, "bad.tsv"));
  CHECK(has(r.output, "line 1"));
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run(kBin + " no-such-subcommand 2>/dev/null").exit_code == 1);
  CHECK(run(kBin + " filter --no-such-flag 2>/dev/null").exit_code == 1);
  CHECK(run(kBin + " filter --min 9 --max 3 --input /dev/null 2>/dev/null").exit_code == 1);
  CHECK(run(kBin + " evaluate --hyp /does/not/exist --gold /does/not/exist 2>/dev/null")
            .exit_code == 1);
  CHECK(run(kBin + " --help >/dev/null 2>&1").exit_code == 0);
}

TEST_CASE("sample-golden is deterministic and honors --repeat") {
  const TempDir dir;
  const std::string input = dir.file("pairs.tsv",
                                     "der Umsatz\tthe revenue of the system\n"
                                     "die Zahlen\tthe figures are checked\n");
  const std::string out1 = dir.sub("a.tsv");
  const std::string out2 = dir.sub("b.tsv");
  CHECK(run(kBin + " sample-golden --input " + input + " --seed 42 --output " + out1 +
            " 2>/dev/null")
            .exit_code == 0);
  CHECK(run(kBin + " sample-golden --input " + input + " --seed 42 --output " + out2 +
            " 2>/dev/null")
            .exit_code == 0);
  const std::string first = slurp(out1);
  CHECK(first == slurp(out2));
  CHECK_FALSE(first.empty());

  // A different seed moves the spans.
  const std::string out3 = dir.sub("c.tsv");
  run(kBin + " sample-golden --input " + input + " --seed 43 --output " + out3 + " 2>/dev/null");
  CHECK(slurp(out3) != first);

  // Repeat factor multiplies examples per pair.
  const CmdResult rep =
      run(kBin + " sample-golden --input " + input + " --seed 42 --repeat 3 2>/dev/null");
  int rows = 0;
  for (const char c : rep.output) rows += c == '\n';
  CHECK(rows == 6);

  // Every emitted row is tagged with the golden origin.
  CHECK(has(rep.output, "\tgolden"));
}

TEST_CASE("sample-pseudo tags rows with the pseudo origin") {
  const CmdResult r = run("printf 'the source\\tdie Übersetzung des Systems\\n' | " + kBin +
                          " sample-pseudo --seed 7 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(has(r.output, "\tpseudo"));
}

TEST_CASE("align-extract dumps trimmed phrases") {
  const TempDir dir;
  const std::string triplets = dir.file(
      "t.tsv", "src tokens here\tAll revenue of the system\tAll revenues from the system\n");
  const std::string aligns = dir.file("t.align", "0-0 1-1 2-2 3-3 4-4\n");
  const CmdResult r =
      run(kBin + " align-extract --triplets " + triplets + " --alignments " + aligns +
          " 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "y[1..2]\tr[1..2]\trevenue of\trevenues from\n");

  // Row-count mismatch is a data error.
  const std::string aligns2 = dir.file("t2.align", "0-0\n1-1\n");
  CHECK(run(kBin + " align-extract --triplets " + triplets + " --alignments " + aligns2 +
            " 2>/dev/null")
            .exit_code == 2);
}

TEST_CASE("augment reproduces the committed toy outputs") {
  const TempDir dir;
  const std::string cfg = kData + "/toy/run.cfg";
  const std::string out = dir.sub("examples.tsv");
  const std::string stats = dir.sub("stats.txt");
  const CmdResult r = run(kBin + " augment --config " + cfg + " --output " + out +
                          " --stats-output " + stats + " 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(slurp(out) == slurp(kData + "/toy/expected/examples.tsv"));
  CHECK(slurp(stats) == slurp(kData + "/toy/expected/stats.txt"));
}

TEST_CASE("flags override config file values") {
  const TempDir dir;
  const std::string cfg = kData + "/toy/run.cfg";
  const std::string out = dir.sub("reseeded.tsv");
  // A different seed must move the sampled spans away from the committed run.
  CHECK(run(kBin + " augment --config " + cfg + " --seed 43 --output " + out + " 2>/dev/null")
            .exit_code == 0);
  const std::string reseeded = slurp(out);
  CHECK_FALSE(reseeded.empty());
  CHECK(reseeded != slurp(kData + "/toy/expected/examples.tsv"));
}

TEST_CASE("augment refuses to overwrite without --force") {
  const TempDir dir;
  const std::string cfg = kData + "/toy/run.cfg";
  const std::string out = dir.sub("examples.tsv");
  CHECK(run(kBin + " augment --config " + cfg + " --output " + out + " 2>/dev/null").exit_code ==
        0);
  const CmdResult blocked =
      run(kBin + " augment --config " + cfg + " --output " + out + " 2>&1 >/dev/null");
  CHECK(blocked.exit_code == 1);
  CHECK(has(blocked.output, "--force"));
  CHECK(run(kBin + " augment --config " + cfg + " --output " + out + " --force 2>/dev/null")
            .exit_code == 0);
}

TEST_CASE("augment exit code distinguishes empty outputs") {
  const TempDir dir;
  const std::string input = dir.file("pairs.tsv", "a b\tc d\n");
  // Bounds nothing survives.
  const std::string base = kBin + " augment --golden " + input + " --min 50 --max 80 --seed 1";
  CHECK(run(base + " --output " + dir.sub("x.tsv") + " 2>/dev/null").exit_code == 2);
  CHECK(run(base + " --allow-empty --output " + dir.sub("y.tsv") + " 2>/dev/null").exit_code ==
        0);
}

TEST_CASE("evaluate prints the BLEU line") {
  const TempDir dir;
  const std::string hyp = dir.file("h.txt", "revenues from ||| other\nthe system\n");
  const std::string gold = dir.file("g.txt", "revenues from\nthe system\n");
  const CmdResult r = run(kBin + " evaluate --hyp " + hyp + " --gold " + gold + " 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(has(r.output, "100.00"));

  const std::string gold_short = dir.file("gs.txt", "revenues from\n");
  CHECK(run(kBin + " evaluate --hyp " + hyp + " --gold " + gold_short + " 2>/dev/null")
            .exit_code == 2);
}

TEST_CASE("stats reports row and token counts") {
  const TempDir dir;
  const std::string input = dir.file("d.tsv", "a b\tc\na\td e f\n");
  const CmdResult r = run(kBin + " stats --input " + input + " 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(has(r.output, "rows=2"));
  CHECK(has(r.output, "columns=2"));
  CHECK(has(r.output, "col0.tokens=3"));
  CHECK(has(r.output, "col1.max_len=3"));
}

TEST_CASE("TSFORGE_LOG=quiet silences warnings") {
  const TempDir dir;
  // Triplet whose alignment is out of bounds produces a warning by default.
  const std::string triplets = dir.file("t.tsv", "s\tm1 m2\tr1 r2\n");
  const std::string aligns = dir.file("t.align", "0-9\n");
  const std::string noisy = run(kBin + " align-extract --triplets " + triplets +
                                " --alignments " + aligns + " 2>&1 >/dev/null")
                                .output;
  CHECK(has(noisy, "skipped"));
  const std::string quiet = run("TSFORGE_LOG=quiet " + kBin + " align-extract --triplets " +
                                triplets + " --alignments " + aligns + " 2>&1 >/dev/null")
                                .output;
  CHECK(quiet.find("[warn]") == std::string::npos);
}

#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "aq/cli.hpp"

using aq::run;
using aq::RunResult;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "aq_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = scratch(name);
  std::ofstream(p, std::ios::binary) << text;
  return p.string();
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

const std::string kData = AQ_DATA_DIR;

}  // namespace

TEST_CASE("validate") {
  CHECK(run({"validate", "su2"}).exit_code == 0);
  CHECK(run({"validate", kData + "/u3.bialg"}).exit_code == 0);
  const RunResult bad = run({"validate", kData + "/broken-cocycle.bialg"});
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.out, "cocycle"));
  const RunResult missing = run({"validate", "/nonexistent.bialg"});
  CHECK(missing.exit_code == 2);
  CHECK_FALSE(missing.err.empty());
}

TEST_CASE("quantize, verify and diff against the oracle") {
  const RunResult q = run({"quantize", "su2", "--order", "4"});
  REQUIRE(q.exit_code == 0);
  CHECK(contains(q.out, "coproduct X : z^3 * -1/6 * X (x) H^3\n"));
  CHECK(contains(q.out, "bracket X Y : z^4 * 4/15 * H^5\n"));
  const std::string dump = write("su2.dump", q.out);
  CHECK(run({"verify", dump}).exit_code == 0);
  const std::string oracle = write("su2-oracle.dump", run({"oracle", "su2", "--order", "4"}).out);
  CHECK(run({"diff", dump, oracle}).exit_code == 0);
  CHECK(run({"quantize", "su2", "--order", "4"}).out == q.out);
}

TEST_CASE("--out writes the file instead of standard output") {
  const std::string path = scratch("out.dump").string();
  const RunResult r = run({"quantize", "su2-borel", "--order", "2", "--out", path});
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  CHECK(first == "bialgebra su2-borel");
}

TEST_CASE("verify and diff report corrupted dumps") {
  const std::string text = run({"quantize", "su2", "--order", "2"}).out;
  const std::string good = write("good.dump", text);
  const std::string bad = write("bad.dump", text + "coproduct H : z^2 * 1 * H (x) H\n");
  const RunResult v = run({"verify", bad});
  CHECK(v.exit_code == 1);
  CHECK_FALSE(v.out.empty());
  const RunResult d = run({"diff", good, bad});
  CHECK(d.exit_code == 1);
  CHECK(d.out == "+ coproduct H : z^2 * 1 * H (x) H\n");
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"bogus"}).exit_code == 2);
  CHECK(run({"quantize", "su2"}).exit_code == 2);
  CHECK(run({"quantize", "su2", "--order", "x"}).exit_code == 2);
  const RunResult cap = run({"quantize", "su2", "--order", "9"});
  CHECK(cap.exit_code == 2);
  CHECK(contains(cap.err, "cap"));
  CHECK(run({"quantize", "su2", "--order", "9", "--max-order-cap", "9"}).exit_code == 0);
  CHECK(run({"quantize", "su2", "--order", "2", "--gauge", "weird"}).exit_code == 2);
  const RunResult parse = run({"verify", write("broken.dump", "bialgebra su2\ngenerators H X Y\norder 1\nbracket H Q : z^0 * 1 * X\n")});
  CHECK(parse.exit_code == 2);
  CHECK(contains(parse.err, "line 4"));
  CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("primitivize from a perturbation file") {
  const std::string perturb = kData + "/su2-quadratic.perturb";
  const RunResult c = run({"primitivize", "su2", "--degree", "4", "--perturbation", perturb});
  REQUIRE(c.exit_code == 0);
  CHECK(contains(c.out, "# basis H := H - ("));
  const std::string clean = run({"primitivize", "su2", "--degree", "4"}).out;
  const std::string result = c.out.substr(c.out.find("bialgebra"));
  CHECK(result == clean);

  const RunResult d = run({"primitivize", "su2", "--order", "3", "--perturbation", perturb});
  REQUIRE(d.exit_code == 0);
  const std::string graded = write("graded.dump", run({"primitivize", "su2", "--order", "3"}).out);
  CHECK(run({"verify", graded}).exit_code == 0);
  CHECK(run({"diff", graded, write("deformed.dump", d.out)}).exit_code == 0);
  CHECK(run({"primitivize", graded, "--stages", "2"}).exit_code == 0);
}

TEST_CASE("primitivize errors") {
  const RunResult unknown =
      run({"primitivize", "su2", "--degree", "3", "--perturbation", write("q.perturb", "X : z^0 * 1 * H*X\nQ : z^0 * 1 * H\n")});
  CHECK(unknown.exit_code == 2);
  CHECK(contains(unknown.err, "line 2"));
  CHECK(run({"primitivize", "su2"}).exit_code == 2);
  CHECK(run({"primitivize", "su2", "--degree", "3", "--stages", "3"}).exit_code == 2);
  const std::string fake = run({"primitivize", "su2", "--degree", "3"}).out + "coproduct H : z^0 * 3 * X (x) X\n";
  const RunResult np = run({"primitivize", write("fake.dump", fake)});
  CHECK(np.exit_code == 3);
  CHECK(contains(np.err, "not primitivizable"));
}

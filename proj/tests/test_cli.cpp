#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "aisemi/algebra_io.hpp"
#include "aisemi/builtins.hpp"
#include "aisemi/homomorphism.hpp"
#include "cli.hpp"

using namespace aisemi;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "aisemi_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("exit codes for a fixed corpus") {
  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> corpus{
      {{"algebra", "check", "S7"}, cli::kPass},
      {{"algebra", "check", "B21"}, cli::kPass},
      {{"algebra", "show", "SIGMA7"}, cli::kPass},
      {{"algebra", "order", "B21"}, cli::kPass},
      {{"word", "wn", "2"}, cli::kPass},
      {{"word", "zimin", "3"}, cli::kPass},
      {{"word", "free", "w2", "w1"}, cli::kPass},
      {{"word", "free", "w1", "w1"}, cli::kFail},
      {{"sat", "S7", "x y = y x"}, cli::kPass},
      {{"sat", "B21", "x y x z t z = x y z x t z"}, cli::kFail},
      {{"sat", "B21", "x y z t = t z y x", "--max-assignments", "10"},
       cli::kInconclusive},
      {{"isoterm", "B21", "x y x z t z"}, cli::kPass},
      {{"isoterm", "S7", "x y x z t z"}, cli::kFail},
      {{"isoterm", "S7", "x y", "--bound", "2"}, cli::kFail},
      {{"embed", "S7", "B21"}, cli::kPass},
      {{"embed", "B21", "S7"}, cli::kFail},
      {{"iso", "S7", "S7"}, cli::kPass},
      {{"certify", "B21"}, cli::kPass},
      {{"certify", "S7"}, cli::kFail},
      {{"sat", "S7", "x = = y"}, cli::kUsage},
      {{"sat", "NO_SUCH_ALGEBRA", "x = x"}, cli::kUsage},
      {{"frobnicate"}, cli::kUsage},
      {{}, cli::kUsage},
      {{"reproduce", "--max-n", "0"}, cli::kUsage},
  };
  for (const auto& c : corpus) {
    std::string joined;
    for (const auto& a : c.args) joined += a + " ";
    CAPTURE(joined);
    const Run r = run(c.args);
    CHECK(r.code == c.code);
  }
}

TEST_CASE("outputs") {
  CHECK(run({"word", "wn", "1"}).out == "y0 x1 x2 y0 y1 x3 y1 y2 x4 x5 y2\n");
  const Run s = run({"sat", "B21", "x y x z t z = x y z x t z"});
  CHECK(s.out.find("fails: x=") != std::string::npos);
  CHECK(run({"sat", "S7", "x = = y"}).err.find("position 4") != std::string::npos);
  CHECK(run({"algebra", "order", "B21"}).out.find("covers:") != std::string::npos);
}

TEST_CASE("thread count does not change output") {
  const Run one = run({"sat", "SIGMA7", "x y z x = x z y x", "--threads", "1"});
  const Run four = run({"sat", "SIGMA7", "x y z x = x z y x", "--threads", "4"});
  CHECK(one.code == four.code);
  CHECK(one.out == four.out);

  const Run r1 = run({"reproduce", "--max-n", "1", "--samples", "5000",
                      "--threads", "1"});
  const Run r3 = run({"reproduce", "--max-n", "1", "--samples", "5000",
                      "--threads", "3"});
  CHECK(r1.code == cli::kPass);
  CHECK(r1.out == r3.out);
}

TEST_CASE("files round trip") {
  const fs::path prod = scratch("s7xm2.txt");
  REQUIRE(run({"product", "S7", "M2", "-o", prod.string()}).code == cli::kPass);
  const auto p = load_algebra(prod.string());
  CHECK(p.size() == 6);
  CHECK(run({"algebra", "check", prod.string()}).code == cli::kPass);

  const fs::path flat = scratch("mabacdc.txt");
  REQUIRE(run({"flat", "build", "abacdc", "--split-chars", "--monoid", "-o",
               flat.string()})
              .code == cli::kPass);
  CHECK(find_isomorphism(load_algebra(flat.string()), m_abacdc()).map.has_value());
  CHECK(run({"certify", flat.string()}).code == cli::kPass);
}

TEST_CASE("reproduce with a broken S7 fails") {
  const fs::path bad = scratch("bad_s7.txt");
  const auto s = s7();
  save_algebra(bad, s.with_sum(*s.find_element("a"), *s.find_element("a"),
                               *s.find_element("0")));
  const fs::path summary = scratch("summary.tsv");
  const Run r = run({"reproduce", "--max-n", "1", "--samples", "5000", "--s7",
                     bad.string(), "--summary", summary.string()});
  CHECK(r.code == cli::kFail);
  std::ifstream in(summary);
  std::string first;
  std::getline(in, first);
  CHECK(first.rfind("R1\t", 0) == 0);
  CHECK(first.find("\tfail\t") != std::string::npos);
}

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "zmn/analysis.hpp"
#include "zmn/cli.hpp"

using namespace zmn;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli: count") {
  const auto r = run({"count", "--m", "2", "--n", "2", "--variant", "s"});
  CHECK(r.code == 0);
  CHECK(r.out == "5\n");
  CHECK(run({"count", "--m", "4", "--n", "6", "--variant", "c", "--formula", "C2"}).out == "12\n");
  CHECK(run({"count", "--m", "4e0", "--n", "6", "--formula", "F1"}).out == "16\n");
  CHECK(run({"count", "--m", "2.5", "--n", "2"}).code == 1);
  CHECK(run({"count", "--m", "2", "--n", "2", "--formula", "C1"}).code == 1);
  CHECK(run({"count", "--m", "0", "--n", "2"}).code == 1);
}

TEST_CASE("cli: oracle") {
  CHECK(run({"oracle", "--m", "4", "--n", "6"}).out == "total 16\ncyclic 12\n");
  const auto big = run({"oracle", "--m", "200", "--n", "200"});
  CHECK(big.code == 2);
  CHECK(big.err.find("error") == 0);
}

TEST_CASE("cli: summatory") {
  const auto r = run({"summatory", "--variant", "s", "--x", "4", "--algo", "naive"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("20\nelapsed ", 0) == 0);
  CHECK(run({"summatory", "--variant", "c", "--x", "4"}).out.rfind("19\n", 0) == 0);
  CHECK(run({"summatory", "--x", "1e3"}).code == 0);
  const auto w = run({"summatory", "--weighted", "--x", "3", "--algo", "naive"});
  CHECK(w.out.rfind("2.72047", 0) == 0);
  const auto bad = run({"summatory", "--x", "0.5", "--algo", "naive"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("domain") != std::string::npos);
  CHECK(run({"summatory", "--x", "1e7", "--algo", "naive"}).code == 2);
  CHECK(run({"summatory", "--x", "10", "--algo", "fast"}).code == 1);
}

TEST_CASE("cli: series-check") {
  const auto r = run({"series-check", "--variant", "s", "--z", "2", "--w", "2", "--trunc", "1e3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("closed 8.13133821582") != std::string::npos);
  CHECK(r.out.find("gap ") != std::string::npos);
  CHECK(run({"series-check", "--z", "1", "--w", "2"}).code == 1);
}

TEST_CASE("cli: coeffs and constants") {
  const auto r = run({"coeffs", "--variant", "s", "--weight-order", "2", "--route", "closedform", "--precision", "30"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string first;
  std::getline(lines, first);
  CHECK(first.rfind("1.26651479552922", 0) == 0);
  const auto series = run({"coeffs", "--variant", "s", "--route", "series", "--precision", "30"});
  CHECK(series.out.substr(0, 20) == r.out.substr(0, 20));
  CHECK(run({"coeffs", "--variant", "c", "--route", "closedform"}).code == 1);
  CHECK(run({"coeffs", "--route", "gderiv", "--precision", "20"}).code == 2);
  CHECK(run({"coeffs", "--precision", "10"}).code == 1);

  const auto c = run({"constants", "--precision", "20"});
  CHECK(c.code == 0);
  CHECK(c.out.find("gamma_0") == 0);
  CHECK(c.out.find("5.7721566490153286061e-01") != std::string::npos);
  CHECK(c.out.find("zeta''''(2)") != std::string::npos);
}

TEST_CASE("cli: scan to a file") {
  const auto path = std::filesystem::temp_directory_path() / "zmn_cli_scan.csv";
  const auto r = run({"scan", "--variant", "s", "--from", "1e3", "--to", "1e5", "--points-per-decade", "4", "--out",
                      path.string(), "--precision", "30"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const auto records = read_csv(in);
  CHECK(records.size() == 9);
  std::filesystem::remove(path);
  CHECK(run({"scan", "--from", "1", "--to", "1e3"}).code == 1);
}

TEST_CASE("cli: usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"count", "--m", "2"}).code == 1);
  CHECK(run({"count", "--m", "2", "--n", "3", "--threads", "-1"}).code == 1);
  CHECK(run({"constants", "--out", "/nonexistent/dir/x"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

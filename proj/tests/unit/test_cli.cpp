#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "multsub/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "multsub");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = multsub::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count") {
  const auto r = run({"count", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"G\":\"5\"") != std::string::npos);
  CHECK(r.out.find("\"I\":\"3\"") != std::string::npos);
  const auto one = run({"count", "1"});
  CHECK(one.code == 0);
  CHECK(one.out.find("\"G\":\"1\"") != std::string::npos);
  const auto many = run({"count", "--max", "20"});
  CHECK(many.code == 0);
  CHECK(std::count(many.out.begin(), many.out.end(), '\n') == 20);
}

TEST_CASE("usage errors") {
  CHECK(run({"count", "--bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"count", "0"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("scan output") {
  const auto a = run({"scan", "--max", "1000"});
  CHECK(a.code == 0);
  CHECK(a.out.rfind("n,phi,omega_phi,bigomega_phi,logG,logI\n", 0) == 0);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 1000);
  const auto b = run({"--threads", "3", "scan", "--max", "1000"});
  CHECK(a.out == b.out);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--max", "50"});
  CHECK(r.code == 0);
}

TEST_CASE("moments csv") {
  const auto r = run({"moments", "--x", "1000", "--orders", "1,2", "--prime-limit", "1000"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("h,x,M_h,normalized\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
}

TEST_CASE("extremal json") {
  const auto r = run({"extremal", "scan", "--max", "100"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"n\": \"80\"") != std::string::npos);
}

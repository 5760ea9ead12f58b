#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

  struct Run {
    int         status;
    std::string out;
  };

  Run run(std::string const& args) {
    std::string cmd = std::string(IDINF_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE*       pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string           out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) {
      out.append(buf.data(), n);
    }
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
  }

  nlohmann::json json_of(Run const& r) {
    return nlohmann::json::parse(r.out);
  }

}  // namespace

TEST_CASE("eval") {
  auto r = run("eval '<+x+1|{0}> * <+x+1|{0}>'");
  CHECK(r.status == 0);
  CHECK(r.out == "{\"result\":\"<+x+2|{-1,0}>\"}\n");
  CHECK(json_of(run("eval '<+x+1|{0}>^-1'"))["result"] == "<+x-1|{1}>");
  CHECK(json_of(run("eval '<+x+0|{}>'"))["result"] == "<+x+0|{}>");
}

TEST_CASE("order, sigma and Green's relations") {
  CHECK(json_of(run("leq '<+x+1|{0,5}>' '<+x+1|{0}>'"))["leq"] == true);
  CHECK(run("sigma-max '<-x+2|{0,1}>'").out == "{\"result\":\"<-x+2|{}>\"}\n");
  CHECK(json_of(run("sigma-eq '<+x+1|{0}>' '<+x+1|{9}>'"))["sigma_eq"] == true);
  auto g = json_of(run("green '<+x|{0,1}>' '<+x|{5,6}>'"));
  CHECK(g["D"] == true);
  CHECK(g["L"] == false);
  CHECK(g["R"] == false);
  CHECK(g["H"] == false);
}

TEST_CASE("upset and equations") {
  auto up = json_of(run("upset '<+x+0|{1,2,3}>'"));
  CHECK(up["count"] == 8);
  CHECK(up["upset"].size() == 8);

  auto sr = json_of(run("solve-right '<+x|{0}>' '<+x+2|{0,4}>'"));
  CHECK(sr["count"] == 2);
  CHECK(sr["solutions"] == nlohmann::json::array({"<+x+2|{0,4}>", "<+x+2|{4}>"}));
  CHECK(sr["unit_member"].is_null());

  auto sl = json_of(run("solve-left '<-x+3|{}>' '<+x+8|{}>'"));
  CHECK(sl["count"] == 1);
  CHECK(sl["unit_member"] == "<-x-5|{}>");
}

TEST_CASE("structure conversions") {
  auto s = json_of(run("to-semidirect '<+x+1|{0}>'"));
  CHECK(s["gamma"] == "+x+1");
  CHECK(s["ran_excl"] == "{1}");
  CHECK(json_of(run("from-semidirect -- +x+1 '{1}'"))["result"] == "<+x+1|{0}>");
  CHECK(json_of(run("from-semidirect -- -x+2 '{1}'"))["result"] == "<-x+2|{1}>");

  auto m = json_of(run("mc-embed '<+x+1|{0}>'"));
  CHECK(m["idem_excl"] == "{0}");
  CHECK(m["t"] == "+x+1");
  auto mm = json_of(run("mc-mul '{0}' +x+1 '{1}' +x+1"));
  CHECK(mm["idem_excl"] == "{0}");
  CHECK(mm["t"] == "+x+2");
}

TEST_CASE("exit codes") {
  CHECK(run("eval '<+x+1|{0}'").status == 2);
  CHECK(run("eval '<+x+9223372036854775807|{}> * <+x+1|{}>'").status == 4);
  CHECK(run("frobnicate").status == 64);
  CHECK(run("").status == 64);
  CHECK(run("leq '<+x|{}>'").status == 64);
  CHECK(run("upset '<+x|{0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20}>'")
            .status
        == 5);
  CHECK(run("--help").status == 0);
}

TEST_CASE("parse error report") {
  std::string cmd = std::string(IDINF_CLI_PATH) + " eval '<+x+1|{0}' 2>&1";
  FILE*       pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[512] = {};
  auto n        = fread(buf, 1, sizeof buf - 1, pipe);
  pclose(pipe);
  auto j = nlohmann::json::parse(std::string(buf, n));
  CHECK(j["error"] == "parse");
  CHECK(j["line"] == 1);
  CHECK(j["column"] == 10);
}

TEST_CASE("pretty output is still one JSON value") {
  auto r = run("--pretty eval '<+x+1|{0}>'");
  CHECK(r.out.find('\n') < r.out.size() - 1);
  CHECK(json_of(r)["result"] == "<+x+1|{0}>");
}

TEST_CASE("oracle-check, circle-demo and prop38-scan") {
  auto r = run("oracle-check --window 20 --samples 300 --seed 9");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"ok\":true") != std::string::npos);
  CHECK(r.out == run("oracle-check --window 20 --samples 300 --seed 9").out);

  auto c = run("circle-demo --max-n 5 --tol 1e-9");
  CHECK(c.status == 0);
  auto first = nlohmann::json::parse(c.out.substr(0, c.out.find('\n')));
  CHECK(first["n"] == 1);
  CHECK(first["min_gap"].get<double>() == doctest::Approx(1.0));

  auto p = run("prop38-scan --coord-bound 1");
  CHECK(p.status == 0);
  auto j = json_of(p);
  CHECK(j["at_most_one_unit"] == true);
  CHECK(j["elements"] == 48);
}

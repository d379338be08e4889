#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "nhq/cli.hpp"

using namespace nhq;

namespace {

std::string file(const char* name) { return std::string(NHQ_DATA_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("reference invocations") {
  auto b = run({"bracket", "-q", file("jordan.json"), "[x]", "[x']"});
  CHECK(b.code == 0);
  CHECK(b.out == "[e_v]\n");

  auto v = run({"verify", "cubic", "-q", file("a3p.json"), "--dim", "0=2,1=2,2=2,inf=1", "--cases", "50", "--seed", "7"});
  CHECK(v.code == 0);
  CHECK(v.out.find("status: verified") != std::string::npos);
  CHECK(v.out.find("50/50 cases verified") != std::string::npos);

  auto c = run({"qcomm", "-q", file("a3p.json"), "(a0',1)(a1',2)(a2',3)", "(a2',1)(a2,2)"});
  CHECK(c.code == 0);
  CHECK(c.out == "h*(a0',1)(a1',2)(a2',3)\n");
}

TEST_CASE("verbs") {
  CHECK(run({"dbracket", "-q", "jordan", "x", "x'"}).out == "(e_v | e_v)\n");
  CHECK(run({"qmul", "-q", "jordan", "(x',1)", "(x,1)"}).out == "h*e_v + (x,1)&(x',2)\n");
  CHECK(run({"trace", "-q", "jordan", "--dim", "v=1", "[x.x']"}).out == "(x)_{1,1}*(x')_{1,1}\n");
  CHECK(run({"qtrace", "-q", "jordan", "--dim", "v=1", "(x',1)(x,2)"}).out == "h + [x]_{1,1}*d(x)_{1,1}\n");
  CHECK(run({"moment", "-q", "a2"}).out == "a.a' - a'.a\n");
  auto k = run({"kernel", "-q", "a3p", "--dim", "0=2,1=2,2=2,inf=1", "--compare", "14 + 4r_0+2r_1+2r_2 = 0"});
  CHECK(k.code == 0);
  CHECK(k.out.find("constraint: 2*r_0 + 2*r_1 + 2*r_2 + r_inf - 14 = 0") != std::string::npos);
  CHECK(k.out.find("note: reference: 14 + 4r_0+2r_1+2r_2 = 0") != std::string::npos);
  auto s = run({"solve-chi", "-q", "a2", "--dim", "1=1,2=1", "--r", "1=3"});
  CHECK(s.code == 0);
  CHECK(s.out.find("character: 1=2 2=0") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"bracket", "-q", "jordan", "[x", "[x']"}).code == exit_parse);
  CHECK(run({"bracket", "-q", "jordan", "[x", "[x']"}).err.find("position 3") != std::string::npos);
  CHECK(run({"trace", "-q", "jordan", "[x]"}).code == exit_dimension);
  CHECK(run({"trace", "-q", "jordan", "--dim", "v=0", "[x]"}).code == exit_dimension);
  CHECK(run({"trace", "-q", "a2", "--dim", "1=2", "[e_1]"}).code == exit_dimension);
  CHECK(run({"trace", "-q", "jordan", "--dim", "w=1", "[x]"}).code == exit_parse);
  CHECK(run({"qcomm", "-q", "jordan", "(x,2)", "(x,1)"}).code == exit_parse);
  CHECK(run({"verify", "nonsense"}).code == exit_other);
  CHECK(run({"bracket", "-q", "/nonexistent.json", "[x]", "[x]"}).code != 0);
  CHECK(run({"bracket"}).code == exit_other);
}

TEST_CASE("deterministic json reports") {
  std::vector<std::string> args = {"verify", "trace-hom", "-q", "a2", "--dim", "1=2,2=1", "--cases", "5", "--seed", "11", "--json"};
  auto first = run(args), second = run(args);
  CHECK(first.out == second.out);
  auto j = nlohmann::json::parse(first.out);
  CHECK(j["name"] == "trace-hom");
  CHECK(j["status"] == "verified");
  CHECK(j["residual"] == "0");
  CHECK(j["notes"][0] == "5/5 cases verified");
  auto random = run({"verify", "dirac", "--cases", "5"});
  CHECK(random.code == 0);
  CHECK(random.out == run({"verify", "dirac", "--cases", "5"}).out);
}

#include <doctest.h>

#include "commands.hpp"
#include "job.hpp"

using namespace th;
using namespace th::cli;
using nlohmann::json;

namespace {

const char* kP2 = R"({"fan": {"rays": [[1,0],[0,1],[-1,-1]], "max_cones": [[0,1],[1,2],[0,2]]},
                      "divisor": [1,1,1], "polynomial": {"generic_seed": 4}})";

std::string pointer_of(const std::string& text) {
  try {
    parse_job(text);
  } catch (const JobError& e) {
    return e.pointer();
  }
  return "<none>";
}

}  // namespace

TEST_CASE("parse_job reads a fan job") {
  auto job = parse_job(kP2);
  CHECK(job.dim == 2);
  REQUIRE(job.fan);
  CHECK(job.fan->nrays() == 3);
  CHECK(*job.divisor == ZVec{1, 1, 1});
  CHECK(job.generic_seed == 4u);
  CHECK(job.options.root_mode == RootMode::numeric);
}

TEST_CASE("rationals are normalised") {
  CHECK(parse_rat(json("2/6"), "/x") == Rat(1, 3));
  CHECK(parse_rat(json("-4/2"), "/x") == Rat(-2));
  CHECK(parse_rat(json(7), "/x") == Rat(7));
  CHECK_THROWS_AS(parse_rat(json("1/0"), "/x"), JobError);
  CHECK_THROWS_AS(parse_rat(json("x"), "/x"), JobError);
  CHECK(parse_int(json("123456789012345678901234567890"), "/x") == Int("123456789012345678901234567890"));
}

TEST_CASE("schema errors carry a JSON pointer") {
  CHECK(pointer_of(R"({"fan": {"rays": [[1,0],[0,2],[-1,-1]], "max_cones": [[0,1],[1,2],[0,2]]}, "divisor": [1,1,1]})") ==
        "/fan/rays/1");
  CHECK(pointer_of(R"({"fan": {"rays": [[1,0],[0,1],[-1,-1]], "max_cones": [[0,1],[1,5],[0,2]]}, "divisor": [1,1,1]})") ==
        "/fan/max_cones/1/1");
  CHECK(pointer_of(R"({"fan": {"rays": [[1,0],[0,1],[-1,-1]], "max_cones": [[0,1],[1,2],[0,2]]}, "divisor": [1,1]})") ==
        "/divisor");
  CHECK(pointer_of(R"({"fan": {"rays": [[1,0],[0,1],[-1,-1]], "max_cones": [[0,1],[1,2],[0,2]]}, "divisor": [1,1,1],
                      "polynomial": {"terms": [{"exponent": [2,0,0], "coefficient": 1}]}})") == "/polynomial/terms/0/exponent");
  CHECK(pointer_of(R"({"polytope": {"vertices": [[0,0],[1,0]]}})") == "/polytope/vertices");
  CHECK(pointer_of(R"({"polytope": {"vertices": [[0,0],[1,0],[0,1]]}, "colour": 1})") == "/colour");
  CHECK(pointer_of("[1, 2") == "");
}

TEST_CASE("input hash is stable") {
  CHECK(hex64(fnv1a("")) == "cbf29ce484222325");
  CHECK(hex64(fnv1a("a")) == "af63dc4c8601ec8c");
  auto a = run_command("check", kP2, {}), b = run_command("check", kP2, {});
  CHECK(a.document.dump() == b.document.dump());
}

TEST_CASE("exit codes") {
  CHECK(run_command("check", kP2, {}).exit_code == ok);
  CHECK(run_command("frobnicate", kP2, {}).exit_code == invalid_input);
  CHECK(run_command("check", "{", {}).exit_code == invalid_input);

  // Blow-up of P2 at a point with D = E: the exceptional curve has E.E = -1.
  auto r = run_command("check", R"({"fan": {"rays": [[1,0],[1,1],[0,1],[-1,-1]], "max_cones": [[0,1],[1,2],[2,3],[0,3]]},
                                    "divisor": [0,1,0,0]})", {});
  CHECK(r.exit_code == invalid_input);
  CHECK(r.document["error"]["message"].get<std::string>().find("cone {") != std::string::npos);

  // Polynomial that misses a vertex monomial fails the certificate.
  auto h = run_command("hodge", R"({"fan": {"rays": [[1,0],[0,1],[-1,-1]], "max_cones": [[0,1],[1,2],[0,2]]}, "divisor": [1,1,1],
                                    "polynomial": {"terms": [{"exponent": [3,0,0], "coefficient": "2/6"}]}})", {});
  CHECK(h.exit_code == invalid_input);
}

TEST_CASE("hodge of a plane cubic") {
  auto r = run_command("hodge", kP2, {});
  REQUIRE(r.exit_code == ok);
  CHECK(r.document["result"]["diamond"]["table"] == json::parse("[[1,1],[1,1]]"));
  CHECK(r.document["version"] == TORICHODGE_VERSION);
}

TEST_CASE("products integrate to intersection numbers") {
  auto r = run_command("products", R"({
    "fan": {"rays": [[1,0],[0,1],[-1,0],[0,-1]], "max_cones": [[0,1],[1,2],[2,3],[0,3]]},
    "divisor": [1,1,1,1], "polynomial": {"generic_seed": 2},
    "products": [{"factors": [{"toric": {"divisors": [[1,0,0,0]]}}]},
                 {"factors": [{"toric": {"divisors": [[1,0,0,0]]}}, {"toric": {"divisors": [[0,1,0,0]]}}]}]})",
                       {});
  REQUIRE(r.exit_code == ok);
  const auto& ps = r.document["result"]["products"];
  // D_0 . X = 2 on P1 x P1 with X of bidegree (2, 2); a curve class times another is zero on X.
  CHECK(ps[0]["integral"][0]["value"] == "2");
  CHECK(ps[1]["zero"] == true);
}

TEST_CASE("mirror refuses low dimension") {
  auto r = run_command("mirror", R"({"polytope": {"vertices": [[1,0,0],[0,1,0],[0,0,1],[-1,-1,-1]]}})", {});
  CHECK(r.exit_code == invalid_input);
}

TEST_CASE("hodge of the Fermat quartic") {
  auto r = run_command("hodge", R"({
    "fan": {"rays": [[1,0,0],[0,1,0],[0,0,1],[-1,-1,-1]], "max_cones": [[1,2,3],[0,2,3],[0,1,3],[0,1,2]]},
    "divisor": [4,0,0,0],
    "polynomial": {"terms": [{"exponent": [4,0,0,0], "coefficient": 1}, {"exponent": [0,4,0,0], "coefficient": 1},
                             {"exponent": [0,0,4,0], "coefficient": 1}, {"exponent": [0,0,0,4], "coefficient": 1}]}})",
                       {});
  REQUIRE(r.exit_code == ok);
  CHECK(r.document["result"]["diamond"]["table"][1][1] == 20);
}

#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "deltacheck/commands.hpp"
#include "deltacheck/io.hpp"
#include "test_util.hpp"

using namespace deltacheck;
using namespace testutil;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_polytope(text, "t.json");
  } catch (const UsageError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("polytope files") {
  const auto p = parse_polytope(R"({"name": "cube", "vertices": [[0,0],[1,0],[0,1],[1,1]]})");
  CHECK(p.name() == "cube");
  CHECK(p.vertices().size() == 4);
  CHECK(error_of("{").find("t.json") != std::string::npos);
  CHECK(error_of(R"({"name": "x"})").find("vertices") != std::string::npos);
  CHECK(error_of(R"({"vertices": [[0,0],[1]]})").find("vertices[1]") != std::string::npos);
  CHECK(error_of(R"({"vertices": [[0,0],[1,"a"]]})").find("vertices[1][1]") != std::string::npos);
  CHECK(error_of(R"({"vertices": [[0],[1],[2]]})").find("not extreme") != std::string::npos);
  CHECK(error_of(R"({"vertices": [[0.5]]})").find("integer") != std::string::npos);
  CHECK(error_of(R"([1,2])").find("object") != std::string::npos);
}

TEST_CASE("pair files") {
  auto [p, q] = parse_pair(R"({"P": {"vertices": [[0],[2]]}, "Q": {"vertices": [[0],[1]]}})");
  CHECK(contains(p, q));
  CHECK_THROWS_WITH_AS(parse_pair(R"({"P": {"vertices": [[0],[1]]}, "Q": {"vertices": [[0],[2]]}})"),
                       doctest::Contains("not contained"), UsageError);
  CHECK_THROWS_AS(parse_pair(R"({"P": {"vertices": [[0],[1]]}})"), UsageError);
  CHECK_THROWS_AS(parse_pair(R"({"P": {"vertices": [[0],[1]]}, "Q": {"vertices": [[0,0]]}})"),
                  UsageError);
}

TEST_CASE("json round trip") {
  const LatticePolytope p = unit_cube();
  const auto back = polytope_from_json(to_json(p));
  CHECK(back.vertices() == p.vertices());
  CHECK(back.name() == p.name());
  CHECK(render(to_json(poly({1, 4, 1}))) == "[1,4,1]\n");
  const Int big = Int(1) << 80;
  CHECK(to_json(big) == Json(big.get_str()));
}

TEST_CASE("commands") {
  CHECK(cmd_delta(segment(0, 2), DeltaMethod::all, 1).out ==
        "{\"count\":[1,1],\"boxes\":[1,1],\"orbifold\":[1,1],\"agree\":true}\n");
  CHECK(cmd_delta(unit_cube(), DeltaMethod::count, 1).out == "[1,4,1]\n");
  CHECK(cmd_delta(LatticePolytope({iv({0, 0}), iv({2, 2})}), DeltaMethod::boxes, 1).out ==
        "[1,1]\n");
  CHECK_THROWS_AS(parse_method("fast"), UsageError);
  const auto mono = cmd_monotone(segment(0, 2), segment(0, 1), 1);
  CHECK(mono.exit_code == 0);
  const Json j = Json::parse(mono.out);
  CHECK(j["monotone"] == true);
  CHECK(j["passed"] == true);
  CHECK_FALSE(j.contains("seconds"));
  CHECK(Json::parse(cmd_monotone(unit_square(), unit_square(), 1).out)["delta_Q"] ==
        Json::array({1, 1}));
  const Json h = Json::parse(cmd_hvector(unit_cube(), 1).out);
  CHECK(h["h"].size() >= 1);
  const Json o = Json::parse(cmd_orbifold(segment(0, 2), 1).out);
  CHECK(o["delta"] == Json::array({1, 1}));
  CHECK(o["degrees"].size() == 4);
  CHECK(o["degrees"][3]["quotient"] == 0);
}

TEST_CASE("gen writes deterministic pair files") {
  const auto dir = std::filesystem::temp_directory_path() / "deltacheck_gen_test";
  std::filesystem::remove_all(dir);
  const auto out = cmd_gen({2, 3, false}, 10, 42, dir);
  CHECK(Json::parse(out.out)["files"].size() == 10);
  for (unsigned i = 0; i < 10; ++i) {
    const auto path = dir / ("pair_42_" + std::to_string(i) + ".json");
    REQUIRE(std::filesystem::exists(path));
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == generated_pair_text({2, 3, false}, 42, i));
    CHECK_NOTHROW(load_pair_file(path));
  }
  cmd_gen({1, 2, false}, 1, 7, dir);
  auto [p, q] = load_pair_file(dir / "pair_7_0.json");
  CHECK(p.ambient_rank() == 1);
  CHECK(cmd_gen({3, 6, false}, 5, 1, dir).exit_code == 0);
  for (unsigned i = 0; i < 5; ++i) {
    auto [a, b] = load_pair_file(dir / ("pair_1_" + std::to_string(i) + ".json"));
    CHECK(a.ambient_rank() == 3);
  }
  CHECK_THROWS_AS(cmd_gen({4, 3, false}, 1, 1, dir), UsageError);
  std::filesystem::remove_all(dir);
}

#include "doctest.h"
#include "hecke/expression.hpp"
#include "hecke/serialize.hpp"

using namespace hecke;

TEST_CASE("element JSON") {
  Algebra h({1, 2});
  const Json j = to_json(parse_expression(h, "s1 s1"));
  CHECK(j["m"] == 1);
  CHECK(j["n"] == 2);
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0]["word"] == "s1");
  CHECK(j["terms"][0]["coeff"] == "q - q^-1");
  CHECK(j["terms"][1]["word"] == "");
  CHECK(j["terms"][1]["coeff"] == "1");
  CHECK(j["text"] == "(q - q^-1)*[s1] + 1*[]");
}

TEST_CASE("matrices are nested arrays of scalar strings") {
  const Representation rep = build_representation(MPartition::parse("[[1],[1]]"));
  CHECK(to_json(rep.tau).dump() == R"([["v1","0"],["0","v2"]])");
  ParamSpec spec = default_param_spec(2);
  const Json j = representation_json(rep, spec);
  CHECK(j["tau"].dump() == R"([["1","0"],["0","3"]])");
  CHECK(j["spec"]["q"] == "2");
  CHECK(j["sigma"].size() == 1);
  CHECK(j["basis"][0]["contents"].dump() == R"(["v1","v2"])");
}

TEST_CASE("reports serialize deterministically") {
  CheckOptions opts;
  opts.morphism_pairs = 20;
  const CheckReport r = run_check({2, 2}, opts);
  const Json j = to_json(r);
  CHECK(j["ok"] == true);
  CHECK(j["completeness"]["sum_of_squares"] == 8);
  CHECK(j["injectivity"]["rank"] == 8);
  CHECK(j["morphism"]["pairs"] == 20);
  CHECK(j.dump() == to_json(run_check({2, 2}, opts)).dump());

  const std::string text = check_text(r);
  CHECK(text.rfind("check H(2,1,2) at q=2 v=(1,3)\ncompleteness 8 = 8\n", 0) == 0);
  CHECK(text.substr(text.size() - 5) == "PASS\n");

  CHECK(baxter_text(BaxterReport{true, std::nullopt, std::nullopt}) ==
        "unitarity ok\nyang-baxter not applicable\nlocality not applicable\n");
  CHECK(to_json(BaxterReport{true, false, std::nullopt}).dump() ==
        R"({"unitarity":true,"yang_baxter":false,"locality":null,"ok":false})");
}

TEST_CASE("h2 and tableaux renderings") {
  const H2Rep r = h2_one_dim(Scalar::v(1), -1);
  const Json j = to_json(r);
  CHECK(j["sign"] == -1);
  CHECK(j["sigma"].dump() == R"([["-q^-1"]])");
  CHECK(j["relations"] == true);

  const std::string text = tableaux_text(enumerate_mpartitions(1, 3));
  CHECK(text == "[[3]] dimension 1\n"
                "  [[[1,2,3]]] (v1, q^2*v1, q^4*v1)\n"
                "[[2,1]] dimension 2\n"
                "  [[[1,2],[3]]] (v1, q^2*v1, q^-2*v1)\n"
                "  [[[1,3],[2]]] (v1, q^-2*v1, q^2*v1)\n"
                "[[1,1,1]] dimension 1\n"
                "  [[[1],[2],[3]]] (v1, q^-2*v1, q^-4*v1)\n"
                "3 shapes, 4 tableaux, sum of squares 6\n");
}

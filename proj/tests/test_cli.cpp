#include <doctest.h>

#include <sstream>

#include "orbicurve/cli.hpp"
#include "orbicurve/json_io.hpp"

using namespace orbicurve;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = ORBICURVE_TEST_DATA;

}  // namespace

TEST_CASE("chi and order") {
  auto r = run({"chi", "--sig", R"({"g":0,"r":0,"m":[2,3,7]})"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"chi\":\"-1/42\",\"kind\":\"hyperbolic\"}\n");
  CHECK(r.err.empty());

  r = run({"order", "--sig", R"({"g":1,"r":0,"m":[]})"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"order\":\"infinite\"}\n");

  r = run({"order", "--sig", R"({"g":0,"r":0,"m":[5,3,2]})"});
  CHECK(r.out == "{\"order\":60}\n");
}

TEST_CASE("domain errors exit 1") {
  CHECK(run({"chi", "--sig", R"({"g":0,"r":0,"m":[1]})"}).code == 1);
  CHECK(run({"chi", "--sig", "not json"}).code == 1);
  CHECK(run({"chi", "--sig", R"({"g":0})"}).code == 1);
  CHECK(run({"verify", "example", "--name", "nonesuch"}).code == 1);
  CHECK(run({"chi", "--sig", "{}", "--bogus"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"triangle-rep", "--m", "2,3,6"}).code == 1);
  const auto r = run({"verify", "wallpaper", "--k", "5", "--seed", "1"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("wallpaper requires a seed") {
  CHECK(run({"verify", "wallpaper", "--k", "4", "--samples", "5"}).code == 1);
  const auto a = run({"verify", "wallpaper", "--k", "4", "--samples", "5", "--seed", "3"});
  const auto b = run({"verify", "wallpaper", "--k", "4", "--samples", "5", "--seed", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["pass"] == true);
}

TEST_CASE("todd-coxeter") {
  auto r = run({"todd-coxeter", "--presentation", kData + "/a4.txt", "--max-cosets", "10"});
  CHECK(r.code == 2);
  r = run({"todd-coxeter", "--presentation", kData + "/a4.txt"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["index"] == 12);
  r = run({"todd-coxeter", "--presentation", kData + "/s3_in_s3.txt"});
  CHECK(Json::parse(r.out)["index"] == 3);
  CHECK(run({"todd-coxeter", "--presentation", kData + "/missing.txt"}).code == 1);
}

TEST_CASE("max cosets from the environment") {
  setenv("ORBICURVE_MAX_COSETS", "5", 1);
  CHECK(run({"todd-coxeter", "--presentation", kData + "/a4.txt"}).code == 2);
  setenv("ORBICURVE_MAX_COSETS", "junk", 1);
  CHECK(run({"todd-coxeter", "--presentation", kData + "/a4.txt"}).code == 1);
  unsetenv("ORBICURVE_MAX_COSETS");
}

TEST_CASE("iso, serre, cover, abelianize") {
  auto r = run({"iso", "--a", R"({"g":1,"r":1,"m":[2]})", "--b", R"({"g":0,"r":3,"m":[2]})"});
  CHECK(Json::parse(r.out)["isomorphic"] == true);
  r = run({"serre", "--sig", R"({"g":0,"r":0,"m":[2,3,12]})"});
  const Json s = Json::parse(r.out);
  CHECK(s["verdict"] == "open");
  CHECK(s["degree"] == 6);
  r = run({"serre", "--sig", R"({"g":0,"r":0,"m":[2,3,7]})"});
  CHECK(Json::parse(r.out)["degree"].is_null());
  r = run({"cover", "--sig", R"({"g":0,"r":0,"m":[2,3,7]})", "--index", "168"});
  CHECK(r.out == "{\"d\":168,\"rho\":3,\"compact\":true}\n");
  r = run({"cover", "--sig", R"({"g":0,"r":1,"m":[2,3]})", "--lcm"});
  CHECK(Json::parse(r.out)["rho"] == 2);
  CHECK(run({"cover", "--sig", R"({"g":0,"r":1,"m":[2,3]})", "--index", "4"}).code == 1);
  r = run({"abelianize", "--sig", R"({"g":0,"r":0,"m":[2,4,4]})"});
  CHECK(abelian_from_json(Json::parse(r.out)) == AbelianGroup{0, {2, 4}});
  r = run({"abelianize", "--presentation", kData + "/a4.txt"});
  CHECK(Json::parse(r.out)["text"] == "Z/3");
}

TEST_CASE("cover verify") {
  auto r = run({"cover", "verify", "--sig", R"({"g":0,"r":0,"m":[2,3,7]})", "--perms", kData + "/psl27.perms"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["index"] == 168);
  r = run({"cover", "verify", "--sig", R"({"g":0,"r":0,"m":[2,3,8]})", "--perms", kData + "/psl27.perms"});
  CHECK(r.code == 3);
}

TEST_CASE("examples and triangle") {
  auto r = run({"verify", "example", "--name", "quartic-b3p1"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["pass"] == true);
  r = run({"triangle-rep", "--m", "2,3,7", "--tol", "1e-9"});
  CHECK(r.code == 0);
  const Json t = Json::parse(r.out);
  CHECK(t["matrices"].size() == 3);
  CHECK(t["pass"] == true);
  CHECK(run({"triangle-rep", "--m", "2,3,7", "--tol", "1e-30"}).code == 3);
}

TEST_CASE("text mode") {
  const auto r = run({"--text", "chi", "--sig", R"({"g":0,"r":0,"m":[2,3,7]})"});
  CHECK(r.code == 0);
  CHECK(r.out == "chi: -1/42\nkind: hyperbolic\n");
}

TEST_CASE("signature json round trip") {
  for (const Signature& s : {Signature{0, 0, {2, 3, 7}}, Signature{2, 3, {}}, Signature{1, 0, {5, 5}}}) {
    CHECK(parse_signature_json(to_json(s).dump()) == s);
  }
  const AbelianGroup a{1, {2, 6}};
  CHECK(abelian_from_json(to_json(a)) == a);
}

#include "orbicurve/json_io.hpp"

#include "orbicurve/errors.hpp"

namespace orbicurve {

Json to_json(const Signature& s) { return Json{{"g", s.g}, {"r", s.r}, {"m", s.m}}; }

Signature signature_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("g") || !j.contains("r") || !j.contains("m")) {
    throw MalformedSignature("signature must be an object with keys g, r, m");
  }
  for (const char* key : {"g", "r"}) {
    if (!j.at(key).is_number_integer()) throw MalformedSignature(std::string(key) + " must be an integer");
  }
  if (!j.at("m").is_array()) throw MalformedSignature("m must be an array");
  Signature s;
  s.g = j.at("g").get<int>();
  s.r = j.at("r").get<int>();
  for (const Json& e : j.at("m")) {
    if (!e.is_number_integer()) throw MalformedSignature("m entries must be integers");
    s.m.push_back(e.get<int>());
  }
  return canonicalize(std::move(s));
}

Signature parse_signature_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedSignature(std::string("signature is not valid JSON: ") + e.what());
  }
  return signature_from_json(j);
}

Json to_json(const AbelianGroup& a) {
  Json torsion = Json::array();
  for (const mpz_class& t : a.torsion) torsion.push_back(t.get_str());
  return Json{{"rank", a.rank}, {"torsion", torsion}, {"text", to_string(a)}};
}

AbelianGroup abelian_from_json(const Json& j) {
  AbelianGroup a;
  a.rank = j.at("rank").get<std::size_t>();
  for (const Json& t : j.at("torsion")) a.torsion.emplace_back(t.get<std::string>());
  return a;
}

Json order_json(const GroupOrder& o) { return o ? Json(*o) : Json("infinite"); }

Json to_json(const IsoVerdict& v) { return Json{{"isomorphic", v.isomorphic}, {"reason", v.tag()}}; }

Json to_json(const SerreVerdict& v) {
  return Json{{"verdict", to_string(v.outcome)},
              {"rule", to_string(v.rule)},
              {"degree", v.degree ? Json(*v.degree) : Json(nullptr)},
              {"justification", v.justification}};
}

Json to_json(const CoverReport& c) { return Json{{"d", c.d}, {"rho", c.rho}, {"compact", c.compact}}; }

Json to_json(const KernelCheck& k) {
  Json j{{"verdict", k.tag()}};
  if (k.verdict == KernelVerdict::TorsionFreeKernel) j["index"] = k.index;
  if (k.verdict == KernelVerdict::TorsionInKernel) j["cone_point"] = k.cone_point;
  return j;
}

Json to_json(const Check& c) { return Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}}; }

namespace {

Json checks_json(const std::vector<Check>& checks) {
  Json arr = Json::array();
  for (const Check& c : checks) arr.push_back(to_json(c));
  return arr;
}

Json matrix_json(const Matrix2d& m) { return Json{{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}; }

}  // namespace

Json to_json(const SuiteReport& r) {
  return Json{{"k", r.k}, {"pass", r.pass}, {"checks", checks_json(r.checks)}};
}

Json to_json(const ExampleReport& r) {
  return Json{{"name", r.name}, {"pass", r.pass}, {"facts", checks_json(r.facts)}, {"limitation", r.limitation}};
}

Json to_json(const TriangleRep& rep, const TriangleReport& report) {
  Json mats = Json::array();
  for (const Matrix2d& m : rep.generators) mats.push_back(matrix_json(m));
  return Json{{"m", rep.m},
              {"tolerance", rep.tolerance},
              {"matrices", mats},
              {"pass", report.pass},
              {"checks", checks_json(report.checks)}};
}

}  // namespace orbicurve

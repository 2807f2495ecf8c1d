#include "singwb/serialize.hpp"

namespace swb {

namespace {

json cyclo_to_json(const Cyclo& c) {
  if (c.is_rational()) return rational_str(c.rational());
  json coords = json::array();
  for (auto& q : c.coords()) coords.push_back(rational_str(q));
  return json{{"conductor", c.conductor()}, {"coords", coords}};
}

Cyclo cyclo_from_json(const json& j) {
  if (j.is_string()) return Cyclo(parse_rational(j.get<std::string>()));
  if (j.is_number_integer()) return Cyclo(j.get<long>());
  if (!j.is_object() || !j.contains("conductor") || !j.contains("coords"))
    throw Error(Err::Parse, "malformed cyclotomic scalar");
  std::vector<Rational> v;
  for (auto& x : j.at("coords")) v.push_back(parse_rational(x.get<std::string>()));
  int n = j.at("conductor").get<int>();
  if (static_cast<int>(v.size()) != euler_phi(n)) throw Error(Err::Parse, "coords length must be phi(conductor)");
  return Cyclo(n, v);
}

}  // namespace

json scalar_to_json(const Scalar& s) {
  if (s.is_rational()) return rational_str(s.rational());
  auto rel = s.radical_rel();
  if (!rel) return cyclo_to_json(s.cyclo());
  json parts = json::array();
  for (auto& p : s.parts()) parts.push_back(cyclo_to_json(p));
  return json{{"radical", {{"k", rel->k}, {"c", cyclo_to_json(rel->c)}}}, {"parts", parts}};
}

Scalar scalar_from_json(const json& j) {
  if (j.is_object() && j.contains("radical")) {
    auto r = std::make_shared<Radical>(
        Radical{j.at("radical").at("k").get<int>(), cyclo_from_json(j.at("radical").at("c"))});
    std::vector<Cyclo> parts;
    for (auto& p : j.at("parts")) parts.push_back(cyclo_from_json(p));
    if (static_cast<int>(parts.size()) != r->k) throw Error(Err::Parse, "radical parts length");
    return Scalar(r, parts);
  }
  return Scalar(cyclo_from_json(j));
}

json complex_to_json(const ComplexF& z) { return json::array({z.real(), z.imag()}); }

json poly_to_json(const MPoly& p) {
  json vars = json::array();
  if (p.vars())
    for (auto& n : p.vars()->names()) vars.push_back(n);
  json terms = json::array();
  for (auto& t : p.terms()) terms.push_back(json{{"c", scalar_to_json(t.c)}, {"e", t.e}});
  return json{{"vars", vars}, {"terms", terms}};
}

MPoly poly_from_json(const json& j) {
  try {
    Vars v = make_vars(j.at("vars").get<std::vector<std::string>>());
    std::vector<Term> ts;
    for (auto& t : j.at("terms")) ts.push_back({t.at("e").get<Exp>(), scalar_from_json(t.at("c"))});
    return MPoly::from_terms(v, std::move(ts));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Err::Parse, e.what());
  }
}

}  // namespace swb

#include "virstag/json_io.hpp"

namespace virstag {

json to_json(const Q& q) { return q.get_str(); }

namespace {

json poly_json(const Poly& p) {
  json out = json::array();
  for (int k = 0; k <= p.degree(); ++k) out.push_back(p.coeff(k).get_str());
  return out;
}

}  // namespace

json to_json(const RatFunc& f) {
  json out;
  out["num"] = poly_json(f.num());
  out["den"] = poly_json(f.den());
  out["text"] = factored_string(f);
  return out;
}

json to_json(const Scalar& s) {
  return std::visit([](const auto& v) { return to_json(v); }, s);
}

json to_json(const std::vector<Q>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const Structure& s) {
  json out;
  out["type"] = to_string(s.type);
  out["max_grade"] = s.max_grade;
  out["entries"] = json::array();
  for (const auto& e : s.entries) out["entries"].push_back({{"grade", e.grade}, {"sign", e.sign}, {"rank", e.rank}});
  return out;
}

json to_json(const StaggeredAnswer& a) {
  json out;
  out["status"] = a.exists ? "affine" : "empty";
  if (!a.reason.empty()) out["reason"] = a.reason;
  out["beta_dim"] = a.beta_dim;
  out["case"] = to_string(a.case_tag);
  if (!a.pathway.empty()) out["pathway"] = a.pathway;
  out["constraints"] = json::array();
  for (const auto& c : a.constraints) out["constraints"].push_back({{"coeffs", to_json(c.coeffs)}, {"offset", to_json(c.offset)}});
  if (a.exists) {
    json dirs = json::array();
    for (const auto& d : a.directions) dirs.push_back(to_json(d));
    out["solutions"] = {{"point", to_json(a.point)}, {"directions", dirs}};
  }
  return out;
}

Q q_from_json(const json& j) {
  if (j.is_number_integer()) return Q(j.get<long>());
  Q q(j.get<std::string>());
  q.canonicalize();
  return q;
}

}  // namespace virstag

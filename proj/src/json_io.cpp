#include "napgeo/json_io.hpp"

#include <stdexcept>

namespace napgeo {

using nlohmann::json;

json to_json(const Rat& r) { return r.str(); }

json to_json(const F3& x) { return json{{"a", to_json(x.a())}, {"b", to_json(x.b())}}; }

json to_json(const Point& p) { return json{{"x", to_json(p.x)}, {"y", to_json(p.y)}}; }

json to_json(const Circle& k) {
  return json{{"center", to_json(k.center)}, {"r2", to_json(k.r2)}};
}

json to_json(const NapoleonBundle& b) {
  json j = json::object();
  for_each_point(b, [&](const std::string& label, const Point& p) { j[label] = to_json(p); });
  for (std::size_t i = 0; i < b.flank_circles.size(); ++i) {
    j["K" + std::to_string(i + 1)] = to_json(b.flank_circles[i]);
  }
  return j;
}

json to_json(const AreaLedger& l, const NapoleonBundle* b) {
  json j{{"S", to_json(l.S)},
         {"flank_sum", to_json(l.flank_sum)},
         {"outer_napoleon", to_json(l.outer_napoleon)},
         {"inner_napoleon", to_json(l.inner_napoleon)},
         {"second_outer", to_json(l.second_outer)},
         {"second_inner", to_json(l.second_inner)}};
  j["four_second_sum"] = to_json(F3(4) * (l.second_outer + l.second_inner));
  if (b != nullptr) j["cevian_length2"] = to_json(dist2(b->base[0], b->outward_apexes[0]));
  return j;
}

json to_json(const CheckResult& r) {
  return json{{"name", r.name}, {"passed", r.passed}, {"details", r.details}};
}

json to_json(const Report& r) {
  json j;
  j["input"] = json{{"A", to_json(r.input[0])}, {"B", to_json(r.input[1])},
                    {"C", to_json(r.input[2])}};
  json results = json::array();
  for (const auto& c : r.results) results.push_back(to_json(c));
  j["results"] = std::move(results);
  j["all_passed"] = r.all_passed;
  if (r.ledger) j["ledger"] = to_json(*r.ledger, r.bundle ? &*r.bundle : nullptr);
  if (r.bundle) j["bundle"] = to_json(*r.bundle);
  return j;
}

Rat rat_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be a string");
  return Rat::parse(j.get<std::string>());
}

F3 f3_from_json(const json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b")) {
    throw std::invalid_argument("F3 must be an object with \"a\" and \"b\"");
  }
  return F3(rat_from_json(j.at("a")), rat_from_json(j.at("b")));
}

Point point_from_json(const json& j) {
  if (!j.is_object() || !j.contains("x") || !j.contains("y")) {
    throw std::invalid_argument("point must be an object with \"x\" and \"y\"");
  }
  return Point{f3_from_json(j.at("x")), f3_from_json(j.at("y"))};
}

}  // namespace napgeo

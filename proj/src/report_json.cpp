#include "hyperlag/report_json.hpp"

#include <fstream>
#include <stdexcept>

namespace hyperlag {

namespace {

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::optional<T> optional_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("sidecar is missing \"") + key + "\"");
  if (j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

Json rational_json(const Rational& q) { return to_fraction_string(q); }

void to_json(Json& j, const Surd& s) {
  j = Json{{"p", to_fraction_string(s.rational_part())},
           {"q", to_fraction_string(s.surd_part())},
           {"d", s.radicand()},
           {"float", s.to_double()}};
}

void to_json(Json& j, const CheckStep& step) {
  j = Json{{"name", step.name}, {"pass", step.pass}, {"detail", step.detail}};
}

void to_json(Json& j, const ConstructionMetadata& m) {
  Json parts = Json::array();
  for (const auto& [lo, hi] : m.parts) parts.push_back({lo, hi});
  j = Json{{"kind", m.kind},
           {"k", optional_json(m.k)},
           {"t", optional_json(m.t)},
           {"s", optional_json(m.s)},
           {"c", optional_json(m.c)},
           {"seed", optional_json(m.seed)},
           {"parts", std::move(parts)}};
}

ConstructionMetadata metadata_from_json(const Json& j) {
  try {
    ConstructionMetadata m;
    m.kind = j.at("kind").get<std::string>();
    m.k = optional_field<std::int64_t>(j, "k");
    m.t = optional_field<std::int64_t>(j, "t");
    m.s = optional_field<int>(j, "s");
    m.c = optional_field<double>(j, "c");
    m.seed = optional_field<std::uint64_t>(j, "seed");
    for (const auto& part : j.at("parts")) m.parts.emplace_back(part.at(0).get<Vertex>(), part.at(1).get<Vertex>());
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed sidecar: ") + e.what());
  }
}

void to_json(Json& j, const OptimizationResult& r) {
  const auto& x = r.argmax.values();
  j = Json{{"value", r.value},
           {"argmax", std::vector<double>(x.data(), x.data() + x.size())},
           {"support", r.support},
           {"stationarity_residual", r.stationarity_residual},
           {"starts_converged", r.starts_converged}};
}

void to_json(Json& j, const StationarityReport& r) {
  j = Json{{"pass", r.pass}, {"residual", r.residual}, {"multiplier", r.multiplier}};
}

void to_json(Json& j, const CaseVerdict& v) {
  j = Json{{"case_name", v.case_name},
           {"bound_claimed", v.bound_claimed},
           {"bound_found", v.bound_found},
           {"method", to_string(v.method)},
           {"tol", v.tol},
           {"pass", v.pass},
           {"witness", optional_json(v.witness)},
           {"checks", v.checks}};
}

void to_json(Json& j, const CertificateParameters& p) {
  j = Json{{"s", p.s},
           {"t", optional_json(p.t)},
           {"grid_resolution", p.grid_resolution},
           {"refine_iters", p.refine_iters},
           {"top_candidates", p.top_candidates},
           {"seed", p.seed},
           {"tol", p.tol},
           {"profile_tol", p.profile_tol}};
}

void to_json(Json& j, const CertificateReport& r) {
  j = Json{{"theorem", r.theorem.name()},
           {"k", r.theorem.kind == TheoremKind::kT3 ? Json(r.theorem.k) : Json(nullptr)},
           {"cases", r.cases},
           {"profiles_checked", r.profiles_checked},
           {"overall", r.overall},
           {"parameters", r.parameters}};
}

void to_json(Json& j, const DensityGainReport& r) {
  j = Json{{"theorem", r.theorem.name()},
           {"t", r.t},
           {"s", optional_json(r.s)},
           {"c", optional_json(r.c)},
           {"seed", optional_json(r.seed)},
           {"base_edges", r.base_edges},
           {"adder_edges", r.adder_edges},
           {"break_even_edges", r.break_even_edges},
           {"lower_bound", rational_json(r.lower_bound)},
           {"lower_bound_float", to_double(r.lower_bound)},
           {"target", r.target},
           {"margin", r.margin},
           {"predicted_margin", r.predicted_margin},
           {"pass", r.pass}};
}

void to_json(Json& j, const BoundChainReport& r) {
  j = Json{{"k", r.k},
           {"discriminant", rational_json(r.discriminant)},
           {"g_half", rational_json(r.g_half)},
           {"steps", r.steps},
           {"pass", r.pass}};
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
}

}  // namespace hyperlag

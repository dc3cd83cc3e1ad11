#include "relorbit/cli/json_io.hpp"

#include "relorbit/exact_numbers/scalar_format.hpp"

namespace relorbit::cli {
namespace {

using exact_numbers::format_exact;
using exact_numbers::parse_scalar;
using exact_numbers::QuadraticScalar;
using exact_numbers::Real;
using exact_numbers::RealSpec;
using exact_numbers::to_decimal;

constexpr const char* kModule = "cli";

std::string text_field(const Json& j, const char* key, const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw Error(ErrorCode::ParseError, kModule, std::string("field '") + key + "' must be a string or an integer");
}

}  // namespace

slit_surface::ELocusSurface surface_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("torus")) throw Error(ErrorCode::ParseError, kModule, "surface JSON needs a torus");
  const Json& torus = j.at("torus");
  flat_torus::NormalizedTorus t(parse_scalar(text_field(torus, "a", "1")),
                                RealSpec::parse(text_field(torus, "alpha", "golden")));
  slit_surface::TremorParam tremor;
  if (j.contains("tremor")) {
    const Json& tr = j.at("tremor");
    if (!tr.is_array() || tr.size() != 2) throw Error(ErrorCode::ParseError, kModule, "tremor must be a pair");
    Json wrap = {{"a1", tr[0]}, {"a2", tr[1]}};
    tremor.a1 = parse_scalar(text_field(wrap, "a1", "0"));
    tremor.a2 = parse_scalar(text_field(wrap, "a2", "0"));
  }
  return slit_surface::make_surface(std::move(t), parse_scalar(text_field(j, "N", "1")), tremor);
}

Json surface_to_json(const slit_surface::ELocusSurface& s) {
  return Json{{"torus", {{"a", exact_numbers::format_scalar(s.torus.a())}, {"alpha", s.torus.alpha().name()}}},
              {"N", exact_numbers::format_scalar(s.slit.N)},
              {"tremor", {exact_numbers::format_scalar(s.tremor.a1), exact_numbers::format_scalar(s.tremor.a2)}}};
}

Json scalar_json(const Real& x) { return Json{{"decimal", to_decimal(x, 40)}, {"exact", format_exact(x)}}; }

Json vector_json(const flat_torus::Vec2& v) {
  return Json{{"decimal", {to_decimal(v.x, 40), to_decimal(v.y, 40)}}, {"exact", {format_exact(v.x), format_exact(v.y)}}};
}

Json tuple_json(const slit_surface::PeriodTuple& t) {
  return Json{{"gamma1", vector_json(t.gamma1)},
              {"delta1", vector_json(t.delta1)},
              {"gamma2", vector_json(t.gamma2)},
              {"delta2", vector_json(t.delta2)},
              {"J", vector_json(t.J)}};
}

Json checkerboard_json(const checkerboard::Checkerboard& cb) {
  Json j{{"N", exact_numbers::format_scalar(cb.slit.N)},
         {"short_slit", {{"vector", vector_json(cb.short_slit.vector)}, {"anchor", cb.short_slit.anchor}}},
         {"B1", scalar_json(cb.B1)},
         {"B2", scalar_json(cb.B2)},
         {"imbalance", scalar_json(checkerboard::imbalance(cb))},
         {"signed_imbalance", scalar_json(checkerboard::signed_imbalance(cb))},
         {"theta", scalar_json(checkerboard::exchange_proportion(cb))},
         {"cells", cb.cells.size()},
         {"closed_form", cb.closed_form}};
  if (cb.q_index) j["q_index"] = *cb.q_index;
  return j;
}

Json record_json(const experiments::RecurrenceRecord& r) {
  return Json{{"j", r.j},
              {"q_j", r.q.get_str()},
              {"t_j", scalar_json(r.t)},
              {"norm", scalar_json(r.norm)},
              {"s_j", scalar_json(r.s)},
              {"theta", scalar_json(r.theta)},
              {"imbalance", scalar_json(r.imbalance)},
              {"distance", r.distance},
              {"gap", scalar_json(r.gap)}};
}

Json verdict_json(const experiments::RecurrenceVerdict& v) {
  Json j{{"verdict", experiments::verdict_name(v)}};
  if (const auto* r = std::get_if<experiments::RecurrentEvidence>(&v)) {
    Json idx = Json::array();
    for (std::size_t i : r->indices) idx.push_back(i + 1);
    j["subsequence"] = idx;
  } else if (const auto* s = std::get_if<experiments::SeparatedEvidence>(&v)) {
    j["min_gap"] = s->min_gap;
  }
  return j;
}

Json verdict_json(const exact_numbers::ApproximabilityVerdict& v) {
  Json j{{"verdict", experiments::verdict_name(v)}};
  if (const auto* b = std::get_if<exact_numbers::BadlyApproxEvidence>(&v)) {
    j["bound"] = b->bound.get_str();
    j["depth"] = b->depth;
  } else {
    const auto& w = std::get<exact_numbers::WellApproxEvidence>(v);
    j["index"] = w.index;
    j["quotient"] = w.quotient.get_str();
  }
  return j;
}

Json error_json(const Error& e) {
  return Json{{"code", std::string(to_string(e.code()))}, {"module", e.module()}, {"message", e.what()}};
}

}  // namespace relorbit::cli

#include "projframe/scene.hpp"

#include "projframe/error.hpp"

namespace projframe {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::Parse, std::string("missing field '") + key + "'");
  return j.at(key);
}

Json frame_to_json(const AdaptedFrame& f) {
  Json vertices = Json::array();
  for (const auto& v : f.frame().vertices()) vertices.push_back(to_json(v.rep()));
  return Json{{"vertices", std::move(vertices)}, {"unit", to_json(f.unit().rep())}};
}

AdaptedFrame frame_from_json(const Json& j, const ProjPoint& center) {
  const Json& vs = field(j, "vertices");
  if (!vs.is_array()) throw Error(ErrorCode::Parse, "'vertices' must be an array");
  std::vector<ProjPoint> vertices;
  for (const auto& v : vs) vertices.emplace_back(vec_from_json(v));
  return AdaptedFrame(Frame(std::move(vertices), ProjPoint(vec_from_json(field(j, "unit")))), center);
}

}  // namespace

const AdaptedFrame& Scene::frame(const std::string& name) const {
  const auto it = frames.find(name);
  if (it == frames.end()) throw Error(ErrorCode::InvalidArgument, "no frame named '" + name + "'");
  return it->second;
}

void Scene::validate() const {
  if (center.ambient_dim() != dim) throw Error(ErrorCode::MixedDimensions, "center does not live in P_dim");
  for (const auto& [name, f] : frames) {
    if (f.ambient_dim() != dim) throw Error(ErrorCode::MixedDimensions, "frame '" + name + "' has the wrong dimension");
    if (f.center() != center) throw Error(ErrorCode::DifferentCenters, "frame '" + name + "' has another center");
  }
  for (const auto& [a, b] : pairs) {
    frame(a);
    frame(b);
  }
}

Json to_json(const Rational& q) { return q.to_string(); }

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw Error(ErrorCode::Parse, "expected a rational string, got " + j.dump());
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::Parse, "expected a non-empty array of rationals");
  Vec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json to_json(const Scene& scene) {
  Json frames = Json::object();
  for (const auto& [name, f] : scene.frames) frames[name] = frame_to_json(f);
  Json pairs = Json::array();
  for (const auto& [a, b] : scene.pairs) pairs.push_back(Json::array({a, b}));
  return Json{{"dim", scene.dim}, {"center", to_json(scene.center.rep())}, {"frames", std::move(frames)},
              {"pairs", std::move(pairs)}};
}

Scene scene_from_json(const Json& j) {
  const Json& dim = field(j, "dim");
  if (!dim.is_number_unsigned()) throw Error(ErrorCode::Parse, "'dim' must be a non-negative integer");
  Scene scene(dim.get<std::size_t>(), ProjPoint(vec_from_json(field(j, "center"))));

  const Json& frames = field(j, "frames");
  if (!frames.is_object()) throw Error(ErrorCode::Parse, "'frames' must be an object");
  for (const auto& [name, f] : frames.items()) scene.frames.emplace(name, frame_from_json(f, scene.center));

  if (j.contains("pairs")) {
    for (const auto& p : j.at("pairs")) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
        throw Error(ErrorCode::Parse, "each pair must be [name, name]");
      }
      scene.pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
  }
  scene.validate();
  return scene;
}

Json to_json(const Subspace& s) {
  Json basis = Json::array();
  for (std::size_t r = 0; r < s.basis().rows(); ++r) basis.push_back(to_json(s.basis().row(r)));
  return Json{{"dim", s.dim()}, {"basis", std::move(basis)}};
}

Json to_json(const DesarguesReport& report) {
  Json points = Json::array();
  for (const auto& b : report.b_points) points.push_back(Json{{"label", b.label()}, {"point", b.point.to_string()}});
  return Json{
      {"strict", report.strict},
      {"b_points", std::move(points)},
      {"geometric_locus", to_json(report.geometric_locus)},
      {"analytic_hyperplane", report.analytic_hyperplane.to_string()},
      {"is_hyperplane", report.is_hyperplane},
      {"passes_through_center", report.passes_through_center},
      {"h_equals_one", report.h_equals_one},
      {"equivalent", report.equivalent},
  };
}

Json to_json(const TransitionCoeffs& t) {
  Json mat = Json::array();
  for (std::size_t i = 0; i < t.alpha_mat.rows(); ++i) mat.push_back(to_json(t.alpha_mat.row(i)));
  return Json{{"alpha_mat", std::move(mat)}, {"alpha_cov", to_json(t.alpha_cov)}};
}

}  // namespace projframe

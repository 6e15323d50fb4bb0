#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "projframe/desargues.hpp"
#include "projframe/frames.hpp"

namespace projframe {

using Json = nlohmann::ordered_json;

/// Named adapted frames sharing one center, plus the pairs to analyze.
struct Scene {
  Scene(std::size_t ambient_dim, ProjPoint center_point) : dim(ambient_dim), center(std::move(center_point)) {}

  std::size_t dim = 0;
  ProjPoint center;
  std::map<std::string, AdaptedFrame> frames;
  std::vector<std::pair<std::string, std::string>> pairs;

  /// Throws Error{InvalidArgument} for unknown names.
  const AdaptedFrame& frame(const std::string& name) const;
  /// Checks that frames share dim and center and that pairs name known frames.
  void validate() const;
};

/// Scalars travel as "p/q" strings ("p" for integers). Parsing also accepts
/// JSON integers.
Json to_json(const Rational& q);
Json to_json(const Vec& v);
Rational rational_from_json(const Json& j);
Vec vec_from_json(const Json& j);

/// Scene schema:
/// { "dim": n, "center": [..], "frames": { name: { "vertices": [[..]..], "unit": [..] } },
///   "pairs": [[name, name], ..] }
Json to_json(const Scene& scene);
/// Throws Error{Parse} on schema violations and the usual frame errors on
/// invalid geometry.
Scene scene_from_json(const Json& j);

Json to_json(const Subspace& s);
Json to_json(const DesarguesReport& report);
Json to_json(const TransitionCoeffs& t);

}  // namespace projframe

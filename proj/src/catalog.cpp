#include <charconv>

#include "toric/polytope.hpp"

namespace toric {

namespace {

AffineForm form(std::initializer_list<std::int64_t> u, std::int64_t b) {
  IntVector normal(static_cast<Eigen::Index>(u.size()));
  Eigen::Index i = 0;
  for (auto c : u) normal(i++) = c;
  return AffineForm(std::move(normal), Rational(b));
}

AffineForm coordinate_form(Eigen::Index n, Eigen::Index i, std::int64_t sign, std::int64_t b) {
  return AffineForm(IntVector(IntVector::Unit(n, i) * sign), Rational(b));
}

std::int64_t param(std::span<const std::int64_t> params, std::size_t i, std::int64_t fallback) {
  return i < params.size() ? params[i] : fallback;
}

}  // namespace

DelzantPolytope catalog(std::string_view name, std::span<const std::int64_t> params) {
  if (name == "simplex" || name == "cube") {
    const std::int64_t n = param(params, 0, 2);
    const std::int64_t scale = param(params, 1, 1);
    if (n < 1 || n > 6 || scale < 1 || params.size() > 2)
      throw Error(ErrorCode::BadParams, std::string(name) + " expects (n in 1..6, scale >= 1)");
    std::vector<AffineForm> forms;
    for (Eigen::Index i = 0; i < n; ++i) forms.push_back(coordinate_form(n, i, 1, 0));
    if (name == "simplex") {
      forms.emplace_back(IntVector(IntVector::Constant(n, -1)), Rational(-scale));
    } else {
      for (Eigen::Index i = 0; i < n; ++i) forms.push_back(coordinate_form(n, i, -1, -scale));
    }
    return DelzantPolytope::from_forms(n, std::move(forms));
  }
  if (name == "hirzebruch") {
    const std::int64_t a = param(params, 0, 1);
    if (a < 0 || params.size() > 1) throw Error(ErrorCode::BadParams, "hirzebruch expects a >= 0");
    // {x >= 0, y >= 0, -a x - y >= -(a + 1), -x >= -1}
    return DelzantPolytope::from_forms(2, {form({1, 0}, 0), form({0, 1}, 0), form({-a, -1}, -(a + 1)),
                                           form({-1, 0}, -1)});
  }
  if (name == "blowup_cp2") {
    const std::int64_t k = param(params, 0, 1);
    if (k < 1 || k > 3 || params.size() > 1) throw Error(ErrorCode::BadParams, "blowup_cp2 expects k in {1,2,3}");
    // CP^2 of size 3 with corners of size 1 cut at (0,0), (3,0), (0,3) in turn.
    std::vector<AffineForm> forms{form({1, 0}, 0), form({0, 1}, 0), form({-1, -1}, -3), form({1, 1}, 1)};
    if (k >= 2) forms.push_back(form({-1, 0}, -2));
    if (k >= 3) forms.push_back(form({0, -1}, -2));
    return DelzantPolytope::from_forms(2, std::move(forms));
  }
  throw Error(ErrorCode::UnknownName, "unknown catalog entry '" + std::string(name) + "'");
}

DelzantPolytope catalog(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  std::vector<std::int64_t> params;
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  while (colon != std::string_view::npos) {
    const auto next = rest.find(':');
    const std::string_view token = rest.substr(0, next);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw Error(ErrorCode::BadParams, "bad catalog parameter '" + std::string(token) + "'");
    params.push_back(value);
    if (next == std::string_view::npos) break;
    rest = rest.substr(next + 1);
  }
  return catalog(name, params);
}

std::vector<std::string> standard_catalog() {
  return {"simplex:1:1", "simplex:2:1", "simplex:3:1", "cube:2:1",     "cube:3:1",
          "hirzebruch:0", "hirzebruch:1", "blowup_cp2:1", "blowup_cp2:2", "blowup_cp2:3"};
}

}  // namespace toric

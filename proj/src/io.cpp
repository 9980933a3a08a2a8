#include "toric/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace toric {

std::string rational_to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw Error(ErrorCode::ParseError, "rational must be a string \"p/q\" or an integer");
  const auto s = j.get<std::string>();
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    const BigInt den(s.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
    return Rational(BigInt(s.substr(0, slash)), den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
  }
}

namespace {

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Json vector_json(const Vec<double>& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

Json to_json(const DelzantPolytope& p, bool with_vertices) {
  Json j;
  j["n"] = p.dimension();
  j["forms"] = Json::array();
  for (const auto& f : p.forms()) {
    Json u = Json::array();
    for (Eigen::Index i = 0; i < f.normal().size(); ++i) u.push_back(f.normal()(i));
    j["forms"].push_back({{"u", u}, {"b", rational_to_string(f.offset())}});
  }
  if (with_vertices) {
    j["vertices"] = Json::array();
    for (const auto& v : p.vertices()) {
      Json c = Json::array();
      for (Eigen::Index i = 0; i < v.coordinates.size(); ++i) c.push_back(rational_to_string(v.coordinates(i)));
      j["vertices"].push_back(c);
    }
  }
  return j;
}

DelzantPolytope polytope_from_json(const Json& j) {
  return guarded([&] {
    const auto n = j.at("n").get<Eigen::Index>();
    if (n < 1) throw Error(ErrorCode::ParseError, "\"n\" must be positive");
    std::vector<AffineForm> forms;
    for (const auto& f : j.at("forms")) {
      const auto u = f.at("u").get<std::vector<std::int64_t>>();
      if (static_cast<Eigen::Index>(u.size()) != n) throw Error(ErrorCode::ParseError, "normal length differs from n");
      forms.emplace_back(Eigen::Map<const IntVector>(u.data(), n), rational_from_json(f.at("b")));
    }
    return DelzantPolytope::from_forms(n, std::move(forms));
  });
}

Json to_json(const Polynomial& h) {
  Json monomials = Json::array();
  for (const auto& [e, c] : h.terms()) monomials.push_back({{"exponents", e}, {"coeff", rational_to_string(c)}});
  return {{"monomials", monomials}};
}

Polynomial polynomial_from_json(const Json& j, Eigen::Index n) {
  return guarded([&] {
    std::map<Polynomial::Exponents, Rational> terms;
    for (const auto& m : j.at("monomials")) {
      auto e = m.at("exponents").get<Polynomial::Exponents>();
      if (static_cast<Eigen::Index>(e.size()) != n) throw Error(ErrorCode::ParseError, "exponent length differs from n");
      terms[e] += rational_from_json(m.at("coeff"));
    }
    return Polynomial(n, std::move(terms));
  });
}

Json to_json(const SymplecticPotential& pot) {
  return {{"polytope", to_json(pot.polytope())}, {"h", to_json(pot.perturbation())}};
}

SymplecticPotential potential_from_json(const Json& j) {
  return guarded([&] {
    DelzantPolytope p = polytope_from_json(j.at("polytope"));
    const Eigen::Index n = p.dimension();
    Polynomial h = j.contains("h") ? polynomial_from_json(j.at("h"), n) : Polynomial(n);
    return SymplecticPotential(std::move(p), std::move(h));
  });
}

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path.string() + "'");
  return guarded([&] { return Json::parse(in); });
}

DelzantPolytope load_polytope(const std::filesystem::path& path) { return polytope_from_json(load_json(path)); }

SymplecticPotential load_potential(const std::filesystem::path& path) { return potential_from_json(load_json(path)); }

Json to_json(const DelzantReport& report, const DelzantPolytope& p) {
  Json vertices = Json::array();
  for (const auto& r : report.vertices) {
    Json c = Json::array();
    const auto& x = p.vertices()[r.index].coordinates;
    for (Eigen::Index i = 0; i < x.size(); ++i) c.push_back(rational_to_string(x(i)));
    vertices.push_back({{"coordinates", c},
                        {"incident_facets", r.incident_count},
                        {"edges", r.edge_count},
                        {"determinant", r.determinant.str()},
                        {"delzant", r.passes}});
  }
  return {{"delzant", report.is_delzant}, {"vertices", vertices}};
}

Json to_json(const AffineFit& fit) {
  return {{"constant", fit.constant},
          {"gradient", vector_json(fit.gradient)},
          {"max_residual", fit.max_residual},
          {"samples", fit.samples}};
}

Json to_json(const SolitonData& data, double tolerance) {
  return {{"a", vector_json(data.a)},
          {"gradient_residual", data.gradient_residual},
          {"iterations", data.iterations},
          {"tolerance", tolerance}};
}

Json to_json(const TheoremVerdict& v) {
  Json limits = Json::array();
  for (double q : v.vertex_limits) limits.push_back(finite_or_null(q));
  const auto& c = v.certificates;
  return {{"conclusion", to_string(v.conclusion)},
          {"reason", v.reason},
          {"affine_fit", to_json(v.fit)},
          {"vertex_values", v.vertex_values},
          {"rank", v.rank},
          {"n", v.dimension},
          {"certificates",
           {{"q_affine", c.q_affine},
            {"vertices_vanish", c.vertices_vanish},
            {"vertices_span", c.vertices_span},
            {"fit_vanishes", c.fit_vanishes},
            {"soliton_vanishes", c.soliton_vanishes},
            {"fit_bound", c.fit_bound},
            {"q_min", v.q_min},
            {"q_max", v.q_max},
            {"vertex_limits", limits},
            {"vertex_probe_t", v.vertex_probe_t},
            {"centroid_q", finite_or_null(c.centroid_q)},
            {"centroid_min_eigenvalue", finite_or_null(c.centroid_min_eigenvalue)},
            {"soliton_norm_bound", finite_or_null(c.soliton_norm_bound)}}},
          {"tolerances",
           {{"relative", v.relative_tolerance},
            {"affinity", v.affinity_tolerance},
            {"vertex", v.vertex_tolerance}}}};
}

void write_csv(std::ostream& os, const std::vector<Vec<double>>& points, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& values) {
  if (points.empty()) return;
  const Eigen::Index n = points.front().size();
  for (Eigen::Index i = 0; i < n; ++i) os << (i ? "," : "") << "x_" << (i + 1);
  for (const auto& c : columns) os << ',' << c;
  os << '\n';
  char buf[32];
  for (std::size_t r = 0; r < points.size(); ++r) {
    for (Eigen::Index i = 0; i < n; ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", points[r](i));
      os << (i ? "," : "") << buf;
    }
    for (const auto& col : values) {
      std::snprintf(buf, sizeof buf, "%.17g", col[r]);
      os << ',' << buf;
    }
    os << '\n';
  }
}

}  // namespace toric

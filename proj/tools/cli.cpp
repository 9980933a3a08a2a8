#include "cli.hpp"

#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "toric/io.hpp"

namespace toric::cli {

int exit_code(Conclusion c) noexcept {
  switch (c) {
    case Conclusion::Einstein: return kOk;
    case Conclusion::HypothesisFails: return kHypothesisFails;
    case Conclusion::Inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

void RunConfig::validate() const {
  if (grid < 3) throw Error(ErrorCode::BadParams, "--grid must be at least 3");
  if (tol && !(*tol > 0)) throw Error(ErrorCode::BadParams, "--tol must be positive");
  if (!(margin > 0)) throw Error(ErrorCode::BadParams, "--margin must be positive");
}

namespace {

DelzantPolytope polytope_input(const RunConfig& cfg) {
  if (!cfg.catalog.empty()) return catalog(cfg.catalog);
  if (cfg.inputs.empty() || cfg.inputs[0].empty())
    throw Error(ErrorCode::ParseError, "no polytope given (file or --catalog)");
  return load_polytope(cfg.inputs[0]);
}

SymplecticPotential potential_input(const RunConfig& cfg) {
  if (!cfg.catalog.empty()) return SymplecticPotential(catalog(cfg.catalog));
  if (cfg.inputs.empty() || cfg.inputs[0].empty())
    throw Error(ErrorCode::ParseError, "no potential given (file or --catalog)");
  return load_potential(cfg.inputs[0]);
}

std::vector<Vec<double>> sample_points(const DelzantPolytope& p, const RunConfig& cfg) {
  if (cfg.points > 0) return random_interior_points(p, cfg.points, cfg.seed, cfg.margin * diameter(p));
  return interior_grid(p, GridSpec{cfg.grid, cfg.margin});
}

Vec<double> soliton_input(const RunConfig& cfg, Eigen::Index n) {
  if (cfg.a.empty()) return Vec<double>::Zero(n);
  if (static_cast<Eigen::Index>(cfg.a.size()) != n)
    throw Error(ErrorCode::BadParams, "--a must have " + std::to_string(n) + " components");
  return Eigen::Map<const Vec<double>>(cfg.a.data(), n);
}

int cmd_delzant(const RunConfig& cfg, std::ostream& out) {
  const DelzantPolytope p = polytope_input(cfg);
  const auto report = check_delzant(p);
  std::vector<RationalVector> coords;
  for (const auto& v : p.vertices()) coords.push_back(v.coordinates);
  const auto rank = affine_span_rank(coords);
  if (cfg.format == "json") {
    Json j = to_json(report, p);
    j["affine_span_rank"] = rank;
    j["n"] = p.dimension();
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : report.vertices) {
      out << "vertex (";
      const auto& x = p.vertices()[r.index].coordinates;
      for (Eigen::Index i = 0; i < x.size(); ++i) out << (i ? ", " : "") << x(i).str();
      out << ") facets=" << r.incident_count << " |det|=" << r.determinant.str() << ' '
          << (r.passes ? "ok" : "FAIL") << '\n';
    }
    out << "affine span rank " << rank << " of " << p.dimension() << '\n';
    out << (report.is_delzant ? "Delzant" : "not Delzant") << '\n';
  }
  return report.is_delzant ? kOk : kCheckFailed;
}

int cmd_curvature(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const SymplecticPotential pot = potential_input(cfg);
  const auto points = sample_points(pot.polytope(), cfg);
  const double tol = cfg.tol.value_or(1e-6);
  const auto report = extremality_check(pot, points, tol);

  std::vector<std::string> columns{"s"};
  std::vector<std::vector<double>> values(1);
  for (const auto& s : report.samples) values[0].push_back(s.value);
  if (!cfg.a.empty()) {
    const Vec<double> a = soliton_input(cfg, pot.dimension());
    columns.push_back("grad_f_sq");
    values.emplace_back();
    for (const auto& x : points) values[1].push_back(grad_length_squared(a, pot, x));
  }

  Json summary{{"extremal", report.is_extremal},
               {"affine_fit", to_json(report.fit)},
               {"range", report.range},
               {"tolerances", {{"relative", tol}, {"effective", report.tolerance}, {"margin", cfg.margin}}}};
  if (cfg.format == "json") {
    Json samples = Json::array();
    for (std::size_t r = 0; r < points.size(); ++r) {
      Json row{{"x", std::vector<double>(points[r].data(), points[r].data() + points[r].size())}};
      for (std::size_t c = 0; c < columns.size(); ++c) row[columns[c]] = values[c][r];
      samples.push_back(row);
    }
    summary["samples"] = samples;
    out << summary.dump(2) << '\n';
  } else {
    write_csv(out, points, columns, values);
    err << summary.dump() << '\n';
  }
  return report.is_extremal ? kOk : kCheckFailed;
}

int cmd_soliton(const RunConfig& cfg, std::ostream& out) {
  const FanoPolytope fp = fano_normalize(polytope_input(cfg));
  SolitonOptions options;
  options.tolerance = cfg.tol.value_or(options.tolerance);
  const SolitonData data = soliton_vector(fp, options);
  Json j = to_json(data, options.tolerance);
  j["polytope"] = to_json(fp.polytope(), true);
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const std::string potential_path = cfg.inputs.size() > 1 ? cfg.inputs[1] : std::string();
  std::optional<SymplecticPotential> pot;
  Vec<double> a;
  if (cfg.from_soliton) {
    const FanoPolytope fp = fano_normalize(polytope_input(cfg));
    a = soliton_vector(fp).a;
    pot.emplace(potential_path.empty() ? SymplecticPotential(fp.polytope()) : load_potential(potential_path));
  } else {
    pot.emplace(potential_path.empty() ? SymplecticPotential(polytope_input(cfg)) : load_potential(potential_path));
    a = soliton_input(cfg, pot->dimension());
  }
  const auto points = sample_points(pot->polytope(), cfg);
  const TheoremVerdict verdict = verify_theorem(*pot, a, points, cfg.tol.value_or(1e-6));
  Json j = to_json(verdict);
  j["a"] = std::vector<double>(a.data(), a.data() + a.size());
  j["tolerances"]["margin"] = cfg.margin;
  j["tolerances"]["grid"] = cfg.grid;
  out << j.dump(2) << '\n';
  return exit_code(verdict.conclusion);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toric Kahler geometry toolkit: Delzant checks, Abreu curvature, solitons"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--catalog", cfg.catalog, "Catalog entry, e.g. simplex:2:1, cube:2:1, hirzebruch:1");
    sub->add_option("--tol", cfg.tol, "Relative tolerance");
    sub->add_option("--grid", cfg.grid, "Grid points per axis");
    sub->add_option("--margin", cfg.margin, "Boundary margin as a fraction of the diameter");
    sub->add_option("--seed", cfg.seed, "Seed for random interior points");
    sub->add_option("--points", cfg.points, "Use this many seeded random points instead of the grid");
  };

  auto* delzant = app.add_subcommand("delzant", "Check the Delzant condition of a polytope");
  delzant->add_option("polytope", cfg.inputs, "Polytope JSON file");
  delzant->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  add_common(delzant);

  auto* curvature = app.add_subcommand("curvature", "Sample the scalar curvature and test affinity");
  curvature->add_option("potential", cfg.inputs, "Potential JSON file");
  curvature->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  curvature->add_option("--a", cfg.a, "Also emit |grad f|^2 for f = <a, x>")->delimiter(',');
  add_common(curvature);

  auto* soliton = app.add_subcommand("soliton", "Compute the soliton vector of a Fano polytope");
  soliton->add_option("polytope", cfg.inputs, "Polytope JSON file (normals are used)");
  soliton->add_option("--format", cfg.format, "json")->check(CLI::IsMember({"json"}));
  add_common(soliton);

  auto* verify = app.add_subcommand("verify", "Replay the extremal-soliton argument on a potential");
  std::string polytope_file, potential_file;
  verify->add_option("--polytope", polytope_file, "Polytope JSON file");
  verify->add_option("--potential", potential_file, "Potential JSON file (Guillemin potential if omitted)");
  verify->add_option("--a", cfg.a, "Soliton vector components")->delimiter(',');
  verify->add_flag("--from-soliton", cfg.from_soliton, "Use the soliton vector of the anticanonical polytope");
  verify->add_option("--format", cfg.format, "json")->check(CLI::IsMember({"json"}));
  add_common(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (verify->parsed()) cfg.inputs = {polytope_file, potential_file};
    cfg.validate();
    if (delzant->parsed()) return cmd_delzant(cfg, out);
    if (curvature->parsed()) return cmd_curvature(cfg, out, err);
    if (soliton->parsed()) return cmd_soliton(cfg, out);
    return cmd_verify(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::ParseError:
      case ErrorCode::BadParams:
      case ErrorCode::UnknownName:
      case ErrorCode::InvalidForm:
        return kInputError;
      default:
        return kCheckFailed;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace toric::cli

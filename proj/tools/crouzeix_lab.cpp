// crouzeix_lab: reproduction runs for the KMS bounds.
//
//   crouzeix_lab bounds --k 3 [--n-disc 1205] [--out DIR]
//   crouzeix_lab boundary --k 4 [--format csv,svg,json]
//   crouzeix_lab convergence [--k 3]
//   crouzeix_lab omega [--samples 1000] [--format json,csv]
//   crouzeix_lab all
//
// Exit codes: 0 ok, 2 numerical failure, 3 a checked bound or window does not
// hold, 64 usage, 74 I/O.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "crouzeix/bounds.hpp"
#include "crouzeix/conformal.hpp"
#include "crouzeix/errors.hpp"
#include "crouzeix/kms.hpp"
#include "crouzeix/omega.hpp"
#include "crouzeix/reference_values.hpp"
#include "crouzeix/report.hpp"

namespace {

using namespace crouzeix;

constexpr int kExitOk = 0;
constexpr int kExitNumerical = 2;
constexpr int kExitAssertion = 3;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

constexpr int kFullResolution = 1205;
constexpr double kTableTolerance = 1e-5;

struct RunConfig {
  int k = 3;
  int n_disc = kFullResolution;
  int samples = reference::kOmegaSamples;
  std::filesystem::path out_dir = ".";
  std::set<std::string> formats;
};

struct IoError {
  std::string what;
};

void write_file(const RunConfig& cfg, const std::string& name, const std::string& body) {
  std::error_code ec;
  std::filesystem::create_directories(cfg.out_dir, ec);
  const std::filesystem::path path = cfg.out_dir / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError{"cannot open " + path.string()};
  f << body;
  if (!f) throw IoError{"cannot write " + path.string()};
}

bool wants(const RunConfig& cfg, const std::string& format) { return cfg.formats.count(format) != 0; }

int cmd_bounds(const RunConfig& cfg) {
  const conformal::ConformalData data = conformal::map_kms(cfg.k, cfg.n_disc);
  const bounds::BoundReport r = bounds::bracket(cfg.k, data);

  report::Json j;
  j["conformal"] = report::to_json(data);
  j["bounds"] = report::to_json(r);
  write_file(cfg, "bounds_" + std::to_string(cfg.k) + ".json", report::dump(j));

  const reference::Bracket t = reference::table1(cfg.k);
  std::printf("A_%d  n=%d nn=%zu\n", cfg.k, cfg.n_disc, data.node_count);
  std::printf("  lower %.10f  upper %.10f  (table %.7f .. %.7f)\n", r.lower, r.upper, t.lower, t.upper);
  std::printf("  jordan residual %.2e  ||H^-1 M H|| = %.12f\n", r.jordan_residual, r.contraction_norm);
  if (r.lower_six_value_variant) std::printf("  six-value root list gives %.10f\n", *r.lower_six_value_variant);

  if (!r.bracket_valid) {
    std::fprintf(stderr, "bracket violated\n");
    return kExitAssertion;
  }
  if (cfg.n_disc < kFullResolution) {
    std::fprintf(stderr, "warning: n-disc %d is coarser than %d; table values not checked\n", cfg.n_disc,
                 kFullResolution);
    return kExitOk;
  }
  if (std::abs(r.lower - t.lower) > kTableTolerance || std::abs(r.upper - t.upper) > kTableTolerance) {
    std::fprintf(stderr, "bracket differs from the table by more than %.0e\n", kTableTolerance);
    return kExitAssertion;
  }
  return kExitOk;
}

int cmd_boundary(const RunConfig& cfg) {
  const kms::BoundaryDiscretization d = kms::discretize_boundary(cfg.k, cfg.n_disc);
  const std::string stem = "boundary_" + std::to_string(cfg.k);
  if (wants(cfg, "csv")) write_file(cfg, stem + ".csv", kms::boundary_csv(d));
  if (wants(cfg, "svg")) write_file(cfg, stem + ".svg", report::boundary_svg(d));
  if (wants(cfg, "json")) {
    const kms::BoundaryDescription desc = kms::describe_boundary(cfg.k);
    report::Json j;
    j["k"] = d.k;
    j["n"] = d.n_algebraic;
    j["nn"] = d.node_count();
    j["n_segment"] = d.n_segment;
    j["segment_step"] = report::number(d.segment_step);
    j["segment_half_height"] = report::number(desc.segment_half_height);
    report::Json cusps = report::Json::array();
    for (double a : desc.cusp_angles) cusps.push_back(report::number(a));
    j["cusp_angles"] = cusps;
    report::Json flats = report::Json::array();
    for (Complex z : desc.flat_points) flats.push_back({report::number(z.real()), report::number(z.imag())});
    j["flat_points"] = flats;
    write_file(cfg, stem + ".json", report::dump(j));
  }
  std::printf("W(A_%d): %zu nodes (%d on the upper arc, %d on the upper segment half)\n", cfg.k,
              d.node_count(), d.n_algebraic + 1, d.n_segment);
  return kExitOk;
}

int cmd_convergence(const RunConfig& cfg) {
  std::vector<int> counts(reference::kConvergenceCounts.begin(), reference::kConvergenceCounts.end());
  counts.push_back(reference::kConvergenceReference);
  const conformal::ConvergenceTable t = conformal::convergence_study(cfg.k, counts);
  write_file(cfg, "convergence_" + std::to_string(cfg.k) + ".json", report::dump(report::to_json(t)));

  bool ok = std::abs(t.slope_a + 4.0) <= 0.5;
  std::printf("A_%d, reference nn=%d: a=%.13f b=%.13f\n", cfg.k, t.reference_count, t.a_reference, t.b_reference);
  std::printf("%6s %16s %12s %12s %12s\n", "nn", "a", "a_ratio", "b_ratio", "g2_ratio");
  for (const auto& r : t.rows) {
    std::printf("%6d %16.13f %12.4f %12.4f %12.4f\n", r.node_count, r.a, r.a_ratio, r.b_ratio, r.g2_ratio);
    if (cfg.k == 3) {
      ok = ok && r.a_ratio >= reference::kRatioAMin && r.a_ratio <= reference::kRatioAMax;
      ok = ok && r.b_ratio >= reference::kRatioBMin && r.b_ratio <= reference::kRatioBMax;
    }
  }
  std::printf("slope a %.3f  slope b %.3f\n", t.slope_a, t.slope_b);
  if (!ok) {
    std::fprintf(stderr, "convergence windows do not hold\n");
    return kExitAssertion;
  }
  return kExitOk;
}

int cmd_omega(const RunConfig& cfg) {
  const omega::RationalMap f = omega::RationalMap::published();
  omega::validate(f);
  const omega::InclusionReport r = omega::verify_inclusion(f, cfg.samples);
  const omega::H1Result h = omega::h1_for(f);

  report::Json j;
  j["inclusion"] = report::to_json(r);
  j["h1"] = report::to_json(h);
  write_file(cfg, "omega.json", report::dump(j));
  if (wants(cfg, "csv")) write_file(cfg, "omega_curve.csv", omega::curve_csv(f, cfg.samples));

  std::printf("samples %d\n", r.samples);
  std::printf("  (a) max p %.7f  quotient %.5f  cap %.5f  bound %.7f\n", r.max_p_cardioid, r.max_dp_quotient,
              r.cap_a, r.cardioid_certified_bound);
  std::printf("  (b) min Re %.7f  quotient %.5f  cap %.5f  bound %.7f\n", r.min_re_segment, r.max_dre_quotient,
              r.cap_b, r.segment_certified_bound);
  std::printf("  included %s  cond(H1) %.10f\n", r.included ? "yes" : "no", h.cond);

  bool ok = r.included;
  if (cfg.samples == reference::kOmegaSamples) {
    ok = ok && r.cardioid_certified_bound < reference::kOmegaCardioidBound &&
         r.segment_certified_bound > reference::kOmegaSegmentBound;
  }
  if (!ok) {
    std::fprintf(stderr, "inclusion bounds do not hold\n");
    return kExitAssertion;
  }
  return kExitOk;
}

int cmd_all(const RunConfig& base) {
  int worst = kExitOk;
  auto note = [&worst](int code) { worst = std::max(worst, code); };
  for (int k = 3; k <= 6; ++k) {
    RunConfig cfg = base;
    cfg.k = k;
    note(cmd_bounds(cfg));
  }
  for (int k : {3, 4, 5, 100}) {
    RunConfig cfg = base;
    cfg.k = k;
    cfg.formats = {"csv", "svg"};
    note(cmd_boundary(cfg));
  }
  RunConfig conv = base;
  conv.k = 3;
  note(cmd_convergence(conv));
  note(cmd_omega(base));
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-sided bounds on the Crouzeix ratio of KMS matrices"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string out = ".";
  std::vector<std::string> formats;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", out, "Output directory")->capture_default_str();
    sub->add_option("--format", formats, "Output formats: json, csv, svg")
        ->delimiter(',')
        ->check(CLI::IsMember({"json", "csv", "svg"}));
  };

  auto* bounds_cmd = app.add_subcommand("bounds", "Bracket psi(A_k) for k = 3..6");
  bounds_cmd->add_option("--k", cfg.k, "Matrix size")->required()->check(CLI::Range(3, 6));
  bounds_cmd->add_option("--n-disc", cfg.n_disc, "Nodes on the upper algebraic arc")
      ->capture_default_str()
      ->check(CLI::Range(10, 100000));
  common(bounds_cmd);

  auto* boundary_cmd = app.add_subcommand("boundary", "Export the boundary of W(A_k)");
  boundary_cmd->add_option("--k", cfg.k, "Matrix size")->required()->check(CLI::Range(3, 100000));
  boundary_cmd->add_option("--n-disc", cfg.n_disc, "Nodes on the upper algebraic arc")
      ->capture_default_str()
      ->check(CLI::Range(10, 100000));
  common(boundary_cmd);

  auto* conv_cmd = app.add_subcommand("convergence", "Order of convergence of g'(0) and g''(0)");
  conv_cmd->add_option("--k", cfg.k, "Matrix size")->capture_default_str()->check(CLI::Range(3, 6));
  common(conv_cmd);

  auto* omega_cmd = app.add_subcommand("omega", "Check that f1(D) lies in W(A_3)");
  omega_cmd->add_option("--samples", cfg.samples, "Samples on [0, pi]; >= 100, divisible by 4")
      ->capture_default_str()
      ->check(CLI::Range(100, 10000000));
  common(omega_cmd);

  auto* all_cmd = app.add_subcommand("all", "Every run above with default settings");
  common(all_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (omega_cmd->parsed() && cfg.samples % 4 != 0) {
    std::fprintf(stderr, "--samples must be divisible by 4\n");
    return kExitUsage;
  }

  cfg.out_dir = out;
  cfg.formats.insert(formats.begin(), formats.end());
  if (cfg.formats.empty()) {
    if (boundary_cmd->parsed()) cfg.formats = {"csv", "svg"};
    else cfg.formats = {"json"};
  }

  try {
    if (bounds_cmd->parsed()) return cmd_bounds(cfg);
    if (boundary_cmd->parsed()) return cmd_boundary(cfg);
    if (conv_cmd->parsed()) return cmd_convergence(cfg);
    if (omega_cmd->parsed()) return cmd_omega(cfg);
    return cmd_all(cfg);
  } catch (const IoError& e) {
    std::fprintf(stderr, "I/O error: %s\n", e.what.c_str());
    return kExitIo;
  } catch (const crouzeix::Error& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumerical;
  }
}

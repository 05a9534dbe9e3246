// ffgeo: constructions, verifications, and seeded experiments for
// configuration problems over odd finite fields. Prints machine-readable
// JSON reports; see README.md for the schemas and exit-code contract.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ffgeo/configurations.hpp"
#include "ffgeo/constructions.hpp"
#include "ffgeo/experiments.hpp"
#include "ffgeo/numtheory.hpp"
#include "ffgeo/report.hpp"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnverified = 3;

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) ffgeo::fail(ffgeo::Errc::UsageError, "cannot open output file " + out_path);
    f << j.dump(2) << "\n";
  }
}

json load_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) ffgeo::fail(ffgeo::Errc::UsageError, "cannot open input file " + path);
  json j;
  f >> j;
  return j;
}

int exit_code_for(const ffgeo::Error& e) {
  switch (e.code()) {
    case ffgeo::Errc::ScanTooLarge:
    case ffgeo::Errc::MemoryBudget:
    case ffgeo::Errc::RangeTooLarge:
      return kExitUnverified;
    default:
      return kExitUsage;
  }
}

struct Options {
  std::string kind;
  int64_t p = 0;
  int n = 1;
  int d = 2;
  std::optional<int64_t> t;
  int64_t sigma = 0;
  uint32_t n_max = 10000;
  int trials = 100;
  uint64_t seed = 0;
  std::string in_path;
  std::string out_path;
  std::string mode;
  std::string format = "json";
};

int cmd_construct(const Options& opt) {
  ffgeo::ConstructionCert cert;
  if (opt.kind == "iso-pair") {
    cert = ffgeo::isotropic_line_pair(ffgeo::make_field(opt.p, opt.n), opt.d);
  } else if (opt.kind == "box") {
    cert = ffgeo::box_construction(opt.p, opt.d);
  } else if (opt.kind == "box-closure") {
    cert = ffgeo::box_line_closure(opt.p, opt.d);
  } else if (opt.kind == "conic") {
    auto ctx = ffgeo::make_field(opt.p, opt.n);
    std::optional<ffgeo::FieldElem> t;
    if (opt.t) t = ctx->element(static_cast<uint64_t>(*opt.t));
    cert = ffgeo::conic_construction(ctx, t);
  } else {
    cert = ffgeo::paraboloid_product(ffgeo::make_field(opt.p, opt.n), opt.d);
  }
  emit(cert.to_json(), opt.out_path);
  if (!cert.all_verified()) return kExitViolated;
  return cert.unverified.empty() ? kExitPass : kExitUnverified;
}

int cmd_verify(const Options& opt) {
  const json input = load_json(opt.in_path);
  ffgeo::Stopwatch clock;
  ffgeo::Report r;
  r.op = "verify-" + opt.kind;
  r.params["in"] = opt.in_path;

  auto primary_set = [&]() -> ffgeo::PointSet {
    if (input.contains("pointSets")) {
      auto cert = ffgeo::ConstructionCert::from_json(input);
      if (cert.point_sets.empty()) ffgeo::fail(ffgeo::Errc::BadPointSet, "certificate holds no sets");
      return cert.point_sets.front().second;
    }
    return ffgeo::PointSet::from_json(input);
  };

  if (opt.kind == "no-right-angle") {
    std::optional<ffgeo::Witness> w;
    if (input.contains("pointSets")) {
      auto cert = ffgeo::ConstructionCert::from_json(input);
      const auto& A = cert.set("A");
      const auto& B = cert.set("B");
      w = ffgeo::find_right_angle(A, B);
      r.counts = {{"sizeA", A.size()}, {"sizeB", B.size()}};
    } else {
      auto A = ffgeo::PointSet::from_json(input);
      w = ffgeo::find_right_angle(A, A);
      r.counts = {{"sizeA", A.size()}};
    }
    if (w) r.witness = w->to_json();
    r.holds = !w.has_value();
  } else if (opt.kind == "no-orthogonal-pairs") {
    auto A = primary_set();
    auto c = ffgeo::count_orthogonal_pairs(A);
    r.counts = {{"ordered", c.ordered}, {"orderedOffDiagonal", c.ordered_off_diagonal}};
    if (c.witness) r.witness = c.witness->to_json();
    r.holds = c.ordered == 0;
  } else if (opt.kind == "no-collinear-triple") {
    auto S = primary_set();
    auto w = ffgeo::find_collinear_triple(S);
    r.counts = {{"size", S.size()}};
    if (w) r.witness = w->to_json();
    r.holds = !w.has_value();
  } else if (opt.kind == "cover-bound") {
    if (!input.contains("hyperplanes")) {
      ffgeo::fail(ffgeo::Errc::UsageError, "cover-bound expects a hyperplane family file");
    }
    auto ctx = ffgeo::make_field(input.at("p").get<int64_t>(), input.at("n").get<int>());
    const int d = input.at("d").get<int>();
    std::vector<ffgeo::Hyperplane> family;
    for (const auto& h : input.at("hyperplanes")) {
      std::vector<int64_t> normal = h.at("normal").get<std::vector<int64_t>>();
      family.push_back(ffgeo::Hyperplane::from(
          ffgeo::vector_from_ints(ctx, normal),
          ctx->from_int(h.at("offset").get<int64_t>())));
    }
    auto res = ffgeo::cover_complement(ctx, d, family);
    r.counts = {{"complementSize", res.complement_size},
                {"boundNum", res.bound_num},
                {"boundDen", res.bound_den}};
    r.holds = res.holds;
  } else {  // orth-lower-bound
    auto A = primary_set();
    auto res = ffgeo::check_orthogonality_lower_bound(A);
    r.counts = {{"actual", res.actual}, {"lowerBound", res.lower_bound}, {"size", A.size()}};
    r.holds = res.holds;
  }

  r.elapsed_ms = clock.elapsed_ms();
  emit(r.to_json(), opt.out_path);
  return *r.holds ? kExitPass : kExitViolated;
}

int cmd_experiment(const Options& opt) {
  ffgeo::Report r;
  if (opt.kind == "sset-grid") {
    r = ffgeo::run_sset_grid(opt.p, opt.sigma);
  } else if (opt.kind == "totient-asymptotics") {
    r = ffgeo::run_totient_asymptotics(opt.n_max);
  } else if (opt.kind == "line-count") {
    r = ffgeo::run_line_count(opt.p, opt.d);
  } else if (opt.kind == "conic-pigeonhole") {
    r = ffgeo::run_conic_pigeonhole(ffgeo::make_field(opt.p, opt.n));
  } else {
    auto ctx = ffgeo::make_field(opt.p, opt.n);
    if (opt.kind == "right-angle-threshold") {
      r = ffgeo::run_right_angle_threshold(ctx, opt.d, opt.trials, opt.seed);
    } else if (opt.kind == "orthogonality-bound") {
      r = ffgeo::run_orthogonality_bound(ctx, opt.d, opt.trials, opt.seed);
    } else if (opt.kind == "cover-lemma") {
      r = ffgeo::run_cover_lemma(ctx, opt.d, opt.trials, opt.seed);
    } else if (opt.kind == "collinear-pigeonhole") {
      r = ffgeo::run_collinear_pigeonhole(ctx, opt.d, opt.trials, opt.seed);
    } else if (opt.kind == "all-spreads-2d") {
      r = ffgeo::run_all_spreads_2d(ctx, opt.trials, opt.seed);
    } else {  // sphere-spreads
      r = ffgeo::run_sphere_spreads(ctx, opt.d, opt.trials, opt.seed);
    }
  }

  if (opt.format == "csv" && opt.kind == "conic-pigeonhole") {
    std::string csv = "t,solutions\n";
    const auto& per_t = r.counts.at("perT");
    for (size_t i = 0; i < per_t.size(); ++i) {
      csv += std::to_string(i + 1) + "," + std::to_string(per_t[i].get<uint64_t>()) + "\n";
    }
    if (opt.out_path.empty()) {
      std::cout << csv;
    } else {
      std::ofstream f(opt.out_path);
      f << csv;
    }
  } else {
    emit(r.to_json(), opt.out_path);
  }
  return r.holds.value_or(true) ? kExitPass : kExitViolated;
}

int cmd_spectrum(const Options& opt) {
  auto S = ffgeo::PointSet::from_json(load_json(opt.in_path));
  const auto mode = opt.mode == "origin-pairs" ? ffgeo::SpectrumMode::OriginPairs
                                               : ffgeo::SpectrumMode::AllTriples;
  ffgeo::Stopwatch clock;
  ffgeo::SpreadSpectrum spec = ffgeo::spread_spectrum(S, mode);

  const auto& F = *S.ctx();
  if (opt.format == "csv") {
    std::string csv = "spread\n";
    for (ffgeo::FieldElem v : spec.defined) {
      auto coeffs = F.coeffs(v);
      for (size_t i = 0; i < coeffs.size(); ++i) {
        csv += (i ? "|" : "") + std::to_string(coeffs[i]);
      }
      csv += "\n";
    }
    if (spec.undefined_seen) csv += "undefined\n";
    if (opt.out_path.empty()) {
      std::cout << csv;
    } else {
      std::ofstream f(opt.out_path);
      f << csv;
    }
    return kExitPass;
  }

  ffgeo::Report r;
  r.op = "spectrum";
  r.params = {{"in", opt.in_path},
              {"mode", opt.mode},
              {"p", F.p()},
              {"n", F.n()},
              {"d", S.dim()},
              {"size", S.size()}};
  json defined = json::array();
  for (ffgeo::FieldElem v : spec.defined) {
    json flat = json::array();
    for (uint32_t c : F.coeffs(v)) flat.push_back(c);
    defined.push_back(flat);
  }
  r.counts = {{"defined", defined},
              {"definedCount", spec.defined.size()},
              {"undefinedSeen", spec.undefined_seen}};
  r.elapsed_ms = clock.elapsed_ms();
  emit(r.to_json(), opt.out_path);
  return kExitPass;
}

int cmd_field_info(const Options& opt) {
  auto ctx = ffgeo::make_field(opt.p, opt.n);
  const auto& F = *ctx;
  json modulus = json::array();
  for (uint32_t c : F.modulus()) modulus.push_back(c);
  json nonsquare = json::array();
  for (uint32_t c : F.coeffs(F.find_nonsquare())) nonsquare.push_back(c);
  const bool iso_d2 = F.q() % 4 == 1;
  emit(json{{"p", F.p()},
            {"n", F.n()},
            {"q", F.q()},
            {"modulus", modulus},
            {"nonsquare", nonsquare},
            {"isotropicExists", json{{"d2", iso_d2}, {"d3plus", true}}}},
       opt.out_path);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"configuration experiments over odd finite fields"};
  app.require_subcommand(1);
  Options opt;

  auto* construct = app.add_subcommand("construct", "build and certify a construction");
  construct->add_option("kind", opt.kind)
      ->required()
      ->check(CLI::IsMember({"iso-pair", "box", "box-closure", "conic", "paraboloid"}));
  construct->add_option("--p", opt.p, "field characteristic")->required();
  construct->add_option("--n", opt.n, "extension degree");
  construct->add_option("--d", opt.d, "dimension");
  construct->add_option("--t", [&opt](const CLI::results_t& vals) {
    opt.t = std::stoll(vals.front());
    return true;
  }, "conic parameter override (element code)");
  construct->add_option("--out", opt.out_path, "write the certificate here");

  auto* verify = app.add_subcommand("verify", "re-check a stored set or certificate");
  verify->add_option("kind", opt.kind)
      ->required()
      ->check(CLI::IsMember({"no-right-angle", "no-orthogonal-pairs", "no-collinear-triple",
                             "cover-bound", "orth-lower-bound"}));
  verify->add_option("--in", opt.in_path, "input JSON file")->required();
  verify->add_option("--out", opt.out_path);

  auto* experiment = app.add_subcommand("experiment", "run a seeded property sweep");
  experiment->add_option("kind", opt.kind)
      ->required()
      ->check(CLI::IsMember({"right-angle-threshold", "orthogonality-bound", "cover-lemma",
                             "collinear-pigeonhole", "all-spreads-2d", "sphere-spreads",
                             "conic-pigeonhole", "sset-grid", "totient-asymptotics",
                             "line-count"}));
  experiment->add_option("--q,--p", opt.p, "field order (prime, or prime power with --n)");
  experiment->add_option("--n", opt.n, "extension degree");
  experiment->add_option("--d", opt.d, "dimension");
  experiment->add_option("--trials", opt.trials, "number of seeded trials");
  experiment->add_option("--seed", opt.seed, "PRNG seed")->envname("FFGEO_SEED");
  experiment->add_option("--sigma", opt.sigma, "box parameter for sset-grid");
  experiment->add_option("--n-max", opt.n_max, "range for totient-asymptotics");
  experiment->add_option("--format", opt.format)->check(CLI::IsMember({"json", "csv"}));
  experiment->add_option("--out", opt.out_path);

  auto* spectrum = app.add_subcommand("spectrum", "spread spectrum of a stored point set");
  spectrum->add_option("--in", opt.in_path)->required();
  spectrum->add_option("--mode", opt.mode)
      ->required()
      ->check(CLI::IsMember({"triples", "origin-pairs"}));
  spectrum->add_option("--format", opt.format)->check(CLI::IsMember({"json", "csv"}));
  spectrum->add_option("--out", opt.out_path);

  auto* field_info = app.add_subcommand("field-info", "field parameters and services");
  field_info->add_option("--p", opt.p)->required();
  field_info->add_option("--n", opt.n);
  field_info->add_option("--out", opt.out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (experiment->parsed()) return cmd_experiment(opt);
    if (spectrum->parsed()) return cmd_spectrum(opt);
    return cmd_field_info(opt);
  } catch (const ffgeo::Error& e) {
    std::cerr << nlohmann::json{{"error", ffgeo::errc_name(e.code())}, {"message", e.what()}}.dump()
              << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << nlohmann::json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return kExitUsage;
  }
}

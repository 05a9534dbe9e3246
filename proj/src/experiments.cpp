#include "ffgeo/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "ffgeo/constructions.hpp"
#include "ffgeo/numtheory.hpp"

namespace ffgeo {

namespace {

std::string u128_to_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

nlohmann::json base_params(const FieldCtx& F, int d, int trials) {
  return nlohmann::json{
      {"p", F.p()}, {"n", F.n()}, {"q", F.q()}, {"d", d}, {"trials", trials}};
}

}  // namespace

PointSet random_point_set(FieldCtxPtr ctx, int d, uint64_t m, SplitMix64& rng) {
  const uint64_t size = space_cardinality(*ctx, d);
  if (m > size) fail(Errc::UsageError, "cannot sample more points than the space holds");
  if (m == size) {
    std::vector<uint64_t> all(size);
    for (uint64_t i = 0; i < size; ++i) all[i] = i;
    return PointSet(std::move(ctx), d, std::move(all));
  }
  if (m <= size / 2) {
    std::set<uint64_t> chosen;
    while (chosen.size() < m) chosen.insert(rng.below(size));
    return PointSet(std::move(ctx), d, {chosen.begin(), chosen.end()});
  }
  std::set<uint64_t> excluded;
  while (excluded.size() < size - m) excluded.insert(rng.below(size));
  std::vector<uint64_t> kept;
  kept.reserve(m);
  for (uint64_t i = 0; i < size; ++i) {
    if (!excluded.count(i)) kept.push_back(i);
  }
  return PointSet(std::move(ctx), d, std::move(kept));
}

Hyperplane random_hyperplane(FieldCtxPtr ctx, int d, SplitMix64& rng) {
  const FieldCtx& F = *ctx;
  FVector normal{ctx, std::vector<FieldElem>(static_cast<size_t>(d))};
  do {
    for (int i = 0; i < d; ++i) normal.coords[i] = {static_cast<uint32_t>(rng.below(F.q()))};
  } while (normal.is_zero());
  FieldElem offset{static_cast<uint32_t>(rng.below(F.q()))};
  return Hyperplane::from(normal, offset);
}

std::vector<Hyperplane> random_hyperplane_family(FieldCtxPtr ctx, int d, uint64_t m,
                                                 SplitMix64& rng) {
  const uint64_t total =
      (space_cardinality(*ctx, d) - 1) / (ctx->q() - 1) * ctx->q();
  if (m > total) fail(Errc::UsageError, "family larger than the hyperplane count");
  std::vector<Hyperplane> family;
  std::set<std::pair<uint64_t, uint32_t>> seen;
  while (family.size() < m) {
    Hyperplane h = random_hyperplane(ctx, d, rng);
    if (seen.emplace(h.normal.index(), h.offset.code).second) family.push_back(std::move(h));
  }
  return family;
}

Report run_right_angle_threshold(FieldCtxPtr ctx, int d, int trials, uint64_t seed) {
  Stopwatch clock;
  const FieldCtx& F = *ctx;
  const uint64_t size = space_cardinality(F, d);
  const double threshold = 4.0 * std::pow(static_cast<double>(F.q()), (d + 2) / 3.0);
  const uint64_t m = std::min<uint64_t>(size, static_cast<uint64_t>(std::ceil(threshold)));

  int found = 0;
  for (int tr = 0; tr < trials; ++tr) {
    SplitMix64 rng(SplitMix64::mix(seed, static_cast<uint64_t>(tr)));
    PointSet A = random_point_set(ctx, d, m, rng);
    if (find_right_angle(A, A)) ++found;
  }

  Report r;
  r.op = "right-angle-threshold";
  r.params = base_params(F, d, trials);
  r.seed = seed;
  r.counts = {{"setSize", m}, {"found", found}, {"trials", trials}};
  r.holds = found == trials;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

Report run_orthogonality_bound(FieldCtxPtr ctx, int d, int trials, uint64_t seed) {
  Stopwatch clock;
  const FieldCtx& F = *ctx;
  const uint64_t size = space_cardinality(F, d);

  int violations = 0;
  for (int tr = 0; tr < trials; ++tr) {
    SplitMix64 rng(SplitMix64::mix(seed, static_cast<uint64_t>(tr)));
    const uint64_t m = 1 + rng.below(size);
    PointSet A = random_point_set(ctx, d, m, rng);
    if (!check_orthogonality_lower_bound(A).holds) ++violations;
  }

  Report r;
  r.op = "orthogonality-bound";
  r.params = base_params(F, d, trials);
  r.seed = seed;
  r.counts = {{"violations", violations}, {"trials", trials}};
  r.holds = violations == 0;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

Report run_cover_lemma(FieldCtxPtr ctx, int d, int trials, uint64_t seed) {
  Stopwatch clock;
  const FieldCtx& F = *ctx;

  int violations = 0;
  for (int tr = 0; tr < trials; ++tr) {
    SplitMix64 rng(SplitMix64::mix(seed, static_cast<uint64_t>(tr)));
    const uint64_t m = 1 + rng.below(3 * F.q());
    auto family = random_hyperplane_family(ctx, d, m, rng);
    if (!cover_complement(ctx, d, family).holds) ++violations;
  }

  Report r;
  r.op = "cover-lemma";
  r.params = base_params(F, d, trials);
  r.seed = seed;
  r.counts = {{"violations", violations}, {"trials", trials}};
  r.holds = violations == 0;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

Report run_collinear_pigeonhole(FieldCtxPtr ctx, int d, int trials, uint64_t seed) {
  Stopwatch clock;
  const FieldCtx& F = *ctx;
  const uint64_t size = space_cardinality(F, d);
  const uint64_t lines_through_point = (size - 1) / (F.q() - 1);
  const uint64_t m = lines_through_point + (d % 2 == 0 ? 1 : 2);

  int found = 0;
  for (int tr = 0; tr < trials; ++tr) {
    SplitMix64 rng(SplitMix64::mix(seed, static_cast<uint64_t>(tr)));
    PointSet S = random_point_set(ctx, d, m, rng);
    if (find_collinear_triple(S)) ++found;
  }

  Report r;
  r.op = "collinear-pigeonhole";
  r.params = base_params(F, d, trials);
  r.seed = seed;
  r.counts = {{"setSize", m}, {"found", found}, {"trials", trials}};
  r.holds = found == trials;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

Report run_all_spreads_2d(FieldCtxPtr ctx, int trials, uint64_t seed) {
  Stopwatch clock;
  const FieldCtx& F = *ctx;
  const uint64_t size = space_cardinality(F, 2);

  std::vector<uint64_t> all(size);
  for (uint64_t i = 0; i < size; ++i) all[i] = i;
  SpreadSpectrum plane = spread_spectrum(PointSet(ctx, 2, std::move(all)),
                                         SpectrumMode::AllTriples);

  const uint64_t m = 2 * F.q() - 1;
  int covered = 0;
  for (int tr = 0; tr < trials; ++tr) {
    SplitMix64 rng(SplitMix64::mix(seed, static_cast<uint64_t>(tr)));
    PointSet A = random_point_set(ctx, 2, m, rng);
    SpreadSpectrum spec = spread_spectrum(A, SpectrumMode::AllTriples);
    if (std::includes(spec.defined.begin(), spec.defined.end(), plane.defined.begin(),
                      plane.defined.end())) {
      ++covered;
    }
  }

  Report r;
  r.op = "all-spreads-2d";
  r.params = base_params(F, 2, trials);
  r.seed = seed;
  r.counts = {{"setSize", m},
              {"planeSpectrumSize", plane.defined.size()},
              {"covered", covered},
              {"trials", trials}};
  r.holds = covered == trials;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

Report run_sphere_spreads(FieldCtxPtr ctx, int d, int trials, uint64_t seed) {
  Stopwatch clock;
  const FieldCtx& F = *ctx;
  const uint64_t size = space_cardinality(F, d);
  const uint64_t m = std::min<uint64_t>(
      size,
      static_cast<uint64_t>(std::ceil(std::pow(static_cast<double>(F.q()), (d + 2) / 2.0) / 2.0)));
  const double needed = static_cast<double>(F.q()) / 8.0;

  int passes = 0;
  uint64_t min_spreads = UINT64_MAX;
  for (int tr = 0; tr < trials; ++tr) {
    SplitMix64 rng(SplitMix64::mix(seed, static_cast<uint64_t>(tr)));
    PointSet E = random_point_set(ctx, d, m, rng);

    // bucket E by norm and take the richest nonzero radius
    std::vector<std::vector<uint64_t>> by_norm(F.q());
    for (size_t i = 0; i < E.size(); ++i) {
      by_norm[norm(E.at(i)).code].push_back(E.indices()[i]);
    }
    uint32_t best_t = 1;
    for (uint32_t t = 2; t < F.q(); ++t) {
      if (by_norm[t].size() > by_norm[best_t].size()) best_t = t;
    }

    PointSet S(ctx, d, by_norm[best_t]);
    const uint64_t spreads = spread_spectrum(S, SpectrumMode::OriginPairs).defined.size();
    min_spreads = std::min(min_spreads, spreads);
    if (static_cast<double>(spreads) >= needed) ++passes;
  }

  Report r;
  r.op = "sphere-spreads";
  r.params = base_params(F, d, trials);
  r.seed = seed;
  r.counts = {{"setSize", m},
              {"requiredSpreads", needed},
              {"minSpreadsSeen", min_spreads},
              {"passes", passes},
              {"trials", trials}};
  r.holds = passes == trials;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

Report run_conic_pigeonhole(FieldCtxPtr ctx) {
  Stopwatch clock;
  const FieldCtx& F = *ctx;

  // solutions of x^2 - t y^2 = 1 counted through the quadratic character:
  // t y^2 = x^2 - 1 has 1 + chi((x^2-1)/t) solutions in y (1 when zero)
  nlohmann::json per_t = nlohmann::json::array();
  uint64_t best = 0;
  uint32_t best_t = 1;
  for (uint32_t tc = 1; tc < F.q(); ++tc) {
    FieldElem t{tc};
    FieldElem t_inv = F.inv(t);
    uint64_t count = 0;
    for (uint64_t xc = 0; xc < F.q(); ++xc) {
      FieldElem x{static_cast<uint32_t>(xc)};
      FieldElem v = F.mul(F.sub(F.mul(x, x), F.one()), t_inv);
      count += static_cast<uint64_t>(1 + F.quadratic_character(v));
    }
    per_t.push_back(count);
    if (count > best) {
      best = count;
      best_t = tc;
    }
  }

  Report r;
  r.op = "conic-pigeonhole";
  r.params = base_params(F, 2, 0);
  r.seed = 0;
  r.counts = {{"perT", per_t},
              {"maxSolutions", best},
              {"maxT", best_t},
              {"threshold", F.q() + 1}};
  r.holds = best >= F.q() + 1;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

Report run_sset_grid(int64_t p, int64_t sigma) {
  Stopwatch clock;
  if (sigma <= 0) sigma = isqrt_ratio(p, 2);

  uint64_t pairs = 0, pair_disagreements = 0;
  for (int64_t k1 = 1; k1 <= sigma; ++k1) {
    for (int64_t k2 = k1; k2 <= sigma; ++k2) {
      const int64_t ks[] = {k1, k2};
      ++pairs;
      if (!s_intersection(p, sigma, ks).agree) ++pair_disagreements;
    }
  }

  uint64_t triples = 0, triple_disagreements = 0;
  nlohmann::json mismatches = nlohmann::json::array();
  for (int64_t k1 = 1; k1 <= sigma; ++k1) {
    for (int64_t k2 = k1; k2 <= sigma; ++k2) {
      for (int64_t k3 = k2; k3 <= sigma; ++k3) {
        const int64_t ks[] = {k1, k2, k3};
        ++triples;
        SIntersection s = s_intersection(p, sigma, ks);
        if (!s.agree) {
          ++triple_disagreements;
          if (mismatches.size() < 20) {
            mismatches.push_back({k1, k2, k3, s.formula_size, s.oracle_size});
          }
        }
      }
    }
  }

  Report r;
  r.op = "sset-grid";
  r.params = {{"p", p}, {"sigma", sigma}};
  r.seed = 0;
  r.counts = {{"pairsChecked", pairs},
              {"pairDisagreements", pair_disagreements},
              {"triplesChecked", triples},
              {"tripleDisagreements", triple_disagreements},
              {"tripleMismatches", mismatches}};
  r.holds = pair_disagreements == 0;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

Report run_totient_asymptotics(uint32_t n) {
  Stopwatch clock;
  TotientTables t = totient_tables(n);
  const double nn = static_cast<double>(n);
  const double phi_target = 3.0 / (std::numbers::pi * std::numbers::pi) * nn * nn;
  const double iphi_target = 2.0 / (std::numbers::pi * std::numbers::pi) * nn * nn * nn;
  const double ratio_phi = static_cast<double>(t.sum_phi[n]) / phi_target;
  const double ratio_iphi = static_cast<double>(t.sum_i_phi[n]) / iphi_target;

  Report r;
  r.op = "totient-asymptotics";
  r.params = {{"n", n}, {"tolerance", 0.02}};
  r.seed = 0;
  r.counts = {{"sumPhi", t.sum_phi[n]},
              {"sumIPhi", u128_to_string(t.sum_i_phi[n])},
              {"ratioPhi", ratio_phi},
              {"ratioIPhi", ratio_iphi}};
  r.holds = std::abs(ratio_phi - 1.0) <= 0.02 && std::abs(ratio_iphi - 1.0) <= 0.02;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

Report run_line_count(int64_t p, int d) {
  Stopwatch clock;
  ConstructionCert cert = box_line_closure(p, d);
  const uint64_t line_count = cert.counts.at("lineCount").get<uint64_t>();
  const uint64_t size_u = cert.counts.at("sizeU").get<uint64_t>();
  LineBound bound = predicted_line_bound(p, d);

  Report r;
  r.op = "line-count";
  r.params = {{"p", p}, {"d", d}, {"sigma", cert.params.at("sigma")}};
  r.seed = 0;
  r.counts = {{"lineCount", line_count},
              {"sizeU", size_u},
              {"mainTerm", bound.main_term},
              {"finalBound", bound.final_bound},
              {"intersectionFormulaMismatches", cert.counts.at("intersectionFormulaMismatches")}};
  r.holds = static_cast<double>(line_count) >= bound.main_term &&
            static_cast<double>(size_u) >= bound.final_bound;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

}  // namespace ffgeo

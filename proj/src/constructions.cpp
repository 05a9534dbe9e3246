#include "ffgeo/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ffgeo/numtheory.hpp"

namespace ffgeo {

bool ConstructionCert::all_verified() const {
  for (const auto& [key, ok] : verified) {
    (void)key;
    if (!ok) return false;
  }
  return true;
}

const PointSet& ConstructionCert::set(const std::string& key) const {
  for (const auto& [k, ps] : point_sets) {
    if (k == key) return ps;
  }
  fail(Errc::UsageError, "certificate has no point set named " + key);
}

nlohmann::json ConstructionCert::to_json() const {
  nlohmann::json sets = nlohmann::json::object();
  for (const auto& [key, ps] : point_sets) sets[key] = ps.to_json();
  nlohmann::json j{{"name", name},
                   {"params", params},
                   {"claimedSize", claimed_size},
                   {"pointSets", sets},
                   {"verified", verified},
                   {"unverified", unverified},
                   {"counts", counts}};
  if (!note.empty()) j["note"] = note;
  return j;
}

ConstructionCert ConstructionCert::from_json(const nlohmann::json& j) {
  ConstructionCert cert;
  cert.name = j.at("name").get<std::string>();
  cert.params = j.at("params");
  cert.claimed_size = j.at("claimedSize").get<uint64_t>();
  for (const auto& [key, value] : j.at("pointSets").items()) {
    cert.point_sets.emplace_back(key, PointSet::from_json(value));
  }
  cert.verified = j.at("verified").get<std::map<std::string, bool>>();
  cert.unverified = j.at("unverified").get<std::vector<std::string>>();
  cert.counts = j.at("counts");
  if (j.contains("note")) cert.note = j.at("note").get<std::string>();
  return cert;
}

namespace {

nlohmann::json field_params(const FieldCtx& F, int d) {
  return nlohmann::json{{"p", F.p()}, {"n", F.n()}, {"q", F.q()}, {"d", d}};
}

nlohmann::json elem_coeffs(const FieldCtx& F, FieldElem a) {
  nlohmann::json out = nlohmann::json::array();
  for (uint32_t c : F.coeffs(a)) out.push_back(c);
  return out;
}

}  // namespace

ConstructionCert isotropic_line_pair(FieldCtxPtr ctx, int d) {
  const FieldCtx& F = *ctx;
  if (d < 2) fail(Errc::DimensionMismatch, "need d >= 2");
  auto iso = find_isotropic(ctx, d);
  if (!iso) {
    fail(Errc::NoIsotropicLine,
         "no isotropic line in dimension 2 with q = " + std::to_string(F.q()) + " = 3 mod 4");
  }
  const uint64_t size = space_cardinality(F, d);
  if (size > kUnionScanBudget) fail(Errc::ScanTooLarge, "space too large to materialize B");

  FVector origin{ctx, std::vector<FieldElem>(static_cast<size_t>(d), F.zero())};
  Line line = Line::through(origin, *iso);
  PointSet A = PointSet::from_vectors(ctx, d, line.points());

  Hyperplane h = Hyperplane::from(line.direction, F.zero());
  std::vector<bool> in_h(size, false);
  for (const FVector& z : h.points()) in_h[z.index()] = true;
  std::vector<uint64_t> complement;
  complement.reserve(size - size / F.q());
  for (uint64_t i = 0; i < size; ++i) {
    if (!in_h[i]) complement.push_back(i);
  }
  PointSet B(ctx, d, std::move(complement));

  ConstructionCert cert;
  cert.name = "isotropic-line-pair";
  cert.params = field_params(F, d);
  cert.params["direction"] = [&] {
    nlohmann::json flat = nlohmann::json::array();
    for (FieldElem c : line.direction.coords) {
      for (uint32_t v : F.coeffs(c)) flat.push_back(v);
    }
    return flat;
  }();
  cert.claimed_size = F.q();
  cert.point_sets.emplace_back("A", A);
  cert.point_sets.emplace_back("B", B);

  const uint64_t expected_b = size - size / F.q();
  cert.verified["claimedSizes"] = A.size() == F.q() && B.size() == expected_b;

  bool contained = true;
  for (size_t i = 0; i < A.size(); ++i) contained = contained && h.contains(A.at(i));
  cert.verified["lineInHyperplane"] = contained;

  cert.verified["noRightAngle"] = !find_right_angle(A, B).has_value();

  const unsigned __int128 product =
      static_cast<unsigned __int128>(A.size()) * A.size() * B.size();
  const unsigned __int128 formula =
      static_cast<unsigned __int128>(F.q()) * F.q() * expected_b;
  cert.verified["sizeProductExact"] = product == formula;

  cert.counts["sizeA"] = A.size();
  cert.counts["sizeB"] = B.size();
  cert.counts["tripleCount"] = static_cast<uint64_t>(product);
  return cert;
}

namespace {

// {1..sigma}^d as encoded indices, odometer order
std::vector<uint64_t> box_indices(const FieldCtx& F, int d, int64_t sigma) {
  uint64_t count = 1;
  for (int i = 0; i < d; ++i) count *= static_cast<uint64_t>(sigma);
  std::vector<uint64_t> out;
  out.reserve(count);
  std::vector<uint32_t> digit(static_cast<size_t>(d), 1);
  for (uint64_t k = 0; k < count; ++k) {
    uint64_t index = 0;
    for (int i = d; i-- > 0;) index = index * F.q() + digit[static_cast<size_t>(i)];
    out.push_back(index);
    for (int i = 0; i < d; ++i) {
      if (++digit[static_cast<size_t>(i)] <= sigma) break;
      digit[static_cast<size_t>(i)] = 1;
    }
  }
  return out;
}

// integer coordinates (1..sigma) of a box point
std::vector<int64_t> box_coords(const FieldCtx& F, int d, uint64_t index) {
  std::vector<int64_t> c(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    c[static_cast<size_t>(i)] = static_cast<int64_t>(index % F.q());
    index /= F.q();
  }
  return c;
}

void validate_box_params(int64_t p, int d, int64_t& sigma) {
  if (p < 3 || p % 2 == 0 || !is_prime_u64(static_cast<uint64_t>(p))) {
    fail(Errc::NotPrime, "the box construction needs an odd prime p");
  }
  if (d < 2) fail(Errc::DimensionMismatch, "need d >= 2");
  if (d >= p) fail(Errc::SigmaZero, "need d < p");
  sigma = isqrt_ratio(p, d);
  if (sigma < 1) fail(Errc::SigmaZero, "floor(sqrt(p/d)) = 0");
}

}  // namespace

ConstructionCert box_construction(int64_t p, int d) {
  int64_t sigma = 0;
  validate_box_params(p, d, sigma);
  FieldCtxPtr ctx = make_field(p, 1);
  const FieldCtx& F = *ctx;

  uint64_t expected = 1;
  for (int i = 0; i < d; ++i) {
    expected *= static_cast<uint64_t>(sigma);
    if (expected > kUnionScanBudget) fail(Errc::ScanTooLarge, "sigma^d too large");
  }
  PointSet A(ctx, d, box_indices(F, d, sigma));

  ConstructionCert cert;
  cert.name = "box";
  cert.params = field_params(F, d);
  cert.params["sigma"] = sigma;
  cert.claimed_size = expected;
  cert.point_sets.emplace_back("A", A);
  cert.verified["claimedSize"] = A.size() == expected;
  // d*sigma^2 < p since sigma^2 <= p/d with equality impossible for prime p
  cert.verified["dotBoundsValid"] = d * sigma * sigma <= p - 1;

  const uint64_t pair_count = expected * expected;
  if (pair_count <= kUnionScanBudget) {
    std::vector<std::vector<int64_t>> coords;
    coords.reserve(A.size());
    for (uint64_t idx : A.indices()) coords.push_back(box_coords(F, d, idx));
    int64_t min_dot = INT64_MAX, max_dot = INT64_MIN;
    for (const auto& x : coords) {
      for (const auto& y : coords) {
        int64_t s = 0;
        for (int i = 0; i < d; ++i) s += x[static_cast<size_t>(i)] * y[static_cast<size_t>(i)];
        min_dot = std::min(min_dot, s);
        max_dot = std::max(max_dot, s);
      }
    }
    cert.verified["dotProductsInRange"] =
        min_dot >= d && max_dot <= d * sigma * sigma && max_dot <= p - 1;
    cert.counts["minDot"] = min_dot;
    cert.counts["maxDot"] = max_dot;
    cert.verified["noOrthogonalPairs"] = count_orthogonal_pairs(A).ordered == 0;
  } else {
    cert.unverified.push_back("dotProductsInRange");
    cert.unverified.push_back("noOrthogonalPairs");
  }
  cert.counts["size"] = A.size();
  return cert;
}

ConstructionCert box_line_closure(int64_t p, int d, uint64_t memory_budget) {
  int64_t sigma = 0;
  validate_box_params(p, d, sigma);
  FieldCtxPtr ctx = make_field(p, 1);
  const FieldCtx& F = *ctx;

  std::vector<uint64_t> box = box_indices(F, d, sigma);

  // canonical direction of l_x: scale x by the inverse of its first
  // coordinate (box coordinates are nonzero)
  std::set<uint64_t> directions;
  for (uint64_t idx : box) {
    FVector x = vector_from_index(ctx, d, idx);
    FVector dir = vscale(F.inv(x.coords[0]), x);
    directions.insert(dir.index());
  }
  const uint64_t line_count = directions.size();
  const uint64_t union_size = line_count * (F.q() - 1);
  if (union_size > memory_budget) {
    fail(Errc::MemoryBudget, "union of lines exceeds the memory budget");
  }

  std::vector<uint64_t> union_indices;
  union_indices.reserve(union_size);
  for (uint64_t dir_idx : directions) {
    FVector dir = vector_from_index(ctx, d, dir_idx);
    for (uint64_t r = 1; r < F.q(); ++r) {
      union_indices.push_back(vscale({static_cast<uint32_t>(r)}, dir).index());
    }
  }
  PointSet U(ctx, d, std::move(union_indices));

  LineBound bound = predicted_line_bound(p, d);

  ConstructionCert cert;
  cert.name = "box-line-closure";
  cert.params = field_params(F, d);
  cert.params["sigma"] = sigma;
  cert.claimed_size = union_size;
  cert.point_sets.emplace_back("U", U);

  cert.verified["claimedSize"] = U.size() == union_size;  // origin lines meet only at 0

  // Orthogonality is scale-invariant: (r a).(s b) = rs (a.b), so checking
  // the canonical representatives (diagonal included, which rules out
  // isotropic directions) covers every ordered pair of U.
  bool reps_non_orthogonal = true;
  {
    std::vector<FVector> reps;
    reps.reserve(directions.size());
    for (uint64_t dir_idx : directions) reps.push_back(vector_from_index(ctx, d, dir_idx));
    for (const FVector& a : reps) {
      for (const FVector& b : reps) {
        if (dot(a, b).code == 0) reps_non_orthogonal = false;
      }
    }
  }
  cert.verified["noOrthogonalPairsViaReps"] = reps_non_orthogonal;
  cert.note = "orthogonal-pair freedom checked on one representative per line; "
              "(ra).(sb) = rs(a.b) with r,s nonzero extends it to the full union";

  cert.verified["sizeLowerBound"] = static_cast<double>(U.size()) >= bound.final_bound;

  // brute-force |l_x cap A^d| against floor(sigma/max) * gcd
  uint64_t mismatches = 0;
  for (uint64_t idx : box) {
    std::vector<int64_t> x = box_coords(F, d, idx);
    int64_t max_c = *std::max_element(x.begin(), x.end());
    int64_t g = 0;
    for (int64_t c : x) g = std::gcd(g, c);
    const int64_t formula = (sigma / max_c) * g;

    int64_t brute = 0;
    for (uint64_t lam = 1; lam < F.q(); ++lam) {
      bool inside = true;
      for (int i = 0; i < d && inside; ++i) {
        uint64_t coord = lam * static_cast<uint64_t>(x[static_cast<size_t>(i)]) % F.q();
        inside = coord >= 1 && coord <= static_cast<uint64_t>(sigma);
      }
      if (inside) ++brute;
    }
    if (brute != formula) ++mismatches;
  }
  cert.counts["intersectionFormulaMismatches"] = mismatches;
  cert.counts["intersectionFormulaChecked"] = box.size();

  cert.counts["lineCount"] = line_count;
  cert.counts["sizeU"] = U.size();
  cert.counts["mainTerm"] = bound.main_term;
  cert.counts["finalBound"] = bound.final_bound;
  return cert;
}

ConstructionCert conic_construction(FieldCtxPtr ctx, std::optional<FieldElem> t_opt) {
  const FieldCtx& F = *ctx;
  FieldElem t = t_opt.value_or(F.find_nonsquare());
  if (t.code == 0) fail(Errc::TZero, "the conic parameter t must be nonzero");
  const uint64_t size = space_cardinality(F, 2);
  if (size > kUnionScanBudget) fail(Errc::ScanTooLarge, "q^2 too large for the conic scan");

  std::vector<uint64_t> members;
  for (uint64_t xc = 0; xc < F.q(); ++xc) {
    FieldElem x{static_cast<uint32_t>(xc)};
    FieldElem x2 = F.mul(x, x);
    for (uint64_t yc = 0; yc < F.q(); ++yc) {
      FieldElem y{static_cast<uint32_t>(yc)};
      if (F.sub(x2, F.mul(t, F.mul(y, y))) == F.one()) {
        members.push_back(xc + yc * F.q());
      }
    }
  }
  PointSet E(ctx, 2, std::move(members));

  const int chi_t = F.quadratic_character(t);
  const uint64_t claimed = chi_t == -1 ? F.q() + 1 : F.q() - 1;

  ConstructionCert cert;
  cert.name = "conic";
  cert.params = field_params(F, 2);
  cert.params["t"] = elem_coeffs(F, t);
  cert.params["tIsNonsquare"] = chi_t == -1;
  cert.claimed_size = claimed;
  cert.point_sets.emplace_back("E", E);

  cert.verified["claimedSize"] = E.size() == claimed;
  if (chi_t == -1) cert.verified["sizeAtLeastQPlus1"] = E.size() >= F.q() + 1;

  bool closed = true;
  for (size_t i = 0; i < E.size(); ++i) {
    if (!E.contains(vneg(E.at(i)).index())) closed = false;
  }
  cert.verified["negationClosed"] = closed;
  cert.verified["noCollinearTriple"] = !find_collinear_triple(E).has_value();

  cert.counts["size"] = E.size();
  return cert;
}

ConstructionCert paraboloid_product(FieldCtxPtr ctx, int d, uint64_t triple_budget) {
  const FieldCtx& F = *ctx;
  if (d < 2) fail(Errc::DimensionMismatch, "need d >= 2");
  FieldElem t = F.find_nonsquare();

  const int blocks = d % 3 == 0 ? d / 3 : d % 3 == 1 ? (d - 1) / 3 : (d - 2) / 3;
  const bool zero_tail = d % 3 == 1;
  const bool parabola_tail = d % 3 == 2;
  const int free_params = 2 * blocks + (parabola_tail ? 1 : 0);

  uint64_t expected = 1;
  for (int i = 0; i < free_params; ++i) {
    expected *= F.q();
    if (expected > 10'000'000) fail(Errc::MemoryBudget, "q^floor(2d/3) too large");
  }

  std::vector<uint64_t> members;
  members.reserve(expected);
  std::vector<uint32_t> param(static_cast<size_t>(free_params), 0);
  std::vector<FieldElem> coords(static_cast<size_t>(d), F.zero());
  for (uint64_t k = 0; k < expected; ++k) {
    for (int b = 0; b < blocks; ++b) {
      FieldElem x{param[static_cast<size_t>(2 * b)]};
      FieldElem y{param[static_cast<size_t>(2 * b + 1)]};
      coords[static_cast<size_t>(3 * b)] = x;
      coords[static_cast<size_t>(3 * b + 1)] = y;
      coords[static_cast<size_t>(3 * b + 2)] =
          F.sub(F.mul(t, F.mul(x, x)), F.mul(y, y));
    }
    if (zero_tail) coords[static_cast<size_t>(d - 1)] = F.zero();
    if (parabola_tail) {
      FieldElem x{param[static_cast<size_t>(2 * blocks)]};
      coords[static_cast<size_t>(d - 2)] = x;
      coords[static_cast<size_t>(d - 1)] = F.mul(t, F.mul(x, x));
    }
    uint64_t index = 0;
    for (int i = d; i-- > 0;) index = index * F.q() + coords[static_cast<size_t>(i)].code;
    members.push_back(index);
    for (int i = 0; i < free_params; ++i) {
      if (++param[static_cast<size_t>(i)] < F.q()) break;
      param[static_cast<size_t>(i)] = 0;
    }
  }
  PointSet P(ctx, d, std::move(members));

  ConstructionCert cert;
  cert.name = "paraboloid-product";
  cert.params = field_params(F, d);
  cert.params["t"] = elem_coeffs(F, t);
  cert.claimed_size = expected;
  cert.point_sets.emplace_back("P", P);
  cert.verified["claimedSize"] = P.size() == expected;

  // block projections must reproduce the model sets exactly
  bool projections_ok = true;
  {
    std::set<uint64_t> model3;
    for (uint64_t xc = 0; xc < F.q(); ++xc) {
      for (uint64_t yc = 0; yc < F.q(); ++yc) {
        FieldElem x{static_cast<uint32_t>(xc)}, y{static_cast<uint32_t>(yc)};
        FieldElem z = F.sub(F.mul(t, F.mul(x, x)), F.mul(y, y));
        model3.insert(xc + yc * F.q() + static_cast<uint64_t>(z.code) * F.q() * F.q());
      }
    }
    for (int b = 0; b < blocks && projections_ok; ++b) {
      std::set<uint64_t> projected;
      for (size_t i = 0; i < P.size(); ++i) {
        FVector v = P.at(i);
        projected.insert(v.coords[static_cast<size_t>(3 * b)].code +
                         static_cast<uint64_t>(v.coords[static_cast<size_t>(3 * b + 1)].code) * F.q() +
                         static_cast<uint64_t>(v.coords[static_cast<size_t>(3 * b + 2)].code) * F.q() * F.q());
      }
      projections_ok = projected == model3;
    }
    if (zero_tail) {
      for (size_t i = 0; i < P.size() && projections_ok; ++i) {
        projections_ok = P.at(i).coords[static_cast<size_t>(d - 1)].code == 0;
      }
    }
    if (parabola_tail && projections_ok) {
      std::set<uint64_t> model2, projected;
      for (uint64_t xc = 0; xc < F.q(); ++xc) {
        FieldElem x{static_cast<uint32_t>(xc)};
        model2.insert(xc + static_cast<uint64_t>(F.mul(t, F.mul(x, x)).code) * F.q());
      }
      for (size_t i = 0; i < P.size(); ++i) {
        FVector v = P.at(i);
        projected.insert(v.coords[static_cast<size_t>(d - 2)].code +
                         static_cast<uint64_t>(v.coords[static_cast<size_t>(d - 1)].code) * F.q());
      }
      projections_ok = projected == model2;
    }
  }
  cert.verified["projectionsMatch"] = projections_ok;

  if (static_cast<unsigned __int128>(P.size()) * P.size() / 2 <= triple_budget) {
    cert.verified["noCollinearTriple"] = !find_collinear_triple(P, triple_budget).has_value();
  } else {
    cert.unverified.push_back("noCollinearTriple");
  }

  cert.counts["size"] = P.size();
  cert.counts["blocks"] = blocks;
  cert.counts["tail"] = zero_tail ? "zero" : parabola_tail ? "parabola" : "none";
  return cert;
}

}  // namespace ffgeo

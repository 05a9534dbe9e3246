#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffgeo/configurations.hpp"
#include "ffgeo/pointset.hpp"

namespace ffgeo {

/// A construction bundled with the exact checks that certify its defining
/// properties. Every entry of `verified` was computed by a detector on the
/// materialized point sets; checks skipped for budget reasons are listed in
/// `unverified` instead of being reported as true.
struct ConstructionCert {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  std::vector<std::pair<std::string, PointSet>> point_sets;
  uint64_t claimed_size = 0;  // size formula of the primary set
  std::map<std::string, bool> verified;
  std::vector<std::string> unverified;
  nlohmann::json counts = nlohmann::json::object();
  std::string note;

  bool all_verified() const;
  const PointSet& set(const std::string& key) const;

  nlohmann::json to_json() const;
  static ConstructionCert from_json(const nlohmann::json& j);
};

/// A = an isotropic line L through the origin, B = the complement of the
/// hyperplane orthogonal to L. No (x, y in A, z in B) right angle exists,
/// while |A|^2 |B| = q^(d+2) (1 - 1/q).
ConstructionCert isotropic_line_pair(FieldCtxPtr ctx, int d);

/// The box {1..sigma}^d over a prime field, sigma = floor(sqrt(p/d)). All
/// integer dot products land in [d, d*sigma^2] inside [1, p-1], so no
/// ordered pair is orthogonal mod p.
ConstructionCert box_construction(int64_t p, int d);

/// The punctured union of all origin lines meeting the box. Reports the
/// exact line count, certifies pairwise non-orthogonality on the canonical
/// line representatives (scaling extends it to the whole union), and
/// compares the brute-force |l_x cap A^d| against the floor/gcd formula.
ConstructionCert box_line_closure(int64_t p, int d,
                                  uint64_t memory_budget = kUnionScanBudget);

/// E = {(x, y) : x^2 - t y^2 = 1}, with t the canonical nonsquare unless
/// overridden. |E| = q - chi(t); no line meets E in more than two points.
ConstructionCert conic_construction(FieldCtxPtr ctx,
                                    std::optional<FieldElem> t = std::nullopt);

/// The product-of-paraboloids set P_d of size q^floor(2d/3) with no three
/// collinear points, assembled from blocks {(x, y, t x^2 - y^2)} plus a
/// zero coordinate (d = 1 mod 3) or a parabola graph (d = 2 mod 3).
ConstructionCert paraboloid_product(FieldCtxPtr ctx, int d,
                                    uint64_t triple_budget = kPairScanBudget);

}  // namespace ffgeo

#pragma once

#include <cstdint>
#include <vector>

#include "json.hpp"

#include "ffgeo/geometry.hpp"

namespace ffgeo {

/// A deduplicated, ascending collection of integer-encoded points of F_q^d.
///
/// JSON form: {"p": int, "n": int, "d": int, "points": [[int, ...], ...]}
/// where each point is the concatenation of its d coordinates, each
/// coordinate written as its n little-endian polynomial coefficients (a
/// plain residue when n = 1).
class PointSet {
 public:
  PointSet(FieldCtxPtr ctx, int d, std::vector<uint64_t> indices);
  static PointSet from_vectors(FieldCtxPtr ctx, int d, const std::vector<FVector>& pts);

  const FieldCtxPtr& ctx() const { return ctx_; }
  int dim() const { return d_; }
  size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  const std::vector<uint64_t>& indices() const { return indices_; }

  FVector at(size_t i) const;
  bool contains(uint64_t index) const;

  nlohmann::json to_json() const;
  static PointSet from_json(const nlohmann::json& j);

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return *a.ctx_ == *b.ctx_ && a.d_ == b.d_ && a.indices_ == b.indices_;
  }

 private:
  FieldCtxPtr ctx_;
  int d_;
  std::vector<uint64_t> indices_;
};

}  // namespace ffgeo

#include "ffgeo/pointset.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace ffgeo {

PointSet::PointSet(FieldCtxPtr ctx, int d, std::vector<uint64_t> indices)
    : ctx_(std::move(ctx)), d_(d), indices_(std::move(indices)) {
  if (d_ < 2) fail(Errc::DimensionMismatch, "point sets live in dimension >= 2");
  const uint64_t size = space_cardinality(*ctx_, d_);
  for (uint64_t idx : indices_) {
    if (idx >= size) fail(Errc::BadPointSet, "point index outside F_q^d");
  }
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

PointSet PointSet::from_vectors(FieldCtxPtr ctx, int d, const std::vector<FVector>& pts) {
  std::vector<uint64_t> idx;
  idx.reserve(pts.size());
  for (const FVector& v : pts) {
    if (!(*v.ctx == *ctx)) fail(Errc::MixedContexts, "point from another field");
    if (v.dim() != d) fail(Errc::DimensionMismatch, "point of wrong dimension");
    idx.push_back(v.index());
  }
  return PointSet(std::move(ctx), d, std::move(idx));
}

FVector PointSet::at(size_t i) const { return vector_from_index(ctx_, d_, indices_[i]); }

bool PointSet::contains(uint64_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

nlohmann::json PointSet::to_json() const {
  nlohmann::json points = nlohmann::json::array();
  for (uint64_t idx : indices_) {
    FVector v = vector_from_index(ctx_, d_, idx);
    nlohmann::json flat = nlohmann::json::array();
    for (FieldElem c : v.coords) {
      for (uint32_t coeff : ctx_->coeffs(c)) flat.push_back(coeff);
    }
    points.push_back(std::move(flat));
  }
  return nlohmann::json{{"p", ctx_->p()}, {"n", ctx_->n()}, {"d", d_}, {"points", points}};
}

PointSet PointSet::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("n") || !j.contains("d") ||
      !j.contains("points")) {
    fail(Errc::BadPointSet, "point set JSON needs p, n, d, points");
  }
  FieldCtxPtr ctx = make_field(j.at("p").get<int64_t>(), j.at("n").get<int>());
  const int d = j.at("d").get<int>();
  const int n = ctx->n();

  std::vector<uint64_t> indices;
  for (const auto& flat : j.at("points")) {
    if (!flat.is_array() || flat.size() != static_cast<size_t>(d) * n) {
      fail(Errc::BadPointSet, "each point needs d*n coefficients");
    }
    FVector v{ctx, std::vector<FieldElem>(static_cast<size_t>(d))};
    for (int i = 0; i < d; ++i) {
      std::vector<int64_t> coeffs(static_cast<size_t>(n));
      for (int k = 0; k < n; ++k) {
        int64_t c = flat[static_cast<size_t>(i) * n + k].get<int64_t>();
        if (c < 0 || c >= static_cast<int64_t>(ctx->p())) {
          fail(Errc::BadPointSet, "coefficient out of range");
        }
        coeffs[static_cast<size_t>(k)] = c;
      }
      v.coords[static_cast<size_t>(i)] = ctx->from_coeffs(coeffs);
    }
    indices.push_back(v.index());
  }
  return PointSet(std::move(ctx), d, std::move(indices));
}

}  // namespace ffgeo

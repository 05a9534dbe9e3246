#include "ffgeo/configurations.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace ffgeo {

namespace {

// Detectors work on flat code matrices (row i = the d coordinate codes of
// point i) instead of FVector objects; the scans below touch millions of
// points.
constexpr int kMaxDim = 16;

struct Decoded {
  const FieldCtx& F;
  int d;
  std::vector<uint32_t> codes;

  explicit Decoded(const PointSet& S) : F(*S.ctx()), d(S.dim()) {
    if (d > kMaxDim) fail(Errc::DimensionMismatch, "detector scans support d <= 16");
    codes.resize(S.size() * static_cast<size_t>(d));
    for (size_t i = 0; i < S.size(); ++i) {
      uint64_t idx = S.indices()[i];
      for (int j = 0; j < d; ++j) {
        codes[i * d + j] = static_cast<uint32_t>(idx % F.q());
        idx /= F.q();
      }
    }
  }

  const uint32_t* row(size_t i) const { return codes.data() + i * d; }
};

FieldElem dot_rows(const FieldCtx& F, const uint32_t* a, const uint32_t* b, int d) {
  FieldElem acc = F.zero();
  for (int i = 0; i < d; ++i) acc = F.add(acc, F.mul({a[i]}, {b[i]}));
  return acc;
}

void sub_rows(const FieldCtx& F, const uint32_t* a, const uint32_t* b, int d, uint32_t* out) {
  for (int i = 0; i < d; ++i) out[i] = F.sub({a[i]}, {b[i]}).code;
}

}  // namespace

Witness Witness::right_angle(const FVector& x, const FVector& y, const FVector& z) {
  if (!is_right_triple(x, y, z)) throw std::logic_error("right-angle witness does not verify");
  return Witness{Kind::RightAngle, {x, y, z}};
}

Witness Witness::orthogonal_pair(const FVector& x, const FVector& y) {
  if (x == y || dot(x, y).code != 0) {
    throw std::logic_error("orthogonal-pair witness does not verify");
  }
  return Witness{Kind::OrthogonalPair, {x, y}};
}

Witness Witness::collinear_triple(const FVector& a, const FVector& b, const FVector& c) {
  if (!is_collinear(a, b, c)) throw std::logic_error("collinear witness does not verify");
  return Witness{Kind::CollinearTriple, {a, b, c}};
}

nlohmann::json Witness::to_json() const {
  const char* kind_name = kind == Kind::RightAngle      ? "rightAngle"
                          : kind == Kind::OrthogonalPair ? "orthogonalPair"
                                                         : "collinearTriple";
  nlohmann::json pts = nlohmann::json::array();
  for (const FVector& v : points) {
    nlohmann::json flat = nlohmann::json::array();
    for (FieldElem c : v.coords) {
      for (uint32_t coeff : v.ctx->coeffs(c)) flat.push_back(coeff);
    }
    pts.push_back(std::move(flat));
  }
  return nlohmann::json{{"kind", kind_name}, {"points", pts}};
}

OrthogonalPairCount count_orthogonal_pairs(const PointSet& A) {
  Decoded pts(A);
  const size_t m = A.size();
  OrthogonalPairCount out;
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) {
      if (dot_rows(pts.F, pts.row(i), pts.row(j), pts.d).code != 0) continue;
      ++out.ordered;
      if (i != j) {
        ++out.ordered_off_diagonal;
        if (!out.witness) out.witness = Witness::orthogonal_pair(A.at(i), A.at(j));
      }
    }
  }
  return out;
}

std::optional<Witness> find_right_angle(const PointSet& A, const PointSet& B, uint64_t budget) {
  if (!(*A.ctx() == *B.ctx()) || A.dim() != B.dim()) {
    fail(Errc::MixedContexts, "A and B must share a field and dimension");
  }
  const unsigned __int128 work =
      static_cast<unsigned __int128>(A.size()) * A.size() * B.size();
  if (work > budget) fail(Errc::ScanTooLarge, "|A|^2 |B| exceeds the scan budget");

  Decoded a(A), b(B);
  const int d = a.d;
  uint32_t leg[kMaxDim];
  for (size_t i = 0; i < A.size(); ++i) {
    for (size_t j = 0; j < A.size(); ++j) {
      if (i == j) continue;
      sub_rows(a.F, a.row(i), a.row(j), d, leg);  // x - y
      for (size_t k = 0; k < B.size(); ++k) {
        if (B.indices()[k] == A.indices()[i] || B.indices()[k] == A.indices()[j]) continue;
        uint32_t other[kMaxDim];
        sub_rows(a.F, b.row(k), a.row(j), d, other);  // z - y
        if (dot_rows(a.F, leg, other, d).code == 0) {
          return Witness::right_angle(A.at(i), A.at(j), B.at(k));
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> find_collinear_triple(const PointSet& S, uint64_t budget) {
  const size_t m = S.size();
  if (m < 3) return std::nullopt;
  if (static_cast<unsigned __int128>(m) * m / 2 > budget) {
    fail(Errc::ScanTooLarge, "|S|^2 exceeds the pair scan budget");
  }

  Decoded pts(S);
  const FieldCtx& F = pts.F;
  const int d = pts.d;
  // direction index -> position of the first point seen in that direction
  std::unordered_map<uint64_t, size_t> first_by_direction;
  uint32_t diff[kMaxDim];
  for (size_t i = 0; i + 2 < m; ++i) {
    first_by_direction.clear();
    for (size_t j = i + 1; j < m; ++j) {
      sub_rows(F, pts.row(j), pts.row(i), d, diff);
      int pivot = 0;
      while (diff[pivot] == 0) ++pivot;  // rows are distinct, so a pivot exists
      FieldElem scale = F.inv({diff[pivot]});
      uint64_t key = 0;
      for (int t = d; t-- > 0;) key = key * F.q() + F.mul({diff[t]}, scale).code;
      auto [it, inserted] = first_by_direction.try_emplace(key, j);
      if (!inserted) {
        return Witness::collinear_triple(S.at(i), S.at(it->second), S.at(j));
      }
    }
  }
  return std::nullopt;
}

SpreadSpectrum spread_spectrum(const PointSet& S, SpectrumMode mode, uint64_t budget) {
  Decoded pts(S);
  const FieldCtx& F = pts.F;
  const int d = pts.d;
  const size_t m = S.size();
  SpreadSpectrum out;

  auto record = [&](const uint32_t* a, const uint32_t* c) {
    FieldElem na = dot_rows(F, a, a, d);
    FieldElem nc = dot_rows(F, c, c, d);
    FieldElem den = F.mul(na, nc);
    if (den.code == 0) {
      out.undefined_seen = true;
      return;
    }
    FieldElem ac = dot_rows(F, a, c, d);
    out.defined.insert(F.sub(F.one(), F.mul(F.mul(ac, ac), F.inv(den))));
  };

  if (mode == SpectrumMode::AllTriples) {
    if (static_cast<unsigned __int128>(m) * m * m > budget) {
      fail(Errc::ScanTooLarge, "|S|^3 exceeds the scan budget");
    }
    uint32_t leg1[kMaxDim], leg2[kMaxDim];
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < m; ++j) {
        if (j == i) continue;
        sub_rows(F, pts.row(i), pts.row(j), d, leg1);
        // spreads are symmetric in the two legs, so k > i covers all triples
        for (size_t k = i + 1; k < m; ++k) {
          if (k == j) continue;
          sub_rows(F, pts.row(k), pts.row(j), d, leg2);
          record(leg1, leg2);
        }
      }
    }
  } else {
    if (S.contains(0)) fail(Errc::BadPointSet, "origin-pair mode requires 0 not in S");
    if (static_cast<unsigned __int128>(m) * m > budget) {
      fail(Errc::ScanTooLarge, "|S|^2 exceeds the scan budget");
    }
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = i + 1; j < m; ++j) record(pts.row(i), pts.row(j));
    }
  }
  return out;
}

std::set<FieldElem> distance_set(const PointSet& S) {
  Decoded pts(S);
  std::set<FieldElem> out;
  uint32_t diff[kMaxDim];
  for (size_t i = 0; i < S.size(); ++i) {
    for (size_t j = i + 1; j < S.size(); ++j) {
      sub_rows(pts.F, pts.row(i), pts.row(j), pts.d, diff);
      out.insert(dot_rows(pts.F, diff, diff, pts.d));
    }
  }
  return out;
}

CoverComplement cover_complement(const FieldCtxPtr& ctx, int d,
                                 const std::vector<Hyperplane>& family) {
  const FieldCtx& F = *ctx;
  const uint64_t size = space_cardinality(F, d);
  if (size > kUnionScanBudget) fail(Errc::ScanTooLarge, "space too large for the union scan");

  std::vector<std::pair<uint64_t, uint32_t>> canon;
  for (const Hyperplane& h : family) {
    canon.emplace_back(h.normal.index(), h.offset.code);
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  if (canon.empty()) fail(Errc::EmptyFamily, "hyperplane family is empty");

  std::vector<uint64_t> q_pow(static_cast<size_t>(d) + 1, 1);
  for (int i = 1; i <= d; ++i) q_pow[static_cast<size_t>(i)] = q_pow[static_cast<size_t>(i) - 1] * F.q();

  std::vector<bool> covered(size, false);
  for (const auto& [normal_idx, offset_code] : canon) {
    FVector normal = vector_from_index(ctx, d, normal_idx);
    int pivot = 0;
    while (normal.coords[pivot].code == 0) ++pivot;
    const uint64_t combos = q_pow[static_cast<size_t>(d) - 1];
    for (uint64_t assignment = 0; assignment < combos; ++assignment) {
      uint64_t rest = assignment;
      uint64_t index = 0;
      FieldElem partial = F.zero();
      for (int i = 0; i < d; ++i) {
        if (i == pivot) continue;
        FieldElem zi{static_cast<uint32_t>(rest % F.q())};
        rest /= F.q();
        index += zi.code * q_pow[static_cast<size_t>(i)];
        partial = F.add(partial, F.mul(normal.coords[i], zi));
      }
      FieldElem zp = F.sub({offset_code}, partial);  // normal[pivot] = 1
      index += zp.code * q_pow[static_cast<size_t>(pivot)];
      covered[index] = true;
    }
  }

  CoverComplement out;
  out.complement_size = size - static_cast<uint64_t>(std::count(covered.begin(), covered.end(), true));
  out.bound_num = space_cardinality(F, d + 1);
  out.bound_den = canon.size();
  out.holds = static_cast<unsigned __int128>(out.complement_size) * out.bound_den <=
              out.bound_num;
  return out;
}

OrthogonalityLowerBound check_orthogonality_lower_bound(const PointSet& A) {
  OrthogonalityLowerBound out;
  out.actual = count_orthogonal_pairs(A).ordered;
  const double m = static_cast<double>(A.size());
  const double q = static_cast<double>(A.ctx()->q());
  out.lower_bound = m * m / q - std::pow(q, A.dim() / 2.0) * m;
  out.holds = static_cast<double>(out.actual) >= out.lower_bound - 1e-9;
  return out;
}

FunctionTable FunctionTable::zero(FieldCtxPtr ctx, int d) {
  const uint64_t size = space_cardinality(*ctx, d);
  if (size > kDenseTableBudget) fail(Errc::ScanTooLarge, "dense table too large");
  return FunctionTable{std::move(ctx), d, std::vector<std::complex<double>>(size)};
}

FunctionTable FunctionTable::indicator(const PointSet& A) {
  FunctionTable f = zero(A.ctx(), A.dim());
  for (uint64_t idx : A.indices()) f.values[idx] = 1.0;
  return f;
}

namespace {

FunctionTable dense_transform(const FunctionTable& f, bool forward) {
  const FieldCtx& F = *f.ctx;
  const uint64_t size = space_cardinality(F, f.d);
  if (size > kDenseTableBudget) fail(Errc::ScanTooLarge, "dense table too large");
  if (f.values.size() != size) fail(Errc::BadPointSet, "table length must be q^d");

  std::vector<std::complex<double>> chi(F.q());
  for (uint64_t t = 0; t < F.q(); ++t) {
    chi[t] = F.additive_character({static_cast<uint32_t>(t)});
  }

  Decoded pts = [&] {
    std::vector<uint64_t> all(size);
    for (uint64_t i = 0; i < size; ++i) all[i] = i;
    return Decoded(PointSet(f.ctx, f.d, std::move(all)));
  }();

  FunctionTable out{f.ctx, f.d, std::vector<std::complex<double>>(size)};
  const double scale = forward ? 1.0 / static_cast<double>(size) : 1.0;
  for (uint64_t xi = 0; xi < size; ++xi) {
    std::complex<double> acc = 0.0;
    for (uint64_t eta = 0; eta < size; ++eta) {
      FieldElem phase = dot_rows(F, pts.row(xi), pts.row(eta), f.d);
      if (forward) phase = F.neg(phase);
      acc += f.values[eta] * chi[phase.code];
    }
    out.values[xi] = acc * scale;
  }
  return out;
}

}  // namespace

FunctionTable fourier_transform(const FunctionTable& f) { return dense_transform(f, true); }

FunctionTable inverse_fourier_transform(const FunctionTable& fhat) {
  return dense_transform(fhat, false);
}

}  // namespace ffgeo

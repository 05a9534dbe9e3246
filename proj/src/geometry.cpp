#include "ffgeo/geometry.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace ffgeo {

namespace {

void check_same(const FVector& a, const FVector& b) {
  if (!(*a.ctx == *b.ctx)) fail(Errc::MixedContexts, "vectors from different fields");
  if (a.dim() != b.dim()) fail(Errc::DimensionMismatch, "vectors of different dimensions");
}

constexpr uint64_t kEnumerationGuard = 100'000'000;

}  // namespace

uint64_t space_cardinality(const FieldCtx& ctx, int d) {
  if (d < 1) fail(Errc::DimensionMismatch, "dimension must be positive");
  uint64_t size = 1;
  for (int i = 0; i < d; ++i) {
    if (size > (uint64_t{1} << 62) / ctx.q()) {
      fail(Errc::OrderOverflow, "q^d exceeds the integer point encoding");
    }
    size *= ctx.q();
  }
  return size;
}

bool FVector::is_zero() const {
  for (FieldElem c : coords) {
    if (c.code != 0) return false;
  }
  return true;
}

uint64_t FVector::index() const {
  space_cardinality(*ctx, dim());  // overflow guard
  uint64_t idx = 0;
  for (size_t i = coords.size(); i-- > 0;) idx = idx * ctx->q() + coords[i].code;
  return idx;
}

FVector vector_from_index(FieldCtxPtr ctx, int d, uint64_t index) {
  const uint64_t size = space_cardinality(*ctx, d);
  if (index >= size) fail(Errc::BadPointSet, "point index out of range");
  FVector v{std::move(ctx), std::vector<FieldElem>(static_cast<size_t>(d))};
  for (int i = 0; i < d; ++i) {
    v.coords[i] = {static_cast<uint32_t>(index % v.ctx->q())};
    index /= v.ctx->q();
  }
  return v;
}

FVector vector_from_ints(FieldCtxPtr ctx, const std::vector<int64_t>& values) {
  FVector v{ctx, {}};
  v.coords.reserve(values.size());
  for (int64_t x : values) v.coords.push_back(ctx->from_int(x));
  return v;
}

FVector vadd(const FVector& a, const FVector& b) {
  check_same(a, b);
  FVector r{a.ctx, a.coords};
  for (int i = 0; i < a.dim(); ++i) r.coords[i] = a.ctx->add(a.coords[i], b.coords[i]);
  return r;
}

FVector vsub(const FVector& a, const FVector& b) {
  check_same(a, b);
  FVector r{a.ctx, a.coords};
  for (int i = 0; i < a.dim(); ++i) r.coords[i] = a.ctx->sub(a.coords[i], b.coords[i]);
  return r;
}

FVector vneg(const FVector& a) {
  FVector r{a.ctx, a.coords};
  for (int i = 0; i < a.dim(); ++i) r.coords[i] = a.ctx->neg(a.coords[i]);
  return r;
}

FVector vscale(FieldElem r, const FVector& a) {
  FVector out{a.ctx, a.coords};
  for (int i = 0; i < a.dim(); ++i) out.coords[i] = a.ctx->mul(r, a.coords[i]);
  return out;
}

FieldElem dot(const FVector& u, const FVector& v) {
  check_same(u, v);
  FieldElem acc = u.ctx->zero();
  for (int i = 0; i < u.dim(); ++i) {
    acc = u.ctx->add(acc, u.ctx->mul(u.coords[i], v.coords[i]));
  }
  return acc;
}

FieldElem norm(const FVector& v) { return dot(v, v); }

SpreadValue spread(const FVector& a, const FVector& b) {
  check_same(a, b);
  if (a.is_zero() || b.is_zero()) fail(Errc::ZeroVector, "spread of a zero vector");
  const FieldCtx& F = *a.ctx;
  FieldElem den = F.mul(norm(a), norm(b));
  if (den.code == 0) return SpreadValue::undefined();
  FieldElem ab = dot(a, b);
  return SpreadValue::of(F.sub(F.one(), F.mul(F.mul(ab, ab), F.inv(den))));
}

SpreadValue spread_triple(const FVector& a, const FVector& b, const FVector& c) {
  check_same(a, b);
  check_same(b, c);
  if (a == b || b == c || a == c) fail(Errc::NonDistinctTriple, "spread triple must be distinct");
  return spread(vsub(a, b), vsub(c, b));
}

bool is_right_triple(const FVector& x, const FVector& y, const FVector& z) {
  check_same(x, y);
  check_same(y, z);
  if (x == y || y == z || x == z) return false;
  return dot(vsub(x, y), vsub(z, y)).code == 0;
}

bool is_collinear(const FVector& a, const FVector& b, const FVector& c) {
  check_same(a, b);
  check_same(b, c);
  if (a == b || b == c || a == c) return false;
  const FieldCtx& F = *a.ctx;
  FVector u = vsub(b, a);
  FVector v = vsub(c, a);
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = i + 1; j < a.dim(); ++j) {
      FieldElem minor =
          F.sub(F.mul(u.coords[i], v.coords[j]), F.mul(u.coords[j], v.coords[i]));
      if (minor.code != 0) return false;
    }
  }
  return true;
}

namespace {

int first_nonzero(const FVector& v) {
  for (int i = 0; i < v.dim(); ++i) {
    if (v.coords[i].code != 0) return i;
  }
  return -1;
}

int last_nonzero(const FVector& v) {
  for (int i = v.dim(); i-- > 0;) {
    if (v.coords[i].code != 0) return i;
  }
  return -1;
}

// Scale so the first nonzero coordinate is 1.
FVector canonical_direction(const FVector& dir) {
  int pivot = first_nonzero(dir);
  assert(pivot >= 0);
  return vscale(dir.ctx->inv(dir.coords[pivot]), dir);
}

}  // namespace

Line Line::through(const FVector& a, const FVector& b) {
  check_same(a, b);
  if (a == b) fail(Errc::EqualPoints, "a line needs two distinct points");
  FVector dir = canonical_direction(vsub(b, a));
  // The smallest-index point on the line zeroes the last coordinate moved
  // by the direction: every higher coordinate is constant along the line,
  // and index order is dominated by high coordinates.
  const FieldCtx& F = *a.ctx;
  int top = last_nonzero(dir);
  FieldElem t = F.neg(F.mul(a.coords[top], F.inv(dir.coords[top])));
  return Line{vadd(a, vscale(t, dir)), std::move(dir)};
}

std::vector<FVector> Line::points() const {
  std::vector<FVector> pts;
  pts.reserve(base.ctx->q());
  for (uint64_t t = 0; t < base.ctx->q(); ++t) {
    pts.push_back(vadd(base, vscale({static_cast<uint32_t>(t)}, direction)));
  }
  return pts;
}

Hyperplane Hyperplane::from(const FVector& normal, FieldElem offset) {
  int pivot = first_nonzero(normal);
  if (pivot < 0) fail(Errc::ZeroVector, "hyperplane normal must be nonzero");
  FieldElem s = normal.ctx->inv(normal.coords[pivot]);
  return Hyperplane{vscale(s, normal), normal.ctx->mul(s, offset)};
}

Hyperplane Hyperplane::through_points(const FVector& x, const FVector& y) {
  check_same(x, y);
  if (x == y) fail(Errc::EqualPoints, "h_xy needs two distinct points");
  FVector n = vsub(y, x);
  return from(n, dot(x, n));
}

bool Hyperplane::contains(const FVector& z) const { return dot(normal, z) == offset; }

std::vector<FVector> Hyperplane::points() const {
  const FieldCtx& F = *normal.ctx;
  const int d = normal.dim();
  const uint64_t count = space_cardinality(F, d - 1);
  if (count > kEnumerationGuard) fail(Errc::ScanTooLarge, "hyperplane too large to materialize");
  const int pivot = first_nonzero(normal);  // normal[pivot] = 1 in canonical form

  std::vector<FVector> pts;
  pts.reserve(count);
  FVector z{normal.ctx, std::vector<FieldElem>(static_cast<size_t>(d))};
  for (uint64_t assignment = 0; assignment < count; ++assignment) {
    uint64_t rest = assignment;
    FieldElem partial = F.zero();
    for (int i = 0; i < d; ++i) {
      if (i == pivot) continue;
      z.coords[i] = {static_cast<uint32_t>(rest % F.q())};
      rest /= F.q();
      partial = F.add(partial, F.mul(normal.coords[i], z.coords[i]));
    }
    z.coords[pivot] = F.sub(offset, partial);
    pts.push_back(z);
  }
  return pts;
}

std::optional<FVector> find_isotropic(FieldCtxPtr ctx, int d) {
  if (d < 2) fail(Errc::DimensionMismatch, "isotropic vectors need d >= 2");
  const FieldCtx& F = *ctx;
  FieldElem minus_one = F.neg(F.one());

  if (d == 2) {
    auto r = F.square_root(minus_one);
    if (!r) return std::nullopt;  // q = 3 mod 4
    FVector v{ctx, {F.one(), *r}};
    return v;
  }

  // d >= 3: smallest-index solution of x^2 + y^2 + z^2 = 0. Any vector
  // supported on later coordinates has a larger index, so searching the
  // first three coordinates suffices.
  auto make = [&](FieldElem x, FieldElem y, FieldElem z) {
    FVector v{ctx, std::vector<FieldElem>(static_cast<size_t>(d), F.zero())};
    v.coords[0] = x;
    v.coords[1] = y;
    v.coords[2] = z;
    return v;
  };
  if (F.quadratic_character(minus_one) == 1) {
    // z = 0, y = 1 is the first solvable slice: x^2 = -1
    return make(*F.square_root(minus_one), F.one(), F.zero());
  }
  // -1 is a nonsquare, so the z = 0 plane holds no nonzero solution.
  for (uint64_t zc = 1; zc < F.q(); ++zc) {
    FieldElem z{static_cast<uint32_t>(zc)};
    FieldElem z2 = F.mul(z, z);
    for (uint64_t yc = 0; yc < F.q(); ++yc) {
      FieldElem y{static_cast<uint32_t>(yc)};
      FieldElem target = F.neg(F.add(z2, F.mul(y, y)));
      if (auto x = F.square_root(target)) return make(*x, y, z);
    }
  }
  return std::nullopt;  // unreachable: x^2+y^2+z^2 = 0 is always solvable
}

std::vector<Line> lines_through_origin(FieldCtxPtr ctx, int d) {
  if (d < 2) fail(Errc::DimensionMismatch, "need d >= 2");
  const FieldCtx& F = *ctx;
  const uint64_t total = (space_cardinality(F, d) - 1) / (F.q() - 1);
  if (total > 10'000'000) fail(Errc::ScanTooLarge, "too many lines to enumerate");

  FVector origin{ctx, std::vector<FieldElem>(static_cast<size_t>(d), F.zero())};
  std::vector<Line> lines;
  lines.reserve(total);
  for (int pivot = 0; pivot < d; ++pivot) {
    const int free = d - 1 - pivot;
    uint64_t combos = 1;
    for (int i = 0; i < free; ++i) combos *= F.q();
    for (uint64_t tail = 0; tail < combos; ++tail) {
      FVector dir{ctx, std::vector<FieldElem>(static_cast<size_t>(d), F.zero())};
      dir.coords[pivot] = F.one();
      uint64_t rest = tail;
      for (int i = pivot + 1; i < d; ++i) {
        dir.coords[i] = {static_cast<uint32_t>(rest % F.q())};
        rest /= F.q();
      }
      lines.push_back(Line{origin, std::move(dir)});
    }
  }
  return lines;
}

OrthogonalMap OrthogonalMap::identity(FieldCtxPtr ctx, int d) {
  OrthogonalMap m{ctx, d, std::vector<FieldElem>(static_cast<size_t>(d) * d, ctx->zero())};
  for (int i = 0; i < d; ++i) m.entries[static_cast<size_t>(i) * d + i] = ctx->one();
  return m;
}

OrthogonalMap OrthogonalMap::reflection(const FVector& v) {
  const FieldCtx& F = *v.ctx;
  FieldElem nv = norm(v);
  if (v.is_zero() || nv.code == 0) {
    fail(Errc::ZeroVector, "reflection axis must be non-isotropic");
  }
  const int d = v.dim();
  FieldElem two_over = F.mul(F.from_int(2), F.inv(nv));
  OrthogonalMap m = identity(v.ctx, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      FieldElem corr = F.mul(two_over, F.mul(v.coords[i], v.coords[j]));
      auto& e = m.entries[static_cast<size_t>(i) * d + j];
      e = F.sub(e, corr);
    }
  }
  assert(m.is_orthogonal());
  return m;
}

FVector OrthogonalMap::apply(const FVector& x) const {
  if (!(*x.ctx == *ctx)) fail(Errc::MixedContexts, "vector from another field");
  if (x.dim() != d) fail(Errc::DimensionMismatch, "vector dimension mismatch");
  const FieldCtx& F = *ctx;
  FVector y{ctx, std::vector<FieldElem>(static_cast<size_t>(d), F.zero())};
  for (int r = 0; r < d; ++r) {
    FieldElem acc = F.zero();
    for (int c = 0; c < d; ++c) acc = F.add(acc, F.mul(at(r, c), x.coords[c]));
    y.coords[r] = acc;
  }
  return y;
}

OrthogonalMap OrthogonalMap::compose(const OrthogonalMap& other) const {
  const FieldCtx& F = *ctx;
  OrthogonalMap out{ctx, d, std::vector<FieldElem>(static_cast<size_t>(d) * d, F.zero())};
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      FieldElem acc = F.zero();
      for (int k = 0; k < d; ++k) acc = F.add(acc, F.mul(at(r, k), other.at(k, c)));
      out.entries[static_cast<size_t>(r) * d + c] = acc;
    }
  }
  return out;
}

bool OrthogonalMap::is_orthogonal() const {
  const FieldCtx& F = *ctx;
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      FieldElem acc = F.zero();
      for (int k = 0; k < d; ++k) acc = F.add(acc, F.mul(at(r, k), at(c, k)));
      if (acc != (r == c ? F.one() : F.zero())) return false;
    }
  }
  return true;
}

OrthogonalMap random_orthogonal(FieldCtxPtr ctx, int d, uint64_t seed, int reflections) {
  if (d < 2) fail(Errc::DimensionMismatch, "need d >= 2");
  if (reflections < 0) reflections = 2 * d;
  SplitMix64 rng(seed);
  OrthogonalMap m = OrthogonalMap::identity(ctx, d);
  for (int k = 0; k < reflections; ++k) {
    FVector v{ctx, std::vector<FieldElem>(static_cast<size_t>(d))};
    do {
      for (int i = 0; i < d; ++i) v.coords[i] = {static_cast<uint32_t>(rng.below(ctx->q()))};
    } while (v.is_zero() || norm(v).code == 0);
    m = OrthogonalMap::reflection(v).compose(m);
  }
  if (!m.is_orthogonal()) throw std::logic_error("reflection product lost orthogonality");
  return m;
}

}  // namespace ffgeo

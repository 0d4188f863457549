#include "ginv/rect_inverses.hpp"

#include "block_ops.hpp"

namespace ginv {

using detail::expect_shape;
using detail::mul;
using detail::neg;

namespace {

struct Dims {
  std::size_t r, mr, nr;  // r, m - r, n - r
};

Dims dims_of(const FactoredMatrix& f) { return {f.r, f.m() - f.r, f.n() - f.r}; }

Block identity_block(std::size_t r) {
  if (r == 0) return absent;
  return RMatrix::identity(r);
}

void expect_params(const FactoredMatrix& f, const BlockParams& b) {
  const auto d = dims_of(f);
  expect_shape(b.x0, d.r, d.r, "X0");
  expect_shape(b.x1, d.r, d.mr, "X1");
  expect_shape(b.x2, d.nr, d.r, "X2");
  expect_shape(b.x3, d.nr, d.mr, "X3");
}

}  // namespace

Block zero_block(std::size_t rows, std::size_t cols) { return detail::zero_or_absent(rows, cols); }

BlockParams zero_params(const FactoredMatrix& f) {
  const auto d = dims_of(f);
  return {zero_block(d.r, d.r), zero_block(d.r, d.mr), zero_block(d.nr, d.r), zero_block(d.nr, d.mr)};
}

RMatrix assemble(const FactoredMatrix& f, const BlockParams& b) {
  expect_params(f, b);
  return f.p * block_compose(b) * f.q;
}

StarBlocks compute_star_blocks(const FactoredMatrix& f) {
  const auto qq = block_extract(f.q * transpose(f.q), f.r);
  const auto pp = block_extract(transpose(f.p) * f.p, f.r);
  StarBlocks out{{qq.x0, qq.x1, qq.x2, qq.x3}, {pp.x0, pp.x1, pp.x2, pp.x3}};

  const auto symmetric = [](const Block& b) { return !b || detail::is_symmetric(*b); };
  const auto transposed = [](const Block& upper, const Block& lower) {
    if (!upper || !lower) return !upper && !lower;
    return transpose(*upper) == *lower;
  };
  const auto regular = [](const Block& b) { return !b || rank(*b) == b->rows(); };

  const auto& s = out.q;
  const auto& t = out.p;
  if (!symmetric(s.s1) || !symmetric(s.s4) || !transposed(s.s2, s.s3) || !regular(s.s4)) {
    throw InternalInvariantViolation("compute_star_blocks: Q*Q^T blocks violate symmetry or S4 is singular");
  }
  if (!symmetric(t.t1) || !symmetric(t.t4) || !transposed(t.t2, t.t3) || !regular(t.t4)) {
    throw InternalInvariantViolation("compute_star_blocks: P^T*P blocks violate symmetry or T4 is singular");
  }
  return out;
}

Block eq3_x1_block(const StarBlocksQ& sq) {
  if (!sq.s2) return absent;
  return -(*sq.s2 * inverse(*sq.s4));
}

Block eq4_x2_block(const StarBlocksP& sp) {
  if (!sp.t3) return absent;
  return -(inverse(*sp.t4) * *sp.t3);
}

RMatrix g1_inverse(const FactoredMatrix& f, const Block& x1, const Block& x2, const Block& x3) {
  return assemble(f, {identity_block(f.r), x1, x2, x3});
}

RMatrix g2_inverse(const FactoredMatrix& f, const Block& x0, const Block& fblk, const Block& gblk) {
  const auto d = dims_of(f);
  expect_shape(x0, d.r, d.r, "X0");
  expect_shape(fblk, d.r, d.mr, "F");
  expect_shape(gblk, d.nr, d.r, "G");
  if (x0 && *x0 * *x0 != *x0) throw NotIdempotent("g2_inverse: X0 * X0 != X0");

  const Block x1 = mul(x0, fblk, d.r, d.mr);
  const Block x2 = mul(gblk, x0, d.nr, d.r);
  const Block x3 = mul(x2, x1, d.nr, d.mr);
  return assemble(f, {x0, x1, x2, x3});
}

RMatrix g12_inverse(const FactoredMatrix& f, const Block& x1, const Block& x2) {
  const auto d = dims_of(f);
  expect_shape(x1, d.r, d.mr, "X1");
  expect_shape(x2, d.nr, d.r, "X2");
  return assemble(f, {identity_block(d.r), x1, x2, mul(x2, x1, d.nr, d.mr)});
}

RMatrix g13_inverse(const FactoredMatrix& f, const Block& x2, const Block& x3) {
  const auto sb = compute_star_blocks(f);
  return assemble(f, {identity_block(f.r), eq3_x1_block(sb.q), x2, x3});
}

RMatrix g123_inverse(const FactoredMatrix& f, const Block& x2) {
  const auto d = dims_of(f);
  expect_shape(x2, d.nr, d.r, "X2");
  const auto sb = compute_star_blocks(f);
  const Block x1 = eq3_x1_block(sb.q);
  return assemble(f, {identity_block(d.r), x1, x2, mul(x2, x1, d.nr, d.mr)});
}

RMatrix g14_inverse(const FactoredMatrix& f, const Block& x1, const Block& x3) {
  const auto sb = compute_star_blocks(f);
  return assemble(f, {identity_block(f.r), x1, eq4_x2_block(sb.p), x3});
}

RMatrix g124_inverse(const FactoredMatrix& f, const Block& x1) {
  const auto d = dims_of(f);
  expect_shape(x1, d.r, d.mr, "X1");
  const auto sb = compute_star_blocks(f);
  const Block x2 = eq4_x2_block(sb.p);
  return assemble(f, {identity_block(d.r), x1, x2, mul(x2, x1, d.nr, d.mr)});
}

RMatrix g134_inverse(const FactoredMatrix& f, const Block& x3) {
  const auto sb = compute_star_blocks(f);
  return assemble(f, {identity_block(f.r), eq3_x1_block(sb.q), eq4_x2_block(sb.p), x3});
}

RMatrix moore_penrose(const FactoredMatrix& f) {
  const auto d = dims_of(f);
  const auto sb = compute_star_blocks(f);
  const Block x1 = eq3_x1_block(sb.q);
  const Block x2 = eq4_x2_block(sb.p);
  return assemble(f, {identity_block(d.r), x1, x2, mul(x2, x1, d.nr, d.mr)});
}

RMatrix moore_penrose(const RMatrix& a, PivotPolicy policy) {
  return moore_penrose(full_rank_reduce(a, policy));
}

bool validate_g2_blocks(const FactoredMatrix& f, const BlockParams& b) {
  expect_params(f, b);
  const auto d = dims_of(f);
  const bool blocks_ok = detail::same(mul(b.x0, b.x0, d.r, d.r), b.x0) &&
                         detail::same(mul(b.x0, b.x1, d.r, d.mr), b.x1) &&
                         detail::same(mul(b.x2, b.x0, d.nr, d.r), b.x2) &&
                         detail::same(mul(b.x2, b.x1, d.nr, d.mr), b.x3);

  const RMatrix x = assemble(f, b);
  const bool direct = x * f.a * x == x;
  if (blocks_ok != direct) {
    throw InternalInvariantViolation("validate_g2_blocks: block conditions and XAX = X disagree");
  }
  return blocks_ok;
}

bool validate_g3_blocks(const FactoredMatrix& f, const StarBlocksQ& sq, const BlockParams& b) {
  expect_params(f, b);
  const auto d = dims_of(f);
  expect_shape(sq.s1, d.r, d.r, "S1");
  expect_shape(sq.s2, d.r, d.mr, "S2");
  expect_shape(sq.s4, d.mr, d.mr, "S4");

  bool blocks_ok = true;
  if (d.r > 0) {
    RMatrix w = *sq.s1;
    if (sq.s2) w = w - *sq.s2 * inverse(*sq.s4) * transpose(*sq.s2);
    blocks_ok = w * transpose(*b.x0) == *b.x0 * w;
    if (d.mr > 0) blocks_ok = blocks_ok && *b.x1 == -(*b.x0 * *sq.s2 * inverse(*sq.s4));
  }

  const RMatrix x = assemble(f, b);
  const bool direct = detail::is_symmetric(f.a * x);
  if (blocks_ok != direct) {
    throw InternalInvariantViolation("validate_g3_blocks: block conditions and (AX)^T = AX disagree");
  }
  return blocks_ok;
}

bool validate_g4_blocks(const FactoredMatrix& f, const StarBlocksP& sp, const BlockParams& b) {
  expect_params(f, b);
  const auto d = dims_of(f);
  expect_shape(sp.t1, d.r, d.r, "T1");
  expect_shape(sp.t3, d.nr, d.r, "T3");
  expect_shape(sp.t4, d.nr, d.nr, "T4");

  bool blocks_ok = true;
  if (d.r > 0) {
    RMatrix w = *sp.t1;
    if (sp.t3) w = w - transpose(*sp.t3) * inverse(*sp.t4) * *sp.t3;
    blocks_ok = transpose(*b.x0) * w == w * *b.x0;
    if (d.nr > 0) blocks_ok = blocks_ok && *b.x2 == -(inverse(*sp.t4) * *sp.t3 * *b.x0);
  }

  const RMatrix x = assemble(f, b);
  const bool direct = detail::is_symmetric(x * f.a);
  if (blocks_ok != direct) {
    throw InternalInvariantViolation("validate_g4_blocks: block conditions and (XA)^T = XA disagree");
  }
  return blocks_ok;
}

}  // namespace ginv

#include "ginv/square_inverses.hpp"

#include <algorithm>
#include <sstream>

#include "block_ops.hpp"
#include "ginv/rect_inverses.hpp"

namespace ginv {

namespace {

void require_square(const RMatrix& a, const char* op) {
  if (!a.is_square()) {
    throw DimensionMismatch(std::string(op) + ": matrix must be square, got " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()));
  }
}

Polynomial trimmed(Polynomial p) {
  while (!p.coeffs.empty() && p.coeffs.back().is_zero()) p.coeffs.pop_back();
  return p;
}

Polynomial monomial(const Rational& c, std::size_t degree) {
  Polynomial p;
  p.coeffs.resize(degree + 1);
  p.coeffs[degree] = c;
  return trimmed(std::move(p));
}

std::string term(const Rational& c, std::size_t degree) {
  std::string mono = degree == 0 ? "" : (degree == 1 ? "x" : "x^" + std::to_string(degree));
  mpz_class num = abs(c.numerator());
  std::string body = (num == 1 && !mono.empty()) ? mono : num.get_str() + mono;
  if (c.denominator() != 1) body += "/" + c.denominator().get_str();
  return body;
}

std::size_t index_by_rank(const RMatrix& a) {
  std::size_t prev_rank = a.rows();
  RMatrix pow = a;
  for (std::size_t k = 0;; ++k) {
    const std::size_t next_rank = rank(pow);
    if (next_rank == prev_rank) return k;
    prev_rank = next_rank;
    pow = pow * a;
  }
}

}  // namespace

// --- Polynomial -----------------------------------------------------------

bool Polynomial::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c.is_zero(); });
}

std::size_t Polynomial::degree() const {
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (!coeffs[i].is_zero()) return i;
  }
  return 0;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const Rational& c = coeffs[i];
    if (c.is_zero()) continue;
    if (first) {
      out += c.sign() < 0 ? "-" : "";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    out += term(c, i);
    first = false;
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return trimmed(a).coeffs == trimmed(b).coeffs;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Polynomial out;
  out.coeffs.resize(a.coeffs.size() + b.coeffs.size() - 1);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return trimmed(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  return trimmed(std::move(out));
}

RMatrix evaluate(const Polynomial& p, const RMatrix& a) {
  require_square(a, "evaluate");
  const std::size_t n = a.rows();
  RMatrix acc = RMatrix::zero(n, n);
  for (std::size_t i = p.coeffs.size(); i-- > 0;) {
    acc = acc * a;
    for (std::size_t d = 0; d < n; ++d) acc(d, d) += p.coeffs[i];
  }
  return acc;
}

// --- Minimal and q-polynomial ---------------------------------------------

MinimalPolynomial minimal_polynomial(const RMatrix& a) {
  require_square(a, "minimal_polynomial");
  const std::size_t n = a.rows();
  const std::size_t len = n * n;

  // Columns are vec(A^0), vec(A^1), ...; the first dependent column gives mu.
  std::vector<RMatrix> powers{RMatrix::identity(n)};
  for (std::size_t d = 1; d <= n; ++d) {
    powers.push_back(powers.back() * a);
    RMatrix krylov(len, d + 1);
    for (std::size_t c = 0; c <= d; ++c) {
      const auto src = powers[c].entries();
      for (std::size_t i = 0; i < len; ++i) krylov(i, c) = src[i];
    }
    const auto echelon = row_reduce(krylov);
    if (echelon.pivot_cols.size() == d + 1) continue;

    // Columns 0..d-1 are independent, so row i of the RREF holds the
    // coefficient of A^i in the expansion of A^d.
    Polynomial mu;
    mu.coeffs.resize(d + 1);
    for (std::size_t i = 0; i < d; ++i) mu.coeffs[i] = -echelon.reduced(i, d);
    mu.coeffs[d] = 1;

    std::size_t k = 0;
    while (mu.coeffs[k].is_zero()) ++k;
    return {std::move(mu), d, k};
  }
  throw InternalInvariantViolation("minimal_polynomial: no dependence up to degree n");
}

QPolynomial q_polynomial(const MinimalPolynomial& mu) {
  const std::size_t m = mu.degree;
  const std::size_t k = mu.index;
  const Rational& ck = mu.lowest_coeff();

  QPolynomial q;
  if (m > k) {
    q.poly.coeffs.resize(m - k);
    const Rational scale = -(Rational(1) / ck);
    for (std::size_t j = 0; j < m - k; ++j) q.poly.coeffs[j] = scale * mu.poly.coeffs[k + 1 + j];
  }

  // mu(x) = c_k x^k (1 - x q(x))
  const Polynomial one_minus_xq = monomial(1, 0) - monomial(1, 1) * q.poly;
  if (monomial(ck, k) * one_minus_xq != mu.poly) {
    throw InternalInvariantViolation("q_polynomial: mu != c_k x^k (1 - x q(x))");
  }
  return q;
}

std::size_t index_of(const RMatrix& a) {
  require_square(a, "index_of");
  const std::size_t k = index_by_rank(a);
  if (minimal_polynomial(a).index != k) {
    throw InternalInvariantViolation("index_of: rank-based index disagrees with minimal polynomial");
  }
  return k;
}

// --- Group inverse ----------------------------------------------------------

RMatrix group_inverse_poly(const RMatrix& a) {
  require_square(a, "group_inverse_poly");
  const std::size_t k = index_of(a);
  if (k > 1) throw IndexTooLarge("group_inverse_poly: ind(A) = " + std::to_string(k) + " > 1, no group inverse");
  const RMatrix qa = evaluate(q_polynomial(minimal_polynomial(a)).poly, a);
  return a * qa * qa;
}

GroupBlocks group_blocks(const FactoredMatrix& f) {
  auto v = block_extract(f.q * f.p, f.r);
  return {std::move(v.x0), std::move(v.x1), std::move(v.x2), std::move(v.x3)};
}

RMatrix group_inverse_block(const FactoredMatrix& f) {
  require_square(f.a, "group_inverse_block");
  const std::size_t r = f.r;
  const std::size_t nr = f.n() - r;
  if (nr == 0) return f.p * f.q;

  const auto v = group_blocks(f);
  if (rank(*v.v4) < nr) throw V4Singular("group_inverse_block: V4 block of Q*P is singular");
  const RMatrix v4_inv = inverse(*v.v4);

  const Block x1 = v.v2 ? Block(-(*v.v2 * v4_inv)) : absent;
  const Block x2 = v.v3 ? Block(-(v4_inv * *v.v3)) : absent;
  const Block x0 = r > 0 ? Block(RMatrix::identity(r)) : absent;
  return assemble(f, {x0, x1, x2, detail::mul(x2, x1, nr, nr)});
}

RMatrix group_inverse_block(const RMatrix& a, PivotPolicy policy) {
  require_square(a, "group_inverse_block");
  const std::size_t k = index_of(a);
  if (k > 1) throw IndexTooLarge("group_inverse_block: ind(A) = " + std::to_string(k) + " > 1, no group inverse");
  try {
    return group_inverse_block(full_rank_reduce(a, policy));
  } catch (const V4Singular&) {
    const auto other = policy == PivotPolicy::RowMajor ? PivotPolicy::ReverseScan : PivotPolicy::RowMajor;
    return group_inverse_block(full_rank_reduce(a, other));
  }
}

// --- Drazin and EP ----------------------------------------------------------

RMatrix drazin_inverse(const RMatrix& a) {
  require_square(a, "drazin_inverse");
  const std::size_t k = index_of(a);
  const auto q = q_polynomial(minimal_polynomial(a));
  if (q.poly.is_zero()) return RMatrix::zero(a.rows(), a.cols());
  return power(a, k) * power(evaluate(q.poly, a), k + 1);
}

bool drazin_onecheck(const RMatrix& a) {
  const bool holds = a * drazin_inverse(a) * a == a;
  if (holds != (index_of(a) <= 1)) {
    throw InternalInvariantViolation("drazin_onecheck: A A^D A = A disagrees with ind(A) <= 1");
  }
  return holds;
}

bool is_ep(const RMatrix& a) {
  require_square(a, "is_ep");
  const bool by_definition = moore_penrose(a) == drazin_inverse(a);
  const bool by_null_space = rank(vstack(a, transpose(a))) == rank(a);
  if (by_definition != by_null_space) {
    throw InternalInvariantViolation("is_ep: A^+ = A^D disagrees with N(A) = N(A^T)");
  }
  return by_definition;
}

}  // namespace ginv

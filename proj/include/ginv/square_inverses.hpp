#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ginv/factorize.hpp"
#include "ginv/matrix.hpp"

namespace ginv {

/// Dense polynomial with rational coefficients, coeffs[i] multiplying x^i.
/// An empty coefficient list is the zero polynomial.
struct Polynomial {
  std::vector<Rational> coeffs;

  bool is_zero() const;
  /// Degree of the highest nonzero coefficient; 0 for the zero polynomial.
  std::size_t degree() const;
  /// Human-readable form such as "x^3 - 15x^2 - 18x" or "x/18 - 5/6".
  std::string str() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
};

Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);

/// p(A) for square A, by Horner's rule.
RMatrix evaluate(const Polynomial& p, const RMatrix& a);

/// mu(x) = x^m + c_{m-1} x^{m-1} + ... + c_k x^k with c_k != 0.
struct MinimalPolynomial {
  Polynomial poly;     // monic, degree m
  std::size_t degree;  // m
  std::size_t index;   // k, lowest degree with a nonzero coefficient

  const Rational& lowest_coeff() const { return poly.coeffs[index]; }
};

/// q(x) with mu(x) = c_k x^k (1 - x q(x)); zero when mu(x) = x^k.
struct QPolynomial {
  Polynomial poly;
};

/// Least-degree monic annihilating polynomial, found as the first linear
/// dependence among vec(I), vec(A), vec(A^2), ...
MinimalPolynomial minimal_polynomial(const RMatrix& a);

/// Throws InternalInvariantViolation if the identity mu = c_k x^k (1 - x q) fails.
QPolynomial q_polynomial(const MinimalPolynomial& mu);

/// Smallest k with rank(A^k) = rank(A^{k+1}). Cross-checked against the
/// multiplicity of 0 as a root of the minimal polynomial.
std::size_t index_of(const RMatrix& a);

/// Group inverse A * q(A)^2. Throws IndexTooLarge when ind(A) > 1.
RMatrix group_inverse_poly(const RMatrix& a);

/// Blocks of Q * P split at r.
struct GroupBlocks {
  Block v1, v2, v3, v4;
};

GroupBlocks group_blocks(const FactoredMatrix& f);

/// Group inverse P * [[I_r, -V2 V4^-1], [-V4^-1 V3, V4^-1 V3 V2 V4^-1]] * Q
/// for the given factorization. Throws V4Singular if V4 is not invertible.
RMatrix group_inverse_block(const FactoredMatrix& f);

/// Same, factoring A internally. Throws IndexTooLarge when ind(A) > 1; if V4
/// is singular under `policy` it retries once with the other pivot policy
/// before throwing V4Singular.
RMatrix group_inverse_block(const RMatrix& a, PivotPolicy policy = PivotPolicy::RowMajor);

/// Drazin inverse A^k * q(A)^{k+1} with k = ind(A). Zero for nilpotent A.
RMatrix drazin_inverse(const RMatrix& a);

/// Whether A * A^D * A = A. Throws InternalInvariantViolation if this
/// disagrees with ind(A) <= 1.
bool drazin_onecheck(const RMatrix& a);

/// Whether A^+ = A^D. Cross-checked against N(A) = N(A^T), tested as
/// rank([A; A^T]) = rank(A).
bool is_ep(const RMatrix& a);

}  // namespace ginv

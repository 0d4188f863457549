#pragma once

// Block representations X = P * [[X0, X1], [X2, X3]] * Q of generalized
// inverses of an m x n matrix A with rank r, built from a factorization
// Q*A*P = E_r. Block shapes are X0: r x r, X1: r x (m-r), X2: (n-r) x r,
// X3: (n-r) x (m-r); a block whose shape has a zero is passed as `absent`.
//
// The {S}-inverse constructors are named by the equations they satisfy:
//   (1) AXA = A   (2) XAX = X   (3) (AX)^T = AX   (4) (XA)^T = XA
// Over the rationals the conjugate transpose is the plain transpose.

#include <cstddef>

#include "ginv/factorize.hpp"
#include "ginv/matrix.hpp"

namespace ginv {

/// Blocks of Q * Q^T split at r.
struct StarBlocksQ {
  Block s1;  // r x r
  Block s2;  // r x (m-r)
  Block s3;  // (m-r) x r
  Block s4;  // (m-r) x (m-r), invertible
};

/// Blocks of P^T * P split at r.
struct StarBlocksP {
  Block t1;  // r x r
  Block t2;  // r x (n-r)
  Block t3;  // (n-r) x r
  Block t4;  // (n-r) x (n-r), invertible
};

struct StarBlocks {
  StarBlocksQ q;
  StarBlocksP p;
};

/// X0..X3 of a block representation.
using BlockParams = BlockQuad;

/// A zero block of the given shape, or `absent` if either count is zero.
Block zero_block(std::size_t rows, std::size_t cols);

/// All-zero X0..X3 shaped for `f`.
BlockParams zero_params(const FactoredMatrix& f);

/// P * [[X0, X1], [X2, X3]] * Q. Throws DimensionMismatch on misshapen blocks.
RMatrix assemble(const FactoredMatrix& f, const BlockParams& b);

/// Splits Q*Q^T and P^T*P at r and checks their symmetry and that S4 and T4
/// are invertible (InternalInvariantViolation otherwise).
StarBlocks compute_star_blocks(const FactoredMatrix& f);

/// -S2 * S4^-1, the X1 forced by equation (3) when X0 = I_r. Absent if r = 0 or r = m.
Block eq3_x1_block(const StarBlocksQ& sq);

/// -T4^-1 * T3, the X2 forced by equation (4) when X0 = I_r. Absent if r = 0 or r = n.
Block eq4_x2_block(const StarBlocksP& sp);

/// {1}-inverse P * [[I_r, X1], [X2, X3]] * Q with arbitrary X1, X2, X3.
RMatrix g1_inverse(const FactoredMatrix& f, const Block& x1, const Block& x2, const Block& x3);

/// {2}-inverse from an idempotent X0 and free blocks F, G:
/// X1 = X0*F, X2 = G*X0, X3 = X2*X1. Throws NotIdempotent if X0^2 != X0.
RMatrix g2_inverse(const FactoredMatrix& f, const Block& x0, const Block& fblk, const Block& gblk);

/// {1,2}-inverse P * [[I_r, X1], [X2, X2*X1]] * Q.
RMatrix g12_inverse(const FactoredMatrix& f, const Block& x1, const Block& x2);

/// {1,3}-inverse P * [[I_r, -S2*S4^-1], [X2, X3]] * Q.
RMatrix g13_inverse(const FactoredMatrix& f, const Block& x2, const Block& x3);

/// {1,2,3}-inverse: as g13 with X3 = X2 * (-S2*S4^-1).
RMatrix g123_inverse(const FactoredMatrix& f, const Block& x2);

/// {1,4}-inverse P * [[I_r, X1], [-T4^-1*T3, X3]] * Q.
RMatrix g14_inverse(const FactoredMatrix& f, const Block& x1, const Block& x3);

/// {1,2,4}-inverse: as g14 with X3 = (-T4^-1*T3) * X1.
RMatrix g124_inverse(const FactoredMatrix& f, const Block& x1);

/// {1,3,4}-inverse P * [[I_r, -S2*S4^-1], [-T4^-1*T3, X3]] * Q.
RMatrix g134_inverse(const FactoredMatrix& f, const Block& x3);

/// Moore-Penrose inverse: the {1,3,4}-inverse with X3 = T4^-1*T3*S2*S4^-1.
/// The zero matrix maps to the n x m zero matrix.
RMatrix moore_penrose(const FactoredMatrix& f);
RMatrix moore_penrose(const RMatrix& a, PivotPolicy policy = PivotPolicy::RowMajor);

/// Block conditions for equation (2): X0^2 = X0, X0*X1 = X1, X2*X0 = X2,
/// X2*X1 = X3. Also checks XAX = X on the assembled matrix and throws
/// InternalInvariantViolation if the two disagree.
bool validate_g2_blocks(const FactoredMatrix& f, const BlockParams& b);

/// Block conditions for equation (3): with W = S1 - S2*S4^-1*S2^T,
/// W*X0^T = X0*W and X1 = -X0*S2*S4^-1. Cross-checked against (AX)^T = AX.
bool validate_g3_blocks(const FactoredMatrix& f, const StarBlocksQ& sq, const BlockParams& b);

/// Block conditions for equation (4): with W = T1 - T2*T4^-1*T2^T,
/// X0^T*W = W*X0 and X2 = -T4^-1*T3*X0. Cross-checked against (XA)^T = XA.
bool validate_g4_blocks(const FactoredMatrix& f, const StarBlocksP& sp, const BlockParams& b);

}  // namespace ginv

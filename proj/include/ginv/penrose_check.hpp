#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ginv/matrix.hpp"

namespace ginv {

/// Exact evaluation of the defining equations for a candidate X of A:
///   (1) AXA = A   (2) XAX = X   (3) (AX)^T = AX   (4) (XA)^T = XA
///   (5) AX = XA   (6) A^k X A = A^k with k = ind(A)
/// Equations (5) and (6) only apply to square A.
struct PenroseReport {
  bool eq1 = false;
  bool eq2 = false;
  bool eq3 = false;
  bool eq4 = false;
  std::optional<bool> eq5;
  std::optional<bool> eq6;
  std::optional<std::size_t> k;  // exponent used for (6)
  std::vector<std::string> classes;
};

/// Labels implied by the six booleans: "{1}".."{4}", "{5}", "{5^k}", the
/// combinations {1,2} {1,3} {1,4} {1,2,3} {1,2,4} {1,3,4}, then "MP",
/// "group" and "Drazin".
std::vector<std::string> classify(const PenroseReport& report);

/// Checks X (n x m) against A (m x n). Equation (6) uses k = ind(A) unless
/// `k_override` is given. Throws DimensionMismatch on a misshapen X.
PenroseReport check(const RMatrix& a, const RMatrix& x, std::optional<std::size_t> k_override = std::nullopt);

}  // namespace ginv

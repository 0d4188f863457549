#include "ginv/penrose_check.hpp"

#include "ginv/square_inverses.hpp"

namespace ginv {

std::vector<std::string> classify(const PenroseReport& report) {
  const bool e1 = report.eq1, e2 = report.eq2, e3 = report.eq3, e4 = report.eq4;
  const bool e5 = report.eq5.value_or(false);
  const bool e6 = report.eq6.value_or(false);

  std::vector<std::string> out;
  const auto add = [&out](bool cond, const char* label) {
    if (cond) out.emplace_back(label);
  };
  add(e1, "{1}");
  add(e2, "{2}");
  add(e3, "{3}");
  add(e4, "{4}");
  add(e5, "{5}");
  add(e6, "{5^k}");
  add(e1 && e2, "{1,2}");
  add(e1 && e3, "{1,3}");
  add(e1 && e4, "{1,4}");
  add(e1 && e2 && e3, "{1,2,3}");
  add(e1 && e2 && e4, "{1,2,4}");
  add(e1 && e3 && e4, "{1,3,4}");
  add(e1 && e2 && e3 && e4, "MP");
  add(e1 && e2 && e5, "group");
  add(e2 && e5 && e6, "Drazin");
  return out;
}

PenroseReport check(const RMatrix& a, const RMatrix& x, std::optional<std::size_t> k_override) {
  if (x.rows() != a.cols() || x.cols() != a.rows()) {
    throw DimensionMismatch("check: candidate must be " + std::to_string(a.cols()) + "x" +
                            std::to_string(a.rows()) + ", got " + std::to_string(x.rows()) + "x" +
                            std::to_string(x.cols()));
  }
  const RMatrix ax = a * x;
  const RMatrix xa = x * a;

  PenroseReport report;
  report.eq1 = ax * a == a;
  report.eq2 = x * ax == x;
  report.eq3 = transpose(ax) == ax;
  report.eq4 = transpose(xa) == xa;
  if (a.is_square()) {
    const std::size_t k = k_override.value_or(index_of(a));
    const RMatrix ak = power(a, k);
    report.k = k;
    report.eq5 = ax == xa;
    report.eq6 = ak * xa == ak;
  }
  report.classes = classify(report);
  return report;
}

}  // namespace ginv

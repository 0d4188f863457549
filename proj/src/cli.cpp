#include "ginv/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <optional>
#include <vector>

#include "ginv/factorize.hpp"
#include "ginv/matrix_file.hpp"
#include "ginv/penrose_check.hpp"
#include "ginv/rect_inverses.hpp"
#include "ginv/square_inverses.hpp"

namespace ginv::cli {

namespace {

struct Options {
  std::string matrix;
  std::string policy = "row-major";
  bool pretty = false;
  std::string p_file, q_file;
  std::string x0, x1, x2, x3;
  std::string f_file, g_file;
  std::string candidate;
  std::string method = "poly";
  bool zero = false;
};

PivotPolicy policy_of(const Options& o) {
  return o.policy == "reverse" ? PivotPolicy::ReverseScan : PivotPolicy::RowMajor;
}

FactoredMatrix factor(const RMatrix& a, const Options& o) {
  if (o.p_file.empty() != o.q_file.empty()) {
    throw InvalidFactorization("--P and --Q must be given together");
  }
  if (!o.p_file.empty()) return factor_with(a, read_matrix_file(o.p_file), read_matrix_file(o.q_file));
  return full_rank_reduce(a, policy_of(o));
}

// A free block from FILE, or zero when no file was given.
Block free_block(const std::string& file, std::size_t rows, std::size_t cols) {
  if (file.empty()) return zero_block(rows, cols);
  return read_matrix_file(file);
}

void print_matrix(std::ostream& out, const RMatrix& x, const Options& o) {
  out << (o.pretty ? format_pretty(x) : format_matrix(x));
}

void print_report(std::ostream& out, const PenroseReport& r) {
  const auto yes = [](bool b) { return b ? "true" : "false"; };
  const auto opt = [&](const std::optional<bool>& b) { return b ? yes(*b) : "n/a"; };
  out << "eq1 AXA = A: " << yes(r.eq1) << '\n';
  out << "eq2 XAX = X: " << yes(r.eq2) << '\n';
  out << "eq3 (AX)^T = AX: " << yes(r.eq3) << '\n';
  out << "eq4 (XA)^T = XA: " << yes(r.eq4) << '\n';
  out << "eq5 AX = XA: " << opt(r.eq5) << '\n';
  out << "eq6 A^k X A = A^k";
  if (r.k) out << " (k=" << *r.k << ')';
  out << ": " << opt(r.eq6) << '\n';
  out << "classes:";
  for (const auto& c : r.classes) out << ' ' << c;
  out << '\n';
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generalized inverses of rational matrices"};
  app.name("ginv");
  app.require_subcommand(1);

  Options o;
  std::function<void()> action;

  const auto add_common = [&o](CLI::App* sub) {
    sub->add_option("matrix", o.matrix, "Matrix file")->required();
    sub->add_flag("--pretty", o.pretty, "Print an aligned table instead of matrix-file text");
    sub->add_option("--policy", o.policy, "Pivot policy for the reduction")
        ->check(CLI::IsMember({"row-major", "reverse"}));
  };
  const auto add_factors = [&o](CLI::App* sub) {
    sub->add_option("--P", o.p_file, "Use this P instead of reducing A (requires --Q)");
    sub->add_option("--Q", o.q_file, "Use this Q instead of reducing A (requires --P)");
  };
  const auto add_blocks = [&o](CLI::App* sub, bool x1, bool x2, bool x3) {
    if (x1) sub->add_option("--x1", o.x1, "Free block X1 (r x (m-r))");
    if (x2) sub->add_option("--x2", o.x2, "Free block X2 ((n-r) x r)");
    if (x3) sub->add_option("--x3", o.x3, "Free block X3 ((n-r) x (m-r))");
    sub->add_flag("--zero", o.zero, "Zero free blocks (the default for any block not given)");
  };

  // Reads A, factors it, then prints the matrix built by `make`.
  const auto block_command = [&](const char* name, const char* help, bool x1, bool x2, bool x3,
                                 std::function<RMatrix(const FactoredMatrix&, std::size_t, std::size_t,
                                                       std::size_t)> make) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub);
    add_factors(sub);
    add_blocks(sub, x1, x2, x3);
    sub->callback([&, make] {
      action = [&, make] {
        const auto f = factor(read_matrix_file(o.matrix), o);
        print_matrix(out, make(f, f.r, f.m() - f.r, f.n() - f.r), o);
      };
    });
  };

  {
    auto* sub = app.add_subcommand("factor", "Print P, Q and r with Q*A*P = E_r");
    add_common(sub);
    sub->callback([&] {
      action = [&] {
        const auto f = full_rank_reduce(read_matrix_file(o.matrix), policy_of(o));
        out << "# P\n";
        print_matrix(out, f.p, o);
        out << "# Q\n";
        print_matrix(out, f.q, o);
        out << "# r\n" << f.r << '\n';
      };
    });
  }
  {
    auto* sub = app.add_subcommand("pinv", "Moore-Penrose inverse");
    add_common(sub);
    add_factors(sub);
    sub->callback([&] {
      action = [&] { print_matrix(out, moore_penrose(factor(read_matrix_file(o.matrix), o)), o); };
    });
  }

  block_command("g1", "{1}-inverse", true, true, true, [&](const FactoredMatrix& f, auto r, auto mr, auto nr) {
    return g1_inverse(f, free_block(o.x1, r, mr), free_block(o.x2, nr, r), free_block(o.x3, nr, mr));
  });
  block_command("g12", "{1,2}-inverse", true, true, false, [&](const FactoredMatrix& f, auto r, auto mr, auto nr) {
    return g12_inverse(f, free_block(o.x1, r, mr), free_block(o.x2, nr, r));
  });
  block_command("g13", "{1,3}-inverse", false, true, true, [&](const FactoredMatrix& f, auto r, auto mr, auto nr) {
    return g13_inverse(f, free_block(o.x2, nr, r), free_block(o.x3, nr, mr));
  });
  block_command("g123", "{1,2,3}-inverse", false, true, false,
                [&](const FactoredMatrix& f, auto r, auto, auto nr) { return g123_inverse(f, free_block(o.x2, nr, r)); });
  block_command("g14", "{1,4}-inverse", true, false, true, [&](const FactoredMatrix& f, auto r, auto mr, auto nr) {
    return g14_inverse(f, free_block(o.x1, r, mr), free_block(o.x3, nr, mr));
  });
  block_command("g124", "{1,2,4}-inverse", true, false, false,
                [&](const FactoredMatrix& f, auto r, auto mr, auto) { return g124_inverse(f, free_block(o.x1, r, mr)); });
  block_command("g134", "{1,3,4}-inverse", false, false, true,
                [&](const FactoredMatrix& f, auto, auto mr, auto nr) { return g134_inverse(f, free_block(o.x3, nr, mr)); });

  {
    auto* sub = app.add_subcommand("g2", "{2}-inverse from an idempotent X0");
    add_common(sub);
    add_factors(sub);
    sub->add_option("--x0", o.x0, "Idempotent X0 (r x r); zero if omitted");
    sub->add_option("--f", o.f_file, "F (r x (m-r)), X1 = X0*F; zero if omitted");
    sub->add_option("--g", o.g_file, "G ((n-r) x r), X2 = G*X0; zero if omitted");
    sub->add_flag("--zero", o.zero, "Zero for any block not given");
    sub->callback([&] {
      action = [&] {
        const auto f = factor(read_matrix_file(o.matrix), o);
        const std::size_t r = f.r, mr = f.m() - f.r, nr = f.n() - f.r;
        print_matrix(out,
                     g2_inverse(f, free_block(o.x0, r, r), free_block(o.f_file, r, mr), free_block(o.g_file, nr, r)),
                     o);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("group", "Group inverse");
    add_common(sub);
    sub->add_option("--method", o.method, "poly: A*q(A)^2, block: Q*P block formula")
        ->check(CLI::IsMember({"poly", "block"}));
    sub->callback([&] {
      action = [&] {
        const auto a = read_matrix_file(o.matrix);
        print_matrix(out, o.method == "block" ? group_inverse_block(a, policy_of(o)) : group_inverse_poly(a), o);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("drazin", "Drazin inverse");
    add_common(sub);
    sub->callback([&] { action = [&] { print_matrix(out, drazin_inverse(read_matrix_file(o.matrix)), o); }; });
  }
  {
    auto* sub = app.add_subcommand("index", "Index ind(A)");
    add_common(sub);
    sub->callback([&] { action = [&] { out << index_of(read_matrix_file(o.matrix)) << '\n'; }; });
  }
  {
    auto* sub = app.add_subcommand("minpoly", "Minimal polynomial");
    add_common(sub);
    sub->callback([&] { action = [&] { out << minimal_polynomial(read_matrix_file(o.matrix)).poly.str() << '\n'; }; });
  }
  {
    auto* sub = app.add_subcommand("qpoly", "q-polynomial");
    add_common(sub);
    sub->callback([&] {
      action = [&] { out << q_polynomial(minimal_polynomial(read_matrix_file(o.matrix))).poly.str() << '\n'; };
    });
  }
  {
    auto* sub = app.add_subcommand("ep", "Whether A is an EP matrix");
    add_common(sub);
    sub->callback([&] { action = [&] { out << (is_ep(read_matrix_file(o.matrix)) ? "true" : "false") << '\n'; }; });
  }
  {
    auto* sub = app.add_subcommand("verify", "Check a candidate X against the defining equations");
    add_common(sub);
    sub->add_option("--candidate", o.candidate, "Candidate inverse X")->required();
    sub->callback([&] {
      action = [&] { print_report(out, check(read_matrix_file(o.matrix), read_matrix_file(o.candidate))); };
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (action) action();
  } catch (const ParseError& e) {
    err << (e.source().empty() ? "<input>" : e.source()) << ':' << e.line() << ':' << e.column()
        << ": parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace ginv::cli

#include "weightvar/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "weightvar/errors.hpp"
#include "weightvar/gkm.hpp"
#include "weightvar/presentation.hpp"
#include "weightvar/report.hpp"
#include "weightvar/schubert.hpp"

namespace weightvar {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Rational> rationals(const std::string& flag, const std::string& text) {
  try {
    return parse_rational_list(text);
  } catch (const ParseError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

Rational rational(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const ParseError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

void add_common(CLI::App* sub, RunConfig& cfg, std::string& order) {
  sub->add_option("--order", order, "Monomial order: grevlex (default) or lex");
  sub->add_flag("--prune-kernel", cfg.prune_kernel, "Keep only Bruhat-maximal kernel classes for each tau");
  sub->add_option("--json", cfg.json_path, "Write the presentation as JSON to this path");
  sub->add_flag("--chern", cfg.chern, "Report the normal form of the total Chern class (generic case)");
  sub->add_flag("--emit-certificates", cfg.emit_certificates, "Print v, tau and k for every kernel generator");
  sub->add_flag("--unsafe-skip-regularity", cfg.skip_regularity,
                "Skip the subset-sum regularity check on mu (results may be wrong on a wall)");
  sub->add_option("--budget", cfg.budget, "Maximum Groebner reductions (default: $WEIGHTVAR_BUDGET or 200000)");
}

}  // namespace

ParseResult parse_args(int argc, const char* const* argv) {
  RunConfig cfg;
  std::string lambda, mu, nu1, nu2, order = "grevlex";
  int n = 0, k = 0;

  CLI::App app{"Cohomology rings of weight varieties of SU(n) coadjoint orbits", "weightvar"};
  app.require_subcommand(1);

  auto* flag = app.add_subcommand("flag", "Quotient for a generic orbit: --lambda, optional --mu");
  flag->add_option("--lambda", lambda, "Strictly decreasing rationals summing to 0, e.g. 3,2,-1,-4")->required();
  flag->add_option("--mu", mu, "Reduction point, rationals summing to 0 (default: 0)");
  add_common(flag, cfg, order);

  auto* grass = app.add_subcommand("grassmannian", "Quotient for Gr(k,n): --n --k --nu1 --nu2, optional --mu");
  grass->add_option("--n", n, "Ambient dimension")->required();
  grass->add_option("--k", k, "Subspace dimension, 1 <= k <= n-1")->required();
  grass->add_option("--nu1", nu1, "Eigenvalue of multiplicity k")->required();
  grass->add_option("--nu2", nu2, "Eigenvalue of multiplicity n-k")->required();
  grass->add_option("--mu", mu, "Reduction point, rationals summing to 0 (default: 0)");
  add_common(grass, cfg, order);

  auto* schub = app.add_subcommand("schubert", "Permuted double Schubert polynomials T_w^tau");
  schub->add_option("--n", cfg.n, "Size of the symmetric group (inferred from --w/--tau)");
  schub->add_option("--w", cfg.w, "Permutation w, e.g. [231]");
  schub->add_option("--tau", cfg.tau, "Permutation tau (default: identity)");
  schub->add_flag("--all-tau", cfg.all_tau, "List T_w^tau for every tau");
  schub->add_flag("--all-w", cfg.all_w, "List T_w^tau for every w");

  auto* restr = app.add_subcommand("restrict", "Restrictions of a class to the fixed points");
  restr->add_option("--n", cfg.n, "Number of x (and u) variables")->required();
  restr->add_option("--class", cfg.class_text, "Polynomial in x1..xn, u1..un")->required();
  restr->add_option("--w", cfg.w, "Only this fixed point");

  auto* expand = app.add_subcommand("expand", "Coefficients of a class in the T^tau basis");
  expand->add_option("--n", cfg.n, "Number of x (and u) variables")->required();
  expand->add_option("--class", cfg.class_text, "Polynomial in x1..xn, u1..un")->required();
  expand->add_option("--tau", cfg.tau, "Permutation tau (default: identity)");

  ParseResult result;
  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    result.exit_code = app.exit(e, os, os) == 0 ? kExitOk : kExitUsage;
    result.message = os.str();
    return result;
  }

  try {
    cfg.order = parse_order(order);
    if (flag->parsed()) {
      cfg.mode = RunConfig::Mode::Flag;
      auto l = rationals("--lambda", lambda);
      auto m = mu.empty() ? std::vector<Rational>(l.size(), Rational(0)) : rationals("--mu", mu);
      cfg.input = ReductionInput::generic(std::move(l), std::move(m));
    } else if (grass->parsed()) {
      cfg.mode = RunConfig::Mode::Grassmannian;
      if (n < 2 || n > kMaxBlock) throw UsageError("--n: must be between 2 and " + std::to_string(kMaxBlock));
      auto m = mu.empty() ? std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)) : rationals("--mu", mu);
      cfg.input = ReductionInput::grassmannian(n, k, rational("--nu1", nu1), rational("--nu2", nu2), std::move(m));
    } else if (schub->parsed()) {
      cfg.mode = RunConfig::Mode::Schubert;
      if (cfg.w.empty() && !cfg.all_w) throw UsageError("schubert: give --w or --all-w");
      if (cfg.all_w && !cfg.w.empty()) throw UsageError("schubert: --w and --all-w are exclusive");
      if (cfg.all_tau && !cfg.tau.empty()) throw UsageError("schubert: --tau and --all-tau are exclusive");
      if (cfg.w.empty() && cfg.tau.empty() && cfg.n == 0) throw UsageError("schubert: --n is required with --all-w");
    } else if (restr->parsed()) {
      cfg.mode = RunConfig::Mode::Restrict;
    } else {
      cfg.mode = RunConfig::Mode::Expand;
    }
    if (cfg.mode == RunConfig::Mode::Flag || cfg.mode == RunConfig::Mode::Grassmannian) {
      const auto issues = structural_issues(cfg.input);
      if (!issues.empty()) {
        std::string msg = "invalid reduction data:";
        for (const auto& i : issues) msg += "\n  " + i;
        throw UsageError(msg);
      }
    }
  } catch (const UsageError& e) {
    result.exit_code = kExitUsage;
    result.message = std::string("error: ") + e.what() + "\n";
    return result;
  } catch (const ParseError& e) {
    result.exit_code = kExitUsage;
    result.message = std::string("error: --order: ") + e.what() + "\n";
    return result;
  }
  result.config = std::move(cfg);
  return result;
}

namespace {

Permutation permutation_arg(const std::string& flag, const std::string& text, int n) {
  if (text.empty()) return Permutation::identity(n);
  try {
    Permutation p = Permutation::parse(text);
    if (n != 0 && p.size() != n) throw UsageError(flag + ": expected a permutation of S_" + std::to_string(n));
    return p;
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

int infer_n(const RunConfig& cfg) {
  if (cfg.n != 0) return cfg.n;
  if (!cfg.w.empty()) return permutation_arg("--w", cfg.w, 0).size();
  return permutation_arg("--tau", cfg.tau, 0).size();
}

Poly class_arg(const RunConfig& cfg) {
  if (cfg.n < 1 || cfg.n > kMaxBlock) throw UsageError("--n: must be between 1 and " + std::to_string(kMaxBlock));
  try {
    return parse_poly(cfg.class_text, Ring::flag(cfg.n));
  } catch (const ParseError& e) {
    throw UsageError(std::string("--class: ") + e.what());
  }
}

void run_schubert(const RunConfig& cfg, std::ostream& out) {
  const int n = infer_n(cfg);
  if (n < 1 || n > kMaxBlock) throw UsageError("--n: must be between 1 and " + std::to_string(kMaxBlock));
  const auto perms = all_permutations(n);
  std::vector<Permutation> ws = cfg.all_w ? perms : std::vector<Permutation>{permutation_arg("--w", cfg.w, n)};
  std::vector<Permutation> taus =
      cfg.all_tau ? perms : std::vector<Permutation>{permutation_arg("--tau", cfg.tau, n)};
  auto& calc = shared_schubert(n);
  for (const auto& tau : taus)
    for (const auto& w : ws) {
      const auto c = calc.schubert_class(w, tau);
      out << "T_" << w.to_string() << "^" << tau.to_string() << " (degree " << c.cohomological_degree()
          << ") = " << format(c.poly) << "\n";
    }
}

void run_restrict(const RunConfig& cfg, std::ostream& out) {
  const Poly f = class_arg(cfg);
  if (!cfg.w.empty()) {
    const Permutation w = permutation_arg("--w", cfg.w, cfg.n);
    out << w.to_string() << ": " << format(restrict_at(f, w)) << "\n";
    return;
  }
  for (const auto& [w, value] : restriction_tuple(f)) out << w.to_string() << ": " << format(value) << "\n";
}

void run_expand(const RunConfig& cfg, std::ostream& out) {
  const Poly f = class_arg(cfg);
  const Permutation tau = permutation_arg("--tau", cfg.tau, cfg.n);
  bool any = false;
  for (const auto& [w, a] : basis_expand(f, tau)) {
    if (a.is_zero()) continue;
    any = true;
    out << "T_" << w.to_string() << "^" << tau.to_string() << ": " << format(a) << "\n";
  }
  if (!any) out << "0\n";
}

void run_quotient(const RunConfig& cfg, std::ostream& out) {
  PresentationOptions opts;
  opts.order = cfg.order;
  opts.prune_kernel = cfg.prune_kernel;
  opts.skip_regularity = cfg.skip_regularity;
  opts.budget = cfg.budget;
  const auto pres = cfg.mode == RunConfig::Mode::Flag ? flag_quotient(cfg.input, opts)
                                                       : grassmannian_quotient(cfg.input, opts);
  const ReportOptions ropts{cfg.emit_certificates, cfg.chern};
  out << text_report(pres, ropts);
  if (cfg.json_path) {
    std::ofstream file(*cfg.json_path);
    if (!file) throw std::runtime_error("cannot write " + *cfg.json_path);
    file << to_json(pres, ropts).dump(2) << "\n";
  }
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.mode) {
      case RunConfig::Mode::Flag:
      case RunConfig::Mode::Grassmannian:
        run_quotient(cfg, out);
        break;
      case RunConfig::Mode::Schubert:
        run_schubert(cfg, out);
        break;
      case RunConfig::Mode::Restrict:
        run_restrict(cfg, out);
        break;
      case RunConfig::Mode::Expand:
        run_expand(cfg, out);
        break;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "validation failed:\n";
    for (const auto& issue : e.issues()) err << "  " << issue << "\n";
    return kExitValidation;
  } catch (const NotArtinian& e) {
    err << "validation failed: " << e.what() << " (mu is probably not a regular value)\n";
    return kExitValidation;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  auto parsed = parse_args(argc, argv);
  if (!parsed.config) {
    (parsed.exit_code == kExitOk ? out : err) << parsed.message;
    return parsed.exit_code;
  }
  return run(*parsed.config, out, err);
}

}  // namespace weightvar

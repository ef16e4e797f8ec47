#include "expfam/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "expfam/dynfric.hpp"
#include "expfam/errors.hpp"
#include "expfam/family.hpp"
#include "expfam/oracle.hpp"
#include "expfam/output.hpp"

namespace expfam::cli {

namespace {

using out::Cell;
using out::Table;

constexpr const char* kClosedForm = "CLOSED_FORM";
constexpr const char* kReducedForm = "REDUCED_FORM";
constexpr const char* kOracle = "ORACLE";

struct CommonOptions {
  std::string format = "plain";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out_path, "Write records to this file instead of stdout");
}

Cell opt_cell(const std::optional<double>& v) {
  if (v) return *v;
  return std::monostate{};
}

std::string triple_text(const ParamTriple& p) {
  std::ostringstream s;
  s << "(lambda=" << out::format_double(p.lambda) << ", mu=" << out::format_double(p.mu)
    << ", nu=" << out::format_double(p.nu) << ")";
  return s.str();
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
  v.back() = hi;
  return v;
}

// ---------------------------------------------------------------- eval

struct EvalOptions {
  double lambda = 0.0;
  double mu = 1.0;
  double nu = 0.0;
  std::vector<double> z;
  std::string method = "closed";
  double rel_tol = 1e-10;
};

Table cmd_eval(const EvalOptions& o) {
  const ParamTriple p{o.lambda, o.mu, o.nu};
  require_admissible(p);
  Table t;
  t.columns = {"lambda", "mu",         "nu",          "z",           "method",     "value",
               "err_estimate", "admissible", "gamma_term", "boundary_term", "denominator"};
  for (const double z : o.z) {
    if (!(z >= 0.0)) throw DomainError("eval: requires z >= 0, got z=" + out::format_double(z));
    if (o.method == "closed") {
      const ClosedFormResult r = closed_form(p, z);
      t.add_row({p.lambda, p.mu, p.nu, z, kClosedForm, r.value, std::monostate{}, true,
                 r.gamma_term, r.boundary_term, r.denominator});
    } else if (o.method == "reduced") {
      const double v = z == 0.0 ? 0.0 : reduced_form(p, z);
      t.add_row({p.lambda, p.mu, p.nu, z, kReducedForm, v, std::monostate{}, true,
                 std::monostate{}, std::monostate{}, std::monostate{}});
    } else {
      QuadratureSpec spec;
      spec.rel_tol = o.rel_tol;
      OracleResult r;
      if (z > 0.0) r = oracle_I(p, z, spec);
      t.add_row({p.lambda, p.mu, p.nu, z, kOracle, r.value, r.err_estimate, true,
                 std::monostate{}, std::monostate{}, std::monostate{}});
    }
  }
  return t;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::vector<double> lambdas = {-0.5, -0.2, 0.0, 0.5, 1.0, 2.0, 3.5};
  std::vector<double> mus = {0.5, 1.0, 2.0, 3.0};
  std::vector<double> nus = {-1.5, -0.5, 0.0, 0.5, 1.0, 1.5, 3.0};
  std::vector<double> zs = {0.1, 0.9, 2.5, 8.0};
  double rel_tol = 1e-10;
  double oracle_tol = 1e-8;
  double identity_tol = 1e-12;
  int threads = 1;
};

struct PointCheck {
  ParamTriple p;
  double z = 0.0;
  bool skipped = false;
  bool failed = false;
  std::string reason;
  std::optional<double> closed, oracle, oracle_err, dev_oracle;
  std::optional<double> res_transform, res_by_parts, res_ladder, res_reduced;
  bool oracle_converged = false;
};

double rel_dev(double a, double b) { return std::abs(a - b) / std::abs(b); }

PointCheck check_point(const ParamTriple& p, double z, const VerifyOptions& o) {
  PointCheck c;
  c.p = p;
  c.z = z;
  if (!check_domain(p).admissible) {
    c.skipped = true;
    return c;
  }
  const double cf = closed_form(p, z).value;
  c.closed = cf;

  QuadratureSpec spec;
  spec.rel_tol = o.rel_tol;
  const OracleResult orc = oracle_I(p, z, spec);
  c.oracle = orc.value;
  c.oracle_err = orc.err_estimate;
  c.oracle_converged = orc.converged;
  c.dev_oracle = rel_dev(orc.value, cf);

  double worst = 0.0;
  for (const double r : {0.5, 1.0, p.mu, 2.0 * p.mu}) {
    const ParamTriple q = transform_scaling(p, r);
    worst = std::max(worst, rel_dev(closed_form(q, std::pow(z, r)).value / r, cf));
  }
  c.res_transform = worst;
  c.res_by_parts = rel_dev(reduce_by_parts(p, z), cf);
  c.res_ladder = std::abs(ladder_identity_residual(p, z));
  if (p.lambda > p.mu - 1.0) c.res_reduced = rel_dev(reduced_form(p, z), cf);

  std::vector<std::string> why;
  if (!orc.converged) why.push_back("oracle did not reach rel_tol");
  if (!(*c.dev_oracle <= o.oracle_tol)) why.push_back("closed form vs oracle");
  if (!(*c.res_transform <= o.identity_tol)) why.push_back("transform");
  if (!(*c.res_by_parts <= o.identity_tol)) why.push_back("by-parts");
  if (!(*c.res_ladder <= o.identity_tol)) why.push_back("ladder");
  if (c.res_reduced && !(*c.res_reduced <= o.identity_tol)) why.push_back("reduced form");
  c.failed = !why.empty();
  for (std::size_t i = 0; i < why.size(); ++i) c.reason += (i ? ", " : "") + why[i];
  return c;
}

int cmd_verify(const VerifyOptions& o, const CommonOptions& common, std::ostream& out,
               std::ostream& err) {
  for (const double mu : o.mus) {
    if (!(mu > 0.0)) throw CLI::ValidationError("--mus", "every mu must be > 0");
  }
  for (const double z : o.zs) {
    if (!(z > 0.0)) throw CLI::ValidationError("--zs", "every z must be > 0");
  }
  QuadratureSpec probe;
  probe.rel_tol = o.rel_tol;
  validate(probe);

  std::vector<std::pair<ParamTriple, double>> grid;
  for (const double l : o.lambdas)
    for (const double m : o.mus)
      for (const double n : o.nus)
        for (const double z : o.zs) grid.push_back({{l, m, n}, z});

  std::vector<PointCheck> results(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      results[i] = check_point(grid[i].first, grid[i].second, o);
    }
  };
  const int nthreads = std::max(1, o.threads);
  std::vector<std::thread> pool;
  for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  Table t;
  t.columns = {"index",  "lambda",     "mu",         "nu",          "z",
               "status", "closed_form", "oracle",    "oracle_err",  "oracle_converged",
               "dev_oracle", "res_transform", "res_by_parts", "res_ladder", "res_reduced"};
  std::size_t checked = 0, skipped = 0, failed = 0;
  double max_dev = 0.0, max_tr = 0.0, max_bp = 0.0, max_lad = 0.0, max_red = 0.0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const PointCheck& c = results[i];
    const char* status = c.skipped ? "skipped-inadmissible" : (c.failed ? "fail" : "ok");
    t.add_row({static_cast<std::int64_t>(i), c.p.lambda, c.p.mu, c.p.nu, c.z, status,
               opt_cell(c.closed), opt_cell(c.oracle), opt_cell(c.oracle_err),
               c.skipped ? Cell{} : Cell{c.oracle_converged}, opt_cell(c.dev_oracle),
               opt_cell(c.res_transform), opt_cell(c.res_by_parts), opt_cell(c.res_ladder),
               opt_cell(c.res_reduced)});
    if (c.skipped) {
      ++skipped;
      continue;
    }
    ++checked;
    if (c.failed) ++failed;
    max_dev = std::max(max_dev, c.dev_oracle.value_or(0.0));
    max_tr = std::max(max_tr, c.res_transform.value_or(0.0));
    max_bp = std::max(max_bp, c.res_by_parts.value_or(0.0));
    max_lad = std::max(max_lad, c.res_ladder.value_or(0.0));
    max_red = std::max(max_red, c.res_reduced.value_or(0.0));
  }
  out::write(out, t, out::parse_format(common.format));

  err << "verify: " << checked << " checked, " << skipped << " skipped-inadmissible, " << failed
      << " failed\n"
      << "  max rel deviation closed form vs oracle: " << out::format_double(max_dev)
      << " (tol " << out::format_double(o.oracle_tol) << ", oracle rel_tol "
      << out::format_double(o.rel_tol) << ")\n"
      << "  max rel residual transform (y = x^r):    " << out::format_double(max_tr) << '\n'
      << "  max rel residual by-parts recursion:     " << out::format_double(max_bp) << '\n'
      << "  max rel residual ladder identity:        " << out::format_double(max_lad) << '\n'
      << "  max rel residual reduced form:           " << out::format_double(max_red)
      << " (identity tol " << out::format_double(o.identity_tol) << ")\n";
  for (const PointCheck& c : results) {
    if (!c.failed) continue;
    err << "FAIL " << triple_text(c.p) << " z=" << out::format_double(c.z) << ": " << c.reason
        << '\n';
  }
  return failed ? kVerificationFailed : kSuccess;
}

// ---------------------------------------------------------------- region

struct RegionOptions {
  double nu = 0.0;
  double mu_min = 0.25;
  double mu_max = 4.0;
  int samples = 16;
};

Table cmd_region(const RegionOptions& o) {
  if (o.samples < 2) throw CLI::ValidationError("--samples", "must be at least 2");
  if (!(o.mu_min > 0.0) || !(o.mu_max > o.mu_min)) {
    throw CLI::ValidationError("--mu-min/--mu-max", "requires 0 < mu-min < mu-max");
  }
  const std::vector<double> mus = linspace(o.mu_min, o.mu_max, o.samples);
  const char* branch = check_domain({0.0, 1.0, o.nu}).branch == Branch::NuGe1 ? "nu_ge_1"
                                                                             : "nu_le_1";
  Table t;
  t.columns = {"mu", "lambda_min", "branch"};
  for (const auto& [mu, lmin] : region_boundary(o.nu, mus)) t.add_row({mu, lmin, branch});
  return t;
}

// ---------------------------------------------------------------- dynfric

struct DynfricOptions {
  double a = 2.0;
  std::string family = "H1";
  std::vector<double> y;
  double y_min = 0.0;
  double y_max = 3.0;
  int samples = 7;
  bool oracle = false;
  double rel_tol = 1e-10;
};

Table cmd_dynfric(const DynfricOptions& o) {
  HSpec base;
  base.a = o.a;
  base.family = o.family == "H1" ? HFamily::H1 : HFamily::H2;
  require_existence(base);

  std::vector<double> ys = o.y;
  if (ys.empty()) {
    if (o.samples < 2) throw CLI::ValidationError("--samples", "must be at least 2");
    ys = linspace(o.y_min, o.y_max, o.samples);
  }
  const double nu = h_order(base);
  Table t;
  t.columns = {"a", "family", "nu", "y", "method", "h", "h_reduced"};
  if (o.oracle) {
    for (const char* c : {"h_oracle", "oracle_err", "deviation"}) t.columns.emplace_back(c);
  }
  QuadratureSpec spec;
  spec.rel_tol = o.rel_tol;
  for (const double y : ys) {
    HSpec s = base;
    s.y = y;
    const HEvaluation h = h_evaluate(s);
    std::vector<Cell> row{o.a, to_string(base.family), nu, y, kClosedForm, h.value, h.reduced_value};
    if (o.oracle) {
      const OracleResult r = oracle_H(o.a, nu, y, spec);
      row.emplace_back(r.value);
      row.emplace_back(r.err_estimate);
      row.emplace_back(h.value == 0.0 ? std::abs(r.value) : std::abs(r.value - h.value) / h.value);
    }
    t.add_row(std::move(row));
  }
  return t;
}

int emit(const Table& t, const CommonOptions& common, std::ostream& out) {
  out::write(out, t, out::parse_format(common.format));
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form evaluation and verification of int_0^z x^lambda E_nu(x^mu) dx",
               "expfam"};
  app.require_subcommand(1);

  CommonOptions common;

  EvalOptions eval_opts;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate I(lambda, mu, nu; z)");
  eval->add_option("--lambda", eval_opts.lambda, "lambda")->required();
  eval->add_option("--mu", eval_opts.mu, "mu > 0")->required();
  eval->add_option("--nu", eval_opts.nu, "nu")->required();
  eval->add_option("--z", eval_opts.z, "upper limit(s) z >= 0")->required();
  eval->add_option("--method", eval_opts.method, "closed, reduced or oracle")
      ->check(CLI::IsMember({"closed", "reduced", "oracle"}))
      ->capture_default_str();
  eval->add_option("--rel-tol", eval_opts.rel_tol, "Oracle target relative tolerance")
      ->capture_default_str();
  add_common(eval, common);

  VerifyOptions verify_opts;
  CLI::App* verify = app.add_subcommand("verify", "Check closed forms against the oracle and identities");
  verify->add_option("--lambdas", verify_opts.lambdas, "lambda grid")->capture_default_str();
  verify->add_option("--mus", verify_opts.mus, "mu grid")->capture_default_str();
  verify->add_option("--nus", verify_opts.nus, "nu grid")->capture_default_str();
  verify->add_option("--zs", verify_opts.zs, "z grid")->capture_default_str();
  verify->add_option("--rel-tol", verify_opts.rel_tol, "Oracle target relative tolerance")
      ->capture_default_str();
  verify->add_option("--oracle-tol", verify_opts.oracle_tol,
                     "Allowed relative deviation between closed form and oracle")
      ->capture_default_str();
  verify->add_option("--identity-tol", verify_opts.identity_tol,
                     "Allowed relative residual of the algebraic identities")
      ->capture_default_str();
  verify->add_option("--threads", verify_opts.threads, "Worker threads")->capture_default_str();
  add_common(verify, common);

  RegionOptions region_opts;
  CLI::App* region = app.add_subcommand("region", "Existence boundary lambda_min(mu) for fixed nu");
  region->add_option("--nu", region_opts.nu, "nu")->required();
  region->add_option("--mu-min", region_opts.mu_min, "smallest mu")->capture_default_str();
  region->add_option("--mu-max", region_opts.mu_max, "largest mu")->capture_default_str();
  region->add_option("--samples", region_opts.samples, "number of mu samples")
      ->capture_default_str();
  add_common(region, common);

  DynfricOptions dyn_opts;
  CLI::App* dyn = app.add_subcommand("dynfric", "Tabulate the dynamical-friction functions H1, H2");
  dyn->add_option("--a", dyn_opts.a, "mass-spectrum exponent a > 1")->required();
  dyn->add_option("--family", dyn_opts.family, "H1 or H2")
      ->check(CLI::IsMember({"H1", "H2"}))
      ->capture_default_str();
  dyn->add_option("--y", dyn_opts.y, "explicit y value(s)");
  dyn->add_option("--y-min", dyn_opts.y_min, "first y of the range")->capture_default_str();
  dyn->add_option("--y-max", dyn_opts.y_max, "last y of the range")->capture_default_str();
  dyn->add_option("--samples", dyn_opts.samples, "number of y samples")->capture_default_str();
  dyn->add_flag("--oracle", dyn_opts.oracle, "Add the two-dimensional quadrature column");
  dyn->add_option("--rel-tol", dyn_opts.rel_tol, "Oracle target relative tolerance")
      ->capture_default_str();
  add_common(dyn, common);

  std::vector<std::string> full{"expfam"};
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : full) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!common.out_path.empty()) {
    file.open(common.out_path);
    if (!file) {
      err << "error: cannot open " << common.out_path << " for writing\n";
      return kUsage;
    }
    sink = &file;
  }

  try {
    if (eval->parsed()) return emit(cmd_eval(eval_opts), common, *sink);
    if (verify->parsed()) return cmd_verify(verify_opts, common, *sink, err);
    if (region->parsed()) return emit(cmd_region(region_opts), common, *sink);
    if (dyn->parsed()) return emit(cmd_dynfric(dyn_opts), common, *sink);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace expfam::cli

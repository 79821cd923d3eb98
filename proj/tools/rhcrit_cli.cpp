// Command-line front end.  Every computation the library exposes is
// reachable from here with reproducible, machine-readable output:
// CSV (default) or JSON, exact rationals as "p/q", floats at
// precision_bits/4 significant digits.
//
// Exit codes: 0 success, 1 usage, 2 input/parse, 3 numerical failure.

#include <rhcrit/criteria.hpp>
#include <rhcrit/mangoldt.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace rhcrit;
using nlohmann::ordered_json;

struct UsageExit {
  int code;
};

struct Output {
  std::ostream* os = &std::cout;
  bool json = false;
  unsigned digits = 64;
  std::vector<std::string> cols;
  ordered_json rows = ordered_json::array();
  ordered_json meta;

  std::string num(const Real& x) const { return x.str(digits); }

  void header(std::vector<std::string> c) {
    cols = std::move(c);
    if (json) return;
    for (size_t i = 0; i < cols.size(); ++i) *os << (i ? "," : "") << cols[i];
    *os << "\n";
  }

  void row(const std::vector<std::string>& vals) {
    if (json) {
      ordered_json obj;
      for (size_t i = 0; i < cols.size(); ++i) obj[cols[i]] = vals[i];
      obj["meta"] = meta;
      rows.push_back(std::move(obj));
      return;
    }
    for (size_t i = 0; i < vals.size(); ++i) *os << (i ? "," : "") << vals[i];
    *os << "\n";
  }

  void finish() {
    if (json) *os << rows.dump(2) << "\n";
  }
};

struct ZeroOpts {
  std::string file;
  std::size_t max_zeros = static_cast<std::size_t>(-1);
  unsigned digits = 6;

  ZeroTable load() const {
    if (file.empty()) throw std::domain_error("--zeros-file is required for this subcommand");
    return load_zeros(file, digits);
  }

  std::size_t effective(const ZeroTable& t) const {
    if (max_zeros == 0) throw std::domain_error("--max-zeros must be positive");
    return max_zeros == static_cast<std::size_t>(-1) ? t.size() : max_zeros;
  }
};

void add_zero_flags(CLI::App* cmd, ZeroOpts& z) {
  cmd->add_option("--zeros-file", z.file, "ordinate table, one decimal per line");
  cmd->add_option("--max-zeros", z.max_zeros, "number of leading zeros to sum");
  cmd->add_option("--zeros-digits", z.digits, "declared accuracy of the table (decimal digits)");
}

std::vector<unsigned> parse_n_range(unsigned n_single, const std::string& range) {
  if (range.empty()) return {n_single};
  auto dots = range.find("..");
  unsigned lo, hi;
  try {
    if (dots == std::string::npos) {
      lo = hi = static_cast<unsigned>(std::stoul(range));
    } else {
      lo = static_cast<unsigned>(std::stoul(range.substr(0, dots)));
      hi = static_cast<unsigned>(std::stoul(range.substr(dots + 2)));
    }
  } catch (const std::exception&) {
    throw std::domain_error("bad --n-range '" + range + "' (expect N or LO..HI)");
  }
  if (lo == 0 || hi < lo) throw std::domain_error("bad --n-range '" + range + "'");
  std::vector<unsigned> out;
  for (unsigned n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

std::vector<std::string> result_row(const Output& out, const CriterionResult& r,
                                    const std::string& a_text) {
  return {to_string(r.kind),
          std::to_string(r.params.n),
          a_text,
          out.num(r.params.sigma),
          std::to_string(r.zeros_used),
          r.T == 0 ? "" : out.num(r.T),
          out.num(r.value),
          r.tail ? out.num(r.tail->bound) : "",
          to_string(r.verdict)};
}

const std::vector<std::string> kResultCols = {"kind", "n",     "a",           "sigma", "zeros_used",
                                              "T",    "value", "error_bound", "verdict"};

Multiset load_multiset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("multiset: cannot open " + path);
  Multiset ms;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string re_s, im_s, mult_s;
    if (!(ls >> re_s)) continue;
    if (re_s[0] == '#') continue;
    if (!(ls >> im_s >> mult_s))
      throw ParseError("multiset: line " + std::to_string(lineno) + ": expected 're im mult'");
    Multiset::Element e;
    try {
      e.value = Complex{Real(re_s), Real(im_s)};
      long m = std::stol(mult_s);
      if (m < 1) throw std::invalid_argument("mult");
      e.multiplicity = static_cast<unsigned>(m);
    } catch (const std::exception&) {
      throw ParseError("multiset: line " + std::to_string(lineno) + ": bad numeric field");
    }
    ms.elements.push_back(std::move(e));
  }
  return ms;
}

std::vector<std::uint64_t> parse_checkpoints(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::istringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoull(tok));
    } catch (const std::exception&) {
      throw std::domain_error("bad --checkpoints entry '" + tok + "'");
    }
  }
  if (out.empty()) throw std::domain_error("--checkpoints is empty");
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"positivity criteria for the Riemann hypothesis: zero-sums, "
               "xi-derivatives, and arithmetic partial sums"};
  app.require_subcommand(1);

  unsigned bits = 256;
  if (const char* env = std::getenv("RH_PRECISION_BITS")) bits = std::strtoul(env, nullptr, 10);
  std::string format = "csv", out_path;
  app.add_option("--precision-bits", bits, "working precision in bits (default 256)")
      ->capture_default_str();
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", out_path, "write to file instead of stdout");

  unsigned n_single = 1;
  std::string n_range;
  std::string a_text = "2";
  double radius_opt = 4.0;
  unsigned nodes_opt = 0;  // 0 = default max(64, 8*max_order)
  unsigned max_order = 20;
  std::string sigma_text = "0.5";
  std::string ms_file;
  std::string checkpoints_text = "10000,100000,1000000";
  ZeroOpts zopts;

  auto add_n = [&](CLI::App* cmd) {
    cmd->add_option("--n", n_single, "criterion index n");
    cmd->add_option("--n-range", n_range, "range LO..HI of n");
  };
  auto add_a = [&](CLI::App* cmd) { cmd->add_option("--a", a_text, "parameter a, 'p/q' or decimal"); };
  auto add_contour = [&](CLI::App* cmd) {
    cmd->add_option("--radius", radius_opt, "contour radius (default 4)");
    cmd->add_option("--nodes", nodes_opt, "contour nodes (default max(64, 8*max_order))");
  };

  CLI::App* c_coeffs = app.add_subcommand("coeffs", "exact coefficient table A_kn, F_k");
  add_n(c_coeffs);
  add_a(c_coeffs);

  CLI::App* c_sum = app.add_subcommand("sum", "modified zero-sum with tail bound");
  add_n(c_sum);
  add_a(c_sum);
  add_zero_flags(c_sum, zopts);

  CLI::App* c_voros = app.add_subcommand("voros", "zero-sum through the square-root form (a = 2)");
  add_n(c_voros);
  add_zero_flags(c_voros, zopts);

  CLI::App* c_deriv = app.add_subcommand("deriv", "derivative criterion at the critical point");
  add_n(c_deriv);
  add_a(c_deriv);
  add_contour(c_deriv);

  CLI::App* c_verify = app.add_subcommand("verify", "zero-sum vs derivative identity ratio");
  add_n(c_verify);
  add_a(c_verify);
  add_contour(c_verify);
  add_zero_flags(c_verify, zopts);

  CLI::App* c_lambda = app.add_subcommand("lambda", "Li lambda_n, contour and zero-sum routes");
  add_n(c_lambda);
  add_zero_flags(c_lambda, zopts);

  std::string genli_a = "0";
  CLI::App* c_genli = app.add_subcommand("genli", "generalized Li sum, printed and derivative forms");
  add_n(c_genli);
  c_genli->add_option("--a", genli_a, "shift parameter (real, != 1/2; default 0 = Li case)");
  add_zero_flags(c_genli, zopts);

  CLI::App* c_multiset = app.add_subcommand("multiset", "criterion sum over a multiset file");
  add_n(c_multiset);
  add_a(c_multiset);
  c_multiset->add_option("--file", ms_file, "lines 're im mult'")->required();
  c_multiset->add_option("--sigma", sigma_text, "line abscissa (default 0.5)");

  CLI::App* c_arith = app.add_subcommand("arith", "von Mangoldt partial sums vs -zeta'/zeta");
  add_a(c_arith);
  c_arith->add_option("--checkpoints", checkpoints_text, "comma-separated N values");

  CLI::App* c_pust = app.add_subcommand("pustylnikov", "even xi-derivatives at the critical point");
  c_pust->add_option("--max-order", max_order, "highest derivative order (even)");
  add_contour(c_pust);

  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    throw UsageExit{code == 0 ? 0 : 1};
  }

  PrecisionCtx ctx;
  ctx.bits = bits;
  ctx.validate();
  PrecisionGuard guard(ctx.working_bits());

  std::ofstream out_file;
  Output out;
  out.json = format == "json";
  out.digits = std::max(8u, bits / 4);
  if (!out_path.empty()) {
    out_file.open(out_path);
    if (!out_file) throw ParseError("cannot open output file " + out_path);
    out.os = &out_file;
  }
  out.meta["precision_bits"] = bits;

  std::vector<unsigned> ns = parse_n_range(n_single, n_range);
  Real radius(radius_opt);
  auto nodes_for = [&](unsigned order) {
    return nodes_opt ? nodes_opt : default_nodes(order);
  };

  if (*c_coeffs) {
    Rational a = parse_rational(a_text);
    out.meta["a_bound_warning"] = a_bound_warning(a);
    out.header({"n", "k", "A_kn", "F_k"});
    for (unsigned n : ns) {
      CoeffTable t = build_coeff_table(n, a);
      for (unsigned k = 0; k <= n; ++k)
        out.row({std::to_string(n), std::to_string(k), to_string(t.A[k]),
                 k < n ? to_string(t.F[k]) : "0"});
    }
  } else if (*c_sum) {
    Rational a = parse_rational(a_text);
    out.meta["a_bound_warning"] = a_bound_warning(a);
    ZeroTable zeros = zopts.load();
    std::size_t mz = zopts.effective(zeros);
    out.header(kResultCols);
    for (unsigned n : ns) {
      CriterionParams p;
      p.n = n;
      p.a = a;
      out.row(result_row(out, modified_sum(p, zeros, mz, ctx), to_string(a)));
    }
  } else if (*c_voros) {
    out.meta["a_bound_warning"] = false;
    ZeroTable zeros = zopts.load();
    std::size_t mz = zopts.effective(zeros);
    out.header(kResultCols);
    for (unsigned n : ns)
      out.row(result_row(out, voros_sum(n, zeros, mz, ctx), "2"));
  } else if (*c_deriv || *c_verify) {
    Rational a = parse_rational(a_text);
    out.meta["a_bound_warning"] = a_bound_warning(a);
    unsigned order = 2 * ns.back();
    unsigned nodes = nodes_for(order);
    out.meta["radius"] = radius_opt;
    out.meta["nodes"] = nodes;
    DerivSeries derivs = log_xi_even_derivs(order, radius, nodes, ctx);
    if (*c_deriv) {
      out.header(kResultCols);
      for (unsigned n : ns) {
        CriterionParams p;
        p.n = n;
        p.a = a;
        out.row(result_row(out, derivative_criterion(p, derivs), to_string(a)));
      }
    } else {
      ZeroTable zeros = zopts.load();
      std::size_t mz = zopts.effective(zeros);
      std::vector<std::pair<unsigned, Real>> ratios;
      std::vector<CriterionResult> sums;
      for (unsigned n : ns) {
        ratios.emplace_back(n, identity_ratio(n, a, zeros, mz, derivs, ctx));
        CriterionParams p;
        p.n = n;
        p.a = a;
        sums.push_back(modified_sum(p, zeros, mz, ctx));
      }
      IdentityLaw law = fit_identity_law(ratios);
      std::vector<std::string> cols = kResultCols;
      cols.push_back("ratio");
      cols.push_back("law");
      out.header(cols);
      for (std::size_t i = 0; i < ns.size(); ++i) {
        auto vals = result_row(out, sums[i], to_string(a));
        vals.push_back(out.num(ratios[i].second));
        vals.push_back(to_string(law));
        out.row(vals);
      }
    }
  } else if (*c_lambda) {
    out.meta["a_bound_warning"] = false;
    ZeroTable zeros = zopts.load();
    std::size_t mz = zopts.effective(zeros);
    unsigned top = ns.back() + ns.back() % 2;
    unsigned nodes = nodes_for(std::max(2u, top));
    out.meta["radius"] = 1.5;
    out.meta["nodes"] = nodes;
    XiContour contour(FunctionTag::LOG_XI, Real(1), Real("1.5"), nodes, ctx);
    std::vector<std::string> cols = kResultCols;
    cols.push_back("alt_value");
    cols.push_back("alt_error");
    cols.push_back("consistent");
    out.header(cols);
    for (unsigned n : ns) {
      CriterionResult r = li_lambda(n, zeros, mz, ctx, &contour);
      auto vals = result_row(out, r, "0");
      vals.push_back(out.num(*r.alt_value));
      vals.push_back(out.num(*r.alt_error));
      vals.push_back(r.consistent ? "true" : "false");
      out.row(vals);
    }
  } else if (*c_genli) {
    out.meta["a_bound_warning"] = false;
    ZeroTable zeros = zopts.load();
    std::size_t mz = zopts.effective(zeros);
    Real a(genli_a);
    out.header([&] {
      std::vector<std::string> cols = kResultCols;
      cols.push_back("alt_value");
      cols.push_back("alt_error");
      cols.push_back("consistent");
      return cols;
    }());
    for (unsigned n : ns) {
      CriterionResult r = gen_li_sum(n, a, zeros, mz, ctx);
      auto vals = result_row(out, r, a.str(out.digits));
      vals.push_back(out.num(*r.alt_value));
      vals.push_back(out.num(*r.alt_error));
      vals.push_back(r.consistent ? "true" : "false");
      out.row(vals);
    }
  } else if (*c_multiset) {
    Rational a = parse_rational(a_text);
    out.meta["a_bound_warning"] = a_bound_warning(a);
    Real sigma(sigma_text);
    Multiset ms = load_multiset(ms_file);
    std::vector<std::string> cols = kResultCols;
    cols.push_back("value_im");
    out.header(cols);
    for (unsigned n : ns) {
      CriterionResult r = multiset_sum(ms, n, a, sigma, ctx);
      auto vals = result_row(out, r, to_string(a));
      vals.push_back(out.num(r.value_im));
      out.row(vals);
    }
  } else if (*c_arith) {
    auto cps = parse_checkpoints(checkpoints_text);
    std::uint64_t limit = *std::max_element(cps.begin(), cps.end());
    MangoldtTable table = sieve_mangoldt(limit);
    Real a(a_text);
    out.header({"a", "N", "partial", "reference", "abs_error"});
    if (a == Real(0.5)) {
      ConvergenceReport rep = halfline_probe(cps, table, ctx);
      out.meta["exploratory"] = true;
      if (!out.json) *out.os << "# exploratory: convergence at a = 1/2 is an open question\n";
      for (const auto& c : rep.checkpoints)
        out.row({out.num(rep.a), std::to_string(c.N), out.num(c.partial), out.num(c.reference),
                 out.num(c.abs_error)});
    } else {
      std::sort(cps.begin(), cps.end());
      Real ref = -zeta_log_deriv(a, ctx);
      for (auto N : cps) {
        Real partial = chebyshev_partial(a, N, table, ctx);
        out.row({out.num(a), std::to_string(N), out.num(partial), out.num(ref),
                 out.num(abs(partial - ref))});
      }
    }
  } else if (*c_pust) {
    if (max_order == 0 || max_order % 2) throw std::domain_error("--max-order must be even");
    unsigned nodes = nodes_for(max_order);
    out.meta["radius"] = radius_opt;
    out.meta["nodes"] = nodes;
    out.meta["a_bound_warning"] = false;
    DerivSeries d = xi_even_derivs(max_order, radius, nodes, ctx);
    out.header(kResultCols);
    for (unsigned m = 0; m <= max_order; m += 2) {
      CriterionResult res;
      res.kind = CriterionKind::DERIVATIVE;
      res.params.n = m;
      res.value = d.orders[m];
      TailEstimate e;
      e.T = Real(0);
      e.bound = d.error_estimate[m];
      e.model = "contour error estimate";
      res.tail = e;
      res.verdict = classify(res.value, res.tail->bound);
      auto vals = result_row(out, res, "");
      vals[0] = "XI_DERIV";
      out.row(vals);
    }
  }

  out.finish();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageExit& e) {
    return e.code;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResolutionError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const PoleError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyseq/exactnum.hpp"
#include "polyseq/polybernoulli.hpp"
#include "polyseq/polycauchy.hpp"
#include "polyseq/polyfamilies.hpp"
#include "verify.hpp"

namespace polyseq::cli {

namespace {

struct ParamOptions {
  long a = 1;
  std::string q = "1";
  std::string l;
  std::string L;
  long k = 1;
  long m = 0;
};

std::vector<Rational> parse_list(const std::string &text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(Rational::parse(item));
  }
  if (out.empty()) {
    throw ParseError("empty list");
  }
  return out;
}

std::vector<Rational> parse_L(const ParamOptions &o) {
  if (!o.L.empty()) {
    return parse_list(o.L);
  }
  if (!o.l.empty()) {
    return {Rational::parse(o.l)};
  }
  return {Rational(1)};
}

Params build_params(const ParamOptions &o) {
  return make_params(o.a, Rational::parse(o.q), parse_L(o), o.k, o.m);
}

void add_point_options(CLI::App *cmd, ParamOptions &o) {
  cmd->add_option("--a", o.a, "integer offset a")->capture_default_str();
  cmd->add_option("--q", o.q, "rational step q")->capture_default_str();
  auto *l = cmd->add_option("--l", o.l, "product l of the box sides");
  auto *L = cmd->add_option("--L", o.L, "box sides, comma separated (only the product matters)");
  l->excludes(L);
  L->excludes(l);
}

void add_param_options(CLI::App *cmd, ParamOptions &o) {
  add_point_options(cmd, o);
  cmd->add_option("--k", o.k, "order k (nonzero, negative allowed)")->capture_default_str();
  cmd->add_option("--m", o.m, "shift m (first column)")->capture_default_str();
}

nlohmann::json params_json(const Params &p) {
  nlohmann::json L = nlohmann::json::array();
  for (const auto &v : p.L()) {
    L.push_back(v.str());
  }
  return {{"a", p.a()}, {"q", p.q().str()}, {"L", L}, {"l", p.l().str()}, {"k", p.k()},
          {"m", p.m()}};
}

nlohmann::json grid_json(const Grid &g) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < g.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < g.cols(); ++c) {
      row.push_back(g(r, c).str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void emit_grid(std::ostream &out, const std::string &format, const std::string &column,
               std::size_t first_column, const Grid &g, nlohmann::json header) {
  if (format == "json") {
    header["values"] = grid_json(g);
    out << header.dump() << "\n";
    return;
  }
  out << "n," << column << ",value\n";
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      out << r << "," << first_column + c << "," << g(r, c) << "\n";
    }
  }
}

struct TableOptions {
  std::string family;
  ParamOptions params;
  std::size_t n_max = 4;
  std::size_t m_max = 3;
  std::size_t p_max = 3;
  std::string format = "csv";
};

int run_table(const TableOptions &o, std::ostream &out) {
  const Params p = build_params(o.params);
  nlohmann::json header = {{"family", o.family}, {"params", params_json(p)}};
  if (o.family == "cauchy1" || o.family == "cauchy2") {
    const auto kind = o.family == "cauchy1" ? CauchyKind::First : CauchyKind::Second;
    const CauchyTable t = build_cauchy_table(kind, p, o.n_max, o.m_max);
    emit_grid(out, o.format, "m", t.first_column(), t.values(), std::move(header));
  } else if (o.family == "bernoulli") {
    Grid g(o.n_max + 1, o.m_max + 1);
    for (std::size_t c = 0; c <= o.m_max; ++c) {
      const Params shifted = p.with_shift(p.m() + c);
      for (std::size_t n = 0; n <= o.n_max; ++n) {
        g(n, c) = mpb_explicit(n, shifted);
      }
    }
    emit_grid(out, o.format, "m", p.m(), g, std::move(header));
  } else {
    const HTable t = build_h_table(p, o.n_max, o.p_max);
    emit_grid(out, o.format, "p", 0, t.values(), std::move(header));
  }
  return kSuccess;
}

struct PolyOptions {
  std::string family;
  ParamOptions params;
  std::size_t n_max = 4;
  std::size_t pcol = 0;
  std::optional<std::string> x0;
  std::string format = "csv";
};

int run_poly(const PolyOptions &o, std::ostream &out) {
  const Params p = build_params(o.params);
  std::vector<Polynomial> polys;
  for (std::size_t n = 0; n <= o.n_max; ++n) {
    if (o.family == "cauchy1") {
      polys.push_back(mpc_polynomial(CauchyKind::First, n, p));
    } else if (o.family == "cauchy2") {
      polys.push_back(mpc_polynomial(CauchyKind::Second, n, p));
    } else if (o.family == "bernoulli") {
      polys.push_back(mpb_polynomial(n, p));
    } else {
      polys.push_back(h_polynomial(n, o.pcol, p));
    }
  }
  nlohmann::json header = {{"family", o.family}, {"params", params_json(p)}};
  if (o.family == "h") {
    header["p"] = o.pcol;
  }

  if (o.x0) {
    const Rational x = Rational::parse(*o.x0);
    if (o.format == "json") {
      nlohmann::json values = nlohmann::json::array();
      for (const auto &f : polys) {
        values.push_back(nlohmann::json::array({f(x).str()}));
      }
      header["x0"] = x.str();
      header["values"] = values;
      out << header.dump() << "\n";
    } else {
      out << "n,x,value\n";
      for (std::size_t n = 0; n < polys.size(); ++n) {
        out << n << "," << x << "," << polys[n](x) << "\n";
      }
    }
    return kSuccess;
  }

  if (o.format == "json") {
    nlohmann::json values = nlohmann::json::array();
    for (const auto &f : polys) {
      values.push_back(nlohmann::json::parse(f.to_json()));
    }
    header["values"] = values;
    out << header.dump() << "\n";
  } else {
    out << "n,i,coefficient\n";
    for (std::size_t n = 0; n < polys.size(); ++n) {
      const auto &c = polys[n].coeffs();
      if (c.empty()) {
        out << n << ",0,0\n";
      }
      for (std::size_t i = 0; i < c.size(); ++i) {
        out << n << "," << i << "," << c[i] << "\n";
      }
    }
  }
  return kSuccess;
}

int run_bernoulli_classic(std::size_t n_max, const std::string &format, std::ostream &out) {
  const auto values = bernoulli_classic(n_max);
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &v : values) {
      arr.push_back(v.str());
    }
    out << nlohmann::json{{"params", params_json(classic_params())}, {"values", arr}}.dump()
        << "\n";
  } else if (format == "csv") {
    out << "n,value\n";
    for (std::size_t n = 0; n < values.size(); ++n) {
      out << n << "," << values[n] << "\n";
    }
  } else {
    for (std::size_t n = 0; n < values.size(); ++n) {
      out << (n ? ", " : "") << values[n];
    }
    out << "\n";
  }
  return kSuccess;
}

struct VerifyOptions {
  std::vector<std::string> ids;
  bool all = false;
  bool list = false;
  bool serial = false;
  ParamOptions point;
  std::vector<long> ks;
  std::vector<std::string> points;
  std::optional<std::size_t> n_max, m_max, p_max;
  std::string format = "text";
};

int run_verify(const VerifyOptions &o, bool point_given, std::ostream &out, std::ostream &err) {
  if (o.list) {
    for (const auto &id : verify::identity_ids()) {
      out << id << "\n";
    }
    return kSuccess;
  }
  if (!o.all && o.ids.empty()) {
    err << "verify: give --identity ID (repeatable) or --all\n";
    return kUsageError;
  }
  for (const auto &id : o.ids) {
    if (!verify::is_identity(id)) {
      err << "verify: unknown identity '" << id << "' (see verify --list)\n";
      return kUsageError;
    }
  }

  verify::Config config;
  if (o.n_max) config.n_max = *o.n_max;
  if (o.m_max) config.m_max = *o.m_max;
  if (o.p_max) config.p_max = *o.p_max;
  if (!o.ks.empty()) {
    for (long k : o.ks) {
      if (k == 0) {
        throw ZeroOrder("order k must be nonzero");
      }
    }
    config.ks = o.ks;
  }
  if (point_given) {
    const auto L = parse_L(o.point);
    // Validate once so bad parameters surface as usage errors up front.
    (void)make_params(o.point.a, Rational::parse(o.point.q), L, 1, 0);
    config.sample = {{o.point.a, Rational::parse(o.point.q), L}};
  }
  if (!o.points.empty()) {
    config.points.clear();
    for (const auto &x : o.points) {
      config.points.push_back(Rational::parse(x));
    }
  }
  config.parallel = !o.serial;

  const auto reports = verify::run_identities(o.all ? verify::identity_ids() : o.ids, config);
  out << (o.format == "json" ? verify::render_json(reports) : verify::render_text(reports));
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto &r) { return r.ok(); });
  return ok ? kSuccess : kVerificationFailure;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact tables and identity checks for generalized poly-Cauchy and "
               "poly-Bernoulli numbers",
                "polyseq"};
  app.require_subcommand(1);

  const std::vector<std::string> families{"cauchy1", "cauchy2", "bernoulli", "h"};

  TableOptions table;
  auto *table_cmd = app.add_subcommand("table", "emit the (n, m) table of a family");
  table_cmd->add_option("--family", table.family, "cauchy1 | cauchy2 | bernoulli | h")
      ->required()
      ->check(CLI::IsMember(families));
  add_param_options(table_cmd, table.params);
  table_cmd->add_option("--n-max", table.n_max)->capture_default_str();
  table_cmd->add_option("--m-max", table.m_max)->capture_default_str();
  table_cmd->add_option("--p-max", table.p_max, "columns of the h table")->capture_default_str();
  table_cmd->add_option("--format", table.format)
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  PolyOptions poly;
  std::string poly_x0;
  auto *poly_cmd = app.add_subcommand("poly", "emit polynomial coefficient lists");
  poly_cmd->add_option("--family", poly.family, "cauchy1 | cauchy2 | bernoulli | h")
      ->required()
      ->check(CLI::IsMember(families));
  add_param_options(poly_cmd, poly.params);
  poly_cmd->add_option("--n-max", poly.n_max)->capture_default_str();
  poly_cmd->add_option("--p", poly.pcol, "column p of the h family")->capture_default_str();
  auto *x0_opt = poly_cmd->add_option("--x0", poly_x0, "evaluate at this point instead");
  poly_cmd->add_option("--format", poly.format)
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  std::size_t greg_n = 6, greg_m = 3;
  std::string greg_format = "csv";
  auto *greg_cmd = app.add_subcommand("gregory", "emit the G_{n,m} triangle");
  greg_cmd->add_option("--n-max", greg_n)->capture_default_str();
  greg_cmd->add_option("--m-max", greg_m)->capture_default_str();
  greg_cmd->add_option("--format", greg_format)
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  std::size_t bern_n = 12;
  std::string bern_format = "text";
  auto *bern_cmd = app.add_subcommand("bernoulli-classic", "print B_0 .. B_N (B_1 = +1/2)");
  bern_cmd->add_option("--n-max", bern_n)->capture_default_str();
  bern_cmd->add_option("--format", bern_format)
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();

  VerifyOptions verify_opts;
  auto *verify_cmd = app.add_subcommand("verify", "run identity checks");
  verify_cmd->add_option("--identity", verify_opts.ids, "identity id (repeatable)")
      ->delimiter(',');
  verify_cmd->add_flag("--all", verify_opts.all, "run every identity");
  verify_cmd->add_flag("--list", verify_opts.list, "list identity ids");
  verify_cmd->add_flag("--serial", verify_opts.serial, "run suites one after another");
  add_point_options(verify_cmd, verify_opts.point);
  verify_cmd->add_option("--k", verify_opts.ks, "orders to test (repeatable)")->delimiter(',');
  verify_cmd->add_option("--x0", verify_opts.points, "evaluation points (repeatable)")
      ->delimiter(',');
  verify_cmd->add_option("--n-max", verify_opts.n_max);
  verify_cmd->add_option("--m-max", verify_opts.m_max);
  verify_cmd->add_option("--p-max", verify_opts.p_max);
  verify_cmd->add_option("--format", verify_opts.format)
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*table_cmd) {
      return run_table(table, out);
    }
    if (*poly_cmd) {
      if (*x0_opt) {
        poly.x0 = poly_x0;
      }
      return run_poly(poly, out);
    }
    if (*greg_cmd) {
      const Grid g = gregory_table(greg_n, greg_m);
      emit_grid(out, greg_format, "m", 0, g,
                {{"family", "gregory"}, {"params", params_json(classic_params())}});
      return kSuccess;
    }
    if (*bern_cmd) {
      return run_bernoulli_classic(bern_n, bern_format, out);
    }
    const bool point_given = verify_cmd->count("--a") + verify_cmd->count("--q") +
                                 verify_cmd->count("--l") + verify_cmd->count("--L") >
                             0;
    return run_verify(verify_opts, point_given, out, err);
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

} // namespace polyseq::cli

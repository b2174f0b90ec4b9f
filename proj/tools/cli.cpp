#include "pdc/cli.hpp"

#include "pdc/checks.hpp"
#include "pdc/correspondence.hpp"
#include "pdc/errors.hpp"
#include "pdc/serialize.hpp"
#include "pdc/virasoro.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace pdc::cli {

namespace {

// Raised for bad user input that CLI11 cannot see (ranges, unknown names).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SeriesOptions {
  std::string series;
  std::string function;
  std::string field = "Q";
  std::string geometry = "P3";
  std::string boundary;
  int degree = 1;

  void attach(CLI::App* app) {
    app->add_option("--series", series, "Descendent insertion, e.g. \"tau5(1)\" or \"ch3(H)*ch3(p)\"");
    app->add_option("--function", function, "Rational function in q, e.g. \"q/(1+q)^2\"");
    app->add_option("--field", field, "Field of --function: Q, Qi, Q_s, Q_lambda");
    app->add_option("--geometry", geometry, "P3, P3_equivariant, Cap, LocalCurve, CobordismP3");
    app->add_option("--degree,--d", degree, "Curve degree")->check(CLI::PositiveNumber);
    app->add_option("--boundary", boundary, "Relative boundary label, e.g. \"(1)\"");
  }
};

struct Resolved {
  FieldFunction value;
  std::optional<SeriesKey> key;  // set when the value came from a single database record or reduction
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  SeriesDB db;
};

std::optional<std::string> db_env_path() {
  const char* p = std::getenv("PDC_DB");
  if (p == nullptr || *p == '\0') return std::nullopt;
  return std::string(p);
}

SeriesDB load_db() {
  SeriesDB db = db_builtin();
  if (auto path = db_env_path(); path && std::filesystem::exists(*path)) load_db_file(*path, db);
  return db;
}

Resolved resolve(const Context& ctx, const SeriesOptions& o) {
  if (!o.function.empty() && !o.series.empty()) throw UsageError("give either --series or --function, not both");
  if (!o.function.empty()) return {parse_function(o.function, parse_field(o.field)), std::nullopt};
  if (o.series.empty()) throw UsageError("one of --series or --function is required");

  SeriesKey key;
  key.geometry = parse_geometry(o.geometry);
  key.degree = o.degree;
  if (!o.boundary.empty()) key.boundary = o.boundary;
  const DescElement e = normalize(parse_desc(o.series));
  const bool single = e.terms().size() == 1 && e.terms().begin()->second == 1;
  if (single) {
    key.insertions = e.terms().begin()->first;
    if (const SeriesRecord* r = ctx.db.find(key)) return {r->value, key};
  }
  if (key.geometry != Geometry::P3) throw UnknownSeries(to_string(key));
  const QFunction value = reduce(e, o.degree, ctx.db);
  if (single) return {value, key};
  return {value, std::nullopt};
}

int cmd_eval(Context& ctx, const std::string& which, int d) {
  SeriesRecord r;
  if (which == "local-curve") {
    r = {local_curve_key(d), local_curve_series(d), Provenance::evaluator};
  } else if (which == "cap") {
    r = {cap_key(d), cap_series(d), Provenance::evaluator};
  } else {
    throw UsageError("eval expects local-curve or cap");
  }
  if (ctx.json) {
    ctx.out << to_json(r).dump(2) << "\n";
  } else {
    ctx.out << to_string(r.value) << "\n";
  }
  return kPass;
}

int cmd_expand(Context& ctx, const SeriesOptions& o, int order, const std::string& var, std::optional<int> d_beta) {
  Resolved r = resolve(ctx, o);
  if (var == "q") {
    std::string text;
    Json j;
    r.value.visit([&](const auto& g) {
      auto s = laurent_expand(g, order);
      using K = std::decay_t<decltype(s.coefficients().front())>;
      if constexpr (std::is_same_v<K, ParamFraction>) {
        Json coeffs = Json::array();
        std::string body;
        auto names = parameter_names(r.value.field());
        for (int n = s.valuation(); n < s.order(); ++n) {
          if (is_zero(s.coeff(n))) continue;
          if (!body.empty()) body += " + ";
          body += "(" + s.coeff(n).to_string(names) + ")";
          if (n != 0) body += n == 1 ? "*q" : "*q^" + std::to_string(n);
          coeffs.push_back({{"exp", n}, {"coeff", s.coeff(n).to_string(names)}});
        }
        text = (body.empty() ? std::string("0") : body) + " + O(q^" + std::to_string(s.order()) + ")";
        j = Json{{"variable", "q"}, {"order", s.order()}, {"terms", coeffs}};
      } else {
        text = to_string(s);
        j = to_json(s);
      }
    });
    if (ctx.json) {
      ctx.out << j.dump(2) << "\n";
    } else {
      ctx.out << text << "\n";
    }
    return kPass;
  }
  if (var != "u") throw UsageError("--var must be q or u");
  int beta = d_beta ? *d_beta : (r.key ? expected_fe(*r.key).d_beta : 0);
  auto s = gw_variable_change(r.value, beta, order);
  if (ctx.json) {
    ctx.out << to_json(s).dump(2) << "\n";
  } else {
    ctx.out << to_string(s) << "\n";
  }
  return kPass;
}

FunctionalEquation fe_parameters(const Resolved& r, std::optional<int> sign, std::optional<int> d_beta) {
  FunctionalEquation fe;
  if (r.key) fe = expected_fe(*r.key);
  if (sign) fe.sign = *sign;
  if (d_beta) fe.d_beta = *d_beta;
  if (!r.key && (!sign || !d_beta)) throw UsageError("--sign and --d-beta are required for --function input");
  if (fe.sign != 1 && fe.sign != -1) throw UsageError("--sign must be 1 or -1");
  return fe;
}

int report(const Context& ctx, bool pass, const std::string& detail, Json extra) {
  if (ctx.json) {
    extra["pass"] = pass;
    ctx.out << extra.dump(2) << "\n";
  } else {
    ctx.out << (pass ? "PASS" : "FAIL") << detail << "\n";
  }
  return pass ? kPass : kFail;
}

int cmd_fe(Context& ctx, const SeriesOptions& o, std::optional<int> sign, std::optional<int> d_beta) {
  Resolved r = resolve(ctx, o);
  FunctionalEquation fe = fe_parameters(r, sign, d_beta);
  bool pass = fe_check(r.value, fe.d_beta, fe.sign);
  return report(ctx, pass, " sign=" + std::to_string(fe.sign) + " d_beta=" + std::to_string(fe.d_beta),
                Json{{"check", "fe"}, {"sign", fe.sign}, {"d_beta", fe.d_beta}, {"value", to_json(r.value)}});
}

int cmd_pole(Context& ctx, const SeriesOptions& o, std::optional<int> div) {
  Resolved r = resolve(ctx, o);
  int d = div ? *div : (r.key ? divisibility(*r.key) : o.degree);
  if (d < 1) throw UsageError("--div must be positive");
  bool pass = pole_check(r.value, d);
  return report(ctx, pass, " div=" + std::to_string(d),
                Json{{"check", "pole"}, {"div", d}, {"value", to_json(r.value)}});
}

int cmd_virasoro(Context& ctx, int k, const std::string& d_text, int degree, bool verbose) {
  if (k < -1) throw UsageError("--k must be >= -1");
  SeriesDB exact;
  for (auto& r : ctx.db.records())
    if (r.provenance != Provenance::paper_conjectural) exact.insert(r);
  const DescElement applied = apply_op(build_calL(k), parse_desc(d_text));
  const QFunction sum = reduce(applied, degree, exact);
  if (verbose && !ctx.json) ctx.out << "calL_" << k << " D = " << to_string(applied) << "\n";
  const bool pass = sum.is_zero();
  return report(ctx, pass, ": sum = " + to_string(sum),
                Json{{"check", "virasoro"}, {"k", k}, {"D", d_text}, {"degree", degree},
                     {"applied", to_string(applied)}, {"sum", to_json(FieldFunction(sum))}});
}

int cmd_bracket(Context& ctx, int k, int m, int bound) {
  if (k < -1 || m < -1) throw UsageError("--k and --m must be >= -1");
  if (bound < 0) throw UsageError("--bound must be nonnegative");
  const bool pass = bracket_check(k, m, bound);
  std::ostringstream detail;
  detail << ": [L_" << k << ", L_" << m << "] = " << (m - k) << " L_" << (k + m) << " on monomials with i <= " << bound;
  return report(ctx, pass, detail.str(), Json{{"check", "bracket"}, {"k", k}, {"m", m}, {"bound", bound}});
}

int cmd_operator(Context& ctx, int k, bool plain_l, bool normalize_multipliers) {
  if (k < -1) throw UsageError("--k must be >= -1");
  VirasoroOperator op = plain_l ? build_L(k) : build_calL(k);
  if (normalize_multipliers) op = normalized(op);
  ctx.out << to_string(op) << "\n";
  return kPass;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("expected a comma-separated list of integers, got '" + text + "'");
    }
  }
  return out;
}

int cmd_bar(Context& ctx, const std::string& alpha_text, const std::string& odd_text) {
  std::vector<int> parts = parse_int_list(alpha_text);
  for (int p : parts)
    if (p < 1) throw UsageError("--alpha parts must be positive");
  // keep the user's order: the i-th part goes with the i-th class
  std::vector<bool> odd(parts.size(), false);
  if (!odd_text.empty()) {
    std::vector<int> flags = parse_int_list(odd_text);
    if (flags.size() != parts.size()) throw UsageError("--odd needs one flag per part");
    for (std::size_t k = 0; k < flags.size(); ++k) odd[k] = flags[k] != 0;
  }
  const Partition alpha(parts);
  const auto terms = expand_bar(alpha, odd);
  if (ctx.json) {
    Json a = Json::array();
    for (const auto& t : terms) {
      Json blocks = Json::array();
      for (std::size_t b = 0; b < t.blocks.size(); ++b)
        blocks.push_back({{"block", t.blocks[b]}, {"alpha_hat", t.alpha_hat[b].parts()}});
      Json jt{{"sign", t.sign}, {"blocks", blocks}};
      jt["iu_power"] = t.iu_power ? Json(*t.iu_power) : Json(nullptr);
      a.push_back(jt);
    }
    ctx.out << Json{{"alpha", alpha.parts()}, {"terms", a}}.dump(2) << "\n";
  } else {
    ctx.out << format_expansion(alpha, terms);
  }
  return kPass;
}

int cmd_db(Context& ctx, const std::string& action, const std::string& arg) {
  if (action == "list") {
    for (const auto& r : ctx.db.records())
      ctx.out << to_string(r.key) << "  [" << field_name(r.value.field()) << ", " << provenance_name(r.provenance)
              << "]\n";
    return kPass;
  }
  if (arg.empty()) throw UsageError("db " + action + " needs an argument");
  if (action == "show") {
    const SeriesRecord& r = ctx.db.at(parse_key(arg));
    if (ctx.json) {
      ctx.out << to_json(r).dump(2) << "\n";
    } else {
      ctx.out << to_string(r.key) << " = " << to_string(r.value) << "  (" << provenance_name(r.provenance) << ")\n";
    }
    return kPass;
  }
  if (action == "export") {
    const std::string text = export_records(ctx.db.records());
    if (arg == "-") {
      ctx.out << text;
    } else {
      std::ofstream f(arg);
      if (!f) throw std::runtime_error("cannot write " + arg);
      f << text;
      ctx.out << "exported " << ctx.db.size() << " records to " << arg << "\n";
    }
    return kPass;
  }
  if (action == "import") {
    SeriesDB incoming;
    load_db_file(arg, incoming);
    auto path = db_env_path();
    if (path) {
      SeriesDB stored;
      if (std::filesystem::exists(*path)) load_db_file(*path, stored);
      for (auto& r : incoming.records()) stored.insert(r);
      std::ofstream f(*path);
      if (!f) throw std::runtime_error("cannot write " + *path);
      f << export_records(stored.records());
      ctx.out << "imported " << incoming.size() << " records into " << *path << "\n";
    } else {
      ctx.out << "validated " << incoming.size() << " records (set PDC_DB to store them)\n";
    }
    return kPass;
  }
  throw UsageError("db expects list, show, import or export");
}

int cmd_check_all(Context& ctx, bool serial) {
  const auto results = run_checks(acceptance_checks(), !serial);
  bool all = true;
  Json a = Json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    if (ctx.json) {
      a.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"failures", r.failures}});
      continue;
    }
    ctx.out << (r.pass ? "PASS " : "FAIL ") << r.id << " " << r.name << "\n";
    for (const auto& f : r.failures) ctx.out << "     " << f << "\n";
  }
  if (ctx.json) ctx.out << a.dump(2) << "\n";
  return all ? kPass : kFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Descendent series of stable pairs: exact checks and evaluators", "pdc"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  SeriesOptions series_opts;
  int d = 1;
  int order = 6;
  int k = 0;
  int m = 0;
  int bound = 8;
  std::string which;
  std::string var = "q";
  std::string d_text;
  std::string alpha_text;
  std::string odd_text;
  std::string action;
  std::string action_arg;
  std::optional<int> sign;
  std::optional<int> d_beta;
  std::optional<int> div;
  bool verbose = false;
  bool plain_l = false;
  bool norm = false;
  bool serial = false;

  auto* eval = app.add_subcommand("eval", "Closed-form series: local-curve or cap");
  eval->add_option("which", which, "local-curve or cap")->required();
  eval->add_option("--d", d, "Degree")->required()->check(CLI::PositiveNumber);

  auto* expand = app.add_subcommand("expand", "Laurent expansion in q, or in u after -q = e^{iu}");
  series_opts.attach(expand);
  expand->add_option("--order", order, "Highest exponent shown")->required();
  expand->add_option("--var", var, "q (default) or u");
  expand->add_option("--d-beta", d_beta, "Override d_beta for --var u");

  auto* fe = app.add_subcommand("fe-check", "Functional equation F(1/q) = sign q^{-d_beta} F(q)");
  series_opts.attach(fe);
  fe->add_option("--sign", sign, "Override the expected sign");
  fe->add_option("--d-beta", d_beta, "Override d_beta");

  auto* pole = app.add_subcommand("pole-check", "Poles only at 0 and roots of 1-(-q)^m, m <= div");
  series_opts.attach(pole);
  pole->add_option("--div", div, "Divisibility of the curve class");

  auto* vir = app.add_subcommand("virasoro-check", "Reduce calL_k D and test that it vanishes");
  vir->add_option("--k", k, "k >= -1")->required();
  vir->add_option("--D", d_text, "Descendent insertion")->required();
  vir->add_option("--degree,--d", d, "Curve degree")->check(CLI::PositiveNumber);
  vir->add_flag("--verbose", verbose, "Also print calL_k D");

  auto* bracket = app.add_subcommand("bracket-check", "[L_k, L_m] = (m-k) L_{k+m}");
  bracket->add_option("--k", k, "k >= -1")->required();
  bracket->add_option("--m", m, "m >= -1")->required();
  bracket->add_option("--bound", bound, "Largest generator subscript tested");

  auto* gw = app.add_subcommand("gw-expand", "The series after -q = e^{iu}, times (-q)^{-d_beta/2}");
  series_opts.attach(gw);
  gw->add_option("--order", order, "Highest power of u shown")->required();
  gw->add_option("--d-beta", d_beta, "Override d_beta");

  auto* op = app.add_subcommand("operator", "Print calL_k (or L_k with --L)");
  op->add_option("--k", k, "k >= -1")->required();
  op->add_flag("--L", plain_l, "Print L_k instead");
  op->add_flag("--normalized", norm, "Apply ch_0(p) = -1, ch_0 = ch_1 = 0 to multipliers");

  auto* bar = app.add_subcommand("bar", "Set-partition expansion of a descendent correspondence");
  bar->add_option("--alpha", alpha_text, "Parts, e.g. 2,1,1")->required();
  bar->add_option("--odd", odd_text, "Parity flags per part, e.g. 1,0,1");

  auto* db = app.add_subcommand("db", "Series database: list, show KEY, import FILE, export FILE");
  db->add_option("action", action, "list, show, import, export")->required();
  db->add_option("arg", action_arg, "KEY or FILE");

  auto* all = app.add_subcommand("check-all", "Run every acceptance check");
  all->add_flag("--serial", serial, "Run on one thread");

  std::vector<std::string> owned;
  owned.reserve(args.size() + 1);
  owned.emplace_back("pdc");
  owned.insert(owned.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : owned) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run 'pdc --help' for usage\n";
    return kUsage;
  }

  try {
    Context ctx{out, err, json, load_db()};
    if (eval->parsed()) return cmd_eval(ctx, which, d);
    if (expand->parsed()) return cmd_expand(ctx, series_opts, order, var, d_beta);
    if (fe->parsed()) return cmd_fe(ctx, series_opts, sign, d_beta);
    if (pole->parsed()) return cmd_pole(ctx, series_opts, div);
    if (vir->parsed()) return cmd_virasoro(ctx, k, d_text, d, verbose);
    if (bracket->parsed()) return cmd_bracket(ctx, k, m, bound);
    if (gw->parsed()) return cmd_expand(ctx, series_opts, order, "u", d_beta);
    if (op->parsed()) return cmd_operator(ctx, k, plain_l, norm);
    if (bar->parsed()) return cmd_bar(ctx, alpha_text, odd_text);
    if (db->parsed()) return cmd_db(ctx, action, action_arg);
    if (all->parsed()) return cmd_check_all(ctx, serial);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n" << e.annotated() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownSeries& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}

}  // namespace pdc::cli

// cdual: command-line front end.
//
// Exit codes: 0 run succeeded (a false verdict is still a success), 1 internal
// error or a requested check failed, 2 a hypothesis of the decision was
// violated, 3 quadrature budget exhausted, 4 malformed input or usage.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "cdual/cdsp.hpp"
#include "cdual/corpus.hpp"
#include "cdual/errors.hpp"
#include "cdual/json_io.hpp"
#include "cdual/measures.hpp"

using namespace cdual;

namespace {

enum Exit { kOk = 0, kFailed = 1, kPrecondition = 2, kBudget = 3, kUsage = 4 };

struct Config {
  std::string input;
  std::string output;
  std::string window = "12x12";
  std::size_t max_order = 6;
  double rel_tol = 1e-9;
  double abs_tol = 1e-6;
  unsigned jobs = 1;
  std::uint64_t seed = AcceptanceOptions{}.seed;
  std::string mode = "joint";
  std::string csv;
  std::size_t resolution = 64;
  std::int64_t line_m = 0;
  bool cross_validate = false;
};

std::pair<std::size_t, std::size_t> parse_window(const std::string& text) {
  const auto x = text.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument("no x");
    std::size_t used = 0;
    const std::size_t w = std::stoul(text.substr(0, x), &used);
    if (used != x) throw std::invalid_argument("width");
    const std::string rest = text.substr(x + 1);
    const std::size_t h = std::stoul(rest, &used);
    if (used != rest.size() || w == 0 || h == 0) throw std::invalid_argument("height");
    return {w, h};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--window", "expected WxH with positive integers, got '" + text + "'");
  }
}

Json read_input(const Config& c) {
  std::string text;
  if (c.input.empty() || c.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(c.input);
    if (!in) throw SchemaError("", "cannot open input file " + c.input);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

void emit(const Config& c, const Json& j) { write_text(c.output, j.dump(2) + "\n"); }

// A gamma given either directly or through rho. When both are present they
// must agree, which lets a shift bundle be fed back in.
GammaCoefficients moment_input(const Json& in) {
  if (in.contains("rho")) {
    const GammaCoefficients g = coefficients_from_rho(rho_from_json(in["rho"], "/rho"));
    if (in.contains("gamma") && gamma_from_json(in["gamma"], "/gamma") != g) {
      throw SchemaError("/gamma", "does not match /rho");
    }
    return g;
  }
  return gamma_from_json(require(in, "gamma", ""), "/gamma");
}

bool has_moment_input(const Json& in) { return in.is_object() && (in.contains("rho") || in.contains("gamma")); }

int exit_for(Verdict v) { return v == Verdict::precondition_violated ? kPrecondition : kOk; }

int run_decide(const Config& c) {
  const Json in = read_input(c);
  if (!in.is_object()) throw SchemaError("", "expected an object");
  if (has_moment_input(in)) {
    const GammaCoefficients g = moment_input(in);
    Json out{{"schema", "cdual.cdsp-decision/1"}};
    const CdspDecision d = decide_cdsp(g);
    out.update(to_json(d));
    if (c.cross_validate && d.verdict != CdspVerdict::precondition_violated) {
      const auto [w, h] = parse_window(c.window);
      const CrossValidation cv = cross_validate(MomentPolynomial(g), w, h, c.max_order, c.jobs);
      out["cross_validation"] = Json{{"oracle", to_json(cv.oracle)},
                                     {"consistent", cv.consistent},
                                     {"witness_found", cv.witness_found},
                                     {"escalated", cv.escalated},
                                     {"status", cv.status}};
      emit(c, out);
      return cv.consistent ? kOk : kFailed;
    }
    emit(c, out);
    return d.verdict == CdspVerdict::precondition_violated ? kPrecondition : kOk;
  }

  Json out{{"schema", "cdual.cm-decision/1"}};
  DecisionTrace t;
  if (in.contains("bideg21")) {
    const BiDeg21Params p = bideg21_from_json(in["bideg21"], "/bideg21");
    out["family"] = "bideg21";
    out["params"] = to_json(p);
    t = decide_bideg21_cm(p);
  } else if (in.contains("bideg22")) {
    const BiDeg22Params p = bideg22_from_json(in["bideg22"], "/bideg22");
    out["family"] = "bideg22";
    out["params"] = to_json(p);
    t = decide_bideg22_cm(p);
  } else if (in.contains("quadratic")) {
    const Quadratic1D p = quadratic_from_json(in["quadratic"], "/quadratic");
    out["family"] = "quadratic";
    out["params"] = to_json(p);
    t = decide_quadratic_reciprocal_cm(p);
  } else if (in.contains("general21")) {
    const Json& j = in["general21"];
    const auto f = [&](const char* k) { return rational_from_json(require(j, k, "/general21"), std::string("/general21/") + k); };
    const GeneralBiDeg21 p{f("b0"), f("b1"), f("b2"), f("a1"), f("a2")};
    out["family"] = "general21";
    t = check_bideg21_necessary(p);
    if (const auto n = normalize_bideg21(p)) out["normalized"] = to_json(*n);
  } else {
    throw SchemaError("", "expected one of rho, gamma, bideg21, bideg22, quadratic, general21");
  }
  out["trace"] = to_json(t);
  emit(c, out);
  return exit_for(t.verdict);
}

template <class Params>
Net2 reciprocal_net(const Params& p, std::size_t w, std::size_t h) {
  return net_from_function(
      [&](MultiIndex2 a) -> std::optional<Rational> {
        const Rational v = p(Rational(Integer(static_cast<unsigned long>(a.i))),
                             Rational(Integer(static_cast<unsigned long>(a.j))));
        if (v == 0) return std::nullopt;
        return 1 / v;
      },
      w, h);
}

int run_oracle(const Config& c) {
  const Json in = read_input(c);
  if (!in.is_object()) throw SchemaError("", "expected an object");
  auto [w, h] = parse_window(c.window);
  Json out{{"schema", "cdual.cm-verdict/1"}};
  std::optional<Net2> net;
  if (in.contains("net")) {
    net = net_from_json(in["net"], "/net");
    w = net->width();
    h = net->height();
    out["source"] = "net";
  } else if (has_moment_input(in)) {
    const MomentPolynomial g(moment_input(in));
    net = dual_moment_net(g, w, h);
    out["source"] = "dual moment net 1/gamma";
  } else if (in.contains("bideg21")) {
    net = reciprocal_net(bideg21_from_json(in["bideg21"], "/bideg21"), w, h);
    out["source"] = "1/p, bideg21";
  } else if (in.contains("bideg22")) {
    net = reciprocal_net(bideg22_from_json(in["bideg22"], "/bideg22"), w, h);
    out["source"] = "1/p, bideg22";
  } else {
    throw SchemaError("", "expected one of net, rho, gamma, bideg21, bideg22");
  }
  if (c.mode != "joint" && c.mode != "separate") throw CLI::ValidationError("--mode", "joint or separate");
  out["mode"] = c.mode;
  const CmVerdict v =
      check_complete_monotone(*net, c.max_order, c.mode == "joint" ? CmMode::joint : CmMode::separate, c.jobs);
  out.update(to_json(v));
  if (!c.csv.empty()) write_text(c.csv, net_to_csv(*net));
  emit(c, out);
  return kOk;
}

std::vector<std::pair<std::int64_t, std::int64_t>> moment_list(const Json& in) {
  const Json& list = require(in, "moments", "");
  if (!list.is_array() || list.empty()) throw SchemaError("/moments", "expected a nonempty array of [m, n] pairs");
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const Json& e = list[k];
    const std::string ptr = "/moments/" + std::to_string(k);
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
      throw SchemaError(ptr, "expected [m, n] with nonnegative integers");
    }
    out.emplace_back(e[0].get<std::int64_t>(), e[1].get<std::int64_t>());
  }
  return out;
}

int run_measure(const Config& c) {
  const Json in = read_input(c);
  if (!in.is_object()) throw SchemaError("", "expected an object");
  Json out{{"schema", "cdual.moment-report/1"}};
  Json reports = Json::array();
  bool all = true;
  if (in.contains("kernel")) {
    const Json& zs = in["kernel"];
    if (!zs.is_array()) throw SchemaError("/kernel", "expected an array of numbers");
    Json values = Json::array();
    for (std::size_t k = 0; k < zs.size(); ++k) {
      if (!zs[k].is_number()) throw SchemaError("/kernel/" + std::to_string(k), "expected a number");
      const KernelValue v = kernel_eval(zs[k].get<double>(), c.rel_tol);
      values.push_back(Json{{"z", v.z}, {"value", v.value}, {"terms_used", v.terms_used}});
    }
    out["kernel"] = std::move(values);
  }
  if (in.contains("bideg21")) {
    const BiDeg21Params p = bideg21_from_json(in["bideg21"], "/bideg21");
    out["family"] = "bideg21";
    out["params"] = to_json(p);
    for (const auto& [m, n] : moment_list(in)) {
      const MomentReport r = verify_moment_integral(p, m, n, c.abs_tol);
      all = all && r.passed;
      reports.push_back(to_json(r));
    }
    if (!c.csv.empty()) write_text(c.csv, density21_csv(BiDeg21Density(p), c.resolution));
  } else if (in.contains("bideg22")) {
    const BiDeg22Params p = bideg22_from_json(in["bideg22"], "/bideg22");
    out["family"] = "bideg22";
    out["params"] = to_json(p);
    for (const auto& [m, n] : moment_list(in)) {
      const MomentReport r = verify_moment_integral(p, m, n, c.abs_tol);
      all = all && r.passed;
      reports.push_back(to_json(r));
    }
    if (!c.csv.empty()) write_text(c.csv, line_density_csv(LineDensity22(p, c.line_m), c.resolution));
  } else if (!in.contains("kernel")) {
    throw SchemaError("", "expected bideg21, bideg22 or kernel");
  }
  out["abs_tol"] = c.abs_tol;
  out["reports"] = std::move(reports);
  out["passed"] = all;
  emit(c, out);
  return all ? kOk : kFailed;
}

int run_shift(const Config& c) {
  const Json in = read_input(c);
  if (!in.is_object()) throw SchemaError("", "expected an object");
  const auto [w, h] = parse_window(c.window);
  const MomentPolynomial g(moment_input(in));
  emit(c, shift_bundle(g, w, h));
  if (!c.csv.empty()) {
    const ShiftWeights weights = shift_weights(g, w, h);
    write_text(c.csv + "_w1sq.csv", weights_csv(weights, 1));
    write_text(c.csv + "_w2sq.csv", weights_csv(weights, 2));
  }
  return kOk;
}

int run_corpus(const Config& c) {
  AcceptanceOptions o;
  o.seed = c.seed;
  o.jobs = c.jobs;
  std::ostringstream os;
  bool all = true;
  for (const auto& r : run_acceptance(o)) {
    all = all && r.passed;
    os << format_result(r) << "\n";
    for (const auto& d : r.diagnostics) os << "      " << d << "\n";
  }
  write_text(c.output, os.str());
  return all ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complete monotonicity deciders and Cauchy dual subnormality of weighted 2-shifts"};
  app.require_subcommand(1);
  Config c;

  auto io = [&](CLI::App* sub, bool needs_input) {
    auto* opt = sub->add_option("--input,-i", c.input, "input JSON file ('-' for stdin)");
    if (needs_input) opt->required();
    sub->add_option("--output,-o", c.output, "output file (default stdout)");
    sub->add_option("--jobs", c.jobs, "worker threads for the CM oracle")->check(CLI::PositiveNumber);
  };
  auto grid = [&](CLI::App* sub) {
    sub->add_option("--window", c.window, "grid window WxH")->capture_default_str();
    sub->add_option("--max-order", c.max_order, "largest total difference order")->capture_default_str();
  };

  auto* decide = app.add_subcommand("decide", "decide CM of 1/p or Cauchy dual subnormality from gamma or rho");
  io(decide, true);
  grid(decide);
  decide->add_flag("--cross-validate", c.cross_validate, "also run the oracle on the dual moment net");

  auto* oracle = app.add_subcommand("oracle", "brute-force CM test of a net, 1/p or 1/gamma");
  io(oracle, true);
  grid(oracle);
  oracle->add_option("--mode", c.mode, "joint or separate")->capture_default_str();
  oracle->add_option("--csv", c.csv, "write the net as m,n,value CSV");

  auto* measure = app.add_subcommand("measure", "verify density moments against 1/p");
  io(measure, true);
  measure->add_option("--abs-tol", c.abs_tol, "absolute tolerance for moment residuals")->capture_default_str();
  measure->add_option("--rel-tol", c.rel_tol, "relative tolerance for kernel sums")->capture_default_str();
  measure->add_option("--csv", c.csv, "write a density grid CSV");
  measure->add_option("--resolution", c.resolution, "grid cells per axis for --csv")->capture_default_str();
  measure->add_option("--line-m", c.line_m, "row m of the (2,2) line density for --csv")->capture_default_str();

  auto* shift = app.add_subcommand("shift", "weighted 2-shift bundle from rho or gamma");
  io(shift, true);
  shift->add_option("--window", c.window, "grid window WxH")->capture_default_str();
  shift->add_option("--csv", c.csv, "prefix for the two squared-weight CSV grids");

  auto* corpus = app.add_subcommand("corpus", "run the curated acceptance corpus");
  io(corpus, false);
  corpus->add_option("--seed", c.seed, "seed for the random draws")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*decide) return run_decide(c);
    if (*oracle) return run_oracle(c);
    if (*measure) return run_measure(c);
    if (*shift) return run_shift(c);
    return run_corpus(c);
  } catch (const SchemaError& e) {
    std::cerr << "schema error at '" << e.pointer() << "': " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionViolated& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const NumericalBudgetError& e) {
    std::cerr << "numerical budget exhausted after " << e.evaluations() << " evaluations (best residual "
              << e.best_residual() << "): " << e.what() << "\n";
    return kBudget;
  } catch (const ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
}

#include "pentalab/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <ostream>
#include <sstream>

#include "pentalab/julia.hpp"
#include "pentalab/moduli.hpp"
#include "pentalab/polygon_io.hpp"
#include "pentalab/verify.hpp"

namespace pentalab::cli {
namespace {

struct Options {
  std::string input;
  std::string lambda = "phi";
  std::string field;  // empty: take the file's tag
  std::size_t steps = 1;
  int offset = kDefaultWindowOffset;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  long bound = 10;
  std::string window;
  std::string size = "200x200";
  int max_iter = 100;
  double epsilon = 1e-6;
  std::string out_path;
};

FieldModel resolve_field(const Options& o, const PolygonFile& f) {
  return o.field.empty() ? f.field : parse_field(o.field);
}

std::vector<double> split_doubles(const std::string& text, char sep, std::size_t expected,
                                  const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, sep);) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw ParseError(std::string("bad number '") + item + "' in " + what);
    }
    out.push_back(v);
  }
  if (out.size() != expected) throw ParseError(std::string("malformed ") + what + " '" + text + "'");
  return out;
}

template <Scalar T>
int construct(const Options& o, const PolygonFile& file, std::ostream& out) {
  const Polygon<T> p = file.polygon<T>();
  if (p.size() != 4) throw ParseError("construct expects exactly 4 points, got " + std::to_string(p.size()));
  const ProjParam<T> lambda = parse_lambda<T>(o.lambda);
  const DiagFrame<T> f = diag_frame(p[0], p[1], p[2], p[3]);
  const HPoint<T> h = h_lambda(p[0], p[1], p[2], p[3], lambda);
  out << "P = " << format_point(f.P) << "\n";
  out << "Q = " << format_point(f.Q) << "\n";
  out << "H = " << format_point(f.H) << "\n";
  out << "H_lambda = " << format_point(h) << "\n";
  return kExitOk;
}

template <Scalar T>
Polygon<T> display_polygon(const Polygon<T>& p) {
  std::vector<HPoint<T>> v;
  for (const auto& x : p) v.push_back(display_form(x));
  return Polygon<T>(std::move(v));
}

template <Scalar T>
int iterate_cmd(const Options& o, const PolygonFile& file, std::ostream& out, std::ostream& err) {
  const Polygon<T> p = file.polygon<T>();
  const ProjParam<T> lambda = parse_lambda<T>(o.lambda);
  const Trajectory<T> t = iterate(p, lambda, o.steps, o.offset);
  for (std::size_t k = 0; k < t.polygons.size(); ++k) {
    if (k) out << "\n";
    out << format_polygon(display_polygon(t.polygons[k]), "step " + std::to_string(k));
  }
  if (t.error) {
    err << "degenerate at step " << t.error->step << ": " << t.error->reason << "\n";
    return kExitDegenerate;
  }
  return kExitOk;
}

template <Scalar T>
int moduli_cmd(const PolygonFile& file, std::ostream& out) {
  const Polygon<T> p = file.polygon<T>();
  if (p.size() != 5) throw ParseError("moduli expects exactly 5 points, got " + std::to_string(p.size()));
  const ModuliPoint<T> m = moduli_coords(p);
  if (m.chart_ok) {
    out << "(" << format_scalar(m.x) << ", " << format_scalar(m.y) << ")";
  } else {
    out << "ideal " << format_point(m.fifth);
  }
  const PentagonClass c = classify(p);
  out << " " << to_string(c.kind);
  if (c.relabeling) out << " relabeling=" << to_string(*c.relabeling);
  if (c.regular_match && c.star_match) out << " also-star=" << to_string(*c.star_match);
  out << "\n";
  return kExitOk;
}

int verify_cmd(const Options& o, std::ostream& out) {
  if (!o.field.empty() && parse_field(o.field) != FieldModel::Exact) {
    throw ParseError("verify runs in the exact model only (--field exact)");
  }
  VerifyOptions v;
  if (o.lambda == "phi") {
    v.lambda = GoldenParam::Phi;
  } else if (o.lambda == "psi") {
    v.lambda = GoldenParam::Psi;
  } else {
    throw ParseError("verify --lambda must be phi or psi");
  }
  if (o.bound < 1) throw ParseError("--bound must be >= 1");
  v.trials = o.trials;
  v.seed = o.seed;
  v.bound = o.bound;
  out << format_report(run_verify(v));
  return kExitOk;
}

int julia_cmd(const Options& o, std::ostream& out) {
  if (!o.field.empty() && parse_field(o.field) != FieldModel::Float) {
    throw ParseError("julia runs in the float model only");
  }
  JuliaConfig cfg;
  cfg.lambda = parse_lambda<double>(o.lambda);
  if (!o.window.empty()) {
    const auto w = split_doubles(o.window, ',', 4, "--window");
    cfg.window = {w[0], w[1], w[2], w[3]};
  }
  const auto wh = split_doubles(o.size, 'x', 2, "--size");
  cfg.width = static_cast<int>(wh[0]);
  cfg.height = static_cast<int>(wh[1]);
  if (cfg.width != wh[0] || cfg.height != wh[1]) throw ParseError("--size must be integral WxH");
  cfg.max_iter = o.max_iter;
  cfg.epsilon = o.epsilon;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  const JuliaImage img = render(cfg);
  write_ppm(img, o.out_path);
  out << format_stats(cfg.lambda, img.stats) << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"pentalab: H_lambda polygon iterations in the projective plane"};
  app.require_subcommand(1);
  Options o;

  auto* construct_cmd = app.add_subcommand("construct", "H_lambda of a 4-point file, with P, Q, H");
  construct_cmd->add_option("input", o.input, "PolygonFile with 4 points")->required();
  construct_cmd->add_option("--lambda", o.lambda, "phi, psi, inf, p/q, or decimal");
  construct_cmd->add_option("--field", o.field, "exact or float (default: file tag)");

  auto* iterate_sub = app.add_subcommand("iterate", "trajectory of the polygon iteration");
  iterate_sub->add_option("input", o.input, "PolygonFile, n >= 4")->required();
  iterate_sub->add_option("--lambda", o.lambda, "phi, psi, inf, p/q, or decimal");
  iterate_sub->add_option("--steps", o.steps, "number of steps");
  iterate_sub->add_option("--offset", o.offset, "window offset: vertex i uses window i+offset");
  iterate_sub->add_option("--field", o.field, "exact or float (default: file tag)");

  auto* verify_sub = app.add_subcommand("verify", "exact verification on random pentagons");
  verify_sub->add_option("--lambda", o.lambda, "phi or psi");
  verify_sub->add_option("--trials", o.trials, "number of random pentagons");
  verify_sub->add_option("--seed", o.seed, "campaign seed");
  verify_sub->add_option("--bound", o.bound, "coordinate bound B");
  verify_sub->add_option("--field", o.field, "must be exact");

  auto* moduli_sub = app.add_subcommand("moduli", "moduli coordinates and class of a pentagon");
  moduli_sub->add_option("input", o.input, "PolygonFile with 5 points")->required();
  moduli_sub->add_option("--field", o.field, "exact or float (default: file tag)");

  auto* julia_sub = app.add_subcommand("julia", "escape-time image over the moduli chart");
  julia_sub->add_option("--lambda", o.lambda, "phi, psi, inf, or decimal");
  julia_sub->add_option("--window", o.window, "x0,x1,y0,y1 (default: regular point +- 6)");
  julia_sub->add_option("--size", o.size, "WxH");
  julia_sub->add_option("--max-iter", o.max_iter, "iteration cap");
  julia_sub->add_option("--epsilon", o.epsilon, "convergence tolerance");
  julia_sub->add_option("--out", o.out_path, "output PPM path")->required();
  julia_sub->add_option("--field", o.field, "must be float");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("pentalab");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  try {
    if (*verify_sub) return verify_cmd(o, out);
    if (*julia_sub) return julia_cmd(o, out);

    const PolygonFile file = read_polygon_file(o.input);
    const bool exact = resolve_field(o, file) == FieldModel::Exact;
    if (*construct_cmd) return exact ? construct<QSqrt5>(o, file, out) : construct<double>(o, file, out);
    if (*iterate_sub) {
      return exact ? iterate_cmd<QSqrt5>(o, file, out, err) : iterate_cmd<double>(o, file, out, err);
    }
    if (*moduli_sub) return exact ? moduli_cmd<QSqrt5>(file, out) : moduli_cmd<double>(file, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DegenerateError& e) {
    err << "degenerate configuration: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitParse;
}

}  // namespace pentalab::cli

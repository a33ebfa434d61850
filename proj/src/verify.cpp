#include "pentalab/verify.hpp"

#include <sstream>
#include <stdexcept>

namespace pentalab {

const char* to_string(GoldenParam p) { return p == GoldenParam::Phi ? "phi" : "psi"; }

std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

Rational sample_rational(std::mt19937_64& rng, long bound) {
  if (bound < 1) throw std::invalid_argument("coordinate bound must be >= 1");
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

Polygon<QSqrt5> sample_pentagon(std::mt19937_64& rng, long bound, int max_attempts) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<HPoint<QSqrt5>> v;
    v.reserve(5);
    for (int k = 0; k < 5; ++k) {
      Rational x = sample_rational(rng, bound);
      Rational y = sample_rational(rng, bound);
      v.push_back(HPoint<QSqrt5>::affine(QSqrt5(x), QSqrt5(y)));
    }
    if (general_position(std::span<const HPoint<QSqrt5>>(v))) return Polygon<QSqrt5>(std::move(v));
  }
  throw std::runtime_error("could not sample a pentagon in general position");
}

namespace {

using Exact = QSqrt5;

// Empty string on success, otherwise a description of what failed.
std::string check_theorem(const Polygon<Exact>& p, GoldenParam which) {
  const auto [phi, psi] = golden<Exact>();
  const ProjParam<Exact> lambda(which == GoldenParam::Phi ? phi : psi);
  const ShapeClass expected = which == GoldenParam::Phi ? ShapeClass::Regular : ShapeClass::StarRegular;
  const PentagonClass c = classify(iterate_once(p, lambda));
  if (c.kind != expected) {
    return std::string("H_") + to_string(which) + " image classified " + to_string(c.kind) +
           ", expected " + to_string(expected);
  }
  return {};
}

std::string check_inserted_vertex(const Polygon<Exact>& p) {
  const PentagonClass c = classify(insert_vertex_pentagon(p[0], p[1], p[2], p[3]));
  if (c.kind != ShapeClass::Regular) {
    return std::string("inserted-vertex pentagon classified ") + to_string(c.kind);
  }
  return {};
}

std::string check_coincidence(const Polygon<Exact>& p) {
  const auto [phi, psi] = golden<Exact>();
  const Polygon<Exact> a = iterate_once(p, ProjParam<Exact>(phi));
  const Polygon<Exact> b = iterate_once(relabel(p, star_order()), ProjParam<Exact>(psi));
  if (!same_vertex_set(a, b)) return "H_phi and H_psi images have different vertex sets";
  return {};
}

template <class Check>
bool run_check(Check&& check, std::string& reasons) {
  std::string r;
  try {
    r = check();
  } catch (const DegenerateError& e) {
    r = std::string("degenerate: ") + e.what();
  }
  if (r.empty()) return true;
  if (!reasons.empty()) reasons += "; ";
  reasons += r;
  return false;
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opts) {
  VerifyReport report;
  report.lambda = opts.lambda;
  report.trials = opts.trials;
  for (std::size_t t = 0; t < opts.trials; ++t) {
    std::mt19937_64 rng = trial_rng(opts.seed, t);
    const Polygon<Exact> p = sample_pentagon(rng, opts.bound);
    std::string reasons;
    const bool theorem = run_check([&] { return check_theorem(p, opts.lambda); }, reasons);
    const bool inserted = run_check([&] { return check_inserted_vertex(p); }, reasons);
    const bool coincide = run_check([&] { return check_coincidence(p); }, reasons);
    report.theorem_passes += theorem;
    report.inserted_vertex_passes += inserted;
    report.coincidence_passes += coincide;
    if (theorem && inserted && coincide) {
      ++report.passes;
    } else {
      report.failures.push_back({t, opts.seed, std::move(reasons)});
    }
  }
  return report;
}

std::string format_report(const VerifyReport& r) {
  const char* cls = r.lambda == GoldenParam::Phi ? "Regular" : "StarRegular";
  std::ostringstream os;
  os << "verify lambda=" << to_string(r.lambda) << " field=" << r.field << " trials=" << r.trials
     << " passes=" << r.passes << " failures=" << r.failures.size() << "\n";
  os << "  one-step image " << cls << ": " << r.theorem_passes << "/" << r.trials << "\n";
  os << "  inserted-vertex pentagon Regular: " << r.inserted_vertex_passes << "/" << r.trials << "\n";
  os << "  H_phi(p) and H_psi(star(p)) vertex sets coincide: " << r.coincidence_passes << "/"
     << r.trials << "\n";
  for (const TrialFailure& f : r.failures) {
    os << "  FAIL trial=" << f.trial << " seed=" << f.seed << ": " << f.reason << "\n";
  }
  return os.str();
}

}  // namespace pentalab

#include "pentalab/julia.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <thread>

namespace pentalab {

Window default_window() {
  const double phi = golden<double>().first;
  const double cx = phi * phi;
  const double cy = phi;
  constexpr double kHalfWidth = 6.0;
  return {cx - kHalfWidth, cx + kHalfWidth, cy - kHalfWidth, cy + kHalfWidth};
}

void JuliaConfig::validate() const {
  if (!(window.xmin < window.xmax)) throw std::invalid_argument("window: xmin must be < xmax");
  if (!(window.ymin < window.ymax)) throw std::invalid_argument("window: ymin must be < ymax");
  if (width < 1 || height < 1) throw std::invalid_argument("size: width and height must be >= 1");
  if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  if (!(degenerate_threshold >= 0.0)) {
    throw std::invalid_argument("degenerate_threshold must be >= 0");
  }
}

std::string to_string(const PixelClass& p) {
  switch (p.kind) {
    case PixelClass::Kind::Converged:
      return "ConvergedIn(" + std::to_string(p.steps) + ")";
    case PixelClass::Kind::NotConverged:
      return "NotConverged";
    case PixelClass::Kind::Degenerate:
      return "Degenerate";
  }
  return "?";
}

namespace {

double fraction(std::size_t part, std::size_t total) {
  return total == 0 ? 0.0 : static_cast<double>(part) / static_cast<double>(total);
}

}  // namespace

double JuliaStats::converged_fraction() const { return fraction(converged, total()); }
double JuliaStats::not_converged_fraction() const { return fraction(not_converged, total()); }
double JuliaStats::degenerate_fraction() const { return fraction(degenerate, total()); }

Polygon<double> pentagon_from_moduli(double x, double y, double tol) {
  const auto f = standard_frame<double>();
  Polygon<double> p({f[0], f[1], f[2], f[3], HPoint<double>::affine(x, y)});
  if (!p.valid_for_iteration(tol)) throw DegenerateError("moduli point lies on a degeneracy locus");
  return p;
}

Polygon<double> pentagon_from_moduli(const ModuliPoint<double>& m, double tol) {
  if (!m.chart_ok) throw DegenerateError("moduli point is outside the affine chart");
  return pentagon_from_moduli(m.x, m.y, tol);
}

PixelClass classify_orbit(const ModuliPoint<double>& m, const JuliaConfig& cfg) {
  const double tol = cfg.degenerate_threshold;
  try {
    Polygon<double> q = pentagon_from_moduli(m, tol);
    for (int k = 0;; ++k) {
      const double r = residual_to_regular(q, tol);
      if (!std::isfinite(r)) return PixelClass::degenerate();
      if (r < cfg.epsilon) return PixelClass::converged_in(k);
      if (k == cfg.max_iter) return PixelClass::not_converged();
      // Re-chart after each step: the iterates shrink toward a point in the
      // plane, and only their projective class matters.
      q = frame_normalized(iterate_once(q, cfg.lambda, kDefaultWindowOffset, tol), tol);
    }
  } catch (const DegenerateError&) {
    return PixelClass::degenerate();
  } catch (const std::invalid_argument&) {
    // A vanishing homogeneous triple.
    return PixelClass::degenerate();
  }
}

PixelClass classify_orbit(double x, double y, const JuliaConfig& cfg) {
  ModuliPoint<double> m;
  m.x = x;
  m.y = y;
  m.chart_ok = true;
  m.fifth = HPoint<double>::affine(x, y);
  return classify_orbit(m, cfg);
}

std::pair<double, double> pixel_center(const JuliaConfig& cfg, int row, int col) {
  const Window& w = cfg.window;
  const double x = w.xmin + (col + 0.5) * (w.xmax - w.xmin) / cfg.width;
  const double y = w.ymax - (row + 0.5) * (w.ymax - w.ymin) / cfg.height;
  return {x, y};
}

JuliaImage render(const JuliaConfig& cfg, unsigned threads) {
  cfg.validate();
  JuliaImage img;
  img.width = cfg.width;
  img.height = cfg.height;
  img.pixels.resize(static_cast<std::size_t>(cfg.width) * static_cast<std::size_t>(cfg.height));

  std::atomic<int> next_row{0};
  auto worker = [&] {
    for (int row = next_row++; row < cfg.height; row = next_row++) {
      for (int col = 0; col < cfg.width; ++col) {
        const auto [x, y] = pixel_center(cfg, row, col);
        img.pixels[static_cast<std::size_t>(row) * static_cast<std::size_t>(cfg.width) +
                   static_cast<std::size_t>(col)] = classify_orbit(x, y, cfg);
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(cfg.height));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (const PixelClass& p : img.pixels) {
    switch (p.kind) {
      case PixelClass::Kind::Converged:
        ++img.stats.converged;
        img.stats.max_steps = std::max(img.stats.max_steps, p.steps);
        break;
      case PixelClass::Kind::NotConverged:
        ++img.stats.not_converged;
        break;
      case PixelClass::Kind::Degenerate:
        ++img.stats.degenerate;
        break;
    }
  }
  return img;
}

std::array<std::uint8_t, 3> pixel_color(const PixelClass& p) {
  switch (p.kind) {
    case PixelClass::Kind::Converged: {
      const int gray = 255 - std::min(p.steps * 16, 240);
      const auto g = static_cast<std::uint8_t>(gray);
      return {g, g, g};
    }
    case PixelClass::Kind::NotConverged:
      return {255, 0, 0};
    case PixelClass::Kind::Degenerate:
      return {0, 0, 255};
  }
  return {0, 0, 0};
}

std::string encode_ppm(const JuliaImage& image) {
  if (image.pixels.empty()) throw std::invalid_argument("cannot encode an empty image");
  std::string out = "P6\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
  out.reserve(out.size() + image.pixels.size() * 3);
  for (const PixelClass& p : image.pixels) {
    for (std::uint8_t c : pixel_color(p)) out.push_back(static_cast<char>(c));
  }
  return out;
}

void write_ppm(const JuliaImage& image, const std::filesystem::path& path) {
  const std::string bytes = encode_ppm(image);
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open '" + path.string() + "' for writing");
  os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  os.close();
  if (!os) throw IoError("failed writing '" + path.string() + "'");
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, end) : std::to_string(v);
}

std::string format_param(const ProjParam<double>& p) {
  return p.is_infinite() ? "inf" : format_double(p.value());
}

std::string format_stats(const ProjParam<double>& lambda, const JuliaStats& stats) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "converged=%.6f not_converged=%.6f degenerate=%.6f",
                stats.converged_fraction(), stats.not_converged_fraction(),
                stats.degenerate_fraction());
  return "lambda=" + format_param(lambda) + " " + buf;
}

}  // namespace pentalab

#ifndef PENTALAB_JULIA_HPP
#define PENTALAB_JULIA_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "pentalab/moduli.hpp"

namespace pentalab {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rectangle of moduli-chart coordinates.
struct Window {
  double xmin = 0.0;
  double xmax = 1.0;
  double ymin = 0.0;
  double ymax = 1.0;
};

/// Centered on the regular class (phi^2, phi) with half-width 6.
Window default_window();

struct JuliaConfig {
  ProjParam<double> lambda{golden<double>().first};
  Window window = default_window();
  int width = 200;
  int height = 200;
  int max_iter = 100;
  double epsilon = 1e-6;
  double degenerate_threshold = kDegenerateThreshold;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

struct PixelClass {
  enum class Kind : std::uint8_t { Converged, NotConverged, Degenerate };
  Kind kind = Kind::NotConverged;
  int steps = 0;  // meaningful for Converged only

  static PixelClass converged_in(int k) { return {Kind::Converged, k}; }
  static PixelClass not_converged() { return {Kind::NotConverged, 0}; }
  static PixelClass degenerate() { return {Kind::Degenerate, 0}; }

  friend bool operator==(const PixelClass&, const PixelClass&) = default;
};

std::string to_string(const PixelClass& p);

struct JuliaStats {
  std::size_t converged = 0;
  std::size_t not_converged = 0;
  std::size_t degenerate = 0;
  int max_steps = 0;  // largest k among converged pixels

  std::size_t total() const { return converged + not_converged + degenerate; }
  double converged_fraction() const;
  double not_converged_fraction() const;
  double degenerate_fraction() const;
};

struct JuliaImage {
  int width = 0;
  int height = 0;
  std::vector<PixelClass> pixels;  // row-major, row 0 at the top (ymax)
  JuliaStats stats;

  const PixelClass& at(int row, int col) const {
    return pixels[static_cast<std::size_t>(row) * static_cast<std::size_t>(width) +
                  static_cast<std::size_t>(col)];
  }
};

/// (e1, e2, e3, (1:1:1), (x:y:1)). Throws DegenerateError when a 4-window of
/// the result is collinear.
Polygon<double> pentagon_from_moduli(double x, double y, double tol = kDegenerateThreshold);
Polygon<double> pentagon_from_moduli(const ModuliPoint<double>& m, double tol = kDegenerateThreshold);

/// Escape-time classification of the orbit of m under H_lambda.
PixelClass classify_orbit(const ModuliPoint<double>& m, const JuliaConfig& cfg);
PixelClass classify_orbit(double x, double y, const JuliaConfig& cfg);

/// Moduli coordinates of the center of pixel (row, col).
std::pair<double, double> pixel_center(const JuliaConfig& cfg, int row, int col);

/// Classifies every pixel. `threads` = 0 picks the hardware concurrency; the
/// result does not depend on it.
JuliaImage render(const JuliaConfig& cfg, unsigned threads = 0);

std::array<std::uint8_t, 3> pixel_color(const PixelClass& p);

/// Binary PPM (P6, maxval 255).
std::string encode_ppm(const JuliaImage& image);
/// Throws IoError carrying the path.
void write_ppm(const JuliaImage& image, const std::filesystem::path& path);

/// `lambda=<v> converged=<f> not_converged=<f> degenerate=<f>`, 6 decimals.
std::string format_stats(const ProjParam<double>& lambda, const JuliaStats& stats);

/// Shortest round-trip decimal of a double; "inf" for the infinite parameter.
std::string format_double(double v);
std::string format_param(const ProjParam<double>& p);

}  // namespace pentalab

#endif  // PENTALAB_JULIA_HPP

#ifndef PENTALAB_VERIFY_HPP
#define PENTALAB_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pentalab/moduli.hpp"

namespace pentalab {

/// The two golden parameters with a regularity theorem attached.
enum class GoldenParam { Phi, Psi };

const char* to_string(GoldenParam p);

struct VerifyOptions {
  GoldenParam lambda = GoldenParam::Phi;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  long bound = 10;  // numerators in [-bound, bound], denominators in [1, bound]
};

struct TrialFailure {
  std::size_t trial;
  std::uint64_t seed;
  std::string reason;
};

struct VerifyReport {
  GoldenParam lambda = GoldenParam::Phi;
  std::string field = "exact";
  std::size_t trials = 0;
  std::size_t passes = 0;  // trials where every check below held
  std::size_t theorem_passes = 0;          // one-step image has the expected class
  std::size_t inserted_vertex_passes = 0;  // (A, B, H_phi(A,B,C,D), C, D) is Regular
  std::size_t coincidence_passes = 0;      // H_phi(p) and H_psi(p*) share their vertex set
  std::vector<TrialFailure> failures;
};

/// Generator for trial `trial` of a campaign seeded with `seed`; independent
/// of how many trials came before it.
std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial);

/// Uniform rational coordinate p/q with |p| <= bound, 1 <= q <= bound.
Rational sample_rational(std::mt19937_64& rng, long bound);

/// Affine pentagon with random rational coordinates, resampled until all
/// five vertices are in general position. Throws std::runtime_error after
/// `max_attempts` rejections.
Polygon<QSqrt5> sample_pentagon(std::mt19937_64& rng, long bound, int max_attempts = 1000);

/// Exact verification campaign. Per trial: the one-step H_lambda image is
/// certified Regular (phi) or StarRegular (psi); the inserted-vertex
/// pentagon of the first four vertices is Regular; and H_phi(p) has the
/// same vertex set as H_psi applied to the star-order relabeling of p.
VerifyReport run_verify(const VerifyOptions& opts);

std::string format_report(const VerifyReport& r);

}  // namespace pentalab

#endif  // PENTALAB_VERIFY_HPP

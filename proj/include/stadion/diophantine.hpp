#pragma once

// Simultaneous rational approximation: the smallest multiplier Z making every
// Z * X_k close to an integer.
//
// Each X_k is held as floor(X_k) plus a 128-bit binary fraction, so Z * X_k
// mod 1 is an exact wrapping 128-bit product. The truncation error of the
// fraction is below Z * 2^-128, far under any accuracy of interest.

#include "stadion/geometry.hpp"
#include "stadion/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stadion {

__extension__ typedef unsigned __int128 u128;

struct IrrationalSet {
  std::vector<std::string> names;
  std::vector<long double> values;
  std::vector<BigInt> int_part;   // floor(X_k)
  std::vector<u128> frac;         // floor(2^128 * (X_k - floor(X_k)))
  std::vector<double> hi, lo;     // double-double split, used by the independent oracle

  std::size_t size() const { return values.size(); }

  /// Generators X_q of the trig field, evaluated at 100 decimal digits.
  static IrrationalSet generators(const std::vector<std::size_t>& indices);
  /// (A, B, C) for case A and (A, ..., G) for cases B and C.
  static IrrationalSet for_case(CaseLabel label);
  /// Exact binary values of the given doubles.
  static IrrationalSet from_doubles(const std::vector<double>& xs);
  /// Decimal strings, parsed at 100 digits.
  static IrrationalSet from_strings(const std::vector<std::string>& xs);
};

struct Approximation {
  bool found = false;
  std::uint64_t Z = 0;
  std::vector<BigInt> q;      // nearest integers to Z * X_k, ties to even
  double max_error = 0.0;     // max_k |Z X_k - q_k|
  double eps = 0.0;           // accuracy target used by the search
  double N = 0.0;             // Dirichlet box bound eps^-n matching eps
  std::uint64_t z_cap = 0;
};

struct ScanOptions {
  int threads = 0;                       // 0: STADION_THREADS, then hardware concurrency
  std::uint64_t chunk = std::uint64_t(1) << 22;
  std::uint64_t z_start = 1;             // first multiplier examined
};

/// Resolves a thread request: explicit value, else STADION_THREADS, else the
/// hardware concurrency (at least 1).
int resolve_threads(int requested);

/// Exact q and error for a given multiplier.
Approximation approximation_at(const IrrationalSet& x, std::uint64_t Z);

/// Smallest Z in [z_start, z_cap] with max_k ||Z X_k|| < eps; found = false
/// when the cap is exhausted.
Approximation min_z_for_accuracy(const IrrationalSet& x, double eps, std::uint64_t z_cap,
                                 const ScanOptions& options = {});

/// Smallest Z in [1, N] with max_k ||Z X_k|| < N^(-1/n). The box principle
/// guarantees success.
Approximation dirichlet_search(const IrrationalSet& x, std::uint64_t N, const ScanOptions& options = {});

/// Minimal Z for each accuracy of a strictly descending grid. Each scan resumes
/// at the previous Z, since minimal Z cannot decrease as eps shrinks.
std::vector<Approximation> step_function(const IrrationalSet& x, const std::vector<double>& eps_grid,
                                         std::uint64_t z_cap, const ScanOptions& options = {});

/// Basis-reduction search over a ladder of scales. Any returned Z satisfies
/// the accuracy, but it is not certified minimal.
Approximation lattice_search(const IrrationalSet& x, double eps, std::uint64_t z_cap);

struct MinimalityCertificate {
  bool z_meets_accuracy = false;
  std::uint64_t checked = 0;          // multipliers 1 .. Z-1 examined
  std::uint64_t violations = 0;       // smaller multipliers that also meet eps
  std::uint64_t first_violation = 0;
  bool minimal() const { return z_meets_accuracy && violations == 0; }
};

/// Independent exhaustive check in double-double arithmetic.
MinimalityCertificate verify_minimality(const IrrationalSet& x, std::uint64_t Z, double eps, int threads = 0);

}  // namespace stadion

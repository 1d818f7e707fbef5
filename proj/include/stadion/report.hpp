#pragma once

// JSON and CSV views of the pipeline results. Key order is fixed and floats
// are written with 17 significant digits, so equal inputs give byte-equal
// output regardless of thread count.

#include "stadion/diophantine.hpp"
#include "stadion/pipeline.hpp"
#include "stadion/semiclassics.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace stadion {

using Json = nlohmann::ordered_json;

std::string format_double(double v);
std::string dump_json(const Json& j);

Json envelope_json(const CaseGeometry& g, std::size_t samples = 10000);
Json unfold_json(const CaseGeometry& g);
Json approximation_json(const IrrationalSet& x, const Approximation& a);

/// eps, N, Z, q_1..q_n, max_error
std::string dioph_csv_header(std::size_t n);
std::string dioph_csv_row(const Approximation& a);

struct SpectrumRow {
  ModeNumbers mode;
  long double energy = 0.0L;
  BigInt energy_over_pi2 = 0;
  bool poc_matches = false;
};

/// Modes 0 <= m <= n <= mmax, n >= 1, ordered by energy then m. The m = n
/// levels are kept although their case A wave function vanishes.
std::vector<SpectrumRow> spectrum_slice(const CaseGeometry& g, std::uint64_t Z, long mmax);
Json spectrum_json(const std::vector<SpectrumRow>& rows, std::uint64_t Z);

struct ResidualOptions {
  std::size_t boundary_samples = 4096;
  std::size_t diagonal_samples = 1024;
  std::size_t nodal_samples = 512;
  int threads = 1;
};

Json residual_json(const CaseGeometry& g, const SwfModel& model, const Approximation& approx, double eps,
                   const ResidualOptions& options);

/// "x,y,re,im" rows for grid points inside the quarter.
std::string grid_csv(const std::vector<GridSample>& grid);
/// Headerless n x n matrix of Re psi, NaN outside the quarter.
std::string grid_matrix(const std::vector<GridSample>& grid, std::size_t n);

}  // namespace stadion

#pragma once

// Momentum quantization, the semiclassical wave function built from the
// mirror images of a point, and the residual certificates that measure how
// far it is from a true Dirichlet eigenfunction.
//
// Points are in the unfolding frame of QuarterPolygon: the quarter's corner
// on both symmetry axes sits at (c0x, 0) and the wave function vanishes on
// y = 0 and x = c0x by construction.

#include "stadion/diophantine.hpp"
#include "stadion/pipeline.hpp"
#include "stadion/rational.hpp"
#include "stadion/trigfield.hpp"
#include "stadion/vec2.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace stadion {

using Complex = std::complex<long double>;

struct ModeNumbers {
  long m = 0;
  long n = 0;
};

/// p with p . D_x = 8 pi m Z and p . D_y = 8 pi n Z for |D_x| = |D_y| = 2.
/// Throws std::invalid_argument for m = n = 0.
std::array<long double, 2> quantize_momentum(std::uint64_t Z, ModeNumbers mode);

/// E = p^2 / 2 = 8 pi^2 Z^2 (m^2 + n^2).
long double energy(std::uint64_t Z, ModeNumbers mode);
/// E / pi^2 as an exact integer.
BigInt energy_over_pi2(std::uint64_t Z, ModeNumbers mode);

/// +-exp(i p . r).
Complex bswf_eval(const std::array<long double, 2>& p, Vec2 point, int sign = 1);

/// One block of four mirror images: sign * exp(i p . C) sin(u_x X) sin(u_y y),
/// with (X, y) relative to the block corner and u = G^T p.
struct SwfTerm {
  int block = 0;
  int sign = 1;
  FieldPoint corner;          // world image of the quarter's corner
  FieldElement ux_coef;       // u_x = 4 pi Z ux_coef
  FieldElement uy_coef;
  long double ux = 0.0L;
  long double uy = 0.0L;
  Complex phase;              // exp(i p . corner), reduced at 100 digits
};

class SwfModel {
 public:
  /// Sum over the unfolding; equals -1/4 of the plain sum over all copies.
  static SwfModel build(const CaseGeometry& geometry, std::uint64_t Z, ModeNumbers mode);

  const std::vector<SwfTerm>& terms() const { return terms_; }
  std::uint64_t Z() const { return z_; }
  ModeNumbers mode() const { return mode_; }
  const std::array<long double, 2>& momentum() const { return p_; }
  long double energy() const { return energy_; }
  long double corner_x() const { return c0x_; }
  bool degenerate() const { return degenerate_; }  // identically zero; needs |m| = |n|
  /// exp(-i alpha) making the wave function as close to real as possible
  /// over the quarter; an overall constant, so every certificate is unchanged.
  Complex alignment() const { return align_; }

  /// Unfolding-frame point.
  Complex value(Vec2 point) const;
  /// Coordinates relative to the corner, X = x - c0x.
  Complex value_local(long double X, long double y) const;
  std::array<Complex, 2> gradient_local(long double X, long double y) const;
  /// xx, xy, yy.
  std::array<Complex, 3> hessian_local(long double X, long double y) const;
  /// Trace of the analytic Hessian.
  Complex laplacian_local(long double X, long double y) const;

  std::array<Complex, 2> gradient(Vec2 point) const { return gradient_local(point.x - c0x_, point.y); }
  Complex laplacian(Vec2 point) const { return laplacian_local(point.x - c0x_, point.y); }

 private:
  std::vector<SwfTerm> terms_;
  std::uint64_t z_ = 0;
  ModeNumbers mode_;
  std::array<long double, 2> p_{};
  long double energy_ = 0.0L;
  long double c0x_ = 0.0L;
  bool degenerate_ = false;
  Complex align_ = 1;
};

/// The four-term closed form for case A, phases read as exp(i ...), with
/// c0x = r + 2.
Complex swf_eval_A_literal(std::uint64_t Z, ModeNumbers mode, const FieldElement& c0x, Vec2 point);

/// Sine arguments of the eight-term closed form for cases B and C, in units of
/// 4 pi Z: pairs (ux_coef, uy_coef).
std::vector<std::array<FieldElement, 2>> closed_form_BC_arguments(ModeNumbers mode);

/// B and C wave functions are the unfolding sum itself.
Complex swf_eval_BC(const SwfModel& model, Vec2 point);

// ---- residual constants --------------------------------------------------

/// Integer expansion of one period: p . D = 2 pi sum_f (m a_xf + n a_yf) Z X_f.
struct PeriodConstants {
  std::string label;
  Vec2 vector;
  std::array<BigInt, kFieldDim> a_x{};
  std::array<BigInt, kFieldDim> a_y{};
  BigInt I_x = 0;   // sum_{f >= 1} |a_xf|
  BigInt I_y = 0;
};

/// Throws std::domain_error when 4 * coefficient is not an integer.
PeriodConstants period_constants(const Period& period);

/// m sum_f a_xf q_f + n sum_f a_yf q_f with q_0 = Z. The approximation must
/// cover X_1 .. X_h for every generator the period uses.
BigInt I_mn(const PeriodConstants& c, ModeNumbers mode, const Approximation& approx);

struct SideConstants {
  int side = 0;
  std::string name;
  BigInt J_x = 0;
  BigInt J_y = 0;
  int gluings = 0;          // nonzero gluings on this side
  bool construction_zero = false;
};

/// J per polygon side: sum of I over every nonzero gluing of that side.
std::vector<SideConstants> side_constants(const CaseGeometry& geometry);

// ---- certificates ----------------------------------------------------------

struct SideResidual {
  SideConstants constants;
  long double max_abs = 0.0L;
  long double nominal_bound = 0.0L;      // 2 pi (|m| J_x + |n| J_y) eps
  long double rigorous_bound = 0.0L;   // a quarter of it, the normalization of the unfolding sum
  std::size_t samples = 0;
  bool within_bound() const;
};

/// Samples every side at `samples` points, endpoints included.
std::vector<SideResidual> boundary_residual(const SwfModel& model, const CaseGeometry& geometry, double eps,
                                            std::size_t samples, int threads = 1);

struct WavelengthMismatch {
  std::string label;
  long double length = 0.0L;       // |D|
  long double wavelength = 0.0L;   // 2 pi / |p . D_hat|
  BigInt I_mn = 0;
  long double mismatch = 0.0L;     // | |D| - |I_mn| lambda |
  long double bound = 0.0L;        // (|m| I_x + |n| I_y) eps lambda
  bool degenerate = false;         // I_mn = 0 or p orthogonal to D
};

WavelengthMismatch wavelength_mismatch(const Period& period, const SwfModel& model, const Approximation& approx,
                                       double eps);

// ---- periodic skeleton -------------------------------------------------------

struct PocLevel {
  ModeNumbers mode;
  Rational e0_over_pi2;        // transverse part, from sqrt(2 E0) |D_x| = 8 pi Z n
  Rational longitudinal_over_pi2;
  Rational total_over_pi2;
  BigInt aperiodic_over_pi2;   // 8 Z^2 (m^2 + n^2)
  bool matches = false;
};

/// Throws std::invalid_argument for n = 0.
PocLevel poc_level(const CaseGeometry& geometry, std::uint64_t Z, ModeNumbers mode);

/// exp(i p y) (a sin(k x) + b cos(k x)) with k = sqrt(2 E0).
Complex poc_profile(const PocLevel& level, std::uint64_t Z, Complex a, Complex b, Vec2 point);

// ---- singular diagonals ------------------------------------------------------

struct DiagonalSpec {
  FieldElement x;                               // abscissa
  std::array<Rational, 4> coeffs{};             // x = sum_l coeffs[l] X_l
  std::array<Rational, 4> coeffs_sqrt2{};       // sqrt2 * x in the same basis
  double value = 0.0;
};

/// Abscissas of the singular vertices of the unfolding (vertex angle m pi/n
/// with m > 1) plus the anchor line x = 0, sorted and deduplicated. Throws
/// std::domain_error if one leaves span{X_0..X_3}.
std::vector<DiagonalSpec> make_diagonals(const CaseGeometry& geometry);

struct DiagonalResidual {
  DiagonalSpec diagonal;
  long double max_abs = 0.0L;
  long double nominal_bound = 0.0L;   // 4 pi ((m+n) sum|x_l| + n sum|x'_l| + 2m + 4n) eps
  long double term_bound = 0.0L;    // sum over terms of 2 pi sum_f |w_f| eps
  bool term_bound_valid = true;     // every 2 w_f integral
  bool construction_zero = false;   // x = c0x
  std::size_t samples = 0;
};

/// Samples y over the quarter's height.
std::vector<DiagonalResidual> diagonal_residual(const SwfModel& model, const CaseGeometry& geometry,
                                                const std::vector<DiagonalSpec>& diagonals, double eps,
                                                std::size_t samples, int threads = 1);

// ---- nodal line and accuracy ledger -----------------------------------------

struct NodalEstimate {
  bool valid = false;
  std::string reason;
  int order = 0;                    // Taylor order used
  long double l = 0.0L;             // signed distance along the outward normal
  long double M = 0.0L;             // |n . grad Re psi| / ((m+n) Z)
  long double validity_floor = 0.0L;
  long double scaled = 0.0L;        // |(m+n) Z l|
  long double c1_factor = 0.0L;     // sqrt(pi (m J_x + n J_y)) eps^(1/2)
};

NodalEstimate nodal_distance(const SwfModel& model, const CaseGeometry& geometry, int side, Vec2 point,
                             const SideConstants& constants, double eps);

struct NodalSummary {
  int side = 0;
  std::string name;
  std::size_t valid = 0;
  std::size_t excluded = 0;
  std::size_t second_order = 0;
  long double max_abs_l = 0.0L;
  long double max_scaled = 0.0L;
  long double c1_factor = 0.0L;
};

std::vector<NodalSummary> nodal_scan(const SwfModel& model, const CaseGeometry& geometry, double eps,
                                     std::size_t samples);

struct AccuracyReport {
  double epsilon_pol = 0.0;
  double epsilon_mn = 0.0;          // largest nodal displacement over valid boundary points
  double composite = 0.0;           // epsilon_pol + epsilon_mn
  double admissibility = 0.0;       // (m J_x + n J_y) eps, worst side; must be << 1
  bool admissible = false;          // admissibility <= 1/100
  std::string regime;
  std::string eta_statement;
};

AccuracyReport spectrum_accuracy_report(const SwfModel& model, const CaseGeometry& geometry, double eps,
                                        std::size_t samples);

// ---- grids -----------------------------------------------------------------------

struct GridSample {
  double x = 0.0, y = 0.0;
  long double re = 0.0L, im = 0.0L;
  bool inside = false;
};

/// n x n grid over the quarter's bounding box, row-major from the bottom.
std::vector<GridSample> grid_eval(const SwfModel& model, const CaseGeometry& geometry, std::size_t n, int threads = 1);

}  // namespace stadion

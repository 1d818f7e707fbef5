#pragma once

// Mirror unfolding of a rational polygon into its elementary pattern (EPP),
// the translation periods linking parallel sides, and their exact
// decomposition over two base periods.

#include "stadion/polygon.hpp"
#include "stadion/rational.hpp"
#include "stadion/trigfield.hpp"
#include "stadion/vec2.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stadion {

/// Element of the dihedral group generated by reflections in lines whose
/// directions are multiples of pi/K: x -> Rot(rot * pi / K) applied after an
/// optional conjugation (y -> -y).
struct DihedralElement {
  int rot = 0;  // in units of pi/K, reduced mod 2K
  bool flip = false;

  friend bool operator==(DihedralElement a, DihedralElement b) { return a.rot == b.rot && a.flip == b.flip; }
  int sign() const { return flip ? -1 : 1; }
};

struct PolygonCopy {
  DihedralElement g;
  Vec2 t;                          // world(x) = g(x) + t
  std::optional<FieldPoint> t_exact;
  int block = 0;                   // 0-based
  int index_in_block = 0;          // 0-based
  int parity = 1;                  // +1 even number of reflections, -1 odd

  std::string id() const;          // "block.copy", 1-based
};

struct EppOptions {
  std::vector<int> seed_sides;     // closure sides; empty means the polygon's a and b
  bool use_polygon_seeds = true;
  bool grow = true;                // false: stop after the seed block
  Vec2 anchor{0.0, 0.0};
  std::size_t copy_budget = 4096;
};

class Epp {
 public:
  const RationalPolygon& polygon() const { return polygon_; }
  const std::vector<PolygonCopy>& copies() const { return copies_; }
  int angle_unit() const { return k_; }          // K: side directions are multiples of pi/K
  std::size_t group_order() const { return 2 * std::size_t(k_); }
  int block_count() const;
  bool exact() const { return exact_; }

  Vec2 apply(const PolygonCopy& c, Vec2 p) const;
  FieldPoint apply_exact(const PolygonCopy& c, const FieldPoint& p) const;
  Vec2 vertex(std::size_t copy, std::size_t v) const;
  /// 2x2 linear part of a copy, row-major.
  std::array<double, 4> matrix(const PolygonCopy& c) const;

  /// Copy obtained by reflecting `copy` in its side `side`.
  PolygonCopy reflect(const PolygonCopy& copy, int side) const;
  /// Index of the copy with the same orientation class, or -1.
  int find(DihedralElement g) const;

  friend Epp build_epp(const RationalPolygon& polygon, const EppOptions& options);

 private:
  RationalPolygon polygon_;
  std::vector<PolygonCopy> copies_;
  int k_ = 1;
  bool exact_ = false;
};

/// Throws std::domain_error for irrational polygons and std::runtime_error
/// when the copy budget is exceeded.
Epp build_epp(const RationalPolygon& polygon, const EppOptions& options = {});

/// Every reflection of every copy in every side lands on an orientation class
/// that is already present.
bool is_maximal(const Epp& epp);

struct SideRef {
  int copy = 0;
  int side = 0;
};

struct Gluing {
  SideRef source;
  SideRef target;
  Vec2 vector;
  std::optional<FieldPoint> exact;
  bool zero = false;
};

struct Period {
  std::string label;               // "ijk->rst": block, copy in block, side (1-based)
  SideRef source;
  SideRef target;
  Vec2 vector;
  std::optional<FieldPoint> exact;
  int multiplicity = 1;            // gluings sharing this vector up to sign
  std::optional<FieldElement> a_x;
  std::optional<FieldElement> a_y;
};

/// All side gluings of the closed surface, one per unordered side pair.
std::vector<Gluing> enumerate_gluings(const Epp& epp);

/// Nonzero gluing vectors, deduplicated up to sign.
std::vector<Period> enumerate_periods(const Epp& epp);

/// Exact coefficients (a_x, a_y) with v = a_x D_x + a_y D_y. Throws
/// std::domain_error when exact data are missing or the residual exceeds 1e-8.
std::pair<FieldElement, FieldElement> decompose_period(const Period& p, const Period& base_x, const Period& base_y);

/// The horizontal (2,0) and vertical (0,2) flat-side periods.
std::pair<Period, Period> base_periods(const std::vector<Period>& periods);

/// Fills a_x and a_y for every period.
void decompose_all(std::vector<Period>& periods, const Period& base_x, const Period& base_y);

/// Genus of the translation surface from the vertex angles m_i pi / n_i.
int genus(const RationalPolygon& polygon);

/// Genus from the Euler characteristic of the glued EPP (independent of genus()).
int euler_genus(const Epp& epp);

struct UnfoldingSummary {
  int genus = 0;
  int euler_genus = 0;
  int independent_period_count = 0;  // 2 * genus from the glued surface
  int linking_period_count = 0;      // distinct nonzero gluing vectors
  int gluing_count = 0;
  int internal_gluing_count = 0;
  std::size_t copy_count = 0;
  int block_count = 0;
  BigInt coefficient_lcm = 1;        // w: common denominator of all a_x, a_y coefficients
  int highest_generator = -1;        // largest X_q used by any coefficient
};

UnfoldingSummary summarize(const Epp& epp, const std::vector<Period>& decomposed);

}  // namespace stadion

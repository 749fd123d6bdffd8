#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ghw/gf.hpp"
#include "ghw/poly.hpp"

namespace ghw {

// Point of P^{s-1} in standard form. Affine-cartesian sets normalize the last
// coordinate to 1; every other family normalizes the first nonzero
// coordinate to 1.
struct ProjectivePoint {
  std::vector<Fe> coords;

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.coords == b.coords;
  }
  friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b);
};

enum class Family { AffineCartesian, NestedCartesian, ProjectiveSpace, Torus, Custom };

std::string family_name(Family f);
Family parse_family(const std::string& name);

struct PointSet {
  FieldPtr field;
  int nvars = 0;             // s, the ambient P^{s-1} has s coordinates
  Family family = Family::Custom;
  std::vector<ProjectivePoint> points;         // sorted, duplicate-free
  std::vector<std::vector<Fe>> factors;        // cartesian families only

  size_t size() const { return points.size(); }
  std::vector<int32_t> factor_sizes() const;
};

// [A_1 x ... x A_n x {1}] in P^n; the factors keep their given order.
PointSet affine_cartesian_set(FieldPtr field, std::vector<std::vector<Fe>> factors);

// [A_1 x ... x A_s] in P^{s-1}; validates the nested-family conditions:
// (i) {0,1} subset of every A_i, (ii) a/b in A_j for i < j, a in A_j,
// 0 != b in A_i, (iii) |A_1| <= ... <= |A_s|.
PointSet nested_cartesian_set(FieldPtr field, std::vector<std::vector<Fe>> factors);

PointSet projective_space(FieldPtr field, int s);
PointSet projective_torus(FieldPtr field, int s);
PointSet custom_points(FieldPtr field, int s, const std::vector<std::vector<Fe>>& coords);

// Published generator sets for the vanishing ideal of each built-in family;
// every returned polynomial is homogeneous and verified to vanish on X.
// Throws for Family::Custom (use the points-kernel construction instead).
std::vector<Polynomial> vanishing_generators(const PointSet& X);

struct ZeroSet {
  std::vector<int> indices;  // positions into X.points
  long zeros = 0;            // |V_X(F)|
  long complement = 0;       // |X \ V_X(F)|
};

// Common zero set of finitely many nonzero homogeneous polynomials.
ZeroSet zero_set(const PointSet& X, std::span<const Polynomial> polys);

// Family descriptor JSON:
//   {"field":{"p":2,"k":2},"family":"nested-cartesian",
//    "factors":[["0","1"],["0","1"],"all"]}
// Entry "all" means the whole field. projective-space and torus take "s"
// instead of factors; custom takes "points": [["1","0","0"],...].
PointSet parse_family_json(const std::string& json_text);
std::string family_to_json(const PointSet& X);

// Default monomial order under which the built-in tables for this family are
// computed: lex t_s > ... > t_1 for the nested families, grevlex
// t_1 > ... > t_s for the cartesian/torus families.
MonomialOrder default_order(const PointSet& X);

}  // namespace ghw

// Finite projective planes as incidence structures: the plane of a ternary
// ring, quadrangle coordinatization, duality, collinearity and concurrence.
//
// Planes are stored uncoordinatized; coordinate labels are an optional layer
// so externally supplied planes plug in unchanged.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trinet/ternary.hpp"

namespace trinet {

struct PointLabel {
  enum Kind { kAffine, kIdeal, kVertex } kind = kAffine;
  int x = 0, y = 0;  // affine (x,y); ideal slope in x; vertex ignores both

  bool operator==(const PointLabel&) const = default;
};

struct LineLabel {
  enum Kind { kSlope, kVertical, kIdealLine } kind = kSlope;
  int m = 0, k = 0;  // slope lines (m,k); verticals use m as the abscissa

  bool operator==(const LineLabel&) const = default;
};

// Coordinate labels for every point and line of a plane of order n, together
// with the ternary ring the labels came from.
struct PlaneLabels {
  int order = 0;
  std::vector<PointLabel> point_labels;
  std::vector<LineLabel> line_labels;
  // Reverse lookups into plane point/line indices.
  std::vector<int> affine_point;   // x*order + y
  std::vector<int> ideal_point;    // slope
  int vertex_point = -1;
  std::vector<int> slope_line;     // m*order + k
  std::vector<int> vertical_line;  // abscissa
  int ideal_line = -1;
  std::optional<TernaryRing> ring;

  int point_of(const PointLabel& l) const;
  int line_of(const LineLabel& l) const;
};

struct AxiomWitness {
  bool ok = true;
  std::string detail;
};

struct PlaneAxiomReport {
  AxiomWitness two_points_one_line;   // any two points on exactly one line
  AxiomWitness two_lines_one_point;   // any two lines meet in exactly one point
  AxiomWitness quadrangle_exists;     // four points, no three collinear
  AxiomWitness uniform;               // line sizes n+1, counts n^2+n+1

  bool all() const {
    return two_points_one_line.ok && two_lines_one_point.ok && quadrangle_exists.ok &&
           uniform.ok;
  }
};

PlaneAxiomReport verify_plane_axioms(int n_points, const std::vector<std::vector<int>>& lines);

struct Plane {
  int n_points = 0;
  std::vector<std::vector<int>> lines;  // sorted point indices
  int order = 0;                        // line size - 1

  // Derived incidence structure.
  std::vector<std::vector<int>> lines_of_point;
  std::vector<int> join_table;  // p1 * n_points + p2 -> line
  std::vector<int> meet_table;  // l1 * n_lines + l2 -> point
  std::vector<char> incidence;  // line * n_points + point

  std::optional<PlaneLabels> labels;

  int n_lines() const { return static_cast<int>(lines.size()); }
  int join(int p1, int p2) const { return join_table[p1 * n_points + p2]; }
  int meet(int l1, int l2) const { return meet_table[l1 * n_lines_cache + l2]; }
  bool on(int line, int point) const { return incidence[line * n_points + point] != 0; }

  int n_lines_cache = 0;
};

// Builds the derived tables; throws std::invalid_argument unless the
// projective plane axioms hold.
Plane make_plane(int n_points, std::vector<std::vector<int>> lines);

// Labeled plane with n^2+n+1 points and lines on the incidence rule of the
// ring's coordinates.  Requires verify_axioms(ring).
Plane plane_from_ternary(const TernaryRing& ring);

// Incidence-level truth; with labels present, cross-checked against the
// ternary collinearity/concurrence criteria where the pattern applies.
bool collinear(const Plane& plane, const std::vector<int>& points);
bool concurrent(const Plane& plane, const std::vector<int>& lines);

// Transposed incidence; labels dualize ([x,y]* = <x,y> and so on).
Plane dual_plane(const Plane& plane);

struct Quadrangle {
  int u = 0, v = 0, o = 0, e = 0;
};

bool quadrangle_valid(const Plane& plane, const Quadrangle& q);

// Ordered quadrangles, no three collinear, lexicographic by (u,v,o,e).
class QuadrangleEnumerator {
 public:
  explicit QuadrangleEnumerator(const Plane& plane);
  bool next(Quadrangle& out);

 private:
  const Plane& plane_;
  int u_, v_, o_, e_;
  bool advance();
};

std::vector<Quadrangle> all_quadrangles(const Plane& plane);

// Ternary ring plus the labeling it induces on the plane.
struct Coordinatization {
  TernaryRing ring;
  PlaneLabels labels;
};

// Reusable buffers for the quadrangle sweep.
struct CoordinatizeWorkspace {
  std::vector<int> label_of;  // per point: label along oe, else -1
  std::vector<int> xcoord, ycoord, slope;
};

// Coordinatization seeded by a quadrangle: o -> 0, e -> 1, remaining points
// of line oe in ascending index order; coordinates and slopes read off the
// incidence structure; t(x,m,k) = y(vertical(x) ^ join([m],[0,k])).
Coordinatization ternary_from_quadrangle(const Plane& plane, const Quadrangle& q);
Coordinatization ternary_from_quadrangle(const Plane& plane, const Quadrangle& q,
                                         CoordinatizeWorkspace& ws);

// Explicit point bijection preserving incidence, or nullopt.  Backtrack-free:
// transports coordinates through a fixed quadrangle of lhs and sweeps rhs.
std::optional<std::vector<int>> plane_isomorphic(const Plane& lhs, const Plane& rhs);

}  // namespace trinet

// Decision procedures and explicit constructors for projective-planar
// embeddings of quasigroup-expansion matroids: triangular (frame) and affine
// (lift) 3-net embeddings, their duals, and the combined planarity verdict.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trinet/algebra.hpp"
#include "trinet/matroid.hpp"
#include "trinet/nets.hpp"
#include "trinet/plane.hpp"
#include "trinet/ternary.hpp"

namespace trinet {

enum class EmbedMode { kFrameLines, kFramePoints, kLiftPoints };

const char* embed_mode_name(EmbedMode mode);

struct EmbeddingWitness {
  EmbedMode mode = EmbedMode::kFrameLines;
  Quadrangle quadrangle;
  TernaryRing ring;
  // Loop normalization of the input quasigroup (principal, gamma = id) and
  // the monomorphism from the normalized loop into the target loop, given in
  // ring elements (frame modes: nonzero; lift: any).
  Isotopism normalization;
  std::vector<int> monomorphism;
  // Images of the mode's matroid ground set in GroundMap order: plane line
  // indices for kFrameLines, plane point indices for the point modes.
  std::vector<int> element_to_target;
  bool verified = false;
};

struct DecideOptions {
  bool all_witnesses = false;
  int jobs = 1;
};

struct DecideOutcome {
  std::optional<EmbeddingWitness> witness;      // first, in quadrangle order
  std::vector<EmbeddingWitness> all_witnesses;  // populated only with all_witnesses
  long long quadrangles_swept = 0;
};

// Full frame matroid embedded as lines of the plane (equivalently points of
// the dual plane): target loop is the ring's multiplicative loop.
DecideOutcome decide_frame(const Quasigroup& q, const Plane& plane, const DecideOptions& opt = {});

// Full frame matroid embedded as points of the plane: target loop is the
// opposite of the diamond quasigroup.
DecideOutcome decide_frame_points(const Quasigroup& q, const Plane& plane,
                                  const DecideOptions& opt = {});

// Extended lift matroid embedded as points: target loop is the additive loop.
DecideOutcome decide_lift(const Quasigroup& q, const Plane& plane, const DecideOptions& opt = {});

struct PlanarityReport {
  DecideOutcome lift_points;
  DecideOutcome frame_points;
  DecideOutcome frame_lines;  // an embedding as points of the dual plane
  bool trivial = false;       // one-element quasigroup: embeds everywhere

  bool embeds_as_points() const {
    return trivial || lift_points.witness.has_value() || frame_points.witness.has_value();
  }
  bool embeds_in_dual() const { return trivial || frame_lines.witness.has_value(); }
};

PlanarityReport decide_planar(const Quasigroup& q, const Plane& plane,
                              const DecideOptions& opt = {});

// Constructive embeddings for a multiplication-closed subset of the target
// loop inside a labeled plane.  Elements are ring elements; fibers follow the
// ascending order of s.  Ground order matches the mode's GroundMap.
std::vector<int> embed_frame_lines(const std::vector<int>& s, const PlaneLabels& labels);
std::vector<int> embed_frame_points(const std::vector<int>& s, const PlaneLabels& labels);
std::vector<int> embed_lift_points(const std::vector<int>& s, const PlaneLabels& labels);

// An affine 3-net embedded as three pencils of plane lines whose centers are
// collinear.
struct EmbeddedNet {
  std::array<std::vector<int>, 3> pencils;  // line indices per pencil 12/23/13
};

struct AffineNetCoordinates {
  TernaryRing ring;                          // from the quadrangle the proof picks
  Quadrangle quadrangle;
  std::vector<int> subloop;                  // ring elements, closed under dual addition
  std::array<std::vector<int>, 3> line_elements;  // ring element per pencil line
  Quasigroup net_quasigroup;                 // on pencil indices
  // Dual addition restricted to the subloop (indexed by position in subloop);
  // it has left identity 0 and is a loop only in characteristic-2-like cases,
  // so the two-sided form is its principal isotope at 0.
  Quasigroup dual_addition;
  Loop normalized;
};

// Coordinatizes an embedded affine net: a ternary ring T such that the net's
// quasigroup is carried, via the line labels, onto a subset of T closed under
// the dual addition x +* y = t*(1,x,y).  Throws std::invalid_argument when
// the pencils are not concurrent, centers are not collinear, or the point
// set is not net-closed.
AffineNetCoordinates coordinatize_affine_net(const Plane& plane, const EmbeddedNet& net);

// A dual 3-net embedded as points on three main lines.
struct EmbeddedDualNet {
  std::array<int, 3> main_lines{-1, -1, -1};
  std::array<std::vector<int>, 3> points;  // net points per main line
};

struct CrossClosedOutcome {
  bool present = false;
  std::string reason;            // when absent
  BiasedGraph3 sub_expansion;    // fibers indexed within the selection
  Loop subloop;                  // subloop of a principal isotope of the net quasigroup
  std::vector<int> subloop_elements;  // as line indices of the full dual net's 13-fiber
};

// If the point subset is cross-closed and touches all three main lines, the
// corresponding sub-expansion and subloop; otherwise the reason it fails.
CrossClosedOutcome cross_closed_subloop(const Plane& plane, const EmbeddedDualNet& net,
                                        const std::vector<int>& subset);

}  // namespace trinet

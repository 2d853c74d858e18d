#include "trinet/embed.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace trinet {

const char* embed_mode_name(EmbedMode mode) {
  switch (mode) {
    case EmbedMode::kFrameLines:
      return "frame-lines";
    case EmbedMode::kFramePoints:
      return "frame-points-dual";
    default:
      return "lift-points";
  }
}

namespace {

// Per-fiber target elements -> images of the matroid ground set.

std::vector<int> frame_line_images(const std::vector<int>& e12, const std::vector<int>& e23,
                                   const std::vector<int>& e13, const PlaneLabels& lab) {
  std::vector<int> out;
  out.reserve(e12.size() + e23.size() + e13.size() + 3);
  for (int g : e12) out.push_back(lab.line_of({LineLabel::kVertical, g, 0}));
  for (int h : e23) out.push_back(lab.line_of({LineLabel::kSlope, h, 0}));
  for (int k : e13) out.push_back(lab.line_of({LineLabel::kSlope, 0, k}));
  // Half edge at v_i joins the centers of the two pencils at v_i; the pencil
  // centers are zhat (verticals), [0,0] (slope h through the origin) and
  // [0] (slope 0 lines).
  out.push_back(lab.line_of({LineLabel::kIdealLine, 0, 0}));   // d1: join(zhat, [0])
  out.push_back(lab.line_of({LineLabel::kVertical, 0, 0}));    // d2: join(zhat, [0,0])
  out.push_back(lab.line_of({LineLabel::kSlope, 0, 0}));       // d3: join([0,0], [0])
  return out;
}

std::vector<int> frame_point_images(const std::vector<int>& e12, const std::vector<int>& e23,
                                    const std::vector<int>& e13, const PlaneLabels& lab) {
  std::vector<int> out;
  out.reserve(e12.size() + e23.size() + e13.size() + 3);
  for (int g : e12) out.push_back(lab.point_of({PointLabel::kIdeal, g, 0}));
  for (int h : e23) out.push_back(lab.point_of({PointLabel::kAffine, h, 0}));
  for (int k : e13) out.push_back(lab.point_of({PointLabel::kAffine, 0, k}));
  // Main lines are Zhat, <0,0>, <0>; the half edges land on their meets.
  out.push_back(lab.point_of({PointLabel::kVertex, 0, 0}));    // d1: Zhat ^ <0>
  out.push_back(lab.point_of({PointLabel::kIdeal, 0, 0}));     // d2: Zhat ^ <0,0>
  out.push_back(lab.point_of({PointLabel::kAffine, 0, 0}));    // d3: <0,0> ^ <0>
  return out;
}

std::vector<int> lift_point_images(const std::vector<int>& e12, const std::vector<int>& e23,
                                   const std::vector<int>& e13, const PlaneLabels& lab) {
  std::vector<int> out;
  out.reserve(e12.size() + e23.size() + e13.size() + 1);
  for (int g : e12) out.push_back(lab.point_of({PointLabel::kIdeal, g, 0}));
  for (int h : e23) out.push_back(lab.point_of({PointLabel::kAffine, 0, h}));
  for (int k : e13) out.push_back(lab.point_of({PointLabel::kAffine, 1, k}));
  out.push_back(lab.point_of({PointLabel::kVertex, 0, 0}));    // e0 -> zhat
  return out;
}

void require_closed(const std::vector<int>& s, const Quasigroup& op, int offset) {
  std::set<int> in(s.begin(), s.end());
  for (int x : s)
    for (int y : s)
      if (!in.count(op.at(x - offset, y - offset) + offset))
        throw std::invalid_argument("subset is not closed under the target operation");
}

}  // namespace

std::vector<int> embed_frame_lines(const std::vector<int>& s, const PlaneLabels& lab) {
  if (!lab.ring) throw std::invalid_argument("labels carry no ternary ring");
  require_closed(s, multiplicative_quasigroup(*lab.ring), 1);
  return frame_line_images(s, s, s, lab);
}

std::vector<int> embed_frame_points(const std::vector<int>& s, const PlaneLabels& lab) {
  if (!lab.ring) throw std::invalid_argument("labels carry no ternary ring");
  require_closed(s, opposite(diamond(*lab.ring)), 1);
  return frame_point_images(s, s, s, lab);
}

std::vector<int> embed_lift_points(const std::vector<int>& s, const PlaneLabels& lab) {
  if (!lab.ring) throw std::invalid_argument("labels carry no ternary ring");
  require_closed(s, additive_loop(*lab.ring).q, 0);
  return lift_point_images(s, s, s, lab);
}

namespace {

// Shared sweep state for one decide_* call.
struct DecideContext {
  EmbedMode mode;
  const Quasigroup* q;
  const Plane* plane;
  Plane dual;            // built for kFrameLines verification
  Loop normalized;       // principal loop isotope of q at 0
  Isotopism normalization;
  Matroid3 matroid;      // the mode's matroid of the q-expansion
  bool all = false;
};

// The target loop of a coordinatization, in ring elements.
// Returns false when the mode's target has no identity (no subloop exists).
bool target_loop(EmbedMode mode, const TernaryRing& ring, Loop& out, int& offset) {
  switch (mode) {
    case EmbedMode::kFrameLines: {
      out = multiplicative_loop(ring);
      offset = 1;
      return true;
    }
    case EmbedMode::kFramePoints: {
      Quasigroup opp = opposite(diamond(ring));
      std::optional<int> e = find_identity(opp);
      if (!e) return false;
      out = Loop(std::move(opp), *e);
      offset = 1;
      return true;
    }
    default: {
      out = additive_loop(ring);
      offset = 0;
      return true;
    }
  }
}

std::optional<EmbeddingWitness> witness_from_mono(const DecideContext& ctx,
                                                  const Quadrangle& quad,
                                                  const Coordinatization& coord,
                                                  const std::vector<int>& phi, int offset) {
  const Quasigroup& q = *ctx.q;
  int n = q.n;
  // Per-fiber ring elements: fiber 12 edge g uses phi(alpha(g)), fiber 23
  // edge h uses phi(beta(h)), fiber 13 edge k uses phi(k) (gamma = id).
  std::vector<int> e12(n), e23(n), e13(n);
  for (int g = 0; g < n; ++g) e12[g] = phi[ctx.normalization.alpha[g]] + offset;
  for (int h = 0; h < n; ++h) e23[h] = phi[ctx.normalization.beta[h]] + offset;
  for (int k = 0; k < n; ++k) e13[k] = phi[k] + offset;

  EmbeddingWitness w;
  w.mode = ctx.mode;
  w.quadrangle = quad;
  w.ring = coord.ring;
  w.normalization = ctx.normalization;
  w.monomorphism.resize(n);
  for (int i = 0; i < n; ++i) w.monomorphism[i] = phi[i] + offset;

  switch (ctx.mode) {
    case EmbedMode::kFrameLines:
      w.element_to_target = frame_line_images(e12, e23, e13, coord.labels);
      w.verified = is_representation(ctx.matroid, ctx.dual, w.element_to_target);
      break;
    case EmbedMode::kFramePoints:
      w.element_to_target = frame_point_images(e12, e23, e13, coord.labels);
      w.verified = is_representation(ctx.matroid, *ctx.plane, w.element_to_target);
      break;
    default:
      w.element_to_target = lift_point_images(e12, e23, e13, coord.labels);
      w.verified = is_representation(ctx.matroid, *ctx.plane, w.element_to_target);
      break;
  }
  if (!w.verified)
    throw std::logic_error("embedding witness failed the representation check");
  return w;
}

// Sweep all quadrangles with fixed u, in (v,o,e) order; append witnesses.
// Returns true if a witness was found and the sweep may stop (not all mode).
bool sweep_u(const DecideContext& ctx, int u, std::vector<EmbeddingWitness>& found,
             long long& tried) {
  const Plane& plane = *ctx.plane;
  int np = plane.n_points;
  CoordinatizeWorkspace ws;
  for (int v = 0; v < np; ++v) {
    if (v == u) continue;
    int uv = plane.join(u, v);
    for (int o = 0; o < np; ++o) {
      if (o == u || o == v || plane.on(uv, o)) continue;
      int uo = plane.join(u, o), vo = plane.join(v, o);
      for (int e = 0; e < np; ++e) {
        if (e == u || e == v || e == o) continue;
        if (plane.on(uv, e) || plane.on(uo, e) || plane.on(vo, e)) continue;
        Quadrangle quad{u, v, o, e};
        ++tried;
        Coordinatization coord = ternary_from_quadrangle(plane, quad, ws);
        Loop target;
        int offset = 0;
        if (!target_loop(ctx.mode, coord.ring, target, offset)) continue;
        if (ctx.normalized.n() > target.n()) continue;
        auto monos = find_subloop_monomorphisms(ctx.normalized, target);
        for (const auto& phi : monos) {
          auto w = witness_from_mono(ctx, quad, coord, phi, offset);
          found.push_back(std::move(*w));
          if (!ctx.all) return true;
        }
      }
    }
  }
  return false;
}

DecideOutcome run_decide(EmbedMode mode, const Quasigroup& q, const Plane& plane,
                         const DecideOptions& opt) {
  DecideContext ctx;
  ctx.mode = mode;
  ctx.q = &q;
  ctx.plane = &plane;
  ctx.all = opt.all_witnesses;
  PrincipalLoopIsotope pli = principal_loop_isotope(q, 0);
  ctx.normalized = pli.loop;
  ctx.normalization = pli.iso;
  BiasedGraph3 expansion = expansion_from_quasigroup(q);
  if (mode == EmbedMode::kLiftPoints) {
    ctx.matroid = lift_matroid(expansion, true);
  } else {
    ctx.matroid = frame_matroid(expansion, true);
    if (mode == EmbedMode::kFrameLines) ctx.dual = dual_plane(plane);
  }

  DecideOutcome outcome;
  int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    std::vector<EmbeddingWitness> found;
    for (int u = 0; u < plane.n_points; ++u) {
      bool stop = sweep_u(ctx, u, found, outcome.quadrangles_swept);
      if (stop) break;
    }
    if (!found.empty()) outcome.witness = found.front();
    if (ctx.all) outcome.all_witnesses = std::move(found);
    return outcome;
  }

  // Parallel over u; merged in u order so first-witness semantics is by
  // quadrangle index, not completion order.
  int np = plane.n_points;
  std::vector<std::vector<EmbeddingWitness>> per_u(np);
  std::vector<long long> tried(np, 0);
  std::atomic<int> next_u{0};
  std::atomic<int> stop_after{np};  // us beyond this need no work (first-witness mode)
  auto worker = [&]() {
    while (true) {
      int u = next_u.fetch_add(1);
      if (u >= np) return;
      if (!ctx.all && u > stop_after.load()) continue;
      bool found_here = sweep_u(ctx, u, per_u[u], tried[u]);
      if (found_here && !ctx.all) {
        int cur = stop_after.load();
        while (u < cur && !stop_after.compare_exchange_weak(cur, u)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (int u = 0; u < np; ++u) {
    outcome.quadrangles_swept += tried[u];
    for (auto& w : per_u[u]) {
      if (!outcome.witness) outcome.witness = w;
      if (ctx.all) outcome.all_witnesses.push_back(std::move(w));
    }
    if (outcome.witness && !ctx.all) break;
  }
  return outcome;
}

}  // namespace

DecideOutcome decide_frame(const Quasigroup& q, const Plane& plane, const DecideOptions& opt) {
  return run_decide(EmbedMode::kFrameLines, q, plane, opt);
}

DecideOutcome decide_frame_points(const Quasigroup& q, const Plane& plane,
                                  const DecideOptions& opt) {
  return run_decide(EmbedMode::kFramePoints, q, plane, opt);
}

DecideOutcome decide_lift(const Quasigroup& q, const Plane& plane, const DecideOptions& opt) {
  return run_decide(EmbedMode::kLiftPoints, q, plane, opt);
}

PlanarityReport decide_planar(const Quasigroup& q, const Plane& plane, const DecideOptions& opt) {
  PlanarityReport rep;
  rep.trivial = q.n == 1;
  rep.lift_points = decide_lift(q, plane, opt);
  rep.frame_points = decide_frame_points(q, plane, opt);
  rep.frame_lines = decide_frame(q, plane, opt);
  return rep;
}

AffineNetCoordinates coordinatize_affine_net(const Plane& plane, const EmbeddedNet& net) {
  // Pencil centers.
  std::array<int, 3> center{-1, -1, -1};
  for (int pencil = 0; pencil < 3; ++pencil) {
    const auto& lines = net.pencils[pencil];
    if (lines.empty()) throw std::invalid_argument("empty pencil");
    for (int l : lines)
      if (l < 0 || l >= plane.n_lines_cache) throw std::invalid_argument("bad line index");
    if (lines.size() >= 2) {
      center[pencil] = plane.meet(lines[0], lines[1]);
      for (size_t i = 2; i < lines.size(); ++i)
        if (!plane.on(lines[i], center[pencil]))
          throw std::invalid_argument("pencil lines are not concurrent");
    }
  }
  // Single-line pencils: the center must be chosen on the common line of the
  // other centers; with fewer than two determined centers the net is too
  // degenerate to anchor.
  int determined = (center[0] >= 0) + (center[1] >= 0) + (center[2] >= 0);
  if (determined < 2)
    throw std::invalid_argument("net too small to determine its centers");
  {
    std::array<int, 2> known{};
    int kn = 0;
    for (int pencil = 0; pencil < 3; ++pencil)
      if (center[pencil] >= 0 && kn < 2) known[kn++] = center[pencil];
    if (known[0] == known[1]) throw std::invalid_argument("pencil centers coincide");
    int axis = plane.join(known[0], known[1]);
    for (int pencil = 0; pencil < 3; ++pencil) {
      if (center[pencil] < 0) {
        center[pencil] = plane.meet(net.pencils[pencil][0], axis);
      } else if (!plane.on(axis, center[pencil])) {
        throw std::invalid_argument("centers are not collinear");
      }
    }
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        if (center[a] == center[b]) throw std::invalid_argument("pencil centers coincide");
  }

  // Net points: meets of pencil-12 and pencil-23 lines; each must lie on
  // exactly one line of every pencil.
  Quasigroup netq;
  int n12 = static_cast<int>(net.pencils[0].size());
  int n23 = static_cast<int>(net.pencils[1].size());
  int n13 = static_cast<int>(net.pencils[2].size());
  if (n12 != n23 || n23 != n13) throw std::invalid_argument("pencils differ in size");
  netq.n = n12;
  netq.table.assign(n12 * n12, -1);
  for (int i = 0; i < n12; ++i)
    for (int j = 0; j < n23; ++j) {
      int pt = plane.meet(net.pencils[0][i], net.pencils[1][j]);
      int hit = -1;
      for (int k = 0; k < n13; ++k)
        if (plane.on(net.pencils[2][k], pt)) {
          if (hit >= 0) throw std::invalid_argument("net point on two lines of one pencil");
          hit = k;
        }
      if (hit < 0) throw std::invalid_argument("net is not closed: missing third line");
      netq.at(i, j) = hit;
    }
  if (!is_latin(
          [&] {
            std::vector<std::vector<int>> rows(netq.n, std::vector<int>(netq.n));
            for (int i = 0; i < netq.n; ++i)
              for (int j = 0; j < netq.n; ++j) rows[i][j] = netq.at(i, j);
            return rows;
          }()))
    throw std::invalid_argument("net incidence is not a quasigroup");

  // The quadrangle of the construction: v is the center for pencil 12, u the
  // center for pencil 23; o and e sit on one pencil-13 line through the
  // remaining center.
  int u = center[1], v = center[0];
  int ell = net.pencils[2][0];
  int o = -1, e = -1;
  for (int i = 0; i < n12 && (o < 0 || e < 0); ++i)
    for (int j = 0; j < n23 && (o < 0 || e < 0); ++j) {
      if (netq.at(i, j) != 0) continue;
      int pt = plane.meet(net.pencils[0][i], net.pencils[1][j]);
      if (o < 0) o = pt;
      else if (pt != o) e = pt;
    }
  if (o < 0) throw std::invalid_argument("pencil-13 line carries no net point");
  if (e < 0) {
    // Single net point on the line: any other point off the axis will do.
    for (int pt : plane.lines[ell]) {
      if (pt == o || pt == center[2]) continue;
      e = pt;
      break;
    }
  }
  Quadrangle quad{u, v, o, e};
  Coordinatization coord = ternary_from_quadrangle(plane, quad);

  AffineNetCoordinates out;
  out.ring = coord.ring;
  out.quadrangle = quad;
  // Pencil 12 lines are verticals <g>; pencil 23 lines are <0,h>; pencil 13
  // lines are <1,k>.
  for (int i = 0; i < n12; ++i) {
    const LineLabel& ll = coord.labels.line_labels[net.pencils[0][i]];
    if (ll.kind != LineLabel::kVertical)
      throw std::invalid_argument("pencil-12 line did not coordinatize as a vertical");
    out.line_elements[0].push_back(ll.m);
  }
  for (int j = 0; j < n23; ++j) {
    const LineLabel& ll = coord.labels.line_labels[net.pencils[1][j]];
    if (ll.kind != LineLabel::kSlope || ll.m != 0)
      throw std::invalid_argument("pencil-23 line did not coordinatize with slope 0");
    out.line_elements[1].push_back(ll.k);
  }
  for (int k = 0; k < n13; ++k) {
    const LineLabel& ll = coord.labels.line_labels[net.pencils[2][k]];
    if (ll.kind != LineLabel::kSlope || ll.m != 1)
      throw std::invalid_argument("pencil-13 line did not coordinatize with slope 1");
    out.line_elements[2].push_back(ll.k);
  }
  // The three element sets agree and are closed under the dual addition
  // x +* y = t*(1,x,y), i.e. the d with t(x,1,d) = y.
  std::set<int> s0(out.line_elements[0].begin(), out.line_elements[0].end());
  std::set<int> s1(out.line_elements[1].begin(), out.line_elements[1].end());
  std::set<int> s2(out.line_elements[2].begin(), out.line_elements[2].end());
  if (s0 != s1 || s1 != s2)
    throw std::invalid_argument("net labels disagree across pencils");
  out.subloop.assign(s0.begin(), s0.end());
  auto dual_add = [&](int x, int y) {
    for (int d = 0; d < out.ring.n; ++d)
      if (out.ring.op(x, 1, d) == y) return d;
    throw std::logic_error("dual addition undefined");
  };
  for (int x : out.subloop)
    for (int y : out.subloop)
      if (!s0.count(dual_add(x, y)))
        throw std::invalid_argument("net labels are not closed under dual addition");
  out.net_quasigroup = netq;
  // The labeling carries the net quasigroup onto the dual addition.
  for (int i = 0; i < netq.n; ++i)
    for (int j = 0; j < netq.n; ++j) {
      int expect = out.line_elements[2][netq.at(i, j)];
      if (dual_add(out.line_elements[0][i], out.line_elements[1][j]) != expect)
        throw std::logic_error("net labels do not realize the dual addition");
    }
  // Dual addition restricted to the subloop, positions as indices; its
  // principal isotope at the position of ring element 0 is a genuine loop.
  {
    int m = static_cast<int>(out.subloop.size());
    std::map<int, int> pos;
    for (int i = 0; i < m; ++i) pos[out.subloop[i]] = i;
    Quasigroup rsub;
    rsub.n = m;
    rsub.table.assign(m * m, -1);
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        rsub.at(x, y) = pos.at(dual_add(out.subloop[x], out.subloop[y]));
    out.dual_addition = rsub;
    out.normalized = principal_loop_isotope(rsub, pos.at(0)).loop;
  }
  return out;
}

CrossClosedOutcome cross_closed_subloop(const Plane& plane, const EmbeddedDualNet& net,
                                        const std::vector<int>& subset) {
  CrossClosedOutcome out;
  // Index net points and check the big net is a dual net (closed).
  std::array<std::map<int, int>, 3> index;  // point -> position on its main line
  for (int main = 0; main < 3; ++main) {
    if (net.main_lines[main] < 0 || net.main_lines[main] >= plane.n_lines_cache)
      throw std::invalid_argument("bad main line");
    for (size_t i = 0; i < net.points[main].size(); ++i) {
      int pt = net.points[main][i];
      if (!plane.on(net.main_lines[main], pt))
        throw std::invalid_argument("net point not on its main line");
      index[main][pt] = static_cast<int>(i);
    }
  }
  int n = static_cast<int>(net.points[0].size());
  if (static_cast<int>(net.points[1].size()) != n ||
      static_cast<int>(net.points[2].size()) != n || n == 0)
    throw std::invalid_argument("main lines carry different point counts");
  Quasigroup netq;
  netq.n = n;
  netq.table.assign(n * n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int cross = plane.join(net.points[0][i], net.points[1][j]);
      int third = plane.meet(cross, net.main_lines[2]);
      auto it = index[2].find(third);
      if (it == index[2].end())
        throw std::invalid_argument("cross-line misses the third main line's net points");
      netq.at(i, j) = it->second;
    }

  // Locate the subset on the main lines.
  std::array<std::set<int>, 3> chosen;  // positions per main line
  for (int pt : subset) {
    bool placed = false;
    for (int main = 0; main < 3 && !placed; ++main) {
      auto it = index[main].find(pt);
      if (it != index[main].end()) {
        chosen[main].insert(it->second);
        placed = true;
      }
    }
    if (!placed) throw std::invalid_argument("subset point is not a net point");
  }

  if (chosen[0].empty() || chosen[1].empty() || chosen[2].empty()) {
    out.reason = "subset does not touch all three main lines";
    return out;
  }
  // Cross-closure: both-of-two forces the third, for each main-line pair.
  for (int i : chosen[0])
    for (int j : chosen[1])
      if (!chosen[2].count(netq.at(i, j))) {
        out.reason = "not cross-closed: completion of a 12/23 pair is missing";
        return out;
      }
  for (int i : chosen[0])
    for (int k : chosen[2])
      if (!chosen[1].count(netq.ldiv(i, k))) {
        out.reason = "not cross-closed: completion of a 12/13 pair is missing";
        return out;
      }
  for (int j : chosen[1])
    for (int k : chosen[2])
      if (!chosen[0].count(netq.rdiv(k, j))) {
        out.reason = "not cross-closed: completion of a 23/13 pair is missing";
        return out;
      }

  // The sub-expansion on the chosen fibers.
  std::array<std::vector<int>, 3> fibers;
  for (int main = 0; main < 3; ++main)
    fibers[main].assign(chosen[main].begin(), chosen[main].end());
  int m = static_cast<int>(fibers[0].size());
  if (static_cast<int>(fibers[1].size()) != m || static_cast<int>(fibers[2].size()) != m) {
    out.reason = "fibers have unequal sizes";
    return out;
  }
  std::array<std::map<int, int>, 3> reindex;
  for (int main = 0; main < 3; ++main)
    for (int i = 0; i < m; ++i) reindex[main][fibers[main][i]] = i;
  out.sub_expansion.fiber_sizes = {m, m, m};
  for (int i : chosen[0])
    for (int j : chosen[1])
      out.sub_expansion.balanced_triangles.insert(
          {reindex[0][i], reindex[1][j], reindex[2][netq.at(i, j)]});

  // Subloop of the principal isotope at (a,b) = first chosen pair.
  int a = fibers[0][0], b = fibers[1][0];
  Quasigroup iso;
  iso.n = n;
  iso.table.assign(n * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) iso.at(x, y) = netq.mul(netq.rdiv(x, b), netq.ldiv(a, y));
  // Restrict to the chosen 13-fiber.
  Quasigroup sub;
  sub.n = m;
  sub.table.assign(m * m, -1);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      int v = iso.at(fibers[2][x], fibers[2][y]);
      auto it = reindex[2].find(v);
      if (it == reindex[2].end()) {
        out.reason = "selection is not closed in the principal isotope";
        return out;
      }
      sub.at(x, y) = it->second;
    }
  out.subloop = Loop(sub, reindex[2][netq.mul(a, b)]);
  out.subloop_elements = fibers[2];
  out.present = true;
  return out;
}

}  // namespace trinet

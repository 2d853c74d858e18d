#include "trinet/plane.hpp"

#include <algorithm>
#include <stdexcept>

namespace trinet {

int PlaneLabels::point_of(const PointLabel& l) const {
  switch (l.kind) {
    case PointLabel::kAffine:
      return affine_point[l.x * order + l.y];
    case PointLabel::kIdeal:
      return ideal_point[l.x];
    default:
      return vertex_point;
  }
}

int PlaneLabels::line_of(const LineLabel& l) const {
  switch (l.kind) {
    case LineLabel::kSlope:
      return slope_line[l.m * order + l.k];
    case LineLabel::kVertical:
      return vertical_line[l.m];
    default:
      return ideal_line;
  }
}

PlaneAxiomReport verify_plane_axioms(int n_points, const std::vector<std::vector<int>>& lines) {
  PlaneAxiomReport rep;
  int n_lines = static_cast<int>(lines.size());
  for (const auto& line : lines)
    for (int p : line)
      if (p < 0 || p >= n_points) throw std::invalid_argument("line references a bad point");

  std::vector<char> inc(static_cast<size_t>(n_lines) * n_points, 0);
  for (int l = 0; l < n_lines; ++l)
    for (int p : lines[l]) inc[static_cast<size_t>(l) * n_points + p] = 1;

  for (int p1 = 0; p1 < n_points && rep.two_points_one_line.ok; ++p1)
    for (int p2 = p1 + 1; p2 < n_points && rep.two_points_one_line.ok; ++p2) {
      int count = 0;
      for (int l = 0; l < n_lines; ++l)
        if (inc[static_cast<size_t>(l) * n_points + p1] &&
            inc[static_cast<size_t>(l) * n_points + p2])
          ++count;
      if (count != 1) {
        rep.two_points_one_line.ok = false;
        rep.two_points_one_line.detail = "points " + std::to_string(p1) + "," +
                                         std::to_string(p2) + " lie on " +
                                         std::to_string(count) + " common lines";
      }
    }

  for (int l1 = 0; l1 < n_lines && rep.two_lines_one_point.ok; ++l1)
    for (int l2 = l1 + 1; l2 < n_lines && rep.two_lines_one_point.ok; ++l2) {
      int count = 0;
      for (int p = 0; p < n_points; ++p)
        if (inc[static_cast<size_t>(l1) * n_points + p] &&
            inc[static_cast<size_t>(l2) * n_points + p])
          ++count;
      if (count != 1) {
        rep.two_lines_one_point.ok = false;
        rep.two_lines_one_point.detail = "lines " + std::to_string(l1) + "," +
                                         std::to_string(l2) + " meet in " +
                                         std::to_string(count) + " points";
      }
    }

  // A quadrangle: brute force is fine at desk scale, and only needs to
  // succeed once.
  if (rep.two_points_one_line.ok) {
    auto collinear3 = [&](int a, int b, int c) {
      for (int l = 0; l < n_lines; ++l)
        if (inc[static_cast<size_t>(l) * n_points + a] &&
            inc[static_cast<size_t>(l) * n_points + b] &&
            inc[static_cast<size_t>(l) * n_points + c])
          return true;
      return false;
    };
    bool found = false;
    for (int a = 0; a < n_points && !found; ++a)
      for (int b = a + 1; b < n_points && !found; ++b)
        for (int c = b + 1; c < n_points && !found; ++c) {
          if (collinear3(a, b, c)) continue;
          for (int d = c + 1; d < n_points && !found; ++d)
            if (!collinear3(a, b, d) && !collinear3(a, c, d) && !collinear3(b, c, d))
              found = true;
        }
    rep.quadrangle_exists.ok = found;
    if (!found) rep.quadrangle_exists.detail = "no four points in general position";
  } else {
    rep.quadrangle_exists.ok = false;
    rep.quadrangle_exists.detail = "skipped: incidence axioms fail";
  }

  if (n_lines == 0 || lines[0].empty()) {
    rep.uniform.ok = false;
    rep.uniform.detail = "no lines";
  } else {
    int n = static_cast<int>(lines[0].size()) - 1;
    for (const auto& line : lines)
      if (static_cast<int>(line.size()) != n + 1) {
        rep.uniform.ok = false;
        rep.uniform.detail = "line sizes differ";
        break;
      }
    if (rep.uniform.ok && (n_points != n * n + n + 1 || n_lines != n * n + n + 1)) {
      rep.uniform.ok = false;
      rep.uniform.detail = "counts are not n^2+n+1";
    }
  }
  return rep;
}

Plane make_plane(int n_points, std::vector<std::vector<int>> lines) {
  PlaneAxiomReport rep = verify_plane_axioms(n_points, lines);
  if (!rep.all()) {
    std::string why = rep.two_points_one_line.ok ? "" : rep.two_points_one_line.detail;
    if (why.empty()) why = rep.two_lines_one_point.ok ? "" : rep.two_lines_one_point.detail;
    if (why.empty()) why = rep.quadrangle_exists.ok ? "" : rep.quadrangle_exists.detail;
    if (why.empty()) why = rep.uniform.detail;
    throw std::invalid_argument("not a projective plane: " + why);
  }
  Plane plane;
  plane.n_points = n_points;
  for (auto& l : lines) std::sort(l.begin(), l.end());
  plane.lines = std::move(lines);
  plane.n_lines_cache = plane.n_lines();
  plane.order = static_cast<int>(plane.lines[0].size()) - 1;

  int nl = plane.n_lines_cache;
  plane.lines_of_point.assign(n_points, {});
  plane.incidence.assign(static_cast<size_t>(nl) * n_points, 0);
  for (int l = 0; l < nl; ++l)
    for (int p : plane.lines[l]) {
      plane.lines_of_point[p].push_back(l);
      plane.incidence[static_cast<size_t>(l) * n_points + p] = 1;
    }
  plane.join_table.assign(static_cast<size_t>(n_points) * n_points, -1);
  for (int l = 0; l < nl; ++l)
    for (int a : plane.lines[l])
      for (int b : plane.lines[l])
        if (a != b) plane.join_table[static_cast<size_t>(a) * n_points + b] = l;
  plane.meet_table.assign(static_cast<size_t>(nl) * nl, -1);
  for (int p = 0; p < n_points; ++p)
    for (int l1 : plane.lines_of_point[p])
      for (int l2 : plane.lines_of_point[p])
        if (l1 != l2) plane.meet_table[static_cast<size_t>(l1) * nl + l2] = p;
  return plane;
}

Plane plane_from_ternary(const TernaryRing& ring) {
  // T1-T3 are what planehood needs; T4 only normalizes the constants.  Duals
  // of valid rings satisfy T1-T3 but can park the multiplicative unit away
  // from element 1, and their planes are still wanted here.
  if (ring.n < 2) throw std::invalid_argument("plane needs ring order >= 2");
  AxiomReport ax = verify_axioms(ring);
  if (!(ax.t1 && ax.t2 && ax.t3))
    throw std::invalid_argument("ternary ring fails axioms: " + ax.counterexample);
  int n = ring.n;
  int n_points = n * n + n + 1;
  auto affine = [n](int x, int y) { return x * n + y; };
  auto ideal = [n](int m) { return n * n + m; };
  int vertex = n * n + n;

  std::vector<std::vector<int>> lines;
  lines.reserve(n_points);
  // <m,k> with index m*n+k: affine points [x, t(x,m,k)] plus [m].
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k) {
      std::vector<int> line;
      line.reserve(n + 1);
      for (int x = 0; x < n; ++x) line.push_back(affine(x, ring.op(x, m, k)));
      line.push_back(ideal(m));
      lines.push_back(std::move(line));
    }
  // <a> with index n^2+a: [a,y] plus the vertex.
  for (int a = 0; a < n; ++a) {
    std::vector<int> line;
    line.reserve(n + 1);
    for (int y = 0; y < n; ++y) line.push_back(affine(a, y));
    line.push_back(vertex);
    lines.push_back(std::move(line));
  }
  // Ideal line: all [m] plus the vertex.
  {
    std::vector<int> line;
    line.reserve(n + 1);
    for (int m = 0; m < n; ++m) line.push_back(ideal(m));
    line.push_back(vertex);
    lines.push_back(std::move(line));
  }

  Plane plane = make_plane(n_points, std::move(lines));

  PlaneLabels labels;
  labels.order = n;
  labels.point_labels.resize(n_points);
  labels.line_labels.resize(n_points);
  labels.affine_point.assign(n * n, -1);
  labels.ideal_point.assign(n, -1);
  labels.slope_line.assign(n * n, -1);
  labels.vertical_line.assign(n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      labels.point_labels[affine(x, y)] = PointLabel{PointLabel::kAffine, x, y};
      labels.affine_point[x * n + y] = affine(x, y);
    }
  for (int m = 0; m < n; ++m) {
    labels.point_labels[ideal(m)] = PointLabel{PointLabel::kIdeal, m, 0};
    labels.ideal_point[m] = ideal(m);
  }
  labels.point_labels[vertex] = PointLabel{PointLabel::kVertex, 0, 0};
  labels.vertex_point = vertex;
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k) {
      labels.line_labels[m * n + k] = LineLabel{LineLabel::kSlope, m, k};
      labels.slope_line[m * n + k] = m * n + k;
    }
  for (int a = 0; a < n; ++a) {
    labels.line_labels[n * n + a] = LineLabel{LineLabel::kVertical, a, 0};
    labels.vertical_line[a] = n * n + a;
  }
  labels.line_labels[n * n + n] = LineLabel{LineLabel::kIdealLine, 0, 0};
  labels.ideal_line = n * n + n;
  labels.ring = ring;
  plane.labels = std::move(labels);
  return plane;
}

namespace {

// The coordinate collinearity criterion covers triples {[m], [0,w], [x,y]}:
// collinear iff t(x,m,w) = y.  Cross-checked when labels carry a ring.
void cross_check_collinear(const Plane& plane, const std::vector<int>& pts, bool incidence_says) {
  if (!plane.labels || !plane.labels->ring || pts.size() != 3) return;
  const PlaneLabels& lab = *plane.labels;
  int ideal = -1;
  std::array<int, 2> aff{-1, -1};
  int na = 0;
  for (int p : pts) {
    const PointLabel& l = lab.point_labels[p];
    if (l.kind == PointLabel::kIdeal) {
      if (ideal >= 0) return;
      ideal = p;
    } else if (l.kind == PointLabel::kAffine) {
      if (na == 2) return;
      aff[na++] = p;
    } else {
      return;
    }
  }
  if (ideal < 0 || na != 2) return;
  for (int pass = 0; pass < 2; ++pass) {
    const PointLabel& zero = lab.point_labels[aff[pass]];
    const PointLabel& other = lab.point_labels[aff[1 - pass]];
    if (zero.x != 0) continue;
    int m = lab.point_labels[ideal].x;
    bool criterion = lab.ring->op(other.x, m, zero.y) == other.y;
    if (criterion != incidence_says)
      throw std::logic_error("coordinate collinearity criterion disagrees with incidence");
    return;
  }
}

// Concurrence criterion for {<g>, <h,0>, <0,k>}: concurrent iff t(g,h,0) = k.
void cross_check_concurrent(const Plane& plane, const std::vector<int>& lns, bool incidence_says) {
  if (!plane.labels || !plane.labels->ring || lns.size() != 3) return;
  const PlaneLabels& lab = *plane.labels;
  int vertical = -1;
  std::array<int, 2> slopes{-1, -1};
  int ns = 0;
  for (int l : lns) {
    const LineLabel& ll = lab.line_labels[l];
    if (ll.kind == LineLabel::kVertical) {
      if (vertical >= 0) return;
      vertical = l;
    } else if (ll.kind == LineLabel::kSlope) {
      if (ns == 2) return;
      slopes[ns++] = l;
    } else {
      return;
    }
  }
  if (vertical < 0 || ns != 2) return;
  for (int pass = 0; pass < 2; ++pass) {
    const LineLabel& through_o = lab.line_labels[slopes[pass]];
    const LineLabel& flat = lab.line_labels[slopes[1 - pass]];
    if (through_o.k != 0 || flat.m != 0) continue;
    int g = lab.line_labels[vertical].m;
    bool criterion = lab.ring->op(g, through_o.m, 0) == flat.k;
    if (criterion != incidence_says)
      throw std::logic_error("coordinate concurrence criterion disagrees with incidence");
    return;
  }
}

}  // namespace

bool collinear(const Plane& plane, const std::vector<int>& points) {
  for (int p : points)
    if (p < 0 || p >= plane.n_points) throw std::invalid_argument("point index out of range");
  bool answer = true;
  if (points.size() >= 3) {
    int base = -1;
    for (size_t i = 1; i < points.size() && answer; ++i) {
      if (points[i] == points[0]) continue;
      if (base < 0) base = plane.join(points[0], points[i]);
      else if (!plane.on(base, points[i])) answer = false;
    }
  }
  cross_check_collinear(plane, points, answer);
  return answer;
}

bool concurrent(const Plane& plane, const std::vector<int>& lines) {
  for (int l : lines)
    if (l < 0 || l >= plane.n_lines_cache)
      throw std::invalid_argument("line index out of range");
  bool answer = true;
  if (lines.size() >= 3) {
    int base = -1;
    for (size_t i = 1; i < lines.size() && answer; ++i) {
      if (lines[i] == lines[0]) continue;
      if (base < 0) base = plane.meet(lines[0], lines[i]);
      else if (!plane.on(lines[i], base)) answer = false;
    }
  }
  cross_check_concurrent(plane, lines, answer);
  return answer;
}

Plane dual_plane(const Plane& plane) {
  int np = plane.n_lines_cache, nl = plane.n_points;
  std::vector<std::vector<int>> dual_lines(nl);
  for (int l = 0; l < np; ++l)
    for (int p : plane.lines[l]) dual_lines[p].push_back(l);
  Plane out = make_plane(np, std::move(dual_lines));
  if (plane.labels) {
    const PlaneLabels& in = *plane.labels;
    PlaneLabels lab;
    int n = in.order;
    lab.order = n;
    lab.point_labels.resize(np);
    lab.line_labels.resize(np);
    lab.affine_point.assign(n * n, -1);
    lab.ideal_point.assign(n, -1);
    lab.slope_line.assign(n * n, -1);
    lab.vertical_line.assign(n, -1);
    for (int l = 0; l < np; ++l) {
      const LineLabel& ll = in.line_labels[l];
      if (ll.kind == LineLabel::kSlope) {
        lab.point_labels[l] = PointLabel{PointLabel::kAffine, ll.m, ll.k};
        lab.affine_point[ll.m * n + ll.k] = l;
      } else if (ll.kind == LineLabel::kVertical) {
        lab.point_labels[l] = PointLabel{PointLabel::kIdeal, ll.m, 0};
        lab.ideal_point[ll.m] = l;
      } else {
        lab.point_labels[l] = PointLabel{PointLabel::kVertex, 0, 0};
        lab.vertex_point = l;
      }
    }
    for (int p = 0; p < nl; ++p) {
      const PointLabel& pl = in.point_labels[p];
      if (pl.kind == PointLabel::kAffine) {
        lab.line_labels[p] = LineLabel{LineLabel::kSlope, pl.x, pl.y};
        lab.slope_line[pl.x * n + pl.y] = p;
      } else if (pl.kind == PointLabel::kIdeal) {
        lab.line_labels[p] = LineLabel{LineLabel::kVertical, pl.x, 0};
        lab.vertical_line[pl.x] = p;
      } else {
        lab.line_labels[p] = LineLabel{LineLabel::kIdealLine, 0, 0};
        lab.ideal_line = p;
      }
    }
    if (in.ring) lab.ring = dual(*in.ring);
    out.labels = std::move(lab);
  }
  return out;
}

bool quadrangle_valid(const Plane& plane, const Quadrangle& q) {
  std::array<int, 4> pts{q.u, q.v, q.o, q.e};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (pts[i] == pts[j]) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        if (plane.on(plane.join(pts[i], pts[j]), pts[k])) return false;
  return true;
}

QuadrangleEnumerator::QuadrangleEnumerator(const Plane& plane)
    : plane_(plane), u_(0), v_(0), o_(0), e_(-1) {}

bool QuadrangleEnumerator::advance() {
  int n = plane_.n_points;
  while (true) {
    ++e_;
    if (e_ >= n) {
      e_ = 0;
      ++o_;
      if (o_ >= n) {
        o_ = 0;
        ++v_;
        if (v_ >= n) {
          v_ = 0;
          ++u_;
          if (u_ >= n) return false;
        }
      }
    }
    if (v_ == u_ || o_ == u_ || o_ == v_ || e_ == u_ || e_ == v_ || e_ == o_) continue;
    if (plane_.on(plane_.join(u_, v_), o_)) {
      // No o on line uv works; skip the rest of the e loop.
      e_ = n - 1;
      continue;
    }
    if (plane_.on(plane_.join(u_, v_), e_) || plane_.on(plane_.join(u_, o_), e_) ||
        plane_.on(plane_.join(v_, o_), e_))
      continue;
    return true;
  }
}

bool QuadrangleEnumerator::next(Quadrangle& out) {
  if (!advance()) return false;
  out = Quadrangle{u_, v_, o_, e_};
  return true;
}

std::vector<Quadrangle> all_quadrangles(const Plane& plane) {
  std::vector<Quadrangle> out;
  QuadrangleEnumerator en(plane);
  Quadrangle q;
  while (en.next(q)) out.push_back(q);
  return out;
}

Coordinatization ternary_from_quadrangle(const Plane& plane, const Quadrangle& q) {
  CoordinatizeWorkspace ws;
  return ternary_from_quadrangle(plane, q, ws);
}

Coordinatization ternary_from_quadrangle(const Plane& plane, const Quadrangle& q,
                                         CoordinatizeWorkspace& ws) {
  if (!quadrangle_valid(plane, q))
    throw std::invalid_argument("degenerate quadrangle");
  int n = plane.order;
  int np = plane.n_points;

  int line_uv = plane.join(q.u, q.v);
  int line_oe = plane.join(q.o, q.e);
  int line_ve = plane.join(q.v, q.e);
  int z = plane.meet(line_oe, line_uv);

  // Step 1: labels along oe.  o -> 0, e -> 1, the rest ascending.
  ws.label_of.assign(np, -1);
  ws.label_of[q.o] = 0;
  ws.label_of[q.e] = 1;
  {
    int next = 2;
    for (int p : plane.lines[line_oe]) {
      if (p == z || p == q.o || p == q.e) continue;
      ws.label_of[p] = next++;
    }
    if (next != n) throw std::logic_error("label count mismatch along oe");
  }

  // Step 2: affine coordinates off uv (u and v themselves lie on uv).
  ws.xcoord.assign(np, -1);
  ws.ycoord.assign(np, -1);
  for (int p = 0; p < np; ++p) {
    if (plane.on(line_uv, p)) continue;
    ws.xcoord[p] = ws.label_of[plane.meet(plane.join(q.v, p), line_oe)];
    ws.ycoord[p] = ws.label_of[plane.meet(plane.join(q.u, p), line_oe)];
  }

  // Step 3: slopes on uv minus v.
  ws.slope.assign(np, -1);
  for (int p : plane.lines[line_uv]) {
    if (p == q.v) continue;
    int hit = plane.meet(plane.join(q.o, p), line_ve);
    ws.slope[p] = ws.ycoord[hit];
  }

  Coordinatization out;
  PlaneLabels& lab = out.labels;
  lab.order = n;
  lab.point_labels.resize(np);
  lab.line_labels.assign(plane.n_lines_cache, LineLabel{});
  lab.affine_point.assign(n * n, -1);
  lab.ideal_point.assign(n, -1);
  lab.slope_line.assign(n * n, -1);
  lab.vertical_line.assign(n, -1);

  for (int p = 0; p < np; ++p) {
    if (p == q.v) {
      lab.point_labels[p] = PointLabel{PointLabel::kVertex, 0, 0};
      lab.vertex_point = p;
    } else if (plane.on(line_uv, p)) {
      int m = ws.slope[p];
      lab.point_labels[p] = PointLabel{PointLabel::kIdeal, m, 0};
      if (lab.ideal_point[m] != -1) throw std::logic_error("duplicate slope label");
      lab.ideal_point[m] = p;
    } else {
      int x = ws.xcoord[p], y = ws.ycoord[p];
      lab.point_labels[p] = PointLabel{PointLabel::kAffine, x, y};
      if (lab.affine_point[x * n + y] != -1) throw std::logic_error("duplicate affine label");
      lab.affine_point[x * n + y] = p;
    }
  }

  // Lines: verticals join v with [x,x] on oe; slope lines join [m] and [0,k].
  for (int x = 0; x < n; ++x) {
    int px = lab.affine_point[x * n + x];
    lab.vertical_line[x] = plane.join(q.v, px);
    lab.line_labels[lab.vertical_line[x]] = LineLabel{LineLabel::kVertical, x, 0};
  }
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k) {
      int line = plane.join(lab.ideal_point[m], lab.affine_point[0 * n + k]);
      lab.slope_line[m * n + k] = line;
      lab.line_labels[line] = LineLabel{LineLabel::kSlope, m, k};
    }
  lab.ideal_line = line_uv;
  lab.line_labels[line_uv] = LineLabel{LineLabel::kIdealLine, 0, 0};

  // Step 4: the ternary operation.
  out.ring.n = n;
  out.ring.t.resize(n * n * n);
  for (int x = 0; x < n; ++x) {
    int vx = lab.vertical_line[x];
    for (int m = 0; m < n; ++m)
      for (int k = 0; k < n; ++k) {
        int p = plane.meet(vx, lab.slope_line[m * n + k]);
        out.ring.op_ref(x, m, k) = ws.ycoord[p];
      }
  }
  lab.ring = out.ring;
  return out;
}

namespace {

// Assignment order for the isomorphism search: a quadrangle first, then
// points forced as meets of assigned lines, then whatever is left.
std::vector<int> assignment_order(const Plane& plane) {
  std::vector<int> order;
  std::vector<char> placed(plane.n_points, 0);
  QuadrangleEnumerator en(plane);
  Quadrangle q;
  if (en.next(q)) {
    for (int p : {q.u, q.v, q.o, q.e}) {
      order.push_back(p);
      placed[p] = 1;
    }
  }
  auto assigned_pairs_on = [&](int p) {
    int count = 0;
    for (int l : plane.lines_of_point[p]) {
      int have = 0;
      for (int x : plane.lines[l])
        if (placed[x]) ++have;
      if (have >= 2) ++count;
    }
    return count;
  };
  while (static_cast<int>(order.size()) < plane.n_points) {
    int best = -1, best_score = -1;
    for (int p = 0; p < plane.n_points; ++p) {
      if (placed[p]) continue;
      int score = assigned_pairs_on(p);
      if (score > best_score) {
        best = p;
        best_score = score;
      }
    }
    order.push_back(best);
    placed[best] = 1;
  }
  return order;
}

bool iso_extend(const Plane& lhs, const Plane& rhs, const std::vector<int>& order, size_t pos,
                std::vector<int>& map, std::vector<char>& used) {
  if (pos == order.size()) {
    // Full incidence check: lines map onto lines.
    for (const auto& line : lhs.lines) {
      int img = rhs.join(map[line[0]], map[line[1]]);
      for (int p : line)
        if (!rhs.on(img, map[p])) return false;
    }
    return true;
  }
  int p = order[pos];
  // Candidate images must reproduce collinearity against everything assigned.
  for (int img = 0; img < rhs.n_points; ++img) {
    if (used[img]) continue;
    bool ok = true;
    for (size_t i = 0; i < pos && ok; ++i)
      for (size_t j = i + 1; j < pos && ok; ++j) {
        int a = order[i], b = order[j];
        bool lhs_col = lhs.on(lhs.join(a, b), p);
        bool rhs_col = rhs.on(rhs.join(map[a], map[b]), img);
        if (lhs_col != rhs_col) ok = false;
      }
    if (!ok) continue;
    map[p] = img;
    used[img] = 1;
    if (iso_extend(lhs, rhs, order, pos + 1, map, used)) return true;
    used[img] = 0;
    map[p] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> plane_isomorphic(const Plane& lhs, const Plane& rhs) {
  if (lhs.n_points != rhs.n_points || lhs.order != rhs.order) return std::nullopt;
  if (lhs.n_points == 0) return std::vector<int>{};
  std::vector<int> order = assignment_order(lhs);
  std::vector<int> map(lhs.n_points, -1);
  std::vector<char> used(rhs.n_points, 0);
  if (iso_extend(lhs, rhs, order, 0, map, used)) return map;
  return std::nullopt;
}

}  // namespace trinet

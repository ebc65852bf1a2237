#pragma once

// Combinatorial mutations of Fano polygons with primitive segment factors,
// a GL(2,Z) normal form for deduplication, and breadth-first exploration of
// mutation graphs with singularity content / degree checked at every node.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "singcontent/polygon.hpp"

namespace singcontent {

/// A mutation produced something that contradicts the theory (not Fano, or
/// an invariant changed). Always a bug in this library.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Weight vector h and factor F = conv{0, f} with h(f) == 0.
struct Factor {
  DualVector h;
  LatticePoint f;

  static Factor make(DualVector h, LatticePoint f) {
    if (!is_primitive(h)) throw std::invalid_argument("Factor: h must be primitive");
    if (!is_primitive(f)) throw std::invalid_argument("Factor: f must be primitive");
    if (pairing(h, f) != 0) throw std::invalid_argument("Factor: h(f) must be 0");
    return {std::move(h), std::move(f)};
  }

  /// The factor used for h throughout: f = h rotated by a quarter turn.
  static Factor for_weight(const DualVector& h) { return make(h, {-h.y, h.x}); }

  friend bool operator==(const Factor&, const Factor&) = default;
};

struct MutationStep {
  FanoPolygon source;
  Factor factor;
  FanoPolygon target;
};

/// mut_h(P, F). With heights k = h(x) and positions along f, every slice
/// P_k = [L_k, R_k] becomes [L_k, R_k + k f]: the left chain is kept and the
/// right chain is sheared by x -> x + h(x) f. The mutation exists iff each
/// negative-height slice through a vertex has length at least -k.
inline std::optional<FanoPolygon> mutate(const FanoPolygon& p, const Factor& fac) {
  const auto& verts = p.vertices();
  const std::size_t n = verts.size();
  auto e = extended_gcd(fac.f.x, fac.f.y);
  const DualVector along{e.s, e.t};  // along(f) == 1

  std::vector<Integer> height(n), pos(n);
  for (std::size_t i = 0; i < n; ++i) {
    height[i] = pairing(fac.h, verts[i]);
    pos[i] = pairing(along, verts[i]);
  }

  auto slice = [&](const Integer& k) {
    std::optional<Rational> lo, hi;
    auto add = [&](const Rational& x) {
      if (!lo || x < *lo) lo = x;
      if (!hi || x > *hi) hi = x;
    };
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t j = (i + 1) % n;
      if (height[i] == k) add(Rational(pos[i]));
      if ((height[i] - k) * (height[j] - k) < 0) {
        Rational t = make_rational(k - height[i], height[j] - height[i]);
        add(Rational(pos[i]) + t * Rational(pos[j] - pos[i]));
      }
    }
    return std::make_pair(*lo, *hi);
  };

  std::vector<LatticePoint> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& k = height[i];
    auto [lo, hi] = slice(k);
    if (k < 0 && hi - lo < Rational(-k)) return std::nullopt;
    if (Rational(pos[i]) == lo) candidates.push_back(verts[i]);
    if (Rational(pos[i]) == hi) candidates.push_back(verts[i] + k * fac.f);
  }
  try {
    return FanoPolygon::validate(candidates);
  } catch (const PolygonError& err) {
    throw InvariantViolation(std::string("mutate: result is not a Fano polygon: ") + err.what());
  }
}

/// One factor per edge: h is the primitive inner normal of the edge (so the
/// edge is the minimal face), kept only when the mutation exists.
inline std::vector<MutationStep> candidate_mutations(const FanoPolygon& p) {
  std::vector<MutationStep> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    LatticePoint dir = primitive_direction(p.vertex(i + 1) - p.vertex(i));
    DualVector h{dir.y, -dir.x};
    if (pairing(h, p.vertex(i)) > 0) h = -h;
    Factor fac = Factor::for_weight(h);
    if (auto q = mutate(p, fac)) out.push_back({p, fac, std::move(*q)});
  }
  return out;
}

inline std::vector<Factor> candidate_factors(const FanoPolygon& p) {
  std::vector<Factor> out;
  for (auto& step : candidate_mutations(p)) out.push_back(step.factor);
  return out;
}

// ---------------------------------------------------------------------------
// Normal form

struct NormalForm {
  std::vector<LatticePoint> vertices;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend bool operator<(const NormalForm& a, const NormalForm& b) {
    return std::lexicographical_compare(a.vertices.begin(), a.vertices.end(),
                                        b.vertices.begin(), b.vertices.end());
  }
};

namespace detail {

// Hermite normal form of the 2 x n matrix whose columns are seq. The first
// column is primitive, so it becomes (1, 0); the first nonzero entry of the
// second row is made positive and the entry above it reduced modulo it.
inline std::vector<LatticePoint> hermite_columns(const std::vector<LatticePoint>& seq) {
  auto e = extended_gcd(seq[0].x, seq[0].y);
  const UnimodularMap to_e1(e.s, e.t, -seq[0].y, seq[0].x);
  std::vector<LatticePoint> cols;
  cols.reserve(seq.size());
  for (const auto& p : seq) cols.push_back(apply_map(to_e1, p));
  auto pivot = std::find_if(cols.begin(), cols.end(), [](const LatticePoint& c) { return c.y != 0; });
  if (pivot->y < 0)
    for (auto& c : cols) c.y = -c.y;
  Integer shift = floor_div(pivot->x, pivot->y);
  for (auto& c : cols) c.x -= shift * c.y;
  return cols;
}

}  // namespace detail

/// Minimum over all starting vertices and both orientations of the Hermite
/// normal form of the vertex matrix.
inline NormalForm normal_form(const FanoPolygon& p) {
  std::optional<NormalForm> best;
  const std::size_t n = p.size();
  for (int orientation = 0; orientation < 2; ++orientation) {
    for (std::size_t start = 0; start < n; ++start) {
      std::vector<LatticePoint> seq;
      seq.reserve(n);
      for (std::size_t j = 0; j < n; ++j)
        seq.push_back(orientation == 0 ? p.vertex(start + j) : p.vertex(start + n - j));
      NormalForm cand{detail::hermite_columns(seq)};
      if (!best || cand < *best) best = std::move(cand);
    }
  }
  return *best;
}

inline FanoPolygon representative(const NormalForm& nf) {
  return FanoPolygon::validate(nf.vertices);
}

inline bool same_content(const FanoPolygon& p, const FanoPolygon& q,
                         BasketComparison mode = BasketComparison::Rotation) {
  return equivalent(singularity_content(p), singularity_content(q), mode);
}

// ---------------------------------------------------------------------------
// Mutation graphs

struct MutationGraph {
  struct Node {
    NormalForm form;
    FanoPolygon polygon;
    std::size_t depth;
  };
  struct Edge {
    std::size_t from, to;  // from < to
    Factor factor;         // applied to nodes[discovered_from].polygon
    std::size_t discovered_from;
  };

  std::vector<Node> nodes;
  std::vector<Edge> edges;
  PolygonSingularityContent content;
  Rational degree;
  std::size_t max_depth = 0;
  bool truncated = false;  // max_nodes stopped the search
};

/// Breadth-first search over one-step mutations, deduplicated by normal form.
/// Each layer is expanded in normal-form order, so the result is
/// deterministic. Throws InvariantViolation if a mutation changes the
/// singularity content or the degree.
inline MutationGraph explore_orbit(const FanoPolygon& start, std::size_t max_depth,
                                   std::size_t max_nodes) {
  if (max_nodes == 0) throw std::invalid_argument("explore_orbit: max_nodes must be positive");
  MutationGraph g;
  g.content = singularity_content(start);
  g.degree = degree(start);
  g.max_depth = max_depth;

  std::map<NormalForm, std::size_t> index;
  std::set<std::pair<std::size_t, std::size_t>> seen_edges;
  NormalForm root = normal_form(start);
  index.emplace(root, 0);
  g.nodes.push_back({root, start, 0});

  std::vector<std::size_t> layer{0};
  for (std::size_t depth = 0; depth < max_depth && !layer.empty(); ++depth) {
    std::sort(layer.begin(), layer.end(),
              [&](std::size_t a, std::size_t b) { return g.nodes[a].form < g.nodes[b].form; });
    std::vector<std::size_t> next;
    for (std::size_t id : layer) {
      for (auto& step : candidate_mutations(g.nodes[id].polygon)) {
        if (!equivalent(singularity_content(step.target), g.content))
          throw InvariantViolation("explore_orbit: singularity content changed from " +
                                   to_string(g.content) + " to " +
                                   to_string(singularity_content(step.target)));
        if (degree(step.target) != g.degree)
          throw InvariantViolation("explore_orbit: degree changed from " + to_string(g.degree) +
                                   " to " + to_string(degree(step.target)));
        NormalForm nf = normal_form(step.target);
        auto it = index.find(nf);
        if (it == index.end()) {
          if (g.nodes.size() >= max_nodes) {
            g.truncated = true;
            continue;
          }
          it = index.emplace(nf, g.nodes.size()).first;
          g.nodes.push_back({std::move(nf), step.target, depth + 1});
          next.push_back(it->second);
        }
        std::size_t other = it->second;
        if (other == id) continue;
        auto key = std::minmax(id, other);
        if (seen_edges.insert(key).second)
          g.edges.push_back({key.first, key.second, step.factor, id});
      }
    }
    layer = std::move(next);
  }
  return g;
}

}  // namespace singcontent

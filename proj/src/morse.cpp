#include "bcx/morse.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "bcx/beta.hpp"
#include "bcx/errors.hpp"

namespace bcx {

namespace edge_split {

namespace {

// Kahn's algorithm over the H-order of el, with `first` forced before `second`.
Word constrained_extension(const BooleanElement& el, const Graph& h, Vertex first, Vertex second) {
  const TraceOrder order(el, h);
  const Word& letters = el.word();
  const std::size_t k = letters.size();
  std::vector<bool> done(k, false);
  Word out;
  out.reserve(k);
  while (out.size() < k) {
    bool progressed = false;
    for (std::size_t i = 0; i < k && !progressed; ++i) {
      if (done[i]) continue;
      const Vertex v = letters[i];
      bool ready = true;
      for (std::size_t j = 0; j < k && ready; ++j) {
        if (done[j] || j == i) continue;
        if (order.precedes(letters[j], v) || (v == second && letters[j] == first)) ready = false;
      }
      if (ready) {
        done[i] = true;
        out.push_back(v);
        progressed = true;
      }
    }
    if (!progressed) throw InvalidMatching("no linear extension with the requested order");
  }
  return out;
}

BooleanElement lift_in(const BooleanElement& el, const Graph& g, const Graph& h, EdgeRef e) {
  std::vector<BooleanElement> candidates;
  const TraceOrder order(el, h);
  if (el.contains(e.s) && el.contains(e.t) && !order.precedes(e.s, e.t) && !order.precedes(e.t, e.s)) {
    candidates.push_back(normalize(constrained_extension(el, h, e.s, e.t), g));
    candidates.push_back(normalize(constrained_extension(el, h, e.t, e.s), g));
  } else {
    candidates.push_back(normalize(el.word(), g));
  }
  std::vector<BooleanElement> outside;
  for (auto& c : candidates) {
    if (!in_b_e(c, e, g)) outside.push_back(std::move(c));
  }
  if (outside.size() != 1) {
    throw InvalidMatching("element " + format_element(el, h) + " has " +
                          std::to_string(outside.size()) + " lifts outside B(G)_e");
  }
  return outside.front();
}

}  // namespace

BooleanElement project(const BooleanElement& el, const Graph& h) {
  return normalize(el.word(), h);
}

BooleanElement lift(const BooleanElement& el, const Graph& g, EdgeRef e) {
  return lift_in(el, g, delete_edge(g, e), e);
}

BooleanElement phi(const BooleanElement& el, const Graph& g, EdgeRef e, const Graph& f) {
  if (!in_b_e(el, e, g)) {
    throw InvalidMatching(format_element(el, g) + " cannot be written with s directly before t");
  }
  const TraceOrder order(el, g);
  Word head, tail;
  for (Vertex v : el.word()) {
    if (v == e.s || v == e.t) continue;
    (order.precedes(v, e.t) ? head : tail).push_back(v);
  }
  head.push_back(std::min(e.s, e.t));
  head.insert(head.end(), tail.begin(), tail.end());
  return normalize(head, f);
}

BooleanElement phi_inverse(const BooleanElement& el, const Graph& g, EdgeRef e) {
  const Vertex x = std::min(e.s, e.t);
  if (!el.contains(x)) throw InvalidMatching("phi inverse needs an element containing the merged vertex");
  Word w;
  w.reserve(el.length() + 1);
  for (Vertex v : el.word()) {
    if (v == x) {
      w.push_back(e.s);
      w.push_back(e.t);
    } else {
      w.push_back(v);
    }
  }
  return normalize(w, g);
}

}  // namespace edge_split

struct HMatching::Node {
  enum class Kind { Edgeless, A2, EdgeSplit, Isolated };

  Kind kind = Kind::Edgeless;
  Graph g;
  Vertex s = 0;
  Vertex pivot = 0;  // Edgeless, |G| > 1
  Vertex t = 0;      // EdgeSplit
  Graph h, f;        // EdgeSplit: G - e, G / e;  Isolated: h = G \ s
  Vertex child_at = 0;
  Node* minus = nullptr;       // H at s, or G \ s at child_at
  Node* contracted = nullptr;  // F at x
  Vertex one = 0;              // unmatched rank-0 letter
};

struct HMatching::Impl {
  std::unordered_map<std::string, std::unique_ptr<Node>> nodes;
  Node* root = nullptr;

  Node* get(const Graph& g, Vertex s) {
    std::string key = to_string(g) + "@" + std::to_string(s);
    if (auto it = nodes.find(key); it != nodes.end()) return it->second.get();
    auto node = std::make_unique<Node>();
    node->g = g;
    node->s = s;
    const std::size_t si = g.index_of(s);
    if (g.edge_count() == 0) {
      node->kind = Node::Kind::Edgeless;
      node->pivot = s;
      for (Vertex v : g.vertices()) {
        if (v != s) {
          node->pivot = v;
          break;
        }
      }
      node->one = node->pivot;
    } else if (g.size() == 2) {
      // The two-vertex path: s < ts matched, t and st left over.
      node->kind = Node::Kind::A2;
      node->t = g.label(1 - si);
      node->one = node->t;
    } else if (g.neighbors(si) != 0) {
      node->kind = Node::Kind::EdgeSplit;
      node->t = g.label(static_cast<std::size_t>(std::countr_zero(g.neighbors(si))));
      node->h = delete_edge(g, {s, node->t});
      node->f = contract_edge_simple(g, {s, node->t});
      node->child_at = std::min(s, node->t);
    } else {
      node->kind = Node::Kind::Isolated;
      node->h = delete_vertex(g, s);
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (g.neighbors(i) != 0) {
          node->child_at = g.label(i);
          break;
        }
      }
    }
    Node* raw = node.get();
    nodes.emplace(std::move(key), std::move(node));
    // Children are resolved after insertion so that the map owns this node.
    if (raw->kind == Node::Kind::EdgeSplit) {
      raw->minus = get(raw->h, raw->s);
      raw->one = raw->minus->one;
    } else if (raw->kind == Node::Kind::Isolated) {
      raw->minus = get(raw->h, raw->child_at);
      raw->one = raw->minus->one;
    }
    return raw;
  }

  Node* contracted(Node& n) {
    if (n.contracted == nullptr) n.contracted = get(n.f, n.child_at);
    return n.contracted;
  }

  std::optional<BooleanElement> partner(Node& n, const BooleanElement& el) {
    switch (n.kind) {
      case Node::Kind::Edgeless: {
        if (n.g.size() == 1) return std::nullopt;
        if (!el.contains(n.pivot)) return append_letter(el, n.pivot, n.g);
        if (el.length() == 1) return std::nullopt;
        return delete_letter(el, n.pivot, n.g);
      }
      case Node::Kind::A2: {
        if (el.word() == Word{n.s}) return normalize({n.t, n.s}, n.g);
        if (el.word() == Word{n.t, n.s}) return normalize({n.s}, n.g);
        return std::nullopt;
      }
      case Node::Kind::EdgeSplit: {
        const EdgeRef e{n.s, n.t};
        if (in_b_e(el, e, n.g)) {
          Node* fnode = contracted(n);
          auto p = partner(*fnode, edge_split::phi(el, n.g, e, n.f));
          if (!p || !p->contains(n.child_at)) return std::nullopt;
          return edge_split::phi_inverse(*p, n.g, e);
        }
        auto p = partner(*n.minus, edge_split::project(el, n.h));
        if (!p) return std::nullopt;
        return edge_split::lift_in(*p, n.g, n.h, e);
      }
      case Node::Kind::Isolated: {
        if (el.contains(n.s)) {
          if (el.length() == 1) return normalize({n.one, n.s}, n.g);
          const BooleanElement rest = delete_letter(el, n.s, n.g);
          if (rest.length() == 1 && rest.word().front() == n.one) return normalize({n.s}, n.g);
          auto p = partner(*n.minus, rest);
          if (!p) return rest;
          return append_letter(*p, n.s, n.g);
        }
        auto p = partner(*n.minus, el);
        if (p) return p;
        if (el.length() == 1 && el.word().front() == n.one) return std::nullopt;
        return append_letter(el, n.s, n.g);
      }
    }
    return std::nullopt;
  }
};

HMatching::HMatching(Graph g, Vertex s) : impl_(std::make_unique<Impl>()) {
  if (g.empty()) throw InvalidInput("the H-matching needs a nonempty graph");
  if (!g.has_vertex(s)) throw UnknownVertex("unknown vertex " + std::to_string(s));
  impl_->root = impl_->get(g, s);
}

HMatching::~HMatching() = default;
HMatching::HMatching(HMatching&&) noexcept = default;
HMatching& HMatching::operator=(HMatching&&) noexcept = default;

const Graph& HMatching::graph() const noexcept { return impl_->root->g; }
Vertex HMatching::at_vertex() const noexcept { return impl_->root->s; }

std::optional<BooleanElement> HMatching::partner(const BooleanElement& el) const {
  if (el.length() == 0) return std::nullopt;
  return impl_->partner(*impl_->root, el);
}

Vertex HMatching::unmatched_rank0() const { return impl_->root->one; }
std::size_t HMatching::node_count() const { return impl_->nodes.size(); }

Matching build_h_matching(const BooleanIdeal& ideal, Vertex s) {
  const Graph& g = ideal.graph();
  const HMatching hm(g, s);
  Matching m;
  m.graph = g;
  m.at_vertex = s;
  for (int r = 0; r <= ideal.top_rank(); ++r) {
    for (const auto& el : ideal.rank(r)) {
      const auto p = hm.partner(el);
      if (!p) {
        if (r == 0 && !m.unmatched_rank0) {
          m.unmatched_rank0 = el;
        } else if (r == ideal.top_rank()) {
          m.unmatched_maximal.push_back(el);
        }
        continue;
      }
      if (!ideal.contains(*p)) {
        throw InvalidMatching("partner " + format_element(*p, g) + " is not in the ideal");
      }
      const auto back = hm.partner(*p);
      if (!back || *back != el) {
        throw InvalidMatching("partner of " + format_element(el, g) + " is not mutual");
      }
      if (p->rank() == r + 1) {
        if (!is_cover(el, *p, g)) {
          throw InvalidMatching(format_element(el, g) + " is not covered by " + format_element(*p, g));
        }
        m.pairs.push_back({el, *p});
      } else if (p->rank() != r - 1) {
        throw InvalidMatching("partner of " + format_element(el, g) + " is not in an adjacent rank");
      }
    }
  }
  return m;
}

Matching build_h_matching(const Graph& g, Vertex s, std::size_t budget) {
  if (g.empty()) throw InvalidInput("the H-matching needs a nonempty graph");
  if (!g.has_vertex(s)) throw UnknownVertex("unknown vertex " + std::to_string(s));
  return build_h_matching(enumerate_ideal(g, budget), s);
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// For every rank, the index of the partner one rank above (up) / below (down).
struct PairIndex {
  std::vector<std::vector<std::size_t>> up;
  std::vector<std::vector<std::size_t>> down;
};

PairIndex index_pairs(const Matching& m, const BooleanIdeal& ideal) {
  const Graph& g = ideal.graph();
  PairIndex idx;
  for (int r = 0; r <= ideal.top_rank(); ++r) {
    idx.up.emplace_back(ideal.rank_size(r), kNone);
    idx.down.emplace_back(ideal.rank_size(r), kNone);
  }
  for (const auto& [lower, upper] : m.pairs) {
    const auto li = ideal.index_of(lower);
    const auto ui = ideal.index_of(upper);
    if (!li || !ui || upper.rank() != lower.rank() + 1) {
      throw InvalidMatching("pair " + format_element(lower, g) + " < " + format_element(upper, g) +
                            " is not a cover of the ideal");
    }
    const auto faces = ideal.faces(upper.rank(), *ui);
    if (std::find(faces.begin(), faces.end(), *li) == faces.end()) {
      throw InvalidMatching("pair " + format_element(lower, g) + " < " + format_element(upper, g) +
                            " is not a cover of the ideal");
    }
    auto& lu = idx.up[static_cast<std::size_t>(lower.rank())][*li];
    auto& ud = idx.down[static_cast<std::size_t>(upper.rank())][*ui];
    const bool taken = lu != kNone || ud != kNone ||
                       idx.down[static_cast<std::size_t>(lower.rank())][*li] != kNone ||
                       idx.up[static_cast<std::size_t>(upper.rank())][*ui] != kNone;
    if (taken) throw InvalidMatching("element matched twice near " + format_element(upper, g));
    lu = *ui;
    ud = *li;
  }
  return idx;
}

}  // namespace

bool verify_acyclic(const Matching& m, const BooleanIdeal& ideal) {
  const PairIndex idx = index_pairs(m, ideal);
  for (int r = 0; r < ideal.top_rank(); ++r) {
    const std::size_t lo = ideal.rank_size(r);
    const std::size_t hi = ideal.rank_size(r + 1);
    // Nodes 0..lo-1 are rank r, lo..lo+hi-1 are rank r+1.
    std::vector<std::vector<std::size_t>> out(lo + hi);
    for (std::size_t i = 0; i < hi; ++i) {
      for (std::size_t j : ideal.faces(r + 1, i)) {
        if (idx.up[static_cast<std::size_t>(r)][j] == i) {
          out[j].push_back(lo + i);
        } else {
          out[lo + i].push_back(j);
        }
      }
    }
    enum : unsigned char { White, Grey, Black };
    std::vector<unsigned char> colour(lo + hi, White);
    std::vector<std::pair<std::size_t, std::size_t>> stack;
    for (std::size_t root = 0; root < lo + hi; ++root) {
      if (colour[root] != White) continue;
      colour[root] = Grey;
      stack.emplace_back(root, 0);
      while (!stack.empty()) {
        auto& [v, next] = stack.back();
        if (next < out[v].size()) {
          const std::size_t w = out[v][next++];
          if (colour[w] == Grey) return false;
          if (colour[w] == White) {
            colour[w] = Grey;
            stack.emplace_back(w, 0);
          }
        } else {
          colour[v] = Black;
          stack.pop_back();
        }
      }
    }
  }
  return true;
}

namespace {

constexpr std::size_t kMaxCounterexamples = 20;

void note(HReport& rep, std::string msg) {
  if (rep.counterexamples.size() < kMaxCounterexamples) rep.counterexamples.push_back(std::move(msg));
}

}  // namespace

HReport verify_h_properties(const Matching& m, const BooleanIdeal& ideal) {
  const Graph& g = ideal.graph();
  const Vertex s = m.at_vertex;
  if (!g.has_vertex(s)) throw UnknownVertex("unknown vertex " + std::to_string(s));
  const PairIndex idx = index_pairs(m, ideal);
  const int top = ideal.top_rank();
  HReport rep;

  const std::uint64_t beta_g = beta_recursive(g).value;
  std::size_t rank0 = 0, maximal = 0;
  rep.h1 = true;
  for (int r = 0; r <= top; ++r) {
    const auto ru = static_cast<std::size_t>(r);
    for (std::size_t i = 0; i < ideal.rank_size(r); ++i) {
      if (idx.up[ru][i] != kNone || idx.down[ru][i] != kNone) continue;
      if (r == top) {
        ++maximal;
      } else if (r == 0 && rank0 == 0) {
        ++rank0;
      } else {
        rep.h1 = false;
        note(rep, "h1: unmatched " + format_element(ideal.rank(r)[i], g));
      }
    }
  }
  if (top == 0) {
    // A single vertex: it is both the rank-0 and the maximal element.
    rank0 = maximal;
    maximal = 0;
  }
  if (rank0 != 1) {
    rep.h1 = false;
    note(rep, "h1: " + std::to_string(rank0) + " unmatched rank-0 elements");
  }
  if (maximal != beta_g) {
    rep.h1 = false;
    note(rep, "h1: " + std::to_string(maximal) + " unmatched maximal elements, beta is " +
                  std::to_string(beta_g));
  }

  rep.h2 = true;
  if (g.size() > 1) {
    rep.h2_checked = true;
    const std::uint64_t want = beta_g + beta_recursive(delete_vertex(g, s)).value;
    std::uint64_t unmatched = 0;
    for (int r = 0; r <= top; ++r) {
      const auto ru = static_cast<std::size_t>(r);
      for (std::size_t i = 0; i < ideal.rank_size(r); ++i) {
        const auto& el = ideal.rank(r)[i];
        if (!el.contains(s)) continue;
        bool matched = false;
        if (idx.up[ru][i] != kNone) matched = true;  // upper cells always keep s
        if (idx.down[ru][i] != kNone && ideal.rank(r - 1)[idx.down[ru][i]].contains(s)) matched = true;
        if (matched) continue;
        ++unmatched;
        if (r != top) {
          rep.h2 = false;
          note(rep, "h2: unmatched non-maximal " + format_element(el, g));
        }
      }
    }
    if (unmatched != want) {
      rep.h2 = false;
      note(rep, "h2: " + std::to_string(unmatched) + " unmatched elements containing s, expected " +
                    std::to_string(want));
    }
  }

  rep.h3 = true;
  for (const auto& [lower, upper] : m.pairs) {
    if (!upper.contains(s)) continue;
    Vertex d = 0;
    for (Vertex v : upper.word()) {
      if (!lower.contains(v)) d = v;
    }
    const TraceOrder order(upper, g);
    const bool ok = (d == s) ? order.is_maximal(s) : !order.precedes(s, d);
    if (!ok) {
      rep.h3 = false;
      note(rep, "h3: " + format_element(lower, g) + " < " + format_element(upper, g));
    }
  }
  return rep;
}

SkeletonReport skeleton_sphere_counts(const Graph& g, const Matching& m, std::size_t budget) {
  const BooleanIdeal ideal = enumerate_ideal(g, budget);
  const PairIndex idx = index_pairs(m, ideal);
  const int top = ideal.top_rank();
  SkeletonReport rep;
  rep.f = rank_sizes(ideal);
  rep.spheres.assign(rep.f.size(), 0);
  rep.restricted.assign(rep.f.size(), 0);

  std::uint64_t top_unmatched = 0;
  const auto tu = static_cast<std::size_t>(top);
  for (std::size_t i = 0; i < ideal.rank_size(top); ++i) {
    if (idx.down[tu][i] == kNone && idx.up[tu][i] == kNone) ++top_unmatched;
  }
  rep.spheres[tu] = top == 0 ? 0 : top_unmatched;
  for (int r = top - 1; r >= 0; --r) {
    const auto ru = static_cast<std::size_t>(r);
    rep.spheres[ru] = rep.f[ru + 1] - rep.spheres[ru + 1];
  }

  for (int r = 0; r <= top; ++r) {
    const auto ru = static_cast<std::size_t>(r);
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < ideal.rank_size(r); ++i) {
      if (idx.down[ru][i] == kNone) ++count;  // unmatched, or matched upward and cut off
    }
    if (r == 0 && count > 0) --count;  // base point
    if (top == 0) count = 0;
    rep.restricted[ru] = count;
  }
  return rep;
}

}  // namespace bcx

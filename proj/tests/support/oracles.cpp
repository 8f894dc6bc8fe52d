#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace oracle {

std::set<Word> commutation_class(const Word& w, const Graph& g) {
  std::set<Word> seen{w};
  std::deque<Word> todo{w};
  while (!todo.empty()) {
    Word cur = todo.front();
    todo.pop_front();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (g.has_edge(cur[i], cur[i + 1])) continue;
      Word next = cur;
      std::swap(next[i], next[i + 1]);
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return seen;
}

Word class_minimum(const Word& w, const Graph& g) { return *commutation_class(w, g).begin(); }

std::vector<std::set<Word>> all_classes(const Graph& g) {
  const std::vector<Vertex> letters(g.vertices().begin(), g.vertices().end());
  std::vector<std::set<Word>> out(letters.size());
  const unsigned n = static_cast<unsigned>(letters.size());
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << n); ++subset) {
    Word w;
    for (unsigned i = 0; i < n; ++i) {
      if (subset >> i & 1) w.push_back(letters[i]);
    }
    do {
      out[w.size() - 1].insert(class_minimum(w, g));
    } while (std::next_permutation(w.begin(), w.end()));
  }
  return out;
}

std::int64_t euler_characteristic(const Graph& g) {
  std::int64_t chi = 0;
  const auto classes = all_classes(g);
  for (std::size_t r = 0; r < classes.size(); ++r) {
    chi += (r % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(classes[r].size());
  }
  return chi;
}

bool in_b_e(const Word& w, Vertex s, Vertex t, const Graph& g) {
  for (const Word& rep : commutation_class(w, g)) {
    for (std::size_t i = 0; i + 1 < rep.size(); ++i) {
      if (rep[i] == s && rep[i + 1] == t) return true;
    }
  }
  return false;
}

bool h3_pair(const Word& lower, const Word& upper, Vertex s, const Graph& g) {
  const auto lower_class = commutation_class(lower, g);
  for (const Word& rep : commutation_class(upper, g)) {
    if (rep.back() == s && lower_class.count(Word(rep.begin(), rep.end() - 1))) return true;
    const auto ps = static_cast<std::size_t>(std::find(rep.begin(), rep.end(), s) - rep.begin());
    for (std::size_t i = 0; i < ps; ++i) {
      Word cut = rep;
      cut.erase(cut.begin() + static_cast<std::ptrdiff_t>(i));
      if (lower_class.count(cut)) return true;
    }
  }
  return false;
}

bool acyclic(const std::vector<std::pair<Word, Word>>& pairs, const Graph& g) {
  std::map<Word, std::size_t> id;
  for (const auto& rank : all_classes(g)) {
    for (const Word& w : rank) id.emplace(w, id.size());
  }
  std::set<std::pair<std::size_t, std::size_t>> up;
  for (const auto& [lo, hi] : pairs) up.emplace(id.at(lo), id.at(hi));

  std::vector<std::vector<std::size_t>> out(id.size());
  std::vector<std::size_t> indeg(id.size(), 0);
  for (const auto& [w, i] : id) {
    if (w.size() < 2) continue;
    for (std::size_t k = 0; k < w.size(); ++k) {
      Word face = w;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
      const std::size_t j = id.at(class_minimum(face, g));
      if (up.count({j, i})) {
        out[j].push_back(i);
        ++indeg[i];
      } else {
        out[i].push_back(j);
        ++indeg[j];
      }
    }
  }
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < indeg.size(); ++i) {
    if (indeg[i] == 0) ready.push_back(i);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++removed;
    for (std::size_t w : out[v]) {
      if (--indeg[w] == 0) ready.push_back(w);
    }
  }
  return removed == id.size();
}

std::size_t gf2_rank(std::vector<std::vector<bool>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][c]) {
        for (std::size_t k = 0; k < cols; ++k) rows[r][k] = rows[r][k] != rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<std::uint64_t> betti(const Graph& g) {
  const auto classes = all_classes(g);
  std::vector<std::vector<Word>> cells;
  for (const auto& r : classes) cells.emplace_back(r.begin(), r.end());
  // ranks of d_k, k = 0..top, with d_0 the augmentation
  std::vector<std::size_t> ranks{cells[0].empty() ? 0u : 1u};
  for (std::size_t k = 1; k < cells.size(); ++k) {
    std::map<Word, std::size_t> face_index;
    for (std::size_t i = 0; i < cells[k - 1].size(); ++i) face_index[cells[k - 1][i]] = i;
    // rows = cells of rank k, columns = faces
    std::vector<std::vector<bool>> rows;
    for (const Word& w : cells[k]) {
      std::vector<bool> row(cells[k - 1].size(), false);
      for (std::size_t d = 0; d < w.size(); ++d) {
        Word face = w;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(d));
        row[face_index.at(class_minimum(face, g))] = true;
      }
      rows.push_back(std::move(row));
    }
    ranks.push_back(gf2_rank(std::move(rows)));
  }
  std::vector<std::uint64_t> out;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const std::size_t image = k + 1 < cells.size() ? ranks[k + 1] : 0;
    out.push_back(cells[k].size() - ranks[k] - image);
  }
  return out;
}

std::uint64_t covering_edge_subsets(const Graph& g) {
  const auto edges = g.edges();
  std::uint64_t count = 0;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << edges.size()); ++subset) {
    std::set<Vertex> touched;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (subset >> i & 1) {
        touched.insert(edges[i].first);
        touched.insert(edges[i].second);
      }
    }
    if (touched.size() == g.size()) ++count;
  }
  return count;
}

std::uint64_t derangements(unsigned n) {
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::uint64_t count = 0;
  do {
    bool fixed = false;
    for (unsigned i = 0; i < n; ++i) fixed = fixed || p[i] == i;
    if (!fixed) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

std::uint64_t fibonacci(unsigned n) {
  if (n == 0) return 0;
  if (n <= 2) return 1;
  return fibonacci(n - 1) + fibonacci(n - 2);
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < a.size() && ok; ++j) {
        ok = a.has_edge(a.label(i), a.label(j)) == b.has_edge(b.label(perm[i]), b.label(perm[j]));
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Graph make(std::vector<Vertex> vertices, std::vector<std::pair<Vertex, Vertex>> edges) {
  return Graph(std::move(vertices), edges);
}

Graph path(unsigned n) {
  std::vector<Vertex> v;
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 1; i <= n; ++i) {
    v.push_back(i);
    if (i > 1) e.emplace_back(i - 1, i);
  }
  return make(v, e);
}

Graph complete(unsigned n) {
  std::vector<Vertex> v;
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 1; i <= n; ++i) {
    v.push_back(i);
    for (Vertex j = 1; j < i; ++j) e.emplace_back(j, i);
  }
  return make(v, e);
}

Graph random_graph(unsigned n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Vertex> v;
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 1; i <= n; ++i) {
    v.push_back(i);
    for (Vertex j = 1; j < i; ++j) {
      if (coin(rng)) e.emplace_back(j, i);
    }
  }
  return make(v, e);
}

Graph random_tree(unsigned n, std::mt19937_64& rng) {
  std::vector<Vertex> v;
  for (Vertex i = 1; i <= n; ++i) v.push_back(i);
  if (n < 2) return make(v, {});
  std::uniform_int_distribution<Vertex> pick(1, n);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = pick(rng);
  std::vector<unsigned> degree(n + 1, 1);
  for (Vertex c : code) ++degree[c];
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex c : code) {
    Vertex leaf = 1;
    while (degree[leaf] != 1) ++leaf;
    e.emplace_back(leaf, c);
    --degree[leaf];
    --degree[c];
  }
  Vertex a = 0, b = 0;
  for (Vertex i = 1; i <= n; ++i) {
    if (degree[i] == 1) (a == 0 ? a : b) = i;
  }
  e.emplace_back(a, b);
  return make(v, e);
}

Graph shuffled(const Graph& g, std::vector<Vertex> labels, std::mt19937_64& rng) {
  std::shuffle(labels.begin(), labels.end(), rng);
  std::map<Vertex, Vertex> to;
  for (std::size_t i = 0; i < g.size(); ++i) to[g.label(i)] = labels[i];
  std::vector<std::pair<Vertex, Vertex>> e;
  for (auto [u, w] : g.edges()) e.emplace_back(to[u], to[w]);
  labels.resize(g.size());
  return make(labels, e);
}

std::vector<Graph> all_labeled_graphs(unsigned n) {
  std::vector<std::pair<Vertex, Vertex>> slots;
  std::vector<Vertex> v;
  for (Vertex i = 1; i <= n; ++i) {
    v.push_back(i);
    for (Vertex j = 1; j < i; ++j) slots.emplace_back(j, i);
  }
  std::vector<Graph> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << slots.size()); ++m) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (m >> i & 1) e.push_back(slots[i]);
    }
    out.push_back(make(v, e));
  }
  return out;
}

}  // namespace oracle

#include "bcx/homology.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "bcx/beta.hpp"
#include "bcx/errors.hpp"
#include "bcx/family.hpp"

namespace bcx {

Gf2Matrix boundary_matrix(const BooleanIdeal& ideal, int k) {
  if (k < 0 || k > ideal.top_rank()) throw InvalidInput("boundary index out of range");
  if (k == 0) {
    Gf2Matrix aug(1, ideal.rank_size(0));
    for (std::size_t c = 0; c < ideal.rank_size(0); ++c) aug.set(0, c);
    return aug;
  }
  Gf2Matrix m(ideal.rank_size(k - 1), ideal.rank_size(k));
  for (std::size_t c = 0; c < ideal.rank_size(k); ++c) {
    for (std::size_t r : ideal.faces(k, c)) m.set(r, c);
  }
  return m;
}

Gf2ChainComplex::Gf2ChainComplex(const BooleanIdeal& ideal) : ideal_(&ideal) {
  for (int k = 0; k <= ideal.top_rank(); ++k) boundary_.push_back(boundary_matrix(ideal, k));
}

const Gf2Matrix& Gf2ChainComplex::boundary(int k) const {
  if (k < 0 || k > top()) throw InvalidInput("boundary index out of range");
  return boundary_[static_cast<std::size_t>(k)];
}

bool Gf2ChainComplex::squares_to_zero() const {
  for (int k = 1; k <= top(); ++k) {
    if (!multiply(boundary(k - 1), boundary(k)).is_zero()) return false;
  }
  return true;
}

Gf2Chain add(const Gf2Chain& a, const Gf2Chain& b) {
  if (a.dimension != b.dimension) throw InvalidInput("cannot add chains of different dimension");
  Gf2Chain out{a.dimension, {}};
  std::set_symmetric_difference(a.support.begin(), a.support.end(), b.support.begin(),
                                b.support.end(), std::back_inserter(out.support));
  return out;
}

namespace {

void check_cell(const BooleanElement& el, int dimension, const Graph& g) {
  if (el.rank() != dimension) throw InvalidInput("chain cell has the wrong rank");
  for (Vertex v : el.word()) {
    if (!g.has_vertex(v)) throw InvalidInput("chain cell uses a letter outside the graph");
  }
  if (normalize(el.word(), g) != el) throw InvalidInput("chain cell is not in normal form for this graph");
}

Gf2Chain from_set(int dimension, const std::set<BooleanElement>& odd) {
  return {dimension, std::vector<BooleanElement>(odd.begin(), odd.end())};
}

}  // namespace

Gf2Chain boundary(const Gf2Chain& c, const Graph& g) {
  for (const auto& el : c.support) check_cell(el, c.dimension, g);
  if (c.dimension == 0) {
    Gf2Chain out{-1, {}};
    if (c.support.size() % 2 == 1) out.support.push_back(BooleanElement{});
    return out;
  }
  std::set<BooleanElement> odd;
  for (const auto& el : c.support) {
    for (Vertex v : el.word()) {
      auto face = delete_letter(el, v, g);
      if (!odd.erase(face)) odd.insert(std::move(face));
    }
  }
  return from_set(c.dimension - 1, odd);
}

bool verify_cycle(const Graph& g, const Gf2Chain& c) { return boundary(c, g).support.empty(); }

std::vector<std::uint64_t> betti_gf2(const BooleanIdeal& ideal) {
  const int top = ideal.top_rank();
  std::vector<std::uint64_t> ranks;  // rank of d_k, k = 0..top
  for (int k = 0; k <= top; ++k) ranks.push_back(rank(boundary_matrix(ideal, k)));
  std::vector<std::uint64_t> out;
  for (int k = 0; k <= top; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    const std::uint64_t kernel = ideal.rank_size(k) - ranks[ku];
    const std::uint64_t image = k < top ? ranks[ku + 1] : 0;
    out.push_back(kernel - image);
  }
  return out;
}

namespace {

void check_homology_size(const Graph& g, std::size_t max_vertices) {
  if (g.size() > max_vertices) {
    throw BudgetExceeded("dense homology is limited to " + std::to_string(max_vertices) + " vertices");
  }
}

}  // namespace

std::vector<std::uint64_t> betti_gf2(const Graph& g, std::size_t max_vertices, std::size_t budget) {
  check_homology_size(g, max_vertices);
  return betti_gf2(enumerate_ideal(g, budget));
}

std::vector<Gf2Chain> top_cycle_basis(const BooleanIdeal& ideal) {
  const int top = ideal.top_rank();
  const Gf2Matrix basis = null_space(boundary_matrix(ideal, top));
  const auto cells = ideal.rank(top);
  std::vector<Gf2Chain> out;
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    Gf2Chain c{top, {}};
    const auto w = basis.row(r);
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::uint64_t m = w[i]; m; m &= m - 1) {
        c.support.push_back(cells[i * 64 + static_cast<std::size_t>(std::countr_zero(m))]);
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Gf2Chain> top_cycle_basis(const Graph& g, std::size_t max_vertices, std::size_t budget) {
  check_homology_size(g, max_vertices);
  return top_cycle_basis(enumerate_ideal(g, budget));
}

std::vector<std::uint64_t> chain_vector(const BooleanIdeal& ideal, const Gf2Chain& c) {
  if (c.dimension < 0 || c.dimension > ideal.top_rank()) throw InvalidInput("chain dimension out of range");
  std::vector<std::uint64_t> v((ideal.rank_size(c.dimension) + 63) / 64, 0);
  for (const auto& el : c.support) {
    const auto i = ideal.index_of(el);
    if (!i) throw InvalidInput("chain cell is not in the ideal");
    v[*i / 64] ^= std::uint64_t{1} << (*i % 64);
  }
  return v;
}

bool linearly_independent(const BooleanIdeal& ideal, const std::vector<Gf2Chain>& chains) {
  if (chains.empty()) return true;
  const int dim = chains.front().dimension;
  Gf2Matrix m(chains.size(), ideal.rank_size(dim));
  for (std::size_t r = 0; r < chains.size(); ++r) {
    if (chains[r].dimension != dim) return false;
    const auto v = chain_vector(ideal, chains[r]);
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::uint64_t bits = v[i]; bits; bits &= bits - 1) {
        m.set(r, i * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      }
    }
  }
  return rank(std::move(m)) == chains.size();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Gf2Chain parse_chain(std::string_view text, const Graph& g, const std::map<std::string, Gf2Chain>& named) {
  std::optional<Gf2Chain> acc;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto plus = text.find('+', start);
    const auto term = trim(text.substr(start, plus == std::string_view::npos ? plus : plus - start));
    if (term.empty()) throw ParseError("empty term in chain '" + std::string(text) + "'");
    Gf2Chain piece;
    if (term.front() == '[') {
      if (term.back() != ']') throw ParseError("unclosed cell '" + std::string(term) + "'");
      BooleanElement el;
      try {
        el = parse_element(term.substr(1, term.size() - 2), g);
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError("bad cell '" + std::string(term) + "': " + e.what());
      }
      piece = {el.rank(), {el}};
    } else {
      auto it = named.find(std::string(term));
      if (it == named.end()) throw ParseError("unknown chain name '" + std::string(term) + "'");
      piece = it->second;
    }
    if (!acc) {
      acc = std::move(piece);
    } else {
      if (acc->dimension != piece.dimension) throw ParseError("mixed dimensions in chain");
      acc = add(*acc, piece);
    }
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return *acc;
}

std::string format_chain(const Gf2Chain& c, const Graph& g) {
  if (c.support.empty()) return "0";
  std::string out;
  for (const auto& el : c.support) {
    if (!out.empty()) out += " + ";
    out += "[" + format_element(el, g) + "]";
  }
  return out;
}

std::vector<AnFixture> parse_an_fixtures(std::string_view text) {
  std::vector<AnFixture> out;
  std::map<std::string, Gf2Chain> named;
  Graph g;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto where = " (line " + std::to_string(line_no) + ")";
    try {
      if (line.starts_with("n ")) {
        const unsigned n = static_cast<unsigned>(std::stoul(std::string(trim(line.substr(2)))));
        g = family_graph({Family::A, n});
        named.clear();
        out.push_back({n, {}});
      } else if (out.empty()) {
        throw ParseError("content before the first 'n' line");
      } else if (line.starts_with("generator:")) {
        out.back().generators.push_back(parse_chain(line.substr(10), g, named));
      } else if (auto def = line.find(":="); def != std::string_view::npos) {
        named[std::string(trim(line.substr(0, def)))] = parse_chain(line.substr(def + 2), g, named);
      } else {
        throw ParseError("unrecognised line");
      }
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + where);
    } catch (const std::exception& e) {
      throw ParseError(std::string(e.what()) + where);
    }
  }
  return out;
}

std::vector<AnFixtureResult> an_fixture_suite(std::string_view text) {
  std::vector<AnFixtureResult> results;
  for (const auto& fx : parse_an_fixtures(text)) {
    AnFixtureResult res;
    res.n = fx.n;
    res.generators = fx.generators.size();
    const Graph g = family_graph({Family::A, fx.n});
    const BooleanIdeal ideal = enumerate_ideal(g);
    const int top = ideal.top_rank();

    res.all_cycles = true;
    for (const auto& c : fx.generators) {
      if (c.dimension != top || !verify_cycle(g, c)) {
        res.all_cycles = false;
        res.failures.push_back("not a top cycle: " + format_chain(c, g));
      }
    }
    res.independent = linearly_independent(ideal, fx.generators);
    if (!res.independent) res.failures.push_back("generators are dependent");

    const std::uint64_t b_top = betti_gf2(ideal).back();
    const std::uint64_t expected = fibonacci(fx.n - 1);
    res.count_matches = res.generators == expected && b_top == expected;
    if (!res.count_matches) {
      res.failures.push_back(std::to_string(res.generators) + " generators, top Betti number " +
                             std::to_string(b_top) + ", expected " + std::to_string(expected));
    }

    std::vector<bool> seen(ideal.rank_size(top), false);
    for (const auto& c : top_cycle_basis(ideal)) {
      for (const auto& el : c.support) seen[*ideal.index_of(el)] = true;
    }
    res.top_cells_covered = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    if (!res.top_cells_covered) res.failures.push_back("some top cell lies in no cycle");
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace bcx

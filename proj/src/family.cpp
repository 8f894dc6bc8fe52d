#include "bcx/family.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>

#include "bcx/errors.hpp"

namespace bcx {

namespace {

struct FamilyName {
  std::string_view name;
  Family family;
  unsigned fixed_n;  // 0 when the rank is a parameter
};

constexpr std::array kNames{
    FamilyName{"a", Family::A, 0},
    FamilyName{"b", Family::B, 0},
    FamilyName{"c", Family::B, 0},
    FamilyName{"d", Family::D, 0},
    FamilyName{"e", Family::E, 0},
    FamilyName{"f", Family::F4, 4},
    FamilyName{"f4", Family::F4, 4},
    FamilyName{"g", Family::G2, 2},
    FamilyName{"g2", Family::G2, 2},
    FamilyName{"h", Family::H3, 0},
    FamilyName{"h3", Family::H3, 3},
    FamilyName{"h4", Family::H4, 4},
    FamilyName{"i", Family::I2, 2},
    FamilyName{"i2", Family::I2, 2},
    FamilyName{"affinea", Family::AffineA, 0},
    FamilyName{"affineb", Family::AffineB, 0},
    FamilyName{"affinec", Family::AffineC, 0},
    FamilyName{"affined", Family::AffineD, 0},
    FamilyName{"affinee", Family::AffineE, 0},
    FamilyName{"affinef", Family::AffineF4, 4},
    FamilyName{"affinef4", Family::AffineF4, 4},
    FamilyName{"affineg", Family::AffineG2, 2},
    FamilyName{"affineg2", Family::AffineG2, 2},
    FamilyName{"k", Family::Complete, 0},
    FamilyName{"s", Family::Star, 0},
    FamilyName{"delta", Family::Edgeless, 0},
    FamilyName{"path", Family::Path, 0},
    FamilyName{"cycle", Family::Cycle, 0},
};

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

std::vector<Vertex> first_labels(unsigned count) {
  std::vector<Vertex> v(count);
  for (unsigned i = 0; i < count; ++i) v[i] = i + 1;
  return v;
}

EdgeList path_edges(unsigned count) {
  EdgeList e;
  for (Vertex i = 1; i < count; ++i) e.emplace_back(i, i + 1);
  return e;
}

Graph path(unsigned count) { return Graph(first_labels(count), path_edges(count)); }

// Path 1..len with extra pendant vertices attached at the given path vertices.
Graph path_with_pendants(unsigned len, std::initializer_list<Vertex> attach_at) {
  EdgeList e = path_edges(len);
  Vertex next = len + 1;
  for (Vertex at : attach_at) e.emplace_back(at, next++);
  return Graph(first_labels(next - 1), e);
}

Graph cycle(unsigned count) {
  EdgeList e = path_edges(count);
  e.emplace_back(count, 1);
  return Graph(first_labels(count), e);
}

}  // namespace

bool is_coxeter_type(Family family) {
  switch (family) {
    case Family::Complete:
    case Family::Star:
    case Family::Edgeless:
    case Family::Path:
    case Family::Cycle:
      return false;
    default:
      return true;
  }
}

void validate(const FamilySpec& spec) {
  const unsigned n = spec.n;
  bool ok = false;
  switch (spec.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B: ok = n >= 2; break;
    case Family::D: ok = n >= 4; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F4: ok = n == 4; break;
    case Family::G2: ok = n == 2; break;
    case Family::H3: ok = n == 3; break;
    case Family::H4: ok = n == 4; break;
    case Family::I2: ok = n == 2; break;
    case Family::AffineA: ok = n >= 1; break;
    case Family::AffineB: ok = n >= 3; break;
    case Family::AffineC: ok = n >= 2; break;
    case Family::AffineD: ok = n >= 4; break;
    case Family::AffineE: ok = n >= 6 && n <= 8; break;
    case Family::AffineF4: ok = n == 4; break;
    case Family::AffineG2: ok = n == 2; break;
    case Family::Complete:
    case Family::Star:
    case Family::Edgeless:
    case Family::Path: ok = n >= 1; break;
    case Family::Cycle: ok = n >= 3; break;
  }
  ok = ok && n <= kMaxVertices - 1;
  if (!ok) throw InvalidInput("rank out of range for family " + to_string(spec));
}

FamilySpec parse_family(std::string_view text) {
  std::string lowered(text);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  std::string_view name = lowered;
  std::string_view rank;
  if (auto colon = name.find(':'); colon != std::string_view::npos) {
    rank = name.substr(colon + 1);
    name = name.substr(0, colon);
  }
  auto it = std::find_if(kNames.begin(), kNames.end(),
                         [&](const FamilyName& f) { return f.name == name; });
  if (it == kNames.end()) throw ParseError("unknown family '" + std::string(text) + "'");

  FamilySpec spec{it->family, it->fixed_n};
  if (!rank.empty()) {
    unsigned n = 0;
    auto [ptr, ec] = std::from_chars(rank.data(), rank.data() + rank.size(), n);
    if (ec != std::errc{} || ptr != rank.data() + rank.size()) {
      throw ParseError("bad rank in family spec '" + std::string(text) + "'");
    }
    if (it->name == "h" && n == 4) spec.family = Family::H4;
    if (spec.n != 0 && spec.family != Family::H4 && n != spec.n) {
      throw InvalidInput("rank out of range for family '" + std::string(text) + "'");
    }
    spec.n = n;
  } else if (spec.n == 0) {
    throw ParseError("family spec '" + std::string(text) + "' needs a rank, e.g. A:5");
  }
  validate(spec);
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  const std::string n = std::to_string(spec.n);
  switch (spec.family) {
    case Family::A: return "A:" + n;
    case Family::B: return "B:" + n;
    case Family::D: return "D:" + n;
    case Family::E: return "E:" + n;
    case Family::F4: return "F:4";
    case Family::G2: return "G:2";
    case Family::H3: return "H:3";
    case Family::H4: return "H:4";
    case Family::I2: return "I:2";
    case Family::AffineA: return "affineA:" + n;
    case Family::AffineB: return "affineB:" + n;
    case Family::AffineC: return "affineC:" + n;
    case Family::AffineD: return "affineD:" + n;
    case Family::AffineE: return "affineE:" + n;
    case Family::AffineF4: return "affineF:4";
    case Family::AffineG2: return "affineG:2";
    case Family::Complete: return "K:" + n;
    case Family::Star: return "S:" + n;
    case Family::Edgeless: return "delta:" + n;
    case Family::Path: return "path:" + n;
    case Family::Cycle: return "cycle:" + n;
  }
  return "?";
}

Graph family_graph(const FamilySpec& spec) {
  validate(spec);
  const unsigned n = spec.n;
  switch (spec.family) {
    case Family::A:
    case Family::B:
    case Family::Path:
    case Family::F4:
    case Family::G2:
    case Family::H3:
    case Family::H4:
    case Family::I2:
      return path(n);
    // Path 1..n-1 forked at n-2.
    case Family::D:
      return path_with_pendants(n - 1, {n - 2});
    // Path 1..n-1 with the extra vertex attached at 3: arms of 2, n-4 and 1.
    case Family::E:
      return path_with_pendants(n - 1, {3});
    // Affine types have n + 1 vertices.
    case Family::AffineA:
      return n == 1 ? path(2) : cycle(n + 1);
    case Family::AffineB:
      return path_with_pendants(n, {n - 1});
    case Family::AffineC:
      return path(n + 1);
    case Family::AffineD:
      return path_with_pendants(n - 1, {2, n - 2});
    case Family::AffineE:
      if (n == 6) {
        // Three arms of length 2 around vertex 3.
        return Graph(first_labels(7), EdgeList{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}, {6, 7}});
      }
      if (n == 7) return path_with_pendants(7, {4});
      return path_with_pendants(8, {3});
    case Family::AffineF4:
      return path(5);
    case Family::AffineG2:
      return path(3);
    case Family::Complete: {
      EdgeList e;
      for (Vertex a = 1; a <= n; ++a) {
        for (Vertex b = a + 1; b <= n; ++b) e.emplace_back(a, b);
      }
      return Graph(first_labels(n), e);
    }
    case Family::Star: {
      EdgeList e;
      for (Vertex leaf = 2; leaf <= n; ++leaf) e.emplace_back(1, leaf);
      return Graph(first_labels(n), e);
    }
    case Family::Edgeless:
      return Graph(first_labels(n));
    case Family::Cycle:
      return cycle(n);
  }
  throw InvalidInput("unknown family");
}

}  // namespace bcx

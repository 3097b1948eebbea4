#pragma once

#include <array>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tangleinv {

using Label = int;

/// Crossing ends listed counterclockwise; the under-strand joins ends[0] and ends[2].
struct Crossing {
  std::array<Label, 4> ends{};
  bool operator==(const Crossing&) const = default;
};

struct TriVertex {
  std::array<Label, 3> ends{};
  bool operator==(const TriVertex&) const = default;
};

struct QuadVertex {
  std::array<Label, 4> ends{};
  bool operator==(const QuadVertex&) const = default;
};

/// Planar-diagram code of a (graph) tangle in a disk.
///
/// Every edge label occurs exactly twice among the node ends and the boundary
/// sequences, except circle labels, which occur once (in `circles`). Going
/// counterclockwise around the disk one meets `bottom` left-to-right and then
/// `top` right-to-left.
struct TangleDiagram {
  std::vector<Crossing> crossings;
  std::vector<TriVertex> trivalent;
  std::vector<QuadVertex> fourvalent;
  std::vector<Label> circles;
  std::vector<Label> bottom;
  std::vector<Label> top;
  std::set<Label> thick;

  int m() const noexcept { return static_cast<int>(bottom.size()); }
  int n() const noexcept { return static_cast<int>(top.size()); }
  bool has_graph_vertices() const noexcept { return !trivalent.empty() || !fourvalent.empty(); }
  Label max_label() const;
  std::set<Label> labels() const;

  bool operator==(const TangleDiagram&) const = default;
};

/// Parses the .tng text format. Syntax errors carry the line number; type
/// invariant violations (label multiplicities, thick-edge rules) are raised as
/// ValidationError naming the offending label. Planarity is left to validate().
TangleDiagram parse_tng(std::string_view text);
TangleDiagram load_tng(const std::filesystem::path& path);
std::string serialize_tng(const TangleDiagram& d);

struct ValidationReport {
  std::vector<std::string> errors;
  bool ok() const noexcept { return errors.empty(); }
};

/// Type invariants only (no planarity).
ValidationReport check_invariants(const TangleDiagram& d);
/// Type invariants plus planar realizability of the rotation system.
ValidationReport validate(const TangleDiagram& d);
/// Throws ValidationError listing every failed check.
void require_valid(const TangleDiagram& d);

/// Swaps over- and under-strand at every crossing.
TangleDiagram mirror(const TangleDiagram& d);

/// Places `right` to the right of `left`; labels of `right` are shifted past
/// the largest label of `left`.
TangleDiagram tensor(const TangleDiagram& left, const TangleDiagram& right);

/// Label-free canonical code: equal iff the diagrams are isomorphic as
/// rotation systems with fixed boundary (relabeling, node reordering and
/// rotating the listing of a node are all forgotten).
std::string canonical_code(const TangleDiagram& d);
bool isomorphic(const TangleDiagram& a, const TangleDiagram& b);

/// One end of an edge: `side` is 0 for the first occurrence of the label in
/// text order (X, V, F lines, then bottom, then top), 1 for the second. A dart
/// travels along the edge away from this occurrence.
struct Dart {
  Label label = 0;
  int side = 0;
  bool operator==(const Dart&) const = default;
  auto operator<=>(const Dart&) const = default;
};

/// Face boundaries of the planar map, each face traversed with the face on
/// its left. The disk boundary is closed off by a virtual outer vertex.
std::vector<std::vector<Dart>> faces(const TangleDiagram& d);

}  // namespace tangleinv

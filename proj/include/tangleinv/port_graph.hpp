#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tangleinv/diagram.hpp"

namespace tangleinv {

enum class NodeKind : std::uint8_t { Crossing, Trivalent, Fourvalent, Boundary };

/// A half-edge: local end `index` at node `node`.
struct Slot {
  int node = -1;
  int index = -1;
  bool valid() const noexcept { return node >= 0; }
  auto operator<=>(const Slot&) const = default;
};

/// Combinatorial map carrier for a TangleDiagram. Nodes have counterclockwise
/// slot lists; each connected slot points at its partner. Edges remember the
/// label they came from (a hint, reused when converting back) and whether
/// they are thick. The disk boundary is one Boundary node whose slots are
/// bottom left-to-right followed by top left-to-right.
class PortGraph {
 public:
  struct WireTarget {
    int local;    // slot of the node being eliminated
    Slot target;  // another slot of the same node, or an unconnected slot elsewhere
  };

  static PortGraph from_diagram(const TangleDiagram& d);
  TangleDiagram to_diagram() const;

  int add_node(NodeKind kind, int degree);
  int add_boundary(int bottom_count, int top_count);
  void connect(Slot a, Slot b, Label hint = 0, bool thick = false);
  void disconnect(Slot a);
  /// Removes `node`; every listed wire joins the edge at `local` through to
  /// `target`. Edges at unlisted slots are dropped. Closed loops produced by
  /// wires become circles.
  void eliminate(int node, std::span<const WireTarget> wires);
  void add_circle(Label hint = 0, bool thick = false) { circles_.push_back({hint, thick}); }

  Slot partner(Slot s) const { return nodes_[s.node].partner[s.index]; }
  bool connected(Slot s) const { return partner(s).valid(); }
  Label hint(Slot s) const { return nodes_[s.node].hint[s.index]; }
  bool thick(Slot s) const { return nodes_[s.node].thick[s.index]; }
  void set_thick(Slot s, bool value);

  int node_count() const noexcept { return static_cast<int>(nodes_.size()); }
  NodeKind kind(int node) const { return nodes_[node].kind; }
  int degree(int node) const { return static_cast<int>(nodes_[node].partner.size()); }
  bool alive(int node) const { return nodes_[node].alive; }
  int boundary_node() const noexcept { return boundary_; }
  int bottom_count() const noexcept { return bottom_count_; }
  int circle_count() const noexcept { return static_cast<int>(circles_.size()); }

  /// Slot of the n-th occurrence (text order) of a label.
  Slot slot_of(const Dart& dart) const;
  Dart dart_of(Slot s) const;

  /// Counterclockwise successor/predecessor of a slot around its node. For
  /// the boundary node the rotation is the one seen from the outside of the
  /// disk: top left-to-right, then bottom right-to-left.
  Slot next_ccw(Slot s) const;
  Slot prev_ccw(Slot s) const;

  /// Darts traced with the face on the left: next = prev_ccw(partner(d)).
  std::vector<std::vector<Slot>> faces() const;
  /// Connected components of live nodes with at least one slot.
  std::vector<int> component_of_nodes(int* count) const;
  /// V - E + F == 2 for every component (sphere with the outside collapsed).
  bool planar() const;

 private:
  struct Node {
    NodeKind kind{};
    bool alive = true;
    std::vector<Slot> partner;
    std::vector<Label> hint;
    std::vector<char> thick;
  };
  int rotation_position(Slot s) const;
  Slot rotation_at(int node, int position) const;

  std::vector<Node> nodes_;
  std::vector<std::pair<Label, bool>> circles_;
  int boundary_ = -1;
  int bottom_count_ = 0;
};

}  // namespace tangleinv

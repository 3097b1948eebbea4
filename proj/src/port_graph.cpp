#include "tangleinv/port_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tangleinv/error.hpp"

namespace tangleinv {

int PortGraph::add_node(NodeKind kind, int degree) {
  Node node;
  node.kind = kind;
  node.partner.assign(degree, Slot{});
  node.hint.assign(degree, 0);
  node.thick.assign(degree, 0);
  nodes_.push_back(std::move(node));
  return static_cast<int>(nodes_.size()) - 1;
}

int PortGraph::add_boundary(int bottom_count, int top_count) {
  const int id = add_node(NodeKind::Boundary, bottom_count + top_count);
  if (boundary_ < 0) {
    boundary_ = id;
    bottom_count_ = bottom_count;
  }
  return id;
}

void PortGraph::connect(Slot a, Slot b, Label hint, bool thick) {
  if (connected(a) || connected(b)) throw DomainError("internal: connecting an occupied slot");
  if (a == b) throw DomainError("internal: slot connected to itself");
  for (Slot s : {a, b}) {
    nodes_[s.node].hint[s.index] = hint;
    nodes_[s.node].thick[s.index] = thick ? 1 : 0;
  }
  nodes_[a.node].partner[a.index] = b;
  nodes_[b.node].partner[b.index] = a;
}

void PortGraph::disconnect(Slot a) {
  const Slot b = partner(a);
  nodes_[a.node].partner[a.index] = Slot{};
  if (b.valid()) nodes_[b.node].partner[b.index] = Slot{};
}

void PortGraph::set_thick(Slot s, bool value) {
  nodes_[s.node].thick[s.index] = value ? 1 : 0;
  const Slot p = partner(s);
  if (p.valid()) nodes_[p.node].thick[p.index] = value ? 1 : 0;
}

void PortGraph::eliminate(int node, std::span<const WireTarget> wires) {
  std::vector<char> wired(degree(node), 0);
  for (const auto& w : wires) wired[w.local] = 1;
  for (int i = 0; i < degree(node); ++i) {
    if (wired[i]) continue;
    const Slot s{node, i};
    if (connected(s)) disconnect(s);
  }
  std::vector<char> done(degree(node), 0);
  for (const auto& w : wires) {
    const Slot i{node, w.local};
    if (done[w.local]) continue;
    done[w.local] = 1;
    const Slot x = partner(i);
    if (!x.valid()) throw DomainError("internal: wiring an unconnected slot");
    const Label h = hint(i);
    const bool t = thick(i);
    if (w.target.node == node) {
      done[w.target.index] = 1;
      const Slot y = partner(w.target);
      if (!y.valid()) throw DomainError("internal: wiring an unconnected slot");
      if (x == w.target) {
        disconnect(i);
        circles_.push_back({h, t});
        continue;
      }
      const Label hy = hint(w.target);
      const bool ty = thick(w.target);
      disconnect(i);
      disconnect(w.target);
      connect(x, y, h != 0 ? h : hy, t || ty);
    } else {
      disconnect(i);
      connect(x, w.target, h, t);
    }
  }
  nodes_[node].alive = false;
  if (node == boundary_) boundary_ = -1;
}

PortGraph PortGraph::from_diagram(const TangleDiagram& d) {
  PortGraph g;
  std::map<Label, std::vector<Slot>> where;
  for (const auto& x : d.crossings) {
    const int id = g.add_node(NodeKind::Crossing, 4);
    for (int i = 0; i < 4; ++i) where[x.ends[i]].push_back({id, i});
  }
  for (const auto& v : d.trivalent) {
    const int id = g.add_node(NodeKind::Trivalent, 3);
    for (int i = 0; i < 3; ++i) where[v.ends[i]].push_back({id, i});
  }
  for (const auto& f : d.fourvalent) {
    const int id = g.add_node(NodeKind::Fourvalent, 4);
    for (int i = 0; i < 4; ++i) where[f.ends[i]].push_back({id, i});
  }
  const int b = g.add_boundary(d.m(), d.n());
  for (int i = 0; i < d.m(); ++i) where[d.bottom[i]].push_back({b, i});
  for (int i = 0; i < d.n(); ++i) where[d.top[i]].push_back({b, d.m() + i});
  for (const auto& [label, slots] : where) {
    if (slots.size() != 2)
      throw ValidationError("label " + std::to_string(label) + " occurs " +
                            std::to_string(slots.size()) + " time(s) (expected 2)");
    g.connect(slots[0], slots[1], label, d.thick.count(label) > 0);
  }
  for (Label c : d.circles) g.add_circle(c, d.thick.count(c) > 0);
  return g;
}

TangleDiagram PortGraph::to_diagram() const {
  // Node listing order is node id order within each kind.
  std::vector<int> order;
  for (NodeKind k : {NodeKind::Crossing, NodeKind::Trivalent, NodeKind::Fourvalent, NodeKind::Boundary})
    for (int i = 0; i < node_count(); ++i)
      if (alive(i) && kind(i) == k) order.push_back(i);

  std::map<Slot, Label> label_of;
  std::set<Label> used;
  std::vector<std::pair<Slot, Slot>> pending;
  Label max_hint = 0;
  for (const auto& n : nodes_)
    for (Label h : n.hint) max_hint = std::max(max_hint, h);
  for (const auto& c : circles_) max_hint = std::max(max_hint, c.first);

  for (int id : order) {
    for (int i = 0; i < degree(id); ++i) {
      const Slot s{id, i};
      const Slot p = partner(s);
      if (!p.valid()) throw DomainError("internal: dangling slot in port graph");
      if (!alive(p.node)) throw DomainError("internal: edge into eliminated node");
      if (label_of.count(s)) continue;
      const Label h = hint(s);
      if (h > 0 && !used.count(h)) {
        used.insert(h);
        label_of[s] = h;
        label_of[p] = h;
      } else {
        label_of[s] = 0;
        label_of[p] = 0;
        pending.push_back({s, p});
      }
    }
  }
  std::vector<Label> circle_labels(circles_.size(), 0);
  std::vector<std::size_t> circle_pending;
  for (std::size_t i = 0; i < circles_.size(); ++i) {
    const Label h = circles_[i].first;
    if (h > 0 && !used.count(h)) {
      used.insert(h);
      circle_labels[i] = h;
    } else {
      circle_pending.push_back(i);
    }
  }
  Label next = max_hint + 1;
  for (auto& [s, p] : pending) {
    while (used.count(next)) ++next;
    used.insert(next);
    label_of[s] = next;
    label_of[p] = next;
  }
  for (std::size_t i : circle_pending) {
    while (used.count(next)) ++next;
    used.insert(next);
    circle_labels[i] = next;
  }

  TangleDiagram d;
  for (int id : order) {
    auto lab = [&](int i) { return label_of.at(Slot{id, i}); };
    for (int i = 0; i < degree(id); ++i)
      if (thick(Slot{id, i})) d.thick.insert(lab(i));
    switch (kind(id)) {
      case NodeKind::Crossing:
        d.crossings.push_back({{lab(0), lab(1), lab(2), lab(3)}});
        break;
      case NodeKind::Trivalent:
        d.trivalent.push_back({{lab(0), lab(1), lab(2)}});
        break;
      case NodeKind::Fourvalent:
        d.fourvalent.push_back({{lab(0), lab(1), lab(2), lab(3)}});
        break;
      case NodeKind::Boundary:
        if (id != boundary_) throw DomainError("internal: stray boundary node");
        for (int i = 0; i < degree(id); ++i) (i < bottom_count_ ? d.bottom : d.top).push_back(lab(i));
        break;
    }
  }
  for (std::size_t i = 0; i < circles_.size(); ++i) {
    d.circles.push_back(circle_labels[i]);
    if (circles_[i].second) d.thick.insert(circle_labels[i]);
  }
  return d;
}

Slot PortGraph::slot_of(const Dart& dart) const {
  int seen = 0;
  for (NodeKind k : {NodeKind::Crossing, NodeKind::Trivalent, NodeKind::Fourvalent, NodeKind::Boundary})
    for (int id = 0; id < node_count(); ++id) {
      if (!alive(id) || kind(id) != k) continue;
      for (int i = 0; i < degree(id); ++i)
        if (hint(Slot{id, i}) == dart.label && seen++ == dart.side) return Slot{id, i};
    }
  throw DomainError("no occurrence " + std::to_string(dart.side) + " of label " +
                    std::to_string(dart.label));
}

Dart PortGraph::dart_of(Slot s) const {
  const Label label = hint(s);
  for (int side = 0; side < 2; ++side)
    if (slot_of(Dart{label, side}) == s) return Dart{label, side};
  throw DomainError("internal: slot has no dart");
}

int PortGraph::rotation_position(Slot s) const {
  if (kind(s.node) != NodeKind::Boundary) return s.index;
  const int bottom = s.node == boundary_ ? bottom_count_ : 0;
  // Outside view: top left-to-right, then bottom right-to-left.
  if (s.index >= bottom) return s.index - bottom;
  return degree(s.node) - 1 - s.index;
}

Slot PortGraph::rotation_at(int node, int position) const {
  if (kind(node) != NodeKind::Boundary) return Slot{node, position};
  const int bottom = node == boundary_ ? bottom_count_ : 0;
  const int top = degree(node) - bottom;
  if (position < top) return Slot{node, bottom + position};
  return Slot{node, degree(node) - 1 - position};
}

Slot PortGraph::next_ccw(Slot s) const {
  const int deg = degree(s.node);
  return rotation_at(s.node, (rotation_position(s) + 1) % deg);
}

Slot PortGraph::prev_ccw(Slot s) const {
  const int deg = degree(s.node);
  return rotation_at(s.node, (rotation_position(s) + deg - 1) % deg);
}

std::vector<std::vector<Slot>> PortGraph::faces() const {
  std::map<Slot, char> visited;
  std::vector<std::vector<Slot>> out;
  for (int id = 0; id < node_count(); ++id) {
    if (!alive(id)) continue;
    for (int i = 0; i < degree(id); ++i) {
      const Slot start{id, i};
      if (!connected(start) || visited.count(start)) continue;
      std::vector<Slot> face;
      Slot d = start;
      do {
        visited[d] = 1;
        face.push_back(d);
        d = prev_ccw(partner(d));
      } while (d != start);
      out.push_back(std::move(face));
    }
  }
  return out;
}

std::vector<int> PortGraph::component_of_nodes(int* count) const {
  std::vector<int> parent(node_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int id = 0; id < node_count(); ++id) {
    if (!alive(id)) continue;
    for (int i = 0; i < degree(id); ++i) {
      const Slot p = partner(Slot{id, i});
      if (p.valid()) parent[find(id)] = find(p.node);
    }
  }
  std::vector<int> comp(node_count(), -1);
  std::map<int, int> ids;
  for (int id = 0; id < node_count(); ++id) {
    if (!alive(id) || degree(id) == 0) continue;
    const int r = find(id);
    auto [it, inserted] = ids.emplace(r, static_cast<int>(ids.size()));
    comp[id] = it->second;
  }
  if (count) *count = static_cast<int>(ids.size());
  return comp;
}

bool PortGraph::planar() const {
  int components = 0;
  const auto comp = component_of_nodes(&components);
  std::vector<long> chi(components, 0);
  for (int id = 0; id < node_count(); ++id) {
    if (comp[id] < 0) continue;
    chi[comp[id]] += 1;
    for (int i = 0; i < degree(id); ++i)
      if (!connected(Slot{id, i})) return false;
  }
  std::vector<long> half_edges(components, 0);
  for (int id = 0; id < node_count(); ++id)
    if (comp[id] >= 0) half_edges[comp[id]] += degree(id);
  for (int c = 0; c < components; ++c) chi[c] -= half_edges[c] / 2;
  for (const auto& face : faces()) chi[comp[face.front().node]] += 1;
  return std::all_of(chi.begin(), chi.end(), [](long x) { return x == 2; });
}

}  // namespace tangleinv

#include "tangleinv/enhanced.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <thread>

#include "tangleinv/error.hpp"
#include "tangleinv/pairing.hpp"
#include "tangleinv/port_graph.hpp"

namespace tangleinv {

namespace {

struct Walk {
  std::vector<Label> labels;
  std::vector<Slot> crossing_entries;  // slot at which each crossing is entered
  Slot end;
};

// Follows the strand leaving `start` straight through crossings.
Walk walk_from(const PortGraph& g, Slot start) {
  Walk w;
  Slot cur = start;
  while (true) {
    w.labels.push_back(g.hint(cur));
    const Slot next = g.partner(cur);
    if (g.kind(next.node) != NodeKind::Crossing) {
      w.end = next;
      return w;
    }
    w.crossing_entries.push_back(next);
    cur = Slot{next.node, (next.index + 2) % 4};
  }
}

int first_trivalent_node(const TangleDiagram& d) { return static_cast<int>(d.crossings.size()); }

// Runs fn(i) for i in [0, count) on up to `threads` workers; exceptions are
// rethrown in index order.
template <class Fn>
void parallel_for(std::size_t count, int threads, Fn fn) {
  threads = std::max(1, std::min<int>(threads, static_cast<int>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < count; i += threads) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

std::vector<GraphEdge> graph_edges(const TangleDiagram& d) {
  const PortGraph g = PortGraph::from_diagram(d);
  const int base = first_trivalent_node(d);
  std::set<Slot> seen;
  std::vector<GraphEdge> out;
  for (int t = 0; t < static_cast<int>(d.trivalent.size()); ++t) {
    for (int i = 0; i < 3; ++i) {
      const Slot start{base + t, i};
      if (seen.count(start)) continue;
      seen.insert(start);
      const Walk w = walk_from(g, start);
      GraphEdge e;
      e.labels = w.labels;
      e.from = t;
      e.has_crossings = !w.crossing_entries.empty();
      switch (g.kind(w.end.node)) {
        case NodeKind::Trivalent:
          seen.insert(w.end);
          e.to = w.end.node - base;
          e.kind = e.to == t ? GraphEdge::Kind::Loop : GraphEdge::Kind::Internal;
          break;
        case NodeKind::Boundary:
          e.kind = GraphEdge::Kind::External;
          break;
        default:
          e.kind = GraphEdge::Kind::Other;
          break;
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::string to_string(const Enhancement& rho) {
  std::string s = "{";
  for (std::size_t i = 0; i < rho.thick.size(); ++i) s += (i ? "," : "") + std::to_string(rho.thick[i]);
  return s + "}";
}

std::string enhancement_problem(const TangleDiagram& d, const Enhancement& rho) {
  const std::set<Label> thick(rho.thick.begin(), rho.thick.end());
  if (thick.size() != rho.thick.size()) return "repeated thick label";
  std::set<Label> covered;
  std::vector<int> per_vertex(d.trivalent.size(), 0);
  for (const auto& e : graph_edges(d)) {
    const auto n = std::count_if(e.labels.begin(), e.labels.end(), [&](Label l) { return thick.count(l) > 0; });
    if (n == 0) continue;
    const std::string name = "graph edge through label " + std::to_string(e.labels.front());
    if (n != static_cast<long>(e.labels.size())) return name + " is only partly thick";
    if (e.kind == GraphEdge::Kind::Loop) return name + " is a self-loop and cannot be thick";
    if (e.kind != GraphEdge::Kind::Internal) return name + " is external and cannot be thick";
    ++per_vertex[e.from];
    ++per_vertex[e.to];
    covered.insert(e.labels.begin(), e.labels.end());
  }
  for (Label l : thick)
    if (!covered.count(l)) return "thick label " + std::to_string(l) + " is not on a graph edge";
  for (std::size_t v = 0; v < per_vertex.size(); ++v)
    if (per_vertex[v] != 1)
      return "trivalent vertex #" + std::to_string(v + 1) + " meets " + std::to_string(per_vertex[v]) +
             " thick edges (expected 1)";
  return {};
}

std::vector<Enhancement> enumerate_enhancements(const TangleDiagram& d) {
  const auto edges = graph_edges(d);
  const int vertices = static_cast<int>(d.trivalent.size());
  std::vector<std::vector<int>> candidates(vertices);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i)
    if (edges[i].kind == GraphEdge::Kind::Internal) {
      candidates[edges[i].from].push_back(i);
      candidates[edges[i].to].push_back(i);
    }
  std::vector<Enhancement> out;
  std::vector<char> matched(vertices, 0);
  std::vector<int> chosen;
  auto rec = [&](auto&& self) -> void {
    int v = 0;
    while (v < vertices && matched[v]) ++v;
    if (v == vertices) {
      Enhancement rho;
      for (int e : chosen) rho.thick.insert(rho.thick.end(), edges[e].labels.begin(), edges[e].labels.end());
      std::sort(rho.thick.begin(), rho.thick.end());
      out.push_back(std::move(rho));
      return;
    }
    for (int e : candidates[v]) {
      const int other = edges[e].from == v ? edges[e].to : edges[e].from;
      if (matched[other]) continue;
      matched[v] = matched[other] = 1;
      chosen.push_back(e);
      self(self);
      chosen.pop_back();
      matched[v] = matched[other] = 0;
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

Enhancement recorded_enhancement(const TangleDiagram& d) { return Enhancement{{d.thick.begin(), d.thick.end()}}; }

namespace {

// Moves the crossing nearest to the end vertex of a thick edge past that
// vertex. The crossing strand S-N then crosses the two thin edges c and d.
// S-N keeps its thickness, so a thick/thick crossing (including a thick edge
// crossing itself) becomes two thick/thin ones and repeated slides terminate.
void slide_off(PortGraph& g, Slot entry) {
  const int x = entry.node;
  const int w = entry.index;
  const Slot W{x, w}, S{x, (w + 1) % 4}, E{x, (w + 2) % 4}, N{x, (w + 3) % 4};
  const Slot ve = g.partner(E);
  if (g.kind(ve.node) != NodeKind::Trivalent) throw DomainError("internal: thick edge does not end at a vertex");
  const int v = ve.node;
  const Slot c{v, (ve.index + 1) % 3}, d{v, (ve.index + 2) % 3};
  const bool chain_under = w % 2 == 0;

  const int vp = g.add_node(NodeKind::Trivalent, 3);
  const int y1 = g.add_node(NodeKind::Crossing, 4);
  const int y2 = g.add_node(NodeKind::Crossing, 4);
  // Local slots of Y in ccw order (inner, strand-from, outer, strand-to),
  // rotated so the under-strand sits at indices 0 and 2.
  const std::array<int, 4> pos = chain_under ? std::array<int, 4>{0, 1, 2, 3} : std::array<int, 4>{3, 0, 1, 2};
  auto at = [&](int node, int role) { return Slot{node, pos[role]}; };

  const std::array<Slot, 5> old_slots{W, S, N, c, d};
  const std::array<Slot, 5> new_slots{Slot{vp, 0}, at(y1, 1), at(y2, 3), at(y1, 2), at(y2, 2)};
  std::array<Slot, 5> partner;
  std::array<Label, 5> hint;
  std::array<bool, 5> thick;
  for (int i = 0; i < 5; ++i) {
    partner[i] = g.partner(old_slots[i]);
    hint[i] = g.hint(old_slots[i]);
    thick[i] = g.thick(old_slots[i]);
  }
  g.eliminate(x, {});
  g.eliminate(v, {});
  std::array<char, 5> done{};
  for (int i = 0; i < 5; ++i) {
    if (done[i]) continue;
    done[i] = 1;
    const auto it = std::find(old_slots.begin(), old_slots.end(), partner[i]);
    if (it != old_slots.end()) {
      const auto j = static_cast<std::size_t>(it - old_slots.begin());
      done[j] = 1;
      g.connect(new_slots[i], new_slots[j], hint[i], thick[i]);
    } else {
      g.connect(new_slots[i], partner[i], hint[i], thick[i]);
    }
  }
  g.connect(Slot{vp, 1}, at(y1, 0));
  g.connect(Slot{vp, 2}, at(y2, 0));
  g.connect(at(y1, 3), at(y2, 1), 0, thick[1]);
}

// First thick edge still carrying a crossing: the slot where its last
// crossing (nearest the end vertex) is entered.
bool find_slide(const PortGraph& g, Slot* entry) {
  for (int id = 0; id < g.node_count(); ++id) {
    if (!g.alive(id) || g.kind(id) != NodeKind::Trivalent) continue;
    for (int i = 0; i < 3; ++i) {
      const Slot s{id, i};
      if (!g.thick(s)) continue;
      const Walk w = walk_from(g, s);
      if (w.crossing_entries.empty()) continue;
      *entry = w.crossing_entries.back();
      return true;
    }
  }
  return false;
}

void contract_edge(PortGraph& g, Slot ue) {
  const Slot ve = g.partner(ue);
  const int u = ue.node;
  const int v = ve.node;
  if (u == v) throw DomainError("thick self-loop");
  const std::array<Slot, 4> outer{Slot{u, (ue.index + 1) % 3}, Slot{u, (ue.index + 2) % 3},
                                  Slot{v, (ve.index + 1) % 3}, Slot{v, (ve.index + 2) % 3}};
  std::array<Slot, 4> partner;
  std::array<Label, 4> hint;
  std::array<bool, 4> thick;
  for (int i = 0; i < 4; ++i) {
    partner[i] = g.partner(outer[i]);
    hint[i] = g.hint(outer[i]);
    thick[i] = g.thick(outer[i]);
  }
  g.eliminate(u, {});
  g.eliminate(v, {});
  const int f = g.add_node(NodeKind::Fourvalent, 4);
  std::array<char, 4> done{};
  for (int i = 0; i < 4; ++i) {
    if (done[i]) continue;
    done[i] = 1;
    const auto it = std::find(outer.begin(), outer.end(), partner[i]);
    if (it != outer.end()) {
      const auto j = static_cast<std::size_t>(it - outer.begin());
      done[j] = 1;
      g.connect(Slot{f, i}, Slot{f, static_cast<int>(j)}, hint[i], thick[i]);
    } else {
      g.connect(Slot{f, i}, partner[i], hint[i], thick[i]);
    }
  }
}

}  // namespace

TangleDiagram contract(const TangleDiagram& d, const Enhancement& rho) {
  if (const auto why = enhancement_problem(d, rho); !why.empty()) throw DomainError("invalid enhancement: " + why);
  TangleDiagram marked = d;
  marked.thick = std::set<Label>(rho.thick.begin(), rho.thick.end());
  PortGraph g = PortGraph::from_diagram(marked);
  Slot entry;
  while (find_slide(g, &entry)) slide_off(g, entry);
  // Contract in vertex order so the resulting F lines are deterministic.
  for (int id = 0; id < g.node_count(); ++id) {
    if (!g.alive(id) || g.kind(id) != NodeKind::Trivalent) continue;
    for (int i = 0; i < 3; ++i)
      if (g.thick(Slot{id, i})) {
        contract_edge(g, Slot{id, i});
        break;
      }
  }
  TangleDiagram out = g.to_diagram();
  if (!out.thick.empty() || !out.trivalent.empty()) throw DomainError("internal: contraction left thick structure");
  return out;
}

std::string to_string(StatePattern p) {
  switch (p) {
    case StatePattern::TMinus:
      return "T-";
    case StatePattern::TPlus:
      return "T+";
    case StatePattern::TZero:
      return "T0";
    case StatePattern::TInf:
      return "Tinf";
  }
  return "?";
}

std::string to_string(const StateAssignment& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + to_string(s[i]);
  return out;
}

std::size_t state_count(const TangleDiagram& f) {
  if (f.fourvalent.size() > 24) throw DomainError("too many 4-valent vertices for state expansion");
  return std::size_t{1} << (2 * f.fourvalent.size());
}

StateAssignment state_at(const TangleDiagram& f, std::size_t index) {
  const std::size_t n = f.fourvalent.size();
  StateAssignment s(n);
  for (std::size_t v = 0; v < n; ++v) s[v] = static_cast<StatePattern>((index >> (2 * (n - 1 - v))) & 3u);
  return s;
}

TangleDiagram apply_state(const TangleDiagram& f, const StateAssignment& s) {
  if (s.size() != f.fourvalent.size()) throw DomainError("state length does not match the 4-valent vertex count");
  if (!f.trivalent.empty()) throw DomainError("states need a diagram without trivalent vertices");
  std::map<Label, Label> parent;
  for (Label l : f.labels()) parent[l] = l;
  auto find = [&](Label x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto join = [&](Label a, Label b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  TangleDiagram out;
  out.crossings = f.crossings;
  for (std::size_t v = 0; v < s.size(); ++v) {
    const auto& e = f.fourvalent[v].ends;
    switch (s[v]) {
      case StatePattern::TMinus:
        out.crossings.push_back({{e[0], e[1], e[2], e[3]}});
        break;
      case StatePattern::TPlus:
        out.crossings.push_back({{e[1], e[2], e[3], e[0]}});
        break;
      case StatePattern::TZero:
        join(e[0], e[1]);
        join(e[2], e[3]);
        break;
      case StatePattern::TInf:
        join(e[0], e[3]);
        join(e[1], e[2]);
        break;
    }
  }
  std::set<Label> present;
  for (auto& x : out.crossings)
    for (Label& l : x.ends) present.insert(l = find(l));
  for (Label l : f.bottom) present.insert(out.bottom.emplace_back(find(l)));
  for (Label l : f.top) present.insert(out.top.emplace_back(find(l)));
  out.circles = f.circles;
  std::set<Label> closed;
  for (const auto& q : f.fourvalent)
    for (Label l : q.ends)
      if (!present.count(find(l))) closed.insert(find(l));
  out.circles.insert(out.circles.end(), closed.begin(), closed.end());
  return out;
}

std::vector<std::pair<StateAssignment, TangleDiagram>> expand_states(const TangleDiagram& f) {
  std::vector<std::pair<StateAssignment, TangleDiagram>> out;
  const std::size_t count = state_count(f);
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto s = state_at(f, i);
    auto d = apply_state(f, s);
    out.emplace_back(std::move(s), std::move(d));
  }
  return out;
}

namespace {

std::vector<LaurentPoly> state_polys(const TangleDiagram& g, const Enhancement& rho, int threads) {
  const TangleDiagram f = contract(g, rho);
  const std::size_t count = state_count(f);
  std::vector<LaurentPoly> polys(count);
  parallel_for(count, threads, [&](std::size_t i) { polys[i] = p_poly(apply_state(f, state_at(f, i))); });
  return polys;
}

void require_unmarked(const TangleDiagram& g) {
  if (!g.thick.empty()) throw DomainError("the summed invariant enumerates enhancements; the diagram must not fix a thick set");
}

}  // namespace

LaurentPoly invariant_rho_poly(const TangleDiagram& g, const Enhancement& rho, int threads) {
  LaurentPoly sum;
  for (const auto& p : state_polys(g, rho, threads)) sum += p;
  return sum;
}

std::vector<std::complex<double>> invariant_rho_values(const TangleDiagram& g, const Enhancement& rho,
                                                       const std::vector<RootIndex>& ks, int threads) {
  const auto polys = state_polys(g, rho, threads);
  std::vector<std::complex<double>> out;
  for (RootIndex k : ks) {
    std::complex<double> sum = 0.0;
    for (const auto& p : polys) sum += lp_eval_root(p, k);
    out.push_back(sum);
  }
  return out;
}

std::complex<double> invariant_rho(const TangleDiagram& g, const Enhancement& rho, RootIndex k, int threads) {
  return invariant_rho_values(g, rho, {k}, threads).front();
}

LaurentPoly invariant_total_poly(const TangleDiagram& g, int threads) {
  require_unmarked(g);
  LaurentPoly sum;
  for (const auto& rho : enumerate_enhancements(g)) sum += invariant_rho_poly(g, rho, threads);
  return sum;
}

std::vector<std::complex<double>> invariant_total_values(const TangleDiagram& g, const std::vector<RootIndex>& ks,
                                                         int threads) {
  require_unmarked(g);
  std::vector<std::complex<double>> out(ks.size(), 0.0);
  for (const auto& rho : enumerate_enhancements(g)) {
    const auto values = invariant_rho_values(g, rho, ks, threads);
    for (std::size_t i = 0; i < ks.size(); ++i) out[i] += values[i];
  }
  return out;
}

std::complex<double> invariant_total(const TangleDiagram& g, RootIndex k, int threads) {
  return invariant_total_values(g, {k}, threads).front();
}

}  // namespace tangleinv

#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "tangleinv/diagram.hpp"
#include "tangleinv/laurent.hpp"

namespace tangleinv {

/// An edge of the underlying graph: the chain of diagram labels met when
/// walking from a trivalent vertex straight through crossings until the next
/// vertex or boundary point.
struct GraphEdge {
  enum class Kind { Internal, Loop, External, Other };
  std::vector<Label> labels;  // in walking order
  Kind kind = Kind::Other;
  int from = -1;  // trivalent vertex index of the start
  int to = -1;    // trivalent vertex index of the end, -1 if none
  bool has_crossings = false;
};

/// Graph edges starting or ending at a trivalent vertex, in order of first
/// appearance (vertex order, then slot order).
std::vector<GraphEdge> graph_edges(const TangleDiagram& g);

/// A thick-edge set: every diagram label lying on a thick graph edge, sorted.
struct Enhancement {
  std::vector<Label> thick;
  bool operator==(const Enhancement&) const = default;
  auto operator<=>(const Enhancement&) const = default;
};

std::string to_string(const Enhancement& rho);

/// Empty string when valid, otherwise the first violated rule.
std::string enhancement_problem(const TangleDiagram& g, const Enhancement& rho);

/// All thick-edge sets in which every trivalent vertex meets exactly one
/// thick edge; thick edges are internal, not self-loops. Sorted.
std::vector<Enhancement> enumerate_enhancements(const TangleDiagram& g);

/// The thick set recorded in the diagram itself (its T line).
Enhancement recorded_enhancement(const TangleDiagram& g);

/// Contracts every thick edge to a 4-valent vertex: with u read from the thick
/// edge as (e,a,b) and v as (e,c,d), both become F(a,b,c,d). Crossings lying
/// on a thick edge are first slid off past its end vertex. Throws DomainError
/// for an invalid enhancement.
TangleDiagram contract(const TangleDiagram& g, const Enhancement& rho);

enum class StatePattern { TMinus, TPlus, TZero, TInf };
using StateAssignment = std::vector<StatePattern>;

std::string to_string(StatePattern p);
std::string to_string(const StateAssignment& s);

/// 4^n for n four-valent vertices.
std::size_t state_count(const TangleDiagram& f);
/// The i-th assignment: base-4 digits of i, vertex 0 most significant, digits
/// in the order T-, T+, T0, Tinf.
StateAssignment state_at(const TangleDiagram& f, std::size_t index);
/// Replaces each F(a,b,c,d): T0 joins a-b and c-d, Tinf joins a-d and b-c,
/// T- is the crossing with under-pair (a,c), T+ the one with under-pair (b,d).
TangleDiagram apply_state(const TangleDiagram& f, const StateAssignment& s);
std::vector<std::pair<StateAssignment, TangleDiagram>> expand_states(const TangleDiagram& f);

/// Sum of P over the states of contract(g, rho), exact.
LaurentPoly invariant_rho_poly(const TangleDiagram& g, const Enhancement& rho, int threads = 1);
/// Sum of P(state)_k in state order, one value per requested k.
std::vector<std::complex<double>> invariant_rho_values(const TangleDiagram& g, const Enhancement& rho,
                                                       const std::vector<RootIndex>& ks, int threads = 1);
std::complex<double> invariant_rho(const TangleDiagram& g, const Enhancement& rho, RootIndex k, int threads = 1);

/// Sums over enumerate_enhancements(g); g must carry no thick set.
LaurentPoly invariant_total_poly(const TangleDiagram& g, int threads = 1);
std::vector<std::complex<double>> invariant_total_values(const TangleDiagram& g, const std::vector<RootIndex>& ks,
                                                         int threads = 1);
std::complex<double> invariant_total(const TangleDiagram& g, RootIndex k, int threads = 1);

}  // namespace tangleinv

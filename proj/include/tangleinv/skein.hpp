#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tangleinv/diagram.hpp"
#include "tangleinv/laurent.hpp"

namespace tangleinv {

/// Crossingless matching of the m+n boundary points. Positions are circular
/// and 1-based: 1..m are the bottom points left-to-right, m+1..m+n the top
/// points right-to-left. Pairs are stored (a < b) sorted by a.
struct FlatTangle {
  int m = 0;
  int n = 0;
  std::vector<std::pair<int, int>> pairs;

  /// partner[p-1] = q-1 for every pair (p,q).
  std::vector<int> partners() const;
  bool operator==(const FlatTangle&) const = default;
  auto operator<=>(const FlatTangle&) const = default;
};

std::string to_string(const FlatTangle& f);

/// Circular position (1-based) of bottom point i / top point j (0-based, left-to-right).
inline int bottom_position(int, int, int i) { return i + 1; }
inline int top_position(int m, int n, int j) { return m + n - j; }

class Basis {
 public:
  Basis(int m, int n, std::vector<FlatTangle> elements);
  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<FlatTangle>& elements() const noexcept { return elements_; }
  const FlatTangle& operator[](std::size_t i) const { return elements_[i]; }
  /// Index of the matching given as a 0-based partner array; -1 if absent
  /// (that is, if the matching crosses).
  int index_of(const std::string& partner_key) const;
  int index_of(const FlatTangle& f) const;

 private:
  int m_;
  int n_;
  std::vector<FlatTangle> elements_;
  std::unordered_map<std::string, int> index_;
};

/// Every non-crossing perfect matching, ordered lexicographically by pair
/// sequence. Throws DomainError when m + n is odd.
Basis enumerate_basis(int m, int n);
/// Shared, memoized basis.
std::shared_ptr<const Basis> basis_for(int m, int n);

struct CoordinateVector {
  std::shared_ptr<const Basis> basis;
  std::vector<LaurentPoly> coords;

  bool operator==(const CoordinateVector& other) const {
    return basis->m() == other.basis->m() && basis->n() == other.basis->n() && coords == other.coords;
  }
};

struct FlatResolution {
  FlatTangle matching;
  int circle_count = 0;
};

/// Matching and closed-loop count of a crossingless, vertex-free diagram.
FlatResolution resolve_flat(const TangleDiagram& d);

/// Skein class of a classical tangle diagram in the flat basis. Each crossing
/// (a,b,c,d) with under-strand a-c resolves to q * (a-b, c-d) + q^-1 * (a-d, b-c);
/// each closed loop contributes delta.
CoordinateVector bracket(const TangleDiagram& d);

/// Independent check of bracket(): enumerates all 2^c smoothing states one by
/// one, rebuilds each state as a flat diagram and scores it
/// q^(#A - #B) delta^(#loops).
CoordinateVector bracket_oracle(const TangleDiagram& d, int threads = 1);

CoordinateVector vector_bar(const CoordinateVector& v);

/// Multiplies every coordinate by p.
CoordinateVector scale(const CoordinateVector& v, const LaurentPoly& p);

}  // namespace tangleinv

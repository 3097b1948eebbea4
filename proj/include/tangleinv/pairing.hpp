#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "tangleinv/diagram.hpp"
#include "tangleinv/laurent.hpp"
#include "tangleinv/skein.hpp"

namespace tangleinv {

/// Matrix of the plat-closure form over the canonical basis: entry (i,j) is
/// delta^loops(i,j). Loop counts are stored; entries are built on demand.
class PairingMatrix {
 public:
  PairingMatrix(std::shared_ptr<const Basis> basis, std::vector<std::uint8_t> loops);
  const Basis& basis() const noexcept { return *basis_; }
  std::shared_ptr<const Basis> basis_ptr() const noexcept { return basis_; }
  std::size_t size() const noexcept { return basis_->size(); }
  int loops(std::size_t i, std::size_t j) const { return loops_[i * size() + j]; }
  LaurentPoly entry(std::size_t i, std::size_t j) const;
  int max_loops() const noexcept { return max_loops_; }

 private:
  std::shared_ptr<const Basis> basis_;
  std::vector<std::uint8_t> loops_;
  int max_loops_ = 0;
};

/// Closed loops in the plat closure of e_i (x) e_j: the (2m,2n) juxtaposition
/// with bottom points (2t-1,2t) and top points (2t-1,2t) joined, both counted
/// left-to-right.
int plat_loop_count(const FlatTangle& ei, const FlatTangle& ej);

/// Memoized per (m,n); safe under concurrent first use.
std::shared_ptr<const PairingMatrix> pairing_matrix(int m, int n);

/// [v, w] = v A w^t.
LaurentPoly pair(const CoordinateVector& v, const CoordinateVector& w);

/// P(D) = v(D) A bar(v(D))^t.
LaurentPoly p_poly(const TangleDiagram& d);
/// P(D) from an already computed skein class.
LaurentPoly p_poly(const CoordinateVector& v);
std::complex<double> p_eval(const TangleDiagram& d, RootIndex k);

}  // namespace tangleinv

#include "tangleinv/pairing.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "tangleinv/error.hpp"

namespace tangleinv {

PairingMatrix::PairingMatrix(std::shared_ptr<const Basis> basis, std::vector<std::uint8_t> loops)
    : basis_(std::move(basis)), loops_(std::move(loops)) {
  for (auto l : loops_) max_loops_ = std::max<int>(max_loops_, l);
}

LaurentPoly PairingMatrix::entry(std::size_t i, std::size_t j) const {
  return LaurentPoly::delta().pow(static_cast<unsigned>(loops(i, j)));
}

int plat_loop_count(const FlatTangle& ei, const FlatTangle& ej) {
  if (ei.m != ej.m || ei.n != ej.n) throw DomainError("plat_loop_count: flat tangles of different shapes");
  const int m = ei.m;
  const int n = ei.n;
  // Points: bottom 0..2m-1 then top 2m..2m+2n-1, left-to-right.
  const int total = 2 * (m + n);
  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = total;
  auto join = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  };
  auto point = [&](int position, int shift_bottom, int shift_top) {
    // Circular position 1..m+n to a point of the juxtaposition.
    if (position <= m) return shift_bottom + position - 1;
    return 2 * m + shift_top + (m + n - position);
  };
  for (auto [a, b] : ei.pairs) join(point(a, 0, 0), point(b, 0, 0));
  for (auto [a, b] : ej.pairs) join(point(a, m, n), point(b, m, n));
  for (int t = 0; t < m; ++t) join(2 * t, 2 * t + 1);
  for (int t = 0; t < n; ++t) join(2 * m + 2 * t, 2 * m + 2 * t + 1);
  return components;
}

std::shared_ptr<const PairingMatrix> pairing_matrix(int m, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const PairingMatrix>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({m, n});
    if (it != cache.end()) return it->second;
  }
  auto basis = basis_for(m, n);
  const std::size_t p = basis->size();
  std::vector<std::uint8_t> loops(p * p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      loops[i * p + j] = static_cast<std::uint8_t>(plat_loop_count((*basis)[i], (*basis)[j]));
  auto a = std::make_shared<const PairingMatrix>(basis, std::move(loops));
  std::lock_guard lock(mu);
  return cache.emplace(std::make_pair(m, n), std::move(a)).first->second;
}

LaurentPoly pair(const CoordinateVector& v, const CoordinateVector& w) {
  if (v.basis->m() != w.basis->m() || v.basis->n() != w.basis->n())
    throw DomainError("pairing vectors of different shapes");
  const auto a = pairing_matrix(v.basis->m(), v.basis->n());
  const std::size_t p = a->size();
  // Group products by loop count: sum_l delta^l * sum_{loops(i,j)=l} v_i w_j.
  std::vector<LaurentPoly> by_loops(a->max_loops() + 1);
  for (std::size_t i = 0; i < p; ++i) {
    if (v.coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < p; ++j) {
      if (w.coords[j].is_zero()) continue;
      by_loops[a->loops(i, j)] += v.coords[i] * w.coords[j];
    }
  }
  LaurentPoly out;
  LaurentPoly power(1);
  for (std::size_t l = 0; l < by_loops.size(); ++l) {
    if (!by_loops[l].is_zero()) out += by_loops[l] * power;
    power *= LaurentPoly::delta();
  }
  return out;
}

LaurentPoly p_poly(const CoordinateVector& v) { return pair(v, vector_bar(v)); }

LaurentPoly p_poly(const TangleDiagram& d) {
  if (d.has_graph_vertices()) throw DomainError("P(D) needs a classical tangle diagram (no V or F nodes)");
  return p_poly(bracket(d));
}

std::complex<double> p_eval(const TangleDiagram& d, RootIndex k) { return lp_eval_root(p_poly(d), k); }

}  // namespace tangleinv

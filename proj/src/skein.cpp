#include "tangleinv/skein.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "tangleinv/error.hpp"

namespace tangleinv {

std::vector<int> FlatTangle::partners() const {
  std::vector<int> p(m + n, -1);
  for (auto [a, b] : pairs) {
    p[a - 1] = b - 1;
    p[b - 1] = a - 1;
  }
  return p;
}

std::string to_string(const FlatTangle& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.pairs.size(); ++i) {
    if (i) s += ",";
    s += "(" + std::to_string(f.pairs[i].first) + "," + std::to_string(f.pairs[i].second) + ")";
  }
  return s + "}";
}

namespace {

std::string key_of(const std::vector<int>& partner) {
  std::string k(partner.size(), '\0');
  for (std::size_t i = 0; i < partner.size(); ++i) k[i] = static_cast<char>(partner[i]);
  return k;
}

// Non-crossing matchings of positions [lo, hi) appended via callback recursion.
void enumerate_all(int count, std::vector<std::vector<std::pair<int, int>>>& out) {
  std::vector<std::pair<int, int>> current;
  std::function<void(std::vector<std::pair<int, int>>)> rec;
  // Work list of open intervals [lo, hi).
  rec = [&](std::vector<std::pair<int, int>> intervals) {
    while (!intervals.empty() && intervals.back().first >= intervals.back().second) intervals.pop_back();
    if (intervals.empty()) {
      auto pairs = current;
      std::sort(pairs.begin(), pairs.end());
      out.push_back(std::move(pairs));
      return;
    }
    auto [lo, hi] = intervals.back();
    intervals.pop_back();
    for (int j = lo + 1; j < hi; j += 2) {
      current.push_back({lo + 1, j + 1});
      auto next = intervals;
      next.push_back({j + 1, hi});
      next.push_back({lo + 1, j});
      rec(std::move(next));
      current.pop_back();
    }
  };
  rec({{0, count}});
}

}  // namespace

Basis::Basis(int m, int n, std::vector<FlatTangle> elements) : m_(m), n_(n), elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(key_of(elements_[i].partners()), static_cast<int>(i));
}

int Basis::index_of(const std::string& partner_key) const {
  auto it = index_.find(partner_key);
  return it == index_.end() ? -1 : it->second;
}

int Basis::index_of(const FlatTangle& f) const {
  if (f.m != m_ || f.n != n_) return -1;
  return index_of(key_of(f.partners()));
}

Basis enumerate_basis(int m, int n) {
  if (m < 0 || n < 0) throw DomainError("negative boundary count");
  if ((m + n) % 2 != 0) throw DomainError("m + n must be even, got m=" + std::to_string(m) + " n=" + std::to_string(n));
  std::vector<std::vector<std::pair<int, int>>> all;
  enumerate_all(m + n, all);
  std::sort(all.begin(), all.end());
  std::vector<FlatTangle> elements;
  elements.reserve(all.size());
  for (auto& pairs : all) elements.push_back(FlatTangle{m, n, std::move(pairs)});
  return Basis(m, n, std::move(elements));
}

std::shared_ptr<const Basis> basis_for(int m, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const Basis>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({m, n});
    if (it != cache.end()) return it->second;
  }
  auto b = std::make_shared<const Basis>(enumerate_basis(m, n));
  std::lock_guard lock(mu);
  return cache.emplace(std::make_pair(m, n), std::move(b)).first->second;
}

namespace {

// Dense relabeling of a diagram's labels.
struct LabelIndex {
  std::map<Label, int> index;
  int of(Label l) const { return index.at(l); }
  int size() const { return static_cast<int>(index.size()); }
  explicit LabelIndex(const TangleDiagram& d) {
    for (Label l : d.labels()) index.emplace(l, static_cast<int>(index.size()));
  }
};

std::vector<Label> circular_boundary(const TangleDiagram& d) {
  std::vector<Label> out(d.bottom);
  out.insert(out.end(), d.top.rbegin(), d.top.rend());
  return out;
}

void require_classical(const TangleDiagram& d, const char* what) {
  if (d.has_graph_vertices())
    throw DomainError(std::string(what) + " needs a classical tangle diagram (no V or F nodes)");
}

}  // namespace

FlatResolution resolve_flat(const TangleDiagram& d) {
  require_classical(d, "resolve_flat");
  if (!d.crossings.empty()) throw DomainError("resolve_flat needs a crossingless diagram");
  if ((d.m() + d.n()) % 2 != 0) throw DomainError("m + n is odd");
  // Each label is its own component: a flat diagram has only boundary arcs
  // (a label at two boundary positions) and circles.
  const auto circ = circular_boundary(d);
  std::map<Label, std::vector<int>> positions;
  for (std::size_t p = 0; p < circ.size(); ++p) positions[circ[p]].push_back(static_cast<int>(p) + 1);
  FlatResolution r;
  r.matching.m = d.m();
  r.matching.n = d.n();
  for (const auto& [label, ps] : positions) {
    if (ps.size() != 2) throw ValidationError("label " + std::to_string(label) + " is not a boundary arc");
    r.matching.pairs.push_back({ps[0], ps[1]});
  }
  std::sort(r.matching.pairs.begin(), r.matching.pairs.end());
  for (std::size_t i = 0; i < r.matching.pairs.size(); ++i)
    for (std::size_t j = 0; j < r.matching.pairs.size(); ++j) {
      auto [a, b] = r.matching.pairs[i];
      auto [c, e] = r.matching.pairs[j];
      if (a < c && c < b && b < e) throw DomainError("nonplanar input detected");
    }
  r.circle_count = static_cast<int>(d.circles.size());
  return r;
}

namespace {

// Union-find without path compression so unions can be undone in LIFO order.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int n) : parent_(n), size_(n, 1), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      history_.push_back(-1);
      return;
    }
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --components_;
    history_.push_back(b);
  }
  void undo() {
    const int b = history_.back();
    history_.pop_back();
    if (b < 0) return;
    const int a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
    ++components_;
  }
  int components() const noexcept { return components_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
  int components_;
};

class BracketRecursion {
 public:
  BracketRecursion(const TangleDiagram& d, const Basis& basis)
      : basis_(basis), labels_(d), uf_(labels_.size()) {
    for (const auto& x : d.crossings) {
      std::array<int, 4> e{};
      for (int i = 0; i < 4; ++i) e[i] = labels_.of(x.ends[i]);
      crossings_.push_back(e);
    }
    for (Label l : circular_boundary(d)) boundary_.push_back(labels_.of(l));
    crossing_count_ = static_cast<int>(crossings_.size());
    max_circles_ = labels_.size();
    stride_ = (2 * crossing_count_ + 1) * (max_circles_ + 1);
    tally_.resize(basis_.size());
    key_.assign(boundary_.size(), '\0');
  }

  void run() { descend(0, 0); }

  std::vector<LaurentPoly> coordinates() const {
    std::vector<LaurentPoly> delta_pow(max_circles_ + 1);
    delta_pow[0] = LaurentPoly(1);
    for (int i = 1; i <= max_circles_; ++i) delta_pow[i] = delta_pow[i - 1] * LaurentPoly::delta();
    std::vector<LaurentPoly> out(basis_.size());
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      if (tally_[b].empty()) continue;
      for (int circles = 0; circles <= max_circles_; ++circles) {
        LaurentPoly inner;
        for (int s = -crossing_count_; s <= crossing_count_; ++s) {
          const long long count = tally_[b][(s + crossing_count_) * (max_circles_ + 1) + circles];
          if (count != 0) inner.add_term(count, s);
        }
        if (!inner.is_zero()) out[b] += inner * delta_pow[circles];
      }
    }
    return out;
  }

 private:
  void descend(int idx, int exponent) {
    if (idx == crossing_count_) {
      leaf(exponent);
      return;
    }
    const auto& e = crossings_[idx];
    uf_.unite(e[0], e[1]);
    uf_.unite(e[2], e[3]);
    descend(idx + 1, exponent + 1);
    uf_.undo();
    uf_.undo();
    uf_.unite(e[0], e[3]);
    uf_.unite(e[1], e[2]);
    descend(idx + 1, exponent - 1);
    uf_.undo();
    uf_.undo();
  }

  void leaf(int exponent) {
    const int npos = static_cast<int>(boundary_.size());
    roots_.assign(npos, 0);
    for (int p = 0; p < npos; ++p) roots_[p] = uf_.find(boundary_[p]);
    for (int p = 0; p < npos; ++p) {
      int partner = -1;
      for (int r = 0; r < npos; ++r)
        if (r != p && roots_[r] == roots_[p]) partner = r;
      if (partner < 0) throw ValidationError("boundary point without a partner after smoothing");
      key_[p] = static_cast<char>(partner);
    }
    const int b = basis_.index_of(key_);
    if (b < 0) throw DomainError("nonplanar input detected");
    // Circle labels are singleton components and count as closed loops.
    const int closed = uf_.components() - npos / 2;
    auto& t = tally_[b];
    if (t.empty()) t.assign(stride_, 0);
    ++t[(exponent + crossing_count_) * (max_circles_ + 1) + closed];
  }

  const Basis& basis_;
  LabelIndex labels_;
  RollbackUnionFind uf_;
  std::vector<std::array<int, 4>> crossings_;
  std::vector<int> boundary_;
  std::vector<int> roots_;
  std::string key_;
  int crossing_count_ = 0;
  int max_circles_ = 0;
  int stride_ = 0;
  std::vector<std::vector<long long>> tally_;
};

// The smoothed state as a flat diagram: labels joined through each smoothing
// are merged; merged groups with no remaining occurrence become circles.
TangleDiagram smooth_state(const TangleDiagram& d, unsigned long long mask) {
  std::map<Label, Label> parent;
  for (Label l : d.labels()) parent[l] = l;
  auto find = [&](Label x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto join = [&](Label a, Label b) { parent[find(a)] = find(b); };
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    const auto& e = d.crossings[i].ends;
    if (mask >> i & 1ull) {
      join(e[0], e[1]);
      join(e[2], e[3]);
    } else {
      join(e[0], e[3]);
      join(e[1], e[2]);
    }
  }
  TangleDiagram flat;
  std::set<Label> open;
  for (Label l : d.bottom) {
    flat.bottom.push_back(find(l));
    open.insert(find(l));
  }
  for (Label l : d.top) {
    flat.top.push_back(find(l));
    open.insert(find(l));
  }
  std::set<Label> closed_roots;
  for (const auto& x : d.crossings)
    for (Label l : x.ends)
      if (!open.count(find(l))) closed_roots.insert(find(l));
  flat.circles.assign(closed_roots.begin(), closed_roots.end());
  for (Label c : d.circles) flat.circles.push_back(find(c));
  return flat;
}

}  // namespace

CoordinateVector bracket(const TangleDiagram& d) {
  require_classical(d, "bracket");
  if (!d.thick.empty()) throw DomainError("bracket needs an empty thick set");
  if (d.crossings.size() > 40) throw DomainError("too many crossings for state expansion");
  auto basis = basis_for(d.m(), d.n());
  BracketRecursion rec(d, *basis);
  rec.run();
  return CoordinateVector{basis, rec.coordinates()};
}

CoordinateVector bracket_oracle(const TangleDiagram& d, int threads) {
  require_classical(d, "bracket_oracle");
  if (d.crossings.size() > 30) throw DomainError("too many crossings for the state oracle");
  auto basis = basis_for(d.m(), d.n());
  const int c = static_cast<int>(d.crossings.size());
  const unsigned long long states = 1ull << c;
  threads = std::max(1, threads);
  std::vector<std::vector<LaurentPoly>> partial(threads, std::vector<LaurentPoly>(basis->size()));
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](int t) {
    try {
      for (unsigned long long mask = t; mask < states; mask += threads) {
        const TangleDiagram flat = smooth_state(d, mask);
        const FlatResolution r = resolve_flat(flat);
        const int a_count = std::popcount(mask);
        const int b = basis->index_of(r.matching);
        if (b < 0) throw DomainError("nonplanar input detected");
        partial[t][b] += LaurentPoly::q(a_count - (c - a_count)) * LaurentPoly::delta().pow(r.circle_count);
      }
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  CoordinateVector out{basis, std::vector<LaurentPoly>(basis->size())};
  for (int t = 0; t < threads; ++t)
    for (std::size_t i = 0; i < basis->size(); ++i) out.coords[i] += partial[t][i];
  return out;
}

CoordinateVector vector_bar(const CoordinateVector& v) {
  CoordinateVector out{v.basis, {}};
  out.coords.reserve(v.coords.size());
  for (const auto& x : v.coords) out.coords.push_back(lp_bar(x));
  return out;
}

CoordinateVector scale(const CoordinateVector& v, const LaurentPoly& p) {
  CoordinateVector out{v.basis, {}};
  for (const auto& x : v.coords) out.coords.push_back(x * p);
  return out;
}

}  // namespace tangleinv

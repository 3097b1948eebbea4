#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <set>

#include "support/random_diagrams.hpp"
#include "tangleinv/error.hpp"
#include "tangleinv/pairing.hpp"

using namespace tangleinv;

namespace {

const std::string kFixtures = TANGLEINV_FIXTURES;

// Loops of the plat closure found by walking: every point has one partner
// inside a flat tangle and one partner along a closing arc, so loops are the
// cycles that alternate between the two.
int walked_loops(const FlatTangle& a, const FlatTangle& b) {
  const int m = a.m, n = a.n;
  // Points left-to-right: bottoms 0..2m-1, tops 2m..2m+2n-1. Copy 0 is a,
  // copy 1 is b, placed to its right.
  auto point = [&](int copy, int position) {
    if (position <= m) return copy * m + position - 1;
    const int j = m + n - position;  // top index, left-to-right
    return 2 * m + copy * n + j;
  };
  const int total = 2 * (m + n);
  std::vector<int> inner(total, -1);
  for (int copy = 0; copy < 2; ++copy) {
    for (auto [x, y] : (copy == 0 ? a : b).pairs) {
      inner[point(copy, x)] = point(copy, y);
      inner[point(copy, y)] = point(copy, x);
    }
  }
  auto closing = [&](int p) {
    if (p < 2 * m) return p ^ 1;
    return 2 * m + ((p - 2 * m) ^ 1);
  };
  std::vector<bool> seen(total, false);
  int loops = 0;
  for (int start = 0; start < total; ++start) {
    if (seen[start]) continue;
    ++loops;
    int p = start;
    do {
      seen[p] = true;
      const int q = inner[p];
      seen[q] = true;
      p = closing(q);
    } while (p != start);
  }
  return loops;
}

LaurentPoly brute_pair(const CoordinateVector& v, const CoordinateVector& w) {
  const auto a = pairing_matrix(v.basis->m(), v.basis->n());
  LaurentPoly sum;
  for (std::size_t i = 0; i < a->size(); ++i)
    for (std::size_t j = 0; j < a->size(); ++j) sum += v.coords[i] * a->entry(i, j) * w.coords[j];
  return sum;
}

}  // namespace

TEST_CASE("(2,2) pairing matrix") {
  const auto a = pairing_matrix(2, 2);
  const LaurentPoly& d = LaurentPoly::delta();
  CHECK(a->entry(0, 0) == d.pow(4));
  CHECK(a->entry(0, 1) == d.pow(3));
  CHECK(a->entry(1, 0) == d.pow(3));
  CHECK(a->entry(1, 1) == d.pow(2));
}

TEST_CASE("(1,3) pairing matrix") {
  // Hand count: e0 = {(1,2),(3,4)}, e1 = {(1,4),(2,3)}; only the bottom pair
  // spans both copies, so the matrix is not symmetric.
  const auto a = pairing_matrix(1, 3);
  CHECK(a->loops(0, 0) == 2);
  CHECK(a->loops(0, 1) == 3);
  CHECK(a->loops(1, 0) == 1);
  CHECK(a->loops(1, 1) == 2);
}

TEST_CASE("loop counts agree with the walking oracle") {
  for (int half = 1; half <= 4; ++half) {
    for (int m = 0; m <= 2 * half; ++m) {
      const auto a = pairing_matrix(m, 2 * half - m);
      for (std::size_t i = 0; i < a->size(); ++i)
        for (std::size_t j = 0; j < a->size(); ++j)
          CHECK(a->loops(i, j) == walked_loops(a->basis()[i], a->basis()[j]));
    }
  }
}

TEST_CASE("matrix is symmetric and bar-fixed when both sides are even") {
  for (auto [m, n] : {std::pair{0, 2}, {2, 0}, {2, 2}, {0, 4}, {4, 0}, {4, 4}, {2, 6}, {0, 8}}) {
    const auto a = pairing_matrix(m, n);
    for (std::size_t i = 0; i < a->size(); ++i) {
      for (std::size_t j = 0; j < a->size(); ++j) {
        CHECK(a->entry(i, j) == a->entry(j, i));
        CHECK(lp_bar(a->entry(i, j)) == a->entry(i, j));
      }
    }
  }
}

TEST_CASE("pair agrees with the matrix product") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto d = testing::random_tangle(rng, {4, 3, true});
    const auto v = bracket(d);
    CHECK(pair(v, vector_bar(v)) == brute_pair(v, vector_bar(v)));
    CHECK(p_poly(d) == brute_pair(v, vector_bar(v)));
    CHECK(p_poly(v) == p_poly(d));
  }
}

TEST_CASE("pairing vectors of different shapes") {
  CHECK_THROWS_AS(pair(bracket(load_tng(kFixtures + "/identity11.tng")),
                       bracket(load_tng(kFixtures + "/identity22.tng"))),
                  DomainError);
}

TEST_CASE("P of small diagrams") {
  CHECK(to_string(p_poly(load_tng(kFixtures + "/one_crossing.tng"))) == "q^4 + 2 + q^-4");
  const auto id = p_eval(load_tng(kFixtures + "/identity11.tng"), RootIndex(1));
  CHECK(std::abs(id - std::complex<double>(-std::sqrt(3.0), 0.0)) < 1e-9);
  // A closed diagram pairs its bracket with its conjugate.
  const auto t = bracket(load_tng(kFixtures + "/trefoil.tng")).coords[0];
  CHECK(p_poly(load_tng(kFixtures + "/trefoil.tng")) == t * lp_bar(t));
}

TEST_CASE("P is palindromic and real on even shapes") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const auto d = testing::random_tangle(rng, {4, 4, true});
    const auto p = p_poly(d);
    CHECK(lp_bar(p) == p);
    for (RootIndex k : RootIndex::all()) CHECK(std::abs(p_eval(d, k).imag()) < 1e-9);
  }
}

namespace {

// Plat closure of tensor(d, mirror(d)) built as a closed diagram: bottom
// points (2t, 2t+1) and top points (2t, 2t+1), 0-based left-to-right, joined.
TangleDiagram plat_closure_of_double(const TangleDiagram& d) {
  TangleDiagram t = tensor(d, mirror(d));
  std::map<Label, Label> parent;
  auto find = [&](Label x) {
    if (!parent.count(x)) parent[x] = x;
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto* side : {&t.bottom, &t.top})
    for (std::size_t i = 0; i + 1 < side->size(); i += 2) parent[find((*side)[i])] = find((*side)[i + 1]);
  std::map<Label, int> uses;
  for (auto& x : t.crossings)
    for (Label& l : x.ends) ++uses[l = find(l)];
  std::set<Label> circles;
  for (Label c : t.circles) circles.insert(find(c));
  for (const auto* side : {&t.bottom, &t.top})
    for (Label l : *side)
      if (!uses.count(find(l))) circles.insert(find(l));
  t.circles.assign(circles.begin(), circles.end());
  t.bottom.clear();
  t.top.clear();
  return t;
}

}  // namespace

TEST_CASE("P is the bracket of the plat closure of D next to its mirror") {
  // Holds for every shape, including odd ones where the form is not symmetric.
  std::mt19937 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const auto d = testing::random_tangle(rng, {4, 4, false});
    const auto closed = plat_closure_of_double(d);
    REQUIRE(validate(closed).ok());
    CHECK(bracket(closed).coords[0] == p_poly(d));
  }
}

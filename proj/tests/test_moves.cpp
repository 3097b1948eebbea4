#include <doctest.h>

#include <random>

#include "support/random_diagrams.hpp"
#include "tangleinv/error.hpp"
#include "tangleinv/moves.hpp"
#include "tangleinv/pairing.hpp"

using namespace tangleinv;

namespace {

const std::string kFixtures = TANGLEINV_FIXTURES;

TangleDiagram fixture(const std::string& name) { return load_tng(kFixtures + "/" + name + ".tng"); }

LaurentPoly q(int e) { return LaurentPoly::q(e); }

}  // namespace

TEST_CASE("kinks scale the bracket") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const auto d = testing::random_tangle(rng, {});
    const auto labels = d.labels();
    if (labels.empty()) continue;
    auto it = labels.begin();
    std::advance(it, std::uniform_int_distribution<std::size_t>(0, labels.size() - 1)(rng));
    const auto v = bracket(d);
    const auto plus = insert_kink(d, *it, KinkSign::Positive);
    const auto minus = insert_kink(d, *it, KinkSign::Negative);
    CHECK(validate(plus).ok());
    CHECK(validate(minus).ok());
    CHECK(bracket(plus) == scale(v, -q(3)));
    CHECK(bracket(minus) == scale(v, -q(-3)));
    CHECK(p_poly(plus) == p_poly(d));
  }
}

TEST_CASE("kinks on circles and thick edges") {
  const auto c = fixture("circle");
  const auto k = insert_kink(c, 1, KinkSign::Positive);
  CHECK(k.circles.empty());
  CHECK(bracket(k).coords[0] == -q(3) * LaurentPoly::delta());
  CHECK_THROWS_AS(insert_kink(fixture("theta_thick2"), 2, KinkSign::Negative), DomainError);
  CHECK_THROWS_AS(insert_kink(c, 9, KinkSign::Negative), DomainError);
}

TEST_CASE("braid patterns") {
  CHECK(bracket(braid_22(3)) == bracket(fixture("sigma3")));
  CHECK(bracket(braid_22(-3)) == bracket(fixture("sigma_minus3")));
  CHECK(isomorphic(identity_22(), fixture("identity22")));
  for (int p = -3; p <= 3; ++p) {
    CAPTURE(p);
    CHECK(validate(braid_22(p)).ok());
    CHECK(bracket(braid_22(-p)) == vector_bar(bracket(braid_22(p))));
  }
  CHECK_THROWS_AS(braid_22(4), DomainError);
}

TEST_CASE("splicing the identity restores the diagram") {
  std::mt19937 rng(43);
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const auto d = testing::random_tangle(rng, {});
    for (const auto& site : splice_sites(d)) {
      const auto out = splice_22(d, site, identity_22());
      CHECK(validate(out).ok());
      CHECK(isomorphic(out, d));
      ++checked;
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("splicing a 3-twist preserves P at the roots") {
  std::mt19937 rng(47);
  int checked = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = testing::random_tangle(rng, {3, 3, true});
    const auto sites = splice_sites(d);
    if (sites.empty()) continue;
    const auto& site = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
    const int power = trial % 2 ? 3 : -3;
    const auto a = splice_22(d, site, identity_22());
    const auto b = splice_22(d, site, braid_22(power));
    REQUIRE(validate(b).ok());
    for (RootIndex k : RootIndex::all()) CHECK(std::abs(p_eval(a, k) - p_eval(b, k)) < 1e-9);
    ++checked;
  }
  CHECK(checked > 5);
}

TEST_CASE("splice site errors") {
  const auto d = fixture("sigma3");
  CHECK_THROWS_AS(splice_22(d, {{1, 0}, {1, 1}}, identity_22()), DomainError);
  CHECK_THROWS_AS(splice_22(d, {{1, 0}, {2, 0}}, fixture("identity11")), DomainError);
  const auto c = tensor(fixture("circle"), fixture("identity11"));
  CHECK_THROWS_AS(splice_22(c, {{1, 0}, {2, 0}}, identity_22()), DomainError);
  // Edges 4 and 7 sit on opposite sides of the braid and share no face.
  const auto sites = splice_sites(d);
  bool shared = false;
  for (const auto& s : sites)
    if ((s.first.label == 4 && s.second.label == 7) || (s.first.label == 7 && s.second.label == 4)) shared = true;
  if (!shared) CHECK_THROWS_AS(splice_22(d, {{4, 1}, {7, 1}}, identity_22()), DomainError);
}

TEST_CASE("IH rewrite") {
  const auto h = fixture("h_form");
  const auto [i, rho] = ih_rewrite(h, recorded_enhancement(h), 5);
  CHECK(isomorphic(i, fixture("i_form")));
  CHECK(rho == recorded_enhancement(h));
  CHECK(invariant_rho_poly(h, recorded_enhancement(h)) == invariant_rho_poly(i, rho));

  const auto theta = fixture("theta_thick2");
  const auto [cuff, rho2] = ih_rewrite(theta, recorded_enhancement(theta), 2);
  CHECK(isomorphic(cuff, fixture("handcuff_thick2")));
  CHECK(invariant_rho_poly(theta, recorded_enhancement(theta)) == invariant_rho_poly(cuff, rho2));
  CHECK_THROWS_AS(ih_rewrite(theta, recorded_enhancement(theta), 1), DomainError);
}

TEST_CASE("manifest parsing") {
  const auto entries = parse_manifest("# comment\npair a x.tng y.tng R2 exact\n\npair b u.tng v.tng +3 root\n", "/base");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].name == "a");
  CHECK(entries[0].first == std::filesystem::path("/base/x.tng"));
  CHECK(entries[0].exact);
  CHECK(entries[1].move == "+3");
  CHECK(!entries[1].exact);
  CHECK(entries[1].line == 4);
  CHECK_THROWS_AS(parse_manifest("pair a x y R2 maybe\n", "."), ParseError);
  CHECK_THROWS_AS(parse_manifest("pear a x y R2 exact\n", "."), ParseError);
  CHECK_THROWS_AS(parse_manifest("pair a x y R2\n", "."), ParseError);
  CHECK_THROWS_AS(load_manifest(kFixtures + "/missing.txt"), Error);
}

TEST_CASE("invariant kinds") {
  CHECK(invariant_kind(fixture("sigma3")) == InvariantKind::TangleP);
  CHECK(invariant_kind(fixture("theta")) == InvariantKind::GraphTotal);
  CHECK(invariant_kind(fixture("theta_thick2")) == InvariantKind::EnhancedRho);
  CHECK(to_string(InvariantKind::EnhancedRho) == "I_rho");
}

TEST_CASE("every shipped pair verifies") {
  const auto entries = load_manifest(kFixtures + "/pairs/manifest.txt");
  CHECK(entries.size() == 28);
  bool some_poly_differs = false;
  for (const auto& e : entries) {
    CAPTURE(e.name);
    const auto r = verify_pair(e, std::nullopt, 2);
    CHECK(r.passed);
    CHECK(r.max_deviation < kRootTolerance);
    if (e.exact) CHECK(r.poly_equal);
    if (!r.poly_equal) some_poly_differs = true;
  }
  CHECK(some_poly_differs);
}

TEST_CASE("a mismatched pair fails") {
  // The plat closure caps each pair of ends, so twisting a (2,2) braid does
  // not change P; distinct loop counts do.
  ManifestEntry braid{"braid", kFixtures + "/sigma3.tng", kFixtures + "/identity22.tng", "+3", true, 1};
  CHECK(verify_pair(braid).passed);
  ManifestEntry loops{"loops", kFixtures + "/circle.tng", kFixtures + "/unlink2.tng", "R2", true, 1};
  const auto r = verify_pair(loops);
  CHECK(!r.passed);
  CHECK(!r.poly_equal);
  loops.exact = false;
  const auto r2 = verify_pair(loops, RootIndex(1));
  CHECK(!r2.passed);
  CHECK(r2.max_deviation == doctest::Approx(6.0));
}

#include <doctest.h>

#include <random>
#include <string>

#include "support/random_diagrams.hpp"
#include "tangleinv/diagram.hpp"
#include "tangleinv/error.hpp"

using namespace tangleinv;

namespace {

const std::string kFixtures = TANGLEINV_FIXTURES;

std::string parse_message(const std::string& text) {
  try {
    parse_tng(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

ErrorKind parse_kind(const std::string& text) {
  try {
    parse_tng(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Usage;
}

}  // namespace

TEST_CASE("parse a crossing") {
  const auto d = parse_tng("tangle m=2 n=2\nX 1 2 4 3\nB 1 2 | 3 4\n");
  CHECK(d.m() == 2);
  CHECK(d.n() == 2);
  REQUIRE(d.crossings.size() == 1);
  CHECK(d.crossings[0].ends == std::array<Label, 4>{1, 2, 4, 3});
  CHECK(d.max_label() == 4);
  CHECK(!d.has_graph_vertices());
}

TEST_CASE("comments and blank lines are ignored") {
  const auto d = parse_tng("# a comment\n\ntangle m=0 n=0   # trailing\nO 1\n\nB |\n");
  CHECK(d.circles == std::vector<Label>{1});
}

TEST_CASE("syntax errors carry line numbers") {
  CHECK(parse_message("X 1 2 3 4\n").find("line 1: expected 'tangle m=<int> n=<int>' header first") !=
        std::string::npos);
  CHECK(parse_message("tangle m=0 n=0\nZ 1\nB |\n").find("line 2: unknown line type 'Z'") != std::string::npos);
  CHECK(parse_message("tangle m=0 n=0\nB |\nB |\n").find("line 3: duplicate B line") != std::string::npos);
  CHECK(parse_message("tangle m=0 n=0\nO 1\n").find("missing B line") != std::string::npos);
  CHECK(parse_message("tangle m=1 n=1\nB 1 |\n").find("line 2:") != std::string::npos);
  CHECK(parse_message("tangle m=0 n=0\nX 1 2 3\nB |\n").find("line 2:") != std::string::npos);
  CHECK(parse_message("tangle m=0 n=0\nO -4\nB |\n").find("line 2:") != std::string::npos);
  CHECK(parse_kind("tangle m=0 n=0\nZ 1\nB |\n") == ErrorKind::Parse);
}

TEST_CASE("label multiplicity is a validation error") {
  const std::string text = "tangle m=1 n=1\nX 1 2 3 5\nB 1 | 3\n";
  CHECK(parse_kind(text) == ErrorKind::Validation);
  CHECK(parse_message(text).find("label 2 occurs 1 time(s) (expected 2) at crossing #1") != std::string::npos);
  CHECK(parse_kind("tangle m=1 n=0\nB 1 |\n") == ErrorKind::Validation);
}

TEST_CASE("thick edges must join trivalent vertices") {
  CHECK(parse_kind("tangle m=0 n=0\nO 1\nB |\nT 1\n") == ErrorKind::Validation);
  CHECK(parse_kind("tangle m=2 n=2\nX 1 2 4 3\nB 1 2 | 3 4\nT 1\n") == ErrorKind::Validation);
  CHECK_NOTHROW(parse_tng("tangle m=0 n=0\nV 1 2 3\nV 3 2 1\nB |\nT 1\n"));
}

TEST_CASE("nonplanar rotation systems fail validation") {
  // K_{3,3}-free but with the two vertices listed in the same rotation, which
  // forces a torus embedding.
  const auto d = parse_tng("tangle m=0 n=0\nV 1 2 3\nV 1 2 3\nB |\n");
  CHECK(check_invariants(d).ok());
  const auto report = validate(d);
  REQUIRE(!report.ok());
  CHECK(report.errors.front().find("nonplanar or inconsistent rotation system") != std::string::npos);
  CHECK_THROWS_AS(require_valid(d), ValidationError);

  const auto swapped = parse_tng("tangle m=2 n=0\nB 1 1 |\n");
  CHECK(validate(swapped).ok());
  const auto crossed = parse_tng("tangle m=2 n=2\nB 1 2 | 2 1\n");
  CHECK(!validate(crossed).ok());
}

TEST_CASE("every fixture validates") {
  for (const char* name : {"identity11", "identity22", "one_crossing", "circle", "three_circles", "kink_positive",
                           "kink_negative", "theta", "theta_thick2", "handcuff", "handcuff_thick2", "tetrahedron",
                           "h_form", "i_form", "claws", "sigma3", "sigma_minus3", "trefoil", "unlink2", "bigon",
                           "ladder6", "ladder8", "trefoil_kinked"}) {
    CAPTURE(name);
    const auto d = load_tng(kFixtures + "/" + name + ".tng");
    CHECK(validate(d).ok());
  }
}

TEST_CASE("missing files") {
  try {
    load_tng(kFixtures + "/no_such_file.tng");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find("cannot open") != std::string::npos);
  }
}

TEST_CASE("serialization round trip") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = testing::random_tangle(rng, {});
    const auto again = parse_tng(serialize_tng(d));
    CHECK(again == d);
    CHECK(validate(d).ok());
  }
  const auto theta = load_tng(kFixtures + "/theta_thick2.tng");
  CHECK(parse_tng(serialize_tng(theta)) == theta);
}

TEST_CASE("mirror is an involution swapping crossing type") {
  const auto d = load_tng(kFixtures + "/sigma3.tng");
  const auto m = mirror(d);
  CHECK(m != d);
  CHECK(isomorphic(mirror(m), d));
  CHECK(isomorphic(m, load_tng(kFixtures + "/sigma_minus3.tng")));
}

TEST_CASE("canonical code forgets labels and listing order") {
  const auto a = parse_tng("tangle m=2 n=2\nX 1 2 4 3\nB 1 2 | 3 4\n");
  const auto b = parse_tng("tangle m=2 n=2\nX 8 7 5 9\nB 5 9 | 7 8\n");  // rotated listing, relabeled
  const auto c = parse_tng("tangle m=2 n=2\nX 9 8 7 5\nB 5 9 | 7 8\n");  // other crossing type
  CHECK(canonical_code(a) == canonical_code(b));
  CHECK(isomorphic(a, b));
  CHECK(!isomorphic(a, c));
  const auto t1 = parse_tng("tangle m=0 n=0\nV 1 4 3\nV 2 5 1\nV 3 6 2\nV 4 5 6\nB |\n");
  const auto t2 = parse_tng("tangle m=0 n=0\nV 4 5 6\nV 3 6 2\nV 1 4 3\nV 5 1 2\nB |\n");
  CHECK(isomorphic(t1, t2));
}

TEST_CASE("tensor places diagrams side by side") {
  const auto a = load_tng(kFixtures + "/one_crossing.tng");
  const auto b = load_tng(kFixtures + "/identity11.tng");
  const auto t = tensor(a, b);
  CHECK(t.m() == 3);
  CHECK(t.n() == 3);
  CHECK(t.crossings.size() == 1);
  CHECK(validate(t).ok());
  CHECK(t.bottom.back() > a.max_label());
}

TEST_CASE("faces satisfy Euler's formula on connected diagrams") {
  // Nodes plus the outer vertex, minus edges, plus faces is 2 on a sphere.
  for (const char* name : {"one_crossing", "sigma3", "claws", "identity22", "h_form", "trefoil"}) {
    CAPTURE(name);
    const auto d = load_tng(kFixtures + "/" + name + ".tng");
    const long long v = static_cast<long long>(d.crossings.size() + d.trivalent.size() + d.fourvalent.size()) +
                        ((d.m() + d.n()) > 0 ? 1 : 0);
    const long long e = static_cast<long long>(d.labels().size());
    const long long f = static_cast<long long>(faces(d).size());
    CHECK(v - e + f == 2);
    std::size_t darts = 0;
    for (const auto& face : faces(d)) darts += face.size();
    CHECK(darts == 2 * d.labels().size());
  }
}

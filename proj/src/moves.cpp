#include "tangleinv/moves.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "tangleinv/error.hpp"
#include "tangleinv/pairing.hpp"

namespace tangleinv {

namespace {

// Label occurrences in text order: X, V, F lines, then bottom, then top.
std::vector<Label*> occurrences(TangleDiagram& d) {
  std::vector<Label*> out;
  for (auto& x : d.crossings)
    for (Label& l : x.ends) out.push_back(&l);
  for (auto& v : d.trivalent)
    for (Label& l : v.ends) out.push_back(&l);
  for (auto& f : d.fourvalent)
    for (Label& l : f.ends) out.push_back(&l);
  for (Label& l : d.bottom) out.push_back(&l);
  for (Label& l : d.top) out.push_back(&l);
  return out;
}

Label* occurrence(TangleDiagram& d, Label label, int side) {
  int seen = 0;
  for (Label* p : occurrences(d))
    if (*p == label && seen++ == side) return p;
  return nullptr;
}

bool is_circle(const TangleDiagram& d, Label label) {
  return std::find(d.circles.begin(), d.circles.end(), label) != d.circles.end();
}

void shift_labels(TangleDiagram& d, Label by) {
  for (Label* p : occurrences(d)) *p += by;
  for (Label& c : d.circles) c += by;
  std::set<Label> thick;
  for (Label t : d.thick) thick.insert(t + by);
  d.thick = std::move(thick);
}

}  // namespace

TangleDiagram insert_kink(const TangleDiagram& d, Label label, KinkSign sign) {
  if (d.thick.count(label)) throw DomainError("cannot insert a kink on thick edge " + std::to_string(label));
  TangleDiagram out = d;
  const Label loop = d.max_label() + 1;
  const Label tail = d.max_label() + 2;
  auto kink = [&](Label a, Label b) {
    // The loop sits on ends 0,1 for a positive kink and on ends 1,2 for a negative one.
    return sign == KinkSign::Positive ? Crossing{{loop, loop, a, b}} : Crossing{{a, loop, loop, b}};
  };
  if (is_circle(d, label)) {
    out.circles.erase(std::find(out.circles.begin(), out.circles.end(), label));
    out.crossings.push_back(kink(label, label));
    return out;
  }
  Label* second = occurrence(out, label, 1);
  if (!second) throw DomainError("no edge labeled " + std::to_string(label));
  *second = tail;
  out.crossings.push_back(kink(label, tail));
  return out;
}

TangleDiagram splice_22(const TangleDiagram& d, const SpliceSite& site, const TangleDiagram& pattern,
                        bool check_face) {
  if (pattern.m() != 2 || pattern.n() != 2) throw DomainError("splice pattern must be a (2,2) diagram");
  const Label l1 = site.first.label;
  const Label l2 = site.second.label;
  if (l1 == l2) throw DomainError("splice site needs two distinct edges");
  for (const Dart& h : {site.first, site.second}) {
    if (h.side < 0 || h.side > 1) throw DomainError("dart side must be 0 or 1");
    if (is_circle(d, h.label)) throw DomainError("circle " + std::to_string(h.label) + " cannot be a splice site");
    if (d.thick.count(h.label)) throw DomainError("thick edge " + std::to_string(h.label) + " cannot be a splice site");
  }
  if (check_face) {
    bool found = false;
    for (const auto& face : faces(d)) {
      const bool a = std::find(face.begin(), face.end(), site.first) != face.end();
      const bool b = std::find(face.begin(), face.end(), site.second) != face.end();
      if (a && b) found = true;
    }
    if (!found) throw DomainError("splice site edges do not bound a common face");
  }

  TangleDiagram out = d;
  const Label alpha1 = d.max_label() + 1;
  const Label alpha2 = d.max_label() + 2;
  Label* v_end = occurrence(out, l1, 1 - site.first.side);
  Label* x_end = occurrence(out, l2, 1 - site.second.side);
  if (!v_end || !x_end) throw DomainError("splice site names a missing edge");
  *v_end = alpha1;
  *x_end = alpha2;

  TangleDiagram p = pattern;
  shift_labels(p, alpha2);
  std::map<Label, Label> parent;
  auto find = [&](Label x) {
    if (!parent.count(x)) parent[x] = x;
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto join = [&](Label a, Label b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  join(p.top[0], l1);
  join(p.bottom[0], alpha1);
  join(p.bottom[1], l2);
  join(p.top[1], alpha2);

  out.crossings.insert(out.crossings.end(), p.crossings.begin(), p.crossings.end());
  out.trivalent.insert(out.trivalent.end(), p.trivalent.begin(), p.trivalent.end());
  out.fourvalent.insert(out.fourvalent.end(), p.fourvalent.begin(), p.fourvalent.end());
  std::set<Label> present;
  for (Label* l : occurrences(out)) present.insert(*l = find(*l));
  std::set<Label> glued_roots;
  for (Label l : {p.top[0], p.top[1], p.bottom[0], p.bottom[1]}) glued_roots.insert(find(l));
  for (Label r : glued_roots)
    if (!present.count(r)) out.circles.push_back(r);
  out.circles.insert(out.circles.end(), p.circles.begin(), p.circles.end());
  std::set<Label> thick;
  for (Label t : out.thick) thick.insert(find(t));
  for (Label t : p.thick) thick.insert(find(t));
  out.thick = std::move(thick);
  return out;
}

std::vector<SpliceSite> splice_sites(const TangleDiagram& d) {
  std::vector<SpliceSite> out;
  for (const auto& face : faces(d))
    for (std::size_t i = 0; i < face.size(); ++i)
      for (std::size_t j = i + 1; j < face.size(); ++j) {
        if (face[i].label == face[j].label) continue;
        if (d.thick.count(face[i].label) || d.thick.count(face[j].label)) continue;
        out.push_back({face[i], face[j]});
      }
  return out;
}

std::pair<TangleDiagram, Enhancement> ih_rewrite(const TangleDiagram& g, const Enhancement& rho, Label label) {
  if (!std::binary_search(rho.thick.begin(), rho.thick.end(), label))
    throw DomainError("edge " + std::to_string(label) + " is not thick");
  if (const auto why = enhancement_problem(g, rho); !why.empty()) throw DomainError("invalid enhancement: " + why);
  std::vector<std::pair<int, int>> at;  // (vertex, slot)
  for (int v = 0; v < static_cast<int>(g.trivalent.size()); ++v)
    for (int i = 0; i < 3; ++i)
      if (g.trivalent[v].ends[i] == label) at.push_back({v, i});
  if (at.size() != 2 || at[0].first == at[1].first)
    throw DomainError("IH-move needs thick edge " + std::to_string(label) + " to join two vertices directly");
  auto [u, iu] = at[0];
  auto [v, iv] = at[1];
  const auto& eu = g.trivalent[u].ends;
  const auto& ev = g.trivalent[v].ends;
  const Label a = eu[(iu + 1) % 3], b = eu[(iu + 2) % 3];
  const Label c = ev[(iv + 1) % 3], d = ev[(iv + 2) % 3];
  TangleDiagram out = g;
  out.trivalent[u].ends = {label, b, c};
  out.trivalent[v].ends = {label, d, a};
  return {out, rho};
}

TangleDiagram identity_22() { return braid_22(0); }

TangleDiagram braid_22(int power) {
  if (power < -3 || power > 3) throw DomainError("braid power must lie in [-3, 3]");
  TangleDiagram d;
  d.bottom = {1, 2};
  std::array<Label, 2> cur{1, 2};
  Label next = 3;
  for (int i = 0; i < std::abs(power); ++i) {
    const Label x = cur[0], y = cur[1], z = next++, w = next++;
    // Ends listed from the bottom-right end for sigma, from the bottom-left for its inverse.
    d.crossings.push_back(power > 0 ? Crossing{{y, w, z, x}} : Crossing{{x, y, w, z}});
    cur = {z, w};
  }
  d.top = {cur[0], cur[1]};
  return d;
}

std::vector<ManifestEntry> parse_manifest(const std::string& text, const std::filesystem::path& base_dir) {
  std::vector<ManifestEntry> out;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    if (tok[0] != "pair") throw ParseError(line, "expected 'pair', got '" + tok[0] + "'");
    if (tok.size() != 6) throw ParseError(line, "expected: pair <name> <fileA> <fileB> <move> <exact|root>");
    if (tok[5] != "exact" && tok[5] != "root") throw ParseError(line, "expectation must be 'exact' or 'root'");
    out.push_back(ManifestEntry{tok[1], base_dir / tok[2], base_dir / tok[3], tok[4], tok[5] == "exact", line});
  }
  return out;
}

std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open manifest " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_manifest(buf.str(), path.parent_path());
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

InvariantKind invariant_kind(const TangleDiagram& d) {
  if (!d.thick.empty()) return InvariantKind::EnhancedRho;
  if (d.has_graph_vertices()) return InvariantKind::GraphTotal;
  return InvariantKind::TangleP;
}

std::string to_string(InvariantKind kind) {
  switch (kind) {
    case InvariantKind::TangleP:
      return "P";
    case InvariantKind::EnhancedRho:
      return "I_rho";
    case InvariantKind::GraphTotal:
      return "I";
  }
  return "?";
}

LaurentPoly invariant_poly(const TangleDiagram& d, int threads) {
  switch (invariant_kind(d)) {
    case InvariantKind::TangleP:
      return p_poly(d);
    case InvariantKind::EnhancedRho:
      return invariant_rho_poly(d, recorded_enhancement(d), threads);
    case InvariantKind::GraphTotal:
      return invariant_total_poly(d, threads);
  }
  return {};
}

std::vector<std::complex<double>> invariant_values(const TangleDiagram& d, const std::vector<RootIndex>& ks,
                                                   int threads) {
  switch (invariant_kind(d)) {
    case InvariantKind::TangleP: {
      const LaurentPoly p = p_poly(d);
      std::vector<std::complex<double>> out;
      for (RootIndex k : ks) out.push_back(lp_eval_root(p, k));
      return out;
    }
    case InvariantKind::EnhancedRho:
      return invariant_rho_values(d, recorded_enhancement(d), ks, threads);
    case InvariantKind::GraphTotal:
      return invariant_total_values(d, ks, threads);
  }
  return {};
}

PairReport verify_pair(const ManifestEntry& entry, std::optional<RootIndex> k, int threads) {
  PairReport r;
  r.entry = entry;
  const TangleDiagram a = load_tng(entry.first);
  const TangleDiagram b = load_tng(entry.second);
  for (const auto* d : {&a, &b}) {
    const auto report = validate(*d);
    if (!report.ok()) throw ValidationError(entry.name + ": " + report.errors.front());
  }
  r.kind = invariant_kind(a);
  if (invariant_kind(b) != r.kind) {
    r.detail = "diagrams carry different invariants (" + to_string(r.kind) + " vs " + to_string(invariant_kind(b)) + ")";
    return r;
  }
  if (a.m() != b.m() || a.n() != b.n()) {
    r.detail = "boundary shapes differ";
    return r;
  }
  const std::vector<RootIndex> ks = k ? std::vector<RootIndex>{*k} : RootIndex::all();
  r.poly_equal = invariant_poly(a, threads) == invariant_poly(b, threads);
  const auto va = invariant_values(a, ks, threads);
  const auto vb = invariant_values(b, ks, threads);
  for (std::size_t i = 0; i < ks.size(); ++i) r.max_deviation = std::max(r.max_deviation, std::abs(va[i] - vb[i]));
  r.passed = entry.exact ? r.poly_equal : r.max_deviation <= kRootTolerance;
  if (!r.passed)
    r.detail = entry.exact ? "invariant polynomials differ"
                           : "values differ by " + std::to_string(r.max_deviation) + " at some root";
  return r;
}

}  // namespace tangleinv

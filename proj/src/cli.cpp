#include "tangleinv/cli.hpp"

#include <cstdio>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "tangleinv/diagram.hpp"
#include "tangleinv/enhanced.hpp"
#include "tangleinv/error.hpp"
#include "tangleinv/laurent.hpp"
#include "tangleinv/moves.hpp"
#include "tangleinv/pairing.hpp"
#include "tangleinv/skein.hpp"

namespace tangleinv {

using nlohmann::json;

namespace {

std::string fixed9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", x);
  std::string s = buf;
  if (s == "-0.000000000") s = "0.000000000";
  return s;
}

json matching_json(const FlatTangle& f) {
  json pairs = json::array();
  for (auto [a, b] : f.pairs) pairs.push_back({a, b});
  return pairs;
}

json value_json(RootIndex k, std::complex<double> z) {
  return {{"k", k.value()}, {"re", z.real()}, {"im", z.imag()}};
}

json enhancement_json(std::size_t index, const Enhancement& rho) {
  return {{"index", index}, {"thick", rho.thick}};
}

struct Options {
  bool json = false;
  int threads = 1;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_basis(int m, int n, const Options& o, std::ostream& out) {
  const auto basis = basis_for(m, n);
  if (o.json) {
    json elements = json::array();
    for (const auto& f : basis->elements()) elements.push_back(matching_json(f));
    emit(out, {{"command", "basis"}, {"m", m}, {"n", n}, {"size", basis->size()}, {"elements", elements}});
    return 0;
  }
  for (std::size_t i = 0; i < basis->size(); ++i) out << i << ' ' << to_string((*basis)[i]) << '\n';
  return 0;
}

TangleDiagram load_valid(const std::string& file) {
  TangleDiagram d = load_tng(file);
  const auto report = validate(d);
  if (!report.ok()) throw ValidationError(file + ": " + report.errors.front());
  return d;
}

int cmd_bracket(const std::string& file, const Options& o, std::ostream& out) {
  const auto v = bracket(load_valid(file));
  if (o.json) {
    json coords = json::array();
    for (std::size_t i = 0; i < v.coords.size(); ++i)
      coords.push_back({{"matching", matching_json((*v.basis)[i])}, {"coeff", to_string(v.coords[i])}});
    emit(out, {{"command", "bracket"}, {"file", file}, {"m", v.basis->m()}, {"n", v.basis->n()}, {"coords", coords}});
    return 0;
  }
  for (std::size_t i = 0; i < v.coords.size(); ++i)
    out << to_string((*v.basis)[i]) << ": " << to_string(v.coords[i]) << '\n';
  return 0;
}

int cmd_pairing(int m, int n, const Options& o, std::ostream& out) {
  const auto a = pairing_matrix(m, n);
  if (o.json) {
    json loops = json::array();
    json entries = json::array();
    for (std::size_t i = 0; i < a->size(); ++i) {
      json lrow = json::array();
      json erow = json::array();
      for (std::size_t j = 0; j < a->size(); ++j) {
        lrow.push_back(a->loops(i, j));
        erow.push_back(to_string(a->entry(i, j)));
      }
      loops.push_back(lrow);
      entries.push_back(erow);
    }
    emit(out, {{"command", "pairing"}, {"m", m}, {"n", n}, {"loops", loops}, {"entries", entries}});
    return 0;
  }
  for (std::size_t i = 0; i < a->size(); ++i) {
    for (std::size_t j = 0; j < a->size(); ++j) out << (j ? " " : "") << "delta^" << a->loops(i, j);
    out << '\n';
  }
  return 0;
}

std::vector<RootIndex> requested_roots(std::optional<int> k, bool all_k) {
  if (all_k) return RootIndex::all();
  if (k) return {RootIndex(*k)};
  return {};
}

int cmd_p(const std::string& file, std::optional<int> k, const Options& o, std::ostream& out) {
  const auto d = load_valid(file);
  const LaurentPoly p = p_poly(d);
  const auto ks = requested_roots(k, false);
  if (o.json) {
    json values = json::array();
    for (RootIndex r : ks) values.push_back(value_json(r, lp_eval_root(p, r)));
    emit(out, {{"command", "p"}, {"file", file}, {"poly", to_string(p)}, {"values", values}});
    return 0;
  }
  out << "P(D) = " << to_string(p) << '\n';
  for (RootIndex r : ks) out << "P(D)_" << r.value() << " = " << format_complex(lp_eval_root(p, r)) << '\n';
  return 0;
}

int cmd_rho(const std::string& file, const Options& o, std::ostream& out) {
  const auto g = load_valid(file);
  const auto all = enumerate_enhancements(g);
  if (o.json) {
    json list = json::array();
    for (std::size_t i = 0; i < all.size(); ++i) list.push_back(enhancement_json(i, all[i]));
    emit(out, {{"command", "rho"}, {"file", file}, {"count", all.size()}, {"enhancements", list}});
    return 0;
  }
  out << all.size() << " enhancement(s)\n";
  for (std::size_t i = 0; i < all.size(); ++i) out << i << ' ' << to_string(all[i]) << '\n';
  return 0;
}

// The enhancement a command works with: --rho INDEX into the enumeration, or
// the diagram's own T line.
std::pair<std::optional<std::size_t>, Enhancement> choose_rho(const TangleDiagram& g, std::optional<std::size_t> index) {
  if (index) {
    if (!g.thick.empty()) throw UsageError("--rho cannot be combined with a diagram that has a T line");
    const auto all = enumerate_enhancements(g);
    if (*index >= all.size())
      throw UsageError("--rho " + std::to_string(*index) + " out of range (" + std::to_string(all.size()) +
                       " enhancement(s))");
    return {index, all[*index]};
  }
  return {std::nullopt, recorded_enhancement(g)};
}

int cmd_states(const std::string& file, std::optional<std::size_t> index, const Options& o, std::ostream& out) {
  const auto g = load_valid(file);
  if (!index && g.thick.empty() && !g.trivalent.empty()) throw UsageError("states needs --rho INDEX");
  const auto [chosen, rho] = choose_rho(g, index);
  const TangleDiagram f = contract(g, rho);
  const auto states = expand_states(f);
  std::vector<LaurentPoly> polys(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) polys[i] = p_poly(states[i].second);
  if (o.json) {
    json list = json::array();
    for (std::size_t i = 0; i < states.size(); ++i) {
      json assignment = json::array();
      for (auto p : states[i].first) assignment.push_back(to_string(p));
      list.push_back({{"index", i}, {"assignment", assignment}, {"poly", to_string(polys[i])}});
    }
    emit(out, {{"command", "states"},
               {"file", file},
               {"rho", {{"index", chosen ? json(*chosen) : json(nullptr)}, {"thick", rho.thick}}},
               {"contracted", serialize_tng(f)},
               {"states", list}});
    return 0;
  }
  out << "rho " << to_string(rho) << ", " << f.fourvalent.size() << " vertex(es), " << states.size() << " state(s)\n";
  for (std::size_t i = 0; i < states.size(); ++i) {
    const std::string a = states[i].first.empty() ? "-" : to_string(states[i].first);
    out << i << " [" << a << "] P = " << to_string(polys[i]) << '\n';
  }
  return 0;
}

int cmd_invariant(const std::string& file, std::optional<std::size_t> index, std::optional<int> k, bool all_k,
                  const Options& o, std::ostream& out) {
  if (!k && !all_k) throw UsageError("invariant needs --k K or --all-k");
  const auto ks = requested_roots(k, all_k);
  const auto g = load_valid(file);
  const bool per_rho = index.has_value() || !g.thick.empty();
  std::optional<std::size_t> chosen;
  Enhancement rho;
  std::vector<std::complex<double>> values;
  if (per_rho) {
    std::tie(chosen, rho) = choose_rho(g, index);
    values = invariant_rho_values(g, rho, ks, o.threads);
  } else {
    values = invariant_total_values(g, ks, o.threads);
  }
  if (o.json) {
    json list = json::array();
    for (std::size_t i = 0; i < ks.size(); ++i) list.push_back(value_json(ks[i], values[i]));
    json r = per_rho ? json{{"index", chosen ? json(*chosen) : json(nullptr)}, {"thick", rho.thick}} : json(nullptr);
    emit(out, {{"command", "invariant"}, {"file", file}, {"rho", r}, {"values", list}});
    return 0;
  }
  for (std::size_t i = 0; i < ks.size(); ++i)
    out << "I_" << ks[i].value() << (per_rho ? "(G,rho)" : "(G)") << " = " << format_complex(values[i]) << '\n';
  return 0;
}

int cmd_verify(const std::string& manifest, std::optional<int> k, const Options& o, std::ostream& out) {
  const auto entries = load_manifest(manifest);
  std::optional<RootIndex> root;
  if (k) root = RootIndex(*k);
  std::vector<PairReport> reports;
  for (const auto& e : entries) reports.push_back(verify_pair(e, root, o.threads));
  std::size_t passed = 0;
  for (const auto& r : reports) passed += r.passed;
  if (o.json) {
    json list = json::array();
    for (const auto& r : reports)
      list.push_back({{"name", r.entry.name},
                      {"move", r.entry.move},
                      {"expect", r.entry.exact ? "exact" : "root"},
                      {"kind", to_string(r.kind)},
                      {"passed", r.passed},
                      {"poly_equal", r.poly_equal},
                      {"max_deviation", r.max_deviation},
                      {"detail", r.detail}});
    emit(out, {{"command", "verify"}, {"manifest", manifest}, {"pairs", list}, {"passed", passed}, {"total", reports.size()}});
  } else {
    for (const auto& r : reports) {
      out << (r.passed ? "PASS " : "FAIL ") << r.entry.name << " (" << r.entry.move << ", "
          << (r.entry.exact ? "exact" : "root") << ", " << to_string(r.kind)
          << (r.poly_equal ? ", polynomials equal" : ", polynomials differ") << ")";
      if (!r.detail.empty()) out << ": " << r.detail;
      out << '\n';
    }
    out << passed << '/' << reports.size() << " pairs passed\n";
  }
  return passed == reports.size() ? 0 : 3;
}

int cmd_validate(const std::string& file, const Options& o, std::ostream& out, std::ostream& err) {
  const TangleDiagram d = load_tng(file);
  const auto report = validate(d);
  if (o.json) {
    emit(out, {{"command", "validate"}, {"file", file}, {"ok", report.ok()}, {"errors", report.errors}});
  } else if (report.ok()) {
    out << "ok\n";
  }
  if (!report.ok() && !o.json)
    for (const auto& e : report.errors) err << file << ": " << e << '\n';
  return report.ok() ? 0 : 2;
}

}  // namespace

std::string format_complex(std::complex<double> z) {
  std::string im = fixed9(z.imag());
  std::string sign = " + ";
  if (im.front() == '-') {
    sign = " - ";
    im.erase(0, 1);
  }
  return fixed9(z.real()) + sign + im + "i";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Three-move tangle invariants and enhanced trivalent graph invariants", "tangleinv"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--threads", o.threads, "Worker threads for state sums")->check(CLI::PositiveNumber);

  int m = 0, n = 0;
  std::string file;
  std::optional<int> k;
  std::optional<std::size_t> rho_index;
  bool all_k = false;

  auto* basis = app.add_subcommand("basis", "List the flat (m,n) basis");
  basis->add_option("m", m)->required()->check(CLI::NonNegativeNumber);
  basis->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
  auto* br = app.add_subcommand("bracket", "Skein class in the flat basis");
  br->add_option("file", file)->required();
  auto* pairing = app.add_subcommand("pairing", "Plat-closure pairing matrix");
  pairing->add_option("m", m)->required()->check(CLI::NonNegativeNumber);
  pairing->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
  auto* p = app.add_subcommand("p", "P(D), optionally evaluated at a root");
  p->add_option("file", file)->required();
  p->add_option("--k", k, "Root index");
  auto* rho = app.add_subcommand("rho", "Enumerate enhancements");
  rho->add_option("file", file)->required();
  auto* states = app.add_subcommand("states", "States of the contracted diagram");
  states->add_option("file", file)->required();
  states->add_option("--rho", rho_index, "Enhancement index (see the rho command)");
  auto* inv = app.add_subcommand("invariant", "I_k(G) or I_k(G,rho)");
  inv->add_option("file", file)->required();
  inv->add_option("--rho", rho_index, "Enhancement index (see the rho command)");
  auto* inv_k = inv->add_option("--k", k, "Root index");
  auto* inv_all = inv->add_flag("--all-k", all_k, "All eight root indices");
  inv_k->excludes(inv_all);
  auto* verify = app.add_subcommand("verify", "Check a fixture manifest");
  verify->add_option("manifest", file)->required();
  verify->add_option("--k", k, "Only this root index");
  auto* val = app.add_subcommand("validate", "Check a diagram file");
  val->add_option("file", file)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  try {
    if (*basis) return cmd_basis(m, n, o, out);
    if (*br) return cmd_bracket(file, o, out);
    if (*pairing) return cmd_pairing(m, n, o, out);
    if (*p) return cmd_p(file, k, o, out);
    if (*rho) return cmd_rho(file, o, out);
    if (*states) return cmd_states(file, rho_index, o, out);
    if (*inv) return cmd_invariant(file, rho_index, k, all_k, o, out);
    if (*verify) return cmd_verify(file, k, o, out);
    if (*val) return cmd_validate(file, o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
  return 1;
}

}  // namespace tangleinv

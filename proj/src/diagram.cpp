#include "tangleinv/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>

#include "tangleinv/error.hpp"
#include "tangleinv/port_graph.hpp"

namespace tangleinv {

Label TangleDiagram::max_label() const {
  const auto all = labels();
  return all.empty() ? 0 : *all.rbegin();
}

std::set<Label> TangleDiagram::labels() const {
  std::set<Label> out;
  for (const auto& x : crossings) out.insert(x.ends.begin(), x.ends.end());
  for (const auto& v : trivalent) out.insert(v.ends.begin(), v.ends.end());
  for (const auto& f : fourvalent) out.insert(f.ends.begin(), f.ends.end());
  out.insert(circles.begin(), circles.end());
  out.insert(bottom.begin(), bottom.end());
  out.insert(top.begin(), top.end());
  return out;
}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == '#') break;
    if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '|') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
      if (ch == '|') out.emplace_back("|");
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

Label parse_label(const std::string& tok, int line) {
  Label v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || v <= 0)
    throw ParseError(line, "expected a positive integer label, got '" + tok + "'");
  return v;
}

int parse_count(const std::string& tok, const std::string& key, int line) {
  const std::string prefix = key + "=";
  if (tok.rfind(prefix, 0) != 0) throw ParseError(line, "expected '" + prefix + "<int>', got '" + tok + "'");
  int v = -1;
  const char* b = tok.data() + prefix.size();
  auto [ptr, ec] = std::from_chars(b, tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 0)
    throw ParseError(line, "bad count in '" + tok + "'");
  return v;
}

template <std::size_t N>
std::array<Label, N> parse_ends(const std::vector<std::string>& toks, int line) {
  if (toks.size() != N + 1)
    throw ParseError(line, "'" + toks[0] + "' expects " + std::to_string(N) + " labels, got " +
                               std::to_string(toks.size() - 1));
  std::array<Label, N> ends{};
  for (std::size_t i = 0; i < N; ++i) ends[i] = parse_label(toks[i + 1], line);
  return ends;
}

}  // namespace

TangleDiagram parse_tng(std::string_view text) {
  TangleDiagram d;
  int header_m = -1;
  int header_n = -1;
  bool have_header = false;
  bool have_boundary = false;
  bool have_thick = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& head = toks[0];
    if (!have_header && head != "tangle") throw ParseError(line_no, "expected 'tangle m=<int> n=<int>' header first");
    if (head == "tangle") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (toks.size() != 3) throw ParseError(line_no, "header must be 'tangle m=<int> n=<int>'");
      header_m = parse_count(toks[1], "m", line_no);
      header_n = parse_count(toks[2], "n", line_no);
      have_header = true;
    } else if (head == "X") {
      d.crossings.push_back({parse_ends<4>(toks, line_no)});
    } else if (head == "V") {
      d.trivalent.push_back({parse_ends<3>(toks, line_no)});
    } else if (head == "F") {
      d.fourvalent.push_back({parse_ends<4>(toks, line_no)});
    } else if (head == "O") {
      d.circles.push_back(parse_ends<1>(toks, line_no)[0]);
    } else if (head == "B") {
      if (have_boundary) throw ParseError(line_no, "duplicate B line");
      have_boundary = true;
      auto bar = std::find(toks.begin(), toks.end(), "|");
      if (bar == toks.end()) throw ParseError(line_no, "B line needs a '|' separating bottom from top");
      if (std::find(bar + 1, toks.end(), "|") != toks.end()) throw ParseError(line_no, "B line has more than one '|'");
      for (auto it = toks.begin() + 1; it != bar; ++it) d.bottom.push_back(parse_label(*it, line_no));
      for (auto it = bar + 1; it != toks.end(); ++it) d.top.push_back(parse_label(*it, line_no));
      if (d.m() != header_m || d.n() != header_n)
        throw ParseError(line_no, "boundary has " + std::to_string(d.m()) + " bottom and " +
                                      std::to_string(d.n()) + " top labels, header says m=" +
                                      std::to_string(header_m) + " n=" + std::to_string(header_n));
    } else if (head == "T") {
      if (have_thick) throw ParseError(line_no, "duplicate T line");
      have_thick = true;
      for (auto it = toks.begin() + 1; it != toks.end(); ++it) d.thick.insert(parse_label(*it, line_no));
    } else {
      throw ParseError(line_no, "unknown line type '" + head + "'");
    }
  }
  if (!have_header) throw ParseError(line_no, "missing 'tangle' header");
  if (!have_boundary) throw ParseError(line_no, "missing B line");
  const auto report = check_invariants(d);
  if (!report.ok()) throw ValidationError(report.errors.front());
  return d;
}

TangleDiagram load_tng(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_tng(ss.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

std::string serialize_tng(const TangleDiagram& d) {
  std::ostringstream out;
  out << "tangle m=" << d.m() << " n=" << d.n() << "\n";
  for (const auto& x : d.crossings)
    out << "X " << x.ends[0] << ' ' << x.ends[1] << ' ' << x.ends[2] << ' ' << x.ends[3] << "\n";
  for (const auto& v : d.trivalent) out << "V " << v.ends[0] << ' ' << v.ends[1] << ' ' << v.ends[2] << "\n";
  for (const auto& f : d.fourvalent)
    out << "F " << f.ends[0] << ' ' << f.ends[1] << ' ' << f.ends[2] << ' ' << f.ends[3] << "\n";
  for (Label c : d.circles) out << "O " << c << "\n";
  out << "B";
  for (Label b : d.bottom) out << ' ' << b;
  out << " |";
  for (Label t : d.top) out << ' ' << t;
  out << "\n";
  if (!d.thick.empty()) {
    out << "T";
    for (Label t : d.thick) out << ' ' << t;
    out << "\n";
  }
  return out.str();
}

ValidationReport check_invariants(const TangleDiagram& d) {
  ValidationReport r;
  if ((d.m() + d.n()) % 2 != 0)
    r.errors.push_back("m + n = " + std::to_string(d.m() + d.n()) + " is odd");

  enum class Site { Crossing, Trivalent, Fourvalent, Boundary, Circle };
  struct Occ {
    Site site;
    int index;
  };
  std::map<Label, std::vector<Occ>> occ;
  for (std::size_t i = 0; i < d.crossings.size(); ++i)
    for (Label l : d.crossings[i].ends) occ[l].push_back({Site::Crossing, static_cast<int>(i)});
  for (std::size_t i = 0; i < d.trivalent.size(); ++i)
    for (Label l : d.trivalent[i].ends) occ[l].push_back({Site::Trivalent, static_cast<int>(i)});
  for (std::size_t i = 0; i < d.fourvalent.size(); ++i)
    for (Label l : d.fourvalent[i].ends) occ[l].push_back({Site::Fourvalent, static_cast<int>(i)});
  for (std::size_t i = 0; i < d.bottom.size(); ++i) occ[d.bottom[i]].push_back({Site::Boundary, static_cast<int>(i)});
  for (std::size_t i = 0; i < d.top.size(); ++i)
    occ[d.top[i]].push_back({Site::Boundary, static_cast<int>(d.bottom.size() + i)});
  for (std::size_t i = 0; i < d.circles.size(); ++i) occ[d.circles[i]].push_back({Site::Circle, static_cast<int>(i)});

  auto where = [](const Occ& o) {
    switch (o.site) {
      case Site::Crossing:
        return "crossing #" + std::to_string(o.index + 1);
      case Site::Trivalent:
        return "trivalent vertex #" + std::to_string(o.index + 1);
      case Site::Fourvalent:
        return "4-valent vertex #" + std::to_string(o.index + 1);
      case Site::Boundary:
        return "boundary position " + std::to_string(o.index + 1);
      case Site::Circle:
        return "circle #" + std::to_string(o.index + 1);
    }
    return std::string("?");
  };

  for (const auto& [label, list] : occ) {
    if (label <= 0) r.errors.push_back("label " + std::to_string(label) + " is not positive");
    const bool circle = std::any_of(list.begin(), list.end(), [](const Occ& o) { return o.site == Site::Circle; });
    const std::size_t expected = circle ? 1 : 2;
    if (list.size() != expected) {
      std::string msg = "label " + std::to_string(label) + " occurs " + std::to_string(list.size()) +
                        " time(s) (expected " + std::to_string(expected) + ") at";
      for (std::size_t i = 0; i < list.size(); ++i) msg += (i ? ", " : " ") + where(list[i]);
      r.errors.push_back(msg);
    }
  }
  for (Label t : d.thick) {
    const std::string name = "thick label " + std::to_string(t);
    auto it = occ.find(t);
    if (it == occ.end()) {
      r.errors.push_back(name + " does not occur in the diagram");
      continue;
    }
    const auto& list = it->second;
    if (list.size() == 1 && list[0].site == Site::Circle) {
      r.errors.push_back(name + " is a circle component");
      continue;
    }
    bool ok = true;
    for (const auto& o : list) {
      if (o.site == Site::Crossing) {
        r.errors.push_back(name + " appears at " + where(o) + " (thick edges must be crossing-free)");
        ok = false;
      } else if (o.site == Site::Boundary) {
        r.errors.push_back(name + " is an external edge (" + where(o) + ")");
        ok = false;
      } else if (o.site != Site::Trivalent) {
        r.errors.push_back(name + " appears at " + where(o) + " (thick edges join trivalent vertices)");
        ok = false;
      }
    }
    if (ok && list.size() == 2 && list[0].site == Site::Trivalent && list[1].site == Site::Trivalent &&
        list[0].index == list[1].index)
      r.errors.push_back(name + " is a loop at " + where(list[0]));
  }
  return r;
}

ValidationReport validate(const TangleDiagram& d) {
  ValidationReport r = check_invariants(d);
  if (!r.ok()) return r;
  const PortGraph g = PortGraph::from_diagram(d);
  if (!g.planar()) r.errors.emplace_back("nonplanar or inconsistent rotation system");
  return r;
}

void require_valid(const TangleDiagram& d) {
  const auto r = validate(d);
  if (r.ok()) return;
  std::string msg;
  for (std::size_t i = 0; i < r.errors.size(); ++i) msg += (i ? "; " : "") + r.errors[i];
  throw ValidationError(msg);
}

TangleDiagram mirror(const TangleDiagram& d) {
  TangleDiagram out = d;
  for (auto& x : out.crossings) std::rotate(x.ends.begin(), x.ends.begin() + 1, x.ends.end());
  return out;
}

TangleDiagram tensor(const TangleDiagram& left, const TangleDiagram& right) {
  const Label shift = left.max_label();
  auto s = [shift](Label l) { return l + shift; };
  TangleDiagram out = left;
  for (auto x : right.crossings) {
    for (auto& l : x.ends) l = s(l);
    out.crossings.push_back(x);
  }
  for (auto v : right.trivalent) {
    for (auto& l : v.ends) l = s(l);
    out.trivalent.push_back(v);
  }
  for (auto f : right.fourvalent) {
    for (auto& l : f.ends) l = s(l);
    out.fourvalent.push_back(f);
  }
  for (Label c : right.circles) out.circles.push_back(s(c));
  for (Label b : right.bottom) out.bottom.push_back(s(b));
  for (Label t : right.top) out.top.push_back(s(t));
  for (Label t : right.thick) out.thick.insert(s(t));
  return out;
}

namespace {

// Breadth-first listing of one component from a fixed entry slot.
std::string component_code(const PortGraph& g, Slot entry) {
  std::map<int, int> node_id;
  std::map<std::pair<Slot, Slot>, int> edge_id;
  std::queue<Slot> todo;
  node_id[entry.node] = 0;
  todo.push(entry);
  std::string code;
  while (!todo.empty()) {
    const Slot in = todo.front();
    todo.pop();
    const int deg = g.degree(in.node);
    switch (g.kind(in.node)) {
      case NodeKind::Crossing:
        code += in.index % 2 == 0 ? "X0(" : "X1(";
        break;
      case NodeKind::Trivalent:
        code += "V(";
        break;
      case NodeKind::Fourvalent:
        code += "F(";
        break;
      case NodeKind::Boundary:
        code += "B(";
        break;
    }
    for (int k = 0; k < deg; ++k) {
      const Slot s{in.node, (in.index + k) % deg};
      const Slot p = g.partner(s);
      const auto key = std::minmax(s, p);
      auto [it, fresh] = edge_id.emplace(key, static_cast<int>(edge_id.size()));
      code += std::to_string(it->second);
      if (g.thick(s)) code += "*";
      code += k + 1 < deg ? "," : "";
      if (!node_id.count(p.node)) {
        node_id[p.node] = static_cast<int>(node_id.size());
        todo.push(p);
      }
    }
    code += ")";
  }
  return code;
}

}  // namespace

std::string canonical_code(const TangleDiagram& d) {
  const PortGraph g = PortGraph::from_diagram(d);
  int count = 0;
  const auto comp = g.component_of_nodes(&count);
  std::string boundary_code;
  std::vector<std::string> closed;
  std::vector<std::string> best(count);
  std::vector<char> has_best(count, 0);
  const int b = g.boundary_node();
  for (int id = 0; id < g.node_count(); ++id) {
    if (comp[id] < 0) continue;
    const int c = comp[id];
    if (b >= 0 && comp[b] == c) continue;
    for (int i = 0; i < g.degree(id); ++i) {
      std::string code = component_code(g, Slot{id, i});
      if (!has_best[c] || code < best[c]) {
        best[c] = std::move(code);
        has_best[c] = 1;
      }
    }
  }
  if (b >= 0 && comp[b] >= 0) boundary_code = component_code(g, Slot{b, 0});
  for (int c = 0; c < count; ++c)
    if (has_best[c]) closed.push_back(best[c]);
  std::sort(closed.begin(), closed.end());
  std::string out = std::to_string(d.m()) + "," + std::to_string(d.n()) + "|" + boundary_code + "|";
  for (const auto& c : closed) out += c + ";";
  int thick_circles = 0;
  for (Label c : d.circles) thick_circles += d.thick.count(c) ? 1 : 0;
  out += "|O" + std::to_string(d.circles.size() - thick_circles);
  if (thick_circles) out += "|O*" + std::to_string(thick_circles);
  return out;
}

bool isomorphic(const TangleDiagram& a, const TangleDiagram& b) { return canonical_code(a) == canonical_code(b); }

std::vector<std::vector<Dart>> faces(const TangleDiagram& d) {
  const PortGraph g = PortGraph::from_diagram(d);
  std::vector<std::vector<Dart>> out;
  for (const auto& face : g.faces()) {
    std::vector<Dart> f;
    for (Slot s : face) f.push_back(g.dart_of(s));
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace tangleinv

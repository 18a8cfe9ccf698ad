#include "hlbench/text_format.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "hlbench/error.h"
#include "hlbench/rational.h"

namespace hlbench {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(Errc::kParse, "line " + std::to_string(line) + ": " + what);
}

std::uint64_t parse_nat(const std::string& text, std::size_t line) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      text.size() > 19) {
    fail(line, "expected a natural number, got '" + text + "'");
  }
  return std::stoull(text);
}

struct Line {
  std::size_t number;
  std::string text;
};

// Header "<magic> v1 key=value ..." followed by body lines.
class Document {
 public:
  Document(std::istream& in, const std::string& magic) {
    std::string raw;
    std::size_t number = 0;
    bool have_header = false;
    while (std::getline(in, raw)) {
      ++number;
      std::string text = trim(raw);
      if (!have_header) {
        if (text.empty() || text[0] == '#') continue;
        parse_header(text, number, magic);
        have_header = true;
        continue;
      }
      if (text.empty() || text[0] == '#') continue;
      lines_.push_back({number, std::move(text)});
    }
    if (!have_header) fail(number + 1, "missing '" + magic + " v1' header");
  }

  const std::vector<Line>& lines() const { return lines_; }
  std::size_t header_line() const { return header_line_; }

  bool has(const std::string& key) const { return fields_.contains(key); }
  std::string get(const std::string& key) const {
    auto it = fields_.find(key);
    if (it == fields_.end()) fail(header_line_, "header lacks '" + key + "='");
    return it->second;
  }
  std::uint64_t get_nat(const std::string& key) const { return parse_nat(get(key), header_line_); }

 private:
  void parse_header(const std::string& text, std::size_t number, const std::string& magic) {
    header_line_ = number;
    std::istringstream ss(text);
    std::string word, version;
    ss >> word >> version;
    if (word != magic) fail(number, "expected header '" + magic + " v1', got '" + word + "'");
    if (version != "v1") fail(number, "unsupported version '" + version + "'");
    std::string tok;
    while (ss >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos || eq == 0) fail(number, "malformed header field '" + tok + "'");
      fields_[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
  }

  std::vector<Line> lines_;
  std::map<std::string, std::string> fields_;
  std::size_t header_line_ = 0;
};

template <class F>
auto at_line(std::size_t line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == Errc::kParse && std::string(e.what()).find("line ") != std::string::npos) throw;
    fail(line, e.what());
  }
}

int depth_field(const Document& doc) {
  const auto d = doc.get_nat("depth");
  if (d < 1 || d > static_cast<std::uint64_t>(kMaxDepth)) fail(doc.header_line(), "depth outside [1, 64]");
  return static_cast<int>(d);
}

std::map<std::string, Rational> parse_params(const std::string& text, std::size_t line) {
  std::map<std::string, Rational> out;
  if (text.empty() || text == "-") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) fail(line, "malformed parameter '" + item + "'");
    try {
      out[item.substr(0, eq)] = parse_fraction(item.substr(eq + 1));
    } catch (const std::exception&) {
      fail(line, "parameter '" + item + "' is not a fraction");
    }
  }
  return out;
}

template <class R>
R open_and_read(const std::string& path, R (*reader)(std::istream&)) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kNotFound, "cannot open '" + path + "'");
  return reader(in);
}

}  // namespace

Rational parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  auto integer = [](const std::string& s) {
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                                          [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::runtime_error("not an integer: '" + s + "'");
    }
    return BigInt(s);
  };
  if (slash == std::string::npos) return Rational(integer(text));
  const BigInt den = integer(text.substr(slash + 1));
  if (den == 0) throw std::runtime_error("zero denominator");
  return Rational(integer(text.substr(0, slash)), den);
}

LevelTree read_tree(std::istream& in) {
  Document doc(in, "tree");
  const int depth = depth_field(doc);
  std::vector<std::vector<BinaryString>> levels(static_cast<std::size_t>(depth));
  for (const auto& line : doc.lines()) {
    auto s = at_line(line.number, [&] { return BinaryString::parse(line.text); });
    if (s.length() >= depth) fail(line.number, "node '" + line.text + "' not below depth " + std::to_string(depth));
    levels[static_cast<std::size_t>(s.length())].push_back(s);
  }
  LevelTree t(depth, std::move(levels));
  auto report = validate(t);
  if (!report.ok()) throw Error(Errc::kValidation, report.to_string());
  return t;
}

void write_tree(std::ostream& out, const LevelTree& t) {
  out << "tree v1 depth=" << t.depth() << "\n";
  for (const auto& s : t.nodes()) out << s.to_token() << "\n";
}

Coloring read_coloring(std::istream& in) {
  Document doc(in, "coloring");
  Coloring c(depth_field(doc), 0);
  for (const auto& line : doc.lines()) {
    std::istringstream ss(line.text);
    std::string node, value, extra;
    ss >> node >> value;
    if (value.empty() || (ss >> extra)) fail(line.number, "expected '<node> <0|1>'");
    if (value != "0" && value != "1") fail(line.number, "color must be 0 or 1");
    auto s = at_line(line.number, [&] { return BinaryString::parse(node); });
    if (s.length() >= c.depth()) fail(line.number, "node '" + node + "' not below depth");
    c.set(s, value == "1" ? 1 : 0);
  }
  return c;
}

void write_coloring(std::ostream& out, const Coloring& c) {
  if (c.depth() > 22) throw Error(Errc::kRange, "coloring too large to write node by node");
  out << "coloring v1 depth=" << c.depth() << "\n";
  for (int n = 0; n < c.depth(); ++n) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      BinaryString s(v, n);
      out << s.to_token() << ' ' << c.color(s) << "\n";
    }
  }
}

NatSet read_natset(std::istream& in) {
  Document doc(in, "natset");
  const auto bound = doc.get_nat("bound");
  std::vector<std::uint64_t> members;
  for (const auto& line : doc.lines()) {
    const auto v = parse_nat(line.text, line.number);
    if (v >= bound) fail(line.number, "member " + line.text + " not below bound");
    members.push_back(v);
  }
  return NatSet(std::move(members), bound);
}

void write_natset(std::ostream& out, const NatSet& a) {
  out << "natset v1 bound=" << a.bound() << "\n";
  for (auto v : a.members()) out << v << "\n";
}

GridSet read_gridset(std::istream& in) {
  Document doc(in, "gridset");
  const auto bound = doc.get_nat("bound");
  std::vector<GridSet::Cell> cells;
  for (const auto& line : doc.lines()) {
    std::istringstream ss(line.text);
    std::string col, row, extra;
    ss >> col >> row;
    if (row.empty() || (ss >> extra)) fail(line.number, "expected '<col> <row>'");
    const auto c = parse_nat(col, line.number);
    const auto r = parse_nat(row, line.number);
    if (c >= bound || r >= bound) fail(line.number, "cell outside [0, bound)^2");
    cells.emplace_back(c, r);
  }
  return GridSet(std::move(cells), bound);
}

void write_gridset(std::ostream& out, const GridSet& e) {
  out << "gridset v1 bound=" << e.bound() << "\n";
  for (const auto& [c, r] : e.cells()) out << c << ' ' << r << "\n";
}

NodeSet read_nodeset(std::istream& in) {
  Document doc(in, "nodeset");
  const int depth = depth_field(doc);
  std::vector<BinaryString> nodes;
  for (const auto& line : doc.lines()) {
    auto s = at_line(line.number, [&] { return BinaryString::parse(line.text); });
    if (s.length() >= depth) fail(line.number, "node '" + line.text + "' not below depth");
    nodes.push_back(s);
  }
  return NodeSet(std::move(nodes), depth);
}

void write_nodeset(std::ostream& out, const NodeSet& a) {
  out << "nodeset v1 depth=" << a.depth() << "\n";
  for (const auto& s : a.nodes()) out << s.to_token() << "\n";
}

FiniteIdealPresentation read_presentation(std::istream& in) {
  Document doc(in, "ideal");
  FiniteIdealPresentation p;
  p.ground.kind = at_line(doc.header_line(), [&] { return parse_ground(doc.get("ground")); });
  p.ground.bound = doc.get_nat("bound");
  if (p.ground.kind == GroundKind::kNodes && (p.ground.bound < 1 || p.ground.bound > 22)) {
    fail(doc.header_line(), "node grounds need depth in [1, 22]");
  }
  p.surrogate.name = doc.get("surrogate");
  p.surrogate.params = parse_params(doc.has("params") ? doc.get("params") : "", doc.header_line());
  for (const auto& line : doc.lines()) {
    if (line.text == "gen" || line.text.rfind("gen ", 0) == 0) {
      p.generators.emplace_back();
      p.labels.push_back(line.text.size() > 4 ? trim(line.text.substr(4)) : "generator " + std::to_string(p.labels.size()));
      continue;
    }
    if (p.generators.empty()) fail(line.number, "point before the first 'gen' line");
    p.generators.back().push_back(at_line(line.number, [&] { return p.ground.parse_point(line.text); }));
  }
  for (auto& g : p.generators) {
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
  }
  return p;
}

void write_presentation(std::ostream& out, const FiniteIdealPresentation& p) {
  out << "ideal v1 ground=" << ground_name(p.ground.kind) << " bound=" << p.ground.bound
      << " surrogate=" << p.surrogate.name << " params=";
  if (p.surrogate.params.empty()) out << "-";
  bool first = true;
  for (const auto& [k, v] : p.surrogate.params) {
    out << (first ? "" : ",") << k << "=" << to_fraction(v);
    first = false;
  }
  out << "\n";
  for (std::size_t g = 0; g < p.generators.size(); ++g) {
    out << "gen " << (g < p.labels.size() ? p.labels[g] : "") << "\n";
    for (auto code : p.generators[g]) out << p.ground.format_point(code) << "\n";
  }
}

MorphismSpec read_morphism(std::istream& in, const Ground& target, const Ground& source) {
  Document doc(in, "morphism");
  MorphismSpec f;
  f.formula = "table";
  bool saw_formula = false;
  for (const auto& line : doc.lines()) {
    if (line.text.rfind("formula=", 0) == 0) {
      if (saw_formula || !f.table.empty()) fail(line.number, "formula must be the only body line");
      f.formula = line.text.substr(8);
      saw_formula = true;
      continue;
    }
    if (saw_formula) fail(line.number, "formula must be the only body line");
    const auto arrow = line.text.find("->");
    if (arrow == std::string::npos) fail(line.number, "expected '<y> -> <x>'");
    const std::string y = trim(line.text.substr(0, arrow));
    const std::string x = trim(line.text.substr(arrow + 2));
    const auto yc = at_line(line.number, [&] { return target.parse_point(y); });
    const auto xc = at_line(line.number, [&] { return source.parse_point(x); });
    if (!f.table.emplace(yc, xc).second) fail(line.number, "point '" + y + "' mapped twice");
  }
  return f;
}

void write_morphism(std::ostream& out, const MorphismSpec& f, const Ground& target, const Ground& source) {
  out << "morphism v1\n";
  if (f.formula != "table") {
    out << "formula=" << f.formula << "\n";
    return;
  }
  for (const auto& [y, x] : f.table) out << target.format_point(y) << " -> " << source.format_point(x) << "\n";
}

LevelTree load_tree(const std::string& path) { return open_and_read(path, &read_tree); }
Coloring load_coloring(const std::string& path) { return open_and_read(path, &read_coloring); }
NatSet load_natset(const std::string& path) { return open_and_read(path, &read_natset); }
GridSet load_gridset(const std::string& path) { return open_and_read(path, &read_gridset); }
NodeSet load_nodeset(const std::string& path) { return open_and_read(path, &read_nodeset); }
FiniteIdealPresentation load_presentation(const std::string& path) {
  return open_and_read(path, &read_presentation);
}

MorphismSpec load_morphism(const std::string& path, const Ground& target, const Ground& source) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kNotFound, "cannot open '" + path + "'");
  return read_morphism(in, target, source);
}

}  // namespace hlbench

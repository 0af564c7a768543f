#include "qlogic/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qlogic/error.hpp"

namespace qlogic {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw InvalidInput(std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bad value for '") + key + "': " + e.what());
  }
}

LatticeDocument lattice_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("lattice document must be an object");
  LatticeDocument doc;
  doc.raw.elements = field<std::vector<std::string>>(j, "elements");
  doc.raw.zero = field<std::string>(j, "zero");
  doc.raw.one = field<std::string>(j, "one");
  if (j.contains("order")) {
    for (const auto& pair : field<std::vector<std::vector<std::string>>>(j, "order")) {
      if (pair.size() != 2) throw InvalidInput("order entries must be [x, y] pairs");
      doc.raw.order.emplace_back(pair[0], pair[1]);
    }
  }
  if (j.contains("complement")) {
    doc.raw.complement = field<std::map<std::string, std::string>>(j, "complement");
    doc.has_complement = true;
  }
  if (j.contains("ground") || j.contains("sets")) {
    doc.ground = field<std::vector<std::string>>(j, "ground");
    doc.sets = field<std::map<std::string, std::vector<std::string>>>(j, "sets");
    for (const auto& e : doc.raw.elements) {
      if (!doc.sets.count(e)) throw InvalidInput("element '" + e + "' has no set");
    }
    if (doc.sets.size() != doc.raw.elements.size()) {
      throw InvalidInput("sets mention elements outside the element list");
    }
  } else if (!doc.has_complement || !j.contains("order")) {
    throw InvalidInput("order and complement are required without sets");
  }
  return doc;
}

json set_lattice_json(const SetLattice& l) {
  json sets = json::object();
  for (std::size_t i = 0; i < l.size(); ++i) {
    json members = json::array();
    for (std::size_t g = 0; g < l.ground().size(); ++g) {
      if (l.mask(i) >> g & 1) members.push_back(l.ground()[g]);
    }
    sets[l.name(i)] = members;
  }
  return sets;
}

struct Diagram {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<bool> marked;
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string render_dot(const Diagram& d) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < d.names.size(); ++i) {
    out << "  " << quote(d.names[i]);
    if (i < d.marked.size() && d.marked[i]) out << " [peripheries=2]";
    out << ";\n";
  }
  for (const auto& [x, y] : d.edges) {
    out << "  " << quote(d.names[x]) << " -> " << quote(d.names[y]) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_table(const Diagram& d) {
  std::ostringstream out;
  std::size_t marks = 0;
  for (std::size_t i = 0; i < d.marked.size(); ++i) marks += d.marked[i];
  out << d.names.size() << " nodes, " << d.edges.size() << " covering edges";
  if (!d.marked.empty()) out << ", " << marks << " marked";
  out << "\n";
  std::size_t width = 0;
  for (const auto& n : d.names) width = std::max(width, n.size());
  for (std::size_t i = 0; i < d.names.size(); ++i) {
    const bool mark = i < d.marked.size() && d.marked[i];
    out << (mark ? "* " : "  ") << d.names[i] << std::string(width - d.names[i].size(), ' ')
        << " <";
    for (const auto& [x, y] : d.edges) {
      if (x == i) out << " " << d.names[y];
    }
    out << "\n";
  }
  return out.str();
}

json marked_json(const Diagram& d) {
  json out = json::array();
  for (std::size_t i = 0; i < d.marked.size(); ++i) {
    if (d.marked[i]) out.push_back(d.names[i]);
  }
  return out;
}

}  // namespace

LatticeDocument parse_lattice(const std::string& text) {
  return lattice_from_json(parse_json(text));
}

SetLattice to_set_lattice(const LatticeDocument& doc) {
  if (!doc.set_mode()) throw InvalidInput("lattice file has no sets");
  return SetLattice(*doc.ground, doc.sets);
}

Orthoposet to_orthoposet(const LatticeDocument& doc) {
  if (!doc.set_mode()) return Orthoposet::from_raw(doc.raw);
  const SetLattice sets = to_set_lattice(doc);
  if (!doc.has_complement) return sets.to_orthoposet();
  RawOrthoposet raw = doc.raw;
  if (raw.order.empty()) {
    for (std::size_t a = 0; a < sets.size(); ++a) {
      for (auto b : sets.upper_covers(a)) raw.order.emplace_back(sets.name(a), sets.name(b));
    }
  }
  return Orthoposet::from_raw(raw);
}

RayDocument parse_rays(const std::string& text) {
  RayDocument doc;
  std::vector<ExactVec3> exact;
  bool all_exact = true;
  std::istringstream lines(text);
  std::string line;
  std::size_t number = 0, offset = 0;
  while (std::getline(lines, line)) {
    ++number;
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> parts;
    for (std::string t; tokens >> t;) parts.push_back(t);
    if (parts.empty()) continue;
    if (parts.size() != 3) {
      throw ParseError("line " + std::to_string(number) + ": expected 3 components, got " +
                           std::to_string(parts.size()),
                       line_start);
    }
    Vec3 v{};
    ExactVec3 e{};
    for (int c = 0; c < 3; ++c) {
      const auto& t = parts[c];
      if (t == "r2" || t == "+r2" || t == "-r2") {
        e[c] = Surd{0, t[0] == '-' ? -1 : 1};
        v[c] = e[c].value();
        continue;
      }
      std::size_t used = 0;
      try {
        v[c] = std::stod(t, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != t.size()) {
        throw ParseError("line " + std::to_string(number) + ": bad component '" + t + "'",
                         line_start);
      }
      if (t.find_first_of(".eE") == std::string::npos) {
        e[c] = Surd{std::stoll(t), 0};
      } else {
        all_exact = false;
      }
    }
    if (v[0] == 0 && v[1] == 0 && v[2] == 0) {
      throw ParseError("line " + std::to_string(number) + ": zero vector", line_start);
    }
    doc.vectors.push_back(v);
    exact.push_back(e);
  }
  if (all_exact) doc.exact = std::move(exact);
  return doc;
}

RaySet load_ray_set(const RayDocument& doc, double tolerance) {
  return doc.exact ? load_rays(*doc.exact) : load_rays(doc.vectors, tolerance);
}

PartitionDocument parse_partitions(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw InvalidInput("partition document must be an object");
  PartitionDocument doc;
  doc.n = field<std::size_t>(j, "n");
  doc.partitions = field<std::vector<Partition>>(j, "partitions");
  if (j.contains("labels")) doc.labels = field<std::map<std::string, std::string>>(j, "labels");
  return doc;
}

TheoryDocument parse_theory(const std::string& text, const std::filesystem::path& base) {
  const json j = parse_json(text);
  if (!j.is_object()) throw InvalidInput("theory document must be an object");
  TheoryDocument doc;
  if (!j.contains("lattice")) throw InvalidInput("missing key 'lattice'");
  const auto& lat = j.at("lattice");
  if (lat.is_string()) {
    doc.lattice = parse_lattice(read_file(base / lat.get<std::string>()));
  } else {
    doc.lattice = lattice_from_json(lat);
  }
  doc.map = field<std::map<std::string, std::string>>(j, "map");
  return doc;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

HasseFormat parse_hasse_format(const std::string& name) {
  if (name == "dot") return HasseFormat::dot;
  if (name == "table") return HasseFormat::table;
  if (name == "json") return HasseFormat::json;
  throw InvalidInput("unknown format '" + name + "' (expected dot, table or json)");
}

std::string export_hasse(const Orthoposet& l, HasseFormat format, const HasseOptions& options) {
  Diagram d{l.names(), l.covers(), options.highlight};
  if (format == HasseFormat::dot) return render_dot(d);
  if (format == HasseFormat::table) return render_table(d);
  json out;
  out["elements"] = l.names();
  json order = json::array();
  for (const auto& [x, y] : d.edges) order.push_back({l.name(x), l.name(y)});
  out["order"] = order;
  json comp = json::object();
  for (Element e = 0; e < l.size(); ++e) comp[l.name(e)] = l.name(l.comp(e));
  out["complement"] = comp;
  out["zero"] = l.name(l.zero());
  out["one"] = l.name(l.one());
  if (options.sets) {
    out["ground"] = options.sets->ground();
    out["sets"] = set_lattice_json(*options.sets);
  }
  if (!d.marked.empty()) out["highlight"] = marked_json(d);
  return out.dump(2) + "\n";
}

std::string export_hasse(const SetLattice& l, HasseFormat format,
                         const std::vector<bool>& highlight) {
  Diagram d;
  for (std::size_t i = 0; i < l.size(); ++i) d.names.push_back(l.name(i));
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (auto j : l.upper_covers(i)) d.edges.emplace_back(i, j);
  }
  d.marked = highlight;
  if (format == HasseFormat::dot) return render_dot(d);
  if (format == HasseFormat::table) return render_table(d);
  json out;
  out["elements"] = d.names;
  json order = json::array();
  for (const auto& [x, y] : d.edges) order.push_back({d.names[x], d.names[y]});
  out["order"] = order;
  out["zero"] = l.name(l.bottom());
  out["one"] = l.name(l.top());
  out["ground"] = l.ground();
  out["sets"] = set_lattice_json(l);
  if (!d.marked.empty()) out["highlight"] = marked_json(d);
  return out.dump(2) + "\n";
}

}  // namespace qlogic

#include "qlogic/cli.hpp"

#include <filesystem>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlogic/coloring.hpp"
#include "qlogic/error.hpp"
#include "qlogic/io.hpp"
#include "qlogic/kalmbach.hpp"
#include "qlogic/partition.hpp"
#include "qlogic/sphere.hpp"
#include "qlogic/states.hpp"
#include "qlogic/stone.hpp"
#include "qlogic/theory.hpp"

namespace qlogic {

using nlohmann::json;

namespace {

struct Common {
  std::string format = "text";
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 1;
  bool deterministic = true;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string ideal_set(const Orthoposet& l, const ElementSet& members) {
  std::vector<std::string> names;
  for (auto e = members.find_first(); e != ElementSet::npos; e = members.find_next(e)) {
    names.push_back(l.name(e));
  }
  return "{" + join(names) + "}";
}

// Bits rendered as the 1-based positions that are set.
std::string index_set(const ElementSet& bits) {
  std::vector<std::string> idx;
  for (auto i = bits.find_first(); i != ElementSet::npos; i = bits.find_next(i)) {
    idx.push_back(std::to_string(i + 1));
  }
  return "{" + join(idx, ",") + "}";
}

std::string bit_row(const ElementSet& bits) {
  std::string s;
  for (std::size_t i = 0; i < bits.size(); ++i) s += bits[i] ? '1' : '0';
  return s;
}

std::size_t name_width(const std::vector<std::string>& names) {
  std::size_t w = 0;
  for (const auto& n : names) w = std::max(w, n.size());
  return w;
}

std::string pad(const std::string& s, std::size_t w) {
  return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
}

Vec3 parse_vec3(const std::string& text) {
  Vec3 v{};
  std::stringstream in(text);
  std::string part;
  int c = 0;
  while (std::getline(in, part, ',')) {
    if (c == 3) throw InvalidInput("expected three comma-separated components: " + text);
    std::size_t used = 0;
    try {
      v[c] = std::stod(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size() || part.empty()) throw InvalidInput("bad number '" + part + "'");
    ++c;
  }
  if (c != 3) throw InvalidInput("expected three comma-separated components: " + text);
  return v;
}

int cmd_check(const std::string& path, const Common& o, std::ostream& out) {
  const auto doc = parse_lattice(read_file(path));
  if (doc.set_mode() && !doc.has_complement) {
    const auto sets = to_set_lattice(doc);
    try {
      const auto l = sets.to_orthoposet();
      (void)l;
    } catch (const InvalidInput&) {
      if (o.format == "json") {
        out << json{{"valid", true}, {"kind", "set lattice"}, {"elements", sets.size()}}.dump()
            << "\n";
      } else {
        out << "valid set lattice, " << sets.size() << " elements (no orthocomplement)\n";
      }
      return kExitOk;
    }
  }
  const auto l = to_orthoposet(doc);
  const bool lattice = l.is_lattice();
  std::optional<Triple> witness;
  if (lattice) witness = find_distributivity_violation(l);
  if (o.format == "json") {
    json j{{"valid", true}, {"kind", "orthoposet"}, {"elements", l.size()},
           {"ortholattice", lattice}};
    if (lattice) {
      j["distributive"] = !witness;
      if (witness) j["witness"] = {l.name(witness->p), l.name(witness->q), l.name(witness->r)};
    }
    out << j.dump() << "\n";
    return kExitOk;
  }
  out << "valid orthoposet, " << l.size() << " elements\n";
  out << "ortholattice: " << yes_no(lattice) << "\n";
  if (lattice) {
    out << "distributive: " << yes_no(!witness);
    if (witness) {
      out << " (p ^ (q v r) != (p ^ q) v (p ^ r) at p=" << l.name(witness->p)
          << ", q=" << l.name(witness->q) << ", r=" << l.name(witness->r) << ")";
    }
    out << "\n";
  }
  return kExitOk;
}

int cmd_states(const std::string& path, const std::string& regime, const Common& o,
               std::ostream& out) {
  const auto l = to_orthoposet(parse_lattice(read_file(path)));
  std::vector<StateRegime> regimes;
  if (regime == "morphism" || regime == "both") regimes.push_back(StateRegime::morphism);
  if (regime == "additive" || regime == "both") regimes.push_back(StateRegime::additive);
  json j = json::object();
  const auto w = name_width({"state"}) + 2;
  for (auto r : regimes) {
    const auto family = enumerate_states(l, r);
    if (o.format == "json") {
      json rows = json::array();
      for (const auto& s : family.states) {
        json row = json::object();
        for (Element e = 0; e < l.size(); ++e) row[l.name(e)] = int(s.values[e]);
        rows.push_back(row);
      }
      j[to_string(r)] = {{"states", rows},
                         {"separating", family.separating},
                         {"unital", family.unital}};
      continue;
    }
    out << to_string(r) << " states: " << family.states.size()
        << " (separating: " << yes_no(family.separating)
        << ", unital: " << yes_no(family.unital) << ")\n";
    out << pad("", w);
    for (Element e = 0; e < l.size(); ++e) out << " " << l.name(e);
    out << "\n";
    for (std::size_t i = 0; i < family.states.size(); ++i) {
      out << pad("s" + std::to_string(i + 1), w);
      for (Element e = 0; e < l.size(); ++e) {
        out << " " << pad(family.states[i].values[e] ? "1" : "0", l.name(e).size());
      }
      out << "\n";
    }
  }
  if (o.format == "json") out << j.dump() << "\n";
  return kExitOk;
}

int cmd_stone(const std::string& path, const Common& o, std::ostream& out) {
  const auto l = to_orthoposet(parse_lattice(read_file(path)));
  const auto e = stone_embed(l);
  const auto check = verify_stone(l, e);
  if (o.format == "json") {
    json ideals = json::array();
    for (const auto& i : e.ideals) {
      json members = json::array();
      for (auto x = i.members.find_first(); x != ElementSet::npos; x = i.members.find_next(x)) {
        members.push_back(l.name(x));
      }
      ideals.push_back(members);
    }
    json phi = json::object();
    for (Element x = 0; x < l.size(); ++x) {
      json idx = json::array();
      for (auto i = e.image[x].find_first(); i != ElementSet::npos; i = e.image[x].find_next(i)) {
        idx.push_back(i + 1);
      }
      phi[l.name(x)] = idx;
    }
    out << json{{"ideals", ideals},
                {"phi", phi},
                {"injective", check.injective},
                {"order_preserving", check.order_preserving},
                {"complement_preserving", check.complement_preserving}}
               .dump()
        << "\n";
    return check.ok() ? kExitOk : kExitValidation;
  }
  out << e.dimension() << " maximal ideals\n";
  for (std::size_t i = 0; i < e.ideals.size(); ++i) {
    out << "  I" << i + 1 << " = " << ideal_set(l, e.ideals[i].members) << "\n";
  }
  out << "embedding into 2^" << e.dimension() << ", phi(p) = {i : p not in I_i}\n";
  const auto w = name_width(l.names());
  for (Element x = 0; x < l.size(); ++x) {
    out << "  " << pad(l.name(x), w) << "  " << bit_row(e.image[x]) << "  "
        << index_set(e.image[x]) << "\n";
  }
  out << "injective: " << yes_no(check.injective)
      << ", order-preserving: " << yes_no(check.order_preserving)
      << ", complement-preserving: " << yes_no(check.complement_preserving) << "\n";
  return check.ok() ? kExitOk : kExitValidation;
}

int cmd_kalmbach(const std::string& path, const Common& o, std::ostream& out) {
  const auto sets = to_set_lattice(parse_lattice(read_file(path)));
  const auto k = kalmbach_embed(sets);
  const auto check = verify_kalmbach(sets, k);
  const auto comp = verify_complement_failure(sets, k);
  std::vector<std::string> dims;
  for (const auto& b : k.blocks()) dims.push_back("2^" + std::to_string(b.dimension()));
  if (o.format == "json") {
    json embed = json::object();
    for (std::size_t x = 0; x < sets.size(); ++x) embed[sets.name(x)] = k.logic().name(k.embed(x));
    json j{{"blocks", dims},
           {"elements", k.size()},
           {"classes", k.logic().names()},
           {"embed", embed},
           {"meets_and_joins_preserved", check.ok()},
           {"missing_bounds", check.missing_bounds}};
    j["complement_failure"] = comp ? json(sets.name(*comp)) : json(nullptr);
    out << j.dump() << "\n";
    return check.ok() ? kExitOk : kExitValidation;
  }
  out << "maximal chains: " << k.blocks().size() << " (blocks " << join(dims) << ")\n";
  for (std::size_t b = 0; b < k.blocks().size(); ++b) {
    std::vector<std::string> chain;
    for (auto x : k.blocks()[b].chain) chain.push_back(sets.name(x));
    out << "  block " << char('A' + std::min<std::size_t>(b, 25)) << ": " << join(chain, " < ")
        << "\n";
  }
  out << "K(L): " << k.size() << " elements\n";
  for (std::size_t x = 0; x < sets.size(); ++x) {
    out << "  " << sets.name(x) << " -> " << k.logic().name(k.embed(x)) << "\n";
  }
  out << "well-defined: " << yes_no(check.well_defined)
      << ", injective: " << yes_no(check.injective)
      << ", blocks embedded: " << yes_no(check.blocks_embedded)
      << ", meets and joins preserved: "
      << yes_no(check.meet_failures.empty() && check.join_failures.empty()) << "\n";
  if (comp) {
    out << "complement not preserved at " << sets.name(*comp) << "\n";
  } else {
    out << "complement preserved wherever L has a set complement\n";
  }
  return check.ok() ? kExitOk : kExitValidation;
}

int cmd_malhas(const std::string& path, const Common& o, std::ostream& out) {
  const auto doc = parse_theory(read_file(path), std::filesystem::path(path).parent_path());
  const auto l = to_orthoposet(doc.lattice);
  const auto m = build_theory(l, doc.map);
  const auto e = malhas_embed(m);
  std::size_t lemma_pairs = 0, lemma_ok = 0;
  const std::vector<Proposition> theory{characteristic_formula(m)};
  for (std::size_t p = 0; p < m.names.size(); ++p) {
    for (std::size_t q = 0; q < m.names.size(); ++q) {
      ++lemma_pairs;
      const auto claim = Proposition::implication(Proposition::simple(m.names[p]),
                                                  Proposition::simple(m.names[q]));
      lemma_ok += entails(theory, claim) == l.leq(m.f[p], m.f[q]);
    }
  }
  std::mt19937_64 rng(o.seed);
  const auto con = con_properties_check(theory, m.names, rng);
  std::vector<std::string> atoms, classes, witnesses;
  for (auto a : m.atoms) atoms.push_back(l.name(a));
  for (auto r : m.representative) classes.push_back("[" + m.names[r] + "]");
  for (const auto& [p, q] : e.strict_witnesses) witnesses.push_back("(" + p + "," + q + ")");
  if (o.format == "json") {
    json table = json::object();
    for (std::size_t a = 0; a < m.atoms.size(); ++a) table[atoms[a]] = bit_row(m.table[a]);
    json phi = json::object();
    for (Element x = 0; x < l.size(); ++x) phi[l.name(x)] = bit_row(e.phi[x]);
    out << json{{"names", m.names},
                {"atoms", atoms},
                {"table", table},
                {"classes", classes},
                {"phi", phi},
                {"key_lemma", lemma_ok == lemma_pairs},
                {"con_laws", con.ok()},
                {"injective", e.injective},
                {"order_preserving", e.order_preserving},
                {"star_below_complement", e.star_below_complement},
                {"strict_witnesses", witnesses}}
               .dump()
        << "\n";
  } else {
    const auto w = name_width(atoms) + 2;
    out << "truth assignments s_a(p) = [a <= f(p)]\n" << pad("", w + 2);
    for (const auto& n : m.names) out << " " << n;
    out << "\n";
    for (std::size_t a = 0; a < m.atoms.size(); ++a) {
      out << "  " << pad("s_" + atoms[a], w);
      for (std::size_t p = 0; p < m.names.size(); ++p) {
        out << " " << pad(m.table[a][p] ? "1" : "0", m.names[p].size());
      }
      out << "\n";
    }
    out << classes.size() << " classes: " << join(classes) << "\n";
    out << "key lemma p -> q in T iff f(p) <= f(q): " << lemma_ok << "/" << lemma_pairs
        << " pairs\n";
    out << "closure laws of Con on sampled formulas: " << (con.ok() ? "hold" : "FAIL") << "\n";
    out << "embedding into 2^" << m.lindenbaum_dim() << " (realized " << m.realized_dim()
        << "), atoms " << join(atoms) << "\n";
    const auto wl = name_width(l.names());
    for (Element x = 0; x < l.size(); ++x) {
      out << "  " << pad(l.name(x), wl) << "  " << bit_row(e.phi[x]) << "\n";
    }
    out << "injective: " << yes_no(e.injective)
        << ", order-preserving: " << yes_no(e.order_preserving)
        << ", star below complement: " << yes_no(e.star_below_complement) << "\n";
    out << "strict witnesses (p -> q' in T, f(p) not orthogonal to f(q)): " << join(witnesses) << "\n";
  }
  return e.ok() && con.ok() && lemma_ok == lemma_pairs ? kExitOk : kExitValidation;
}

int cmd_partition(const std::string& path, const Common& o, std::ostream& out) {
  const auto doc = parse_partitions(read_file(path));
  const auto pl = build_partition_logic(doc.n, doc.partitions, doc.labels);
  const auto check = verify_partition_embedding(pl);
  const auto states = point_states(pl);
  const auto& l = pl.logic;
  if (o.format == "json") {
    json sets = json::object();
    for (Element x = 0; x < l.size(); ++x) sets[l.name(x)] = PartitionLogic::set_name(pl.sets[x], pl.n);
    json rows = json::array();
    for (const auto& s : states) rows.push_back(bit_row(s.values));
    out << json{{"elements", l.names()},
                {"sets", sets},
                {"injective", check.injective},
                {"order_preserving", check.order_preserving},
                {"co_measurable_pairs", check.co_measurable_pairs},
                {"operations_preserved", check.operation_failures.empty()},
                {"point_states", rows}}
               .dump()
        << "\n";
    return check.ok() ? kExitOk : kExitValidation;
  }
  out << "partition logic on {1.." << pl.n << "}: " << l.size() << " elements\n";
  const auto w = name_width(l.names());
  for (Element x = 0; x < l.size(); ++x) {
    out << "  " << pad(l.name(x), w) << "  " << PartitionLogic::set_name(pl.sets[x], pl.n)
        << "\n";
  }
  out << "embedding into 2^" << pl.n << ": injective: " << yes_no(check.injective)
      << ", order-preserving: " << yes_no(check.order_preserving) << "\n";
  out << "co-measurable pairs: " << check.co_measurable_pairs
      << ", operations preserved: " << yes_no(check.operation_failures.empty()) << "\n";
  out << "point states over " << join(l.names(), " ") << "\n";
  for (std::size_t i = 0; i < states.size(); ++i) {
    out << "  v" << i + 1 << "  " << bit_row(states[i].values) << "\n";
  }
  return check.ok() ? kExitOk : kExitValidation;
}

int cmd_color(const std::string& path, std::uint64_t budget, bool count, const Common& o,
              std::ostream& out, std::ostream& err) {
  const auto set = load_ray_set(parse_rays(read_file(path)), o.tolerance);
  for (const auto& w : set.warnings) err << "warning: " << w << "\n";
  ColoringOptions opts;
  opts.node_budget = budget;
  opts.deterministic = o.deterministic;
  const auto result = search_coloring(set, opts);
  std::optional<std::uint64_t> solutions;
  if (count && result.status != ColoringStatus::aborted) solutions = count_colorings(set, opts);
  if (o.format == "json") {
    json j{{"rays", set.size()},
           {"exact", set.exact},
           {"tripods", set.tripods.size()},
           {"status", to_string(result.status)},
           {"nodes_explored", result.nodes_explored}};
    if (result.assignment) j["assignment"] = *result.assignment;
    if (solutions) j["solutions"] = *solutions;
    out << j.dump() << "\n";
  } else {
    out << set.size() << " rays (" << (set.exact ? "exact" : "tolerance " + std::to_string(set.tolerance))
        << "), " << set.tripods.size() << " tripods\n";
    out << "status: " << to_string(result.status) << ", nodes explored: " << result.nodes_explored
        << "\n";
    if (result.assignment) {
      std::string bits;
      for (int b : *result.assignment) bits += char('0' + b);
      out << "coloring: " << bits << "\n";
    }
    if (solutions) out << "colorings: " << *solutions << "\n";
  }
  return result.status == ColoringStatus::aborted ? kExitResource : kExitOk;
}

int cmd_reach(const std::string& q, const std::string& p, int n, const Common& o,
              std::ostream& out) {
  ReachOptions opts;
  opts.n = n;
  opts.tolerance = o.tolerance;
  const Vec3 qv = parse_vec3(q), pv = parse_vec3(p);
  const auto chain = reach_chain(qv, pv, opts);
  const auto check = verify_chain(chain, qv, pv, o.tolerance);
  if (o.format == "json") {
    out << json{{"points", chain.points},
                {"residuals", chain.residuals},
                {"n", chain.n},
                {"verified", check.ok},
                {"max_residual", check.max_residual}}
               .dump()
        << "\n";
    return check.ok ? kExitOk : kExitValidation;
  }
  out << "chain of " << chain.points.size() - 1 << " steps (shell n = " << chain.n << ")\n";
  out << std::scientific << std::setprecision(3);
  for (std::size_t i = 0; i < chain.points.size(); ++i) {
    const auto& v = chain.points[i];
    out << "  q" << i << " = (" << std::fixed << std::setprecision(12) << v[0] << ", " << v[1]
        << ", " << v[2] << ")";
    if (i > 0) out << "  residual " << std::scientific << std::setprecision(3) << chain.residuals[i - 1];
    out << "\n";
  }
  out << "verified: " << yes_no(check.ok) << ", max residual " << std::scientific
      << std::setprecision(3) << check.max_residual << "\n";
  return check.ok ? kExitOk : kExitValidation;
}

int cmd_export(const std::string& path, bool stone, const Common& o, std::ostream& out) {
  const auto format = parse_hasse_format(o.format == "text" ? "dot" : o.format);
  const auto doc = parse_lattice(read_file(path));
  std::optional<SetLattice> sets;
  if (doc.set_mode()) sets = to_set_lattice(doc);
  std::optional<Orthoposet> l;
  try {
    l = to_orthoposet(doc);
  } catch (const InvalidInput&) {
    if (!sets || stone) throw;
  }
  if (stone) {
    const auto e = stone_embed(*l);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < e.dimension(); ++i) labels.push_back(std::to_string(i + 1));
    const auto cube = powerset(labels);
    std::vector<bool> marked(cube.size());
    for (Element x = 0; x < l->size(); ++x) {
      SetMask mask = 0;
      for (auto i = e.image[x].find_first(); i != ElementSet::npos; i = e.image[x].find_next(i)) {
        mask |= SetMask{1} << i;
      }
      marked[*cube.find(mask)] = true;
    }
    out << export_hasse(cube.to_orthoposet(), format, {marked, &cube});
    return kExitOk;
  }
  if (!l) {
    out << export_hasse(*sets, format);
    return kExitOk;
  }
  HasseOptions opts;
  if (sets) opts.sets = &*sets;
  out << export_hasse(*l, format, opts);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite quantum logics: orthoposets, states, embeddings and Kochen-Specker tools",
               "qlogic"};
  app.fallthrough();
  app.require_subcommand(1);
  Common o;
  app.add_option("--format", o.format, "Output format: text, table or json (export: dot, table, json)")
      ->check(CLI::IsMember({"text", "table", "json", "dot"}));
  app.add_option("--tolerance", o.tolerance, "Orthogonality and circle-membership tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed for sampled checks");
  app.add_flag("--deterministic,!--fast", o.deterministic,
               "Deterministic search (default); --fast allows nondeterministic node counts");

  std::string file, regime = "both", q, p;
  int n = 16;
  std::uint64_t budget = ColoringOptions{}.node_budget;
  bool count = false, stone_overlay = false;

  auto* check = app.add_subcommand("check", "Validate a lattice file");
  check->add_option("file", file, "Lattice file")->required();
  auto* states = app.add_subcommand("states", "Enumerate two-valued states");
  states->add_option("file", file, "Lattice file")->required();
  states->add_option("--regime", regime, "morphism, additive or both")
      ->check(CLI::IsMember({"morphism", "additive", "both"}));
  auto* stone = app.add_subcommand("stone", "Maximal ideals and the Stone-style embedding");
  stone->add_option("file", file, "Lattice file")->required();
  auto* kalmbach = app.add_subcommand("kalmbach", "Kalmbach pasting of a set lattice");
  kalmbach->add_option("file", file, "Lattice file with sets")->required();
  auto* malhas = app.add_subcommand("malhas", "Theory model and Lindenbaum embedding");
  malhas->add_option("file", file, "Theory file")->required();
  auto* partition = app.add_subcommand("partition", "Partition logic and its embedding");
  partition->add_option("file", file, "Partition file")->required();
  auto* color = app.add_subcommand("ks-color", "Tripod coloring search on a ray file");
  color->add_option("file", file, "Ray file")->required();
  color->add_option("--budget", budget, "Node budget");
  color->add_flag("--count", count, "Also count all colorings");
  auto* reach = app.add_subcommand("reach", "Reachability chain on the northern hemisphere");
  reach->add_option("--q", q, "Start point x,y,z")->required();
  reach->add_option("--p", p, "Target point x,y,z")->required();
  reach->add_option("--n", n, "Shell parameter")->check(CLI::Range(5, 1 << 20));
  auto* exp = app.add_subcommand("export", "Hasse diagram in dot, table or json");
  exp->add_option("file", file, "Lattice file")->required();
  exp->add_flag("--stone", stone_overlay, "Draw 2^k with the Stone image marked");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(file, o, out);
    if (states->parsed()) return cmd_states(file, regime, o, out);
    if (stone->parsed()) return cmd_stone(file, o, out);
    if (kalmbach->parsed()) return cmd_kalmbach(file, o, out);
    if (malhas->parsed()) return cmd_malhas(file, o, out);
    if (partition->parsed()) return cmd_partition(file, o, out);
    if (color->parsed()) return cmd_color(file, budget, count, o, out, err);
    if (reach->parsed()) return cmd_reach(q, p, n, o, out);
    if (exp->parsed()) return cmd_export(file, stone_overlay, o, out);
  } catch (const SearchBoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace qlogic

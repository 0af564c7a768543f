#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qlogic/orthoposet.hpp"
#include "qlogic/partition.hpp"
#include "qlogic/rays.hpp"
#include "qlogic/set_lattice.hpp"

namespace qlogic {

// Lattice file (JSON):
//   {"elements": [...], "order": [[x, y], ...], "complement": {x: y, ...},
//    "zero": "0", "one": "1", "ground": [...], "sets": {x: [...], ...}}
// order and complement may be omitted when sets are given; the order then
// follows from inclusion.
struct LatticeDocument {
  RawOrthoposet raw;
  bool has_complement = false;
  std::optional<std::vector<std::string>> ground;
  std::map<std::string, std::vector<std::string>> sets;

  bool set_mode() const { return ground.has_value(); }
};

/// Throws ParseError for malformed JSON and InvalidInput for a bad shape.
LatticeDocument parse_lattice(const std::string& text);
/// Throws SetLattice errors; requires set mode with every element mapped.
SetLattice to_set_lattice(const LatticeDocument& doc);
/// Orthoposet from the explicit complement, or from set complement in set mode.
Orthoposet to_orthoposet(const LatticeDocument& doc);

// Ray file: one vector per line, three tokens each; '#' starts a comment.
// Tokens are decimals or the exact forms r2, -r2 (for +-sqrt 2).
struct RayDocument {
  std::vector<Vec3> vectors;
  std::optional<std::vector<ExactVec3>> exact;  // when every token is exact
};

RayDocument parse_rays(const std::string& text);
RaySet load_ray_set(const RayDocument& doc, double tolerance);

// Partition file (JSON): {"n": 4, "partitions": [[[1,2],[3,4]], ...],
//                         "labels": {"{1,2}": "p-", ...}}
struct PartitionDocument {
  std::size_t n = 0;
  std::vector<Partition> partitions;
  std::map<std::string, std::string> labels;
};

PartitionDocument parse_partitions(const std::string& text);

// Theory file (JSON): {"lattice": "file.lat" or an inline lattice object,
//                      "map": {"A": "0", ...}}
struct TheoryDocument {
  LatticeDocument lattice;
  std::map<std::string, std::string> map;
};

/// Relative lattice paths resolve against base.
TheoryDocument parse_theory(const std::string& text, const std::filesystem::path& base);

/// Throws IoError when the file cannot be read.
std::string read_file(const std::filesystem::path& path);

enum class HasseFormat { dot, table, json };

/// Throws InvalidInput for names other than dot, table, json.
HasseFormat parse_hasse_format(const std::string& name);

struct HasseOptions {
  std::vector<bool> highlight;  // per element; drawn as concentric circles
  const SetLattice* sets = nullptr;  // adds ground and sets to json output
};

/// Covering digraph of the order. The json form is a lattice file.
std::string export_hasse(const Orthoposet& l, HasseFormat format,
                         const HasseOptions& options = {});
/// For lattices without an orthocomplement (json carries no complement).
std::string export_hasse(const SetLattice& l, HasseFormat format,
                         const std::vector<bool>& highlight = {});

}  // namespace qlogic

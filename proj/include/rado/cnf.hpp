#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rado/enumerate.hpp"
#include "rado/solver.hpp"

namespace rado {

class CnfError : public Error {
 public:
  using Error::Error;
};

/// Direct: variable (i-1)*r + c is true iff vertex i has color c.
/// Binary (r = 2 only): variable i is true iff vertex i has color 2.
enum class Encoding { Direct, Binary };

std::string to_string(Encoding e);

/// Binary for two colors, direct otherwise.
Encoding default_encoding(int r);

struct CnfMeta {
  std::string equation;
  std::int64_t n = 0;
  int r = 2;
  Encoding encoding = Encoding::Binary;
  std::string version;
  std::int64_t variable_count = 0;
  std::size_t clause_count = 0;
};

struct CnfInstance {
  CnfMeta meta;
  std::vector<std::vector<std::int64_t>> clauses;

  std::int64_t variable_count() const { return meta.variable_count; }
  std::size_t clause_count() const { return clauses.size(); }
};

/// Clause order: symmetry unit, per-vertex clauses ascending, then per-edge
/// clauses in edge-set order. The symmetry unit pins the smallest vertex of
/// any edge to color 1 and is omitted for an empty edge set.
CnfInstance export_cnf(const EdgeSet& edges, int r, Encoding encoding,
                       const std::string& equation = {});

/// DIMACS text: "c " header lines, "p cnf V C", one clause per line.
std::string write_dimacs(const CnfInstance& cnf);

/// Reads the comment header and problem line written by write_dimacs.
CnfMeta read_cnf_meta(std::string_view dimacs);

/// Literals from solver output: "v" lines, a bare literal list, or both.
/// "c" and "s" lines are skipped; reading stops at the literal 0.
std::vector<std::int64_t> parse_model(std::string_view text);

/// Inverts the encoding. When `edges` is given, vertices in no edge get
/// color 1 regardless of the model.
Coloring import_model(std::span<const std::int64_t> model, const CnfMeta& meta,
                      const EdgeSet* edges = nullptr);

}  // namespace rado

#include "rado/cnf.hpp"

#include <charconv>
#include <sstream>

namespace rado {

std::string to_string(Encoding e) { return e == Encoding::Binary ? "binary" : "direct"; }

Encoding default_encoding(int r) { return r == 2 ? Encoding::Binary : Encoding::Direct; }

CnfInstance export_cnf(const EdgeSet& edges, int r, Encoding encoding,
                       const std::string& equation) {
  if (r < 1 || r > kMaxColors) throw InvalidArgument("number of colors out of range");
  if (encoding == Encoding::Binary && r != 2) {
    throw InvalidArgument("binary encoding requires exactly 2 colors");
  }
  CnfInstance out;
  out.meta.equation = equation;
  out.meta.n = edges.n();
  out.meta.r = r;
  out.meta.encoding = encoding;
  out.meta.version = std::string("rado ") + RADO_VERSION;
  const std::int64_t n = edges.n();
  const Vertex smallest = edges.smallest_vertex();

  if (encoding == Encoding::Binary) {
    out.meta.variable_count = n;
    out.clauses.reserve(2 * edges.size() + 1);
    if (smallest != 0) out.clauses.push_back({-static_cast<std::int64_t>(smallest)});
    for (std::size_t e = 0; e < edges.size(); ++e) {
      std::vector<std::int64_t> pos, neg;
      for (auto v : edges[e]) {
        pos.push_back(v);
        neg.push_back(-static_cast<std::int64_t>(v));
      }
      out.clauses.push_back(std::move(pos));
      out.clauses.push_back(std::move(neg));
    }
  } else {
    auto var = [r](std::int64_t i, int c) { return (i - 1) * r + c; };
    out.meta.variable_count = n * r;
    if (smallest != 0) out.clauses.push_back({var(smallest, 1)});
    for (std::int64_t i = 1; i <= n; ++i) {
      std::vector<std::int64_t> alo;
      for (int c = 1; c <= r; ++c) alo.push_back(var(i, c));
      out.clauses.push_back(std::move(alo));
      for (int a = 1; a <= r; ++a)
        for (int b = a + 1; b <= r; ++b) out.clauses.push_back({-var(i, a), -var(i, b)});
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
      for (int c = 1; c <= r; ++c) {
        std::vector<std::int64_t> clause;
        for (auto v : edges[e]) clause.push_back(-var(v, c));
        out.clauses.push_back(std::move(clause));
      }
    }
  }
  out.meta.clause_count = out.clauses.size();
  return out;
}

std::string write_dimacs(const CnfInstance& cnf) {
  std::string out;
  out += "c rado-cnf v1\n";
  out += "c equation " + cnf.meta.equation + "\n";
  out += "c n " + std::to_string(cnf.meta.n) + "\n";
  out += "c r " + std::to_string(cnf.meta.r) + "\n";
  out += "c encoding " + to_string(cnf.meta.encoding) + "\n";
  out += "c version " + cnf.meta.version + "\n";
  out += "p cnf " + std::to_string(cnf.variable_count()) + " " +
         std::to_string(cnf.clause_count()) + "\n";
  for (const auto& clause : cnf.clauses) {
    for (auto lit : clause) {
      out += std::to_string(lit);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

CnfMeta read_cnf_meta(std::string_view dimacs) {
  CnfMeta meta;
  bool have_n = false, have_r = false, have_enc = false, have_p = false;
  std::istringstream in{std::string(dimacs)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("c ", 0) == 0) {
      std::istringstream words(line.substr(2));
      std::string key;
      words >> key;
      std::string rest;
      std::getline(words >> std::ws, rest);
      if (key == "equation") {
        meta.equation = rest;
      } else if (key == "n") {
        meta.n = std::stoll(rest);
        have_n = true;
      } else if (key == "r") {
        meta.r = std::stoi(rest);
        have_r = true;
      } else if (key == "encoding") {
        if (rest != "binary" && rest != "direct") throw CnfError("unknown encoding '" + rest + "'");
        meta.encoding = rest == "binary" ? Encoding::Binary : Encoding::Direct;
        have_enc = true;
      } else if (key == "version") {
        meta.version = rest;
      }
    } else if (line.rfind("p cnf ", 0) == 0) {
      std::istringstream words(line.substr(6));
      words >> meta.variable_count >> meta.clause_count;
      if (!words) throw CnfError("malformed problem line");
      have_p = true;
      break;
    }
  }
  if (!have_n || !have_r || !have_enc || !have_p) {
    throw CnfError("missing rado-cnf header (need c n, c r, c encoding and p cnf lines)");
  }
  return meta;
}

std::vector<std::int64_t> parse_model(std::string_view text) {
  std::vector<std::int64_t> lits;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string tok;
    bool first = true;
    while (words >> tok) {
      if (first && (tok == "c" || tok == "s" || tok == "SAT" || tok == "SATISFIABLE")) break;
      first = false;
      if (tok == "v") continue;
      std::int64_t lit = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), lit);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw CnfError("unexpected token '" + tok + "' in model");
      }
      if (lit == 0) return lits;
      lits.push_back(lit);
    }
  }
  return lits;
}

Coloring import_model(std::span<const std::int64_t> model, const CnfMeta& meta,
                      const EdgeSet* edges) {
  const std::int64_t vars = meta.encoding == Encoding::Binary ? meta.n : meta.n * meta.r;
  std::vector<signed char> value(static_cast<std::size_t>(vars) + 1, 0);
  for (auto lit : model) {
    const std::int64_t v = lit < 0 ? -lit : lit;
    if (v < 1 || v > vars) throw CnfError("literal " + std::to_string(lit) + " out of range");
    value[static_cast<std::size_t>(v)] = lit > 0 ? 1 : -1;
  }
  for (std::int64_t v = 1; v <= vars; ++v) {
    if (value[static_cast<std::size_t>(v)] == 0) {
      throw CnfError("incomplete model: variable " + std::to_string(v) + " unassigned");
    }
  }

  Coloring out;
  out.r = meta.r;
  out.colors.assign(static_cast<std::size_t>(meta.n), 1);
  for (std::int64_t i = 1; i <= meta.n; ++i) {
    int color = 0;
    if (meta.encoding == Encoding::Binary) {
      color = value[static_cast<std::size_t>(i)] > 0 ? 2 : 1;
    } else {
      for (int c = 1; c <= meta.r; ++c) {
        if (value[static_cast<std::size_t>((i - 1) * meta.r + c)] < 0) continue;
        if (color != 0) {
          throw CnfError("inconsistent model: vertex " + std::to_string(i) +
                         " has more than one color");
        }
        color = c;
      }
      if (color == 0) {
        throw CnfError("inconsistent model: vertex " + std::to_string(i) + " has no color");
      }
    }
    out.colors[static_cast<std::size_t>(i - 1)] = color;
  }
  if (edges != nullptr) {
    std::vector<bool> used(static_cast<std::size_t>(meta.n) + 1, false);
    for (std::size_t e = 0; e < edges->size(); ++e)
      for (auto v : (*edges)[e])
        if (v <= meta.n) used[static_cast<std::size_t>(v)] = true;
    for (std::int64_t i = 1; i <= meta.n; ++i)
      if (!used[static_cast<std::size_t>(i)]) out.colors[static_cast<std::size_t>(i - 1)] = 1;
  }
  return out;
}

}  // namespace rado

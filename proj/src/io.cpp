#include "cnfgame/io.hpp"

#include <charconv>
#include <sstream>

namespace cnfgame {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, int lineno) {
  int value = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw ParseError(lineno, "expected integer, got '" + tok + "'");
  return value;
}

Player parse_player(const std::string& tok, int lineno) {
  if (tok == "T") return Player::T;
  if (tok == "F") return Player::F;
  throw ParseError(lineno, "expected player T or F, got '" + tok + "'");
}

}  // namespace

GameInstance parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  GameInstance g;
  bool have_header = false;
  int declared_clauses = 0;

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0] == "c") continue;

    if (toks[0] == "p") {
      if (have_header) throw ParseError(lineno, "duplicate header");
      if (toks.size() != 6 || toks[1] != "cnfgame")
        throw ParseError(lineno, "malformed header, want 'p cnfgame <n> <m> <first> <last>'");
      g.universe_size = parse_int(toks[2], lineno);
      declared_clauses = parse_int(toks[3], lineno);
      g.first = parse_player(toks[4], lineno);
      g.last = parse_player(toks[5], lineno);
      if (g.universe_size < 0) throw ParseError(lineno, "negative universe size");
      if (declared_clauses < 0) throw ParseError(lineno, "negative clause count");
      if (!parity_ok(g.universe_size, g.first, g.last))
        throw ParseError(lineno, "universe size " + std::to_string(g.universe_size) +
                                     " has wrong parity for pattern " +
                                     std::string{to_char(g.first)} + "..." +
                                     std::string{to_char(g.last)});
      have_header = true;
      continue;
    }

    if (!have_header) throw ParseError(lineno, "clause before header");

    std::vector<Lit> lits;
    bool terminated = false;
    for (const auto& tok : toks) {
      int v = parse_int(tok, lineno);
      if (terminated) throw ParseError(lineno, "literal after clause terminator");
      if (v == 0) {
        terminated = true;
        continue;
      }
      int var = std::abs(v) - 1;
      if (var >= g.universe_size)
        throw ParseError(lineno, "variable " + std::to_string(std::abs(v)) +
                                     " outside universe of size " +
                                     std::to_string(g.universe_size));
      lits.push_back(Lit{var, v < 0});
    }
    if (!terminated) throw ParseError(lineno, "clause not terminated by 0");
    for (size_t i = 0; i < lits.size(); ++i)
      for (size_t j = i + 1; j < lits.size(); ++j)
        if (lits[i].var == lits[j].var)
          throw ParseError(lineno, "duplicate variable " + std::to_string(lits[i].var + 1) +
                                       " in clause");
    g.cnf.clauses.push_back(Clause(std::move(lits)));
  }

  if (!have_header) throw ParseError(lineno, "missing header");
  if (g.cnf.size() != declared_clauses)
    throw ParseError(lineno, "header declares " + std::to_string(declared_clauses) +
                                 " clauses, found " + std::to_string(g.cnf.size()));
  return g;
}

std::string serialize_instance(const GameInstance& g) {
  std::ostringstream out;
  out << "p cnfgame " << g.universe_size << " " << g.cnf.size() << " " << to_char(g.first)
      << " " << to_char(g.last) << "\n";
  for (const Clause& c : g.cnf.clauses) {
    for (const Lit& l : c.lits()) out << (l.neg ? -(l.var + 1) : (l.var + 1)) << " ";
    out << "0\n";
  }
  return out.str();
}

Transcript parse_transcript(const std::string& text, const GameInstance& g) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  Transcript t;
  t.instance = g;
  bool have_header = false;

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "t") {
      if (have_header) throw ParseError(lineno, "duplicate transcript header");
      if (toks.size() != 2) throw ParseError(lineno, "malformed transcript header");
      t.winner = parse_player(toks[1], lineno);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, "move before transcript header");
    if (toks.size() != 2) throw ParseError(lineno, "malformed move line");
    Player by = parse_player(toks[0], lineno);
    int v = parse_int(toks[1], lineno);
    if (v == 0) throw ParseError(lineno, "zero literal in move");
    int var = std::abs(v) - 1;
    if (var >= g.universe_size)
      throw ParseError(lineno, "variable " + std::to_string(std::abs(v)) + " outside universe");
    t.moves.push_back(Move{by, var, v > 0 ? 1 : 0});
  }
  if (!have_header) throw ParseError(lineno, "missing transcript header");
  validate_transcript(t);
  return t;
}

std::string serialize_transcript(const Transcript& t) {
  std::ostringstream out;
  out << "t " << to_char(t.winner) << "\n";
  for (const Move& m : t.moves) {
    int v = m.var + 1;
    out << to_char(m.by) << " " << (m.bit == 1 ? v : -v) << "\n";
  }
  return out.str();
}

}  // namespace cnfgame

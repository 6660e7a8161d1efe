#include <istream>
#include <sstream>

#include "prefnet/generators.hpp"

namespace prefnet {

SatInstance parse_dimacs(std::istream& in) {
  SatInstance inst;
  bool header = false;
  int declared_clauses = -1;
  std::vector<int> pending;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) { throw InputError("line " + std::to_string(lineno) + ": " + msg); };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c" || tok[0] == 'c') continue;
    if (tok == "%") break;  // some generators end files this way
    if (tok == "p") {
      std::string fmt;
      if (header) fail("duplicate problem line");
      if (!(ls >> fmt >> inst.num_vars >> declared_clauses) || fmt != "cnf") fail("expected 'p cnf <vars> <clauses>'");
      if (inst.num_vars < 0 || declared_clauses < 0) fail("negative counts in problem line");
      header = true;
      continue;
    }
    if (!header) fail("clause before problem line");
    ls.clear();
    ls.str(line);
    long lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (pending.size() != 3)
          fail("clause with " + std::to_string(pending.size()) + " literals (only 3-literal clauses are supported)");
        inst.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
      } else {
        if (lit > inst.num_vars || -lit > inst.num_vars) fail("literal " + std::to_string(lit) + " out of range");
        pending.push_back(static_cast<int>(lit));
      }
    }
    if (!ls.eof()) fail("unexpected token");
  }
  if (!header) throw InputError("missing problem line");
  if (!pending.empty()) throw InputError("last clause is not terminated by 0");
  if (static_cast<int>(inst.clauses.size()) != declared_clauses)
    throw InputError("problem line declares " + std::to_string(declared_clauses) + " clauses, found " +
                     std::to_string(inst.clauses.size()));
  validate(inst);
  return inst;
}

SatInstance parse_dimacs_string(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

std::string to_dimacs(const SatInstance& inst) {
  std::ostringstream out;
  out << "p cnf " << inst.num_vars << ' ' << inst.clauses.size() << '\n';
  for (const auto& cl : inst.clauses) out << cl[0] << ' ' << cl[1] << ' ' << cl[2] << " 0\n";
  return out.str();
}

}  // namespace prefnet

#include "repkit/dimacs.hpp"

#include "repkit/error.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace repkit {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r')
      ++j;
    if (j > i)
      out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
bool to_number(std::string_view tok, T &out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

} // namespace

DimacsFile read_dimacs(std::istream &in) {
  DimacsFile file;
  bool header = false;
  std::vector<Lit> pending;
  std::size_t pending_line = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split(line);
    if (toks.empty())
      continue;
    if (toks[0] == "c") {
      auto pos = line.find('c');
      std::string text = line.substr(pos + 1);
      if (!text.empty() && text.front() == ' ')
        text.erase(0, 1);
      file.comments.push_back(text);
      continue;
    }
    if (toks[0] == "%")
      break;
    if (toks[0] == "p") {
      if (header)
        throw ParseError(lineno, "duplicate problem line");
      if (toks.size() != 4 || (toks[1] != "cnf" && toks[1] != "dnf"))
        throw ParseError(lineno, "expected 'p cnf <vars> <clauses>'");
      file.dnf = toks[1] == "dnf";
      if (!to_number(toks[2], file.declared_vars) ||
          !to_number(toks[3], file.declared_clauses))
        throw ParseError(lineno, "bad counts in problem line");
      header = true;
      continue;
    }
    if (!header)
      throw ParseError(lineno, "clause before problem line");
    for (auto tok : toks) {
      long x = 0;
      if (!to_number(tok, x))
        throw ParseError(lineno, "bad literal '" + std::string(tok) + "'");
      if (x == 0) {
        try {
          file.clauses.push_back(Clause(std::move(pending)));
        } catch (const Error &e) {
          throw ParseError(pending_line ? pending_line : lineno, e.what());
        }
        pending.clear();
        pending_line = 0;
        continue;
      }
      unsigned long v = static_cast<unsigned long>(x < 0 ? -x : x);
      if (v > file.declared_vars)
        throw ParseError(lineno, "variable " + std::to_string(v) +
                                     " exceeds declared count " +
                                     std::to_string(file.declared_vars));
      if (pending.empty())
        pending_line = lineno;
      pending.push_back(Lit::from_dimacs(static_cast<int>(x)));
    }
  }
  if (!header)
    throw ParseError(lineno, "missing problem line");
  if (!pending.empty())
    throw ParseError(lineno, "last clause not terminated by 0");
  if (file.clauses.size() != file.declared_clauses)
    throw ParseError(lineno, "declared " +
                                 std::to_string(file.declared_clauses) +
                                 " clauses, found " +
                                 std::to_string(file.clauses.size()));
  return file;
}

DimacsFile read_dimacs_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(Errc::invalid_input, "cannot open " + path);
  return read_dimacs(in);
}

ClauseSet parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_dimacs(in).clause_set();
}

void write_dimacs(std::ostream &out, const ClauseSet &f,
                  std::span<const std::string> comments) {
  for (const std::string &c : comments)
    out << "c " << c << '\n';
  out << "p " << (f.dnf() ? "dnf" : "cnf") << ' ' << f.max_var() << ' '
      << f.c() << '\n';
  for (const Clause &c : f) {
    for (Lit x : c)
      out << x.to_dimacs() << ' ';
    out << "0\n";
  }
}

std::string emit_dimacs(const ClauseSet &f,
                        std::span<const std::string> comments) {
  std::ostringstream out;
  write_dimacs(out, f, comments);
  return out.str();
}

void write_dimacs_file(const std::string &path, const ClauseSet &f,
                       std::span<const std::string> comments) {
  std::ofstream out(path);
  if (!out)
    throw Error(Errc::invalid_input, "cannot write " + path);
  write_dimacs(out, f, comments);
}

} // namespace repkit

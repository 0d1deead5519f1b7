#include "ringlab/ring_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace ringlab {

namespace {

struct line_reader {
  std::istream& in;
  const std::string& source;
  unsigned lineno = 0;

  [[noreturn]] void error(const std::string& what) const {
    fail(errc::parse_error,
         source + ":" + std::to_string(lineno) + ": " + what);
  }

  // Next line, or nullopt at end of input.
  std::optional<std::string> next() {
    std::string line;
    if (!std::getline(in, line)) return std::nullopt;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  }

  std::string require(const char* what) {
    auto l = next();
    if (!l) { ++lineno; error(std::string("unexpected end of file, expected ") + what); }
    return *l;
  }
};

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream ss(s);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

unsigned parse_uint(line_reader& lr, const std::string& tok, unsigned bound,
                    const char* what) {
  unsigned v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    lr.error("bad " + std::string(what) + " '" + tok + "'");
  if (bound && v >= bound)
    lr.error(std::string(what) + " " + tok + " out of range [0," +
             std::to_string(bound) + ")");
  return v;
}

void read_table(line_reader& lr, unsigned k, std::vector<elem>& table,
                const char* which) {
  table.reserve(std::size_t(k) * k);
  for (unsigned row = 0; row < k; ++row) {
    std::string line = lr.require("table row");
    auto toks = split_ws(line);
    if (toks.size() != k)
      lr.error(std::string(which) + " row has " + std::to_string(toks.size()) +
               " entries, expected " + std::to_string(k));
    for (auto& t : toks) table.push_back(elem(parse_uint(lr, t, k, "entry")));
  }
}

} // namespace

finite_ring read_ring(std::istream& in, const std::string& source_name) {
  line_reader lr{in, source_name};

  auto header = [&](const char* key) {
    std::string line = lr.require(key);
    auto toks = split_ws(line);
    if (toks.size() != 2 || toks[0] != key)
      lr.error("expected '" + std::string(key) + " <value>'");
    return toks[1];
  };

  const unsigned k = parse_uint(lr, header("order"), 0, "order");
  if (k == 0 || k > max_order)
    lr.error("order " + std::to_string(k) + " outside [1," +
             std::to_string(max_order) + "]");

  const std::string unital_tok = header("unital");
  if (unital_tok != "yes" && unital_tok != "no")
    lr.error("unital must be 'yes' or 'no', got '" + unital_tok + "'");
  const bool require_unital = unital_tok == "yes";

  const std::string name = header("name");
  for (char c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
          c == ':' || c == '.' || c == '-'))
      lr.error("bad character in ring name '" + name + "'");

  raw_ring_tables t;
  t.order = k;
  read_table(lr, k, t.add, "addition");
  {
    std::string sep = lr.require("blank separator line");
    if (!split_ws(sep).empty()) lr.error("expected blank line between tables");
  }
  read_table(lr, k, t.mul, "multiplication");

  // Nothing but whitespace may follow.
  while (auto l = lr.next())
    if (!split_ws(*l).empty()) lr.error("trailing garbage after tables");

  return validate_ring(t, require_unital, name);
}

finite_ring load_ring(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  return read_ring(in, path);
}

void write_ring(std::ostream& out, const finite_ring& r) {
  const unsigned k = r.order();
  out << "order " << k << "\n";
  out << "unital " << (r.unital() ? "yes" : "no") << "\n";
  out << "name " << r.name() << "\n";
  for (unsigned a = 0; a < k; ++a) {
    const elem* row = r.add_row(elem(a));
    for (unsigned b = 0; b < k; ++b)
      out << unsigned(row[b]) << (b + 1 < k ? " " : "\n");
  }
  out << "\n";
  for (unsigned a = 0; a < k; ++a) {
    const elem* row = r.mul_row(elem(a));
    for (unsigned b = 0; b < k; ++b)
      out << unsigned(row[b]) << (b + 1 < k ? " " : "\n");
  }
}

void save_ring(const finite_ring& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(errc::parse_error, "cannot open '" + path + "' for writing");
  write_ring(out, r);
  if (!out) fail(errc::parse_error, "write failed for '" + path + "'");
}

} // namespace ringlab

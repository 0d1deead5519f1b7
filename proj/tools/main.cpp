// Command-line front end: property checks, annihilator procedures with
// traces, diagram runs over corpora, and small-order enumeration.
//
// Exit codes are a contract scripts rely on:
//   0 success, 1 input/validation error, 2 property failure (--strict),
//   3 procedure stall / no nonzero annihilator, 4 diagram violation.

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ringlab/annihilators.hpp"
#include "ringlab/catalog.hpp"
#include "ringlab/diagram.hpp"
#include "ringlab/polynomial.hpp"
#include "ringlab/properties.hpp"
#include "ringlab/ring_io.hpp"

namespace {

using namespace ringlab;

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_property = 2;
constexpr int exit_stall = 3;
constexpr int exit_violation = 4;

mccoy_bound parse_bound(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    fail(errc::parse_error, "bound must be m,n: " + s);
  auto part = [&](std::size_t from, std::size_t to) -> unsigned {
    unsigned v = 0;
    const char* b = s.data() + from;
    const char* e = s.data() + to;
    auto res = std::from_chars(b, e, v);
    if (res.ec != std::errc{} || res.ptr != e || v < 1)
      fail(errc::parse_error, "bound must be m,n with m,n >= 1: " + s);
    return v;
  };
  return {part(0, comma), part(comma + 1, s.size())};
}

// --mccoy-bound beats RINGLAB_MCCOY_BOUND beats the (2,2) default.
mccoy_bound effective_bound(const std::string& flag_value) {
  if (!flag_value.empty()) return parse_bound(flag_value);
  if (const char* env = std::getenv("RINGLAB_MCCOY_BOUND"))
    return parse_bound(env);
  return {};
}

// "builtin:NAME" or a .ring file path.
finite_ring resolve_ring(const std::string& spec) {
  constexpr std::string_view prefix = "builtin:";
  if (spec.starts_with(prefix)) {
    const std::string name = spec.substr(prefix.size());
    const finite_ring* r = find_builtin(name);
    if (!r) fail(errc::parse_error, "unknown builtin ring: " + name);
    return *r;
  }
  return load_ring(spec);
}

struct output_sink {
  std::ofstream file;
  std::ostream* out = &std::cout;

  explicit output_sink(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) fail(errc::parse_error, "cannot open output file: " + path);
    out = &file;
  }
  std::ostream& stream() { return *out; }
};

int cmd_check(const std::string& ring_spec,
              const std::vector<std::string>& prop_names,
              const std::string& bound_str, bool strict,
              const std::string& out_path) {
  const finite_ring ring = resolve_ring(ring_spec);
  const mccoy_bound bound = effective_bound(bound_str);

  std::vector<property_id> props;
  if (prop_names.empty()) {
    props.assign(std::begin(all_properties), std::end(all_properties));
  } else {
    for (const std::string& n : prop_names) {
      auto p = property_from_name(n);
      if (!p) fail(errc::parse_error, "unknown property: " + n);
      props.push_back(*p);
    }
  }

  output_sink sink(out_path);
  bool any_failed = false;
  for (property_id p : props) {
    const verdict v = check_property(ring, p, bound);
    if (v.kind == verdict_kind::fails) any_failed = true;
    sink.stream() << format_report_line(ring.name(), p, v) << "\n";
  }
  return strict && any_failed ? exit_property : exit_ok;
}

void print_formula(std::ostream& os, const char* label,
                   const formula_annihilators& fa) {
  os << label << " first " << unsigned(fa.first)
     << " is_zero=" << (fa.first_is_zero ? "yes" : "no") << "\n"
     << label << " second " << unsigned(fa.second)
     << " is_zero=" << (fa.second_is_zero ? "yes" : "no") << "\n";
}

int cmd_annihilate(const std::string& ring_spec, const std::string& f_lit,
                   const std::string& g_lit, const std::string& method_name_s,
                   const std::string& variant_s, const std::string& out_path) {
  const finite_ring ring = resolve_ring(ring_spec);
  const poly f = parse_poly(ring, f_lit);
  const poly g = parse_poly(ring, g_lit);
  if (f.is_zero() || g.is_zero())
    fail(errc::zero_polynomial, "f and g must be nonzero");
  if (!poly_mul(f, g).is_zero())
    fail(errc::product_not_zero,
         "f*g != 0 over " + std::string(ring.name()));

  std::string method_key = method_name_s;
  if (method_key == "thm1")
    method_key = variant_s == "induction" ? "thm1-induction" : "thm1-alternative";
  const auto method = method_from_name(method_key);
  if (!method) fail(errc::parse_error, "unknown method: " + method_name_s);

  output_sink sink(out_path);
  std::ostream& os = sink.stream();
  os << "method " << ringlab::method_name(*method) << "\n"
     << "ring " << ring.name() << "\n"
     << "f " << format_poly(f) << "\n"
     << "g " << format_poly(g) << "\n";

  switch (*method) {
    case ann_method::lemma1: {
      print_formula(os, "left_annihilator", lemma1_left_annihilators(f, g));
      return exit_ok;
    }
    case ann_method::thm3: {
      print_formula(os, "right_annihilator", thm3_right_annihilators(f, g));
      return exit_ok;
    }
    case ann_method::oracle: {
      const auto set = oracle_right_annihilators(f);
      os << "annihilators ";
      for (std::size_t i = 0; i < set.size(); ++i)
        os << (i ? "," : "") << unsigned(set[i]);
      os << "\n";
      for (elem x : set)
        if (x != 0) {
          os << "result " << unsigned(x) << "\n";
          return exit_ok;
        }
      os << "failed no-nonzero-annihilator\n";
      return exit_stall;
    }
    case ann_method::lemma2: {
      const auto res = lemma2_right_annihilator(f, g);
      os << serialize(res.trace);
      return exit_ok;
    }
    case ann_method::thm1_induction:
    case ann_method::thm1_alternative: {
      const auto variant = *method == ann_method::thm1_induction
                               ? thm1_variant::induction
                               : thm1_variant::alternative;
      const auto res = thm1_right_annihilator(f, g, variant);
      os << serialize(res.trace);
      if (res.stalled()) {
        if (res.annihilator != 0)
          os << "fallback " << unsigned(res.annihilator) << "\n";
        else
          os << "fallback none\n";
        return exit_stall;
      }
      return exit_ok;
    }
  }
  return exit_input;
}

ring_corpus corpus_from_directory(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    fail(errc::parse_error, "not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".ring")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) fail(errc::parse_error, "no .ring files in " + dir);
  ring_corpus corpus;
  for (const auto& p : files)
    corpus.add(load_ring(p.string()), ring_corpus::provenance::file);
  return corpus;
}

int cmd_diagram(const std::string& corpus_spec, const std::string& bound_str,
                bool hunt, unsigned jobs, const std::string& csv_path,
                const std::string& out_path) {
  const mccoy_bound bound = effective_bound(bound_str);
  const ring_corpus* corpus = nullptr;
  ring_corpus from_dir;
  if (corpus_spec == "builtin") {
    corpus = &builtin_corpus();
  } else {
    from_dir = corpus_from_directory(corpus_spec);
    corpus = &from_dir;
  }

  const diagram_report rep = check_diagram(*corpus, bound, jobs);
  output_sink sink(out_path);
  sink.stream() << serialize(rep);
  if (hunt) sink.stream() << serialize(hunt_nonimplications(rep));
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) fail(errc::parse_error, "cannot open csv file: " + csv_path);
    csv << verdict_matrix_csv(rep);
  }
  for (const edge_result& er : rep.edges)
    if (er.status == edge_status::violated) return exit_violation;
  return exit_ok;
}

int cmd_enumerate(unsigned order, const std::string& out_dir) {
  const auto rings = enumerate_unital_rings(order);
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  for (const finite_ring& r : rings) {
    std::string fname = std::string(r.name());
    std::replace(fname.begin(), fname.end(), ':', '_');
    const fs::path path = fs::path(out_dir) / (fname + ".ring");
    save_ring(r, path.string());
    std::cout << "wrote " << path.string() << "\n";
  }
  std::cout << "count " << rings.size() << "\n";
  return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computer-algebra laboratory for finite rings"};
  app.require_subcommand(1);

  std::string ring_spec, bound_str, out_path;
  std::vector<std::string> prop_names;
  bool strict = false, all_props = false;

  auto* check = app.add_subcommand("check", "evaluate ring properties");
  check->add_option("--ring", ring_spec, "builtin:NAME or .ring file path")
      ->required();
  check->add_option("--property", prop_names,
                    "property id, may repeat (default: all)");
  check->add_flag("--all", all_props, "check every property (the default)");
  check->add_option("--mccoy-bound", bound_str, "degree bound m,n");
  check->add_flag("--strict", strict, "exit 2 if any property fails");
  check->add_option("--output", out_path, "write report here instead of stdout");

  std::string f_lit, g_lit, method = "thm1", variant = "alternative";
  auto* annihilate =
      app.add_subcommand("annihilate", "run an annihilator procedure");
  annihilate->add_option("--ring", ring_spec, "builtin:NAME or .ring file path")
      ->required();
  annihilate->add_option("--f", f_lit, "f coefficients, low to high")
      ->required();
  annihilate->add_option("--g", g_lit, "g coefficients, low to high")
      ->required();
  annihilate->add_option(
      "--method", method, "lemma1 | thm3 | lemma2 | thm1 | oracle");
  annihilate->add_option("--variant", variant,
                         "thm1 proof variant: alternative | induction");
  annihilate->add_option("--output", out_path, "write trace here");

  std::string corpus_spec = "builtin", csv_path;
  bool hunt = false;
  unsigned jobs = 1;
  auto* diagram =
      app.add_subcommand("diagram", "check the implication diagram");
  diagram->add_option("--corpus", corpus_spec,
                      "builtin or a directory of .ring files");
  diagram->add_option("--mccoy-bound", bound_str, "degree bound m,n");
  diagram->add_flag("--hunt", hunt, "also scan non-arrows for witnesses");
  diagram->add_option("--jobs", jobs, "worker threads");
  diagram->add_option("--csv", csv_path, "also write the verdict matrix CSV");
  diagram->add_option("--output", out_path, "write report here");

  unsigned order = 4;
  std::string out_dir = ".";
  auto* enumerate =
      app.add_subcommand("enumerate", "enumerate unital rings of small order");
  enumerate->add_option("--order", order, "ring order, 1..4")->required();
  enumerate->add_option("--output-dir", out_dir, "directory for .ring files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (check->parsed())
      return cmd_check(ring_spec, prop_names, bound_str, strict, out_path);
    if (annihilate->parsed())
      return cmd_annihilate(ring_spec, f_lit, g_lit, method, variant,
                            out_path);
    if (diagram->parsed())
      return cmd_diagram(corpus_spec, bound_str, hunt, jobs, csv_path,
                         out_path);
    if (enumerate->parsed()) return cmd_enumerate(order, out_dir);
  } catch (const ring_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == errc::nontermination_guard ? exit_stall : exit_input;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
  return exit_input;
}

#include "ringlab/diagram.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace ringlab {

namespace {

using pid = property_id;

// Transcribed from the extended diagram's arrow list, in source order.
constexpr diagram_edge frozen_edges[] = {
    {pid::commutative, pid::duo},
    {pid::commutative, pid::symmetric},
    {pid::duo, pid::left_duo},
    {pid::duo, pid::semicommutative},
    {pid::duo, pid::mccoy},
    {pid::left_duo, pid::semicommutative},
    {pid::left_duo, pid::mccoy},
    {pid::left_duo, pid::right_mccoy},
    {pid::two_primal, pid::dedekind_finite},
    {pid::symmetric, pid::reversible},
    {pid::reversible, pid::semicommutative},
    {pid::reversible, pid::mccoy},
    {pid::semicommutative, pid::abelian},
    {pid::semicommutative, pid::lin_mccoy},
    {pid::semicommutative, pid::two_primal},
    {pid::abelian, pid::dedekind_finite},
    {pid::reduced, pid::symmetric},
    {pid::reduced, pid::armendariz},
    {pid::armendariz, pid::mccoy},
    {pid::armendariz, pid::lin_armendariz},
    {pid::mccoy, pid::right_mccoy},
    {pid::mccoy, pid::lin_mccoy},
    {pid::right_mccoy, pid::right_lin_mccoy},
    {pid::lin_armendariz, pid::abelian},
    {pid::lin_armendariz, pid::lin_mccoy},
    {pid::lin_mccoy, pid::right_lin_mccoy},
    {pid::right_lin_mccoy, pid::dedekind_finite},
};

std::size_t node_index(property_id p) {
  for (std::size_t i = 0; i < diagram_nodes.size(); ++i)
    if (diagram_nodes[i] == p) return i;
  fail(errc::parse_error, "property is not a diagram node");
}

bool antecedent_holds(const verdict& v) {
  return v.kind == verdict_kind::holds ||
         v.kind == verdict_kind::holds_up_to_bound;
}

bool consequent_fails(const verdict& v) {
  return v.kind == verdict_kind::fails;
}

std::string verdict_token(const verdict& v) {
  switch (v.kind) {
    case verdict_kind::holds: return "holds";
    case verdict_kind::fails: return "fails";
    case verdict_kind::holds_up_to_bound:
      return "holds_up_to(" + std::to_string(v.bound.m) + "," +
             std::to_string(v.bound.n) + ")";
    case verdict_kind::unsupported: return "unsupported";
  }
  return "?";
}

} // namespace

std::span<const diagram_edge> builtin_diagram_edges() { return frozen_edges; }

const char* edge_status_name(edge_status s) {
  switch (s) {
    case edge_status::consistent: return "consistent";
    case edge_status::violated: return "violated";
    case edge_status::vacuous: return "vacuous";
  }
  return "?";
}

diagram_report check_diagram(const ring_corpus& corpus, mccoy_bound bound,
                             unsigned jobs) {
  for (std::size_t i = 0; i < corpus.size(); ++i)
    if (!corpus[i].unital())
      fail(errc::non_unital_unsupported,
           "diagram checking requires unital rings: " +
               std::string(corpus[i].name()));

  diagram_report rep;
  rep.bound = bound;
  const std::size_t nrings = corpus.size();
  const std::size_t nnodes = diagram_nodes.size();
  rep.ring_names.reserve(nrings);
  for (std::size_t i = 0; i < nrings; ++i)
    rep.ring_names.push_back(std::string(corpus[i].name()));
  rep.verdicts.assign(nrings, std::vector<verdict>(nnodes));

  const std::size_t cells = nrings * nnodes;
  auto compute_cell = [&](std::size_t cell) {
    const std::size_t ri = cell / nnodes;
    const std::size_t ni = cell % nnodes;
    rep.verdicts[ri][ni] =
        check_property(corpus[ri], diagram_nodes[ni], bound);
  };

  if (jobs <= 1) {
    for (std::size_t c = 0; c < cells; ++c) compute_cell(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
      for (;;) {
        const std::size_t c = next.fetch_add(1);
        if (c >= cells) return;
        try {
          compute_cell(c);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    const unsigned n = std::min<std::size_t>(jobs, cells);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  for (const diagram_edge& e : frozen_edges) {
    edge_result er;
    er.edge = e;
    const std::size_t pi = node_index(e.from);
    const std::size_t qi = node_index(e.to);
    bool exercised = false;
    for (std::size_t ri = 0; ri < nrings; ++ri) {
      const verdict& vp = rep.verdicts[ri][pi];
      const verdict& vq = rep.verdicts[ri][qi];
      if (!antecedent_holds(vp)) continue;
      if (vq.kind != verdict_kind::unsupported) exercised = true;
      if (consequent_fails(vq)) er.witness_rings.push_back(rep.ring_names[ri]);
    }
    er.status = !er.witness_rings.empty() ? edge_status::violated
                : exercised              ? edge_status::consistent
                                         : edge_status::vacuous;
    rep.edges.push_back(std::move(er));
  }
  return rep;
}

std::vector<nonimplication_witness>
hunt_nonimplications(const diagram_report& rep) {
  std::vector<nonimplication_witness> out;
  for (property_id p : diagram_nodes)
    for (property_id q : diagram_nodes) {
      if (p == q) continue;
      bool is_edge = false;
      for (const diagram_edge& e : frozen_edges)
        if (e.from == p && e.to == q) { is_edge = true; break; }
      if (is_edge) continue;
      const std::size_t pi = node_index(p);
      const std::size_t qi = node_index(q);
      for (std::size_t ri = 0; ri < rep.ring_names.size(); ++ri)
        if (antecedent_holds(rep.verdicts[ri][pi]) &&
            consequent_fails(rep.verdicts[ri][qi]))
          out.push_back({p, q, rep.ring_names[ri]});
    }
  return out;
}

std::string serialize(const diagram_report& rep) {
  std::string out = "bound " + std::to_string(rep.bound.m) + "," +
                    std::to_string(rep.bound.n) + "\n";
  for (std::size_t ri = 0; ri < rep.ring_names.size(); ++ri)
    for (std::size_t ni = 0; ni < diagram_nodes.size(); ++ni)
      out += format_report_line(rep.ring_names[ri], diagram_nodes[ni],
                                rep.verdicts[ri][ni]) +
             "\n";
  for (const edge_result& er : rep.edges) {
    out += "edge " + std::string(property_name(er.edge.from)) + " -> " +
           property_name(er.edge.to) + " " + edge_status_name(er.status);
    for (const std::string& w : er.witness_rings) out += " ring=" + w;
    out += "\n";
  }
  return out;
}

std::string serialize(const std::vector<nonimplication_witness>& ws) {
  std::string out;
  for (const auto& w : ws)
    out += "nonedge " + std::string(property_name(w.from)) + " -> " +
           property_name(w.to) + " witness ring=" + w.ring_name + "\n";
  return out;
}

std::string verdict_matrix_csv(const diagram_report& rep) {
  std::string out = "ring";
  for (property_id p : diagram_nodes)
    out += std::string(",") + property_name(p);
  out += "\n";
  for (std::size_t ri = 0; ri < rep.ring_names.size(); ++ri) {
    out += rep.ring_names[ri];
    for (std::size_t ni = 0; ni < diagram_nodes.size(); ++ni) {
      std::string tok = verdict_token(rep.verdicts[ri][ni]);
      if (tok.find(',') != std::string::npos) tok = "\"" + tok + "\"";
      out += "," + tok;
    }
    out += "\n";
  }
  return out;
}

} // namespace ringlab

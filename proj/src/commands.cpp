#include "ordalg/commands.hpp"

#include "ordalg/rou.hpp"

namespace ordalg {

namespace {

Json components_json(const std::vector<std::vector<std::size_t>>& comps) {
  Json a = Json::array();
  for (const auto& w : comps) {
    Json c = Json::array();
    for (std::size_t m : w) c.push_back(std::to_string(m));
    a.push_back(std::move(c));
  }
  return a;
}

Json graph_json(const Tower& t, const WeightedGraph& g) {
  Json out;
  Json vertices = Json::array();
  for (std::size_t m = 0; m < t.components(); ++m) {
    Json v;
    v["index"] = std::to_string(m);
    v["min_poly"] = t.dec.components[m].field.min_poly().to_string();
    vertices.push_back(std::move(v));
  }
  out["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (auto [m, n] : g.edges()) {
    Json e;
    e["from"] = std::to_string(m);
    e["to"] = std::to_string(n);
    e["weight"] = to_string(g.weights[m][n]);
    edges.push_back(std::move(e));
  }
  out["edges"] = std::move(edges);
  out["components"] = components_json(g.components());
  return out;
}

}  // namespace

CommandResult cmd_idempotents(const Order& a) {
  Tower t = build_tower(a);
  auto ids = primitive_idempotents(t);
  CommandResult r;
  r.output["command"] = "idempotents";
  r.output["rank"] = std::to_string(a.rank());
  r.output["count"] = std::to_string(ids.size());
  Json list = Json::array();
  for (const auto& e : ids) list.push_back(to_json(e));
  r.output["idempotents"] = std::move(list);
  r.summary = std::to_string(ids.size()) + " primitive idempotent(s)";
  return r;
}

CommandResult cmd_units(const Order& a, bool naive_lift) {
  Tower t = build_tower(a);
  auto pres = mu_a_presentation(t, naive_lift);
  CommandResult r;
  r.output["command"] = "units";
  r.output["rank"] = std::to_string(a.rank());
  Json gens = Json::array();
  for (const auto& g : pres.generators) gens.push_back(to_json(g));
  r.output["generators"] = std::move(gens);
  Json rels = Json::array();
  for (std::size_t j = 0; j < pres.relations.cols(); ++j) rels.push_back(to_json(pres.relations.column(j)));
  r.output["relations"] = std::move(rels);
  Json inv = to_json(pres.invariant_factors());
  r.output["invariant_factors"] = inv;
  Int order = pres.order();
  r.output["order"] = to_string(order);
  r.summary = "#mu(A) = " + to_string(order) + ", invariant factors " + inv.dump();
  return r;
}

CommandResult cmd_dlog(const Order& a, const Json& targets, const Json& element) {
  const std::size_t n = a.rank();
  if (!targets.is_array()) throw InputError("targets must be an array of vectors");
  std::vector<RatVector> t;
  for (const auto& x : targets) {
    t.push_back(rat_vector_from_json(x));
    if (t.back().size() != n) throw InputError("target vectors must have rank entries");
  }
  RatVector zeta = rat_vector_from_json(element);
  if (zeta.size() != n) throw InputError("element must have rank entries");

  QAlgebra e = a.algebra();
  MembershipResult m;
  try {
    m = mu_e_subgroup_dlog(e, t, zeta);
  } catch (const DomainError& err) {
    throw InputError(err.what());
  }
  CommandResult r;
  r.output["command"] = "dlog";
  switch (m.status) {
    case Membership::Member:
      r.output["member"] = true;
      r.output["exponents"] = to_json(m.exponents);
      r.summary = "member";
      break;
    case Membership::NotInSubgroup:
      r.output["member"] = false;
      r.output["reason"] = "not in the subgroup generated by the targets";
      r.summary = "no: not in <T>";
      r.status = 1;
      break;
    case Membership::NotInGroup:
      r.output["member"] = false;
      r.output["reason"] = "not a root of unity";
      r.summary = "no: not a root of unity";
      r.status = 1;
      break;
  }
  return r;
}

CommandResult cmd_graph(const Order& a, const std::optional<Int>& prime) {
  Tower t = build_tower(a);
  if (t.dec.nil_basis.cols() != 0) throw InputError("graph needs an order with reduced Q-algebra");
  WeightedGraph g = order_graph(t);
  CommandResult r;
  r.output["command"] = "graph";
  if (prime) {
    if (!is_prime(*prime)) throw InputError("--prime must be a prime number");
    g = graph_c(g, *prime);
    r.output["prime"] = to_string(*prime);
  }
  Json body = graph_json(t, g);
  for (auto& [k, v] : body.items()) r.output[k] = v;
  r.summary = std::to_string(g.edges().size()) + " edge(s), " + std::to_string(g.components().size()) +
              " component(s)";
  return r;
}

CommandResult cmd_decompose(const Order& a) {
  Tower t = build_tower(a);
  CommandResult r;
  r.output["command"] = "decompose";
  r.output["rank"] = std::to_string(a.rank());
  r.output["separable_dim"] = std::to_string(t.d());
  r.output["nilradical_dim"] = std::to_string(t.dec.nil_basis.cols());
  Json comps = Json::array();
  for (std::size_t m = 0; m < t.components(); ++m) {
    Json c;
    c["min_poly"] = t.dec.components[m].field.min_poly().to_string();
    c["degree"] = std::to_string(t.dec.degree(m));
    c["mu_order"] = to_string(t.mu_e.order[m]);
    c["residue_mu_order"] = to_string(t.residue[m].order);
    comps.push_back(std::move(c));
  }
  r.output["components"] = std::move(comps);
  r.output["index_b_a_sep"] = to_string(t.index_b_a_sep);
  Json primes = Json::array();
  Json c_index = Json::object();
  for (const Int& p : t.primes) {
    primes.push_back(to_string(p));
    c_index[to_string(p)] = to_string(index(t.a_sep_b, build_c(t, p)));
  }
  r.output["primes"] = std::move(primes);
  r.output["index_c_a_sep"] = std::move(c_index);
  r.summary = std::to_string(t.components()) + " component(s), (B : A_sep) = " + to_string(t.index_b_a_sep);
  return r;
}

CommandResult cmd_from_poly(const IntVector& f) {
  OrderDocument doc = document_from_poly(f);
  CommandResult r;
  r.output = parse_json(serialize_order_document(doc));
  r.summary = "rank " + std::to_string(doc.order.rank());
  return r;
}

}  // namespace ordalg

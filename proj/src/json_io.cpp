#include "flatcycle/json_io.hpp"

#include <sstream>

namespace flatcycle {

namespace {

Json rat_to_json(const Rat& q, Mode mode) {
  if (mode == Mode::Rational) return rat_to_string(q);
  return to_double(q);
}

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return rat_of_string(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_number()) return rat_of_double(j.get<double>());
  throw ParseError("expected a number or \"p/q\" string");
}

Json point_to_json(const Point& p, Mode mode) {
  Json arr = Json::array();
  for (const Rat& c : p.x) arr.push_back(rat_to_json(c, mode));
  return arr;
}

Point point_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("point must be an array");
  std::vector<Rat> c;
  for (const Json& v : j) c.push_back(rat_from_json(v));
  return Point(std::move(c));
}

Mode mode_from_json(const Json& j) {
  std::string m = j.value("mode", "rational");
  if (m == "rational") return Mode::Rational;
  if (m == "float") return Mode::Float;
  throw ParseError("mode must be \"rational\" or \"float\"");
}

GridIndex index_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("grid index must be an array of ints");
  GridIndex idx;
  for (const Json& v : j) {
    if (!v.is_number_integer()) throw ParseError("grid index entries are ints");
    idx.push_back(v.get<long>());
  }
  return idx;
}

}  // namespace

Json cycle_to_json(const ZeroCycle& t) {
  Json j;
  j["n"] = t.n();
  j["mode"] = t.mode() == Mode::Rational ? "rational" : "float";
  Json atoms = Json::array();
  for (const auto& [p, w] : t.atoms()) {
    Json a;
    a["x"] = point_to_json(p, t.mode());
    a["w"] = rat_to_json(w, t.mode());
    atoms.push_back(a);
  }
  j["atoms"] = atoms;
  return j;
}

ZeroCycle cycle_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("atoms"))
    throw ParseError("cycle JSON needs \"n\" and \"atoms\"");
  int n = j.at("n").get<int>();
  Mode mode = mode_from_json(j);
  std::vector<std::pair<Point, Rat>> atoms;
  for (const Json& a : j.at("atoms"))
    atoms.emplace_back(point_from_json(a.at("x")), rat_from_json(a.at("w")));
  return make_cycle(n, atoms, mode);
}

Json chain_to_json(const OneChain& s) {
  Json j;
  j["n"] = s.n;
  j["mode"] = s.mode == Mode::Rational ? "rational" : "float";
  Json segs = Json::array();
  for (const Segment& seg : s.segments) {
    Json e;
    e["a"] = point_to_json(seg.a, s.mode);
    e["b"] = point_to_json(seg.b, s.mode);
    e["c"] = rat_to_json(seg.coef, s.mode);
    segs.push_back(e);
  }
  j["segments"] = segs;
  return j;
}

OneChain chain_from_json(const Json& j) {
  OneChain s;
  s.n = j.at("n").get<int>();
  s.mode = mode_from_json(j);
  for (const Json& e : j.at("segments")) {
    Segment seg{point_from_json(e.at("a")), point_from_json(e.at("b")),
                rat_from_json(e.at("c"))};
    if (seg.a == seg.b && seg.coef != 0)
      throw ParseError("degenerate segment with nonzero coefficient");
    s.segments.push_back(std::move(seg));
  }
  return s;
}

Json transport_to_json(const TransportSolution& sol, Mode mode) {
  Json j;
  j["value"] = sol.value;
  j["gap"] = sol.gap;
  Json plan = Json::array();
  for (const PlanEntry& e : sol.plan) {
    Json p;
    p["from"] = point_to_json(e.from, mode);
    p["to"] = point_to_json(e.to, mode);
    p["f"] = rat_to_json(e.flow, mode);
    plan.push_back(p);
  }
  j["plan"] = plan;
  Json u = Json::array();
  for (const Potential& pot : sol.potentials) {
    Json p;
    p["x"] = point_to_json(pot.x, mode);
    p["v"] = pot.value;
    u.push_back(p);
  }
  j["u"] = u;
  return j;
}

TransportSolution transport_from_json(const Json& j) {
  TransportSolution sol;
  sol.value = j.at("value").get<double>();
  sol.gap = j.at("gap").get<double>();
  sol.dual = sol.value - sol.gap;
  for (const Json& p : j.at("plan"))
    sol.plan.push_back(PlanEntry{point_from_json(p.at("from")),
                                 point_from_json(p.at("to")),
                                 rat_from_json(p.at("f"))});
  for (const Json& p : j.at("u"))
    sol.potentials.push_back(
        Potential{point_from_json(p.at("x")), p.at("v").get<double>()});
  return sol;
}

Json grid_cycle_to_json(const GridCycle& g) {
  Json j;
  j["n"] = g.spec.n;
  j["k"] = g.spec.k;
  Json theta = Json::array();
  for (const auto& [i, w] : g.theta) {
    Json t;
    t["i"] = i;
    t["w"] = rat_to_string(w);
    theta.push_back(t);
  }
  j["theta"] = theta;
  return j;
}

GridCycle grid_cycle_from_json(const Json& j) {
  GridSpec spec{j.at("n").get<int>(), j.at("k").get<long>()};
  std::vector<std::pair<GridIndex, Rat>> theta;
  for (const Json& t : j.at("theta"))
    theta.emplace_back(index_from_json(t.at("i")), rat_from_json(t.at("w")));
  return make_grid_measure(spec, theta);
}

Json quantized_to_json(const QuantizedCycle& p) {
  Json j;
  j["n"] = p.lattice.n;
  j["k"] = p.lattice.k;
  j["eps"] = rat_to_string(p.lattice.eps);
  j["eps_hat"] = rat_to_string(p.lattice.eps_hat);
  Json theta = Json::array();
  Json m = Json::array();
  for (const auto& [i, mult] : p.mult) {
    Json t;
    t["i"] = i;
    t["w"] = rat_to_string(Rat(mult) * p.lattice.eps_hat);
    theta.push_back(t);
    m.push_back(mult.get_str());
  }
  j["theta"] = theta;
  j["m"] = m;
  return j;
}

QuantizedCycle quantized_from_json(const Json& j) {
  QuantizedCycle out;
  out.lattice = make_lattice(j.at("n").get<int>(), j.at("k").get<long>(),
                             rat_from_json(j.at("eps")));
  Rat declared_hat = rat_from_json(j.at("eps_hat"));
  if (declared_hat != out.lattice.eps_hat)
    throw ParseError("eps_hat does not match eps/(2n(2k+1)^n)");
  const Json& theta = j.at("theta");
  const Json& m = j.at("m");
  if (theta.size() != m.size())
    throw ParseError("theta and m arrays must be parallel");
  for (size_t i = 0; i < theta.size(); ++i) {
    GridIndex idx = index_from_json(theta[i].at("i"));
    Int mult;
    if (m[i].is_string())
      mult = Int(m[i].get<std::string>());
    else
      mult = Int(m[i].get<long>());
    if (mult != 0) out.mult[idx] = mult;
  }
  return out;
}

Json field_to_json(const GridVectorField& eta) {
  Json j;
  j["n"] = eta.spec.n;
  j["k"] = eta.spec.k;
  Json edges = Json::array();
  for (const auto& [e, f] : eta.flow) {
    Json row;
    row["from"] = e.first;
    row["axis"] = e.second;
    row["f"] = rat_to_string(f);
    edges.push_back(row);
  }
  j["edges"] = edges;
  return j;
}

GridVectorField field_from_json(const Json& j) {
  GridVectorField eta;
  eta.spec = GridSpec{j.at("n").get<int>(), j.at("k").get<long>()};
  for (const Json& row : j.at("edges")) {
    GridIndex from = index_from_json(row.at("from"));
    int axis = row.at("axis").get<int>();
    Rat f = rat_from_json(row.at("f"));
    if (f != 0) eta.flow[{from, axis}] += f;
  }
  return eta;
}

Json kappa_to_json(const KappaEstimate& est) {
  Json j;
  j["eps"] = est.eps;
  j["value"] = est.value;
  j["witness"] = cycle_to_json(est.witness);
  j["witness_gdist"] = est.witness_gdist;
  j["support_policy"] =
      est.policy.include_grid
          ? "supp+grid(" + std::to_string(est.policy.grid_k) + ")"
          : "supp";
  return j;
}

Json report_to_json(const RunReport& rep) {
  Json j;
  j["command"] = rep.command;
  j["inputs_digest"] = rep.inputs_digest;
  j["seed"] = rep.seed;
  j["pass"] = rep.all_pass();
  Json checks = Json::array();
  for (const ReportCheck& c : rep.checks) {
    Json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["lhs"] = c.lhs;
    e["rhs"] = c.rhs;
    e["residual"] = c.residual;
    checks.push_back(e);
  }
  j["checks"] = checks;
  return j;
}

std::string count_sweep_csv_header() {
  return "p,q,exact,ln_exact,bound_F,bound_G_ln,pass";
}

std::string count_sweep_csv_row(const CountInstance& inst, const Int& exact,
                                double ln_exact, double bound_f,
                                double bound_g_ln, bool pass) {
  std::ostringstream os;
  os << inst.p << "," << inst.q << "," << exact.get_str() << "," << ln_exact
     << "," << bound_f << "," << bound_g_ln << "," << (pass ? 1 : 0);
  return os.str();
}

}  // namespace flatcycle

#include "cayley/json_io.hpp"

#include <stdexcept>

namespace cayley {

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  if (j.is_object() && j.contains("re")) return {j.at("re").get<double>(), j.value("im", 0.0)};
  throw std::invalid_argument("not a complex number: " + j.dump());
}

json matrix_to_json(const Eigen::MatrixXcd& M) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < M.cols(); ++k) row.push_back(complex_to_json(M(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXcd matrix_from_json(const json& j, int m) {
  Eigen::MatrixXcd M(m, m);
  bool nested = j.is_array() && !j.empty() && j[0].is_array();
  if (m == 1 && !nested) {
    M(0, 0) = complex_from_json(j);
    return M;
  }
  if (!j.is_array() || static_cast<int>(j.size()) != m)
    throw std::invalid_argument("expected a " + std::to_string(m) + "x" + std::to_string(m) + " matrix");
  for (int i = 0; i < m; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != m)
      throw std::invalid_argument("matrix row " + std::to_string(i) + " has the wrong length");
    for (int k = 0; k < m; ++k) M(i, k) = complex_from_json(j[i][k]);
  }
  return M;
}

namespace {

std::string s_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  std::string out;
  for (const auto& e : j) {
    if (!out.empty()) out += ",";
    out += e.is_string() ? e.get<std::string>() : e.dump();
  }
  return out;
}

json labels(const GroupLattice& L, const std::vector<Elem>& xs) {
  json a = json::array();
  for (Elem x : xs) a.push_back(L.label(x));
  return a;
}

}  // namespace

GaugeConfig gauge_config_from_json(const json& j, LatticeOptions opts) {
  if (!j.contains("group") || !j.contains("S")) throw std::invalid_argument("gauge configuration needs group and S");
  LatticePtr L = build_lattice(j.at("group").get<std::string>(), s_text(j.at("S")), opts);
  const GroupTable& G = L->group();
  const int m = j.value("m", 1);
  if (m < 1) throw std::invalid_argument("m must be positive");
  std::vector<MatrixFunction> W(static_cast<size_t>(L->n()), identity_matrix(G, m));
  if (j.contains("W")) {
    const json& w = j.at("W");
    if (w.is_string()) {
      if (w.get<std::string>() != "theta") throw std::invalid_argument("W must be an object or \"theta\"");
    } else {
      for (const auto& [hkey, sites] : w.items()) {
        int p = L->pos(G.parse(hkey));
        if (p < 0) throw std::invalid_argument("W given for " + hkey + ", which is not in S");
        for (const auto& [gkey, mat] : sites.items()) W[p][G.parse(gkey)] = matrix_from_json(mat, m);
      }
    }
  }
  GaugeField field = make_gauge_field(L, m, std::move(W));
  if (j.contains("gamma")) {
    MatrixFunction gamma = identity_matrix(G, m);
    for (const auto& [gkey, mat] : j.at("gamma").items()) gamma[G.parse(gkey)] = matrix_from_json(mat, m);
    field = gauge_transform(field, gamma);
  }
  return {L, std::move(field)};
}

json gauge_field_to_json(const GaugeField& W) {
  const GroupLattice& L = *W.L;
  json out;
  out["group"] = L.group().spec().str();
  out["S"] = labels(L, L.S());
  out["m"] = W.m;
  json w = json::object();
  for (int p = 0; p < L.n(); ++p)
    for (Elem g = 0; g < L.order(); ++g) w[L.label(L.s(p))][L.label(g)] = matrix_to_json(W.W[p][g]);
  out["W"] = std::move(w);
  return out;
}

LinearConnection connection_from_json(const LatticePtr& L, const json& j) {
  const GroupTable& G = L->group();
  LinearConnection C = LinearConnection::zero(L);
  for (const auto& [hkey, sites] : j.items()) {
    int hp = L->pos(G.parse(hkey));
    if (hp < 0) throw std::invalid_argument("V given for " + hkey + ", which is not in S");
    for (const auto& [gkey, mat] : sites.items()) {
      Elem g = G.parse(gkey);
      Eigen::MatrixXcd M = matrix_from_json(mat, L->n());
      for (int h = 0; h < L->n(); ++h)
        for (int h2 = 0; h2 < L->n(); ++h2) C.V(h, hp, h2)(g) = M(h, h2);
    }
  }
  return C;
}

json connection_to_json(const LinearConnection& C) {
  const GroupLattice& L = *C.lattice_ptr();
  json out = json::object();
  for (int hp = 0; hp < L.n(); ++hp)
    for (Elem g = 0; g < L.order(); ++g) out[L.label(L.s(hp))][L.label(g)] = matrix_to_json(C.matrix(hp, g));
  return out;
}

json lattice_report(const GroupLattice& L) {
  json r;
  r["group"] = L.group().spec().str();
  r["order"] = L.order();
  r["S"] = labels(L, L.S());
  r["out_degree"] = L.n();
  r["S0"] = labels(L, L.S0());
  r["S1"] = labels(L, L.S1());
  r["S2"] = labels(L, L.S2());
  auto comps = connected_components(L);
  r["components"] = comps.size();
  r["connected"] = comps.size() == 1;
  r["bicovariant"] = is_bicovariant(L);
  r["universal"] = is_universal(L);
  const RelationSpace& rs = L.relations(2);
  r["relations_2form"] = rs.rank;
  r["independent_2forms"] = rs.dim - rs.rank;
  Polygons P = enumerate_polygons(L);
  json poly;
  poly["biangles"] = P.biangles.size();
  poly["triangles"] = P.triangles.size();
  poly["quadrangle_classes"] = P.quadrangles.size();
  r["polygons"] = std::move(poly);
  if (is_bicovariant(L)) {
    json cyc = json::object();
    for (Elem g : L.S2()) {
      json list = json::array();
      for (const auto& c : enumerate_cycles(L, g)) list.push_back(labels(L, c));
      cyc[L.label(g)] = std::move(list);
    }
    r["cycles"] = std::move(cyc);
  } else if (auto bad = bicovariance_violation(L)) {
    r["bicovariance_witness"] = {L.label(bad->first), L.label(bad->second)};
  }
  return r;
}

json coset_report(const CosetDiagram& D) {
  const GroupLattice& L = *D.L;
  json r;
  r["H"] = labels(L, D.H);
  r["cosets"] = json::array();
  for (int K = 0; K < D.size(); ++K) r["cosets"].push_back({{"label", D.label(K)}, {"members", labels(L, D.cosets[K])}});
  json table = json::array();
  for (int K = 0; K < D.size(); ++K) {
    json row;
    row["coset"] = D.label(K);
    for (int p = 0; p < L.n(); ++p) row["action"][L.label(L.s(p))] = D.label(D.action[K][p]);
    table.push_back(std::move(row));
  }
  r["action"] = std::move(table);
  json rel = json::array();
  int loops = 0, multi = 0;
  for (const auto& x : reduction_relations(D)) {
    json e;
    bool loop = x.kind == ReductionRelation::Kind::loop;
    (loop ? loops : multi)++;
    e["kind"] = loop ? "loop" : "multi_edge";
    e["coset"] = D.label(x.coset);
    e["h"] = loop ? json::array({L.label(L.s(x.h1))}) : json::array({L.label(L.s(x.h1)), L.label(L.s(x.h2))});
    e["closed"] = x.closed;
    rel.push_back(std::move(e));
  }
  r["relations"] = std::move(rel);
  r["loop_relations"] = loops;
  r["multi_edge_relations"] = multi;
  return r;
}

json yang_mills_report(const YangMills& ym, const GroupLattice& L) {
  json r;
  r["S_YM"] = ym.total;
  r["breakdown"] = {{"biangle", ym.biangle}, {"triangle", ym.triangle}, {"quadrangle", ym.quadrangle}};
  json per = json::object();
  for (const auto& [g, v] : ym.per_class) per[L.label(g)] = v;
  r["quadrangle_classes"] = std::move(per);
  return r;
}

json torsion_report_json(const TorsionReport& t) {
  return {{"biangle", t.biangle}, {"triangle", t.triangle}, {"quadrangle", t.quadrangle}};
}

}  // namespace cayley

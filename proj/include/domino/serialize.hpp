#pragma once

// JSON shapes for the CLI and cross-tool checks.  Every integer value is a
// decimal string: the counts outgrow 64-bit almost immediately and decimal
// strings survive every JSON consumer intact.

#include <json.hpp>

#include <string>

#include "domino/box3d.hpp"
#include "domino/genfun.hpp"
#include "domino/grid.hpp"
#include "domino/laurent.hpp"
#include "domino/numeric.hpp"
#include "domino/polynomial.hpp"
#include "domino/reciprocity.hpp"
#include "domino/recurrence.hpp"

namespace domino {

using json = nlohmann::json;

inline std::string dec(const Int& v) { return v.get_str(); }
inline std::string dec(long v) { return std::to_string(v); }
inline std::string dec(int v) { return std::to_string(v); }

inline json coeffs_json(const Poly<Int>& p) {
  json a = json::array();
  for (const Int& c : p) a.push_back(dec(c));
  return a;
}

// {width, columns, vertices, edges:[{kind,row,col,sign}...]} with edges in
// canonical (kind,row,col) order
inline json grid_json(const SignedGrid& g) {
  json edges = json::array();
  for (const GridEdge& e : g.edges)
    edges.push_back({{"kind", e.kind == EdgeKind::horizontal ? "horizontal"
                                                             : "vertical"},
                     {"row", dec(e.row)},
                     {"col", dec(e.col)},
                     {"sign", dec(e.sign)}});
  return {{"width", dec(g.width)},
          {"columns", dec(g.columns)},
          {"vertices", dec(g.vertex_count())},
          {"edges", std::move(edges)}};
}

// row-major, decimal strings
inline json matrix_json(const IntMatrix& M) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) row.push_back(dec(M(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// coefficient array q_0..q_d, lowest degree first
inline json recurrence_json(const LinearRecurrence& rec) {
  return coeffs_json(rec.q);
}

inline json table_json(const TwoSidedTable& t) {
  json rows = json::array();
  for (long n = t.n_min; n <= t.n_max; ++n)
    rows.push_back({{"n", dec(n)}, {"value", dec(t.at(n))}});
  return rows;
}

inline json genfun_json(const RationalGF& gf) {
  json sym = json::array();
  for (const SymmetryPair& p : classify_symmetry(gf.Q))
    sym.push_back({{"s", dec(p.s)}, {"t", dec(p.t)}});
  return {{"m", dec(gf.m)},
          {"P", coeffs_json(gf.P)},
          {"Q", coeffs_json(gf.Q)},
          {"degree_gap", dec(degree_gap(gf))},
          {"symmetry", std::move(sym)}};
}

inline json reciprocity_json(const ReciprocityReport& rep) {
  json rows = json::array();
  for (const ReciprocityRow& r : rep.rows) {
    json row = {{"n", dec(r.n)},
                {"T_forward", dec(r.t_forward)},
                {"T_extrapolated", dec(r.t_extrapolated)},
                {"epsilon", dec(r.eps)},
                {"pass", r.pass}};
    if (r.oracle) row["oracle"] = dec(*r.oracle);
    rows.push_back(std::move(row));
  }
  return {{"m", dec(rep.m)},
          {"n_max", dec(rep.n_max)},
          {"rows", std::move(rows)},
          {"all_pass", rep.all_pass}};
}

inline json box3d_json(const Box3dReport& rep) {
  json rows = json::array();
  for (const Box3dRow& r : rep.rows)
    rows.push_back({{"n", dec(r.n)},
                    {"T_forward", dec(r.t_forward)},
                    {"T_extrapolated", dec(r.t_extrapolated)},
                    {"abs_pass", r.abs_pass},
                    {"sign", dec(r.sign)}});
  return {{"k", dec(rep.k)},
          {"m", dec(rep.m)},
          {"n_max", dec(rep.n_max)},
          {"recurrence", recurrence_json(rep.recurrence)},
          {"rows", std::move(rows)},
          {"all_pass", rep.all_pass}};
}

// canonical term order: monomials ascending in the (family, index) map
// order with w < x < y
inline json laurent_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [mono, c] : p.terms) {
    json exps = json::object();
    for (const auto& [v, e] : mono) exps[var_name(v)] = dec(e);
    terms.push_back({{"coefficient", dec(c)}, {"exponents", std::move(exps)}});
  }
  return terms;
}

inline Limits limits_from_json(const json& j) {
  Limits lim;
  if (j.contains("oracle_vertex_guard"))
    lim.oracle_vertex_guard = j.at("oracle_vertex_guard").get<int>();
  if (j.contains("transfer_width_cap"))
    lim.transfer_width_cap = j.at("transfer_width_cap").get<int>();
  if (j.contains("box3d_cell_cap"))
    lim.box3d_cell_cap = j.at("box3d_cell_cap").get<int>();
  if (j.contains("laurent_depth_floor"))
    lim.laurent_depth_floor = j.at("laurent_depth_floor").get<long>();
  return lim;
}

}  // namespace domino

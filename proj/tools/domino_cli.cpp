// domino: exact tiling counts of m-by-n strips and k-by-m-by-n boxes,
// two-sided extrapolation through linear recurrences, reciprocity and
// Laurent-phenomenon verification.
//
// Every command writes one output envelope:
//   {"command": ..., "parameters": ..., "result": ..., "status": "ok"|"fail"}
// with all integers as decimal strings.  --format selects json, csv or the
// default text rendering.  Exit codes: 0 success, 1 verification failure,
// 2 invalid input or cap violation.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "domino/serialize.hpp"

namespace {

using domino::json;

enum class Format { text, json, csv };

struct Output {
  json envelope;
  std::string text;
  std::string csv;
  bool ok = true;
};

void emit(const Output& out, Format fmt) {
  switch (fmt) {
    case Format::json:
      std::cout << out.envelope.dump(2) << "\n";
      break;
    case Format::csv:
      std::cout << out.csv;
      break;
    case Format::text:
      std::cout << out.text;
      break;
  }
}

json envelope(const std::string& command, json params, json result, bool ok) {
  return {{"command", command},
          {"parameters", std::move(params)},
          {"result", std::move(result)},
          {"status", ok ? "ok" : "fail"}};
}

std::string pass_str(bool b) { return b ? "pass" : "FAIL"; }

Output run_count(int m, long n, bool dump_matrix, const domino::Limits& lim) {
  domino::Int value = n >= 1 ? domino::count_fast(m, n, lim)
                             : domino::two_sided_table(m, n, n, lim).at(n);
  json result = {{"value", domino::dec(value)}};
  std::ostringstream text;
  text << "T(" << m << "," << n << ") = " << value.get_str() << "\n";
  if (dump_matrix) {
    result["transfer_matrix"] =
        domino::matrix_json(domino::build_transfer_matrix(m, lim));
    text << "transfer matrix (order " << (1u << m)
         << "): " << result["transfer_matrix"].dump() << "\n";
  }
  Output out;
  out.envelope = envelope(
      "count", {{"m", domino::dec(m)}, {"n", domino::dec(n)}}, result, true);
  out.text = text.str();
  out.csv = "m,n,value\n" + std::to_string(m) + "," + std::to_string(n) + "," +
            value.get_str() + "\n";
  return out;
}

Output run_table(int m, long from, long to, const domino::Limits& lim) {
  const domino::TwoSidedTable t = domino::two_sided_table(m, from, to, lim);
  std::ostringstream text, csv;
  csv << "n,value\n";
  for (long n = from; n <= to; ++n) {
    text << std::setw(6) << n << "  " << t.at(n).get_str() << "\n";
    csv << n << "," << t.at(n).get_str() << "\n";
  }
  Output out;
  out.envelope = envelope("table",
                          {{"m", domino::dec(m)},
                           {"from", domino::dec(from)},
                           {"to", domino::dec(to)}},
                          {{"values", domino::table_json(t)}}, true);
  out.text = text.str();
  out.csv = csv.str();
  return out;
}

Output run_oracle(int m, long n, bool force, bool dump_graph,
                  const domino::Limits& lim) {
  const domino::SignedGrid g = domino::build_grid(m, n);
  const auto matchings = domino::enumerate_matchings(g, lim, force);
  long positive = 0, negative = 0;
  for (const domino::Matching& match : matchings)
    (match.sign > 0 ? positive : negative) += 1;
  const domino::Int signed_count = domino::Int(positive) - negative;

  json result = {{"signed_count", domino::dec(signed_count)},
                 {"matchings", domino::dec(static_cast<long>(matchings.size()))},
                 {"positive", domino::dec(positive)},
                 {"negative", domino::dec(negative)}};
  std::ostringstream text;
  text << "signed matching count of G(" << m << "," << n
       << ") = " << signed_count.get_str() << "  (" << matchings.size()
       << " matchings: " << positive << " positive, " << negative
       << " negative)\n";
  if (dump_graph) {
    result["graph"] = domino::grid_json(g);
    text << "graph: " << result["graph"].dump() << "\n";
  }
  Output out;
  out.envelope = envelope(
      "oracle", {{"m", domino::dec(m)}, {"n", domino::dec(n)}}, result, true);
  out.text = text.str();
  out.csv = "m,n,signed_count,positive,negative\n" + std::to_string(m) + "," +
            std::to_string(n) + "," + signed_count.get_str() + "," +
            std::to_string(positive) + "," + std::to_string(negative) + "\n";
  return out;
}

Output run_recurrence(int m, const domino::Limits& lim) {
  const domino::LinearRecurrence rec =
      domino::minimal_recurrence_for_width(m, lim);
  json result = {{"degree", domino::dec(rec.degree())},
                 {"coefficients", domino::recurrence_json(rec)}};
  std::ostringstream text;
  text << "minimal recurrence for T(" << m << ",.): degree " << rec.degree()
       << ", coefficients (lowest first):";
  for (const domino::Int& c : rec.q) text << " " << c.get_str();
  text << "\n";

  // the Cayley-Hamilton cross-check gets expensive past order 64
  if (m <= 6) {
    const domino::Poly<domino::Int> cp =
        domino::char_poly(domino::build_transfer_matrix(m, lim));
    const bool divides = domino::poly_divides(rec.q, cp);
    result["char_poly"] = domino::coeffs_json(cp);
    result["divides_char_poly"] = divides;
    text << "characteristic polynomial: " << domino::poly_to_string(cp)
         << "\nminimal recurrence divides it: " << (divides ? "yes" : "NO")
         << "\n";
  }
  std::ostringstream csv;
  csv << "i,q_i\n";
  for (size_t i = 0; i < rec.q.size(); ++i)
    csv << i << "," << rec.q[i].get_str() << "\n";

  Output out;
  out.envelope =
      envelope("recurrence", {{"m", domino::dec(m)}}, result, true);
  out.text = text.str();
  out.csv = csv.str();
  return out;
}

Output run_genfun(int m, const domino::Limits& lim) {
  const domino::RationalGF gf = domino::generating_function(m, lim);
  std::ostringstream text, csv;
  text << "F_" << m << "(x) = P(x)/Q(x)\n"
       << "P(x) = " << domino::poly_to_string(gf.P) << "\n"
       << "Q(x) = " << domino::poly_to_string(gf.Q) << "\n"
       << "deg Q - deg P = " << domino::degree_gap(gf) << "\n";
  for (const domino::SymmetryPair& p : domino::classify_symmetry(gf.Q))
    text << "x^deg(Q) * Q(1/x) = " << (p.s > 0 ? "+" : "-") << "Q("
         << (p.t > 0 ? "+" : "-") << "x)\n";
  csv << "i,P_i,Q_i\n";
  for (size_t i = 0; i < std::max(gf.P.size(), gf.Q.size()); ++i) {
    csv << i << ",";
    csv << (i < gf.P.size() ? gf.P[i].get_str() : "0") << ",";
    csv << (i < gf.Q.size() ? gf.Q[i].get_str() : "0") << "\n";
  }
  Output out;
  out.envelope = envelope("genfun", {{"m", domino::dec(m)}},
                          domino::genfun_json(gf), true);
  out.text = text.str();
  out.csv = csv.str();
  return out;
}

Output run_verify(int m, long n_max, bool with_oracle,
                  const domino::Limits& lim) {
  const domino::ReciprocityReport rep =
      domino::verify_reciprocity(m, n_max, with_oracle, lim);
  std::ostringstream text, csv;
  text << "reciprocity check for m = " << m << ", 0 <= n <= " << n_max << "\n";
  text << std::setw(6) << "n" << std::setw(16) << "T(m,n)" << std::setw(16)
       << "T(m,-2-n)" << std::setw(6) << "eps" << std::setw(16) << "oracle"
       << "  result\n";
  csv << "n,T_forward,T_extrapolated,epsilon,oracle,pass\n";
  for (const domino::ReciprocityRow& r : rep.rows) {
    text << std::setw(6) << r.n << std::setw(16) << r.t_forward.get_str()
         << std::setw(16) << r.t_extrapolated.get_str() << std::setw(6)
         << (r.eps > 0 ? "+1" : "-1") << std::setw(16)
         << (r.oracle ? r.oracle->get_str() : "-") << "  " << pass_str(r.pass)
         << "\n";
    csv << r.n << "," << r.t_forward.get_str() << ","
        << r.t_extrapolated.get_str() << "," << r.eps << ","
        << (r.oracle ? r.oracle->get_str() : "") << ","
        << (r.pass ? "true" : "false") << "\n";
  }
  text << (rep.all_pass ? "all rows pass\n" : "SOME ROWS FAILED\n");
  Output out;
  out.envelope = envelope("verify",
                          {{"m", domino::dec(m)},
                           {"nmax", domino::dec(n_max)},
                           {"oracle", with_oracle}},
                          domino::reciprocity_json(rep), rep.all_pass);
  out.text = text.str();
  out.csv = csv.str();
  out.ok = rep.all_pass;
  return out;
}

Output run_count3d(int k, int m, long n, const domino::Limits& lim) {
  const domino::Int value = domino::count_3d(k, m, n, lim);
  Output out;
  out.envelope = envelope(
      "count3d",
      {{"k", domino::dec(k)}, {"m", domino::dec(m)}, {"n", domino::dec(n)}},
      {{"value", domino::dec(value)}}, true);
  out.text = "T(" + std::to_string(k) + "," + std::to_string(m) + "," +
             std::to_string(n) + ") = " + value.get_str() + "\n";
  out.csv = "k,m,n,value\n" + std::to_string(k) + "," + std::to_string(m) +
            "," + std::to_string(n) + "," + value.get_str() + "\n";
  return out;
}

Output run_verify3d(int k, int m, long n_max, const domino::Limits& lim) {
  const domino::Box3dReport rep = domino::verify_3d(k, m, n_max, lim);
  std::ostringstream text, csv;
  text << "3D reciprocity check for " << k << "x" << m
       << " cross-section, 0 <= n <= " << n_max << " (recurrence degree "
       << rep.recurrence.degree() << ")\n";
  text << std::setw(6) << "n" << std::setw(20) << "T(k,m,n)" << std::setw(20)
       << "T(k,m,-2-n)" << std::setw(6) << "sign" << "  result\n";
  csv << "n,T_forward,T_extrapolated,abs_pass,sign\n";
  for (const domino::Box3dRow& r : rep.rows) {
    text << std::setw(6) << r.n << std::setw(20) << r.t_forward.get_str()
         << std::setw(20) << r.t_extrapolated.get_str() << std::setw(6)
         << (r.sign == 0 ? "0" : (r.sign > 0 ? "+1" : "-1")) << "  "
         << pass_str(r.abs_pass) << "\n";
    csv << r.n << "," << r.t_forward.get_str() << ","
        << r.t_extrapolated.get_str() << "," << (r.abs_pass ? "true" : "false")
        << "," << r.sign << "\n";
  }
  text << (rep.all_pass ? "all rows pass on absolute values\n"
                        : "SOME ROWS FAILED\n");
  Output out;
  out.envelope = envelope(
      "verify3d",
      {{"k", domino::dec(k)}, {"m", domino::dec(m)}, {"nmax", domino::dec(n_max)}},
      domino::box3d_json(rep), rep.all_pass);
  out.text = text.str();
  out.csv = csv.str();
  out.ok = rep.all_pass;
  return out;
}

Output run_laurent(long down_to, bool print_terms, const domino::Limits& lim) {
  const auto table = domino::extrapolate_laurent(down_to, lim);
  const domino::TwoSidedTable counts =
      domino::two_sided_table(2, down_to, 3, lim);

  bool all_ok = true;
  json rows = json::array();
  std::ostringstream text, csv;
  csv << "n,term_count,all_pm1,value_at_ones\n";
  for (const auto& [n, p] : table) {
    const bool pm1 = domino::lp_coeffs_all_pm1(p);
    const domino::Int ones = domino::lp_eval_ones(p);
    const bool consistent = ones == counts.at(n);
    const bool row_ok = consistent && (n >= 1 || pm1);
    all_ok = all_ok && row_ok;
    rows.push_back({{"n", domino::dec(n)},
                    {"term_count", domino::dec(static_cast<long>(p.term_count()))},
                    {"all_pm1", pm1},
                    {"value_at_ones", domino::dec(ones)},
                    {"matches_table", consistent},
                    {"terms", domino::laurent_json(p)}});
    csv << n << "," << p.term_count() << "," << (pm1 ? "true" : "false") << ","
        << ones.get_str() << "\n";
  }
  // text in descending index order, like the recurrence runs
  for (auto it = table.rbegin(); it != table.rend(); ++it) {
    const auto& [n, p] = *it;
    text << "M(G(2," << n << ")): " << p.term_count()
         << " terms, coefficients all +-1: "
         << (domino::lp_coeffs_all_pm1(p) ? "yes" : "NO")
         << ", value at all-ones = " << domino::lp_eval_ones(p).get_str()
         << "\n";
    if (print_terms) text << "    " << domino::lp_to_string(p) << "\n";
  }
  text << (all_ok ? "all checks pass\n" : "SOME CHECKS FAILED\n");

  Output out;
  out.envelope = envelope("laurent", {{"down_to", domino::dec(down_to)}},
                          {{"rows", std::move(rows)}}, all_ok);
  out.text = text.str();
  out.csv = csv.str();
  out.ok = all_ok;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "domino - exact domino and dimer tiling counts, two-sided recurrence "
      "extrapolation, reciprocity and Laurent checks"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  app.fallthrough();  // global flags may follow the subcommand

  std::string format = "text";
  int threads = 1;
  std::string config_path;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--threads", threads, "Internal parallelism bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--config", config_path,
                 "JSON file overriding resource caps");

  int m = 2, k = 1;
  long n = 1, from = 0, to = 0, nmax = 0, down_to = 0;
  bool with_oracle = false, force = false, dump_graph = false,
       dump_matrix = false, print_terms = false;

  CLI::App* c_count = app.add_subcommand("count", "T(m,n) for one strip");
  c_count->add_option("m", m, "strip width")->required();
  c_count->add_option("n", n, "strip length (negative for extrapolated)")
      ->required();
  c_count->add_flag("--dump-matrix", dump_matrix,
                    "include the transfer matrix (row-major)");

  CLI::App* c_table = app.add_subcommand("table", "two-sided table of T(m,.)");
  c_table->add_option("m", m, "strip width")->required();
  c_table->add_option("--from", from, "lowest n")->required();
  c_table->add_option("--to", to, "highest n")->required();

  CLI::App* c_oracle =
      app.add_subcommand("oracle", "exhaustive signed matching count of G(m,n)");
  c_oracle->add_option("m", m, "strip width")->required();
  c_oracle->add_option("n", n, "strip parameter (any sign)")->required();
  c_oracle->add_flag("--force", force, "ignore the vertex guard");
  c_oracle->add_flag("--dump-graph", dump_graph,
                     "include the canonical graph serialization");

  CLI::App* c_rec =
      app.add_subcommand("recurrence", "minimal recurrence of T(m,.)");
  c_rec->add_option("m", m, "strip width")->required();

  CLI::App* c_gf =
      app.add_subcommand("genfun", "generating function P(x)/Q(x) of T(m,.)");
  c_gf->add_option("m", m, "strip width")->required();

  CLI::App* c_verify =
      app.add_subcommand("verify", "check T(m,-2-n) = epsilon*T(m,n)");
  c_verify->add_option("m", m, "strip width")->required();
  c_verify->add_option("--nmax", nmax, "check 0 <= n <= nmax")->required();
  c_verify->add_flag("--oracle", with_oracle,
                     "cross-check against exhaustive enumeration");

  CLI::App* c_count3d = app.add_subcommand("count3d", "T(k,m,n) for one box");
  c_count3d->add_option("k", k, "cross-section rows")->required();
  c_count3d->add_option("m", m, "cross-section columns")->required();
  c_count3d->add_option("n", n, "box length")->required();

  CLI::App* c_verify3d =
      app.add_subcommand("verify3d", "check |T(k,m,-2-n)| = |T(k,m,n)|");
  c_verify3d->add_option("k", k, "cross-section rows")->required();
  c_verify3d->add_option("m", m, "cross-section columns")->required();
  c_verify3d->add_option("--nmax", nmax, "check 0 <= n <= nmax")->required();

  CLI::App* c_laurent = app.add_subcommand(
      "laurent", "extrapolated weighted matching polynomials of G(2,.)");
  c_laurent->add_option("--down-to", down_to, "lowest index (<= 0)")
      ->required();
  c_laurent->add_flag("--print-terms", print_terms,
                      "render each polynomial in text output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints usage to stderr
    return 2;
  }

  try {
    domino::Limits lim;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::invalid_argument("cannot open config file: " + config_path);
      json cfg = json::parse(in);
      lim = domino::limits_from_json(cfg);
    }
    domino::set_max_threads(threads);

    Output out;
    if (c_count->parsed()) out = run_count(m, n, dump_matrix, lim);
    else if (c_table->parsed()) out = run_table(m, from, to, lim);
    else if (c_oracle->parsed()) out = run_oracle(m, n, force, dump_graph, lim);
    else if (c_rec->parsed()) out = run_recurrence(m, lim);
    else if (c_gf->parsed()) out = run_genfun(m, lim);
    else if (c_verify->parsed()) out = run_verify(m, nmax, with_oracle, lim);
    else if (c_count3d->parsed()) out = run_count3d(k, m, n, lim);
    else if (c_verify3d->parsed()) out = run_verify3d(k, m, nmax, lim);
    else if (c_laurent->parsed()) out = run_laurent(down_to, print_terms, lim);

    emit(out, format == "json" ? Format::json
                               : (format == "csv" ? Format::csv : Format::text));
    return out.ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

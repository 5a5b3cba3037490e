#ifndef LIERAM_REPORT_HPP
#define LIERAM_REPORT_HPP

// JSON and TSV rendering of engine results. Field elements render as
// polynomials in the generator `a` of the ambient field's defining modulus.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lieram/appendix.hpp"
#include "lieram/modular.hpp"
#include "lieram/quantum.hpp"
#include "lieram/selftest.hpp"

namespace lieram::report {

using Json = nlohmann::ordered_json;

inline Json weight(const ModWeight& w) {
  Json out = Json::array();
  for (const auto& x : w) out.push_back(x.str());
  return out;
}

inline Json torus(const TorusElement& t) {
  Json out = Json::array();
  for (const auto& x : t) out.push_back(x.str());
  return out;
}

inline Json field(const FieldPtr& f) {
  return Json{{"p", f->p}, {"degree", f->e}, {"size", f->size}, {"modulus", f->modulus}};
}

inline Json subsystem(const Subsystem& s) {
  return Json{{"type", s.type.str()}, {"rank", s.rank()}, {"order", s.order}};
}

inline Json pchar(const PChar& chi) {
  return Json{{"type", chi.rs->type().str()},
              {"p", chi.p},
              {"field", field(chi.field)},
              {"chi_s", weight(chi.c)},
              {"support", chi.support},
              {"centralizer", subsystem(chi.phi_prime)},
              {"nilpotent", chi.nilpotent()},
              {"regular", chi.regular()}};
}

inline Json qchar(const QChar& chi) {
  return Json{{"type", chi.rs->type().str()},
              {"ell", chi.ell},
              {"eps", chi.eps_num},
              {"chi_s", torus(chi.chi_s)},
              {"support", chi.support},
              {"centralizer", subsystem(chi.phi_prime)},
              {"regular", chi.regular()}};
}

inline Json verdict(const FiniteTypeVerdict& v) {
  Json out{{"verdict", v.verdict}, {"outer", v.outer.str()}, {"inner", v.inner.str()}};
  if (!v.differing_outer.empty()) out["differing"] = {v.differing_outer, v.differing_inner};
  return out;
}

inline Json mod_structure(const ModStructure& s) {
  Json out{{"regular", s.regular}, {"fully_azumaya", s.fully_azumaya}};
  out["matrix_size"] = s.matrix_size ? Json(*s.matrix_size) : Json(nullptr);
  out["local_dims"] = s.dims ? Json(*s.dims) : Json(nullptr);
  return out;
}

inline Json q_structure(const QCounts& c) {
  Json out{{"regular", c.regular}, {"fully_azumaya", c.fully_azumaya}};
  out["matrix_size"] = c.matrix_size ? Json(*c.matrix_size) : Json(nullptr);
  out["local_dims"] = c.dims ? Json(*c.dims) : Json(nullptr);
  return out;
}

inline Json mod_block(const ModBlock& b) {
  Json out{{"lambda", weight(b.lambda)},
           {"eta", weight(b.eta)},
           {"dim_c", b.dim_c},
           {"unramified", b.unramified},
           {"steinberg", b.steinberg},
           {"stabilizer", b.stabilizer.str()},
           {"lattice_stabilizer", b.lattice_stabilizer.str()}};
  out["poincare"] = b.poincare ? Json(*b.poincare) : Json(nullptr);
  out["finite_type"] = verdict(b.finite_type);
  Json members = Json::array();
  for (const auto& m : b.members) members.push_back(weight(m));
  out["members"] = members;
  return out;
}

inline Json q_block(const QChar& chi, const QBlock& b) {
  Json out{{"t", torus(b.t)},
           {"u", torus(b.u)},
           {"highest_weight", torus(hc_shift(*chi.rs, b.u, chi.ell, false, chi.eps_num))},
           {"dim_d", b.dim_d},
           {"unramified", b.unramified},
           {"steinberg", b.steinberg},
           {"exceptional", b.exceptional},
           {"stabilizer", b.stabilizer.str()},
           {"fiber_stabilizer", b.fiber_stabilizer.str()}};
  Json members = Json::array();
  for (const auto& m : b.members) members.push_back(torus(m));
  out["members"] = members;
  return out;
}

inline Json mod_blocks_report(const PChar& chi, const std::vector<ModBlock>& blocks) {
  Json list = Json::array();
  std::uint64_t sum = 0, unram = 0;
  for (const auto& b : blocks) {
    list.push_back(mod_block(b));
    sum += b.dim_c;
    unram += b.unramified ? 1 : 0;
  }
  return Json{{"command", "modular blocks"},
              {"character", pchar(chi)},
              {"summary", {{"blocks", blocks.size()}, {"sum_dim_c", sum}, {"unramified", unram}}},
              {"structure", mod_structure(regularity_and_structure(chi, blocks))},
              {"blocks", list}};
}

inline Json q_blocks_report(const QChar& chi, const std::vector<QBlock>& blocks) {
  Json list = Json::array();
  std::uint64_t sum = 0, unram = 0;
  for (const auto& b : blocks) {
    list.push_back(q_block(chi, b));
    sum += b.dim_d;
    unram += b.unramified ? 1 : 0;
  }
  return Json{{"command", "quantum blocks"},
              {"character", qchar(chi)},
              {"summary", {{"blocks", blocks.size()}, {"sum_dim_d", sum}, {"unramified", unram}}},
              {"structure", q_structure(q_regularity_and_counts(chi, blocks))},
              {"blocks", list}};
}

inline Json mod_unramified_report(const PChar& chi, const UnramifiedCount& u) {
  return Json{{"command", "modular unramified"},
              {"character", pchar(chi)},
              {"s", u.s},
              {"predicted", u.predicted},
              {"enumerated", u.enumerated},
              {"agree", u.agree()}};
}

inline Json q_unramified_report(const QChar& chi, const QCounts& c) {
  Json out{{"command", "quantum unramified"},
           {"character", qchar(chi)},
           {"s", c.s},
           {"index_of_connection", c.index_of_connection},
           {"coprime", c.coprimality_ok}};
  out["predicted"] = c.unramified_predicted ? Json(*c.unramified_predicted) : Json(nullptr);
  out["enumerated"] = c.unramified_enumerated;
  return out;
}

inline Json exceptional_report(const RootSystem& rs, const std::vector<ExceptionalElement>& elems) {
  Json list = Json::array();
  for (const auto& e : elems) {
    Json row{{"m", e.m}, {"a_m", e.a_m}, {"s", torus(e.s)}, {"centralizer", subsystem(e.centralizer)}};
    row["beta_m"] = e.beta_m ? Json(rs.root(*e.beta_m)) : Json(nullptr);
    row["generated_matches"] = e.generated_matches;
    row["values_match"] = e.values_match;
    list.push_back(row);
  }
  return Json{{"command", "quantum exceptional"}, {"type", rs.type().str()}, {"elements", list}};
}

inline Json appendix_report(const std::vector<AppendixCheck>& checks) {
  Json list = Json::array();
  std::size_t ok = 0;
  for (const auto& c : checks) {
    ok += c.ok() ? 1 : 0;
    list.push_back(Json{{"type", c.row.type},
                        {"m", c.row.m},
                        {"word", c.row.word},
                        {"alpha", c.row.alpha},
                        {"alpha_used", c.alpha_used},
                        {"convention", c.convention},
                        {"reduced", c.reduced},
                        {"maps_to_beta", c.maps_to_beta},
                        {"coefficients_positive", c.coefficients_positive},
                        {"below_beta", c.below_beta},
                        {"ok", c.ok()},
                        {"details", c.details}});
  }
  return Json{{"command", "verify appendix"}, {"rows", checks.size()}, {"ok", ok}, {"results", list}};
}

/// Timing is left out of JSON so reports stay byte-identical across runs.
inline Json selftest_report(const std::vector<SuiteResult>& results) {
  Json list = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed();
    list.push_back(Json{{"suite", r.name},
                        {"passed", r.passed()},
                        {"checks", r.checks},
                        {"failures", r.failures},
                        {"notes", r.notes}});
  }
  return Json{{"command", "selftest"}, {"passed", all}, {"suites", list}};
}

// ---------------------------------------------------------------------------
// TSV: a header row and one row per record; nested values joined with ';'.

inline std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + cell(v[i]);
    return s;
  }
  if (v.is_object()) {
    std::string s;
    bool first = true;
    for (const auto& [k, x] : v.items()) {
      s += (first ? "" : ";") + k + "=" + cell(x);
      first = false;
    }
    return s;
  }
  return v.dump();
}

inline std::string tsv_rows(const Json& rows, const std::vector<std::string>& skip = {}) {
  std::ostringstream out;
  if (rows.empty()) return "";
  std::vector<std::string> keys;
  for (const auto& [k, v] : rows[0].items())
    if (std::find(skip.begin(), skip.end(), k) == skip.end()) keys.push_back(k);
  for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "\t" : "") << keys[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "\t" : "") << cell(row[keys[i]]);
    out << '\n';
  }
  return out.str();
}

/// Flat projection of a report: its record list if it has one, else the
/// top-level scalars as a single row.
inline std::string to_tsv(const Json& report) {
  for (const char* key : {"blocks", "elements", "results", "suites"})
    if (report.contains(key)) return tsv_rows(report[key], {"members"});
  Json row = Json::object();
  for (const auto& [k, v] : report.items()) row[k] = v;
  return tsv_rows(Json::array({row}));
}

}  // namespace lieram::report

#endif  // LIERAM_REPORT_HPP

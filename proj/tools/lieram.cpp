#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "lieram/appendix.hpp"
#include "lieram/config.hpp"
#include "lieram/error.hpp"
#include "lieram/modular.hpp"
#include "lieram/quantum.hpp"
#include "lieram/report.hpp"
#include "lieram/selftest.hpp"

namespace {

using lieram::report::Json;

struct Options {
  std::string type;
  std::uint64_t p = 0;
  std::int64_t ell = 0;
  std::int64_t eps = 1;
  std::uint32_t ext = 1;
  std::string chi_s;
  std::string support;
  std::string weight;
  std::string torus;
  std::string format = "json";
  std::optional<std::uint64_t> bound;
  bool assert_unique = false;
  std::vector<std::string> suites;
  bool inject_fault = false;
};

// Literal syntax errors are usage errors (exit 2); everything the engine
// rejects afterwards is a domain error (exit 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto parse_arg(const std::string& flag, const std::string& text, F f) {
  try {
    return f(text);
  } catch (const lieram::Error& e) {
    if (e.kind() != lieram::ErrorKind::InvalidInput) throw;
    throw UsageError(flag + " '" + text + "': " + e.what());
  }
}

void require(bool present, const std::string& flag, const std::string& command) {
  if (!present) throw UsageError(command + " requires " + flag);
}

std::string default_zero(const Options& o, int rank) {
  if (!o.chi_s.empty()) return o.chi_s;
  std::string s = "0";
  for (int i = 1; i < rank; ++i) s += ",0";
  return s;
}

lieram::PChar read_pchar(const Options& o, const std::shared_ptr<const lieram::RootSystem>& rs) {
  const auto c = parse_arg("--chi-s", default_zero(o, rs->rank()),
                           [&](const std::string& t) { return lieram::parse_field_vector(t, o.p, o.ext); });
  const auto s = parse_arg("--support", o.support, [](const std::string& t) { return lieram::parse_index_list(t); });
  return lieram::make_pchar(rs, o.p, c, s);
}

lieram::QChar read_qchar(const Options& o, const std::shared_ptr<const lieram::RootSystem>& rs) {
  const auto c = parse_arg("--chi-s", default_zero(o, rs->rank()), [](const std::string& t) { return lieram::parse_torus(t); });
  const auto s = parse_arg("--support", o.support, [](const std::string& t) { return lieram::parse_index_list(t); });
  return lieram::make_qchar(rs, o.ell, c, s, o.eps);
}

std::shared_ptr<const lieram::RootSystem> read_type(const Options& o, const std::string& command) {
  require(!o.type.empty(), "--type", command);
  return parse_arg("--type", o.type, [](const std::string& t) {
    try {
      return lieram::make_root_system(t);
    } catch (const lieram::Error& e) {
      if (e.kind() == lieram::ErrorKind::InvalidType) throw lieram::Error(lieram::ErrorKind::InvalidInput, e.what());
      throw;
    }
  });
}

Json run_modular(const std::string& sub, const Options& o) {
  const std::string command = "modular " + sub;
  const auto rs = read_type(o, command);
  require(o.p != 0, "--p", command);
  if (sub == "poincare" || sub == "finite-type") {
    require(!o.weight.empty(), "--weight", command);
    const auto lambda = parse_arg("--weight", o.weight,
                                  [&](const std::string& t) { return lieram::parse_field_vector(t, o.p, o.ext); });
    if (static_cast<int>(lambda.size()) != rs->rank())
      throw lieram::Error(lieram::ErrorKind::InvalidCharacter, "--weight needs " + std::to_string(rs->rank()) + " values");
    const auto eta = lieram::rho_shift(lambda);
    Json out{{"command", command}, {"type", rs->type().str()}, {"p", o.p},
             {"lambda", lieram::report::weight(lambda)}, {"eta", lieram::report::weight(eta)}};
    if (sub == "poincare") {
      const auto coeffs = lieram::poincare_series(*rs, eta);
      std::uint64_t total = 0;
      for (auto c : coeffs) total += c;
      out["coefficients"] = coeffs;
      out["value_at_1"] = total;
    } else {
      out["finite_type"] = lieram::report::verdict(lieram::finite_type_verdict(*rs, eta, o.assert_unique));
    }
    return out;
  }
  const auto chi = read_pchar(o, rs);
  if (sub == "blocks") return lieram::report::mod_blocks_report(chi, lieram::mod_blocks(chi, o.assert_unique));
  if (sub == "unramified") return lieram::report::mod_unramified_report(chi, lieram::unramified_count(chi));
  return Json{{"command", command},
              {"character", lieram::report::pchar(chi)},
              {"structure", lieram::report::mod_structure(lieram::regularity_and_structure(chi))}};
}

Json run_quantum(const std::string& sub, const Options& o) {
  const std::string command = "quantum " + sub;
  const auto rs = read_type(o, command);
  if (sub == "exceptional") return lieram::report::exceptional_report(*rs, lieram::exceptional_elements(*rs));
  require(o.ell != 0, "--ell", command);
  const auto chi = read_qchar(o, rs);
  if (sub == "blocks") return lieram::report::q_blocks_report(chi, lieram::q_blocks(chi));
  const auto counts = lieram::q_regularity_and_counts(chi, lieram::q_blocks(chi));
  if (sub == "unramified") return lieram::report::q_unramified_report(chi, counts);
  if (sub == "simplicity") {
    require(!o.torus.empty(), "--torus", command);
    const auto t = parse_arg("--torus", o.torus, [](const std::string& x) { return lieram::parse_torus(x); });
    if (static_cast<int>(t.size()) != rs->rank())
      throw lieram::Error(lieram::ErrorKind::InvalidCharacter, "--torus needs " + std::to_string(rs->rank()) + " exponents");
    const auto res = lieram::simplicity_necessary(chi, t);
    Json out{{"command", command}, {"character", lieram::report::qchar(chi)}, {"torus", lieram::report::torus(t)},
             {"holds", res.holds}};
    out["failing_component"] = res.failing_component ? Json(*res.failing_component) : Json(nullptr);
    return out;
  }
  return Json{{"command", command},
              {"character", lieram::report::qchar(chi)},
              {"structure", lieram::report::q_structure(counts)}};
}

Json run_appendix(const Options& o) {
  std::vector<std::string> types;
  if (o.type.empty()) {
    types = lieram::appendix_types();
  } else {
    types.push_back(read_type(o, "verify appendix")->type().str());
  }
  std::vector<lieram::AppendixCheck> checks;
  for (const auto& t : types)
    for (const auto& row : lieram::appendix_rows(t)) checks.push_back(lieram::verify_appendix_row(t, row.m));
  return lieram::report::appendix_report(checks);
}

int run_selftest(const Options& o) {
  const auto& all = lieram::all_suites();
  for (const auto& name : o.suites)
    if (std::none_of(all.begin(), all.end(), [&](const auto& e) { return e.name == name; }))
      throw UsageError("--suite '" + name + "': unknown suite");
  std::vector<lieram::SuiteResult> results;
  for (const auto& entry : all) {
    if (!o.suites.empty() && std::find(o.suites.begin(), o.suites.end(), entry.name) == o.suites.end()) continue;
    results.push_back(entry.run());
  }
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed();
  if (o.format == "json") {
    std::cout << lieram::report::selftest_report(results).dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      std::cout << (r.passed() ? "PASS" : "FAIL") << '\t' << r.name << '\t' << r.checks << " checks\t" << std::fixed
                << std::setprecision(3) << r.seconds << " s\n";
      for (const auto& f : r.failures) std::cout << "  failure: " << f << '\n';
      for (const auto& n : r.notes) std::cout << "  note: " << n << '\n';
    }
    std::cout << (ok ? "all suites passed" : "some suites failed") << '\n';
  }
  return ok ? 0 : 1;
}

void emit(const Json& report, const std::string& format) {
  if (format == "tsv")
    std::cout << lieram::report::to_tsv(report);
  else
    std::cout << report.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact block and center combinatorics for modular and quantum Lie algebras"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--type", o.type, "Cartan type, e.g. A2, G2, A1xB2");
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
    cmd->add_option("--bound", o.bound, "largest Weyl group or orbit to enumerate")->envname("LIERAM_BOUND");
  };
  auto add_modular = [&](CLI::App* cmd) {
    add_common(cmd);
    cmd->add_option("--p", o.p, "characteristic");
    cmd->add_option("--chi-s", o.chi_s, "semisimple part: literals 0, 1, g^k, AS(c)");
    cmd->add_option("--support", o.support, "nilpotent support: simple roots of the centralizer");
    cmd->add_option("--ext", o.ext, "degree of the field g^k refers to")->check(CLI::Range(1, 64));
  };
  auto add_quantum = [&](CLI::App* cmd) {
    add_common(cmd);
    cmd->add_option("--ell", o.ell, "order of the root of unity");
    cmd->add_option("--chi-s", o.chi_s, "semisimple part: rational exponents on fundamental weights");
    cmd->add_option("--support", o.support, "unipotent support: simple roots of the centralizer");
    cmd->add_option("--eps", o.eps, "eps = exp(2 pi i k / ell); this is k");
  };

  auto* modular = app.add_subcommand("modular", "reduced enveloping algebras in characteristic p");
  modular->require_subcommand(1);
  std::string mod_sub;
  const std::pair<const char*, const char*> mod_cmds[] = {
      {"blocks", "dot-orbit blocks of U_chi with component dimensions"},
      {"unramified", "enumerated unramified blocks against p^s"},
      {"poincare", "Poincare series of W over the stabilizer of lambda + rho"},
      {"finite-type", "representation type of the block of lambda"},
      {"structure", "regularity and the Azumaya structure descriptor"},
  };
  for (const auto& [name, help] : mod_cmds) {
    auto* cmd = modular->add_subcommand(name, help);
    add_modular(cmd);
    if (std::string(name) == "poincare" || std::string(name) == "finite-type")
      cmd->add_option("--weight", o.weight, "highest weight lambda as field literals");
    if (std::string(name) == "blocks" || std::string(name) == "finite-type")
      cmd->add_flag("--assert-unique", o.assert_unique, "report boundary cases as finite");
    cmd->callback([&mod_sub, name] { mod_sub = name; });
  }

  auto* quantum = app.add_subcommand("quantum", "quantum groups at a root of unity");
  quantum->require_subcommand(1);
  std::string q_sub;
  const std::pair<const char*, const char*> q_cmds[] = {
      {"blocks", "W-orbits on the ell-fiber with component dimensions"},
      {"unramified", "enumerated unramified blocks against ell^s"},
      {"exceptional", "exceptional elements s_m and their centralizers"},
      {"simplicity", "necessary condition for a simple baby Verma module"},
      {"structure", "regularity and the Azumaya structure descriptor"},
  };
  for (const auto& [name, help] : q_cmds) {
    auto* cmd = quantum->add_subcommand(name, help);
    add_quantum(cmd);
    if (std::string(name) == "simplicity") cmd->add_option("--torus", o.torus, "highest weight as rational exponents");
    cmd->callback([&q_sub, name] { q_sub = name; });
  }

  auto* verify = app.add_subcommand("verify", "table verification");
  verify->require_subcommand(1);
  auto* appendix = verify->add_subcommand("appendix", "check every Weyl-word row");
  add_common(appendix);

  auto* selftest = app.add_subcommand("selftest", "run the invariant suites over the test matrix");
  o.format = "text";
  selftest->add_option("--suite", o.suites, "run only the named suites");
  selftest->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  selftest->add_flag("--inject-fault", o.inject_fault, "flip the rho-shift sign in the dot action");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (!selftest->parsed() && o.format == "text") o.format = "json";

  try {
    if (o.bound) lieram::config().group_bound = *o.bound;
    if (selftest->parsed()) {
      lieram::config().inject_dot_sign_fault = o.inject_fault;
      return run_selftest(o);
    }
    Json report;
    if (modular->parsed())
      report = run_modular(mod_sub, o);
    else if (quantum->parsed())
      report = run_quantum(q_sub, o);
    else
      report = run_appendix(o);
    emit(report, o.format);
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const lieram::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "rfg/arith.hpp"
#include "rfg/grig.hpp"
#include "rfg/harness.hpp"
#include "rfg/quotsearch.hpp"
#include "rfg/slk.hpp"

namespace {

int run_kval(const std::string& group, const std::string& element, const std::string& variant,
             int qmax) {
  auto r = rfg::compute_kval(group, element, variant, qmax);
  if (!r.found) {
    std::cout << "k(" << element << ") undetected below bound";
    if (!r.note.empty()) std::cout << ": " << r.note;
    std::cout << "\n";
    return 2;
  }
  std::cout << "k(" << element << ") = " << r.k.to_string() << "\n";
  std::cout << "witness: " << r.witness.describe() << "\n";
  if (!r.note.empty()) std::cout << "note: " << r.note << "\n";
  return 0;
}

int run_growth(const std::string& group, int radius, const std::string& method,
               const std::string& out_path, bool no_cache) {
  rfg::GrowthOptions opts;
  opts.use_cache = !no_cache;
  rfg::GrowthTable table = rfg::compute_growth(group, radius, method, opts);
  std::string payload;
  if (out_path.size() >= 5 && out_path.substr(out_path.size() - 5) == ".json") {
    payload = "{\n  \"group\": \"" + table.group_id + "\",\n  \"rows\": [\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      const auto& row = table.rows[i];
      payload += "    {\"n\": " + std::to_string(row.n) + ", \"F\": \"" + row.f_value.to_string() +
                 "\", \"argmax\": \"" + row.argmax + "\", \"word_length\": " +
                 std::to_string(row.word_length) + ", \"witness_kind\": \"" +
                 rfg::witness_kind_name(row.witness.kind) + "\", \"witness_order\": \"" +
                 row.witness.order.to_string() + "\", \"method\": \"" + row.method + "\"}";
      payload += i + 1 < table.rows.size() ? ",\n" : "\n";
    }
    payload += "  ]\n}\n";
  } else {
    payload = rfg::growth_csv(table);
  }
  if (out_path.empty() || out_path == "-") {
    std::cout << payload;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open " << out_path << "\n";
      return 1;
    }
    out << payload;
    std::cout << "wrote " << table.rows.size() << " rows to " << out_path << "\n";
  }
  return 0;
}

int run_verify(const std::string& suite, const std::string& out_path) {
  rfg::SuiteReport rep = rfg::verify_suite(suite);
  std::string json = rep.to_json();
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    out << json << "\n";
  }
  for (const auto& c : rep.checks)
    std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name << "  " << c.detail << "\n";
  std::cout << (rep.all_pass() ? "suite ok" : "suite FAILED") << " (" << rep.checks.size()
            << " checks)\n";
  if (out_path.empty()) std::cout << json << "\n";
  return rep.all_pass() ? 0 : 1;
}

int run_witness(const std::string& kind, unsigned n) {
  if (kind == "lcm") {
    rfg::BigInt v = rfg::psi(n);
    auto k = rfg::k_int(v);
    std::cout << "psi(" << n << ") = " << v.to_string() << "\n";
    std::cout << "k_Z(psi(" << n << ")) = " << k.q << " (witness " << k.witness.describe() << ")\n";
    std::cout << "bracket: " << n + 1 << " <= k <= " << 2 * n << "\n";
    return 0;
  }
  if (kind == "elementary") {
    rfg::IntMat m = rfg::witness_elementary(3, n);
    std::cout << "E_12(psi(" << n << ")) in SL_3, psi(" << n << ") = " << m.at(0, 1).to_string()
              << "\n";
    auto k = rfg::k_congruence_sl(m);
    if (k.found) {
      std::cout << "least prime power detecting it: " << k.q << " -> |SL_3(Z/" << k.q
                << ")| = " << k.size.to_string() << "\n";
    }
    return 0;
  }
  if (kind == "grig-deep") {
    std::string w = rfg::grig_witness_deep(static_cast<int>(n));
    std::cout << "word (length " << w.size() << "): " << w << "\n";
    std::cout << "sections verified to level " << n << ": "
              << (rfg::verify_deep_witness(w, static_cast<int>(n)) ? "yes" : "NO") << "\n";
    std::cout << "depth: " << rfg::grig_depth(w) << "\n";
    auto k = rfg::k_congruence_grig(w);
    std::cout << "k bracket: [" << k.lower.to_string() << ", " << k.upper.to_string() << "]\n";
    return 0;
  }
  std::cerr << "unknown witness kind: " << kind << " (expected lcm|elementary|grig-deep)\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rfg: exact residual-finiteness-growth laboratory"};
  app.require_subcommand(1);

  auto* kval = app.add_subcommand("kval", "minimal detecting quotient of one element");
  std::string group, element, variant = "any", method = "exact", out_path, suite = "all", wkind;
  int radius = 4, qmax = 8;
  unsigned wn = 1;
  bool no_cache = false;
  kval->add_option("--group", group, "group id (z, zd(d), quad(D), free(2), heis, unitri(d), sl(2), sl(3), grig)")->required();
  kval->add_option("--element", element, "element in the group's canonical encoding")->required();
  kval->add_option("--variant", variant, "any|nilpotent|congruence");
  kval->add_option("--qmax", qmax, "symmetric-group degree cap for the exact engine");

  auto* growth = app.add_subcommand("growth", "growth table F(n) over a ball");
  growth->add_option("--group", group, "group id")->required();
  growth->add_option("--radius", radius, "ball radius")->required();
  growth->add_option("--method", method, "exact|lcm|nilpotent|congruence (group dependent)");
  growth->add_option("--out", out_path, "output path (.csv or .json), default stdout");
  growth->add_flag("--no-cache", no_cache, "bypass the result cache");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "arith|products|monotonicity|nilpotent|sl|grig|nilquot|all");
  verify->add_option("--out", out_path, "write the JSON report here");

  auto* witness = app.add_subcommand("witness", "construct a named witness element");
  witness->add_option("--kind", wkind, "lcm|elementary|grig-deep")->required();
  witness->add_option("--n", wn, "index / level")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (kval->parsed()) return run_kval(group, element, variant, qmax);
    if (growth->parsed()) return run_growth(group, radius, method, out_path, no_cache);
    if (verify->parsed()) return run_verify(suite, out_path);
    if (witness->parsed()) return run_witness(wkind, wn);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

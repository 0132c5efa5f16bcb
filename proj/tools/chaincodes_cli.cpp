/* Copyright (C) 2026 The chaincodes Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

// chaincodes: command-line front end.
//
//   chaincodes analyze --code c.json [--json]
//   chaincodes check-reversible --ring Z/9 --n 9 --gen "(z-1)^7+3*(z-1)" --method all
//   chaincodes paper-examples
//
// Exit codes: 0 success (or reversible), 1 negative verdict or golden
// mismatch, 2 parse/config error or undecided.

#include <chaincodes/enumerate.hpp>
#include <chaincodes/error.hpp>
#include <chaincodes/golden.hpp>
#include <chaincodes/metrics.hpp>
#include <chaincodes/parse.hpp>
#include <chaincodes/report.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

using namespace chaincodes;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

struct CodeArgs
{
  std::string file;
  std::string ring;
  std::string field_poly;
  std::size_t n = 0;
  std::vector<std::string> gens;
};

struct Common
{
  bool json = false;
  std::uint64_t cap = 1u << 20;
};

void add_code_options(CLI::App* app, CodeArgs& a)
{
  app->add_option("--code", a.file, "Code specification file (JSON)");
  app->add_option("--ring", a.ring, "Ring spec, e.g. Z/9 or F4[u]/u^2");
  app->add_option("--field-poly", a.field_poly, "Residue field modulus c0,c1,...,1");
  app->add_option("--n", a.n, "Code length");
  app->add_option("--gen", a.gens, "Generator expression (repeatable)");
}

void add_common(CLI::App* app, Common& c)
{
  app->add_flag("--json", c.json, "Machine-readable output");
  app->add_option("--cap", c.cap, "Codeword cap of the brute-force oracles");
}

RingPtr ring_from(const std::string& spec, const std::string& field_poly)
{
  if (spec.empty())
    throw DomainError("--ring is required");
  std::vector<unsigned> fp;
  if (!field_poly.empty())
    fp = parse_field_poly(field_poly);
  return ChainRing::make(parse_ring_spec(spec, fp));
}

CyclicCode code_from(const CodeArgs& a)
{
  if (!a.file.empty()) {
    if (!a.ring.empty() || !a.gens.empty())
      throw DomainError("give either --code or --ring/--n/--gen, not both");
    return load_code_file(a.file);
  }
  if (a.ring.empty() || a.n == 0)
    throw DomainError("give --code <file>, or --ring, --n and --gen");
  RingPtr R = ring_from(a.ring, a.field_poly);
  std::vector<Poly> gens;
  for (const auto& g : a.gens)
    gens.push_back(parse_poly(g, R));
  return CyclicCode(R, a.n, std::move(gens));
}

AnalysisOptions options_from(const Common& c)
{
  AnalysisOptions o;
  o.cap = c.cap;
  return o;
}

std::string opt_bool(const json& j)
{
  if (j.is_null())
    return "undecided";
  return j.get<bool>() ? "yes" : "no";
}

std::string card_text(const Cardinality& c)
{
  return std::to_string(c.p) + "^" + std::to_string(c.exponent);
}

std::string word_text(const Word& w, const ChainRing& R)
{
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i)
    s += (i ? "," : "") + R.format(w[i]);
  return s + ")";
}

int verdict_exit(Verdict v)
{
  switch (v) {
  case Verdict::Reversible:
    return kExitOk;
  case Verdict::NotReversible:
    return kExitNegative;
  default:
    return kExitError;
  }
}

// ---------------------------------------------------------------------------

int cmd_analyze(const CodeArgs& a, const Common& c)
{
  const CyclicCode code = code_from(a);
  const json rep = analysis_report(code, options_from(c));
  if (c.json) {
    std::cout << rep.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "ring        " << rep["ring"].get<std::string>() << "\n"
            << "length      " << code.n() << "\n";
  std::cout << "standard generators\n";
  if (rep["standard_generators"].empty())
    std::cout << "  (none: zero code)\n";
  for (const auto& g : rep["standard_generators"])
    std::cout << "  i=" << g["i"] << " t=" << g["t"] << "  " << g["text"].get<std::string>()
              << "\n";
  std::cout << "torsion codes\n";
  for (const auto& t : rep["torsion"])
    std::cout << "  Tor_" << t["level"] << " = <" << t["text"].get<std::string>() << ">  T="
              << t["T"] << (t["reversible"].get<bool>() ? "  reversible" : "  not reversible")
              << "\n";
  std::cout << "|C|         " << card_text(code.cardinality()) << "\n";
  const auto& d = rep["distance"];
  std::cout << "d_H         " << (d["d"].is_null() ? std::string("unknown") : d["d"].dump())
            << " (" << d["method"].get<std::string>() << ")\n";
  std::cout << "MDS         " << opt_bool(rep["mds"]) << "\n";
  std::cout << "reversible  " << opt_bool(rep["reversible"]) << "\n";
  for (const auto& m : reversibility_methods())
    std::cout << "  " << std::left << std::setw(8) << m << opt_bool(rep["diagnostics"][m]["verdict"])
              << "\n";
  return kExitOk;
}

int cmd_check(const CodeArgs& a, const Common& c, const std::string& method)
{
  const CyclicCode code = code_from(a);
  const AnalysisOptions opts = options_from(c);
  std::vector<MethodVerdict> v;
  if (method == "all") {
    for (const auto& m : reversibility_methods())
      v.push_back(run_reversibility_method(code, m, opts));
  } else {
    v.push_back(run_reversibility_method(code, method, opts));
  }
  bool agree = true;
  const Verdict overall = combine_verdicts(v, &agree);
  json out;
  out["ring"] = code.ring()->name();
  out["n"] = code.n();
  out["reversible"] = verdict_to_json(overall);
  out["methods_agree"] = agree;
  for (const auto& m : v)
    out["methods"][m.method] = m.detail;
  std::cout << out.dump(2) << "\n";
  return verdict_exit(overall);
}

int cmd_distance(const CodeArgs& a, const Common& c, bool brute)
{
  const CyclicCode code = code_from(a);
  const ChainRing& R = *code.ring();
  const DistanceResult d = hamming_distance(code);
  json out;
  out["ring"] = R.name();
  out["n"] = code.n();
  out["distance"] = distance_to_json(d, R);
  std::optional<DistanceResult> full;
  if (brute) {
    full = full_distance_bruteforce(code, c.cap);
    out["full_brute"] = distance_to_json(*full, R);
  }
  if (c.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "d_H = " << (d.d ? std::to_string(*d.d) : std::string("unknown")) << " ("
              << d.method << ")\n";
    if (d.d)
      std::cout << "witness " << word_text(d.witness, R) << "\n";
    if (full)
      std::cout << "full brute force: " << full->d.value_or(0) << "\n";
  }
  return d.d || code.is_zero() ? kExitOk : kExitError;
}

int cmd_mds(const CodeArgs& a, const Common& c)
{
  const CyclicCode code = code_from(a);
  const ChainRing& R = *code.ring();
  const MdsResult m = is_mds(code);
  json out;
  out["ring"] = R.name();
  out["n"] = code.n();
  out["mds"] = m.mds ? json(*m.mds) : json(nullptr);
  out["distance"] = distance_to_json(m.distance, R);
  out["cardinality"] = cardinality_to_json(m.cardinality);
  if (c.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "|C| = " << card_text(m.cardinality) << ", d_H = "
              << (m.distance.d ? std::to_string(*m.distance.d) : std::string("unknown"))
              << ", MDS: " << opt_bool(out["mds"]) << "\n";
    if (m.distance.d)
      std::cout << "witness " << word_text(m.distance.witness, R) << "\n";
  }
  if (!m.mds)
    return kExitError;
  return *m.mds ? kExitOk : kExitNegative;
}

std::string params_gens(const PsNu2Params& prm, const RingPtr& R, std::size_t n)
{
  const CyclicCode code = make_ps_nu2_code(prm, R, n);
  std::string s;
  for (const auto& g : code.generators())
    s += (s.empty() ? "" : ", ") + to_string(g);
  return "<" + s + ">";
}

std::size_t power(unsigned p, unsigned s)
{
  std::size_t n = 1;
  for (unsigned i = 0; i < s; ++i)
    n *= p;
  return n;
}

int cmd_classify(const std::string& ring, const std::string& fp, unsigned s, const Common& c)
{
  const RingPtr R = ring_from(ring, fp);
  const std::size_t n = power(R->p(), s);
  const auto list = mds_classification_ps_nu2(R, s);
  json out = json::array();
  for (const auto& cc : list) {
    const CyclicCode code = make_ps_nu2_code(cc.params, R, n);
    const MdsResult m = is_mds(code);
    json row;
    row["family"] = cc.family;
    row["params"] = cc.params.to_string();
    row["generator"] = to_string(code.generators().front());
    row["distance"] = distance_to_json(m.distance, *R);
    row["mds"] = m.mds ? json(*m.mds) : json(nullptr);
    row["reversible"] = is_reversible(code).reversible();
    out.push_back(row);
  }
  if (c.json) {
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << list.size() << " MDS codes of length " << n << " over " << R->name() << "\n";
  for (const auto& row : out)
    std::cout << "  " << std::left << std::setw(8) << row["family"].get<std::string>()
              << std::setw(34) << row["params"].get<std::string>() << " d="
              << row["distance"]["d"] << (row["reversible"].get<bool>() ? " reversible" : "")
              << "  " << row["generator"].get<std::string>() << "\n";
  return kExitOk;
}

int cmd_enumerate(const std::string& ring,
                  const std::string& fp,
                  unsigned s,
                  bool classify,
                  bool range_only,
                  const Common& c)
{
  const RingPtr R = ring_from(ring, fp);
  const std::size_t n = power(R->p(), s);
  const auto codes = enumerate_codes_ps_nu2(R, s, range_only);
  json out = json::array();
  for (const auto& fc : codes) {
    json row;
    row["params"] = fc.params.to_string();
    row["admissible"] = fc.admissible;
    row["generators"] = params_gens(fc.params, R, n);
    const auto prof = fc.code.torsion_profile();
    row["T"] = prof.degrees;
    row["cardinality"] = cardinality_to_json(fc.code.cardinality());
    row["reversible"] = is_reversible(fc.code).reversible();
    if (classify) {
      const MdsResult m = is_mds(fc.code);
      row["distance"] = m.distance.d ? json(*m.distance.d) : json(nullptr);
      row["mds"] = m.mds ? json(*m.mds) : json(nullptr);
    }
    out.push_back(row);
  }
  if (c.json) {
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << codes.size() << " codes of length " << n << " over " << R->name() << "\n";
  for (const auto& row : out) {
    std::cout << "  " << std::left << std::setw(34) << row["params"].get<std::string>()
              << " T=(" << row["T"][0] << "," << row["T"][1] << ") |C|="
              << row["cardinality"]["p"] << "^" << row["cardinality"]["exponent"]
              << (row["reversible"].get<bool>() ? " rev" : "    ");
    if (classify)
      std::cout << " d=" << row["distance"] << (row["mds"] == true ? " MDS" : "");
    if (!row["admissible"].get<bool>())
      std::cout << " (range only)";
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_ideals(const std::string& ring, const std::string& fp, std::size_t n, const Common& c)
{
  const RingPtr R = ring_from(ring, fp);
  const auto ideals = enumerate_all_ideals_bruteforce(R, n, std::max<std::uint64_t>(c.cap, 1u << 16));
  json list = json::array();
  std::size_t nonzero = 0, proper = 0, rev = 0, tor_rev = 0;
  for (const auto& code : ideals) {
    json row;
    json gens = json::array();
    for (const auto& e : code.standard_generators().entries)
      gens.push_back(to_string(e.f));
    row["standard_generators"] = gens;
    row["cardinality"] = cardinality_to_json(code.cardinality());
    const bool r = is_reversible(code).reversible();
    const auto t = torsion_reversibility(code);
    const bool tr = std::all_of(t.begin(), t.end(), [](bool b) { return b; });
    row["reversible"] = r;
    row["torsion_reversible"] = tr;
    list.push_back(row);
    if (!code.is_zero()) {
      ++nonzero;
      proper += !code.is_whole();
      rev += r;
      tor_rev += tr;
    }
  }
  json out;
  out["ring"] = R->name();
  out["n"] = n;
  out["ideals"] = list;
  out["counts"] = {{"total", ideals.size()},
                   {"nonzero", nonzero},
                   {"excluding_zero_and_whole", proper},
                   {"nonzero_reversible", rev},
                   {"nonzero_torsion_reversible", tor_rev}};
  if (c.json) {
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& row : list) {
    std::string g;
    for (const auto& s : row["standard_generators"])
      g += (g.empty() ? "" : ", ") + s.get<std::string>();
    std::cout << "  <" << (g.empty() ? "0" : g) << ">  |C|=" << row["cardinality"]["p"] << "^"
              << row["cardinality"]["exponent"]
              << (row["reversible"].get<bool>() ? "  reversible" : "  not reversible") << "\n";
  }
  std::cout << ideals.size() << " ideals; " << nonzero << " nonzero; " << proper
            << " excluding <0> and <1>; " << rev << " nonzero reversible\n";
  return kExitOk;
}

int cmd_paper_examples(const Common& c)
{
  const auto rows = run_golden_suite();
  bool ok = true;
  json out = json::array();
  for (const auto& r : rows) {
    ok = ok && r.pass();
    json checks = json::array();
    for (const auto& ck : r.checks)
      checks.push_back({{"quantity", ck.quantity},
                        {"expected", ck.expected},
                        {"computed", ck.computed},
                        {"pass", ck.pass()}});
    out.push_back(
        {{"example", r.id}, {"code", r.code}, {"checks", checks}, {"pass", r.pass()}, {"note", r.note}});
  }
  if (c.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : rows) {
      std::string exp, got;
      for (const auto& ck : r.checks) {
        exp += (exp.empty() ? "" : "; ") + ck.quantity + "=" + ck.expected;
        got += (got.empty() ? "" : "; ") + ck.quantity + "=" + ck.computed;
      }
      std::cout << "Example " << r.id << "  " << (r.pass() ? "PASS" : "FAIL") << "  " << r.code
                << "\n    expected: " << exp << "\n    computed: " << got << "\n";
      if (!r.note.empty())
        std::cout << "    note: " << r.note << "\n";
    }
    std::cout << rows.size() << " examples, " << (ok ? "all PASS" : "some FAIL") << "\n";
  }
  return ok ? kExitOk : kExitNegative;
}

int cmd_oracle(const CodeArgs& a, const Common& c)
{
  const CyclicCode code = code_from(a);
  const AnalysisOptions opts = options_from(c);
  std::vector<MethodVerdict> v;
  for (const auto& m : reversibility_methods())
    v.push_back(run_reversibility_method(code, m, opts));
  bool agree = true;
  const Verdict overall = combine_verdicts(v, &agree);

  json out;
  out["ring"] = code.ring()->name();
  out["n"] = code.n();
  for (const auto& m : v)
    out["reversibility"][m.method] = verdict_to_json(m.verdict);
  out["reversibility_agree"] = agree;

  const Cardinality closed = code.cardinality();
  const Cardinality tor = code.cardinality_from_torsion();
  out["cardinality"]["closed_form"] = cardinality_to_json(closed);
  out["cardinality"]["torsion_product"] = cardinality_to_json(tor);
  bool card_ok = closed == tor;
  const DistanceResult d = hamming_distance(code);
  out["distance"]["torsion"] = distance_to_json(d, *code.ring());
  bool dist_ok = true;
  try {
    const CodewordCensus census = codeword_census(code, c.cap);
    out["cardinality"]["exhaustive"] = census.count;
    card_ok = card_ok && closed.value() == census.count;
    out["distance"]["full_brute"] = census.min_weight;
    dist_ok = code.is_zero() || (d.d && *d.d == census.min_weight);
  } catch (const CapExceededError&) {
    out["cardinality"]["exhaustive"] = nullptr;
    out["distance"]["full_brute"] = nullptr;
  }
  out["cardinality_agree"] = card_ok;
  out["distance_agree"] = dist_ok;
  out["reversible"] = verdict_to_json(overall);
  const bool all_ok = agree && card_ok && dist_ok;
  if (c.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& m : v)
      std::cout << std::left << std::setw(10) << m.method << to_string(m.verdict) << "\n";
    std::cout << "reversibility methods " << (agree ? "agree" : "DISAGREE") << "\n"
              << "cardinality " << card_text(closed) << " " << (card_ok ? "agrees" : "DISAGREES")
              << "\n"
              << "distance " << (d.d ? std::to_string(*d.d) : std::string("unknown")) << " "
              << (dist_ok ? "agrees" : "DISAGREES") << "\n";
  }
  return all_ok ? kExitOk : kExitNegative;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Cyclic codes over finite chain rings: reversibility, torsion, distance, MDS"};
  app.require_subcommand(1);

  Common common;
  CodeArgs code_args;
  std::string method = "lemma24";
  bool brute = false, classify = false, range_only = false;
  std::string ring, field_poly;
  unsigned s = 1;
  std::size_t n = 0;

  auto* analyze = app.add_subcommand("analyze", "Full analysis report");
  add_code_options(analyze, code_args);
  add_common(analyze, common);

  auto* check = app.add_subcommand("check-reversible", "Reversibility verdict (JSON)");
  add_code_options(check, code_args);
  add_common(check, common);
  check->add_option("--method", method, "lemma24|thm32|thm41|brute|all")
      ->check(CLI::IsMember({"lemma24", "thm32", "thm41", "brute", "all"}));

  auto* dist = app.add_subcommand("distance", "Hamming distance with a witness");
  add_code_options(dist, code_args);
  add_common(dist, common);
  dist->add_flag("--brute", brute, "Also enumerate every codeword (up to --cap)");

  auto* mds = app.add_subcommand("mds", "MDS test");
  add_code_options(mds, code_args);
  add_common(mds, common);

  auto* cls = app.add_subcommand("classify-mds", "MDS codes of length p^s over a nu = 2 ring");
  cls->add_option("--ring", ring, "Ring spec")->required();
  cls->add_option("--field-poly", field_poly, "Residue field modulus");
  cls->add_option("--s", s, "Length exponent")->required();
  add_common(cls, common);

  auto* en = app.add_subcommand("enumerate", "Codes of length p^s over a nu = 2 ring");
  en->add_option("--ring", ring, "Ring spec")->required();
  en->add_option("--field-poly", field_poly, "Residue field modulus");
  en->add_option("--s", s, "Length exponent")->required();
  en->add_flag("--classify", classify, "Add distance and MDS status");
  en->add_flag("--range-only", range_only, "Include in-range tuples that are not admissible");
  add_common(en, common);

  auto* ids = app.add_subcommand("enumerate-ideals", "Every ideal by brute force");
  ids->add_option("--ring", ring, "Ring spec")->required();
  ids->add_option("--field-poly", field_poly, "Residue field modulus");
  ids->add_option("--n", n, "Code length")->required();
  add_common(ids, common);

  auto* golden = app.add_subcommand("paper-examples", "Worked examples, expected vs computed");
  add_common(golden, common);

  auto* oracle = app.add_subcommand("oracle", "Cross-check every method on one code");
  add_code_options(oracle, code_args);
  add_common(oracle, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*analyze)
      return cmd_analyze(code_args, common);
    if (*check)
      return cmd_check(code_args, common, method);
    if (*dist)
      return cmd_distance(code_args, common, brute);
    if (*mds)
      return cmd_mds(code_args, common);
    if (*cls)
      return cmd_classify(ring, field_poly, s, common);
    if (*en)
      return cmd_enumerate(ring, field_poly, s, classify, range_only, common);
    if (*ids)
      return cmd_ideals(ring, field_poly, n, common);
    if (*golden)
      return cmd_paper_examples(common);
    if (*oracle)
      return cmd_oracle(code_args, common);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

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

#include <chaincodes/error.hpp>
#include <chaincodes/parse.hpp>
#include <chaincodes/report.hpp>

namespace chaincodes {

namespace {

using nlohmann::json;

json elem_to_json(Elem a, const ChainRing& R)
{
  if (R.spec().family == RingFamily::ZmodPA)
    return a.v;
  return R.format(a);
}

} // namespace

json verdict_to_json(Verdict v)
{
  if (v == Verdict::Undecided)
    return nullptr;
  return v == Verdict::Reversible;
}

json word_to_json(const Word& w, const ChainRing& ring)
{
  json a = json::array();
  for (Elem e : w)
    a.push_back(elem_to_json(e, ring));
  return a;
}

json poly_to_json(const Poly& f)
{
  json j;
  j["text"] = to_string(f);
  j["coeffs"] = word_to_json(f.coeffs(), *f.ring());
  return j;
}

json cardinality_to_json(const Cardinality& c)
{
  return json{{"p", c.p}, {"exponent", c.exponent}, {"value", c.value().str()}};
}

json distance_to_json(const DistanceResult& d, const ChainRing& ring)
{
  json j;
  j["d"] = d.d ? json(*d.d) : json(nullptr);
  j["method"] = d.method;
  j["witness"] = word_to_json(d.witness, ring);
  return j;
}

MethodVerdict run_reversibility_method(const CyclicCode& code,
                                       const std::string& method,
                                       const AnalysisOptions& opts)
{
  MethodVerdict mv;
  mv.method = method;
  if (method == "lemma24") {
    const auto rep = is_reversible(code);
    mv.verdict = rep.verdict;
    json checks = json::array();
    for (const auto& c : rep.per_generator)
      checks.push_back({{"generator", to_string(c.generator)},
                        {"reciprocal", to_string(c.reciprocal)},
                        {"member", c.member}});
    mv.detail["checks"] = checks;
  } else if (method == "thm32") {
    const auto prm = recover_ps_nu2_params(code);
    if (!prm) {
      mv.detail["note"] = "not a nonzero code of length p^s over a ring with nu = 2";
    } else {
      const bool rev = is_reversible_ps_nu2(*prm, code.ring(), code.n());
      mv.verdict = rev ? Verdict::Reversible : Verdict::NotReversible;
      mv.detail["params"] = prm->to_string();
      mv.detail["ring_reading"] =
          is_reversible_ps_nu2(*prm, code.ring(), code.n(), DivisibilityReading::Ring);
    }
  } else if (method == "thm41") {
    const auto res = check_unit_witnesses(code, opts.unit_cap);
    mv.verdict = res.verdict;
    json w = json::array();
    for (Elem u : res.witnesses)
      w.push_back(elem_to_json(u, *code.ring()));
    mv.detail["witnesses"] = w;
    if (res.failed_index)
      mv.detail["failed_index"] = *res.failed_index;
    if (!res.note.empty())
      mv.detail["note"] = res.note;
  } else if (method == "brute") {
    const auto res = brute_force_is_reversible(code, opts.cap, true);
    mv.verdict = res.verdict;
    mv.detail["fallback"] = res.fallback;
    mv.detail["words_checked"] = res.words_checked;
  } else {
    throw DomainError("unknown reversibility method '" + method + "'");
  }
  mv.detail["verdict"] = verdict_to_json(mv.verdict);
  return mv;
}

Verdict combine_verdicts(const std::vector<MethodVerdict>& v, bool* agree)
{
  std::optional<Verdict> seen;
  bool ok = true;
  for (const auto& m : v) {
    if (m.verdict == Verdict::Undecided)
      continue;
    if (seen && *seen != m.verdict)
      ok = false;
    seen = m.verdict;
  }
  if (agree)
    *agree = ok;
  if (!ok || !seen)
    return Verdict::Undecided;
  return *seen;
}

json analysis_report(const CyclicCode& code, const AnalysisOptions& opts)
{
  const ChainRing& R = *code.ring();
  json j = code_to_json(code);

  json sg = json::array();
  for (const auto& e : code.standard_generators().entries) {
    json row = poly_to_json(e.f);
    row["i"] = e.valuation;
    row["t"] = e.degree;
    sg.push_back(row);
  }
  j["standard_generators"] = sg;

  const auto prof = code.torsion_profile();
  const auto tor_rev = torsion_reversibility(code);
  json tor = json::array();
  for (std::size_t i = 0; i < prof.generators.size(); ++i) {
    json row = poly_to_json(prof.generators[i]);
    row["level"] = i;
    row["T"] = prof.degrees[i];
    row["reversible"] = bool(tor_rev[i]);
    tor.push_back(row);
  }
  j["torsion"] = tor;
  j["cardinality"] = cardinality_to_json(code.cardinality());

  const MdsResult mds = is_mds(code, opts.distance);
  j["distance"] = distance_to_json(mds.distance, R);
  j["mds"] = mds.mds ? json(*mds.mds) : json(nullptr);

  std::vector<MethodVerdict> verdicts;
  json diag;
  for (const auto& m : reversibility_methods()) {
    verdicts.push_back(run_reversibility_method(code, m, opts));
    diag[m] = verdicts.back().detail;
  }
  bool agree = true;
  const Verdict overall = combine_verdicts(verdicts, &agree);
  diag["methods_agree"] = agree;
  j["reversible"] = verdict_to_json(overall);
  j["diagnostics"] = diag;
  return j;
}

} // namespace chaincodes

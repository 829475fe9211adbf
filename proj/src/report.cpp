#include "dsmooth/report.hpp"

#include "dsmooth/sampling.hpp"

namespace dsmooth {

Json to_json(const Scalar& s) { return s.to_string(); }

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json pair_json(const std::array<Scalar, 2>& p) { return Json::array({to_json(p[0]), to_json(p[1])}); }

Json subset_json(Subset s, const Presentation& pres) {
  Json out = Json::array();
  for (std::size_t g : members(s)) out.push_back(pres.names()[g]);
  return out;
}

Json check_json(const IdentityCheck& c) {
  Json j;
  j["name"] = c.name;
  j["instances"] = c.instances;
  j["failures"] = c.failures;
  j["pass"] = c.pass();
  j["first_failure"] = optional_json(c.first_failure);
  return j;
}

Json tally_json(const ConstantTermTally& t) {
  Json j;
  j["instances"] = t.instances;
  j["zero"] = t.zero;
  j["pass"] = t.pass();
  j["first_failure"] = optional_json(t.first_failure);
  return j;
}

}  // namespace

Json to_json(const SmoothnessVerdict& v, const Presentation& pres) {
  Json j;
  j["verdict"] = to_string(v.verdict);
  j["gkdim"] = v.gkdim;
  j["reasons"] = v.reasons;
  if (v.obstruction) {
    const auto& o = *v.obstruction;
    j["obstruction"] = {{"i", pres.names()[o[0]]}, {"j", pres.names()[o[1]]}, {"k", pres.names()[o[2]]}};
  } else {
    j["obstruction"] = nullptr;
  }
  j["pbw"] = v.pbw ? to_json(*v.pbw, pres) : Json(nullptr);
  if (v.witness) {
    Json w = Json::array();
    for (std::size_t k = 0; k < v.witness->size(); ++k) {
      const AffineEndo& e = (*v.witness)[k];
      Json row;
      row["nu"] = pres.names()[k];
      Json images = Json::object();
      for (std::size_t g = 0; g < e.size(); ++g)
        images[pres.names()[g]] = pres.format(pres.gen(g, e.slope(g)) + pres.one() * e.shift(g));
      row["images"] = images;
      w.push_back(row);
    }
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  Json systems = Json::array();
  for (const auto& s : v.systems) {
    Json r;
    r["generator"] = pres.names()[s.k];
    r["status"] = to_string(s.status);
    r["witness"] = s.witness ? pair_json(*s.witness) : Json(nullptr);
    r["particular"] = s.particular ? pair_json(*s.particular) : Json(nullptr);
    Json hom = Json::array();
    for (const auto& h : s.homogeneous) hom.push_back(pair_json(h));
    r["homogeneous"] = hom;
    Json cons = Json::array();
    for (const auto& c : s.constraints)
      cons.push_back({{"id", c.id()}, {"cA", to_json(c.cA)}, {"cB", to_json(c.cB)}, {"c0", to_json(c.c0)}});
    r["constraints"] = cons;
    r["comm4_conflict"] = s.comm4_conflict;
    r["reasons"] = s.reasons;
    systems.push_back(r);
  }
  j["systems"] = systems;
  Json checks = Json::array();
  for (const auto& c : v.checks) checks.push_back({{"id", c.id()}, {"holds", c.holds}, {"residual", to_json(c.residual)}});
  j["checks"] = checks;
  return j;
}

Json to_json(const OverlapReport& r, const Presentation& pres) {
  Json j;
  j["pass"] = r.pass;
  Json triples = Json::array();
  for (const auto& t : r.triples)
    triples.push_back({{"i", pres.names()[t.i]},
                       {"j", pres.names()[t.j]},
                       {"k", pres.names()[t.k]},
                       {"pass", t.pass},
                       {"discrepancy", pres.format(t.discrepancy)}});
  j["triples"] = triples;
  return j;
}

Json to_json(const Classification& c) {
  Json j;
  j["label"] = c.label;
  Json params = Json::object();
  for (const auto& [k, v] : c.params) params[k] = to_json(v);
  j["params"] = params;
  j["regime_holds"] = c.regime_holds;
  return j;
}

Json to_json(const IdentityReport& r) {
  Json j;
  j["pass"] = r.pass;
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(check_json(c));
  j["checks"] = checks;
  return j;
}

Json to_json(const CommutationReport& r) {
  Json j;
  j["side"] = to_string(r.side);
  j["type"] = to_string(r.type);
  j["status"] = to_string(r.status);
  Json levels = Json::array();
  for (const auto& l : r.levels) levels.push_back({{"n", l.n}, {"samples", l.samples}, {"failures", l.failures}});
  j["levels"] = levels;
  j["min_failing_n"] = optional_json(r.min_failing_n);
  j["counterexample"] = optional_json(r.counterexample);
  j["residual"] = optional_json(r.residual);
  return j;
}

CalculusAnalysis analyse_calculus(const Presentation& pres, long gkdim, unsigned max_degree,
                                  std::size_t integrability_samples, std::uint64_t seed) {
  CalculusAnalysis a;
  a.max_degree = max_degree;
  a.verdict = decide(pres, gkdim);
  if (!a.verdict.witness) return a;
  a.built = true;
  Calculus c(pres, *a.verdict.witness);
  const std::size_t n = pres.size();

  auto mons = monomials_up_to(n, max_degree);
  for (Subset s = 0; s <= c.full(); ++s) {
    if (popcount(s) + 2 > static_cast<int>(n)) continue;
    for (const auto& m : mons) {
      DiffForm f = DiffForm::basis(s, NcPoly::term(m, Scalar(1)));
      DiffForm dd = differential(c, differential(c, f));
      ++a.d_squared_checked;
      if (!dd.is_zero()) {
        ++a.d_squared_failures;
        if (a.d_squared_counterexamples.size() < 5) a.d_squared_counterexamples.push_back(c.format(f));
      }
    }
  }

  a.kernel = kernel_of_d_bounded(c, max_degree);
  a.connected = a.kernel.size() == 1 && a.kernel[0].degree() == 0;

  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < u; ++v)
      a.wedge_relations.push_back({u, v, sort_sign(c, Subset{1} << u, Subset{1} << v)});

  if (n >= 2) {
    a.integral_forms = integral_form_coefficients(c);
    a.integral_normalized = true;
    for (const auto& e : a.integral_forms)
      if (!(e.A * e.Abar * e.sigma).is_one()) a.integral_normalized = false;
  }
  if (integrability_samples > 0) a.integrability = verify_integrability(c, max_degree, integrability_samples, seed);
  return a;
}

Json to_json(const CalculusAnalysis& a, const Presentation& pres) {
  Json j;
  j["verdict"] = to_string(a.verdict.verdict);
  j["gkdim"] = a.verdict.gkdim;
  j["calculus_built"] = a.built;
  if (!a.built) {
    j["reasons"] = a.verdict.reasons;
    return j;
  }
  j["max_degree"] = a.max_degree;
  j["d_squared"] = {{"forms_checked", a.d_squared_checked},
                    {"failures", a.d_squared_failures},
                    {"pass", a.d_squared_failures == 0},
                    {"counterexamples", a.d_squared_counterexamples}};
  Json kernel = Json::array();
  for (const auto& p : a.kernel) kernel.push_back(pres.format(p));
  j["kernel"] = {{"dimension", a.kernel.size()}, {"basis", kernel}, {"connected", a.connected}};
  Json wedge = Json::array();
  for (const auto& w : a.wedge_relations)
    wedge.push_back({{"left", "d" + pres.names()[w.u] + "^d" + pres.names()[w.v]},
                     {"coefficient", to_json(w.coefficient)},
                     {"right", "d" + pres.names()[w.v] + "^d" + pres.names()[w.u]}});
  j["wedge_relations"] = wedge;
  Json entries = Json::array();
  for (const auto& e : a.integral_forms)
    entries.push_back({{"k", e.k},
                       {"S", subset_json(e.s, pres)},
                       {"T", subset_json(e.t, pres)},
                       {"A", to_json(e.A)},
                       {"Abar", to_json(e.Abar)},
                       {"sigma", to_json(e.sigma)},
                       {"closed_A", to_json(e.closed_A)},
                       {"closed_Abar", to_json(e.closed_Abar)},
                       {"closed_normalized", e.closed_normalized},
                       {"closed_equal", e.closed_equal}});
  j["integral_forms"] = {{"normalized", a.integral_normalized}, {"entries", entries}};
  if (a.integrability) {
    Json levels = Json::array();
    for (const auto& l : a.integrability->levels)
      levels.push_back({{"k", l.k},
                        {"samples", l.samples},
                        {"first_pass", l.first_pass},
                        {"second_pass", l.second_pass},
                        {"counterexample", optional_json(l.counterexample)}});
    j["integrability"] = {{"pass", a.integrability->pass}, {"levels", levels}};
  } else {
    j["integrability"] = nullptr;
  }
  return j;
}

bool IdentitySuite::pass() const {
  return pq.pass && right1.status == IdentityStatus::pass && right2.status == IdentityStatus::pass &&
         determinants.pass && sigma_constants.pass() && derivation_constants.pass();
}

IdentitySuite run_identity_suite(unsigned n_max, std::size_t samples, std::uint64_t seed) {
  IdentitySuite s;
  s.n_max = n_max;
  s.pq_n_max = std::max(30u, n_max);
  s.samples = samples;
  s.seed = seed;
  s.pq = verify_pq_recurrences(s.pq_n_max, samples, seed);
  s.right1 = verify_right_commutation(DiffusionType::type1, n_max, samples, seed + 1);
  s.right2 = verify_right_commutation(DiffusionType::type2, n_max, samples, seed + 2);
  s.left1 = verify_left_commutation(DiffusionType::type1, n_max, samples, seed + 3);
  s.left2 = verify_left_commutation(DiffusionType::type2, n_max, samples, seed + 4);
  s.determinants = verify_determinant_identities(samples, seed + 5);

  Sampler sig(seed + 6);
  for (std::size_t i = 0; i < samples; ++i) {
    Scalar l12 = sig.nonzero_rational(5), l21 = sig.nonzero_rational(5);
    auto m = build_aut_matrices(sample_aut_coefficients(sig, l12, l21, false), l12, l21);
    auto r = solve_sigma_constant_terms(m);
    ++s.sigma_constants.instances;
    if (r.zero) ++s.sigma_constants.zero;
    else if (!s.sigma_constants.first_failure)
      s.sigma_constants.first_failure = "instance " + std::to_string(i);
  }
  Sampler der(seed + 7);
  for (std::size_t i = 0; i < samples; ++i) {
    Scalar l12 = der.nonzero_rational(5), l21 = der.nonzero_rational(5);
    auto m = build_aut_matrices(sample_aut_coefficients(der, l12, l21, true), l12, l21);
    auto r = check_derivation_constant_terms(m);
    ++s.derivation_constants.instances;
    if (r.status == DerivationStatus::zero_constants) ++s.derivation_constants.zero;
    else if (!s.derivation_constants.first_failure)
      s.derivation_constants.first_failure = "instance " + std::to_string(i) + ": " + to_string(r.status);
  }
  return s;
}

Json to_json(const IdentitySuite& s) {
  Json j;
  j["n_max"] = s.n_max;
  j["pq_n_max"] = s.pq_n_max;
  j["samples"] = s.samples;
  j["seed"] = s.seed;
  j["pass"] = s.pass();
  j["pq_recurrences"] = to_json(s.pq);
  j["right_commutation"] = Json::array({to_json(s.right1), to_json(s.right2)});
  j["left_commutation"] = Json::array({to_json(s.left1), to_json(s.left2)});
  j["determinant_identities"] = to_json(s.determinants);
  j["sigma_constant_terms"] = tally_json(s.sigma_constants);
  j["derivation_constant_terms"] = tally_json(s.derivation_constants);
  return j;
}

Json diffusion_classification_json(const std::set<std::string>& labels, const OverlapReport& pbw,
                                   const Presentation& encoded) {
  Json j;
  Json ls = Json::array();
  for (const auto& l : diffusion_labels())
    if (labels.count(l)) ls.push_back({{"label", l}, {"crosswalk", crosswalk_to_3d(l)}});
  j["labels"] = ls;
  j["pbw"] = to_json(pbw, encoded);
  return j;
}

}  // namespace dsmooth

#include "torusdyn/report.hpp"

#include <sstream>

#include "torusdyn/charpoly.hpp"

namespace torusdyn {

namespace {

std::string str(std::size_t x) { return std::to_string(x); }

Int json_int(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_int(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw InvalidInput(path + ": expected an integer");
}

long json_small(const Json& j, const std::string& path, long lo, long hi) {
  Int v = json_int(j, path);
  if (v < lo || v > hi) throw InvalidInput(path + ": out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v.get_si();
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(path + ": missing '" + key + "'");
  return *it;
}

Json word_json(const Word& w) {
  Json a = Json::array();
  for (long x : w) a.push_back(std::to_string(x));
  return a;
}

Json matrix_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    a.push_back(row);
  }
  return a;
}

Json gauss_json(const GaussInt& z) { return Json::array({z.re.get_str(), z.im.get_str()}); }

std::string complex_approx(const CBall& b) {
  RatInterval re(Rat(b.mid.re - b.rad), Rat(b.mid.re + b.rad)), im(Rat(b.mid.im - b.rad), Rat(b.mid.im + b.rad));
  return decimal_approx(re, 13) + " + i(" + decimal_approx(im, 13) + ")";
}

std::string word_text(const Word& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

CommandResult rejected(const std::string& message) {
  CommandResult out;
  out.code = ExitCode::invalid_input;
  out.report = {{"tool", {{"name", "torusdyn"}, {"version", tool_version()}}},
                {"verdict", "invalid_input"},
                {"error", message}};
  out.text = "invalid input: " + message + "\n";
  return out;
}

CommandResult internal_failure(const std::string& message) {
  CommandResult out;
  out.code = ExitCode::theorem_violation;
  out.report = {{"tool", {{"name", "torusdyn"}, {"version", tool_version()}}},
                {"verdict", "theorem_violation"},
                {"error", message}};
  out.text = "THEOREM VIOLATION (internal check failed): " + message + "\n";
  return out;
}

// Runs body, mapping exceptions onto the exit-code contract: rejected input is 3, a failed
// internal consistency check is 2.
template <class F>
CommandResult guarded(F body) {
  try {
    return body();
  } catch (const InvalidInput& e) {
    return rejected(e.what());
  } catch (const UnsupportedSpectrum& e) {
    return rejected(e.what());
  } catch (const std::invalid_argument& e) {
    return rejected(e.what());
  } catch (const std::logic_error& e) {
    return internal_failure(e.what());
  } catch (const std::runtime_error& e) {
    return rejected(e.what());
  }
}

Json sweep_json(const SemipositivitySweep& s) {
  return {{"draw", s.draw == ContextDraw::nef ? "nef" : "positive_definite"},
          {"samples", str(s.samples)},
          {"passed", str(s.passed)},
          {"failed", str(s.failed)},
          {"degenerate", str(s.degenerate)},
          {"smallest_pivot", s.smallest_pivot.get_str()},
          {"first_failure_recorded", s.first_failure.has_value()}};
}

std::vector<Int> small_divisors(const Int& n) {
  std::vector<Int> out;
  Int a = abs(n);
  if (a == 0 || a > 1000000) return out;
  for (Int d = 1; d <= a; ++d)
    if (a % d == 0) out.push_back(d);
  return out;
}

// Defining polynomial of x with its other rational roots divided out; the flag is set when it
// is certified irreducible (Kronecker's method, degree <= 6).
std::pair<IntPoly, bool> reduced_poly(const AlgebraicReal& x) {
  if (x.is_rational()) return {primitive_part(RatPoly{Rat(-x.lo()), Rat(1)}), true};
  IntPoly p = x.poly();
  for (const Int& a : small_divisors(p.coeff(0)))
    for (const Int& b : small_divisors(p.lead()))
      for (int sign : {1, -1}) {
        Rat r = Rat(a * sign) / b;
        if (sign_at(p, r) == 0) p = exact_quotient(p, primitive_part(RatPoly{Rat(-r), Rat(1)}));
      }
  bool minimal = false;
  if (p.degree() <= 6) {
    try {
      minimal = is_irreducible(p);
    } catch (const std::runtime_error&) {
    }
  }
  return {p, minimal};
}

}  // namespace

const char* tool_version() { return "torusdyn 1.0.0"; }

Json to_json(const Int& x) { return x.get_str(); }

Json to_json(const RatInterval& x) {
  return {{"lo", x.lo.get_str()}, {"hi", x.hi.get_str()}, {"approximation", decimal_approx(x, 15)}};
}

Json to_json(const AlgebraicReal& x, unsigned bits) {
  // refinement may land exactly on a rational root, so the interval is read afterwards
  x.refine_to(pow2(-static_cast<long>(bits)));
  std::string approx = x.decimal(15);
  AlgebraicReal v = x;
  Rat near(x.interval().mid());
  Int n = near.get_num() / near.get_den();
  for (Int c : {Int(n), Int(n + 1), Int(n - 1)})
    if (!v.is_rational() && v.lo() <= c && c <= v.hi() && sign_at(v.poly(), Rat(c)) == 0) v = AlgebraicReal(Rat(c));
  auto [poly, minimal] = reduced_poly(v);
  return {{"poly", coeffs_leading_first(poly)},
          {"minimal", minimal},
          {"interval", Json::array({v.lo().get_str(), v.hi().get_str()})},
          {"approximation", v.is_rational() ? v.lo().get_str() : approx}};
}

AlgebraicReal algebraic_from_json(const Json& j) {
  try {
    const Json& p = field(j, "poly", "algebraic");
    const Json& iv = field(j, "interval", "algebraic");
    std::string joined;
    for (std::size_t i = 0; i < p.size(); ++i) joined += (i ? "," : "") + p.at(i).get<std::string>();
    IntPoly poly = parse_poly_leading_first(joined);
    Rat lo = parse_rat(iv.at(0).get<std::string>()), hi = parse_rat(iv.at(1).get<std::string>());
    return AlgebraicReal::isolate(poly, lo, hi);
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("algebraic: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(std::string("algebraic: ") + e.what());
  }
}

InputSpec parse_spec_file(const Json& j) {
  if (!j.is_object()) throw InvalidInput("spec: expected an object");
  const Json& kind = field(j, "kind", "spec");
  if (!kind.is_string()) throw InvalidInput("spec.kind: expected a string");
  InputSpec in;
  in.kind = kind.get<std::string>();
  if (in.kind == "number_field") {
    const Json& p = field(j, "min_poly", "spec");
    if (!p.is_array() || p.size() < 3) throw InvalidInput("spec.min_poly: expected at least 3 coefficients");
    std::vector<Int> lead_first;
    for (std::size_t i = 0; i < p.size(); ++i) lead_first.push_back(json_int(p[i], "spec.min_poly[" + str(i) + "]"));
    in.min_poly = IntPoly(std::vector<Int>(lead_first.rbegin(), lead_first.rend()));
    if (j.contains("coeff_bound")) in.coeff_bound = json_small(j["coeff_bound"], "spec.coeff_bound", 1, 64);
    return in;
  }
  if (in.kind != "torus_group") throw InvalidInput("spec.kind: expected torus_group or number_field");
  const unsigned k = static_cast<unsigned>(json_small(field(j, "complex_dim", "spec"), "spec.complex_dim", 1, 8));
  const Json& gens = field(j, "generators", "spec");
  if (!gens.is_array() || gens.empty()) throw InvalidInput("spec.generators: expected a non-empty array");
  std::vector<TorusAutomorphism> autos;
  std::vector<std::string> labels;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::string path = "spec.generators[" + str(g) + "]";
    if (!gens[g].is_object()) throw InvalidInput(path + ": expected an object");
    std::string name = "g" + str(g + 1);
    if (gens[g].contains("name")) {
      if (!gens[g]["name"].is_string()) throw InvalidInput(path + ".name: expected a string");
      name = gens[g]["name"].get<std::string>();
    }
    const Json& m = field(gens[g], "matrix", path);
    if (!m.is_array() || m.size() != k) throw InvalidInput(path + ".matrix: expected " + str(k) + " rows");
    GaussIntMatrix a(k, k);
    for (unsigned r = 0; r < k; ++r) {
      if (!m[r].is_array() || m[r].size() != k) throw InvalidInput(path + ".matrix[" + str(r) + "]: expected " + str(k) + " entries");
      for (unsigned c = 0; c < k; ++c) {
        const std::string ep = path + ".matrix[" + str(r) + "][" + str(c) + "]";
        const Json& e = m[r][c];
        if (!e.is_array() || e.size() != 2) throw InvalidInput(ep + ": expected [re, im]");
        a(r, c) = GaussInt(json_int(e[0], ep + "[0]"), json_int(e[1], ep + "[1]"));
      }
    }
    try {
      autos.emplace_back(std::move(a), name);
    } catch (const std::invalid_argument& e) {
      throw InvalidInput(path + ": " + e.what());
    }
    labels.push_back(name);
  }
  in.group = GroupSpec(std::move(autos), std::move(labels));
  return in;
}

Json spec_to_json(const GroupSpec& g) {
  Json gens = Json::array();
  for (std::size_t j = 0; j < g.size(); ++j) {
    const auto& a = g.generators[j].matrix();
    Json rows = Json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(gauss_json(a(r, c)));
      rows.push_back(row);
    }
    gens.push_back({{"name", g.labels[j]}, {"matrix", rows}});
  }
  return {{"kind", "torus_group"}, {"complex_dim", std::to_string(g.k)}, {"generators", gens}};
}

CommandResult analyze_group(const GroupSpec& g, const ReportOptions& opt) {
  return guarded([&] {
    const unsigned bits = opt.precision_bits;
    CommandResult out;
    std::ostringstream text;
    Json rep;
    rep["tool"] = {{"name", "torusdyn"}, {"version", tool_version()}};
    rep["seed"] = std::to_string(opt.seed);
    rep["precision_bits"] = std::to_string(bits);
    rep["input"] = spec_to_json(g);
    text << tool_version() << " analyze: k = " << g.k << ", " << g.size() << " generator(s)\n";

    CommutingCheck cc = check_commuting(g);
    if (!cc.commuting) {
      const auto [a, b] = *cc.witness;
      CommandResult r = rejected("generators " + g.labels[a] + " and " + g.labels[b] + " do not commute");
      r.report["non_commuting_pair"] = Json::array({g.labels[a], g.labels[b]});
      return r;
    }
    rep["commuting"] = true;

    Json gens = Json::array();
    for (std::size_t j = 0; j < g.size(); ++j) {
      const auto& f = g.generators[j];
      DegreeProfile dp = degree_profile(f, bits);
      Json cp = Json::array();
      GaussIntPoly p = charpoly(f.matrix());
      for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) cp.push_back(gauss_json(*it));
      Json degs = Json::array();
      for (const auto& d : dp.degrees) degs.push_back(to_json(d, bits));
      gens.push_back({{"name", g.labels[j]},
                      {"charpoly_leading_first", cp},
                      {"degrees", degs},
                      {"entropy",
                       {{"enclosure", to_json(dp.entropy.value)},
                        {"max_degree", to_json(dp.entropy.max_degree, bits)},
                        {"argmax_p", std::to_string(dp.entropy.argmax)},
                        {"zero", dp.entropy.zero}}},
                      {"classification", to_string(dp.classification)}});
      text << "  " << g.labels[j] << ": " << to_string(dp.classification) << ", d_1 = " << dp.degrees[1].decimal(13)
           << ", entropy = " << decimal_approx(dp.entropy.value, 13) << "\n";
    }
    rep["generators"] = gens;

    CharacterTable table = find_characters(g);
    Json chars = Json::array();
    for (const auto& ch : table.characters) {
      Json m2 = Json::array(), tau = Json::array(), mu = Json::array();
      for (std::size_t j = 0; j < g.size(); ++j) {
        m2.push_back(to_json(ch.modulus2[j], bits));
        tau.push_back(to_json(ch.tau(j, bits)));
        mu.push_back(complex_approx(ch.eigenvalue[j].enclose(bits)));
      }
      chars.push_back({{"modulus_squared", m2}, {"tau", tau}, {"eigenvalue_approximation", mu}});
    }
    rep["characters"] = {{"semisimple", table.semisimple}, {"count", str(table.m())}, {"table", chars}};
    text << "  characters: " << table.m() << (table.semisimple ? "" : " (family not semisimple)") << "\n";

    PiRank pi = pi_rank(g, table);
    rep["pi"] = {{"n", str(pi.n)},
                 {"r", str(pi.r)},
                 {"kernel", matrix_json(pi.kernel)},
                 {"certified_image_rank", str(pi.certified_image_rank)},
                 {"relation_search_bits", std::to_string(pi.bits)}};
    text << "  rank r = " << pi.r << " (kernel rank " << pi.kernel.rows() << ", certified image rank "
         << pi.certified_image_rank << ")\n";

    DecompositionResult dec = decompose(g, pi);
    StructureReport sr = assert_structure_theorems(g, table, pi, dec);
    Json items = Json::array();
    for (const auto& a : sr.assertions) {
      items.push_back({{"name", a.name}, {"status", to_string(a.status)}, {"detail", a.detail}});
      text << "  " << a.name << ": " << to_string(a.status) << (a.detail.empty() ? "" : " (" + a.detail + ")") << "\n";
    }
    rep["assertions"] = {{"positive_entropy_hypothesis", to_string(sr.positive_entropy_hypothesis)}, {"items", items}};

    Json free_part = Json::array(), u_gens = Json::array();
    for (const auto& w : dec.free_part) free_part.push_back(word_json(w));
    for (const auto& w : dec.u.generators) u_gens.push_back(word_json(w));
    rep["decomposition"] = {{"r", str(dec.r)},
                            {"free_part", free_part},
                            {"basis", matrix_json(dec.basis)},
                            {"u",
                             {{"generators", u_gens},
                              {"finite", dec.u.finite},
                              {"order", dec.u.order ? Json(dec.u.order->get_str()) : Json(nullptr)},
                              {"relations", matrix_json(dec.u.relations)},
                              {"enumeration_capped", dec.u.enumeration_capped}}}};
    text << "  U: " << dec.u.generators.size() << " generator(s), "
         << (dec.u.finite ? "finite of order " + (dec.u.order ? dec.u.order->get_str() : std::string("?"))
                          : std::string("infinite"))
         << "; free part rank " << dec.free_part.size();
    for (const auto& w : dec.free_part) text << " " << word_text(w);
    text << "\n";

    out.code = sr.violated() ? ExitCode::theorem_violation : ExitCode::ok;
    rep["verdict"] = sr.violated() ? "theorem_violation" : "pass";
    text << "  verdict: " << (sr.violated() ? "THEOREM VIOLATION" : "pass") << "\n";
    out.report = std::move(rep);
    out.text = text.str();
    return out;
  });
}

CommandResult cmd_analyze(const Json& spec_file, const ReportOptions& opt) {
  return guarded([&] {
    InputSpec in = parse_spec_file(spec_file);
    if (in.kind == "torus_group") return analyze_group(in.group, opt);
    ForgedGroup fg = build_max_rank_group(make_number_field(in.min_poly), in.coeff_bound);
    return analyze_group(fg.spec, opt);
  });
}

CommandResult cmd_hodge_check(unsigned k, std::size_t samples, std::uint64_t seed) {
  if (k < 2 || k > 4)
    return rejected("hodge-check supports k in {2, 3, 4}; the k^2 x k^2 exact Gram matrices beyond k = 4 exceed "
                    "the desk-scale budget");
  return guarded([&] {
    CommandResult out;
    std::ostringstream text;
    PositivityReport id = check_hodge_riemann_definite(CohomClass::from_hermitian(GaussRatMatrix::identity(k)));
    Json pivots = Json::array();
    for (const auto& p : id.pivots) pivots.push_back(p.get_str());
    SemipositivitySweep pd = sweep_gromov(k, samples, seed, ContextDraw::positive_definite);
    SemipositivitySweep nef = sweep_gromov(k, samples, seed, ContextDraw::nef);
    const bool ok = id.holds && pd.failed == 0 && nef.failed == 0;
    out.report = {{"tool", {{"name", "torusdyn"}, {"version", tool_version()}}},
                  {"k", std::to_string(k)},
                  {"samples", str(samples)},
                  {"seed", std::to_string(seed)},
                  {"identity_definite",
                   {{"holds", id.holds},
                    {"primitive_dimension", str(id.dimension)},
                    {"rank", str(id.rank)},
                    {"pivots", pivots}}},
                  {"sweeps", Json::array({sweep_json(pd), sweep_json(nef)})},
                  {"verdict", ok ? "pass" : "theorem_violation"}};
    text << tool_version() << " hodge-check: k = " << k << ", seed " << seed << "\n";
    text << "  omega = I: " << (id.holds ? "positive definite" : "NOT positive definite") << " on the "
         << id.dimension << "-dimensional primitive space, pivots";
    for (const auto& p : id.pivots) text << " " << p.get_str();
    text << "\n";
    for (const auto* s : {&pd, &nef})
      text << "  " << (s->draw == ContextDraw::nef ? "nef" : "positive definite") << " contexts: " << s->passed
           << "/" << s->samples << " semidefinite, " << s->failed << " failures, " << s->degenerate << " degenerate\n";
    text << "  verdict: " << (ok ? "pass" : "THEOREM VIOLATION") << "\n";
    out.code = ok ? ExitCode::ok : ExitCode::theorem_violation;
    out.text = text.str();
    return out;
  });
}

CommandResult cmd_forge(const std::string& poly_leading_first, long bound, const ReportOptions& opt) {
  return guarded([&] {
    NumberFieldSpec f = make_number_field(parse_poly_leading_first(poly_leading_first));
    ForgedGroup fg;
    try {
      fg = build_max_rank_group(f, bound);
    } catch (const UnitSearchFailure& e) {
      throw InvalidInput(std::string(e.what()) + "; raise --bound");
    }
    CommandResult analysis = analyze_group(fg.spec, opt);
    Json emb = Json::array();
    for (const auto& e : f.embeddings) emb.push_back(to_json(e, opt.precision_bits));
    Json unit_list = Json::array();
    for (std::size_t i = 0; i < fg.units.units.size(); ++i) {
      Json c = Json::array();
      for (const auto& x : fg.units.units[i]) c.push_back(x.get_str());
      unit_list.push_back({{"name", fg.spec.labels[i]},
                           {"coefficients_power_basis", c},
                           {"norm", field_norm(fg.units.units[i], f).get_str()}});
    }
    CommandResult out;
    out.code = analysis.code;
    out.report = {{"tool", {{"name", "torusdyn"}, {"version", tool_version()}}},
                  {"field",
                   {{"min_poly", coeffs_leading_first(f.min_poly)}, {"degree", std::to_string(f.degree())}, {"embeddings", emb}}},
                  {"unit_search",
                   {{"coeff_bound", std::to_string(bound)},
                    {"examined", str(fg.units.examined)},
                    {"units_found", str(fg.units.unit_count)},
                    {"selected", unit_list}}},
                  {"spec_file", spec_to_json(fg.spec)},
                  {"analysis", analysis.report},
                  {"verdict", analysis.report["verdict"]}};
    std::ostringstream text;
    text << tool_version() << " forge: " << to_string(f.min_poly, "x") << ", " << fg.units.units.size()
         << " independent unit(s) among " << fg.units.unit_count << " found with |a_i| <= " << bound << "\n";
    for (const auto& u : unit_list) {
      text << "  " << u["name"].get<std::string>() << " = (";
      for (std::size_t i = 0; i < u["coefficients_power_basis"].size(); ++i)
        text << (i ? "," : "") << u["coefficients_power_basis"][i].get<std::string>();
      text << "), norm " << u["norm"].get<std::string>() << "\n";
    }
    out.text = text.str() + analysis.text;
    return out;
  });
}

CommandResult cmd_enumerate(unsigned k, long bound) {
  if (k < 1 || bound < 0) return rejected("enumerate: need k >= 1 and bound >= 0");
  return guarded([&] {
    DegreeEnumeration en;
    try {
      en = enumerate_degree_values(k, bound);
    } catch (const BudgetExceeded& e) {
      throw InvalidInput(e.what());
    }
    Json values = Json::array();
    for (const auto& v : en.values) values.push_back(to_json(v, 40));
    std::ostringstream text;
    text << tool_version() << " enumerate: k = " << k << ", entries in [" << -bound << ", " << bound << "], "
         << en.examined.get_str() << " matrices of determinant 1\n";
    text << "  " << en.values.size() << " distinct d_1 values:";
    for (const auto& v : en.values) text << " " << v.decimal(10);
    text << "\n";
    Json minimum = nullptr;
    std::string gap = "all d_1 values equal 1";
    if (en.min_positive_entropy) {
      minimum = to_json(*en.min_positive_entropy, 40);
      gap = "no d_1 value lies in the open interval (1, " + en.min_positive_entropy->decimal(13) + ")";
    }
    text << "  " << gap << "\n";
    CommandResult out;
    out.report = {{"tool", {{"name", "torusdyn"}, {"version", tool_version()}}},
                  {"k", std::to_string(k)},
                  {"bound", std::to_string(bound)},
                  {"examined", en.examined.get_str()},
                  {"distinct_values", str(en.values.size())},
                  {"values", values},
                  {"min_positive_entropy", minimum},
                  {"gap", gap},
                  {"verdict", "pass"}};
    out.text = text.str();
    return out;
  });
}

}  // namespace torusdyn

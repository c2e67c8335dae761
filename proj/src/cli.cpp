#include "liebracket/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "liebracket/acceptance.hpp"
#include "liebracket/errors.hpp"
#include "liebracket/json_io.hpp"

namespace liebracket {

namespace {

struct Report {
  Json inputs = Json::object();
  Json result = nullptr;
  std::vector<std::pair<std::string, Json>> verdicts;
  std::optional<std::uint64_t> seed;

  void add(std::string name, Json v) { verdicts.emplace_back(std::move(name), std::move(v)); }
  void add(std::string name, bool pass) { add(std::move(name), verdict(pass)); }

  bool pass() const {
    for (const auto& [name, v] : verdicts)
      if (!v.at("pass").get<bool>()) return false;
    return true;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Matrix text, or @path naming a file that holds it.
Matrix matrix_arg(const std::string& text) {
  if (!text.empty() && text.front() == '@') return Matrix::parse(read_file(text.substr(1)));
  return Matrix::parse(text);
}

Json labelled(const std::vector<std::string>& labels, const std::vector<Matrix>& mats) {
  Json out = Json::array();
  for (std::size_t k = 0; k < mats.size(); ++k)
    out.push_back({{"label", labels[k]}, {"matrix", to_json(mats[k])}});
  return out;
}

bool two_step_nilpotent(const LieAlgebra& L, const Subspace& s) {
  std::vector<Vector> basis;
  for (const auto& b : s.basis()) basis.push_back(b.flatten());
  for (const auto& a : basis)
    for (const auto& b : basis) {
      const Vector ab = L.bracket(a, b);
      for (const auto& c : basis)
        for (const auto& x : L.bracket(c, ab))
          if (!x.is_zero()) return false;
    }
  return true;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix basis_unit(std::size_t n, std::size_t k) {
  return Matrix::unit(n, n, k / n + 1, k % n + 1);
}

// ---------------------------------------------------------------------------

Report cmd_constants(std::size_t n, std::size_t m, const Matrix& j) {
  Report rep;
  rep.inputs = {{"n", n}, {"m", m}, {"j", to_json(j)}};
  const LieAlgebra L = LieAlgebra::from_param(BracketParam(n, m, j));
  rep.result = {{"labels", L.labels()}, {"constants", to_json(L.constants())}};
  rep.add("jacobi", to_json(jacobi_check(L)));
  return rep;
}

Report cmd_center(std::size_t n, std::size_t m, const Matrix& j) {
  Report rep;
  rep.inputs = {{"n", n}, {"m", m}, {"j", to_json(j)}};
  const LieAlgebra L = LieAlgebra::from_param(BracketParam(n, m, j));
  const Subspace z = center(L);
  const std::size_t r = rank(j);
  const std::size_t expected = (n == m && m == r) ? 1 : (n - r) * (m - r);
  Json basis = Json::array();
  for (const auto& b : z.basis()) basis.push_back(to_json(b));
  rep.result = {{"rank", r},
                {"center_dim", z.dim()},
                {"expected_dim", expected},
                {"basis", std::move(basis)}};
  rep.add("center_dimension_law", z.dim() == expected);
  return rep;
}

Report cmd_classify(std::size_t n, std::size_t m, std::uint64_t seed) {
  Report rep;
  rep.inputs = {{"n", n}, {"m", m}};
  rep.seed = seed;
  const ClassificationReport report = classify_rank_family(n, m, seed);
  rep.result = to_json(report);
  rep.add("witnesses_verified", report.all_witnesses_verified());
  if (report.within_theorem_scope) rep.add("pairwise_distinct", report.pairwise_distinct);
  return rep;
}

Report cmd_witness(const Matrix& j1, const Matrix& j2) {
  Report rep;
  rep.inputs = {{"j1", to_json(j1)}, {"j2", to_json(j2)}};
  try {
    const IsoWitness w = iso_witness_factors(j1, j2);
    const std::size_t m = j1.rows(), n = j1.cols();
    rep.result = {{"rank", rank(j1)},
                  {"p", to_json(w.p)},
                  {"q", to_json(w.q)},
                  {"map", to_json(w.map.matrix())}};
    rep.add("equivalent", true);
    rep.add("factorization", w.q * j2 * w.p == j1);
    HomResult h = hom_check(w.map, LieAlgebra::from_param(BracketParam(n, m, j1)),
                            LieAlgebra::from_param(BracketParam(n, m, j2)));
    Json v = to_json(h);
    v["pass"] = h.is_hom && h.bijective();
    rep.add("bijective_hom", std::move(v));
  } catch (const ClassificationError& e) {
    rep.add("equivalent", verdict(false, {{"rank1", e.rank1()}, {"rank2", e.rank2()}}));
  }
  return rep;
}

Report cmd_heisenberg(std::size_t n) {
  Report rep;
  rep.inputs = {{"n", n}};
  const HeisenbergModel h = heisenberg_realization(n);
  const LieAlgebra alg = h.algebra();
  std::vector<std::size_t> lcs;
  for (const auto& t : lower_central_series(alg)) lcs.push_back(t.dim());
  rep.result = {{"ambient_j", to_json(h.ambient.j())},
                {"generators", labelled(h.labels(), h.generators())},
                {"constants", to_json(alg.constants())},
                {"lcs_dims", lcs},
                {"center_dim", center(alg).dim()}};
  rep.add("relations", alg.constants() == heisenberg_algebra(n).constants());
  rep.add("subalgebra_closed",
          subalgebra_closed(LieAlgebra::from_param(h.ambient), h.span()).pass());
  rep.add("lcs_dims", lcs == std::vector<std::size_t>{2 * n + 1, 1, 0});

  const auto faithful =
      heisenberg_obstruction(RepCandidate(heisenberg_algebra(n), h.generators()));
  Json fv = verdict(faithful.verdict == ObstructionVerdict::Faithful);
  fv["verdict"] = std::string(to_string(faithful.verdict));
  fv["target_dim"] = faithful.target_dim;
  rep.add("commutator_representation", std::move(fv));

  std::vector<Matrix> scalar(2 * n, Matrix(n + 1, n + 1));
  scalar.push_back(Matrix::identity(n + 1));
  const auto obstruction = heisenberg_obstruction(RepCandidate(heisenberg_algebra(n), scalar));
  Json ov = verdict(obstruction.verdict == ObstructionVerdict::ScalarZContradiction);
  ov["verdict"] = std::string(to_string(obstruction.verdict));
  ov["z_trace"] = to_json(obstruction.z_trace);
  rep.add("scalar_z_obstruction", std::move(ov));
  return rep;
}

Report cmd_semidirect(std::size_t r, std::size_t s) {
  Report rep;
  rep.inputs = {{"r", r}, {"s", s}};
  const SemidirectModel model = semidirect_S(r, s);
  const Subspace nil = model.nilpotent_part();
  rep.result = {{"dim", model.algebra.dim()},
                {"labels", model.algebra.labels()},
                {"constants", to_json(model.algebra.constants())},
                {"phi", to_json(model.phi.matrix())},
                {"nilpotent_dim", nil.dim()}};
  HomResult h = hom_check(model.phi, model.algebra, model.target());
  Json v = to_json(h);
  v["pass"] = h.is_hom && h.bijective();
  rep.add("phi_isomorphism", std::move(v));
  rep.add("nilpotent_two_step", two_step_nilpotent(model.algebra, nil));
  return rep;
}

Report cmd_embed(const std::string& path, std::size_t n, std::size_t m, std::size_t q) {
  Report rep;
  const std::string file = !path.empty() && path.front() == '@' ? path.substr(1) : path;
  rep.inputs = {{"rep", file}, {"n", n}, {"m", m}, {"q", q}};
  Json doc;
  try {
    doc = Json::parse(read_file(file));
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid representation file: ") + e.what());
  }
  const RepCandidate cand = rep_from_json(doc);
  const std::size_t p = cand.target_dim();
  HomResult source = hom_check(cand.as_map(), cand.src(), LieAlgebra::general_linear(p));
  rep.add("source_hom", to_json(source));
  if (!source.is_hom) return rep;

  const AdoEmbedding e = ado_embed(cand, n, m, q);
  const LieAlgebra target = LieAlgebra::from_param(BracketParam::normal(n, m, q));
  rep.result = {{"p", p}, {"image", to_json(e.image)}, {"map", to_json(e.map.matrix())}};
  Json ev = to_json(e.embedded);
  ev["pass"] = e.pass();
  rep.add("injective_hom", std::move(ev));
  if (e.pass())
    rep.add("signature_preserved", invariant_signature(restrict_to(target, e.image)) ==
                                       invariant_signature(cand.src()));
  return rep;
}

Report cmd_contract(std::size_t n, std::size_t r) {
  Report rep;
  rep.inputs = {{"n", n}, {"r", r}};
  const EpsStructureConstants c = contraction_constants(n, r);
  Json negative = nullptr;
  for (const auto& [key, terms] : c.table())
    for (const auto& [k, coef] : terms)
      if (*coef.min_exponent() < 0 && negative.is_null())
        negative = {{"i", key.first}, {"j", key.second}, {"k", k},
                    {"exp", *coef.min_exponent()}};
  rep.result = {{"constants", to_json(c)}};
  rep.add("no_negative_exponents", verdict(negative.is_null(), negative));
  if (negative.is_null()) {
    const StructureConstants limit = contraction_limit(c);
    rep.result["limit"] = to_json(limit);
    rep.add("limit_equals_normal_form",
            limit == structure_constants(BracketParam::normal(n, n, r)));
  }
  return rep;
}

Report cmd_deform(std::size_t n, std::size_t r, const Scalar& t) {
  Report rep;
  rep.inputs = {{"n", n}, {"r", r}, {"t", to_json(t)}};
  const Matrix j = Matrix::rank_normal_form(n, n, r);
  const Matrix id = Matrix::identity(n);
  const BracketParam p = deformation_bracket(n, j, t);

  bool decomposition = true, transport = true;
  const bool invertible = t != Scalar(1) || r == n;
  for (std::size_t a = 0; a < n * n; ++a)
    for (std::size_t b = 0; b < n * n; ++b) {
      const Matrix ea = basis_unit(n, a), eb = basis_unit(n, b);
      const Matrix lhs = bracket(ea, eb, p);
      decomposition &= lhs == commutator(ea, eb) + t * bracket(ea, eb, BracketParam(j - id));
      if (invertible)
        transport &= lhs == psi_t_inverse(commutator(psi_t(ea, t, r), psi_t(eb, t, r)), t, r);
    }

  const InvariantSignature gl = invariant_signature(LieAlgebra::general_linear(n));
  const InvariantSignature end =
      invariant_signature(LieAlgebra::from_param(BracketParam::normal(n, n, r)));
  const InvariantSignature here = invariant_signature(LieAlgebra::from_param(p));

  Json sweep = Json::array();
  for (const Scalar& s : {Scalar(0), Scalar(1) / Scalar(3), Scalar(1) / Scalar(2),
                          Scalar(9) / Scalar(10), Scalar(1)})
    sweep.push_back(
        {{"t", to_json(s)},
         {"signature",
          to_json(invariant_signature(LieAlgebra::from_param(deformation_bracket(n, j, s))))}});
  rep.result = {{"j_t", to_json(p.j())},
                {"signature", to_json(here)},
                {"gl_signature", to_json(gl)},
                {"endpoint_signature", to_json(end)},
                {"sweep", std::move(sweep)}};
  rep.add("decomposition_identity", decomposition);
  if (invertible) rep.add("transport_identity", transport);
  rep.add("signature", t == Scalar(1) ? here == end : here == gl);
  return rep;
}

Report cmd_coboundary(std::size_t n, const Matrix& j) {
  Report rep;
  rep.inputs = {{"n", n}, {"j", to_json(j)}};
  const CoboundaryResult r = ce_coboundary_check(j, n);
  rep.result = {{"pairs_checked", r.pairs_checked}};
  rep.add("coboundary_identity", to_json(r));
  return rep;
}

Report cmd_catalog(const std::string& name) {
  Report rep;
  rep.inputs = {{"name", name.empty() ? Json(nullptr) : Json(name)}};
  std::vector<std::string> names = name.empty() ? catalog_names() : std::vector{name};
  Json entries = Json::array();
  for (const auto& n : names) {
    const CatalogEntry e = example_catalog(n);
    entries.push_back(to_json(e));
    rep.add(n + ".jacobi", to_json(jacobi_check(e.algebra)));
  }
  rep.result = {{"entries", std::move(entries)}};
  return rep;
}

Report cmd_verify_all(std::size_t max, std::uint64_t seed, std::ostream& err) {
  Report rep;
  rep.inputs = {{"max", max}};
  rep.seed = seed;
  const AcceptanceOptions opt{max, seed};
  using Check = CriterionResult (*)(const AcceptanceOptions&);
  const Check checks[] = {check_lie_axioms,         check_center_law,
                          check_witness_soundness,  check_signature_distinctness,
                          check_heisenberg_realization, check_heisenberg_obstruction,
                          check_semidirect,         check_contraction,
                          check_deformation,        check_catalog};
  Json criteria = Json::array();
  for (Check check : checks) {
    const auto start = std::chrono::steady_clock::now();
    const CriterionResult c = check(opt);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    err << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.id << ". " << c.name << " ("
        << c.detail << ", " << elapsed.count() << " s)\n";
    criteria.push_back(
        {{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    rep.add(std::to_string(c.id) + ". " + c.name,
            verdict(c.pass, c.pass ? Json(nullptr) : Json(c.detail)));
  }
  rep.result = {{"criteria", std::move(criteria)}};
  return rep;
}

Json report_json(const std::string& command, const Report& rep) {
  Json verdicts = Json::array();
  for (const auto& [name, v] : rep.verdicts) {
    Json entry = v;
    entry["name"] = name;
    verdicts.push_back(std::move(entry));
  }
  Json out = {{"command", command},
              {"inputs", rep.inputs},
              {"result", rep.result},
              {"verdicts", std::move(verdicts)},
              {"pass", rep.pass()}};
  if (rep.seed) out["seed"] = *rep.seed;
  return out;
}

int usage_error(std::ostream& out, std::ostream& err, const std::string& command,
                const std::string& message, const std::string& help) {
  out << Json{{"command", command.empty() ? Json(nullptr) : Json(command)},
              {"error", {{"kind", "usage"}, {"message", message}}}}
             .dump(2)
      << '\n';
  err << "error: " << message << '\n';
  if (!help.empty()) err << help;
  return kExitUsage;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with the bracket [A,B]_J = AJB - BJA", "liebracket"};
  app.require_subcommand(1);

  std::size_t n = 0, m = 0, r = 0, s = 0, q = 0, max = 4;
  std::uint64_t seed = 0;
  std::string j_text, j1_text, j2_text, t_text, rep_path, name;

  auto* constants = app.add_subcommand("constants", "structure constants of (Mat(n x m), [.,.]_J)");
  constants->add_option("n", n)->required();
  constants->add_option("m", m)->required();
  constants->add_option("--j", j_text, "m x n parameter, text or @file")->required();

  auto* center_cmd = app.add_subcommand("center", "center of (Mat(n x m), [.,.]_J)");
  center_cmd->add_option("n", n)->required();
  center_cmd->add_option("m", m)->required();
  center_cmd->add_option("--j", j_text, "m x n parameter, text or @file")->required();

  auto* classify = app.add_subcommand("classify", "rank family signatures and witnesses");
  classify->add_option("n", n)->required();
  classify->add_option("m", m)->required();
  classify->add_option("--seed", seed);

  auto* witness = app.add_subcommand("witness", "isomorphism witness between two parameters");
  witness->add_option("--j1", j1_text)->required();
  witness->add_option("--j2", j2_text)->required();

  auto* heisenberg = app.add_subcommand("heisenberg", "Heisenberg realization and obstruction");
  heisenberg->add_option("n", n)->required();

  auto* semidirect = app.add_subcommand("semidirect", "semidirect model S(V1, V2)");
  semidirect->add_option("r", r)->required();
  semidirect->add_option("s", s)->required();

  auto* embed = app.add_subcommand("embed", "embed a matrix representation into Mat(n x m)");
  embed->add_option("--rep", rep_path, "representation JSON file")->required();
  embed->add_option("n", n)->required();
  embed->add_option("m", m)->required();
  embed->add_option("q", q)->required();

  auto* contract = app.add_subcommand("contract", "contraction of gl(n) to gl(n, r)");
  contract->add_option("n", n)->required();
  contract->add_option("r", r)->required();

  auto* deform = app.add_subcommand("deform", "deformation path (1 - t) I + t J_{n,r}");
  deform->add_option("n", n)->required();
  deform->add_option("r", r)->required();
  deform->add_option("--t", t_text, "rational in [0, 1]")->required();

  auto* coboundary = app.add_subcommand("coboundary", "2-coboundary identity for [.,.]_J");
  coboundary->add_option("n", n)->required();
  coboundary->add_option("--j", j_text, "n x n parameter, text or @file")->required();

  auto* catalog = app.add_subcommand("catalog", "worked examples with claimed and computed brackets");
  catalog->add_option("name", name);

  auto* verify_all = app.add_subcommand("verify-all", "run the acceptance suite");
  verify_all->add_option("--max", max);
  verify_all->add_option("--seed", seed);

  std::vector<const char*> argv{"liebracket"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    err << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    const auto subs = app.get_subcommands();
    const std::string command = subs.empty() ? "" : subs.front()->get_name();
    return usage_error(out, err, command, e.what(),
                       subs.empty() ? app.help() : subs.front()->help());
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    auto dims = [](std::initializer_list<std::size_t> xs) {
      for (std::size_t x : xs)
        if (x == 0) throw ParseError("sizes must be positive");
    };
    Report rep;
    if (sub == constants) {
      dims({n, m});
      rep = cmd_constants(n, m, matrix_arg(j_text));
    } else if (sub == center_cmd) {
      dims({n, m});
      rep = cmd_center(n, m, matrix_arg(j_text));
    } else if (sub == classify) {
      dims({n, m});
      rep = cmd_classify(n, m, seed);
    } else if (sub == witness) {
      rep = cmd_witness(matrix_arg(j1_text), matrix_arg(j2_text));
    } else if (sub == heisenberg) {
      rep = cmd_heisenberg(n);
    } else if (sub == semidirect) {
      rep = cmd_semidirect(r, s);
    } else if (sub == embed) {
      rep = cmd_embed(rep_path, n, m, q);
    } else if (sub == contract) {
      rep = cmd_contract(n, r);
    } else if (sub == deform) {
      const Scalar t = Scalar::parse(t_text);
      if (t < Scalar(0) || t > Scalar(1)) throw ParseError("t must lie in [0, 1]");
      if (r > n) throw HypothesisError("deform needs r <= n");
      dims({n});
      rep = cmd_deform(n, r, t);
    } else if (sub == coboundary) {
      dims({n});
      rep = cmd_coboundary(n, matrix_arg(j_text));
    } else if (sub == catalog) {
      rep = cmd_catalog(name);
    } else {
      dims({max});
      rep = cmd_verify_all(max, seed, err);
    }
    const Json doc = report_json(command, rep);
    out << doc.dump(2) << '\n';
    std::size_t passed = 0;
    for (const auto& [vname, v] : rep.verdicts) passed += v.at("pass").get<bool>() ? 1 : 0;
    err << command << ": " << passed << "/" << rep.verdicts.size() << " verdicts pass\n";
    return rep.pass() ? kExitPass : kExitMathFailure;
  } catch (const Error& e) {
    // Malformed or out-of-range inputs: parse failures, shape mismatches and
    // violated size hypotheses.
    return usage_error(out, err, command, e.what(), sub->help());
  }
}

}  // namespace liebracket

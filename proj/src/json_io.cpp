#include "liebracket/json_io.hpp"

#include "liebracket/errors.hpp"

namespace liebracket {

namespace {

const Json& field(const Json& j, std::string_view key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(std::string(key));
  if (it == j.end()) throw ParseError("missing field '" + std::string(key) + "'");
  return *it;
}

std::size_t index_field(const Json& j, std::string_view key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw ParseError("field '" + std::string(key) + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

Json sparse_terms(const SparseVector& v) {
  Json terms = Json::array();
  for (const auto& [k, c] : v) terms.push_back({{"k", k}, {"coef", c.to_string()}});
  return terms;
}

}  // namespace

Json to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw ParseError("expected a rational as a string or an integer");
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j) {
  const std::size_t rows = index_field(j, "rows"), cols = index_field(j, "cols");
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows)
    throw ParseError("matrix needs " + std::to_string(rows) + " rows of entries");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!entries[i].is_array() || entries[i].size() != cols)
      throw ParseError("matrix row " + std::to_string(i + 1) + " needs " +
                       std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = scalar_from_json(entries[i][k]);
  }
  return m;
}

Json to_json(const StructureConstants& sc) {
  Json brackets = Json::array();
  for (const auto& [key, terms] : sc.table())
    brackets.push_back({{"i", key.first}, {"j", key.second}, {"terms", sparse_terms(terms)}});
  return {{"dim", sc.dim()}, {"brackets", std::move(brackets)}};
}

StructureConstants constants_from_json(const Json& j) {
  StructureConstants sc(index_field(j, "dim"));
  const Json& brackets = field(j, "brackets");
  if (!brackets.is_array()) throw ParseError("'brackets' must be an array");
  for (const auto& b : brackets) {
    const std::size_t i = index_field(b, "i"), k = index_field(b, "j");
    if (i >= k) throw ParseError("bracket entries need i < j");
    SparseVector v;
    for (const auto& t : field(b, "terms")) {
      const std::size_t idx = index_field(t, "k");
      if (idx >= sc.dim()) throw ParseError("term index out of range");
      v[idx] += scalar_from_json(field(t, "coef"));
    }
    try {
      sc.set(i, k, v);
    } catch (const DimensionError& e) {
      throw ParseError(e.what());
    }
  }
  return sc;
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

Json to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& b : s.basis()) basis.push_back(to_json(b));
  return {{"dim", s.dim()}, {"basis", std::move(basis)}};
}

Json to_json(const InvariantSignature& sig) {
  return {{"dim", sig.dim},
          {"center_dim", sig.center_dim},
          {"derived_dims", sig.derived_dims},
          {"lcs_dims", sig.lcs_dims},
          {"killing_rank", sig.killing_rank},
          {"derived_center_dim", sig.derived_center_dim}};
}

Json to_json(const HomResult& h) {
  Json witness = nullptr;
  if (h.violation)
    witness = {{"a", h.violation->a},
               {"b", h.violation->b},
               {"expected", to_json(h.violation->expected)},
               {"actual", to_json(h.violation->actual)}};
  Json out = verdict(h.is_hom, std::move(witness));
  out["injective"] = h.injective;
  out["surjective"] = h.surjective;
  return out;
}

Json to_json(const JacobiResult& r) {
  if (!r.violation) return verdict(true);
  return verdict(false, {{"a", r.violation->a},
                         {"b", r.violation->b},
                         {"c", r.violation->c},
                         {"defect", to_json(r.violation->defect)}});
}

Json to_json(const ClassificationReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries)
    entries.push_back({{"r", e.r},
                       {"signature", to_json(e.signature)},
                       {"abelian", e.signature.center_dim == e.signature.dim},
                       {"sample_a", to_json(e.sample_a)},
                       {"sample_b", to_json(e.sample_b)},
                       {"witness_verified", e.witness_verified}});
  return {{"n", report.n},
          {"m", report.m},
          {"seed", report.seed},
          {"degenerate", !report.within_theorem_scope},
          {"entries", std::move(entries)},
          {"pairwise_distinct", report.pairwise_distinct}};
}

Json to_json(const LaurentScalar& x) {
  Json out = Json::array();
  for (const auto& [e, c] : x.terms()) out.push_back({{"exp", e}, {"coef", c.to_string()}});
  return out;
}

Json to_json(const EpsStructureConstants& c) {
  Json brackets = Json::array();
  for (const auto& [key, terms] : c.table()) {
    Json t = Json::array();
    for (const auto& [k, coef] : terms) t.push_back({{"k", k}, {"coef", to_json(coef)}});
    brackets.push_back({{"i", key.first}, {"j", key.second}, {"terms", std::move(t)}});
  }
  return {{"dim", c.dim()}, {"brackets", std::move(brackets)}};
}

Json to_json(const CoboundaryResult& r) {
  Json witness = nullptr;
  if (r.counterexample)
    witness = {{"a", r.counterexample->a},
               {"b", r.counterexample->b},
               {"lhs", to_json(r.counterexample->lhs)},
               {"rhs", to_json(r.counterexample->rhs)}};
  Json out = verdict(r.pass(), std::move(witness));
  out["pairs_checked"] = r.pairs_checked;
  return out;
}

Json to_json(const CatalogEntry& e) {
  Json basis = Json::array();
  for (std::size_t k = 0; k < e.basis.size(); ++k)
    basis.push_back({{"label", e.labels[k]}, {"matrix", to_json(e.basis[k])}});
  Json claims = Json::array();
  for (const auto& c : e.claims) {
    Json claim = {{"left", c.left},
                  {"right", c.right},
                  {"claimed", to_json(c.claimed)},
                  {"computed", to_json(c.computed)},
                  {"consistent", c.consistent()}};
    if (!c.note.empty()) claim["note"] = c.note;
    claims.push_back(std::move(claim));
  }
  return {{"name", e.name},
          {"description", e.description},
          {"n", e.param.n()},
          {"m", e.param.m()},
          {"j", to_json(e.param.j())},
          {"basis", std::move(basis)},
          {"constants", to_json(e.algebra.constants())},
          {"claims", std::move(claims)},
          {"has_discrepancy", e.has_discrepancy()}};
}

Json verdict(bool pass, Json witness) {
  return {{"pass", pass}, {"witness", std::move(witness)}};
}

RepCandidate rep_from_json(const Json& j) {
  StructureConstants sc = constants_from_json(field(j, "constants"));
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j.at("labels")) {
      if (!l.is_string()) throw ParseError("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    if (labels.size() != sc.dim()) throw ParseError("one label per basis element");
  }
  std::vector<Matrix> images;
  const Json& imgs = field(j, "images");
  if (!imgs.is_array() || imgs.empty()) throw ParseError("'images' must be a nonempty array");
  for (const auto& m : imgs) images.push_back(matrix_from_json(m));
  return RepCandidate(LieAlgebra(std::move(sc), std::move(labels)), std::move(images));
}

}  // namespace liebracket

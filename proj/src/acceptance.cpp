#include "liebracket/acceptance.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>

#include "liebracket/classify.hpp"
#include "liebracket/constructions.hpp"
#include "liebracket/deform.hpp"
#include "liebracket/errors.hpp"

namespace liebracket {

namespace {

// Counts checks and keeps the first failure message.
class Tally {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (!ok && !failure_) failure_ = what();
  }
  bool ok() const { return !failure_; }

  CriterionResult result(int id, std::string name) const {
    return {id, std::move(name), ok(),
            failure_ ? *failure_ : std::to_string(checks_) + " checks passed"};
  }

 private:
  std::size_t checks_ = 0;
  std::optional<std::string> failure_;
};

std::string shape(std::size_t n, std::size_t m) {
  return std::to_string(n) + "x" + std::to_string(m);
}

Matrix random_integer_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> dist(-3, 3);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

Matrix unit_from_linear(std::size_t n, std::size_t m, std::size_t k) {
  auto idx = BasisIndex::from_linear(k, m);
  return Matrix::unit(n, m, idx.row, idx.col);
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

// Runs body and turns an escaped library error into a failed check.
void guarded(Tally& tally, const std::string& where, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    tally.expect(false, [&] { return where + ": " + e.what(); });
  }
}

const std::vector<Scalar>& path_times() {
  static const std::vector<Scalar> t{Scalar(0), Scalar(1) / Scalar(3), Scalar(1) / Scalar(2),
                                     Scalar(9) / Scalar(10)};
  return t;
}

}  // namespace

CriterionResult check_lie_axioms(const AcceptanceOptions& opt) {
  Tally tally;
  std::mt19937_64 rng(opt.seed);
  for (std::size_t n = 1; n <= opt.max; ++n)
    for (std::size_t m = 1; m <= opt.max; ++m)
      for (int trial = 0; trial < 20; ++trial) {
        const BracketParam p(n, m, random_integer_matrix(rng, m, n));
        const std::string where = shape(n, m) + " trial " + std::to_string(trial);
        guarded(tally, where, [&] {
          for (std::size_t a = 0; a < n * m; ++a)
            for (std::size_t b = a; b < n * m; ++b) {
              const Matrix ea = unit_from_linear(n, m, a), eb = unit_from_linear(n, m, b);
              tally.expect(bracket(ea, eb, p) == -bracket(eb, ea, p),
                           [&] { return where + ": antisymmetry fails"; });
            }
          auto jac = jacobi_check(LieAlgebra::from_param(p));
          tally.expect(jac.pass(), [&] { return where + ": Jacobi identity fails"; });
        });
      }
  return tally.result(1, "Lie axioms");
}

CriterionResult check_center_law(const AcceptanceOptions& opt) {
  Tally tally;
  std::mt19937_64 rng(opt.seed);
  for (std::size_t n = 1; n <= opt.max; ++n)
    for (std::size_t m = 1; m <= opt.max; ++m)
      for (std::size_t r = 0; r <= std::min(n, m); ++r) {
        const std::size_t expected = (n == m && m == r) ? 1 : (n - r) * (m - r);
        const std::string where = shape(n, m) + " rank " + std::to_string(r);
        guarded(tally, where, [&] {
          for (const Matrix& j :
               {Matrix::rank_normal_form(m, n, r), random_parameter(m, n, r, rng)}) {
            const std::size_t got = center(LieAlgebra::from_param(BracketParam(n, m, j))).dim();
            tally.expect(got == expected, [&] {
              return where + ": center dim " + std::to_string(got) + ", expected " +
                     std::to_string(expected);
            });
          }
        });
      }
  return tally.result(2, "center dimension law");
}

CriterionResult check_witness_soundness(const AcceptanceOptions& opt) {
  Tally tally;
  std::mt19937_64 rng(opt.seed);
  for (std::size_t n = 1; n <= opt.max; ++n)
    for (std::size_t m = 1; m <= opt.max; ++m)
      for (std::size_t trial = 0; trial < 10; ++trial) {
        const std::size_t r = trial % (std::min(n, m) + 1);
        const std::string where = shape(n, m) + " trial " + std::to_string(trial);
        guarded(tally, where, [&] {
          Matrix j1 = random_parameter(m, n, r, rng), j2 = random_parameter(m, n, r, rng);
          IsoWitness w = iso_witness_factors(j1, j2);
          tally.expect(w.q * j2 * w.p == j1, [&] { return where + ": J != Q J' P"; });
          HomResult h = hom_check(w.map, LieAlgebra::from_param(BracketParam(n, m, j1)),
                                  LieAlgebra::from_param(BracketParam(n, m, j2)));
          tally.expect(h.is_hom && h.bijective(),
                       [&] { return where + ": witness is not a bijective hom"; });
        });
      }
  return tally.result(3, "classification soundness");
}

CriterionResult check_signature_distinctness(const AcceptanceOptions& opt) {
  Tally tally;
  for (std::size_t n = 2; n <= opt.max; ++n)
    for (std::size_t m = 2; m <= opt.max; ++m)
      guarded(tally, shape(n, m), [&] {
        ClassificationReport report = classify_rank_family(n, m, opt.seed);
        tally.expect(report.pairwise_distinct,
                     [&] { return shape(n, m) + ": signature collision across ranks"; });
        tally.expect(report.all_witnesses_verified(),
                     [&] { return shape(n, m) + ": witness failed"; });
      });
  return tally.result(4, "classification completeness proxy");
}

CriterionResult check_heisenberg_realization(const AcceptanceOptions&) {
  Tally tally;
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::string where = "n = " + std::to_string(n);
    guarded(tally, where, [&] {
      HeisenbergModel h = heisenberg_realization(n);
      const auto gens = h.generators();
      for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = 0; b < gens.size(); ++b) {
          Matrix expected(n + 2, n + 2);
          if (a < n && b == n + a) expected = h.z;
          if (b < n && a == n + b) expected = -h.z;
          tally.expect(bracket(gens[a], gens[b], h.ambient) == expected, [&] {
            return where + ": bracket of generators " + std::to_string(a) + ", " +
                   std::to_string(b);
          });
        }
      tally.expect(subalgebra_closed(LieAlgebra::from_param(h.ambient), h.span()).pass(),
                   [&] { return where + ": span not closed"; });
      std::vector<std::size_t> lcs;
      for (const auto& t : lower_central_series(h.algebra())) lcs.push_back(t.dim());
      tally.expect(lcs == std::vector<std::size_t>{2 * n + 1, 1, 0},
                   [&] { return where + ": lower central series dims"; });
    });
  }
  return tally.result(5, "Heisenberg realization");
}

CriterionResult check_heisenberg_obstruction(const AcceptanceOptions& opt) {
  Tally tally;
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> lambda(1, 3);
  for (std::size_t n = 1; n <= 3; ++n) {
    const LieAlgebra alg = heisenberg_algebra(n);
    for (std::size_t p = 1; p <= n + 1; ++p)
      for (int trial = 0; trial < 10; ++trial) {
        const std::string where = "n = " + std::to_string(n) + ", target " + std::to_string(p);
        guarded(tally, where, [&] {
          std::vector<Matrix> images;
          for (std::size_t k = 0; k < 2 * n; ++k)
            images.push_back(random_integer_matrix(rng, p, p));
          const int sign = trial % 2 == 0 ? 1 : -1;
          images.push_back(Scalar(sign * lambda(rng)) * Matrix::identity(p));
          auto report = heisenberg_obstruction(RepCandidate(alg, images));
          tally.expect(report.verdict == ObstructionVerdict::ScalarZContradiction,
                       [&] { return where + ": scalar Z not reported"; });
        });
      }
  }
  guarded(tally, "classical representation", [&] {
    auto report = heisenberg_obstruction(RepCandidate(
        heisenberg_algebra(1),
        {Matrix::unit(3, 3, 1, 2), Matrix::unit(3, 3, 2, 3), Matrix::unit(3, 3, 1, 3)}));
    tally.expect(report.verdict == ObstructionVerdict::Faithful,
                 [] { return std::string("classical 3x3 representation is not faithful"); });
  });
  return tally.result(6, "Heisenberg obstruction");
}

CriterionResult check_semidirect(const AcceptanceOptions& opt) {
  Tally tally;
  for (std::size_t r = 1; r <= opt.max; ++r)
    for (std::size_t s = 0; r + s <= opt.max; ++s) {
      const std::string where = "r = " + std::to_string(r) + ", s = " + std::to_string(s);
      guarded(tally, where, [&] {
        SemidirectModel model = semidirect_S(r, s);
        HomResult h = hom_check(model.phi, model.algebra, model.target());
        tally.expect(h.is_hom && h.bijective(),
                     [&] { return where + ": phi is not a bijective hom"; });
      });
    }
  return tally.result(7, "semidirect model");
}

CriterionResult check_contraction(const AcceptanceOptions& opt) {
  Tally tally;
  for (std::size_t n = 1; n <= opt.max; ++n)
    for (std::size_t r = 0; r <= n; ++r) {
      const std::string where = "n = " + std::to_string(n) + ", r = " + std::to_string(r);
      guarded(tally, where, [&] {
        EpsStructureConstants c = contraction_constants(n, r);
        bool nonnegative = true;
        for (const auto& [key, terms] : c.table())
          for (const auto& [k, coef] : terms) nonnegative &= *coef.min_exponent() >= 0;
        tally.expect(nonnegative, [&] { return where + ": negative eps exponent"; });
        tally.expect(contraction_limit(c) == structure_constants(BracketParam::normal(n, n, r)),
                     [&] { return where + ": limit differs from the normal form bracket"; });
      });
      for (std::size_t s = 0; s <= n; ++s)
        tally.expect(Matrix::rank_normal_form(n, n, r) * Matrix::rank_normal_form(n, n, s) ==
                         Matrix::rank_normal_form(n, n, std::min(r, s)),
                     [&] { return where + ": composition law fails"; });
    }
  return tally.result(8, "contraction");
}

CriterionResult check_deformation(const AcceptanceOptions& opt) {
  Tally tally;
  std::mt19937_64 rng(opt.seed);
  for (std::size_t n = 1; n <= opt.max; ++n) {
    const InvariantSignature gl = invariant_signature(LieAlgebra::general_linear(n));
    const Matrix id = Matrix::identity(n);
    const Matrix random_j = random_integer_matrix(rng, n, n);
    for (std::size_t r = 0; r <= n; ++r) {
      const Matrix jr = Matrix::rank_normal_form(n, n, r);
      const std::string where = "n = " + std::to_string(n) + ", r = " + std::to_string(r);
      guarded(tally, where, [&] {
        for (const Scalar& t : path_times()) {
          const BracketParam p = deformation_bracket(n, jr, t);
          const BracketParam q = deformation_bracket(n, random_j, t);
          for (std::size_t a = 0; a < n * n; ++a)
            for (std::size_t b = 0; b < n * n; ++b) {
              const Matrix ea = unit_from_linear(n, n, a), eb = unit_from_linear(n, n, b);
              const Matrix plain = commutator(ea, eb);
              tally.expect(bracket(ea, eb, p) ==
                               plain + t * bracket(ea, eb, BracketParam(jr - id)),
                           [&] { return where + ": decomposition identity"; });
              tally.expect(bracket(ea, eb, q) ==
                               plain + t * bracket(ea, eb, BracketParam(random_j - id)),
                           [&] { return where + ": decomposition identity, random j"; });
              tally.expect(
                  bracket(ea, eb, p) ==
                      psi_t_inverse(commutator(psi_t(ea, t, r), psi_t(eb, t, r)), t, r),
                  [&] { return where + ": transport identity at t = " + t.to_string(); });
            }
          tally.expect(invariant_signature(LieAlgebra::from_param(p)) == gl, [&] {
            return where + ": signature differs from gl(n) at t = " + t.to_string();
          });
        }
        const BracketParam end = deformation_bracket(n, jr, Scalar(1));
        tally.expect(invariant_signature(LieAlgebra::from_param(end)) ==
                         invariant_signature(LieAlgebra::from_param(BracketParam::normal(n, n, r))),
                     [&] { return where + ": endpoint signature"; });
        tally.expect(ce_coboundary_check(jr, n).pass(),
                     [&] { return where + ": coboundary identity"; });
      });
    }
    guarded(tally, "coboundary n = " + std::to_string(n), [&] {
      tally.expect(ce_coboundary_check(random_j, n).pass(),
                   [&] { return "coboundary identity fails for a random j, n = " +
                                std::to_string(n); });
    });
  }
  return tally.result(9, "deformation and coboundary");
}

CriterionResult check_catalog(const AcceptanceOptions&) {
  Tally tally;
  guarded(tally, "catalog", [&] {
    auto all_consistent = [&](const std::string& name) {
      auto e = example_catalog(name);
      tally.expect(!e.claims.empty() && !e.has_discrepancy(),
                   [&] { return name + ": computed brackets differ from the claims"; });
    };
    for (const char* name : {"g32_1", "heisenberg3_gl21", "column4", "mat2_full"})
      all_consistent(name);

    auto affine = example_catalog("affine2_column");
    tally.expect(affine.claims.size() == 1 && !affine.claims[0].consistent() &&
                     affine.claims[0].claimed == Matrix::unit(2, 1, 1, 1) &&
                     affine.claims[0].computed == Matrix::unit(2, 1, 2, 1),
                 [] { return std::string("affine2_column: discrepancy not flagged"); });

    auto rank1 = example_catalog("mat2_rank1");
    tally.expect(rank1.claims.size() == 3 && rank1.claims[0].consistent() &&
                     rank1.claims[1].consistent(),
                 [] { return std::string("mat2_rank1: [H,X] or [H,Y] differ"); });
    tally.expect(rank1.claims.size() == 3 && !rank1.claims[2].consistent() &&
                     rank1.claims[2].claimed.is_zero() &&
                     rank1.claims[2].computed == Matrix::unit(2, 2, 1, 1),
                 [] { return std::string("mat2_rank1: [X,Y] discrepancy not flagged"); });
  });
  return tally.result(10, "catalog fidelity");
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
  return {check_lie_axioms(opt),
          check_center_law(opt),
          check_witness_soundness(opt),
          check_signature_distinctness(opt),
          check_heisenberg_realization(opt),
          check_heisenberg_obstruction(opt),
          check_semidirect(opt),
          check_contraction(opt),
          check_deformation(opt),
          check_catalog(opt)};
}

}  // namespace liebracket

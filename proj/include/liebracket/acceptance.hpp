#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace liebracket {

struct AcceptanceOptions {
  std::size_t max = 4;  // largest n, m exercised
  std::uint64_t seed = 0;
};

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
};

CriterionResult check_lie_axioms(const AcceptanceOptions& opt);
CriterionResult check_center_law(const AcceptanceOptions& opt);
CriterionResult check_witness_soundness(const AcceptanceOptions& opt);
CriterionResult check_signature_distinctness(const AcceptanceOptions& opt);
CriterionResult check_heisenberg_realization(const AcceptanceOptions& opt);
CriterionResult check_heisenberg_obstruction(const AcceptanceOptions& opt);
CriterionResult check_semidirect(const AcceptanceOptions& opt);
CriterionResult check_contraction(const AcceptanceOptions& opt);
CriterionResult check_deformation(const AcceptanceOptions& opt);
CriterionResult check_catalog(const AcceptanceOptions& opt);

/// Criteria 1 through 10 in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt);

}  // namespace liebracket

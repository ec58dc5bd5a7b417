#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "simbasis/basis.hpp"
#include "simbasis/chamber_complex.hpp"

namespace simbasis {

enum class Visibility { visible, not_visible, degenerate };

std::string to_string(Visibility v);

// Side of e relative to the facet q of sigma, with sigma's opposite vertex on
// the inner side. Throws InputError if e is a vertex of sigma or q is not a
// facet of sigma.
Visibility facet_visible(const Simplex& facet, Label e, const Simplex& sigma, const Configuration& config);

// sigma = sum of sigma(q, e) over facets hidden from e minus the sum over
// visible facets. Facets whose hyperplane contains e give flat terms and are
// dropped (degenerate_reduced is then set).
struct ConeRelation {
  Simplex target;
  Label apex = 0;
  std::vector<Simplex> plus_terms;
  std::vector<Simplex> minus_terms;
  bool degenerate_reduced = false;
};

// Verifies the identity on chamber vectors before returning; a mismatch
// throws InternalError.
ConeRelation cone_relation(const Simplex& sigma, Label e, const ChamberComplex& complex);

bool relation_holds(const ConeRelation& relation, const ChamberComplex& complex);

// All full-dimensional simplices on an (n+2)-point support.
struct FSet {
  std::vector<Label> support;  // sorted
  std::vector<Simplex> members;

  bool contains(const Simplex& s) const;
};

// Throws InputError unless the support has n+2 distinct labels spanning the
// space.
FSet f_set(std::vector<Label> support, const Configuration& config);

struct ExpressionStep {
  Simplex simplex;
  FSet f;
};

struct ExpressionTrace {
  Simplex target;
  std::vector<ExpressionStep> steps;
};

// Default budget: |Sigma| * (n + 2).
std::size_t default_step_budget(const ChamberComplex& complex);

// Rewrites sigma into B by one-step moves, recursing through the same
// projections that built B. Throws InputError if sigma is not in Sigma and
// InternalError if the budget is exceeded.
ExpressionTrace express_in_basis(const Simplex& sigma, const BasisPair& pair, const ChamberComplex& complex,
                                 std::optional<std::size_t> max_steps = std::nullopt);

struct TraceCheck {
  bool ok = true;
  std::optional<std::size_t> failing_step;
  std::string reason;
};

// Replays the one-step inclusion conditions and checks that each F-set
// carries a single linear dependence that really expresses the step simplex.
TraceCheck verify_trace(const ExpressionTrace& trace, const BasisPair& pair, const ChamberComplex& complex);

// Dimension of the space of linear dependences among the chamber vectors of
// the members of f.
std::size_t dependence_dimension(const FSet& f, const ChamberComplex& complex);

}  // namespace simbasis

#include "simbasis/relations.hpp"

#include <algorithm>
#include <set>

#include "simbasis/combinatorics.hpp"
#include "simbasis/errors.hpp"
#include "simbasis/linalg.hpp"

namespace simbasis {

std::string to_string(Visibility v) {
  switch (v) {
    case Visibility::visible: return "visible";
    case Visibility::not_visible: return "not-visible";
    case Visibility::degenerate: return "degenerate";
  }
  return "?";
}

Visibility facet_visible(const Simplex& facet, Label e, const Simplex& sigma, const Configuration& config) {
  if (!config.is_simplex(sigma)) throw InputError(to_string(sigma) + " is not a simplex of E");
  if (!config.has_label(e)) throw InputError("unknown label " + std::to_string(e));
  if (sigma.contains(e)) throw InputError("point " + std::to_string(e) + " is a vertex of " + to_string(sigma));
  if (facet.vertices.size() != config.dim()) throw InputError(to_string(facet) + " is not a facet");
  std::vector<Label> rest;
  for (Label l : sigma.vertices) {
    if (!facet.contains(l)) rest.push_back(l);
  }
  for (Label l : facet.vertices) {
    if (!sigma.contains(l)) throw InputError(to_string(facet) + " is not a facet of " + to_string(sigma));
  }
  const auto h = affine_hull_hyperplane(config.vertices(facet));
  if (!h) throw InternalError("facet of a simplex is affinely dependent");
  const int opposite = h->side(config.at(rest.front()));
  const int side = h->side(config.at(e));
  if (side == 0) return Visibility::degenerate;
  return side == opposite ? Visibility::not_visible : Visibility::visible;
}

bool relation_holds(const ConeRelation& relation, const ChamberComplex& complex) {
  const auto target = complex.row_of(relation.target);
  std::vector<long> sum(target.size(), 0);
  for (const auto& s : relation.plus_terms) {
    const auto r = complex.row_of(s);
    for (std::size_t i = 0; i < r.size(); ++i) sum[i] += r[i];
  }
  for (const auto& s : relation.minus_terms) {
    const auto r = complex.row_of(s);
    for (std::size_t i = 0; i < r.size(); ++i) sum[i] -= r[i];
  }
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (sum[i] != target[i]) return false;
  }
  return true;
}

ConeRelation cone_relation(const Simplex& sigma, Label e, const ChamberComplex& complex) {
  const auto& config = complex.config;
  ConeRelation rel{sigma, e, {}, {}, false};
  for (Label drop : sigma.vertices) {
    std::vector<Label> q;
    for (Label l : sigma.vertices) {
      if (l != drop) q.push_back(l);
    }
    const Simplex facet(q);
    const auto vis = facet_visible(facet, e, sigma, config);
    q.push_back(e);
    const Simplex term(q);
    switch (vis) {
      case Visibility::not_visible: rel.plus_terms.push_back(term); break;
      case Visibility::visible: rel.minus_terms.push_back(term); break;
      case Visibility::degenerate: rel.degenerate_reduced = true; break;
    }
  }
  std::sort(rel.plus_terms.begin(), rel.plus_terms.end());
  std::sort(rel.minus_terms.begin(), rel.minus_terms.end());
  if (!relation_holds(rel, complex)) {
    throw InternalError("cone relation for " + to_string(sigma) + " and " + std::to_string(e) +
                        " fails on chamber vectors");
  }
  return rel;
}

bool FSet::contains(const Simplex& s) const {
  return std::binary_search(members.begin(), members.end(), s);
}

FSet f_set(std::vector<Label> support, const Configuration& config) {
  std::sort(support.begin(), support.end());
  const std::size_t n = config.dim();
  if (support.size() != n + 2 || std::adjacent_find(support.begin(), support.end()) != support.end()) {
    throw InputError("an F-set needs n+2 distinct labels");
  }
  for (Label l : support) {
    if (!config.has_label(l)) throw InputError("unknown label " + std::to_string(l));
  }
  FSet f{support, {}};
  for_each_combination(support.size(), n + 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<Label> labels;
    for (auto i : idx) labels.push_back(support[i]);
    Simplex s(labels);
    if (config.is_simplex(s)) f.members.push_back(std::move(s));
    return true;
  });
  if (f.members.empty()) throw InputError("F-set support does not span the space");
  std::sort(f.members.begin(), f.members.end());
  return f;
}

std::size_t default_step_budget(const ChamberComplex& complex) {
  return complex.simplices.simplices.size() * (complex.config.dim() + 2);
}

namespace {

// Expression engine for one level of the construction. `available` holds
// the level's basis plus everything derived so far; `steps` is the trace.
class Expressor {
 public:
  Expressor(const BasisLevel& level, std::optional<std::size_t> budget)
      : level_(level), available_(level.simplex_set()), budget_(budget) {}

  void express(const Simplex& sigma) {
    if (available_.count(sigma)) return;
    if (level_.dim() == 1) {
      express_on_line(sigma);
    } else {
      express_by_projection(sigma);
    }
    if (!available_.count(sigma)) throw InternalError("expression did not reach " + to_string(sigma));
  }

  std::vector<ExpressionStep> take_steps() { return std::move(steps_); }

 private:
  void push(Simplex s, std::vector<Label> support) {
    if (available_.count(s)) return;
    if (budget_ && steps_.size() >= *budget_) throw InternalError("expression exceeded the step budget");
    auto f = f_set(std::move(support), level_.config);
    if (!f.contains(s)) throw InternalError("step simplex outside its F-set");
    available_.insert(s);
    steps_.push_back({std::move(s), std::move(f)});
  }

  // On a line the basis is the chain of consecutive pairs; walk outward
  // from the earlier endpoint.
  void express_on_line(const Simplex& sigma) {
    const auto& order = level_.order;
    std::size_t a = order.position(sigma.vertices[0]);
    std::size_t b = order.position(sigma.vertices[1]);
    if (a > b) std::swap(a, b);
    const Label first = order.at(a);
    for (std::size_t m = a + 2; m <= b; ++m) {
      push(Simplex{first, order.at(m)}, {first, order.at(m - 1), order.at(m)});
    }
  }

  void express_by_projection(const Simplex& sigma) {
    const auto& order = level_.order;
    std::size_t k = SIZE_MAX;
    for (Label l : sigma.vertices) k = std::min(k, order.position(l));
    if (k == 0 || k > level_.step_count()) throw InternalError("simplex beyond the last shelling step");
    const auto& pc = level_.projections[k - 1];
    const Label apex = pc.apex;

    std::vector<Label> projected;
    for (Label l : sigma.vertices) {
      if (l != apex) projected.push_back(pc.projected_of.at(l));
    }
    const Simplex shadow(projected);

    // Express the projection inside H_k, then lift every step. The lifted
    // F-set has one member without the apex; it lies entirely after e_k and
    // must be expressed first.
    Expressor inner(level_.sublevels[k - 1], std::nullopt);
    inner.express(shadow);
    for (auto& step : inner.take_steps()) {
      std::vector<Label> lifted{apex};
      for (Label l : step.f.support) lifted.push_back(pc.nearest(l));
      express_if_simplex(without(lifted, apex));
      push(mu_lift(step.simplex, pc), lifted);
    }

    Simplex current = mu_lift(shadow, pc);
    if (!available_.count(current)) throw InternalError("lifted projection not available");
    // Slide each vertex along its ray from the nearest point to the actual one.
    for (Label v : sigma.vertices) {
      if (v == apex) continue;
      const Label m = pc.nearest(pc.projected_of.at(v));
      if (m == v) continue;
      std::vector<Label> support = current.vertices;
      support.push_back(v);
      express_if_simplex(without(support, apex));
      std::vector<Label> next;
      for (Label l : current.vertices) next.push_back(l == m ? v : l);
      Simplex swapped(next);
      push(swapped, support);
      current = std::move(swapped);
    }
    if (current != sigma) throw InternalError("vertex slide did not reach " + to_string(sigma));
  }

  void express_if_simplex(const std::vector<Label>& labels) {
    Simplex s(labels);
    if (level_.config.is_simplex(s)) express(s);
  }

  static std::vector<Label> without(std::vector<Label> labels, Label drop) {
    labels.erase(std::remove(labels.begin(), labels.end(), drop), labels.end());
    return labels;
  }

  const BasisLevel& level_;
  std::set<Simplex> available_;
  std::vector<ExpressionStep> steps_;
  std::optional<std::size_t> budget_;
};

}  // namespace

ExpressionTrace express_in_basis(const Simplex& sigma, const BasisPair& pair, const ChamberComplex& complex,
                                 std::optional<std::size_t> max_steps) {
  if (!complex.config.is_simplex(sigma)) throw InputError(to_string(sigma) + " is not a simplex of E");
  Expressor ex(pair.construction, max_steps ? max_steps : default_step_budget(complex));
  ex.express(sigma);
  return {sigma, ex.take_steps()};
}

namespace {

std::vector<RationalVector> dependence_space(const FSet& f, const ChamberComplex& complex) {
  std::vector<std::vector<std::uint8_t>> rows;
  for (const auto& s : f.members) rows.push_back(complex.row_of(s));
  // One equation per chamber; identical equations are dropped.
  std::set<RationalVector> constraints;
  for (std::size_t c = 0; c < complex.matrix.cols(); ++c) {
    RationalVector eq;
    for (const auto& r : rows) eq.emplace_back(r[c]);
    constraints.insert(std::move(eq));
  }
  return null_space(RationalMatrix(constraints.begin(), constraints.end()), rows.size());
}

}  // namespace

std::size_t dependence_dimension(const FSet& f, const ChamberComplex& complex) {
  return dependence_space(f, complex).size();
}

TraceCheck verify_trace(const ExpressionTrace& trace, const BasisPair& pair, const ChamberComplex& complex) {
  auto available = pair.simplex_set();
  auto fail = [](std::optional<std::size_t> step, std::string why) { return TraceCheck{false, step, std::move(why)}; };
  if (available.count(trace.target)) {
    if (!trace.steps.empty()) return fail(0, "target is already in B");
    return {};
  }
  if (trace.steps.empty()) return fail(std::nullopt, "empty trace for a simplex outside B");
  for (std::size_t t = 0; t < trace.steps.size(); ++t) {
    const auto& step = trace.steps[t];
    FSet expected;
    try {
      expected = f_set(step.f.support, complex.config);
    } catch (const InputError& e) {
      return fail(t, e.what());
    }
    if (expected.members != step.f.members) return fail(t, "F-set members do not match its support");
    if (!step.f.contains(step.simplex)) return fail(t, "step simplex not in its F-set");
    if (available.count(step.simplex)) return fail(t, "step re-derives an available simplex");
    for (const auto& m : step.f.members) {
      if (m != step.simplex && !available.count(m)) {
        return fail(t, "member " + to_string(m) + " not yet available");
      }
    }
    const auto kernel = dependence_space(step.f, complex);
    if (kernel.size() != 1) return fail(t, "F-set dependence space has dimension " + std::to_string(kernel.size()));
    const auto pos = static_cast<std::size_t>(
        std::lower_bound(step.f.members.begin(), step.f.members.end(), step.simplex) - step.f.members.begin());
    if (kernel.front()[pos] == 0) return fail(t, "dependence does not involve the step simplex");
    available.insert(step.simplex);
  }
  if (trace.steps.back().simplex != trace.target) return fail(trace.steps.size() - 1, "trace ends elsewhere");
  return {};
}

}  // namespace simbasis

#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "simbasis/chamber_complex.hpp"
#include "simbasis/configuration.hpp"
#include "simbasis/projection.hpp"

namespace simbasis {

// One simplex of the recursive construction, before a chamber is attached.
struct LevelElement {
  Simplex simplex;
  // Shelling positions (k, k1, k2, ...) of the nested construction, one per
  // dimension above 1.
  std::vector<std::size_t> depth_path;
  Label apex = 0;                    // e_k, the l-earliest vertex
  std::optional<Label> edge_target;  // mu-image of the recursive construction vertex (n >= 3)
};

// The construction for one point set: the top configuration or a projected
// configuration inside some H_k. Keeps every projection and sub-construction
// so expressions can be replayed through the same recursion.
struct BasisLevel {
  Configuration config;
  ShellingOrder order;
  std::vector<LevelElement> elements;
  std::vector<ProjectedConfiguration> projections;  // entry k-1 for k = 1..N-dim
  std::vector<BasisLevel> sublevels;                // constructions inside each H_k

  std::size_t dim() const { return config.dim(); }
  std::size_t step_count() const { return projections.size(); }
  std::set<Simplex> simplex_set() const;
};

// Planar construction: for each e_k, fan the later points by angle, merge
// collinear rays keeping the nearest point, and pair neighbouring rays.
std::vector<LevelElement> build_basis_2d(const Configuration& config, const ShellingOrder& order);

// Any dimension >= 1; the configuration may be relaxed (small or flat), in
// which case the construction is simply empty.
BasisLevel build_level(const Configuration& config, const ShellingOrder& order);

enum class TieBreak { lex, reverse_lex };

struct ChamberChoice {
  std::size_t chamber = 0;
  std::size_t candidates = 0;
};

// Among chambers inside `simplex` whose closure contains the apex (and, when
// given, an initial piece of the edge from the apex to edge_target), pick the
// one with the smallest (or largest, for reverse_lex) representative.
// Throws InternalError on an empty candidate set.
ChamberChoice select_chamber(const Simplex& simplex, Label apex, std::optional<Label> edge_target,
                             const ChamberComplex& complex, TieBreak tie_break = TieBreak::lex);

struct BasisElement {
  Simplex simplex;
  std::size_t chamber = 0;
  std::vector<std::size_t> depth_path;
  Label apex = 0;
  std::optional<Label> edge_target;
  std::size_t candidates = 0;  // chambers satisfying the selection rules
};

struct BasisPair {
  std::vector<BasisElement> elements;  // ordered by (depth_path, simplex)
  BasisLevel construction;

  std::size_t size() const { return elements.size(); }
  std::set<Simplex> simplex_set() const;
};

BasisPair build_basis(const ChamberComplex& complex, const ShellingOrder& order,
                      TieBreak tie_break = TieBreak::lex);
BasisPair build_basis(const ChamberComplex& complex, TieBreak tie_break = TieBreak::lex);

}  // namespace simbasis

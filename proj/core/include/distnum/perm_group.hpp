#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "distnum/errors.hpp"
#include "distnum/perm.hpp"

namespace distnum {

using uint128 = unsigned __int128;

std::string to_decimal_string(uint128 v);

// Stabilizer chain (base and strong generating set) built with the
// deterministic Schreier-Sims procedure. No randomization anywhere, so
// identical inputs give identical chains.
class StabChain {
public:
  struct Level {
    Point base = 0;
    std::vector<Perm> own_gens;        // strong generators assigned here
    std::vector<Point> orbit;          // discovery order, orbit[0] == base
    std::vector<std::int32_t> where;   // point -> index into orbit, or -1
    std::vector<Perm> transversal;     // u with base^u = orbit[i]
    std::vector<Perm> transversal_inv;
  };

  StabChain() = default;

  // forced_base, when nonempty, prescribes the base sequence; levels are
  // created for every listed point in order (redundant levels allowed).
  StabChain(std::size_t degree, const std::vector<Perm>& generators,
            const std::vector<Point>& forced_base = {});

  std::size_t degree() const { return degree_; }
  std::size_t num_levels() const { return levels_.size(); }
  const Level& level(std::size_t i) const { return levels_[i]; }

  uint128 order() const;

  // Adds a new group element, extending the chain if it enlarges the group.
  void insert(const Perm& g);

  bool contains(const Perm& g) const;

  // Sifts g through levels [from, end); returns the residue and the level
  // index where sifting stopped (== num_levels() on full sift).
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from = 0) const;

  // Generators of the level-i subgroup: own_gens of all levels >= i.
  std::vector<Perm> level_generators(std::size_t from) const;

  // Orbit partition of the level-i subgroup: orbit id per point.
  std::vector<std::uint32_t> level_orbit_ids(std::size_t from) const;

  // Enumerates every element (deterministic order). Throws budget_exceeded
  // if the order exceeds max_elements.
  void for_each_element(const std::function<void(const Perm&)>& fn,
                        std::uint64_t max_elements) const;

  Perm random_element(std::mt19937_64& rng) const;

private:
  std::size_t degree_ = 0;
  std::vector<Point> forced_base_;
  std::vector<Level> levels_;
  // (orbit index, gen index) watermarks for Schreier generators already
  // examined at each level; pairs below the watermark never need retesting
  // because orbits only ever extend.
  std::vector<std::pair<std::size_t, std::size_t>> tested_;

  void create_level(const Perm& witness);
  void extend_orbit(std::size_t lvl);
  std::vector<const Perm*> effective_gens(std::size_t lvl) const;
  bool process_level(std::size_t lvl, std::size_t& added_at);
  void complete_from(std::size_t lvl);
};

// Immutable permutation group: generators plus an eagerly built stabilizer
// chain. Safe for concurrent shared reads after construction.
class PermGroup {
public:
  PermGroup() : PermGroup(0, {}) {}
  PermGroup(std::size_t degree, std::vector<Perm> generators);

  static PermGroup trivial(std::size_t degree);
  static PermGroup symmetric(std::size_t degree);
  static PermGroup cyclic(std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const StabChain& chain() const { return chain_; }

  uint128 order() const { return chain_.order(); }
  std::uint64_t order_u64() const;
  bool is_trivial() const { return order() == 1; }

  bool contains(const Perm& g) const { return chain_.contains(g); }

  std::vector<Point> orbit_of(Point x) const;
  std::vector<std::uint32_t> orbit_ids() const;  // orbit id per point
  bool is_transitive() const;

  Perm random_element(std::mt19937_64& rng) const {
    return chain_.random_element(rng);
  }

  void for_each_element(const std::function<void(const Perm&)>& fn,
                        std::uint64_t max_elements = 1'000'000) const {
    chain_.for_each_element(fn, max_elements);
  }

private:
  std::size_t degree_;
  std::vector<Perm> gens_;
  StabChain chain_;
};

// Subgroup {g in group : labels[x^g] == labels[x] for all x}, found by
// chain-pruned backtracking (never by element enumeration).
PermGroup label_stabilizer(const PermGroup& group,
                           const std::vector<std::uint32_t>& labels,
                           SearchBudget& budget);

// Setwise stabilizer of s.
PermGroup setwise_stabilizer(const PermGroup& group, const std::vector<Point>& s,
                             SearchBudget& budget);

// True iff some non-identity element of group preserves all labels.
// Equivalent to !label_stabilizer(...).is_trivial() but stops at the first
// witness.
std::optional<Perm> find_nonidentity_preserving(
    const PermGroup& group, const std::vector<std::uint32_t>& labels,
    SearchBudget& budget);

// Image of the group on cells 0..k-1 plus the kernel fixing every cell
// setwise. The partition must be group-invariant (checked on generators).
struct InducedAction {
  PermGroup image;
  PermGroup kernel;
};
InducedAction induced_action(const PermGroup& group,
                             const std::vector<std::vector<Point>>& cells,
                             SearchBudget& budget);

// Group on 0..|points|-1 generated by the restrictions of the generators.
// Every generator must fix `points` setwise.
PermGroup restriction(const PermGroup& group, const std::vector<Point>& points);

}  // namespace distnum

#pragma once

// Fixtures, random instance generators and brute-force oracles shared by
// the unit tests and the acceptance suite.  Oracles use only the data
// structures of the library, never its algorithms.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <ckrv/arena.hpp>
#include <ckrv/formula.hpp>
#include <ckrv/objectives.hpp>
#include <ckrv/reductions.hpp>

namespace ckrv::test
{
  using Rng = std::mt19937_64;

  /// Triangle v0 v1 v2, player p owns v<p>.  Successors are listed
  /// right neighbour (v<p-1>) first, so digit 0 = R, digit 1 = L.
  Arena triangle();
  Arena self_loop();
  /// O_p = Büchi({v<p+1>}).
  ObjectiveProfile alpha(const Arena& a);
  /// O_p = Büchi({v<p>}).
  ObjectiveProfile alpha_prime(const Arena& a);

  /// Profile from "from->to" pairs; unnamed vertices take their first
  /// successor.
  PositionalProfile profile(const Arena& a,
                            std::vector<std::pair<std::string, std::string>> choice);
  /// Profile of the triangle from a word over {R, L}, one letter per player.
  PositionalProfile rl(const Arena& a, std::string_view word);

  Formula parse(const Arena& a, std::string_view text);
  Formula parse_over(const std::vector<std::string>& names, std::string_view text);

  Formula random_formula(Rng& rng, std::uint32_t atoms, int depth);
  /// Random arena with at most \a max_vertices vertices, at most
  /// \a max_players players and at most \a max_profiles positional profiles.
  Arena random_arena(Rng& rng, std::size_t max_vertices, std::size_t max_players,
                     std::uint64_t max_profiles);
  /// Random Muller condition: each Inf-set realised by some profile wins
  /// with probability 1/2, written as a disjunction of exact Inf-sets.
  Formula random_muller(Rng& rng, const Arena& a);
  /// Mix of random formulas, random Muller conditions, Büchi targets and
  /// complements of earlier
  /// players' objectives.
  ObjectiveProfile random_objectives(Rng& rng, const Arena& a, int depth = 2);

  /// Formulas over \a vars atoms built from atoms with !, &, | up to
  /// \a depth, one per truth table.
  std::vector<Formula> formulas_by_truth_table(std::uint32_t vars, int depth);

  namespace oracle
  {
    /// Every positional profile, by recursive product over vertices.
    std::vector<PositionalProfile> all_profiles(const Arena& a);

    /// Vertices visited at least 2|V| times in a 4|V|²-step run.
    std::vector<bool> simulate_inf(const Arena& a, const std::vector<VertexId>& next);
    /// Direct walk over the formula tree.
    bool eval(const Formula& f, const std::vector<bool>& value);
    bool wins(const Arena& a, const ObjectiveProfile& o,
              const std::vector<VertexId>& next, PlayerId p);
    /// Profiles equal to \a s outside V_p, including \a s itself.
    std::vector<PositionalProfile> deviations(const Arena& a,
                                              const PositionalProfile& s, PlayerId p);
    bool is_nash(const Arena& a, const ObjectiveProfile& o, const PositionalProfile& s);
    bool has_winning_strategy(const Arena& a, const ObjectiveProfile& o, PlayerId p);

    using Relation = std::vector<std::vector<bool>>;
    /// R_p as a boolean matrix from class labels.
    Relation relation(const std::vector<std::size_t>& labels);
    std::vector<bool> know(const Relation& r, const std::vector<bool>& e);
    std::vector<bool> mutual_know(const std::vector<Relation>& rs, const std::vector<bool>& e);
    /// Greatest fixpoint of X ↦ MK(X) below MK(E).
    std::vector<bool> common_know(const std::vector<Relation>& rs, const std::vector<bool>& e);

    /// Def. of strong rationality checked literally on explicit relations.
    std::vector<bool> rational(const Arena& a, const ObjectiveProfile& o,
                               const std::vector<Relation>& rs,
                               const std::vector<PositionalProfile>& sigma);
    /// Worlds in CK RAT.
    std::vector<bool> ck_rat(const Arena& a, const ObjectiveProfile& o,
                             const std::vector<Relation>& rs,
                             const std::vector<PositionalProfile>& sigma);

    /// Unpruned T_P membership: all sequences σ : W → Pos for |W| ≤ bound
    /// and all partitions per player satisfying the consistency condition.
    bool in_T_P(const Arena& a, const ObjectiveProfile& o,
                const PositionalProfile& target, std::size_t bound);

    /// Truth of a prenex QBF by recursion on the prefix.
    bool qbf(const QbfInstance& q);
  }
}

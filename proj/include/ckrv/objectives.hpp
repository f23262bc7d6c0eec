#pragma once

#include <span>
#include <vector>

#include <ckrv/arena.hpp>
#include <ckrv/formula.hpp>

namespace ckrv
{
  /// One Muller objective per player, indexed by PlayerId.
  struct ObjectiveProfile
  {
    std::vector<Formula> objective;

    std::size_t size() const noexcept { return objective.size(); }
    const Formula& operator[](PlayerId p) const { return objective[p]; }

    friend bool operator==(const ObjectiveProfile&,
                           const ObjectiveProfile&) = default;
  };

  /// Büchi(U) as the Muller formula ⋁_{u∈U} u.  Throws UnknownVertex when
  /// a target is not a vertex of \a arena.
  Formula buchi_to_muller(const Arena& arena, std::span<const VertexId> targets);

  /// Throws UnknownVertex if an atom of \a f is not a vertex of \a arena.
  void check_formula(const Arena& arena, const Formula& f);

  /// Throws UnknownPlayer / UnknownVertex unless \a objectives matches the
  /// arena's players and vertices.
  void check_objectives(const Arena& arena, const ObjectiveProfile& objectives);

  /// Truth of \a f under θ(v) = (v ∈ Inf(lasso)).
  bool eval_muller(const Formula& f, const Lasso& lasso);

  /// Players whose objective holds on the outcome of \a profile, ascending.
  std::vector<PlayerId> winners(const Arena& arena,
                                const ObjectiveProfile& objectives,
                                const PositionalProfile& profile);
}

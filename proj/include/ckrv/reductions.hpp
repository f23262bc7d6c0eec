#pragma once

#include <string>
#include <vector>

#include <ckrv/arena.hpp>
#include <ckrv/formula.hpp>
#include <ckrv/objectives.hpp>

namespace ckrv
{
  enum class Quantifier { ForAll, Exists };

  struct QuantifierBlock
  {
    Quantifier quantifier = Quantifier::Exists;
    std::vector<std::string> variables;
  };

  /// \brief Prenex QBF.  Matrix atoms index the variables of all blocks,
  /// concatenated outermost first.
  struct QbfInstance
  {
    std::vector<QuantifierBlock> prefix;
    Formula matrix;

    std::vector<std::string> variables() const;
  };

  /// A verification instance: arena, objectives and specification.
  struct Instance
  {
    Arena arena;
    ObjectiveProfile objectives;
    Formula spec;
  };

  /// Player numbering of the two-player reduction arenas.
  inline constexpr PlayerId kPlayerA = 0;
  inline constexpr PlayerId kPlayerE = 1;

  /// ∀x₁…xₙ ∃y₁…yₘ ψ  ↦  chain arena with O_A = true, O_E = ψ, spec ψ.
  /// Throws PrefixShapeMismatch unless the prefix is exactly one non-empty
  /// ∀-block followed by one non-empty ∃-block.
  Instance build_aesat_instance(const QbfInstance& qbf);

  /// ∃y₁…yₘ ∀x₁…xₙ ψ  ↦  same arena, O_A = ¬ψ, O_E = ψ, spec ψ.
  Instance build_easat_instance(const QbfInstance& qbf);

  /// φ over x₁…xₙ (atoms 0 … n-1)  ↦  one-player chain with O = φ and
  /// spec ¬φ.  Throws InvalidBound when n = 0.
  Instance build_sat_instance(const Formula& phi, std::size_t variables);

  inline constexpr std::size_t kMaxQbfVariables = 20;

  /// Truth of \a qbf by full expansion.  Throws TooManyVariables above
  /// kMaxQbfVariables.
  bool qbf_eval(const QbfInstance& qbf);
}

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <ckrv/epistemic.hpp>
#include <ckrv/strategy.hpp>

namespace ckrv
{
  /// One profile deleted by IDIP, with the (player, strategy) showing it
  /// inferior.
  struct IdipRemoval
  {
    ProfileIndex profile = 0;
    DeviationIndex witness;
  };

  struct IdipRound
  {
    /// |Tⁱ| at the start of the round.
    std::size_t pool_size = 0;
    std::vector<IdipRemoval> removed;
  };

  struct IdipResult
  {
    /// T∞, ascending.
    std::vector<ProfileIndex> survivors;
    /// Every round removes something except the last.
    std::vector<IdipRound> rounds;

    bool contains(ProfileIndex i) const;
  };

  /// First (player, strategy) for which \a profile is inferior relative to
  /// \a pool (sorted, containing \a profile):
  ///  1. the player loses under the profile and wins after deviating, and
  ///  2. on every pool member agreeing with the profile on her component,
  ///     deviating never turns a win into a loss.
  std::optional<DeviationIndex> is_inferior(const Game& game,
                                            std::span<const ProfileIndex> pool,
                                            ProfileIndex profile);

  /// Iterated deletion of inferior profiles from Pos, removing every
  /// inferior profile of a round at once, until nothing is inferior.
  IdipResult idip(const Game& game);

  /// Epistemic model and one of its worlds, the world lying in CK RAT.
  struct Certificate
  {
    EpistemicModel model;
    WorldId world = 0;
  };

  struct CkrMembership
  {
    bool member = false;
    /// False when a negative answer only means "not found" (canonical
    /// search).
    bool conclusive = true;
    std::optional<Certificate> certificate;
    std::uint64_t models_searched = 0;
  };

  /// Membership in T∞, certified by the canonical model M(T∞).
  CkrMembership in_T(const Game& game, const IdipResult& fixpoint,
                     ProfileIndex profile);
  CkrMembership in_T(const Game& game, ProfileIndex profile);

  enum class SearchMode { Exact, CanonicalOnly };

  inline constexpr std::uint64_t kDefaultSearchCap = std::uint64_t{1} << 22;

  struct BoundedSearch
  {
    std::size_t world_bound = 1;
    SearchMode mode = SearchMode::Exact;
    /// Candidate models enumerated per query before CountOverflow.
    std::uint64_t search_cap = kDefaultSearchCap;
    /// Skip models with two indistinguishable identical worlds and models
    /// that are not R⁺-connected; both are covered by smaller models.
    bool prune = true;
  };

  /// |V|·|P|, the bound used when none is given.
  std::size_t default_world_bound(const Arena& arena);

  /// Membership in T_P: some epistemic model with at most world_bound
  /// worlds has a world in CK RAT labelled \a profile.
  ///
  /// Exact mode enumerates assignments σ : W → Pos (as multisets) and, per
  /// player, every partition refining equality of σ_p.  Canonical mode only
  /// tries M(X) for X ∋ profile, |X| ≤ world_bound; its negative answers
  /// are inconclusive.  Throws InvalidBound for a zero bound and
  /// CountOverflow past search_cap.
  CkrMembership in_T_P(const Game& game, ProfileIndex profile,
                       const BoundedSearch& search);

  /// Recheck a certificate from scratch: the world is labelled \a profile
  /// and lies in CK RAT of the certificate's model.
  bool check_certificate(const Game& game, const Certificate& certificate,
                         ProfileIndex profile);
}

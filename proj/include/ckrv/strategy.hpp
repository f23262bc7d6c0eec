#pragma once

#include <cstdint>
#include <optional>
#include <ranges>
#include <vector>

#include <ckrv/arena.hpp>
#include <ckrv/objectives.hpp>

namespace ckrv
{
  /// Position of a profile in the lexicographic enumeration of Pos.
  using ProfileIndex = std::uint64_t;
  /// Position of a strategy in the lexicographic enumeration of Pos_p.
  using StrategyIndex = std::uint64_t;

  inline constexpr std::uint64_t kDefaultProfileCap = std::uint64_t{1} << 24;

  /// \brief Mixed-radix numbering of the positional profiles of an arena.
  ///
  /// Vertex 0 is the most significant digit and each digit is a position
  /// in the successor list, so index order is the lexicographic order of
  /// per-vertex choices.  Strategies of one player are numbered the same
  /// way over the vertices she owns, which makes the p-component of a
  /// profile and the deviation s[p ↦ t] plain digit arithmetic.
  class ProfileSpace
  {
  public:
    /// Throws CountOverflow when |Pos| exceeds \a cap.
    explicit ProfileSpace(const Arena& arena,
                          std::uint64_t cap = kDefaultProfileCap);

    std::uint64_t size() const noexcept { return size_; }
    std::size_t player_count() const noexcept { return owned_.size(); }
    std::uint64_t strategy_count(PlayerId p) const { return strategies_[p]; }

    PositionalProfile profile(ProfileIndex i) const;
    /// Successor of every vertex, written into \a next (resized).
    void decode(ProfileIndex i, std::vector<VertexId>& next) const;
    ProfileIndex index_of(const PositionalProfile& profile) const;

    PositionalStrategy strategy(PlayerId p, StrategyIndex s) const;
    StrategyIndex index_of(const PositionalStrategy& strategy) const;

    /// Index of the p-component of profile \a i within Pos_p.
    StrategyIndex strategy_of(ProfileIndex i, PlayerId p) const;
    /// Index of s[p ↦ t].
    ProfileIndex deviate(ProfileIndex i, PlayerId p, StrategyIndex t) const;

  private:
    std::uint64_t digit(ProfileIndex i, VertexId v) const
    {
      return (i / stride_[v]) % succ_[v].size();
    }
    std::uint64_t part(PlayerId p, StrategyIndex s) const;

    std::vector<std::vector<VertexId>> succ_;
    std::vector<std::vector<VertexId>> owned_;
    std::vector<std::uint64_t> stride_;
    std::vector<std::uint64_t> local_stride_;
    std::vector<std::uint64_t> strategies_;
    std::uint64_t size_ = 1;
  };

  /// Lazily decoded range over every positional profile, in enumeration
  /// order.  Throws CountOverflow up front when |Pos| exceeds \a cap.
  inline auto enumerate_profiles(const Arena& arena,
                                 std::uint64_t cap = kDefaultProfileCap)
  {
    ProfileSpace space(arena, cap);
    const auto n = space.size();
    return std::views::iota(ProfileIndex{0}, n)
      | std::views::transform([space = std::move(space)](ProfileIndex i) {
          return space.profile(i);
        });
  }

  /// \brief Arena and objectives with the winners of every profile
  /// precomputed.
  ///
  /// All exhaustive procedures (Nash, IDIP, model search) work on profile
  /// indices against this table.
  class Game
  {
  public:
    Game(Arena arena, ObjectiveProfile objectives,
         std::uint64_t cap = kDefaultProfileCap);

    const Arena& arena() const noexcept { return arena_; }
    const ObjectiveProfile& objectives() const noexcept { return objectives_; }
    const ProfileSpace& space() const noexcept { return space_; }
    std::uint64_t size() const noexcept { return space_.size(); }
    std::size_t player_count() const noexcept { return arena_.player_count(); }

    bool wins(ProfileIndex i, PlayerId p) const
    {
      return table_[i * arena_.player_count() + p] != 0;
    }
    std::vector<PlayerId> winners(ProfileIndex i) const;

    Lasso outcome(ProfileIndex i) const;
    bool satisfies(ProfileIndex i, const Formula& spec) const;

  private:
    Arena arena_;
    ObjectiveProfile objectives_;
    ProfileSpace space_;
    std::vector<std::uint8_t> table_;
  };

  /// A unilateral change of strategy by one player.
  struct Deviation
  {
    PlayerId player = 0;
    PositionalStrategy strategy;
  };

  /// Index-level deviation, used by the exhaustive procedures.
  struct DeviationIndex
  {
    PlayerId player = 0;
    StrategyIndex strategy = 0;

    friend bool operator==(const DeviationIndex&, const DeviationIndex&) = default;
  };

  /// s[p ↦ replacement].  Throws PlayerMismatch when the replacement
  /// belongs to another player.
  PositionalProfile deviate(const Arena& arena, const PositionalProfile& profile,
                            PlayerId player,
                            const PositionalStrategy& replacement);

  /// The p-component of a profile.
  PositionalStrategy strategy_of(const Arena& arena,
                                 const PositionalProfile& profile, PlayerId p);

  struct NashCheck
  {
    bool nash = true;
    /// First profitable deviation (players ascending, strategies in
    /// enumeration order) when nash is false.
    std::optional<Deviation> refutation;
  };

  NashCheck is_nash(const Arena& arena, const ObjectiveProfile& objectives,
                    const PositionalProfile& profile);

  /// First profitable deviation from profile \a i, if any.
  std::optional<DeviationIndex> nash_deviation(const Game& game, ProfileIndex i);

  /// First positional strategy of \a player that wins against every
  /// positional profile of the others.
  std::optional<PositionalStrategy>
  has_winning_strategy(const Game& game, PlayerId player);

  std::optional<PositionalStrategy>
  has_winning_strategy(const Arena& arena, const ObjectiveProfile& objectives,
                       PlayerId player, std::uint64_t cap = kDefaultProfileCap);
}

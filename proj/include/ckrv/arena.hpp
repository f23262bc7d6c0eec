#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ckrv
{
  using VertexId = std::uint32_t;
  using PlayerId = std::uint32_t;

  /// Unvalidated arena description, as read from a problem file or built
  /// by a reduction.  Players are the integers 0 .. players-1.
  struct RawVertex
  {
    std::string name;
    std::int64_t owner = 0;
    bool initial = false;
  };

  struct RawArena
  {
    std::size_t players = 0;
    std::vector<RawVertex> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
  };

  /// \brief A validated game arena.
  ///
  /// Vertices and players keep their declaration order.  Successor lists
  /// keep the order in which edges were first declared; duplicate edges
  /// collapse.  This order fixes the enumeration order of profiles.
  class Arena
  {
  public:
    std::size_t player_count() const noexcept { return players_; }
    std::size_t vertex_count() const noexcept { return names_.size(); }
    std::size_t edge_count() const noexcept;

    const std::string& name(VertexId v) const { return names_[v]; }
    std::span<const std::string> names() const noexcept { return names_; }
    PlayerId owner(VertexId v) const { return owner_[v]; }
    VertexId initial() const noexcept { return initial_; }

    std::span<const VertexId> successors(VertexId v) const
    {
      return succ_[v];
    }
    std::span<const VertexId> owned_by(PlayerId p) const
    {
      return owned_[p];
    }

    std::optional<VertexId> find(std::string_view name) const;
    bool has_edge(VertexId from, VertexId to) const;

    friend bool operator==(const Arena&, const Arena&) = default;

  private:
    friend Arena validate_arena(const RawArena&);

    std::size_t players_ = 0;
    std::vector<std::string> names_;
    std::vector<PlayerId> owner_;
    VertexId initial_ = 0;
    std::vector<std::vector<VertexId>> succ_;
    std::vector<std::vector<VertexId>> owned_;
  };

  /// Check a raw description and build the arena.  Throws Error with kind
  /// SinkVertex, UnknownVertex, UnknownPlayer, DuplicateOwner,
  /// MissingInitial or MultipleInitial.
  Arena validate_arena(const RawArena& raw);

  /// One successor per vertex.  This is the flat form of a tuple of
  /// positional strategies; the per-player view is recovered through
  /// Arena::owned_by.
  struct PositionalProfile
  {
    std::vector<VertexId> next;

    friend bool operator==(const PositionalProfile&,
                           const PositionalProfile&) = default;
    friend auto operator<=>(const PositionalProfile&,
                            const PositionalProfile&) = default;
  };

  /// Successor choices of one player, aligned with Arena::owned_by(player).
  struct PositionalStrategy
  {
    PlayerId player = 0;
    std::vector<VertexId> next;

    friend bool operator==(const PositionalStrategy&,
                           const PositionalStrategy&) = default;
  };

  /// Throws InvalidProfile unless \a profile picks a successor everywhere.
  void check_profile(const Arena& arena, const PositionalProfile& profile);
  void check_strategy(const Arena& arena, const PositionalStrategy& strategy);

  /// \brief The ultimately periodic play prefix·cycle^ω.
  ///
  /// prefix·cycle never repeats a vertex; the cycle starts at the first
  /// vertex that the play visits twice.
  struct Lasso
  {
    std::vector<VertexId> prefix;
    std::vector<VertexId> cycle;

    friend bool operator==(const Lasso&, const Lasso&) = default;
  };

  /// Play of a positional profile from the initial vertex.  The profile is
  /// given as the successor of every vertex.
  Lasso outcome(const Arena& arena, std::span<const VertexId> next);

  inline Lasso outcome(const Arena& arena, const PositionalProfile& profile)
  {
    return outcome(arena, std::span<const VertexId>(profile.next));
  }

  /// Vertices visited infinitely often, sorted.
  std::vector<VertexId> inf_set(const Lasso& lasso);

  /// Membership vector of inf_set over \a vertex_count vertices.
  std::vector<bool> inf_mask(const Lasso& lasso, std::size_t vertex_count);
}

#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <ckrv/arena.hpp>
#include <ckrv/objectives.hpp>
#include <ckrv/strategy.hpp>

namespace ckrv
{
  using WorldId = std::size_t;

  /// A set of worlds of a fixed frame.
  class Event
  {
  public:
    Event() = default;
    explicit Event(std::size_t worlds, bool full = false)
      : bits_(worlds, full)
    {
    }
    Event(std::size_t worlds, std::initializer_list<WorldId> members);

    std::size_t universe() const noexcept { return bits_.size(); }
    bool contains(WorldId w) const { return bits_[w]; }
    void insert(WorldId w) { bits_[w] = true; }
    void erase(WorldId w) { bits_[w] = false; }
    std::size_t count() const;
    bool empty() const { return count() == 0; }
    std::vector<WorldId> members() const;
    bool subset_of(const Event& other) const;

    Event& operator&=(const Event& other);
    Event& operator|=(const Event& other);
    friend Event operator&(Event a, const Event& b) { return a &= b; }
    friend Event operator|(Event a, const Event& b) { return a |= b; }
    friend bool operator==(const Event&, const Event&) = default;

  private:
    std::vector<bool> bits_;
  };

  /// \brief KT5 frame: one partition of the worlds per player.
  ///
  /// Storing partitions makes every R_p an equivalence relation by
  /// construction.  Class labels are renumbered by first occurrence.
  class KripkeFrame
  {
  public:
    KripkeFrame() = default;
    /// \a labels[p][w] is the class of world w for player p.
    KripkeFrame(std::size_t worlds, std::vector<std::vector<std::size_t>> labels);

    /// Build from explicit relations (pairs of worlds per player).  Throws
    /// InvalidFrame unless each relation is reflexive, symmetric and
    /// transitive.
    static KripkeFrame
    from_relations(std::size_t worlds,
                   const std::vector<std::vector<std::pair<WorldId, WorldId>>>& rel);

    std::size_t world_count() const noexcept { return worlds_; }
    std::size_t player_count() const noexcept { return label_.size(); }

    std::size_t class_of(PlayerId p, WorldId w) const { return label_[p][w]; }
    std::size_t class_count(PlayerId p) const { return classes_[p].size(); }
    std::span<const WorldId> members(PlayerId p, std::size_t c) const
    {
      return classes_[p][c];
    }
    /// R_p(w).
    std::span<const WorldId> cell(PlayerId p, WorldId w) const
    {
      return classes_[p][label_[p][w]];
    }
    /// Component of w under the transitive closure of ⋃_p R_p.
    std::size_t component_of(WorldId w) const { return component_[w]; }
    std::size_t component_count() const noexcept { return components_; }
    /// R⁺(w).
    std::vector<WorldId> reachable(WorldId w) const;

    friend bool operator==(const KripkeFrame& a, const KripkeFrame& b)
    {
      return a.worlds_ == b.worlds_ && a.label_ == b.label_;
    }

  private:
    std::size_t worlds_ = 0;
    std::vector<std::vector<std::size_t>> label_;
    std::vector<std::vector<std::vector<WorldId>>> classes_;
    std::vector<std::size_t> component_;
    std::size_t components_ = 0;
  };

  /// K_p(E) = { w | R_p(w) ⊆ E }.
  Event know(const KripkeFrame& frame, PlayerId p, const Event& event);
  /// MK(E) = ⋂_p K_p(E).
  Event mutual_know(const KripkeFrame& frame, const Event& event);
  /// CK(E) = { w | R⁺(w) ⊆ E }.
  Event common_know(const KripkeFrame& frame, const Event& event);

  /// \brief Frame plus a profile per world, constant on every R_p-class
  /// in its p-component.
  class EpistemicModel
  {
  public:
    /// Throws InvalidModel when sizes disagree, a world name repeats, or
    /// condition σ_p(w) = σ_p(w′) for (w, w′) ∈ R_p is violated.
    EpistemicModel(const Arena& arena, KripkeFrame frame,
                   std::vector<std::string> world_names,
                   std::vector<PositionalProfile> assignment);

    const KripkeFrame& frame() const noexcept { return frame_; }
    std::size_t world_count() const noexcept { return frame_.world_count(); }
    const std::string& world_name(WorldId w) const { return names_[w]; }
    std::span<const std::string> world_names() const noexcept { return names_; }
    const PositionalProfile& assignment(WorldId w) const { return sigma_[w]; }
    std::optional<WorldId> find_world(std::string_view name) const;

    friend bool operator==(const EpistemicModel&, const EpistemicModel&) = default;

  private:
    KripkeFrame frame_;
    std::vector<std::string> names_;
    std::vector<PositionalProfile> sigma_;
  };

  /// Token naming a profile, e.g. "v0->v2,v1->v0,v2->v0".  Used as the
  /// world name in canonical models.
  std::string profile_id(const Arena& arena, const PositionalProfile& profile);

  /// Worlds where \a player is rational: no strategy is weakly better on
  /// her whole cell and strictly better on some world of it.
  Event rational_worlds(const Game& game, const KripkeFrame& frame,
                        std::span<const ProfileIndex> sigma, PlayerId player);
  Event rational_all(const Game& game, const KripkeFrame& frame,
                     std::span<const ProfileIndex> sigma);
  /// CK(RAT).
  Event common_knowledge_of_rationality(const Game& game,
                                        const KripkeFrame& frame,
                                        std::span<const ProfileIndex> sigma);

  Event rational_worlds(const Game& game, const EpistemicModel& model,
                        PlayerId player);
  Event rational_all(const Game& game, const EpistemicModel& model);

  Event rational_worlds(const Arena& arena, const ObjectiveProfile& objectives,
                        const EpistemicModel& model, PlayerId player);
  Event rational_all(const Arena& arena, const ObjectiveProfile& objectives,
                     const EpistemicModel& model);

  /// Profile indices of the worlds of \a model.
  std::vector<ProfileIndex> assignment_indices(const Game& game,
                                               const EpistemicModel& model);

  /// Frame of M(X): R_p relates profiles that agree on the p-component.
  KripkeFrame canonical_frame(const Game& game,
                              std::span<const ProfileIndex> profiles);

  /// M(X) for distinct profiles, worlds in the given order and named by
  /// profile_id.  Throws EmptySet when \a profiles is empty.
  EpistemicModel canonical_model(const Game& game,
                                 std::span<const ProfileIndex> profiles);
  /// Same, from explicit profiles (duplicates dropped, first kept).
  EpistemicModel canonical_model(const Arena& arena,
                                 std::span<const PositionalProfile> profiles);
}

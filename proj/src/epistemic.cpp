#include <ckrv/epistemic.hpp>

#include <algorithm>
#include <numeric>
#include <set>

#include <ckrv/error.hpp>

namespace ckrv
{
  Event::Event(std::size_t worlds, std::initializer_list<WorldId> members)
    : bits_(worlds, false)
  {
    for (auto w: members)
      bits_.at(w) = true;
  }

  std::size_t Event::count() const
  {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
  }

  std::vector<WorldId> Event::members() const
  {
    std::vector<WorldId> out;
    for (WorldId w = 0; w < bits_.size(); ++w)
      if (bits_[w])
        out.push_back(w);
    return out;
  }

  bool Event::subset_of(const Event& other) const
  {
    for (WorldId w = 0; w < bits_.size(); ++w)
      if (bits_[w] && !other.bits_[w])
        return false;
    return true;
  }

  Event& Event::operator&=(const Event& other)
  {
    for (WorldId w = 0; w < bits_.size(); ++w)
      bits_[w] = bits_[w] && other.bits_[w];
    return *this;
  }

  Event& Event::operator|=(const Event& other)
  {
    for (WorldId w = 0; w < bits_.size(); ++w)
      bits_[w] = bits_[w] || other.bits_[w];
    return *this;
  }

  KripkeFrame::KripkeFrame(std::size_t worlds,
                           std::vector<std::vector<std::size_t>> labels)
    : worlds_(worlds), label_(std::move(labels))
  {
    classes_.resize(label_.size());
    for (std::size_t p = 0; p < label_.size(); ++p)
      {
        auto& lab = label_[p];
        if (lab.size() != worlds)
          throw Error(ErrorKind::InvalidFrame, "partition of player "
                      + std::to_string(p) + " does not cover every world");
        std::vector<std::pair<std::size_t, std::size_t>> renum;
        for (auto& l: lab)
          {
            auto it = std::find_if(renum.begin(), renum.end(),
                                   [&](auto& e) { return e.first == l; });
            if (it == renum.end())
              {
                renum.emplace_back(l, renum.size());
                l = renum.size() - 1;
              }
            else
              l = it->second;
          }
        classes_[p].resize(renum.size());
        for (WorldId w = 0; w < worlds; ++w)
          classes_[p][lab[w]].push_back(w);
      }

    // Union-find over all players' classes.
    std::vector<std::size_t> parent(worlds);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
      while (parent[x] != x)
        x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& per_player: classes_)
      for (const auto& cls: per_player)
        for (std::size_t k = 1; k < cls.size(); ++k)
          parent[root(cls[k])] = root(cls[0]);
    component_.assign(worlds, 0);
    std::vector<std::size_t> number(worlds, worlds);
    for (WorldId w = 0; w < worlds; ++w)
      {
        auto r = root(w);
        if (number[r] == worlds)
          number[r] = components_++;
        component_[w] = number[r];
      }
  }

  KripkeFrame KripkeFrame::from_relations(
    std::size_t worlds,
    const std::vector<std::vector<std::pair<WorldId, WorldId>>>& rel)
  {
    std::vector<std::vector<std::size_t>> labels;
    for (std::size_t p = 0; p < rel.size(); ++p)
      {
        std::vector<std::vector<bool>> m(worlds, std::vector<bool>(worlds));
        for (auto [a, b]: rel[p])
          {
            if (a >= worlds || b >= worlds)
              throw Error(ErrorKind::InvalidFrame, "relation mentions world "
                          "outside the frame");
            m[a][b] = true;
          }
        auto fail = [&](const char* what) {
          throw Error(ErrorKind::InvalidFrame, "relation of player "
                      + std::to_string(p) + " is not " + what);
        };
        for (WorldId a = 0; a < worlds; ++a)
          {
            if (!m[a][a])
              fail("reflexive");
            for (WorldId b = 0; b < worlds; ++b)
              {
                if (m[a][b] != m[b][a])
                  fail("symmetric");
                if (m[a][b])
                  for (WorldId c = 0; c < worlds; ++c)
                    if (m[b][c] && !m[a][c])
                      fail("transitive");
              }
          }
        std::vector<std::size_t> lab(worlds);
        for (WorldId a = 0; a < worlds; ++a)
          {
            WorldId first = 0;
            while (!m[a][first])
              ++first;
            lab[a] = first;
          }
        labels.push_back(std::move(lab));
      }
    return KripkeFrame(worlds, std::move(labels));
  }

  std::vector<WorldId> KripkeFrame::reachable(WorldId w) const
  {
    std::vector<WorldId> out;
    for (WorldId u = 0; u < worlds_; ++u)
      if (component_[u] == component_[w])
        out.push_back(u);
    return out;
  }

  Event know(const KripkeFrame& frame, PlayerId p, const Event& event)
  {
    Event out(frame.world_count());
    for (std::size_t c = 0; c < frame.class_count(p); ++c)
      {
        auto cls = frame.members(p, c);
        if (std::all_of(cls.begin(), cls.end(),
                        [&](WorldId w) { return event.contains(w); }))
          for (auto w: cls)
            out.insert(w);
      }
    return out;
  }

  Event mutual_know(const KripkeFrame& frame, const Event& event)
  {
    Event out(frame.world_count(), true);
    for (PlayerId p = 0; p < frame.player_count(); ++p)
      out &= know(frame, p, event);
    return out;
  }

  Event common_know(const KripkeFrame& frame, const Event& event)
  {
    std::vector<bool> closed(frame.component_count(), true);
    for (WorldId w = 0; w < frame.world_count(); ++w)
      if (!event.contains(w))
        closed[frame.component_of(w)] = false;
    Event out(frame.world_count());
    for (WorldId w = 0; w < frame.world_count(); ++w)
      if (closed[frame.component_of(w)])
        out.insert(w);
    return out;
  }

  EpistemicModel::EpistemicModel(const Arena& arena, KripkeFrame frame,
                                 std::vector<std::string> world_names,
                                 std::vector<PositionalProfile> assignment)
    : frame_(std::move(frame)), names_(std::move(world_names)),
      sigma_(std::move(assignment))
  {
    const auto n = frame_.world_count();
    if (names_.size() != n || sigma_.size() != n)
      throw Error(ErrorKind::InvalidModel, "frame, names and assignment "
                  "disagree on the number of worlds");
    if (frame_.player_count() != arena.player_count())
      throw Error(ErrorKind::InvalidModel, "frame has "
                  + std::to_string(frame_.player_count())
                  + " players, arena has "
                  + std::to_string(arena.player_count()));
    std::set<std::string_view> seen;
    for (const auto& name: names_)
      if (!seen.insert(name).second)
        throw Error(ErrorKind::InvalidModel, "world '" + name
                    + "' declared twice");
    for (WorldId w = 0; w < n; ++w)
      {
        try
          {
            check_profile(arena, sigma_[w]);
          }
        catch (const Error& e)
          {
            throw Error(ErrorKind::InvalidModel, "world '" + names_[w]
                        + "': " + e.what());
          }
      }
    for (PlayerId p = 0; p < arena.player_count(); ++p)
      for (std::size_t c = 0; c < frame_.class_count(p); ++c)
        {
          auto cls = frame_.members(p, c);
          for (auto w: cls.subspan(1))
            for (auto v: arena.owned_by(p))
              if (sigma_[w].next[v] != sigma_[cls[0]].next[v])
                throw Error(ErrorKind::InvalidModel, "player "
                            + std::to_string(p) + " cannot distinguish '"
                            + names_[cls[0]] + "' from '" + names_[w]
                            + "' but plays differently at '"
                            + arena.name(v) + "'");
        }
  }

  std::optional<WorldId> EpistemicModel::find_world(std::string_view name) const
  {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
      return std::nullopt;
    return static_cast<WorldId>(it - names_.begin());
  }

  std::string profile_id(const Arena& arena, const PositionalProfile& profile)
  {
    std::string out;
    for (VertexId v = 0; v < arena.vertex_count(); ++v)
      {
        if (v != 0)
          out += ',';
        out += arena.name(v) + "->" + arena.name(profile.next[v]);
      }
    return out;
  }

  namespace
  {
    /// Some strategy of p beats the cell's play: weakly everywhere on the
    /// cell, strictly somewhere.
    bool has_better_strategy(const Game& game, std::span<const WorldId> cell,
                             std::span<const ProfileIndex> sigma, PlayerId p)
    {
      const auto& space = game.space();
      bool any_loss = std::any_of(cell.begin(), cell.end(), [&](WorldId w) {
        return !game.wins(sigma[w], p);
      });
      if (!any_loss)
        return false;
      for (StrategyIndex t = 0; t < space.strategy_count(p); ++t)
        {
          bool weak = true;
          bool strict = false;
          for (auto w: cell)
            {
              bool before = game.wins(sigma[w], p);
              bool after = game.wins(space.deviate(sigma[w], p, t), p);
              if (before && !after)
                {
                  weak = false;
                  break;
                }
              strict = strict || (!before && after);
            }
          if (weak && strict)
            return true;
        }
      return false;
    }
  }

  Event rational_worlds(const Game& game, const KripkeFrame& frame,
                        std::span<const ProfileIndex> sigma, PlayerId player)
  {
    Event out(frame.world_count());
    for (std::size_t c = 0; c < frame.class_count(player); ++c)
      {
        auto cell = frame.members(player, c);
        if (!has_better_strategy(game, cell, sigma, player))
          for (auto w: cell)
            out.insert(w);
      }
    return out;
  }

  Event rational_all(const Game& game, const KripkeFrame& frame,
                     std::span<const ProfileIndex> sigma)
  {
    Event out(frame.world_count(), true);
    for (PlayerId p = 0; p < frame.player_count(); ++p)
      out &= rational_worlds(game, frame, sigma, p);
    return out;
  }

  Event common_knowledge_of_rationality(const Game& game,
                                        const KripkeFrame& frame,
                                        std::span<const ProfileIndex> sigma)
  {
    return common_know(frame, rational_all(game, frame, sigma));
  }

  std::vector<ProfileIndex> assignment_indices(const Game& game,
                                               const EpistemicModel& model)
  {
    std::vector<ProfileIndex> sigma;
    for (WorldId w = 0; w < model.world_count(); ++w)
      sigma.push_back(game.space().index_of(model.assignment(w)));
    return sigma;
  }

  Event rational_worlds(const Game& game, const EpistemicModel& model,
                        PlayerId player)
  {
    return rational_worlds(game, model.frame(), assignment_indices(game, model),
                           player);
  }

  Event rational_all(const Game& game, const EpistemicModel& model)
  {
    return rational_all(game, model.frame(), assignment_indices(game, model));
  }

  Event rational_worlds(const Arena& arena, const ObjectiveProfile& objectives,
                        const EpistemicModel& model, PlayerId player)
  {
    return rational_worlds(Game(arena, objectives), model, player);
  }

  Event rational_all(const Arena& arena, const ObjectiveProfile& objectives,
                     const EpistemicModel& model)
  {
    return rational_all(Game(arena, objectives), model);
  }

  KripkeFrame canonical_frame(const Game& game,
                              std::span<const ProfileIndex> profiles)
  {
    std::vector<std::vector<std::size_t>> labels(game.player_count());
    for (PlayerId p = 0; p < game.player_count(); ++p)
      for (auto i: profiles)
        labels[p].push_back(game.space().strategy_of(i, p));
    return KripkeFrame(profiles.size(), std::move(labels));
  }

  EpistemicModel canonical_model(const Game& game,
                                 std::span<const ProfileIndex> profiles)
  {
    if (profiles.empty())
      throw Error(ErrorKind::EmptySet, "canonical model of an empty set");
    std::vector<ProfileIndex> distinct;
    for (auto i: profiles)
      if (std::find(distinct.begin(), distinct.end(), i) == distinct.end())
        distinct.push_back(i);
    std::vector<std::string> names;
    std::vector<PositionalProfile> sigma;
    for (auto i: distinct)
      {
        sigma.push_back(game.space().profile(i));
        names.push_back(profile_id(game.arena(), sigma.back()));
      }
    return EpistemicModel(game.arena(), canonical_frame(game, distinct),
                          std::move(names), std::move(sigma));
  }

  EpistemicModel canonical_model(const Arena& arena,
                                 std::span<const PositionalProfile> profiles)
  {
    if (profiles.empty())
      throw Error(ErrorKind::EmptySet, "canonical model of an empty set");
    std::vector<PositionalProfile> distinct;
    for (const auto& s: profiles)
      {
        check_profile(arena, s);
        if (std::find(distinct.begin(), distinct.end(), s) == distinct.end())
          distinct.push_back(s);
      }
    std::vector<std::vector<std::size_t>> labels(arena.player_count());
    for (PlayerId p = 0; p < arena.player_count(); ++p)
      for (const auto& s: distinct)
        {
          auto mine = strategy_of(arena, s, p).next;
          std::size_t label = 0;
          while (strategy_of(arena, distinct[label], p).next != mine)
            ++label;
          labels[p].push_back(label);
        }
    std::vector<std::string> names;
    for (const auto& s: distinct)
      names.push_back(profile_id(arena, s));
    KripkeFrame frame(distinct.size(), std::move(labels));
    return EpistemicModel(arena, std::move(frame), std::move(names), std::move(distinct));
  }
}

#include <ckrv/strategy.hpp>

#include <algorithm>

#include <ckrv/error.hpp>

namespace ckrv
{
  ProfileSpace::ProfileSpace(const Arena& arena, std::uint64_t cap)
  {
    const auto n = arena.vertex_count();
    succ_.resize(n);
    stride_.resize(n);
    local_stride_.resize(n);
    for (VertexId v = 0; v < n; ++v)
      {
        auto s = arena.successors(v);
        succ_[v].assign(s.begin(), s.end());
      }
    for (std::size_t k = n; k-- > 0;)
      {
        stride_[k] = size_;
        auto d = succ_[k].size();
        if (size_ > cap / d)
          throw Error(ErrorKind::CountOverflow,
                      "more than " + std::to_string(cap)
                      + " positional profiles");
        size_ *= d;
      }
    if (size_ > cap)
      throw Error(ErrorKind::CountOverflow, "more than " + std::to_string(cap)
                  + " positional profiles");

    owned_.resize(arena.player_count());
    strategies_.resize(arena.player_count());
    for (PlayerId p = 0; p < arena.player_count(); ++p)
      {
        auto o = arena.owned_by(p);
        owned_[p].assign(o.begin(), o.end());
        std::uint64_t count = 1;
        for (auto it = owned_[p].rbegin(); it != owned_[p].rend(); ++it)
          {
            local_stride_[*it] = count;
            count *= succ_[*it].size();
          }
        strategies_[p] = count;
      }
  }

  void ProfileSpace::decode(ProfileIndex i, std::vector<VertexId>& next) const
  {
    next.resize(succ_.size());
    for (VertexId v = 0; v < succ_.size(); ++v)
      next[v] = succ_[v][digit(i, v)];
  }

  PositionalProfile ProfileSpace::profile(ProfileIndex i) const
  {
    PositionalProfile s;
    decode(i, s.next);
    return s;
  }

  namespace
  {
    std::uint64_t position(const std::vector<VertexId>& succ, VertexId to)
    {
      auto it = std::find(succ.begin(), succ.end(), to);
      if (it == succ.end())
        throw Error(ErrorKind::InvalidProfile, "choice is not a successor");
      return static_cast<std::uint64_t>(it - succ.begin());
    }
  }

  ProfileIndex ProfileSpace::index_of(const PositionalProfile& profile) const
  {
    if (profile.next.size() != succ_.size())
      throw Error(ErrorKind::InvalidProfile, "profile has wrong length");
    ProfileIndex i = 0;
    for (VertexId v = 0; v < succ_.size(); ++v)
      i += position(succ_[v], profile.next[v]) * stride_[v];
    return i;
  }

  PositionalStrategy ProfileSpace::strategy(PlayerId p, StrategyIndex s) const
  {
    PositionalStrategy st{p, {}};
    for (auto v: owned_[p])
      st.next.push_back(succ_[v][(s / local_stride_[v]) % succ_[v].size()]);
    return st;
  }

  StrategyIndex ProfileSpace::index_of(const PositionalStrategy& strategy) const
  {
    const auto& owned = owned_.at(strategy.player);
    if (strategy.next.size() != owned.size())
      throw Error(ErrorKind::InvalidProfile, "strategy has wrong length");
    StrategyIndex s = 0;
    for (std::size_t k = 0; k < owned.size(); ++k)
      s += position(succ_[owned[k]], strategy.next[k]) * local_stride_[owned[k]];
    return s;
  }

  StrategyIndex ProfileSpace::strategy_of(ProfileIndex i, PlayerId p) const
  {
    StrategyIndex s = 0;
    for (auto v: owned_[p])
      s += digit(i, v) * local_stride_[v];
    return s;
  }

  std::uint64_t ProfileSpace::part(PlayerId p, StrategyIndex s) const
  {
    std::uint64_t x = 0;
    for (auto v: owned_[p])
      x += ((s / local_stride_[v]) % succ_[v].size()) * stride_[v];
    return x;
  }

  ProfileIndex ProfileSpace::deviate(ProfileIndex i, PlayerId p,
                                     StrategyIndex t) const
  {
    std::uint64_t mine = 0;
    for (auto v: owned_[p])
      mine += digit(i, v) * stride_[v];
    return i - mine + part(p, t);
  }

  Game::Game(Arena arena, ObjectiveProfile objectives, std::uint64_t cap)
    : arena_(std::move(arena)), objectives_(std::move(objectives)),
      space_(arena_, cap)
  {
    check_objectives(arena_, objectives_);
    const auto players = arena_.player_count();
    table_.assign(space_.size() * players, 0);
    std::vector<VertexId> next;
    for (ProfileIndex i = 0; i < space_.size(); ++i)
      {
        space_.decode(i, next);
        auto inf = inf_mask(ckrv::outcome(arena_, next), arena_.vertex_count());
        for (PlayerId p = 0; p < players; ++p)
          table_[i * players + p] = objectives_[p].evaluate(inf) ? 1 : 0;
      }
  }

  std::vector<PlayerId> Game::winners(ProfileIndex i) const
  {
    std::vector<PlayerId> out;
    for (PlayerId p = 0; p < player_count(); ++p)
      if (wins(i, p))
        out.push_back(p);
    return out;
  }

  Lasso Game::outcome(ProfileIndex i) const
  {
    std::vector<VertexId> next;
    space_.decode(i, next);
    return ckrv::outcome(arena_, next);
  }

  bool Game::satisfies(ProfileIndex i, const Formula& spec) const
  {
    return spec.evaluate(inf_mask(outcome(i), arena_.vertex_count()));
  }

  PositionalProfile deviate(const Arena& arena, const PositionalProfile& profile,
                            PlayerId player,
                            const PositionalStrategy& replacement)
  {
    if (replacement.player != player)
      throw Error(ErrorKind::PlayerMismatch, "strategy of player "
                  + std::to_string(replacement.player)
                  + " cannot replace player " + std::to_string(player));
    check_profile(arena, profile);
    check_strategy(arena, replacement);
    PositionalProfile out = profile;
    auto owned = arena.owned_by(player);
    for (std::size_t k = 0; k < owned.size(); ++k)
      out.next[owned[k]] = replacement.next[k];
    return out;
  }

  PositionalStrategy strategy_of(const Arena& arena,
                                 const PositionalProfile& profile, PlayerId p)
  {
    PositionalStrategy s{p, {}};
    for (auto v: arena.owned_by(p))
      s.next.push_back(profile.next.at(v));
    return s;
  }

  NashCheck is_nash(const Arena& arena, const ObjectiveProfile& objectives,
                    const PositionalProfile& profile)
  {
    check_profile(arena, profile);
    check_objectives(arena, objectives);
    auto inf = inf_mask(outcome(arena, profile), arena.vertex_count());
    for (PlayerId p = 0; p < arena.player_count(); ++p)
      {
        if (objectives[p].evaluate(inf))
          continue;
        // Odometer over the player's own choices, lexicographic.
        auto owned = arena.owned_by(p);
        std::vector<std::size_t> pos(owned.size(), 0);
        PositionalProfile trial = profile;
        for (;;)
          {
            for (std::size_t k = 0; k < owned.size(); ++k)
              trial.next[owned[k]] = arena.successors(owned[k])[pos[k]];
            auto trial_inf = inf_mask(outcome(arena, trial), arena.vertex_count());
            if (objectives[p].evaluate(trial_inf))
              return {false, Deviation{p, strategy_of(arena, trial, p)}};
            std::size_t k = owned.size();
            while (k > 0 && ++pos[k - 1] == arena.successors(owned[k - 1]).size())
              {
                pos[k - 1] = 0;
                --k;
              }
            if (k == 0)
              break;
          }
      }
    return {};
  }

  std::optional<DeviationIndex> nash_deviation(const Game& game, ProfileIndex i)
  {
    const auto& space = game.space();
    for (PlayerId p = 0; p < game.player_count(); ++p)
      {
        if (game.wins(i, p))
          continue;
        for (StrategyIndex t = 0; t < space.strategy_count(p); ++t)
          if (game.wins(space.deviate(i, p, t), p))
            return DeviationIndex{p, t};
      }
    return std::nullopt;
  }

  std::optional<PositionalStrategy>
  has_winning_strategy(const Game& game, PlayerId player)
  {
    const auto& space = game.space();
    if (player >= game.player_count())
      throw Error(ErrorKind::UnknownPlayer, std::to_string(player));
    // Profiles whose player-component is strategy 0 enumerate the
    // opponents' joint choices; deviate() moves them to strategy s.
    std::vector<ProfileIndex> others;
    for (ProfileIndex i = 0; i < space.size(); ++i)
      if (space.strategy_of(i, player) == 0)
        others.push_back(i);
    for (StrategyIndex s = 0; s < space.strategy_count(player); ++s)
      {
        bool all = std::all_of(others.begin(), others.end(), [&](ProfileIndex i) {
          return game.wins(space.deviate(i, player, s), player);
        });
        if (all)
          return space.strategy(player, s);
      }
    return std::nullopt;
  }

  std::optional<PositionalStrategy>
  has_winning_strategy(const Arena& arena, const ObjectiveProfile& objectives,
                       PlayerId player, std::uint64_t cap)
  {
    return has_winning_strategy(Game(arena, objectives, cap), player);
  }
}

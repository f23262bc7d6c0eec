#include <ckrv/arena.hpp>

#include <algorithm>

#include <ckrv/error.hpp>

namespace ckrv
{
  std::size_t Arena::edge_count() const noexcept
  {
    std::size_t n = 0;
    for (const auto& s: succ_)
      n += s.size();
    return n;
  }

  std::optional<VertexId> Arena::find(std::string_view name) const
  {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
      return std::nullopt;
    return static_cast<VertexId>(it - names_.begin());
  }

  bool Arena::has_edge(VertexId from, VertexId to) const
  {
    if (from >= succ_.size())
      return false;
    const auto& s = succ_[from];
    return std::find(s.begin(), s.end(), to) != s.end();
  }

  Arena validate_arena(const RawArena& raw)
  {
    Arena a;
    a.players_ = raw.players;
    std::unordered_map<std::string, VertexId> index;
    std::optional<VertexId> initial;

    for (const auto& rv: raw.vertices)
      {
        if (index.contains(rv.name))
          throw Error(ErrorKind::DuplicateOwner,
                      "vertex '" + rv.name + "' is declared more than once");
        if (rv.owner < 0 || static_cast<std::uint64_t>(rv.owner) >= raw.players)
          throw Error(ErrorKind::UnknownPlayer,
                      "vertex '" + rv.name + "' has owner "
                      + std::to_string(rv.owner) + " but there are "
                      + std::to_string(raw.players) + " players");
        auto id = static_cast<VertexId>(a.names_.size());
        index.emplace(rv.name, id);
        a.names_.push_back(rv.name);
        a.owner_.push_back(static_cast<PlayerId>(rv.owner));
        if (rv.initial)
          {
            if (initial)
              throw Error(ErrorKind::MultipleInitial,
                          "both '" + a.names_[*initial] + "' and '" + rv.name
                          + "' are marked initial");
            initial = id;
          }
      }
    if (!initial)
      throw Error(ErrorKind::MissingInitial, "no vertex is marked initial");
    a.initial_ = *initial;

    a.succ_.resize(a.names_.size());
    for (const auto& [from, to]: raw.edges)
      {
        auto f = index.find(from);
        if (f == index.end())
          throw Error(ErrorKind::UnknownVertex, "edge from undeclared vertex '"
                      + from + "'");
        auto t = index.find(to);
        if (t == index.end())
          throw Error(ErrorKind::UnknownVertex, "edge to undeclared vertex '"
                      + to + "'");
        auto& s = a.succ_[f->second];
        if (std::find(s.begin(), s.end(), t->second) == s.end())
          s.push_back(t->second);
      }

    for (VertexId v = 0; v < a.succ_.size(); ++v)
      if (a.succ_[v].empty())
        throw Error(ErrorKind::SinkVertex, "vertex '" + a.names_[v]
                    + "' has no outgoing edge");

    a.owned_.resize(raw.players);
    for (VertexId v = 0; v < a.owner_.size(); ++v)
      a.owned_[a.owner_[v]].push_back(v);
    return a;
  }

  void check_profile(const Arena& arena, const PositionalProfile& profile)
  {
    if (profile.next.size() != arena.vertex_count())
      throw Error(ErrorKind::InvalidProfile, "profile covers "
                  + std::to_string(profile.next.size()) + " vertices, arena has "
                  + std::to_string(arena.vertex_count()));
    for (VertexId v = 0; v < profile.next.size(); ++v)
      if (!arena.has_edge(v, profile.next[v]))
        throw Error(ErrorKind::InvalidProfile, "no edge from '"
                    + arena.name(v) + "' to the chosen successor");
  }

  void check_strategy(const Arena& arena, const PositionalStrategy& strategy)
  {
    if (strategy.player >= arena.player_count())
      throw Error(ErrorKind::UnknownPlayer, "player "
                  + std::to_string(strategy.player));
    auto owned = arena.owned_by(strategy.player);
    if (strategy.next.size() != owned.size())
      throw Error(ErrorKind::InvalidProfile, "strategy of player "
                  + std::to_string(strategy.player)
                  + " does not cover exactly her vertices");
    for (std::size_t i = 0; i < owned.size(); ++i)
      if (!arena.has_edge(owned[i], strategy.next[i]))
        throw Error(ErrorKind::InvalidProfile, "no edge from '"
                    + arena.name(owned[i]) + "' to the chosen successor");
  }

  Lasso outcome(const Arena& arena, std::span<const VertexId> next)
  {
    constexpr std::size_t unseen = static_cast<std::size_t>(-1);
    std::vector<std::size_t> first(arena.vertex_count(), unseen);
    std::vector<VertexId> play;
    play.reserve(arena.vertex_count());
    VertexId v = arena.initial();
    while (first[v] == unseen)
      {
        first[v] = play.size();
        play.push_back(v);
        v = next[v];
      }
    Lasso l;
    auto split = play.begin() + static_cast<std::ptrdiff_t>(first[v]);
    l.prefix.assign(play.begin(), split);
    l.cycle.assign(split, play.end());
    return l;
  }

  std::vector<VertexId> inf_set(const Lasso& lasso)
  {
    std::vector<VertexId> s = lasso.cycle;
    std::sort(s.begin(), s.end());
    return s;
  }

  std::vector<bool> inf_mask(const Lasso& lasso, std::size_t vertex_count)
  {
    std::vector<bool> m(vertex_count, false);
    for (auto v: lasso.cycle)
      m[v] = true;
    return m;
  }
}

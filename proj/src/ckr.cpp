#include <ckrv/ckr.hpp>

#include <algorithm>
#include <functional>
#include <unordered_map>

#include <ckrv/error.hpp>

namespace ckrv
{
  bool IdipResult::contains(ProfileIndex i) const
  {
    return std::binary_search(survivors.begin(), survivors.end(), i);
  }

  namespace
  {
    /// Condition 2 of inferiority only depends on (player, her strategy in
    /// the profile, replacement), so it is memoised per pool.
    class InferiorityCheck
    {
    public:
      InferiorityCheck(const Game& game, std::span<const ProfileIndex> pool)
        : game_(game), groups_(game.player_count()), memo_(game.player_count())
      {
        for (PlayerId p = 0; p < game.player_count(); ++p)
          for (auto i: pool)
            groups_[p][game.space().strategy_of(i, p)].push_back(i);
      }

      std::optional<DeviationIndex> witness(ProfileIndex s)
      {
        const auto& space = game_.space();
        for (PlayerId p = 0; p < game_.player_count(); ++p)
          {
            if (game_.wins(s, p))
              continue;
            StrategyIndex mine = space.strategy_of(s, p);
            for (StrategyIndex t = 0; t < space.strategy_count(p); ++t)
              if (game_.wins(space.deviate(s, p, t), p) && never_worse(p, mine, t))
                return DeviationIndex{p, t};
          }
        return std::nullopt;
      }

    private:
      bool never_worse(PlayerId p, StrategyIndex mine, StrategyIndex t)
      {
        const auto key = mine * game_.space().strategy_count(p) + t;
        auto [it, fresh] = memo_[p].try_emplace(key, false);
        if (fresh)
          {
            const auto& group = groups_[p][mine];
            it->second = std::all_of(group.begin(), group.end(), [&](ProfileIndex i) {
              return !game_.wins(i, p)
                || game_.wins(game_.space().deviate(i, p, t), p);
            });
          }
        return it->second;
      }

      const Game& game_;
      std::vector<std::unordered_map<StrategyIndex, std::vector<ProfileIndex>>> groups_;
      std::vector<std::unordered_map<std::uint64_t, bool>> memo_;
    };
  }

  std::optional<DeviationIndex> is_inferior(const Game& game,
                                            std::span<const ProfileIndex> pool,
                                            ProfileIndex profile)
  {
    if (std::find(pool.begin(), pool.end(), profile) == pool.end())
      throw Error(ErrorKind::InvalidProfile, "profile is not in the pool");
    return InferiorityCheck(game, pool).witness(profile);
  }

  IdipResult idip(const Game& game)
  {
    IdipResult r;
    std::vector<ProfileIndex> pool(game.size());
    for (ProfileIndex i = 0; i < game.size(); ++i)
      pool[i] = i;
    for (;;)
      {
        IdipRound round;
        round.pool_size = pool.size();
        InferiorityCheck check(game, pool);
        std::vector<ProfileIndex> next;
        next.reserve(pool.size());
        for (auto i: pool)
          {
            if (auto w = check.witness(i))
              round.removed.push_back({i, *w});
            else
              next.push_back(i);
          }
        bool done = round.removed.empty();
        r.rounds.push_back(std::move(round));
        if (done)
          break;
        pool = std::move(next);
      }
    r.survivors = std::move(pool);
    return r;
  }

  CkrMembership in_T(const Game& game, const IdipResult& fixpoint,
                     ProfileIndex profile)
  {
    CkrMembership m;
    if (!fixpoint.contains(profile))
      return m;
    m.member = true;
    auto world = static_cast<WorldId>(
      std::lower_bound(fixpoint.survivors.begin(), fixpoint.survivors.end(),
                       profile) - fixpoint.survivors.begin());
    m.certificate = Certificate{canonical_model(game, fixpoint.survivors), world};
    m.models_searched = 1;
    return m;
  }

  CkrMembership in_T(const Game& game, ProfileIndex profile)
  {
    return in_T(game, idip(game), profile);
  }

  std::size_t default_world_bound(const Arena& arena)
  {
    return std::max<std::size_t>(1, arena.vertex_count() * arena.player_count());
  }

  namespace
  {
    void count_candidate(std::uint64_t& searched, std::uint64_t cap)
    {
      if (++searched > cap)
        throw Error(ErrorKind::CountOverflow, "more than "
                    + std::to_string(cap) + " candidate epistemic models");
    }

    bool has_twin_worlds(const std::vector<ProfileIndex>& sigma,
                         const std::vector<std::vector<std::size_t>>& labels)
    {
      for (std::size_t a = 0; a < sigma.size(); ++a)
        for (std::size_t b = a + 1; b < sigma.size(); ++b)
          {
            if (sigma[a] != sigma[b])
              continue;
            bool same = std::all_of(labels.begin(), labels.end(),
                                    [&](const auto& l) { return l[a] == l[b]; });
            if (same)
              return true;
          }
      return false;
    }

    Certificate make_certificate(const Game& game, const KripkeFrame& frame,
                                 const std::vector<ProfileIndex>& sigma,
                                 WorldId world)
    {
      std::vector<std::string> names;
      std::vector<PositionalProfile> profiles;
      for (std::size_t w = 0; w < sigma.size(); ++w)
        {
          names.push_back("w" + std::to_string(w));
          profiles.push_back(game.space().profile(sigma[w]));
        }
      return {EpistemicModel(game.arena(), frame, std::move(names),
                             std::move(profiles)), world};
    }

    class ExactSearch
    {
    public:
      ExactSearch(const Game& game, ProfileIndex target, const BoundedSearch& opt)
        : game_(game), target_(target), opt_(opt)
      {
      }

      CkrMembership run()
      {
        for (std::size_t n = 1; n <= opt_.world_bound && !found_; ++n)
          {
            sigma_.assign(n, 0);
            assign(0, 0);
          }
        CkrMembership m;
        m.member = found_.has_value();
        m.certificate = std::move(found_);
        m.models_searched = searched_;
        return m;
      }

    private:
      // σ as a non-decreasing sequence: worlds are interchangeable.
      void assign(std::size_t w, ProfileIndex from)
      {
        if (found_)
          return;
        if (w == sigma_.size())
          {
            if (std::find(sigma_.begin(), sigma_.end(), target_) == sigma_.end())
              return;
            labels_.assign(game_.player_count(),
                           std::vector<std::size_t>(sigma_.size(), 0));
            partition(0, 0, 0);
            return;
          }
        // The remaining worlds must still be able to hold the target.
        for (ProfileIndex i = from; i < game_.size(); ++i)
          {
            bool has_target = i == target_
              || std::find(sigma_.begin(), sigma_.begin() + static_cast<std::ptrdiff_t>(w),
                           target_) != sigma_.begin() + static_cast<std::ptrdiff_t>(w);
            if (!has_target && i > target_)
              return;
            sigma_[w] = i;
            assign(w + 1, i);
            if (found_)
              return;
          }
      }

      // Restricted growth labels per player, only merging worlds that agree
      // on the player's strategy.
      void partition(PlayerId p, std::size_t w, std::size_t used)
      {
        if (found_)
          return;
        if (p == game_.player_count())
          {
            evaluate();
            return;
          }
        if (w == sigma_.size())
          {
            partition(p + 1, 0, 0);
            return;
          }
        const auto& space = game_.space();
        auto mine = space.strategy_of(sigma_[w], p);
        for (std::size_t c = 0; c < used && !found_; ++c)
          {
            // Class c is compatible when its first member shares the strategy.
            std::size_t rep = 0;
            while (labels_[p][rep] != c)
              ++rep;
            if (space.strategy_of(sigma_[rep], p) != mine)
              continue;
            labels_[p][w] = c;
            partition(p, w + 1, used);
          }
        if (found_)
          return;
        labels_[p][w] = used;
        partition(p, w + 1, used + 1);
      }

      void evaluate()
      {
        count_candidate(searched_, opt_.search_cap);
        if (opt_.prune && has_twin_worlds(sigma_, labels_))
          return;
        KripkeFrame frame(sigma_.size(), labels_);
        if (opt_.prune && frame.component_count() != 1)
          return;
        Event ck = common_knowledge_of_rationality(game_, frame, sigma_);
        for (WorldId w = 0; w < sigma_.size(); ++w)
          if (sigma_[w] == target_ && ck.contains(w))
            {
              found_ = make_certificate(game_, frame, sigma_, w);
              return;
            }
      }

      const Game& game_;
      ProfileIndex target_;
      const BoundedSearch& opt_;
      std::vector<ProfileIndex> sigma_;
      std::vector<std::vector<std::size_t>> labels_;
      std::optional<Certificate> found_;
      std::uint64_t searched_ = 0;
    };

    CkrMembership canonical_search(const Game& game, ProfileIndex target,
                                   const BoundedSearch& opt)
    {
      CkrMembership m;
      m.conclusive = false;
      std::vector<ProfileIndex> chosen;
      std::function<bool(ProfileIndex, std::size_t)> extend;
      // X = chosen ∪ {target}, members ascending, |X| ≤ bound.
      auto attempt = [&]() {
        count_candidate(m.models_searched, opt.search_cap);
        std::vector<ProfileIndex> x = chosen;
        x.insert(std::upper_bound(x.begin(), x.end(), target), target);
        KripkeFrame frame = canonical_frame(game, x);
        Event ck = common_knowledge_of_rationality(game, frame, x);
        auto world = static_cast<WorldId>(
          std::find(x.begin(), x.end(), target) - x.begin());
        if (!ck.contains(world))
          return false;
        m.member = true;
        m.conclusive = true;
        m.certificate = Certificate{canonical_model(game, x), world};
        return true;
      };
      extend = [&](ProfileIndex from, std::size_t room) {
        if (room == 0)
          return attempt();
        for (ProfileIndex i = from; i < game.size(); ++i)
          {
            if (i == target)
              continue;
            chosen.push_back(i);
            bool ok = extend(i + 1, room - 1);
            chosen.pop_back();
            if (ok)
              return true;
          }
        return false;
      };
      for (std::size_t extra = 0; extra < opt.world_bound; ++extra)
        if (extend(0, extra))
          break;
      return m;
    }
  }

  CkrMembership in_T_P(const Game& game, ProfileIndex profile,
                       const BoundedSearch& search)
  {
    if (search.world_bound == 0)
      throw Error(ErrorKind::InvalidBound, "world bound must be positive");
    if (profile >= game.size())
      throw Error(ErrorKind::InvalidProfile, "profile index out of range");
    if (search.mode == SearchMode::CanonicalOnly)
      return canonical_search(game, profile, search);
    return ExactSearch(game, profile, search).run();
  }

  bool check_certificate(const Game& game, const Certificate& certificate,
                         ProfileIndex profile)
  {
    const auto& model = certificate.model;
    if (certificate.world >= model.world_count())
      return false;
    if (game.space().index_of(model.assignment(certificate.world)) != profile)
      return false;
    Event rat = rational_all(game, model);
    return common_know(model.frame(), rat).contains(certificate.world);
  }
}

#include <ckrv/verify.hpp>

namespace ckrv
{
  bool sver(const Arena& arena, const PositionalProfile& profile,
            const Formula& spec)
  {
    check_profile(arena, profile);
    return spec.evaluate(inf_mask(outcome(arena, profile), arena.vertex_count()));
  }

  namespace
  {
    Witness make_witness(const Game& game, ProfileIndex i)
    {
      Witness w;
      w.index = i;
      w.profile = game.space().profile(i);
      w.lasso = game.outcome(i);
      w.winners = game.winners(i);
      return w;
    }
  }

  Verdict vp_nash_pos(const Game& game, const Formula& spec)
  {
    Verdict v;
    for (ProfileIndex i = 0; i < game.size(); ++i)
      {
        ++v.stats.profiles_examined;
        if (game.satisfies(i, spec) || nash_deviation(game, i))
          continue;
        v.answer = Answer::No;
        v.witness = make_witness(game, i);
        break;
      }
    return v;
  }

  Verdict vpckr_pos(const Game& game, const Formula& spec,
                    const IdipResult& fixpoint)
  {
    Verdict v;
    v.stats.idip_rounds = fixpoint.rounds.size();
    v.stats.rational_profiles = fixpoint.survivors.size();
    v.stats.empty_characterization = fixpoint.survivors.empty();
    for (auto i: fixpoint.survivors)
      {
        ++v.stats.profiles_examined;
        if (game.satisfies(i, spec))
          continue;
        v.answer = Answer::No;
        v.witness = make_witness(game, i);
        auto m = in_T(game, fixpoint, i);
        v.stats.models_searched += m.models_searched;
        v.witness->certificate = std::move(m.certificate);
        break;
      }
    return v;
  }

  Verdict vpckr_pos(const Game& game, const Formula& spec)
  {
    return vpckr_pos(game, spec, idip(game));
  }

  Verdict vpckr_p_pos(const Game& game, const Formula& spec,
                      const BoundedSearch& search)
  {
    Verdict v;
    for (ProfileIndex i = 0; i < game.size(); ++i)
      {
        ++v.stats.profiles_examined;
        if (game.satisfies(i, spec))
          continue;
        auto m = in_T_P(game, i, search);
        v.stats.models_searched += m.models_searched;
        if (!m.member)
          continue;
        v.answer = Answer::No;
        v.witness = make_witness(game, i);
        v.witness->certificate = std::move(m.certificate);
        return v;
      }
    v.answer = search.mode == SearchMode::Exact ? Answer::Yes
                                                : Answer::YesOneSided;
    return v;
  }

  bool revalidate(const Game& game, const Formula& spec, Problem problem,
                  const Witness& witness)
  {
    const auto& arena = game.arena();
    if (sver(arena, witness.profile, spec))
      return false;
    if (outcome(arena, witness.profile) != witness.lasso)
      return false;
    switch (problem)
      {
      case Problem::Nash:
        return is_nash(arena, game.objectives(), witness.profile).nash;
      case Problem::Ckr:
      case Problem::CkrBounded:
        return witness.certificate
          && check_certificate(game, *witness.certificate,
                               game.space().index_of(witness.profile));
      }
    return false;
  }

  int exit_code(Answer answer)
  {
    return answer == Answer::No ? 1 : 0;
  }
}

#include <ckrv/objectives.hpp>

#include <algorithm>

#include <ckrv/error.hpp>

namespace ckrv
{
  Formula buchi_to_muller(const Arena& arena, std::span<const VertexId> targets)
  {
    for (auto v: targets)
      if (v >= arena.vertex_count())
        throw Error(ErrorKind::UnknownVertex, "Büchi target "
                    + std::to_string(v) + " is not a vertex");
    return any_of(targets);
  }

  void check_formula(const Arena& arena, const Formula& f)
  {
    for (auto a: f.atoms())
      if (a >= arena.vertex_count())
        throw Error(ErrorKind::UnknownVertex, "formula atom "
                    + std::to_string(a) + " is not a vertex");
  }

  void check_objectives(const Arena& arena, const ObjectiveProfile& objectives)
  {
    if (objectives.size() != arena.player_count())
      throw Error(ErrorKind::UnknownPlayer, "objective profile has "
                  + std::to_string(objectives.size()) + " entries for "
                  + std::to_string(arena.player_count()) + " players");
    for (const auto& f: objectives.objective)
      check_formula(arena, f);
  }

  bool eval_muller(const Formula& f, const Lasso& lasso)
  {
    VertexId top = 0;
    for (auto v: lasso.cycle)
      top = std::max(top, v);
    std::vector<bool> inf(static_cast<std::size_t>(top) + 1, false);
    for (auto v: lasso.cycle)
      inf[v] = true;
    return f.evaluate(inf);
  }

  std::vector<PlayerId> winners(const Arena& arena,
                                const ObjectiveProfile& objectives,
                                const PositionalProfile& profile)
  {
    check_profile(arena, profile);
    auto inf = inf_mask(outcome(arena, profile), arena.vertex_count());
    std::vector<PlayerId> out;
    for (PlayerId p = 0; p < objectives.size(); ++p)
      if (objectives[p].evaluate(inf))
        out.push_back(p);
    return out;
  }
}

#include <ckrv/reductions.hpp>

#include <ckrv/error.hpp>

namespace ckrv
{
  std::vector<std::string> QbfInstance::variables() const
  {
    std::vector<std::string> out;
    for (const auto& b: prefix)
      out.insert(out.end(), b.variables.begin(), b.variables.end());
    return out;
  }

  namespace
  {
    /// Chain choice vertices c1 … cn, each offering the literal vertices
    /// <lit><i> and n<lit><i>, which lead on to the next choice vertex.
    struct ChainSegment
    {
      std::string choice;
      std::string literal;
      PlayerId owner;
      std::size_t length;
    };

    /// Build the closed chain through the segments; returns the arena and,
    /// for every variable in segment order, the vertex id of its positive
    /// literal.
    std::pair<Arena, std::vector<VertexId>>
    build_chain(const std::vector<ChainSegment>& segments, std::size_t players)
    {
      RawArena raw;
      raw.players = players;
      std::vector<std::string> choices;
      for (const auto& seg: segments)
        for (std::size_t i = 1; i <= seg.length; ++i)
          {
            auto idx = std::to_string(i);
            choices.push_back(seg.choice + idx);
            raw.vertices.push_back({seg.choice + idx, seg.owner, choices.size() == 1});
            raw.vertices.push_back({seg.literal + idx, seg.owner, false});
            raw.vertices.push_back({"n" + seg.literal + idx, seg.owner, false});
          }
      std::size_t k = 0;
      for (const auto& seg: segments)
        for (std::size_t i = 1; i <= seg.length; ++i, ++k)
          {
            auto idx = std::to_string(i);
            const auto& next = choices[(k + 1) % choices.size()];
            raw.edges.emplace_back(choices[k], seg.literal + idx);
            raw.edges.emplace_back(choices[k], "n" + seg.literal + idx);
            raw.edges.emplace_back(seg.literal + idx, next);
            raw.edges.emplace_back("n" + seg.literal + idx, next);
          }
      Arena arena = validate_arena(raw);
      std::vector<VertexId> positive;
      for (const auto& seg: segments)
        for (std::size_t i = 1; i <= seg.length; ++i)
          positive.push_back(*arena.find(seg.literal + std::to_string(i)));
      return {std::move(arena), std::move(positive)};
    }

    Formula rename(const Formula& f, const std::vector<VertexId>& to)
    {
      using K = Formula::Kind;
      switch (f.kind())
        {
        case K::False: case K::True: return f;
        case K::Atom: return Formula::atom(to.at(f.atom_id()));
        case K::Not: return !rename(f.lhs(), to);
        case K::And: return rename(f.lhs(), to) & rename(f.rhs(), to);
        case K::Or: return rename(f.lhs(), to) | rename(f.rhs(), to);
        case K::Implies: return implies(rename(f.lhs(), to), rename(f.rhs(), to));
        }
      return f;
    }

    /// Arena shared by both two-player reductions: A's block of n
    /// universally chosen x-variables, then E's block of m y-variables.
    /// \a x_first tells whether the prefix lists the x-block first.
    Instance two_player_chain(const QbfInstance& qbf, bool x_first)
    {
      const auto& xs = qbf.prefix[x_first ? 0 : 1].variables;
      const auto& ys = qbf.prefix[x_first ? 1 : 0].variables;
      auto [arena, positive] = build_chain(
        {{"a", "x", kPlayerA, xs.size()}, {"e", "y", kPlayerE, ys.size()}}, 2);
      // positive lists x-literals then y-literals; map matrix atoms, which
      // follow prefix order, onto it.
      std::vector<VertexId> atom_to_vertex;
      if (x_first)
        atom_to_vertex = positive;
      else
        {
          atom_to_vertex.assign(positive.begin() + static_cast<std::ptrdiff_t>(xs.size()),
                                positive.end());
          atom_to_vertex.insert(atom_to_vertex.end(), positive.begin(),
                                positive.begin() + static_cast<std::ptrdiff_t>(xs.size()));
        }
      Formula psi = rename(qbf.matrix, atom_to_vertex);
      return {std::move(arena), ObjectiveProfile{{Formula::constant(true), psi}}, psi};
    }

    void require_shape(const QbfInstance& qbf, Quantifier outer, Quantifier inner)
    {
      auto name = [](Quantifier q) { return q == Quantifier::ForAll ? "forall" : "exists"; };
      if (qbf.prefix.size() != 2 || qbf.prefix[0].quantifier != outer
          || qbf.prefix[1].quantifier != inner
          || qbf.prefix[0].variables.empty() || qbf.prefix[1].variables.empty())
        throw Error(ErrorKind::PrefixShapeMismatch,
                    std::string("expected one non-empty ") + name(outer)
                    + " block followed by one non-empty " + name(inner) + " block");
    }
  }

  Instance build_aesat_instance(const QbfInstance& qbf)
  {
    require_shape(qbf, Quantifier::ForAll, Quantifier::Exists);
    return two_player_chain(qbf, true);
  }

  Instance build_easat_instance(const QbfInstance& qbf)
  {
    require_shape(qbf, Quantifier::Exists, Quantifier::ForAll);
    Instance inst = two_player_chain(qbf, false);
    inst.objectives.objective[kPlayerA] = !inst.spec;
    return inst;
  }

  Instance build_sat_instance(const Formula& phi, std::size_t variables)
  {
    if (variables == 0)
      throw Error(ErrorKind::InvalidBound, "formula needs at least one variable");
    for (auto a: phi.atoms())
      if (a >= variables)
        throw Error(ErrorKind::UnknownName, "atom " + std::to_string(a)
                    + " is not one of the " + std::to_string(variables)
                    + " variables");
    auto [arena, positive] = build_chain({{"v", "x", 0, variables}}, 1);
    Formula f = rename(phi, positive);
    return {std::move(arena), ObjectiveProfile{{f}}, !f};
  }

  bool qbf_eval(const QbfInstance& qbf)
  {
    std::vector<Quantifier> quant;
    for (const auto& b: qbf.prefix)
      quant.insert(quant.end(), b.variables.size(), b.quantifier);
    for (auto a: qbf.matrix.atoms())
      if (a >= quant.size())
        throw Error(ErrorKind::UnknownName, "matrix atom "
                    + std::to_string(a) + " is not bound by the prefix");
    if (quant.size() > kMaxQbfVariables)
      throw Error(ErrorKind::TooManyVariables, std::to_string(quant.size())
                  + " variables, at most "
                  + std::to_string(kMaxQbfVariables) + " supported");
    std::vector<bool> value(quant.size(), false);
    auto expand = [&](auto& self, std::size_t k) -> bool {
      if (k == quant.size())
        return qbf.matrix.evaluate(value);
      value[k] = false;
      bool lo = self(self, k + 1);
      if (quant[k] == Quantifier::Exists ? lo : !lo)
        return lo;
      value[k] = true;
      return self(self, k + 1);
    };
    return expand(expand, 0);
  }
}

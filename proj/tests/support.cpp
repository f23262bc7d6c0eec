#include "support.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace ckrv::test
{
  Arena triangle()
  {
    RawArena raw;
    raw.players = 3;
    for (int p = 0; p < 3; ++p)
      raw.vertices.push_back({"v" + std::to_string(p), p, p == 0});
    for (int p = 0; p < 3; ++p)
      {
        auto self = "v" + std::to_string(p);
        raw.edges.emplace_back(self, "v" + std::to_string((p + 2) % 3));
        raw.edges.emplace_back(self, "v" + std::to_string((p + 1) % 3));
      }
    return validate_arena(raw);
  }

  Arena self_loop()
  {
    RawArena raw;
    raw.players = 1;
    raw.vertices.push_back({"v0", 0, true});
    raw.edges.emplace_back("v0", "v0");
    return validate_arena(raw);
  }

  ObjectiveProfile alpha(const Arena& a)
  {
    ObjectiveProfile o;
    for (std::uint32_t p = 0; p < 3; ++p)
      {
        std::vector<VertexId> u{(p + 1) % 3};
        o.objective.push_back(buchi_to_muller(a, u));
      }
    return o;
  }

  ObjectiveProfile alpha_prime(const Arena& a)
  {
    ObjectiveProfile o;
    for (std::uint32_t p = 0; p < 3; ++p)
      {
        std::vector<VertexId> u{p};
        o.objective.push_back(buchi_to_muller(a, u));
      }
    return o;
  }

  PositionalProfile profile(const Arena& a,
                            std::vector<std::pair<std::string, std::string>> choice)
  {
    PositionalProfile s;
    for (VertexId v = 0; v < a.vertex_count(); ++v)
      s.next.push_back(a.successors(v)[0]);
    for (const auto& [from, to]: choice)
      s.next.at(*a.find(from)) = *a.find(to);
    return s;
  }

  PositionalProfile rl(const Arena& a, std::string_view word)
  {
    PositionalProfile s;
    for (VertexId v = 0; v < 3; ++v)
      s.next.push_back(a.successors(v)[word.at(v) == 'R' ? 0 : 1]);
    return s;
  }

  Formula parse(const Arena& a, std::string_view text)
  {
    return parse_formula(text, [&](std::string_view n) { return a.find(n); });
  }

  Formula parse_over(const std::vector<std::string>& names, std::string_view text)
  {
    return parse_formula(text, [&](std::string_view n) -> std::optional<std::uint32_t> {
      auto it = std::find(names.begin(), names.end(), n);
      if (it == names.end())
        return std::nullopt;
      return static_cast<std::uint32_t>(it - names.begin());
    });
  }

  Formula random_formula(Rng& rng, std::uint32_t atoms, int depth)
  {
    std::uniform_int_distribution<int> op(0, depth <= 0 ? 0 : 4);
    switch (op(rng))
      {
      case 0:
        {
          if (atoms == 0 || std::uniform_int_distribution<int>(0, 9)(rng) == 0)
            return Formula::constant(std::uniform_int_distribution<int>(0, 1)(rng));
          return Formula::atom(std::uniform_int_distribution<std::uint32_t>(0, atoms - 1)(rng));
        }
      case 1:
        return !random_formula(rng, atoms, depth - 1);
      case 2:
        return random_formula(rng, atoms, depth - 1) & random_formula(rng, atoms, depth - 1);
      case 3:
        return random_formula(rng, atoms, depth - 1) | random_formula(rng, atoms, depth - 1);
      default:
        return implies(random_formula(rng, atoms, depth - 1),
                       random_formula(rng, atoms, depth - 1));
      }
  }

  Arena random_arena(Rng& rng, std::size_t max_vertices, std::size_t max_players,
                     std::uint64_t max_profiles)
  {
    for (;;)
      {
        std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
        std::size_t players = std::uniform_int_distribution<std::size_t>(1, max_players)(rng);
        std::size_t init = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
        RawArena raw;
        raw.players = players;
        for (std::size_t v = 0; v < n; ++v)
          raw.vertices.push_back(
            {"v" + std::to_string(v),
             std::uniform_int_distribution<std::int64_t>(0, players - 1)(rng), v == init});
        std::uint64_t count = 1;
        for (std::size_t v = 0; v < n; ++v)
          {
            std::vector<std::size_t> targets(n);
            std::iota(targets.begin(), targets.end(), 0);
            std::shuffle(targets.begin(), targets.end(), rng);
            std::size_t deg = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(n, 3))(rng);
            count *= deg;
            for (std::size_t k = 0; k < deg; ++k)
              raw.edges.emplace_back("v" + std::to_string(v), "v" + std::to_string(targets[k]));
          }
        if (count <= max_profiles)
          return validate_arena(raw);
      }
  }

  Formula random_muller(Rng& rng, const Arena& a)
  {
    std::set<std::vector<bool>> realised;
    for (const auto& s: oracle::all_profiles(a))
      realised.insert(oracle::simulate_inf(a, s.next));
    Formula out = Formula::constant(false);
    for (const auto& inf: realised)
      {
        if (rng() % 2)
          continue;
        Formula exact = Formula::constant(true);
        for (VertexId v = 0; v < a.vertex_count(); ++v)
          exact = exact & (inf[v] ? Formula::atom(v) : !Formula::atom(v));
        out = out | exact;
      }
    return out;
  }

  ObjectiveProfile random_objectives(Rng& rng, const Arena& a, int depth)
  {
    ObjectiveProfile o;
    for (PlayerId p = 0; p < a.player_count(); ++p)
      switch (rng() % 5)
        {
        case 0:
          {
            std::vector<VertexId> targets;
            for (VertexId v = 0; v < a.vertex_count(); ++v)
              if (rng() % 3 == 0)
                targets.push_back(v);
            o.objective.push_back(buchi_to_muller(a, targets));
            break;
          }
        case 1:
          o.objective.push_back(random_muller(rng, a));
          break;
        case 2:
          if (p > 0)
            {
              o.objective.push_back(!o.objective[rng() % p]);
              break;
            }
          [[fallthrough]];
        default:
          o.objective.push_back(random_formula(rng, a.vertex_count(), depth));
        }
    return o;
  }

  std::vector<Formula> formulas_by_truth_table(std::uint32_t vars, int depth)
  {
    const std::uint32_t rows = 1u << vars;
    auto table = [&](const Formula& f) {
      std::uint64_t t = 0;
      for (std::uint32_t r = 0; r < rows; ++r)
        {
          std::vector<bool> val(vars);
          for (std::uint32_t k = 0; k < vars; ++k)
            val[k] = (r >> k) & 1;
          if (oracle::eval(f, val))
            t |= std::uint64_t{1} << r;
        }
      return t;
    };
    std::map<std::uint64_t, Formula> seen;
    std::vector<Formula> all, level;
    auto add = [&](Formula f, std::vector<Formula>& into) {
      if (seen.emplace(table(f), f).second)
        {
          all.push_back(f);
          into.push_back(std::move(f));
        }
    };
    for (std::uint32_t k = 0; k < vars; ++k)
      add(Formula::atom(k), level);
    for (int d = 1; d <= depth; ++d)
      {
        std::vector<Formula> next;
        const std::vector<Formula> before = all;
        for (const auto& f: level)
          add(!f, next);
        for (const auto& f: level)
          for (const auto& g: before)
            {
              add(f & g, next);
              add(g & f, next);
              add(f | g, next);
              add(g | f, next);
            }
        level = std::move(next);
      }
    return all;
  }

  namespace oracle
  {
    std::vector<PositionalProfile> all_profiles(const Arena& a)
    {
      std::vector<PositionalProfile> out;
      std::vector<VertexId> next(a.vertex_count());
      std::function<void(VertexId)> rec = [&](VertexId v) {
        if (v == a.vertex_count())
          {
            out.push_back({next});
            return;
          }
        for (auto t: a.successors(v))
          {
            next[v] = t;
            rec(v + 1);
          }
      };
      rec(0);
      return out;
    }

    std::vector<bool> simulate_inf(const Arena& a, const std::vector<VertexId>& next)
    {
      const std::size_t n = a.vertex_count();
      std::vector<std::size_t> visits(n, 0);
      VertexId v = a.initial();
      for (std::size_t step = 0; step < 4 * n * n; ++step)
        {
          ++visits[v];
          v = next[v];
        }
      std::vector<bool> inf(n);
      for (std::size_t k = 0; k < n; ++k)
        inf[k] = visits[k] >= 2 * n;
      return inf;
    }

    bool eval(const Formula& f, const std::vector<bool>& value)
    {
      switch (f.kind())
        {
        case Formula::Kind::False:
          return false;
        case Formula::Kind::True:
          return true;
        case Formula::Kind::Atom:
          return f.atom_id() < value.size() && value[f.atom_id()];
        case Formula::Kind::Not:
          return !eval(f.lhs(), value);
        case Formula::Kind::And:
          return eval(f.lhs(), value) && eval(f.rhs(), value);
        case Formula::Kind::Or:
          return eval(f.lhs(), value) || eval(f.rhs(), value);
        case Formula::Kind::Implies:
          return !eval(f.lhs(), value) || eval(f.rhs(), value);
        }
      return false;
    }

    bool wins(const Arena& a, const ObjectiveProfile& o,
              const std::vector<VertexId>& next, PlayerId p)
    {
      return eval(o.objective[p], simulate_inf(a, next));
    }

    std::vector<PositionalProfile> deviations(const Arena& a,
                                              const PositionalProfile& s, PlayerId p)
    {
      std::vector<PositionalProfile> out;
      for (auto& t: all_profiles(a))
        {
          bool same = true;
          for (VertexId v = 0; v < a.vertex_count(); ++v)
            if (a.owner(v) != p && t.next[v] != s.next[v])
              same = false;
          if (same)
            out.push_back(std::move(t));
        }
      return out;
    }

    bool is_nash(const Arena& a, const ObjectiveProfile& o, const PositionalProfile& s)
    {
      for (PlayerId p = 0; p < a.player_count(); ++p)
        {
          if (wins(a, o, s.next, p))
            continue;
          for (const auto& t: deviations(a, s, p))
            if (wins(a, o, t.next, p))
              return false;
        }
      return true;
    }

    bool has_winning_strategy(const Arena& a, const ObjectiveProfile& o, PlayerId p)
    {
      auto profiles = all_profiles(a);
      for (const auto& mine: profiles)
        {
          bool all = true;
          for (const auto& s: profiles)
            {
              auto t = s;
              for (VertexId v = 0; v < a.vertex_count(); ++v)
                if (a.owner(v) == p)
                  t.next[v] = mine.next[v];
              all = all && wins(a, o, t.next, p);
            }
          if (all)
            return true;
        }
      return false;
    }

    Relation relation(const std::vector<std::size_t>& labels)
    {
      Relation r(labels.size(), std::vector<bool>(labels.size()));
      for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = 0; j < labels.size(); ++j)
          r[i][j] = labels[i] == labels[j];
      return r;
    }

    std::vector<bool> know(const Relation& r, const std::vector<bool>& e)
    {
      std::vector<bool> out(e.size(), true);
      for (std::size_t w = 0; w < e.size(); ++w)
        for (std::size_t u = 0; u < e.size(); ++u)
          if (r[w][u] && !e[u])
            out[w] = false;
      return out;
    }

    std::vector<bool> mutual_know(const std::vector<Relation>& rs, const std::vector<bool>& e)
    {
      std::vector<bool> out(e.size(), true);
      for (const auto& r: rs)
        {
          auto k = know(r, e);
          for (std::size_t w = 0; w < e.size(); ++w)
            out[w] = out[w] && k[w];
        }
      return out;
    }

    std::vector<bool> common_know(const std::vector<Relation>& rs, const std::vector<bool>& e)
    {
      auto x = mutual_know(rs, e);
      for (;;)
        {
          auto y = mutual_know(rs, x);
          if (y == x)
            return x;
          x = std::move(y);
        }
    }

    std::vector<bool> rational(const Arena& a, const ObjectiveProfile& o,
                               const std::vector<Relation>& rs,
                               const std::vector<PositionalProfile>& sigma)
    {
      const std::size_t n = sigma.size();
      std::vector<bool> out(n, true);
      auto all = all_profiles(a);
      for (PlayerId p = 0; p < a.player_count(); ++p)
        for (std::size_t w = 0; w < n; ++w)
          for (const auto& alt: all)
            {
              bool weak = true, strict = false;
              for (std::size_t u = 0; u < n; ++u)
                {
                  if (!rs[p][w][u])
                    continue;
                  auto dev = sigma[u];
                  for (VertexId v = 0; v < a.vertex_count(); ++v)
                    if (a.owner(v) == p)
                      dev.next[v] = alt.next[v];
                  bool before = wins(a, o, sigma[u].next, p);
                  bool after = wins(a, o, dev.next, p);
                  if (before && !after)
                    weak = false;
                  if (!before && after)
                    strict = true;
                }
              if (weak && strict)
                out[w] = false;
            }
      return out;
    }

    std::vector<bool> ck_rat(const Arena& a, const ObjectiveProfile& o,
                             const std::vector<Relation>& rs,
                             const std::vector<PositionalProfile>& sigma)
    {
      return common_know(rs, rational(a, o, rs, sigma));
    }

    namespace
    {
      // Restricted growth strings of length n.
      void partitions(std::size_t n, std::vector<std::size_t>& cur,
                      std::vector<std::vector<std::size_t>>& out)
      {
        if (cur.size() == n)
          {
            out.push_back(cur);
            return;
          }
        std::size_t top = cur.empty() ? 0 : *std::max_element(cur.begin(), cur.end()) + 1;
        for (std::size_t c = 0; c <= top; ++c)
          {
            cur.push_back(c);
            partitions(n, cur, out);
            cur.pop_back();
          }
      }
    }

    bool in_T_P(const Arena& a, const ObjectiveProfile& o,
                const PositionalProfile& target, std::size_t bound)
    {
      auto all = all_profiles(a);
      const std::size_t np = a.player_count();
      for (std::size_t n = 1; n <= bound; ++n)
        {
          std::vector<std::vector<std::size_t>> parts;
          std::vector<std::size_t> cur;
          partitions(n, cur, parts);
          std::vector<std::size_t> pick(n, 0);
          for (;;)
            {
              std::vector<PositionalProfile> sigma;
              for (auto k: pick)
                sigma.push_back(all[k]);
              if (std::find(sigma.begin(), sigma.end(), target) != sigma.end())
                {
                  // Per player, the partitions satisfying the consistency
                  // condition.
                  std::vector<std::vector<Relation>> options(np);
                  for (PlayerId p = 0; p < np; ++p)
                    for (const auto& lab: parts)
                      {
                        bool ok = true;
                        for (std::size_t i = 0; i < n && ok; ++i)
                          for (std::size_t j = 0; j < n && ok; ++j)
                            if (lab[i] == lab[j])
                              for (VertexId v = 0; v < a.vertex_count(); ++v)
                                if (a.owner(v) == p && sigma[i].next[v] != sigma[j].next[v])
                                  ok = false;
                        if (ok)
                          options[p].push_back(relation(lab));
                      }
                  std::vector<std::size_t> choice(np, 0);
                  for (;;)
                    {
                      std::vector<Relation> rs;
                      for (PlayerId p = 0; p < np; ++p)
                        rs.push_back(options[p][choice[p]]);
                      auto ck = ck_rat(a, o, rs, sigma);
                      for (std::size_t w = 0; w < n; ++w)
                        if (ck[w] && sigma[w] == target)
                          return true;
                      std::size_t k = 0;
                      while (k < np && ++choice[k] == options[k].size())
                        choice[k++] = 0;
                      if (k == np)
                        break;
                    }
                }
              std::size_t k = 0;
              while (k < n && ++pick[k] == all.size())
                pick[k++] = 0;
              if (k == n)
                break;
            }
        }
      return false;
    }

    namespace
    {
      bool qbf_rec(const QbfInstance& q, std::size_t block, std::size_t var,
                   std::vector<bool>& value)
      {
        if (block == q.prefix.size())
          return eval(q.matrix, value);
        const auto& b = q.prefix[block];
        if (var == b.variables.size())
          return qbf_rec(q, block + 1, 0, value);
        std::size_t slot = 0;
        for (std::size_t k = 0; k < block; ++k)
          slot += q.prefix[k].variables.size();
        slot += var;
        bool any = false, every = true;
        for (bool bit: {false, true})
          {
            value[slot] = bit;
            bool r = qbf_rec(q, block, var + 1, value);
            any = any || r;
            every = every && r;
          }
        return b.quantifier == Quantifier::Exists ? any : every;
      }
    }

    bool qbf(const QbfInstance& q)
    {
      std::size_t n = 0;
      for (const auto& b: q.prefix)
        n += b.variables.size();
      std::vector<bool> value(n, false);
      return qbf_rec(q, 0, 0, value);
    }
  }
}

#include <ckrv/problem_io.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include <ckrv/error.hpp>

namespace ckrv
{
  namespace
  {
    struct Line
    {
      std::size_t number = 0;
      std::string_view text;
      std::vector<std::string_view> words;
      std::vector<std::size_t> columns;
    };

    std::vector<Line> split_lines(std::string_view text)
    {
      std::vector<Line> out;
      std::size_t number = 0;
      while (!text.empty() || number == 0)
        {
          ++number;
          auto eol = text.find('\n');
          std::string_view raw = text.substr(0, eol);
          text = eol == std::string_view::npos ? std::string_view{}
                                               : text.substr(eol + 1);
          if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
          if (!raw.empty() && raw.back() == '\r')
            raw.remove_suffix(1);
          Line line{number, raw, {}, {}};
          std::size_t i = 0;
          while (i < raw.size())
            {
              while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])))
                ++i;
              std::size_t start = i;
              while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])))
                ++i;
              if (i > start)
                {
                  line.words.push_back(raw.substr(start, i - start));
                  line.columns.push_back(start + 1);
                }
            }
          if (!line.words.empty())
            out.push_back(std::move(line));
          if (eol == std::string_view::npos)
            break;
        }
      return out;
    }

    [[noreturn]] void syntax(const Line& line, const std::string& what,
                             std::size_t column = 0)
    {
      throw Error(ErrorKind::Syntax, what, line.number, column);
    }

    bool is_identifier(std::string_view s)
    {
      if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
      return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
      });
    }

    std::int64_t number(const Line& line, std::size_t word)
    {
      auto w = line.words.at(word);
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
      if (ec != std::errc{} || ptr != w.data() + w.size() || value < 0)
        syntax(line, "expected a non-negative integer, got '" + std::string(w) + "'",
               line.columns.at(word));
      return value;
    }

    /// Text of the line from word \a word on.
    std::string_view rest(const Line& line, std::size_t word)
    {
      return line.text.substr(line.columns.at(word) - 1);
    }

    Formula formula_at(const Line& line, std::size_t word, const Arena& arena)
    {
      if (word >= line.words.size())
        syntax(line, "missing formula");
      try
        {
          return parse_formula(rest(line, word), [&](std::string_view name) {
            return arena.find(name);
          });
        }
      catch (const Error& e)
        {
          throw Error(e.kind(), e.message(),
                      line.number, e.column() == 0 ? 0 : line.columns[word] - 1 + e.column());
        }
    }

    Error relocate(const Error& e, const Line& line, std::size_t column)
    {
      return Error(e.kind(), e.message(), line.number, column);
    }
  }

  ProblemFile parse_problem(std::string_view text)
  {
    auto lines = split_lines(text);
    std::optional<std::size_t> players;
    RawArena raw;
    std::map<std::string, std::size_t, std::less<>> vertex_line;
    std::vector<const Line*> edges, objectives, worlds, assigns, classes;
    const Line* spec_line = nullptr;

    auto want = [](const Line& l, std::size_t lo, std::size_t hi) {
      if (l.words.size() < lo || l.words.size() > hi)
        syntax(l, "wrong number of fields for '" + std::string(l.words[0]) + "'");
    };

    for (const auto& l: lines)
      {
        auto key = l.words[0];
        if (key == "players")
          {
            want(l, 2, 2);
            if (players)
              syntax(l, "players declared twice");
            players = static_cast<std::size_t>(number(l, 1));
          }
        else if (key == "vertex")
          {
            want(l, 4, 5);
            auto name = l.words[1];
            if (!is_identifier(name) || name == "true" || name == "false")
              syntax(l, "invalid vertex name '" + std::string(name) + "'", l.columns[1]);
            if (l.words[2] != "owner")
              syntax(l, "expected 'owner'", l.columns[2]);
            bool initial = false;
            if (l.words.size() == 5)
              {
                if (l.words[4] != "initial")
                  syntax(l, "expected 'initial'", l.columns[4]);
                initial = true;
              }
            if (vertex_line.contains(name))
              throw Error(ErrorKind::DuplicateOwner, "vertex '" + std::string(name)
                          + "' declared twice", l.number, l.columns[1]);
            vertex_line.emplace(std::string(name), l.number);
            raw.vertices.push_back({std::string(name), number(l, 3), initial});
          }
        else if (key == "edge")
          {
            want(l, 3, 3);
            edges.push_back(&l);
          }
        else if (key == "objective")
          objectives.push_back(&l);
        else if (key == "spec")
          {
            if (spec_line)
              syntax(l, "spec declared twice");
            spec_line = &l;
          }
        else if (key == "world")
          {
            want(l, 2, 2);
            worlds.push_back(&l);
          }
        else if (key == "assign")
          {
            want(l, 6, 6);
            assigns.push_back(&l);
          }
        else if (key == "class")
          {
            want(l, 2, static_cast<std::size_t>(-1));
            classes.push_back(&l);
          }
        else
          syntax(l, "unknown keyword '" + std::string(key) + "'", l.columns[0]);
      }

    if (!players)
      throw Error(ErrorKind::Syntax, "missing 'players' line");
    raw.players = *players;
    for (std::size_t k = 0; k < raw.vertices.size(); ++k)
      if (static_cast<std::uint64_t>(raw.vertices[k].owner) >= raw.players)
        throw Error(ErrorKind::UnknownPlayer, "owner "
                    + std::to_string(raw.vertices[k].owner) + " of '"
                    + raw.vertices[k].name + "' is not a player",
                    vertex_line[raw.vertices[k].name]);
    for (const Line* l: edges)
      {
        for (std::size_t k = 1; k <= 2; ++k)
          if (!vertex_line.contains(l->words[k]))
            throw Error(ErrorKind::UnknownName, "undeclared vertex '"
                        + std::string(l->words[k]) + "'", l->number, l->columns[k]);
        raw.edges.emplace_back(std::string(l->words[1]), std::string(l->words[2]));
      }

    Arena arena = [&] {
      try
        {
          return validate_arena(raw);
        }
      catch (const Error& e)
        {
          if (e.kind() == ErrorKind::SinkVertex)
            for (const auto& [name, ln]: vertex_line)
              if (e.message().find("'" + name + "'") != std::string_view::npos)
                throw e.at_line(ln);
          throw;
        }
    }();

    std::vector<std::optional<Formula>> objective(*players);
    for (const Line* l: objectives)
      {
        if (l->words.size() < 3)
          syntax(*l, "expected 'objective <player> <formula>'");
        auto p = number(*l, 1);
        if (static_cast<std::uint64_t>(p) >= *players)
          throw Error(ErrorKind::UnknownPlayer, "no player " + std::to_string(p),
                      l->number, l->columns[1]);
        if (objective[p])
          syntax(*l, "objective of player " + std::to_string(p) + " declared twice");
        objective[p] = formula_at(*l, 2, arena);
      }
    ObjectiveProfile alpha;
    for (PlayerId p = 0; p < *players; ++p)
      {
        if (!objective[p])
          throw Error(ErrorKind::MissingObjective, "player " + std::to_string(p)
                      + " has no objective");
        alpha.objective.push_back(*objective[p]);
      }
    if (!spec_line)
      throw Error(ErrorKind::MissingSpec, "no 'spec' line");
    Formula spec = formula_at(*spec_line, 1, arena);

    ProblemFile problem{std::move(arena), std::move(alpha), std::move(spec), {}};
    if (worlds.empty() && assigns.empty() && classes.empty())
      return problem;

    const Arena& a = problem.arena;
    std::vector<std::string> names;
    std::map<std::string, std::size_t, std::less<>> world_index;
    for (const Line* l: worlds)
      {
        std::string name(l->words[1]);
        if (world_index.contains(name))
          throw Error(ErrorKind::InvalidModel, "world '" + name + "' declared twice",
                      l->number, l->columns[1]);
        world_index.emplace(name, names.size());
        names.push_back(name);
      }
    auto world_of = [&](const Line& l, std::size_t word) {
      auto it = world_index.find(l.words[word]);
      if (it == world_index.end())
        throw Error(ErrorKind::UnknownName, "undeclared world '"
                    + std::string(l.words[word]) + "'", l.number, l.columns[word]);
      return it->second;
    };
    auto vertex_of = [&](const Line& l, std::size_t word) {
      auto v = a.find(l.words[word]);
      if (!v)
        throw Error(ErrorKind::UnknownName, "undeclared vertex '"
                    + std::string(l.words[word]) + "'", l.number, l.columns[word]);
      return *v;
    };
    auto player_of = [&](const Line& l, std::size_t word) {
      auto p = number(l, word);
      if (static_cast<std::uint64_t>(p) >= a.player_count())
        throw Error(ErrorKind::UnknownPlayer, "no player " + std::to_string(p),
                    l.number, l.columns[word]);
      return static_cast<PlayerId>(p);
    };

    constexpr VertexId unset = static_cast<VertexId>(-1);
    std::vector<std::vector<VertexId>> next(names.size(),
                                            std::vector<VertexId>(a.vertex_count(), unset));
    for (const Line* l: assigns)
      {
        auto w = world_of(*l, 1);
        auto p = player_of(*l, 2);
        auto from = vertex_of(*l, 3);
        if (l->words[4] != "->")
          syntax(*l, "expected '->'", l->columns[4]);
        auto to = vertex_of(*l, 5);
        if (a.owner(from) != p)
          throw Error(ErrorKind::PlayerMismatch, "'" + a.name(from)
                      + "' is not owned by player " + std::to_string(p),
                      l->number, l->columns[2]);
        if (!a.has_edge(from, to))
          throw Error(ErrorKind::InvalidProfile, "no edge " + a.name(from) + " -> "
                      + a.name(to), l->number, l->columns[3]);
        if (next[w][from] != unset)
          syntax(*l, "vertex '" + a.name(from) + "' assigned twice in world '"
                 + names[w] + "'");
        next[w][from] = to;
      }
    std::vector<PositionalProfile> sigma;
    for (std::size_t w = 0; w < names.size(); ++w)
      {
        for (VertexId v = 0; v < a.vertex_count(); ++v)
          if (next[w][v] == unset)
            {
              if (a.successors(v).size() != 1)
                throw Error(ErrorKind::InvalidModel, "world '" + names[w]
                            + "' has no choice at '" + a.name(v) + "'",
                            worlds[w]->number);
              next[w][v] = a.successors(v)[0];
            }
        sigma.push_back({std::move(next[w])});
      }

    // Unlisted worlds keep singleton labels (their own index).
    std::vector<std::vector<std::size_t>> labels(a.player_count());
    for (auto& lab: labels)
      for (std::size_t w = 0; w < names.size(); ++w)
        lab.push_back(w);
    std::vector<std::vector<bool>> listed(a.player_count(),
                                          std::vector<bool>(names.size(), false));
    for (const Line* l: classes)
      {
        auto p = player_of(*l, 1);
        std::size_t label = names.size() + static_cast<std::size_t>(l - lines.data());
        for (std::size_t k = 2; k < l->words.size(); ++k)
          {
            auto w = world_of(*l, k);
            if (listed[p][w])
              throw Error(ErrorKind::InvalidFrame, "world '" + names[w]
                          + "' is in two classes of player " + std::to_string(p),
                          l->number, l->columns[k]);
            listed[p][w] = true;
            labels[p][w] = label;
          }
      }
    try
      {
        KripkeFrame frame(names.size(), std::move(labels));
        problem.model.emplace(a, std::move(frame), std::move(names), std::move(sigma));
      }
    catch (const Error& e)
      {
        throw relocate(e, classes.empty() ? *worlds.front() : *classes.front(), 0);
      }
    return problem;
  }

  std::string format_model(const Arena& arena, const EpistemicModel& model)
  {
    std::ostringstream out;
    for (WorldId w = 0; w < model.world_count(); ++w)
      out << "world " << model.world_name(w) << '\n';
    for (WorldId w = 0; w < model.world_count(); ++w)
      for (VertexId v = 0; v < arena.vertex_count(); ++v)
        out << "assign " << model.world_name(w) << ' ' << arena.owner(v) << ' '
            << arena.name(v) << " -> " << arena.name(model.assignment(w).next[v])
            << '\n';
    const auto& frame = model.frame();
    for (PlayerId p = 0; p < frame.player_count(); ++p)
      for (std::size_t c = 0; c < frame.class_count(p); ++c)
        {
          auto cls = frame.members(p, c);
          if (cls.size() < 2)
            continue;
          out << "class " << p;
          for (auto w: cls)
            out << ' ' << model.world_name(w);
          out << '\n';
        }
    return out.str();
  }

  std::string serialize_problem(const ProblemFile& problem)
  {
    const Arena& a = problem.arena;
    std::ostringstream out;
    out << "players " << a.player_count() << '\n';
    for (VertexId v = 0; v < a.vertex_count(); ++v)
      {
        out << "vertex " << a.name(v) << " owner " << a.owner(v);
        if (v == a.initial())
          out << " initial";
        out << '\n';
      }
    for (VertexId v = 0; v < a.vertex_count(); ++v)
      for (auto t: a.successors(v))
        out << "edge " << a.name(v) << ' ' << a.name(t) << '\n';
    for (PlayerId p = 0; p < problem.objectives.size(); ++p)
      out << "objective " << p << ' ' << to_string(problem.objectives[p], a.names())
          << '\n';
    out << "spec " << to_string(problem.spec, a.names()) << '\n';
    if (problem.model)
      out << format_model(a, *problem.model);
    return out.str();
  }

  ProblemFile to_problem(Instance instance)
  {
    return {std::move(instance.arena), std::move(instance.objectives),
            std::move(instance.spec), std::nullopt};
  }

  PositionalProfile parse_profile(const Arena& arena, std::string_view text)
  {
    constexpr VertexId unset = static_cast<VertexId>(-1);
    PositionalProfile s{std::vector<VertexId>(arena.vertex_count(), unset)};
    for (const auto& l: split_lines(text))
      {
        std::string spaced(l.text);
        if (auto colon = spaced.find(':'); colon != std::string::npos)
          spaced.replace(colon, 1, " : ");
        std::istringstream words(spaced);
        std::vector<std::string> w{std::istream_iterator<std::string>(words), {}};
        if (w.size() != 5 || w[1] != ":" || w[3] != "->")
          syntax(l, "expected '<player>: <vertex> -> <vertex>'");
        std::int64_t p = 0;
        auto [ptr, ec] = std::from_chars(w[0].data(), w[0].data() + w[0].size(), p);
        if (ec != std::errc{} || ptr != w[0].data() + w[0].size() || p < 0
            || static_cast<std::uint64_t>(p) >= arena.player_count())
          throw Error(ErrorKind::UnknownPlayer, "bad player '" + std::string(w[0]) + "'",
                      l.number);
        auto from = arena.find(w[2]);
        auto to = arena.find(w[4]);
        if (!from || !to)
          throw Error(ErrorKind::UnknownName, "undeclared vertex", l.number);
        if (arena.owner(*from) != static_cast<PlayerId>(p))
          throw Error(ErrorKind::PlayerMismatch, "'" + arena.name(*from)
                      + "' is not owned by player " + std::to_string(p), l.number);
        if (!arena.has_edge(*from, *to))
          throw Error(ErrorKind::InvalidProfile, "no edge " + arena.name(*from)
                      + " -> " + arena.name(*to), l.number);
        if (s.next[*from] != unset)
          syntax(l, "vertex '" + arena.name(*from) + "' chosen twice");
        s.next[*from] = *to;
      }
    for (VertexId v = 0; v < arena.vertex_count(); ++v)
      if (s.next[v] == unset)
        {
          if (arena.successors(v).size() != 1)
            throw Error(ErrorKind::InvalidProfile, "no choice at '" + arena.name(v) + "'");
          s.next[v] = arena.successors(v)[0];
        }
    return s;
  }

  std::string format_profile(const Arena& arena, const PositionalProfile& profile)
  {
    std::ostringstream out;
    for (VertexId v = 0; v < arena.vertex_count(); ++v)
      out << arena.owner(v) << ": " << arena.name(v) << " -> "
          << arena.name(profile.next[v]) << '\n';
    return out.str();
  }

  std::string format_strategy(const Arena& arena, const PositionalStrategy& strategy)
  {
    std::ostringstream out;
    auto owned = arena.owned_by(strategy.player);
    for (std::size_t k = 0; k < owned.size(); ++k)
      out << strategy.player << ": " << arena.name(owned[k]) << " -> "
          << arena.name(strategy.next[k]) << '\n';
    return out.str();
  }

  std::string format_lasso(const Arena& arena, const Lasso& lasso)
  {
    std::string out;
    for (auto v: lasso.prefix)
      out += arena.name(v) + ' ';
    out += '(';
    for (std::size_t k = 0; k < lasso.cycle.size(); ++k)
      {
        if (k != 0)
          out += ' ';
        out += arena.name(lasso.cycle[k]);
      }
    out += ")^w";
    return out;
  }

  std::string format_trace(const Game& game, const IdipResult& result)
  {
    const Arena& a = game.arena();
    std::ostringstream out;
    for (std::size_t r = 0; r < result.rounds.size(); ++r)
      {
        const auto& round = result.rounds[r];
        out << "round " << r + 1 << ": " << round.pool_size << " profiles, "
            << round.removed.size() << " removed";
        for (std::size_t k = 0; k < round.removed.size(); ++k)
          {
            const auto& rm = round.removed[k];
            auto st = game.space().strategy(rm.witness.player, rm.witness.strategy);
            out << (k == 0 ? ": " : "; ")
                << profile_id(a, game.space().profile(rm.profile))
                << " by player " << rm.witness.player << " [";
            auto owned = a.owned_by(st.player);
            for (std::size_t j = 0; j < owned.size(); ++j)
              out << (j == 0 ? "" : ",") << a.name(owned[j]) << "->"
                  << a.name(st.next[j]);
            out << ']';
          }
        out << '\n';
      }
    return out.str();
  }

  QbfInstance parse_qbf(std::string_view text)
  {
    QbfInstance q;
    std::vector<std::string> vars;
    std::string matrix;
    const Line* matrix_start = nullptr;
    auto lines = split_lines(text);
    for (const auto& l: lines)
      {
        bool header = !matrix_start
          && (l.words[0] == "forall" || l.words[0] == "exists");
        if (!header)
          {
            if (!matrix_start)
              matrix_start = &l;
            matrix += std::string(l.text) + ' ';
            continue;
          }
        QuantifierBlock block;
        block.quantifier = l.words[0] == "forall" ? Quantifier::ForAll : Quantifier::Exists;
        for (std::size_t k = 1; k < l.words.size(); ++k)
          {
            std::string name(l.words[k]);
            if (!is_identifier(name) || name == "true" || name == "false"
                || name == "forall" || name == "exists")
              syntax(l, "invalid variable name '" + name + "'", l.columns[k]);
            if (std::find(vars.begin(), vars.end(), name) != vars.end())
              syntax(l, "variable '" + name + "' bound twice", l.columns[k]);
            vars.push_back(name);
            block.variables.push_back(name);
          }
        q.prefix.push_back(std::move(block));
      }
    if (!matrix_start)
      throw Error(ErrorKind::Syntax, "missing matrix");
    try
      {
        q.matrix = parse_formula(matrix, [&](std::string_view name) -> std::optional<std::uint32_t> {
          auto it = std::find(vars.begin(), vars.end(), name);
          if (it == vars.end())
            return std::nullopt;
          return static_cast<std::uint32_t>(it - vars.begin());
        });
      }
    catch (const Error& e)
      {
        throw e.at_line(matrix_start->number);
      }
    return q;
  }

  std::string serialize_qbf(const QbfInstance& qbf)
  {
    std::ostringstream out;
    for (const auto& b: qbf.prefix)
      {
        out << (b.quantifier == Quantifier::ForAll ? "forall" : "exists");
        for (const auto& v: b.variables)
          out << ' ' << v;
        out << '\n';
      }
    auto vars = qbf.variables();
    out << to_string(qbf.matrix, vars) << '\n';
    return out.str();
  }
}

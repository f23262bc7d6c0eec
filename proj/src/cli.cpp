#include <ckrv/cli.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include <ckrv/ckr.hpp>
#include <ckrv/error.hpp>
#include <ckrv/problem_io.hpp>
#include <ckrv/reductions.hpp>
#include <ckrv/verify.hpp>

namespace ckrv
{
  namespace
  {
    struct Options
    {
      std::string file;
      std::string profile_file;
      std::optional<ProfileIndex> index;
      std::uint64_t cap = kDefaultProfileCap;
      bool trace = false;
      std::optional<std::size_t> bound;
      std::string mode = "exact";
      std::uint64_t search_cap = kDefaultSearchCap;
      std::string kind;
    };

    struct UsageError : std::runtime_error
    {
      using std::runtime_error::runtime_error;
    };

    std::string slurp(const std::string& file, std::istream& in)
    {
      if (file == "-")
        return {std::istreambuf_iterator<char>(in), {}};
      std::ifstream f(file, std::ios::binary);
      if (!f)
        throw UsageError("cannot open '" + file + "'");
      return {std::istreambuf_iterator<char>(f), {}};
    }

    void print_players(std::ostream& out, std::string_view label,
                       const std::vector<PlayerId>& ps)
    {
      out << label << ":";
      if (ps.empty())
        out << " none";
      for (auto p: ps)
        out << ' ' << p;
      out << '\n';
    }

    void print_event(std::ostream& out, std::string_view label,
                     const EpistemicModel& m, const Event& e)
    {
      out << label << ": {";
      bool first = true;
      for (auto w: e.members())
        {
          out << (first ? "" : ", ") << m.world_name(w);
          first = false;
        }
      out << "}\n";
    }

    std::string_view answer_text(Answer a)
    {
      switch (a)
        {
        case Answer::Yes:
          return "yes";
        case Answer::No:
          return "no";
        case Answer::YesOneSided:
          return "yes (one-sided: canonical models only)";
        }
      return "?";
    }

    void print_verdict(std::ostream& out, const Game& game, const Verdict& v)
    {
      const Arena& a = game.arena();
      out << "answer: " << answer_text(v.answer) << '\n';
      out << "profiles examined: " << v.stats.profiles_examined << '\n';
      if (v.stats.rational_profiles)
        out << "rational profiles: " << *v.stats.rational_profiles << '\n';
      if (v.stats.idip_rounds)
        out << "idip rounds: " << v.stats.idip_rounds << '\n';
      if (v.stats.models_searched)
        out << "models searched: " << v.stats.models_searched << '\n';
      if (v.stats.empty_characterization)
        out << "note: no profile survives deletion; yes holds vacuously\n";
      if (!v.witness)
        return;
      const auto& w = *v.witness;
      out << "witness: " << profile_id(a, w.profile) << '\n'
          << format_profile(a, w.profile)
          << "outcome: " << format_lasso(a, w.lasso) << '\n';
      print_players(out, "winners", w.winners);
      if (w.certificate)
        {
          out << "certificate world: "
              << w.certificate->model.world_name(w.certificate->world) << '\n'
              << "certificate model:\n"
              << format_model(a, w.certificate->model);
        }
    }

    Game load_game(const ProblemFile& p, const Options& o)
    {
      return Game(p.arena, p.objectives, o.cap);
    }

    PositionalProfile chosen_profile(const ProblemFile& p, const Options& o,
                                     std::istream& in)
    {
      if (!o.profile_file.empty())
        return parse_profile(p.arena, slurp(o.profile_file, in));
      ProfileSpace space(p.arena, o.cap);
      if (!o.index)
        throw UsageError("one of --profile or --index is required");
      if (*o.index >= space.size())
        throw UsageError("--index out of range (" + std::to_string(space.size())
                         + " profiles)");
      return space.profile(*o.index);
    }

    int dispatch(const std::string& command, const Options& o,
                 std::istream& in, std::ostream& out)
    {
      if (command == "eval-qbf")
        {
          bool t = qbf_eval(parse_qbf(slurp(o.file, in)));
          out << (t ? "true" : "false") << '\n';
          return t ? 0 : 1;
        }
      if (command == "reduce")
        {
          auto text = slurp(o.file, in);
          auto q = parse_qbf(text);
          Instance inst = o.kind == "aesat" ? build_aesat_instance(q)
            : o.kind == "easat" ? build_easat_instance(q)
            : [&] {
                if (q.prefix.size() > 1
                    || (q.prefix.size() == 1 && q.prefix[0].quantifier != Quantifier::Exists))
                  throw Error(ErrorKind::PrefixShapeMismatch,
                              "sat expects at most one exists block");
                auto n = q.variables().size();
                auto inst = build_sat_instance(q.matrix, n);
                return inst;
              }();
          out << serialize_problem(to_problem(std::move(inst)));
          return 0;
        }

      ProblemFile p = parse_problem(slurp(o.file, in));
      const Arena& a = p.arena;
      if (command == "validate")
        {
          ProfileSpace space(a, o.cap);
          out << "players: " << a.player_count() << '\n'
              << "vertices: " << a.vertex_count() << '\n'
              << "edges: " << a.edge_count() << '\n'
              << "positional profiles: " << space.size() << '\n';
          if (p.model)
            {
              const auto& m = *p.model;
              out << "worlds: " << m.world_count() << '\n';
              auto rat = rational_all(a, p.objectives, m);
              print_event(out, "RAT", m, rat);
              print_event(out, "CK RAT", m, common_know(m.frame(), rat));
            }
          out << "ok\n";
          return 0;
        }
      if (command == "outcome" || command == "sver")
        {
          auto s = chosen_profile(p, o, in);
          auto l = outcome(a, s);
          out << "outcome: " << format_lasso(a, l) << '\n';
          print_players(out, "winners", winners(a, p.objectives, s));
          if (command == "outcome")
            return 0;
          bool ok = sver(a, s, p.spec);
          out << "spec: " << (ok ? "satisfied" : "violated") << '\n';
          return ok ? 0 : 1;
        }
      if (command == "nash-check")
        {
          auto s = chosen_profile(p, o, in);
          auto r = is_nash(a, p.objectives, s);
          out << "nash: " << (r.nash ? "yes" : "no") << '\n';
          if (r.refutation)
            out << "deviation by player " << r.refutation->player << ":\n"
                << format_strategy(a, r.refutation->strategy);
          return r.nash ? 0 : 1;
        }

      Game game = load_game(p, o);
      if (command == "idip")
        {
          auto r = idip(game);
          if (o.trace)
            out << format_trace(game, r);
          out << "survivors: " << r.survivors.size() << " of " << game.size() << '\n';
          for (auto i: r.survivors)
            out << profile_id(a, game.space().profile(i)) << '\n';
          return 0;
        }
      Verdict v;
      if (command == "vp-nash")
        v = vp_nash_pos(game, p.spec);
      else if (command == "vp-ckr")
        {
          auto r = idip(game);
          if (o.trace)
            out << format_trace(game, r);
          v = vpckr_pos(game, p.spec, r);
        }
      else
        {
          BoundedSearch search;
          search.world_bound = o.bound ? *o.bound : default_world_bound(a);
          search.mode = o.mode == "canonical" ? SearchMode::CanonicalOnly : SearchMode::Exact;
          search.search_cap = o.search_cap;
          v = vpckr_p_pos(game, p.spec, search);
        }
      print_verdict(out, game, v);
      return exit_code(v.answer);
    }
  }

  int run(const std::vector<std::string>& args, std::istream& in,
          std::ostream& out, std::ostream& err)
  {
    CLI::App app{"Rational verification of multiplayer graph games"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--cap", o.cap, "maximum number of positional profiles")
      ->check(CLI::PositiveNumber);

    auto problem_cmd = [&](const char* name, const char* what) {
      auto* c = app.add_subcommand(name, what);
      c->add_option("file", o.file, "problem file, - for stdin")->required();
      return c;
    };
    auto profile_opts = [&](CLI::App* c) {
      auto* f = c->add_option("--profile", o.profile_file, "profile file");
      auto* i = c->add_option("--index", o.index, "profile index");
      f->excludes(i);
    };

    problem_cmd("validate", "check a problem file");
    profile_opts(problem_cmd("outcome", "outcome and winners of a profile"));
    profile_opts(problem_cmd("sver", "check the spec on one profile"));
    profile_opts(problem_cmd("nash-check", "check a profile for Nash equilibrium"));
    problem_cmd("vp-nash", "spec holds on every positional Nash equilibrium");
    problem_cmd("vp-ckr", "spec holds on every profile surviving IDIP")
      ->add_flag("--trace", o.trace, "print deletions round by round");
    auto* bounded = problem_cmd("vp-ckr-p", "spec holds under bounded epistemic models");
    bounded->add_option("--bound", o.bound, "maximum number of worlds")
      ->check(CLI::PositiveNumber);
    bounded->add_option("--mode", o.mode, "exact or canonical")
      ->check(CLI::IsMember({"exact", "canonical"}));
    bounded->add_option("--search-cap", o.search_cap, "models tried per profile")
      ->check(CLI::PositiveNumber);
    problem_cmd("idip", "iterated deletion of inferior profiles")
      ->add_flag("--trace", o.trace, "print deletions round by round");
    auto* reduce = app.add_subcommand("reduce", "build a verification instance from a QBF");
    reduce->add_option("kind", o.kind, "sat, aesat or easat")
      ->required()->check(CLI::IsMember({"sat", "aesat", "easat"}));
    reduce->add_option("file", o.file, "QBF file, - for stdin")->required();
    app.add_subcommand("eval-qbf", "evaluate a QBF")
      ->add_option("file", o.file, "QBF file, - for stdin")->required();

    try
      {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
      }
    catch (const CLI::ParseError& e)
      {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
      }

    const std::string command = app.get_subcommands().front()->get_name();
    try
      {
        return dispatch(command, o, in, out);
      }
    catch (const Error& e)
      {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::CountOverflow ? 3 : 2;
      }
    catch (const UsageError& e)
      {
        err << "error: " << e.what() << '\n';
        return 2;
      }
  }
}

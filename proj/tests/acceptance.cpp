// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include <ckrv/ckr.hpp>
#include <ckrv/epistemic.hpp>
#include <ckrv/reductions.hpp>
#include <ckrv/verify.hpp>

#include "support.hpp"

using namespace ckrv;
using namespace ckrv::test;

namespace
{
  /// Collects violations; the first few are kept for the report.
  struct Checker
  {
    std::size_t checks = 0, failures = 0;
    std::string first;

    void operator()(bool ok, const std::string& what)
    {
      ++checks;
      if (ok)
        return;
      if (failures++ == 0)
        first = what;
    }
  };

  using Clock = std::chrono::steady_clock;

  double seconds_since(Clock::time_point start)
  {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }

  std::vector<ProfileIndex> every(const Game& g)
  {
    std::vector<ProfileIndex> out(g.size());
    std::iota(out.begin(), out.end(), 0);
    return out;
  }

  std::string word_of(const Game& g, ProfileIndex i)
  {
    return profile_id(g.arena(), g.space().profile(i));
  }

  void triangle_game(Checker& check)
  {
    Arena a = triangle();
    auto o = alpha(a);
    auto s = rl(a, "LLL");
    auto s2 = profile(a, {{"v0", "v1"}, {"v1", "v0"}, {"v2", "v0"}});
    auto l = outcome(a, s);
    check(l.prefix.empty() && l.cycle == std::vector<VertexId>{0, 1, 2}, "out(s)");
    check(winners(a, o, s) == std::vector<PlayerId>{0, 1, 2}, "Win(s)");
    auto l2 = outcome(a, s2);
    check(l2.prefix.empty() && l2.cycle == std::vector<VertexId>{0, 1}, "out(s')");
    check(winners(a, o, s2) == std::vector<PlayerId>{0, 2}, "Win(s')");
    check(is_nash(a, o, s).nash, "s is an NE");
    auto r = is_nash(a, o, s2);
    check(!r.nash && r.refutation && r.refutation->player == 1, "s' is not an NE");
  }

  void frame_and_idip(Checker& check)
  {
    Arena a = triangle();
    Game g(a, alpha_prime(a));
    auto all = every(g);
    auto m = canonical_model(g, all);
    const auto& f = m.frame();

    Event e(8);
    for (WorldId w = 0; w < 8; ++w)
      if (m.assignment(w).next[0] == *a.find("v2"))
        e.insert(w);
    check(e.count() == 4, "E = {RRR, RRL, RLR, RLL}");
    check(know(f, 0, e) == e, "K0(E) = E");
    check(know(f, 1, e).empty() && know(f, 2, e).empty(), "K1(E) = K2(E) = {}");
    Event w(8, true);
    check(mutual_know(f, w) == w && common_know(f, w) == w, "MK(W) = CK(W) = W");
    check(rational_all(g, m) == w, "RAT = W");

    auto t = idip(g);
    check(t.survivors == all, "idip keeps all 8 profiles");

    auto spec = parse(a, "v0 & v1 & v2");
    auto v = vpckr_pos(g, spec, t);
    check(v.answer == Answer::No && v.witness.has_value(), "vp_ckr answers no");
    if (!v.witness)
      return;
    auto inf = inf_mask(v.witness->lasso, 3);
    check(!inf[1], "witness outcome misses v1");
    check(v.witness->profile == rl(a, "RRL"), "witness is RRL, got " + word_of(g, v.witness->index));
    check(revalidate(g, spec, Problem::Ckr, *v.witness), "witness revalidates");
  }

  void reduction_sweeps(Checker& check)
  {
    std::size_t instances = 0;
    for (std::uint32_t vars = 1; vars <= 3; ++vars)
      for (const auto& psi: formulas_by_truth_table(vars, 3))
        {
          std::vector<std::string> names;
          for (std::uint32_t k = 0; k < std::max<std::uint32_t>(vars, 2); ++k)
            names.push_back("z" + std::to_string(k));

          for (std::size_t outer = 1; outer < names.size(); ++outer)
            {
              std::vector<std::string> first(names.begin(), names.begin() + outer);
              std::vector<std::string> second(names.begin() + outer, names.end());

              QbfInstance ae{{{Quantifier::ForAll, first}, {Quantifier::Exists, second}}, psi};
              auto i1 = build_aesat_instance(ae);
              Game g1(i1.arena, i1.objectives);
              bool truth = qbf_eval(ae);
              check(truth == oracle::qbf(ae), "qbf_eval vs recursive oracle");
              check(truth == (vp_nash_pos(g1, i1.spec).answer == Answer::Yes),
                    "forall-exists sweep: " + to_string(psi, names));

              QbfInstance ea{{{Quantifier::Exists, first}, {Quantifier::ForAll, second}}, psi};
              auto i2 = build_easat_instance(ea);
              Game g2(i2.arena, i2.objectives);
              truth = qbf_eval(ea);
              check(truth == oracle::qbf(ea), "qbf_eval vs recursive oracle");
              check(truth == (vpckr_pos(g2, i2.spec).answer == Answer::Yes),
                    "exists-forall sweep: " + to_string(psi, names));
              instances += 2;
            }

          std::vector<std::string> xs(names.begin(), names.begin() + vars);
          QbfInstance sat{{{Quantifier::Exists, xs}}, psi};
          bool satisfiable = qbf_eval(sat);
          auto i3 = build_sat_instance(psi, vars);
          Game g3(i3.arena, i3.objectives);
          for (std::size_t bound = 1; bound <= 3; ++bound)
            {
              BoundedSearch search;
              search.world_bound = bound;
              auto v = vpckr_p_pos(g3, i3.spec, search);
              check(!satisfiable == (v.answer == Answer::Yes),
                    "SAT sweep at bound " + std::to_string(bound) + ": " + to_string(psi, xs));
              ++instances;
            }
        }
    check(instances > 1000, "sweep size " + std::to_string(instances));
  }

  void epistemic_laws(Checker& check)
  {
    Rng rng(2024);
    for (int k = 0; k < 500; ++k)
      {
        std::size_t n = 1 + rng() % 5;
        std::vector<std::vector<std::size_t>> labels(2, std::vector<std::size_t>(n));
        std::vector<oracle::Relation> rs;
        for (auto& lab: labels)
          {
            for (auto& l: lab)
              l = rng() % n;
            rs.push_back(oracle::relation(lab));
          }
        KripkeFrame f(n, labels);
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
          {
            Event e(n);
            std::vector<bool> bits(n);
            for (WorldId w = 0; w < n; ++w)
              if ((mask >> w) & 1)
                {
                  e.insert(w);
                  bits[w] = true;
                }
            auto mk = mutual_know(f, e), ck = common_know(f, e);
            std::vector<bool> ck_bits(n);
            for (WorldId w = 0; w < n; ++w)
              ck_bits[w] = ck.contains(w);
            check(ck_bits == oracle::common_know(rs, bits), "CK via R+ = iterated MK");
            check(ck.subset_of(mk), "CK within MK");
            for (PlayerId p = 0; p < 2; ++p)
              {
                auto kp = know(f, p, e);
                check(kp.subset_of(e), "truth axiom");
                check(know(f, p, kp) == kp, "positive introspection");
                check(mk.subset_of(kp), "MK within K_p");
              }
          }
      }
  }

  std::string ckr_structure(Checker& check)
  {
    Rng rng(5150);
    std::size_t profiles = 0, nash_total = 0, tp_total = 0, t_total = 0, strict = 0;
    for (int k = 0; k < 200; ++k)
      {
        Arena a = random_arena(rng, 5, 3, 12);
        auto o = random_objectives(rng, a, 2);
        Game g(a, o);
        auto t = idip(g);
        profiles += g.size();
        t_total += t.survivors.size();
        std::size_t nash_here = nash_total;
        BoundedSearch one;
        for (ProfileIndex i = 0; i < g.size(); ++i)
          {
            bool nash = !nash_deviation(g, i);
            bool tp = in_T_P(g, i, one).member;
            nash_total += nash;
            tp_total += tp;
            check(!nash || tp, "NE within T_P(1)");
            check(!tp || t.contains(i), "T_P(1) within T-infinity");
          }
        strict += nash_total - nash_here < t.survivors.size();
        if (!t.survivors.empty())
          {
            auto m = canonical_model(g, t.survivors);
            auto ck = common_knowledge_of_rationality(g, m.frame(), t.survivors);
            check(ck.count() == m.world_count(), "M(T-infinity) within CK RAT");
          }
        for (PlayerId p = 0; p < a.player_count(); ++p)
          if (has_winning_strategy(g, p))
            for (auto i: t.survivors)
              check(g.wins(i, p), "winning strategy implies winner in T-infinity");
      }
    std::ostringstream note;
    note << profiles << " profiles: |NE| " << nash_total << ", |T_P(1)| " << tp_total
         << ", |T-infinity| " << t_total << "; " << strict << " arenas with NE strictly inside T-infinity";
    return note.str();
  }

  Formula formula_of_size(Rng& rng, std::uint32_t atoms, std::size_t size)
  {
    if (size <= 1)
      return Formula::atom(static_cast<std::uint32_t>(rng() % atoms));
    if (size == 2 || rng() % 4 == 0)
      return !formula_of_size(rng, atoms, size - 1);
    std::size_t left = 1 + rng() % (size - 2);
    auto l = formula_of_size(rng, atoms, left);
    auto r = formula_of_size(rng, atoms, size - 1 - left);
    return rng() % 2 ? (l & r) : (l | r);
  }

  /// Ring v0 → v1 → ⋯ → v(n-1) → v0 with a random extra edge at each vertex.
  Arena random_chain(Rng& rng, std::size_t n)
  {
    RawArena raw;
    raw.players = 2;
    for (std::size_t v = 0; v < n; ++v)
      raw.vertices.push_back({"v" + std::to_string(v), static_cast<std::int64_t>(rng() % 2), v == 0});
    for (std::size_t v = 0; v < n; ++v)
      {
        raw.edges.emplace_back("v" + std::to_string(v), "v" + std::to_string((v + 1) % n));
        raw.edges.emplace_back("v" + std::to_string(v), "v" + std::to_string(rng() % n));
      }
    return validate_arena(raw);
  }

  PositionalProfile random_profile(Rng& rng, const Arena& a)
  {
    PositionalProfile s;
    for (VertexId v = 0; v < a.vertex_count(); ++v)
      s.next.push_back(a.successors(v)[rng() % a.successors(v).size()]);
    return s;
  }

  std::string sver_scaling(Checker& check)
  {
    Rng rng(77);
    double worst = 0;
    for (int k = 0; k < 20; ++k)
      {
        Arena a = random_chain(rng, 1000);
        auto s = random_profile(rng, a);
        auto spec = formula_of_size(rng, 1000, 1000);
        check(spec.size() == 1000, "formula size " + std::to_string(spec.size()));
        auto start = Clock::now();
        bool verdict = sver(a, s, spec);
        worst = std::max(worst, seconds_since(start));
        if (k < 3)
          check(verdict == oracle::eval(spec, oracle::simulate_inf(a, s.next)),
                "large instance against simulation");
      }
    check(worst < 0.1, "sver took " + std::to_string(worst) + " s");

    for (int k = 0; k < 100; ++k)
      {
        Arena a = random_arena(rng, 8, 3, 1u << 16);
        auto s = random_profile(rng, a);
        auto spec = random_formula(rng, a.vertex_count(), 4);
        check(sver(a, s, spec) == oracle::eval(spec, oracle::simulate_inf(a, s.next)),
              "small instance against simulation");
      }
    std::ostringstream note;
    note << "slowest sver " << worst * 1000 << " ms";
    return note.str();
  }

  void canonical_vs_exact(Checker& check)
  {
    Rng rng(909);
    for (int k = 0; k < 100; ++k)
      {
        Arena a = random_arena(rng, 5, 3, 8);
        Game g(a, random_objectives(rng, a, 2));
        for (std::size_t bound = 1; bound <= 2; ++bound)
          for (ProfileIndex i = 0; i < g.size(); ++i)
            {
              BoundedSearch canonical;
              canonical.world_bound = bound;
              canonical.mode = SearchMode::CanonicalOnly;
              auto c = in_T_P(g, i, canonical);
              if (!c.member)
                continue;
              check(c.certificate && check_certificate(g, *c.certificate, i),
                    "canonical certificate rechecks");
              BoundedSearch exact;
              exact.world_bound = bound;
              check(in_T_P(g, i, exact).member, "canonical member confirmed by exact search");
            }
      }
  }

  struct Criterion
  {
    int id;
    const char* title;
    double limit;
    std::function<std::string(Checker&)> body;
  };
}

int main()
{
  auto plain = [](void (*f)(Checker&)) {
    return [f](Checker& c) {
      f(c);
      return std::string{};
    };
  };
  const std::vector<Criterion> criteria{
    {1, "triangle game golden suite", 1.0, plain(triangle_game)},
    {2, "knowledge, rationality and idip golden suite", 1.0, plain(frame_and_idip)},
    {3, "reduction soundness sweeps", 300.0, plain(reduction_sweeps)},
    {4, "epistemic operator laws", 300.0, plain(epistemic_laws)},
    {5, "CKR structural properties", 300.0, ckr_structure},
    {6, "sver scaling and simulation oracle", 300.0, sver_scaling},
    {7, "canonical-only membership confirmed by exact search", 300.0, plain(canonical_vs_exact)},
  };

  int failed = 0;
  for (const auto& c: criteria)
    {
      Checker check;
      std::string note;
      auto start = Clock::now();
      try
        {
          note = c.body(check);
        }
      catch (const std::exception& e)
        {
          check(false, std::string("exception: ") + e.what());
        }
      double took = seconds_since(start);
      check(took < c.limit, "time limit exceeded");
      bool ok = check.failures == 0;
      failed += !ok;
      std::printf("[%s] criterion %d: %s: %zu checks, %zu violations, %.3f s (limit %.0f s)",
                  ok ? "PASS" : "FAIL", c.id, c.title, check.checks, check.failures,
                  took, c.limit);
      if (!note.empty())
        std::printf(", %s", note.c_str());
      if (!ok)
        std::printf(": first violation: %s", check.first.c_str());
      std::printf("\n");
    }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}

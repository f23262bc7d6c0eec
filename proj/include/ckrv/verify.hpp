#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <ckrv/ckr.hpp>
#include <ckrv/strategy.hpp>

namespace ckrv
{
  enum class Answer
  {
    Yes,
    No,
    /// Canonical-only bounded search found no counterexample; a larger
    /// model class might.
    YesOneSided,
  };

  enum class Problem { Nash, Ckr, CkrBounded };

  struct VerdictStats
  {
    std::uint64_t profiles_examined = 0;
    std::size_t idip_rounds = 0;
    std::uint64_t models_searched = 0;
    /// Size of the rational set quantified over, when it was computed.
    std::optional<std::uint64_t> rational_profiles;
    /// T∞ came out empty; the answer is then vacuously yes.
    bool empty_characterization = false;
  };

  /// Counterexample: a rational profile whose outcome violates the spec.
  struct Witness
  {
    ProfileIndex index = 0;
    PositionalProfile profile;
    Lasso lasso;
    std::vector<PlayerId> winners;
    std::optional<Certificate> certificate;
  };

  struct Verdict
  {
    Answer answer = Answer::Yes;
    std::optional<Witness> witness;
    VerdictStats stats;
  };

  /// Outcome of \a profile satisfies \a spec.  Linear in |V| + |spec|.
  bool sver(const Arena& arena, const PositionalProfile& profile,
            const Formula& spec);

  /// Every positional NE satisfies \a spec.
  Verdict vp_nash_pos(const Game& game, const Formula& spec);

  /// Every member of T∞ satisfies \a spec.
  Verdict vpckr_pos(const Game& game, const Formula& spec);
  Verdict vpckr_pos(const Game& game, const Formula& spec,
                    const IdipResult& fixpoint);

  /// Every profile with a bounded-model CKR certificate satisfies \a spec.
  Verdict vpckr_p_pos(const Game& game, const Formula& spec,
                      const BoundedSearch& search);

  /// Recheck a "no" witness from scratch: membership in the rational set
  /// of \a problem and violation of the spec.
  bool revalidate(const Game& game, const Formula& spec, Problem problem,
                  const Witness& witness);

  /// 0 for yes (one-sided included), 1 for no.
  int exit_code(Answer answer);
}

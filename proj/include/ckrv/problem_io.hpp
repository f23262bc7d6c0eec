#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <ckrv/arena.hpp>
#include <ckrv/ckr.hpp>
#include <ckrv/epistemic.hpp>
#include <ckrv/objectives.hpp>
#include <ckrv/reductions.hpp>

namespace ckrv
{
  /// Contents of a problem file.
  ///
  /// Line-oriented, `#` starts a comment:
  ///
  ///     players <n>
  ///     vertex <name> owner <player> [initial]
  ///     edge <from> <to>
  ///     objective <player> <formula>
  ///     spec <formula>
  ///     world <id>                                  (optional model)
  ///     assign <id> <player> <vertex> -> <vertex>
  ///     class <player> <id> <id> ...
  struct ProblemFile
  {
    Arena arena;
    ObjectiveProfile objectives;
    Formula spec;
    std::optional<EpistemicModel> model;
  };

  /// Throws Error with the offending line: Syntax, UnknownName,
  /// UnknownPlayer, MissingSpec, MissingObjective, or any arena/model
  /// validation error.
  ProblemFile parse_problem(std::string_view text);
  std::string serialize_problem(const ProblemFile& problem);

  ProblemFile to_problem(Instance instance);

  /// Profile lines `<player>: <vertex> -> <vertex>`, one per vertex.
  /// Vertices with a single successor may be left out when parsing.
  PositionalProfile parse_profile(const Arena& arena, std::string_view text);
  std::string format_profile(const Arena& arena, const PositionalProfile& profile);
  std::string format_strategy(const Arena& arena, const PositionalStrategy& strategy);

  /// `u0 (u)^w`, vertices separated by spaces.
  std::string format_lasso(const Arena& arena, const Lasso& lasso);

  /// Model section lines (world / assign / class).
  std::string format_model(const Arena& arena, const EpistemicModel& model);

  /// One line per IDIP round: removed profiles and their witnesses.
  std::string format_trace(const Game& game, const IdipResult& result);

  /// Quantifier lines `forall x1 x2` / `exists y1` (outermost first), then
  /// the matrix on the remaining lines.
  QbfInstance parse_qbf(std::string_view text);
  std::string serialize_qbf(const QbfInstance& qbf);
}

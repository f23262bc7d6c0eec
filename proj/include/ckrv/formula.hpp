#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ckrv
{
  /// \brief Immutable Boolean formula over numbered atoms.
  ///
  /// Atoms are vertex ids for objectives and variable indices for QBF
  /// matrices.  Subterms are shared, so copies are cheap.
  class Formula
  {
  public:
    enum class Kind : std::uint8_t { False, True, Atom, Not, And, Or, Implies };

    /// The constant false.
    Formula();

    static Formula constant(bool value);
    static Formula atom(std::uint32_t id);

    Kind kind() const noexcept;
    std::uint32_t atom_id() const noexcept;
    /// Operand of Not, left operand of a binary connective.
    const Formula& lhs() const noexcept;
    const Formula& rhs() const noexcept;

    /// Number of nodes.
    std::size_t size() const;

    /// Evaluate with \a value(atom) giving the truth of each atom.
    bool evaluate(const std::function<bool(std::uint32_t)>& value) const;
    /// Evaluate under the assignment atom ↦ assignment[atom].
    bool evaluate(const std::vector<bool>& assignment) const;

    /// Distinct atoms, sorted.
    std::vector<std::uint32_t> atoms() const;

    friend bool operator==(const Formula& a, const Formula& b);

    friend Formula operator!(const Formula& f);
    friend Formula operator&(const Formula& a, const Formula& b);
    friend Formula operator|(const Formula& a, const Formula& b);
    friend Formula implies(const Formula& a, const Formula& b);

  private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
  };

  /// Disjunction of the atoms, false when empty.
  Formula any_of(std::span<const std::uint32_t> atoms);
  /// Conjunction of the atoms, true when empty.
  Formula all_of(std::span<const std::uint32_t> atoms);

  using AtomResolver =
    std::function<std::optional<std::uint32_t>(std::string_view)>;

  /// Parse the ASCII grammar
  ///
  ///     imp  := or ( "->" imp )?
  ///     or   := and ( "|" and )*
  ///     and  := not ( "&" not )*
  ///     not  := "!" not | "(" imp ")" | "true" | "false" | ident
  ///     ident := [A-Za-z_][A-Za-z0-9_]*
  ///
  /// Throws Error(Syntax) with a 1-based column, or Error(UnknownName)
  /// when \a resolve rejects an identifier.
  Formula parse_formula(std::string_view text, const AtomResolver& resolve);

  /// Print with the fewest parentheses that parse back to the same tree.
  std::string to_string(const Formula& f, std::span<const std::string> names);
}

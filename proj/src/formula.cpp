#include <ckrv/formula.hpp>

#include <algorithm>
#include <cctype>

#include <ckrv/error.hpp>

namespace ckrv
{
  struct Formula::Node
  {
    Kind kind;
    std::uint32_t atom = 0;
    Formula lhs;
    Formula rhs;

    Node(Kind k, std::uint32_t a) : kind(k), atom(a), lhs(nullptr), rhs(nullptr)
    {
    }
    Node(Kind k, Formula l, Formula r)
      : kind(k), lhs(std::move(l)), rhs(std::move(r))
    {
    }
  };

  Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node))
  {
  }

  Formula::Formula() : Formula(constant(false))
  {
  }

  Formula Formula::constant(bool value)
  {
    static const auto f = std::make_shared<const Node>(Kind::False, 0);
    static const auto t = std::make_shared<const Node>(Kind::True, 0);
    return Formula(value ? t : f);
  }

  Formula Formula::atom(std::uint32_t id)
  {
    return Formula(std::make_shared<const Node>(Kind::Atom, id));
  }

  Formula::Kind Formula::kind() const noexcept { return node_->kind; }
  std::uint32_t Formula::atom_id() const noexcept { return node_->atom; }
  const Formula& Formula::lhs() const noexcept { return node_->lhs; }
  const Formula& Formula::rhs() const noexcept { return node_->rhs; }

  std::size_t Formula::size() const
  {
    switch (kind())
      {
      case Kind::False: case Kind::True: case Kind::Atom:
        return 1;
      case Kind::Not:
        return 1 + lhs().size();
      default:
        return 1 + lhs().size() + rhs().size();
      }
  }

  bool Formula::evaluate(const std::function<bool(std::uint32_t)>& value) const
  {
    switch (kind())
      {
      case Kind::False: return false;
      case Kind::True: return true;
      case Kind::Atom: return value(atom_id());
      case Kind::Not: return !lhs().evaluate(value);
      case Kind::And: return lhs().evaluate(value) && rhs().evaluate(value);
      case Kind::Or: return lhs().evaluate(value) || rhs().evaluate(value);
      case Kind::Implies: return !lhs().evaluate(value) || rhs().evaluate(value);
      }
    return false;
  }

  bool Formula::evaluate(const std::vector<bool>& assignment) const
  {
    switch (kind())
      {
      case Kind::False: return false;
      case Kind::True: return true;
      case Kind::Atom:
        return atom_id() < assignment.size() && assignment[atom_id()];
      case Kind::Not: return !lhs().evaluate(assignment);
      case Kind::And:
        return lhs().evaluate(assignment) && rhs().evaluate(assignment);
      case Kind::Or:
        return lhs().evaluate(assignment) || rhs().evaluate(assignment);
      case Kind::Implies:
        return !lhs().evaluate(assignment) || rhs().evaluate(assignment);
      }
    return false;
  }

  std::vector<std::uint32_t> Formula::atoms() const
  {
    std::vector<std::uint32_t> out;
    std::vector<const Formula*> todo{this};
    while (!todo.empty())
      {
        const Formula* f = todo.back();
        todo.pop_back();
        switch (f->kind())
          {
          case Kind::Atom: out.push_back(f->atom_id()); break;
          case Kind::Not: todo.push_back(&f->lhs()); break;
          case Kind::And: case Kind::Or: case Kind::Implies:
            todo.push_back(&f->lhs());
            todo.push_back(&f->rhs());
            break;
          default: break;
          }
      }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool operator==(const Formula& a, const Formula& b)
  {
    if (a.node_ == b.node_)
      return true;
    if (a.kind() != b.kind())
      return false;
    using K = Formula::Kind;
    switch (a.kind())
      {
      case K::False: case K::True: return true;
      case K::Atom: return a.atom_id() == b.atom_id();
      case K::Not: return a.lhs() == b.lhs();
      default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
      }
  }

  Formula operator!(const Formula& f)
  {
    return Formula(std::make_shared<const Formula::Node>(
      Formula::Kind::Not, f, Formula(nullptr)));
  }

  Formula operator&(const Formula& a, const Formula& b)
  {
    return Formula(std::make_shared<const Formula::Node>(
      Formula::Kind::And, a, b));
  }

  Formula operator|(const Formula& a, const Formula& b)
  {
    return Formula(std::make_shared<const Formula::Node>(
      Formula::Kind::Or, a, b));
  }

  Formula implies(const Formula& a, const Formula& b)
  {
    return Formula(std::make_shared<const Formula::Node>(
      Formula::Kind::Implies, a, b));
  }

  Formula any_of(std::span<const std::uint32_t> atoms)
  {
    if (atoms.empty())
      return Formula::constant(false);
    Formula f = Formula::atom(atoms.front());
    for (auto a: atoms.subspan(1))
      f = f | Formula::atom(a);
    return f;
  }

  Formula all_of(std::span<const std::uint32_t> atoms)
  {
    if (atoms.empty())
      return Formula::constant(true);
    Formula f = Formula::atom(atoms.front());
    for (auto a: atoms.subspan(1))
      f = f & Formula::atom(a);
    return f;
  }

  namespace
  {
    class Parser
    {
    public:
      Parser(std::string_view text, const AtomResolver& resolve)
        : text_(text), resolve_(resolve)
      {
      }

      Formula parse()
      {
        Formula f = implication();
        skip_space();
        if (pos_ != text_.size())
          fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return f;
      }

    private:
      [[noreturn]] void fail(const std::string& what) const
      {
        throw Error(ErrorKind::Syntax, what, 0, pos_ + 1);
      }

      void skip_space()
      {
        while (pos_ < text_.size()
               && std::isspace(static_cast<unsigned char>(text_[pos_])))
          ++pos_;
      }

      bool accept(std::string_view token)
      {
        skip_space();
        if (text_.substr(pos_, token.size()) == token)
          {
            pos_ += token.size();
            return true;
          }
        return false;
      }

      Formula implication()
      {
        Formula left = disjunction();
        if (accept("->"))
          return implies(left, implication());
        return left;
      }

      Formula disjunction()
      {
        Formula f = conjunction();
        while (accept("|"))
          f = f | conjunction();
        return f;
      }

      Formula conjunction()
      {
        Formula f = negation();
        while (accept("&"))
          f = f & negation();
        return f;
      }

      Formula negation()
      {
        if (accept("!"))
          return !negation();
        if (accept("("))
          {
            Formula f = implication();
            if (!accept(")"))
              fail("expected ')'");
            return f;
          }
        skip_space();
        if (pos_ == text_.size())
          fail("unexpected end of formula");
        auto is_head = [](char c) {
          return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
        };
        auto is_tail = [](char c) {
          return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
        };
        if (!is_head(text_[pos_]))
          fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_tail(text_[pos_]))
          ++pos_;
        std::string_view word = text_.substr(start, pos_ - start);
        if (word == "true")
          return Formula::constant(true);
        if (word == "false")
          return Formula::constant(false);
        auto id = resolve_(word);
        if (!id)
          throw Error(ErrorKind::UnknownName, "unknown name '"
                      + std::string(word) + "'", 0, start + 1);
        return Formula::atom(*id);
      }

      std::string_view text_;
      const AtomResolver& resolve_;
      std::size_t pos_ = 0;
    };

    int precedence(Formula::Kind k)
    {
      switch (k)
        {
        case Formula::Kind::Implies: return 1;
        case Formula::Kind::Or: return 2;
        case Formula::Kind::And: return 3;
        case Formula::Kind::Not: return 4;
        default: return 5;
        }
    }

    void print(const Formula& f, std::span<const std::string> names,
               std::string& out)
    {
      using K = Formula::Kind;
      auto child = [&](const Formula& c, bool parens) {
        if (parens)
          out += '(';
        print(c, names, out);
        if (parens)
          out += ')';
      };
      int p = precedence(f.kind());
      switch (f.kind())
        {
        case K::False: out += "false"; return;
        case K::True: out += "true"; return;
        case K::Atom:
          if (f.atom_id() < names.size())
            out += names[f.atom_id()];
          else
            out += "_" + std::to_string(f.atom_id());
          return;
        case K::Not:
          out += '!';
          child(f.lhs(), precedence(f.lhs().kind()) < p);
          return;
        case K::And: case K::Or:
          child(f.lhs(), precedence(f.lhs().kind()) < p);
          out += f.kind() == K::And ? " & " : " | ";
          child(f.rhs(), precedence(f.rhs().kind()) <= p);
          return;
        case K::Implies:
          child(f.lhs(), precedence(f.lhs().kind()) <= p);
          out += " -> ";
          child(f.rhs(), precedence(f.rhs().kind()) < p);
          return;
        }
    }
  }

  Formula parse_formula(std::string_view text, const AtomResolver& resolve)
  {
    return Parser(text, resolve).parse();
  }

  std::string to_string(const Formula& f, std::span<const std::string> names)
  {
    std::string out;
    print(f, names, out);
    return out;
  }
}

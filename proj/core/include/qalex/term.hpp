#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qalex/quandle.hpp"

namespace qalex {

/// Free-quandle expression: a generator, or left *^e right with e = +-1.
/// Immutable; subterms are shared.
class Term {
 public:
  static Term gen(int index);
  static Term op(Term left, Term right, int exp = 1);

  bool is_gen() const noexcept { return node_->left == nullptr; }
  int gen_index() const noexcept { return node_->gen; }
  Term left() const { return Term(node_->left); }
  Term right() const { return Term(node_->right); }
  int exp() const noexcept { return node_->exp; }

  std::size_t depth() const;
  int max_gen() const;
  /// Infix form with 1-based names: "((x1*x2)*x1)", "(x1*~x2)".
  std::string to_string() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    int gen = -1;
    int exp = 1;
    std::shared_ptr<const Node> left, right;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

inline Term operator*(Term a, Term b) { return Term::op(std::move(a), std::move(b), 1); }

using Relator = std::pair<Term, Term>;

/// Which crossing a Wirtinger relator came from.
struct RelatorOrigin {
  int crossing = -1;
  int component = -1;
  int sign = 0;
};

struct Presentation {
  int n_gens = 0;
  std::vector<Relator> relators;
  std::vector<RelatorOrigin> origins;  // empty, or one per relator

  /// Throws DomainError if a term names a generator >= n_gens.
  void validate() const;
};

/// Parses `gens k` then one relator per line, e.g. `((x1*x2)*x1 , x2)`;
/// `*~` is the dual operation and `#` starts a comment.
Presentation parse_presentation(std::string_view text);
std::string format_presentation(const Presentation& p);
Term parse_term(std::string_view text, int n_gens = -1);

/// Evaluates a term in a finite quandle with generator images.
Element eval_term(const Term& t, const std::vector<Element>& images, const FiniteQuandle& q);

/// Relator indices whose two sides evaluate differently.
std::vector<std::size_t> failing_relators(const Presentation& p, const std::vector<Element>& images,
                                          const FiniteQuandle& q);

/// Canonical form of an element of the free quandle on n generators: the class
/// of (a, w) with w a reduced word of the free group, letters +-(g+1), and no
/// leading a^{+-1}. It stands for the conjugate w^-1 a w.
struct FreeQuandleElem {
  int base = 0;
  std::vector<int> word;

  friend bool operator==(const FreeQuandleElem&, const FreeQuandleElem&) = default;
  friend auto operator<=>(const FreeQuandleElem&, const FreeQuandleElem&) = default;
};

/// [(a,x)] *^e [(b,y)] = [(a, x y^-1 b^e y)].
FreeQuandleElem free_operate(const FreeQuandleElem& lhs, const FreeQuandleElem& rhs, int exp);
FreeQuandleElem free_canonical(const Term& t);
std::string to_string(const FreeQuandleElem& e);

}  // namespace qalex

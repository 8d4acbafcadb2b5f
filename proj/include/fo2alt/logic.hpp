// logic.hpp
// * Two-variable first-order formulas over the order predicate, fragment
//   classification by negation nesting and quantifier depth, finite-word
//   evaluation, and the exact Ehrenfeucht-Fraisse game solver for the
//   fragment preorder on finite words.

#ifndef FO2ALT_LOGIC_HPP
#define FO2ALT_LOGIC_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fo2alt/bitmatrix.hpp"
#include "fo2alt/errors.hpp"

namespace fo2alt {

enum class Var { X, Y };

inline char var_name(Var v) { return v == Var::X ? 'x' : 'y'; }

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { True, False, Letter, VarEq, VarLt, Not, And, Or, Exists };
  Kind kind;
  Var var = Var::X;   // Letter/Exists: the variable; VarEq/VarLt: left variable
  Var var2 = Var::Y;  // VarEq/VarLt: right variable
  char letter = 0;    // Letter
  FormulaPtr left, right;

  static FormulaPtr truth();
  static FormulaPtr falsity();
  static FormulaPtr letter_at(Var v, char a);
  static FormulaPtr var_eq(Var a, Var b);
  static FormulaPtr var_lt(Var a, Var b);
  static FormulaPtr negate(FormulaPtr f);
  static FormulaPtr conj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr disj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr exists(Var v, FormulaPtr f);
};

/// Position in the negation-nesting / quantifier-depth grammar: the least
/// (m,n) with the formula in Sigma^2_{m,n}. Quantifier-free formulas sit at
/// (0,0) regardless of negations; a quantifier needs m >= 1 and bumps n; a
/// negation above a quantifier bumps m.
struct FragmentIndex {
  int m = 0;
  int n = 0;
  bool operator==(const FragmentIndex&) const = default;
};

FragmentIndex fragment_of(const FormulaPtr& f);

bool is_sentence(const FormulaPtr& f);

/// Standard semantics over positions 1..|w| with < the position order.
/// Throws input_error when f has free variables.
bool eval_finite(const FormulaPtr& f, const std::string& w);

std::string formula_to_string(const FormulaPtr& f);

/// Parses `E x (a(x) & E y (x<y & b(y)))` style syntax with `!`, `&`, `|`,
/// `T`, `F`, `x<y`, `x=y`; only the variables x and y are allowed.
FormulaPtr parse_formula(const std::string& text);

/// EF game parameters: Spoiler starts on the left word and may switch words
/// at most m-1 times (switching before his first move also costs one);
/// n rounds.
struct GameConfig {
  int m = 1;
  int n = 0;
};

/// Pebbles start unplaced; a move may lift an already placed pebble.
/// Duplicator must keep equal letters under same-labeled pebbles and the same
/// order type between the x and y pebbles, evaluated once both are placed.
/// Duplicator wins the game iff u is below v in the fragment preorder.
bool ef_duplicator_wins(const std::string& u, const std::string& v, GameConfig cfg);

struct EfMove {
  bool on_right = false;  // word the pebble lands on (Spoiler's side)
  Var pebble = Var::X;
  int position = 0;  // 1-based
};

/// A first move with which Spoiler wins the game, when he does.
std::optional<EfMove> ef_spoiler_winning_move(const std::string& u, const std::string& v,
                                              GameConfig cfg);

/// Duplicator's winning reply (1-based position on the other word) to a given
/// Spoiler first move, when she has one.
std::optional<int> ef_duplicator_reply(const std::string& u, const std::string& v,
                                       GameConfig cfg, const EfMove& spoiler);

/// Matrix of ef_duplicator_wins over all ordered word pairs; verified to be
/// reflexive and transitive.
BitMatrix sigma2_preorder(const std::vector<std::string>& words, GameConfig cfg);

}  // namespace fo2alt

#endif  // FO2ALT_LOGIC_HPP

// logic.cpp

#include "fo2alt/logic.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace fo2alt {

FormulaPtr Formula::truth() {
  return std::make_shared<Formula>(Formula{Kind::True});
}
FormulaPtr Formula::falsity() {
  return std::make_shared<Formula>(Formula{Kind::False});
}
FormulaPtr Formula::letter_at(Var v, char a) {
  Formula f{Kind::Letter};
  f.var = v;
  f.letter = a;
  return std::make_shared<Formula>(std::move(f));
}
FormulaPtr Formula::var_eq(Var a, Var b) {
  Formula f{Kind::VarEq};
  f.var = a;
  f.var2 = b;
  return std::make_shared<Formula>(std::move(f));
}
FormulaPtr Formula::var_lt(Var a, Var b) {
  Formula f{Kind::VarLt};
  f.var = a;
  f.var2 = b;
  return std::make_shared<Formula>(std::move(f));
}
FormulaPtr Formula::negate(FormulaPtr f) {
  Formula g{Kind::Not};
  g.left = std::move(f);
  return std::make_shared<Formula>(std::move(g));
}
FormulaPtr Formula::conj(FormulaPtr a, FormulaPtr b) {
  Formula g{Kind::And};
  g.left = std::move(a);
  g.right = std::move(b);
  return std::make_shared<Formula>(std::move(g));
}
FormulaPtr Formula::disj(FormulaPtr a, FormulaPtr b) {
  Formula g{Kind::Or};
  g.left = std::move(a);
  g.right = std::move(b);
  return std::make_shared<Formula>(std::move(g));
}
FormulaPtr Formula::exists(Var v, FormulaPtr f) {
  Formula g{Kind::Exists};
  g.var = v;
  g.left = std::move(f);
  return std::make_shared<Formula>(std::move(g));
}

FragmentIndex fragment_of(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::True:
    case Formula::Kind::False:
    case Formula::Kind::Letter:
    case Formula::Kind::VarEq:
    case Formula::Kind::VarLt:
      return {0, 0};
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      const FragmentIndex a = fragment_of(f->left);
      const FragmentIndex b = fragment_of(f->right);
      return {std::max(a.m, b.m), std::max(a.n, b.n)};
    }
    case Formula::Kind::Not: {
      const FragmentIndex a = fragment_of(f->left);
      if (a.n == 0) return {0, 0};  // negation is free below quantifiers
      return {a.m + 1, a.n};
    }
    case Formula::Kind::Exists: {
      const FragmentIndex a = fragment_of(f->left);
      return {std::max(a.m, 1), a.n + 1};
    }
  }
  return {0, 0};
}

namespace {

bool closed_under(const FormulaPtr& f, bool x_bound, bool y_bound) {
  switch (f->kind) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return true;
    case Formula::Kind::Letter:
      return f->var == Var::X ? x_bound : y_bound;
    case Formula::Kind::VarEq:
    case Formula::Kind::VarLt:
      return (f->var == Var::X ? x_bound : y_bound) &&
             (f->var2 == Var::X ? x_bound : y_bound);
    case Formula::Kind::Not:
      return closed_under(f->left, x_bound, y_bound);
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return closed_under(f->left, x_bound, y_bound) &&
             closed_under(f->right, x_bound, y_bound);
    case Formula::Kind::Exists:
      return closed_under(f->left, x_bound || f->var == Var::X,
                          y_bound || f->var == Var::Y);
  }
  return false;
}

bool eval_at(const Formula* f, const std::string& w, int px, int py) {
  switch (f->kind) {
    case Formula::Kind::True: return true;
    case Formula::Kind::False: return false;
    case Formula::Kind::Letter: {
      const int p = f->var == Var::X ? px : py;
      return w[p] == f->letter;
    }
    case Formula::Kind::VarEq: {
      const int a = f->var == Var::X ? px : py;
      const int b = f->var2 == Var::X ? px : py;
      return a == b;
    }
    case Formula::Kind::VarLt: {
      const int a = f->var == Var::X ? px : py;
      const int b = f->var2 == Var::X ? px : py;
      return a < b;
    }
    case Formula::Kind::Not: return !eval_at(f->left.get(), w, px, py);
    case Formula::Kind::And:
      return eval_at(f->left.get(), w, px, py) && eval_at(f->right.get(), w, px, py);
    case Formula::Kind::Or:
      return eval_at(f->left.get(), w, px, py) || eval_at(f->right.get(), w, px, py);
    case Formula::Kind::Exists: {
      for (int p = 0; p < static_cast<int>(w.size()); ++p) {
        const int nx = f->var == Var::X ? p : px;
        const int ny = f->var == Var::Y ? p : py;
        if (eval_at(f->left.get(), w, nx, ny)) return true;
      }
      return false;
    }
  }
  return false;
}

}  // namespace

bool is_sentence(const FormulaPtr& f) { return closed_under(f, false, false); }

bool eval_finite(const FormulaPtr& f, const std::string& w) {
  if (!is_sentence(f)) throw input_error("formula has free variables");
  return eval_at(f.get(), w, -1, -1);
}

std::string formula_to_string(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::True: return "T";
    case Formula::Kind::False: return "F";
    case Formula::Kind::Letter:
      return std::string(1, f->letter) + "(" + var_name(f->var) + ")";
    case Formula::Kind::VarEq:
      return std::string(1, var_name(f->var)) + "=" + var_name(f->var2);
    case Formula::Kind::VarLt:
      return std::string(1, var_name(f->var)) + "<" + var_name(f->var2);
    case Formula::Kind::Not: return "!" + formula_to_string(f->left);
    case Formula::Kind::And:
      return "(" + formula_to_string(f->left) + " & " + formula_to_string(f->right) + ")";
    case Formula::Kind::Or:
      return "(" + formula_to_string(f->left) + " | " + formula_to_string(f->right) + ")";
    case Formula::Kind::Exists:
      return "E " + std::string(1, var_name(f->var)) + " " + formula_to_string(f->left);
  }
  return "?";
}

namespace {

struct FormulaParser {
  const std::string& text;
  size_t pos = 0;

  explicit FormulaParser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw input_error("formula syntax error at offset " + std::to_string(pos) + ": " + what);
  }
  Var parse_var() {
    const char c = peek();
    if (c == 'x') { ++pos; return Var::X; }
    if (c == 'y') { ++pos; return Var::Y; }
    fail("only the variables x and y are allowed");
  }

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (eat('|')) f = Formula::disj(f, parse_and());
    return f;
  }
  FormulaPtr parse_and() {
    FormulaPtr f = parse_unary();
    while (eat('&')) f = Formula::conj(f, parse_unary());
    return f;
  }
  FormulaPtr parse_unary() {
    if (eat('!')) return Formula::negate(parse_unary());
    if (peek() == 'E') {
      ++pos;
      Var v = parse_var();
      return Formula::exists(v, parse_unary());
    }
    return parse_primary();
  }
  FormulaPtr parse_primary() {
    const char c = peek();
    if (c == '(') {
      ++pos;
      FormulaPtr f = parse_or();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    if (c == 'T') { ++pos; return Formula::truth(); }
    if (c == 'F') { ++pos; return Formula::falsity(); }
    if (c == '\0') fail("unexpected end of input");
    // Either a variable comparison or a letter predicate, decided by what
    // follows the first character.
    const size_t mark = pos;
    ++pos;
    const char next = peek();
    if (next == '<' || next == '=') {
      pos = mark;
      Var a = parse_var();
      const bool lt = eat('<');
      if (!lt && !eat('=')) fail("expected '<' or '='");
      Var b = parse_var();
      return lt ? Formula::var_lt(a, b) : Formula::var_eq(a, b);
    }
    if (next == '(') {
      ++pos;
      Var v = parse_var();
      if (!eat(')')) fail("expected ')'");
      return Formula::letter_at(v, c);
    }
    fail("expected an atom");
  }
};

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  FormulaParser p(text);
  FormulaPtr f = p.parse_or();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return f;
}

// --- Ehrenfeucht-Fraisse games ----------------------------------------------

namespace {

constexpr int kUnplaced = -1;

struct EfSolver {
  const std::string& u;
  const std::string& v;
  std::unordered_map<uint64_t, int> memo;  // -1 unknown, 0 lose, 1 win

  EfSolver(const std::string& uu, const std::string& vv) : u(uu), v(vv) {
    if (u.size() > 32 || v.size() > 32)
      throw resource_error("EF solver is limited to words of length <= 32");
  }

  static uint64_t pack(int xu, int xv, int yu, int yv, int rounds, int alts, int side) {
    uint64_t k = 0;
    for (int p : {xu, xv, yu, yv}) k = (k << 6) | static_cast<uint64_t>(p + 1);
    k = (k << 6) | static_cast<uint64_t>(rounds);
    k = (k << 6) | static_cast<uint64_t>(alts);
    k = (k << 1) | static_cast<uint64_t>(side);
    return k;
  }

  static int order_type(int a, int b) { return a < b ? -1 : a > b ? 1 : 0; }

  bool consistent(int xu, int xv, int yu, int yv) const {
    if (xu != kUnplaced && u[xu] != v[xv]) return false;
    if (yu != kUnplaced && u[yu] != v[yv]) return false;
    if (xu != kUnplaced && yu != kUnplaced &&
        order_type(xu, yu) != order_type(xv, yv))
      return false;
    return true;
  }

  // True iff Duplicator survives the remaining game.
  bool duplicator_wins(int xu, int xv, int yu, int yv, int rounds, int alts, int side) {
    if (rounds == 0) return true;
    const uint64_t key = pack(xu, xv, yu, yv, rounds, alts, side);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    bool dup_wins = true;
    for (int new_side = 0; new_side <= 1 && dup_wins; ++new_side) {
      const int cost = new_side == side ? 0 : 1;
      if (cost > alts) continue;
      const std::string& sw = new_side == 0 ? u : v;  // Spoiler's word
      const std::string& dw = new_side == 0 ? v : u;  // Duplicator's word
      for (int pebble = 0; pebble < 2 && dup_wins; ++pebble) {
        for (int i = 0; i < static_cast<int>(sw.size()) && dup_wins; ++i) {
          bool answered = false;
          for (int j = 0; j < static_cast<int>(dw.size()); ++j) {
            const int pu = new_side == 0 ? i : j;
            const int pv = new_side == 0 ? j : i;
            const int nxu = pebble == 0 ? pu : xu;
            const int nxv = pebble == 0 ? pv : xv;
            const int nyu = pebble == 1 ? pu : yu;
            const int nyv = pebble == 1 ? pv : yv;
            if (!consistent(nxu, nxv, nyu, nyv)) continue;
            if (duplicator_wins(nxu, nxv, nyu, nyv, rounds - 1, alts - cost, new_side)) {
              answered = true;
              break;
            }
          }
          if (!answered) dup_wins = false;
        }
      }
    }
    memo[key] = dup_wins;
    return dup_wins;
  }
};

}  // namespace

namespace {

void check_game_config(GameConfig cfg) {
  if (cfg.m < 1 || cfg.n < 0) throw input_error("EF game needs m >= 1 and n >= 0");
  if (cfg.m > 64 || cfg.n > 63)
    throw resource_error("EF solver is limited to m <= 64 and n <= 63");
}

}  // namespace

bool ef_duplicator_wins(const std::string& u, const std::string& v, GameConfig cfg) {
  check_game_config(cfg);
  EfSolver solver(u, v);
  return solver.duplicator_wins(kUnplaced, kUnplaced, kUnplaced, kUnplaced, cfg.n,
                                cfg.m - 1, 0);
}

std::optional<EfMove> ef_spoiler_winning_move(const std::string& u, const std::string& v,
                                              GameConfig cfg) {
  check_game_config(cfg);
  if (cfg.n == 0) return std::nullopt;
  EfSolver solver(u, v);
  for (int new_side = 0; new_side <= 1; ++new_side) {
    if (new_side == 1 && cfg.m - 1 < 1) continue;
    const int alts = cfg.m - 1 - (new_side == 1 ? 1 : 0);
    const std::string& sw = new_side == 0 ? u : v;
    const std::string& dw = new_side == 0 ? v : u;
    for (int pebble = 0; pebble < 2; ++pebble)
      for (int i = 0; i < static_cast<int>(sw.size()); ++i) {
        bool answered = false;
        for (int j = 0; j < static_cast<int>(dw.size()); ++j) {
          const int pu = new_side == 0 ? i : j;
          const int pv = new_side == 0 ? j : i;
          const int xu = pebble == 0 ? pu : kUnplaced;
          const int xv = pebble == 0 ? pv : kUnplaced;
          const int yu = pebble == 1 ? pu : kUnplaced;
          const int yv = pebble == 1 ? pv : kUnplaced;
          if (!solver.consistent(xu, xv, yu, yv)) continue;
          if (solver.duplicator_wins(xu, xv, yu, yv, cfg.n - 1, alts, new_side)) {
            answered = true;
            break;
          }
        }
        if (!answered)
          return EfMove{new_side == 1, pebble == 0 ? Var::X : Var::Y, i + 1};
      }
  }
  return std::nullopt;
}

std::optional<int> ef_duplicator_reply(const std::string& u, const std::string& v,
                                       GameConfig cfg, const EfMove& spoiler) {
  check_game_config(cfg);
  EfSolver solver(u, v);
  const int new_side = spoiler.on_right ? 1 : 0;
  const int cost = new_side == 0 ? 0 : 1;
  if (cfg.m - 1 < cost) return std::nullopt;
  const std::string& sw = new_side == 0 ? u : v;
  const std::string& dw = new_side == 0 ? v : u;
  const int i = spoiler.position - 1;
  if (i < 0 || i >= static_cast<int>(sw.size())) throw input_error("spoiler move out of range");
  for (int j = 0; j < static_cast<int>(dw.size()); ++j) {
    const int pu = new_side == 0 ? i : j;
    const int pv = new_side == 0 ? j : i;
    const int xu = spoiler.pebble == Var::X ? pu : kUnplaced;
    const int xv = spoiler.pebble == Var::X ? pv : kUnplaced;
    const int yu = spoiler.pebble == Var::Y ? pu : kUnplaced;
    const int yv = spoiler.pebble == Var::Y ? pv : kUnplaced;
    if (!solver.consistent(xu, xv, yu, yv)) continue;
    if (solver.duplicator_wins(xu, xv, yu, yv, cfg.n - 1, cfg.m - 1 - cost, new_side))
      return j + 1;
  }
  return std::nullopt;
}

BitMatrix sigma2_preorder(const std::vector<std::string>& words, GameConfig cfg) {
  if (words.size() > 128) throw resource_error("sigma2_preorder is limited to 128 words");
  const int n = static_cast<int>(words.size());
  BitMatrix rel(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (ef_duplicator_wins(words[i], words[j], cfg)) rel.set(i, j);
  for (int i = 0; i < n; ++i)
    if (!rel.at(i, i)) throw invariant_error("EF preorder is not reflexive");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rel.at(i, j))
        for (int k = 0; k < n; ++k)
          if (rel.at(j, k) && !rel.at(i, k))
            throw invariant_error("EF preorder is not transitive");
  return rel;
}

}  // namespace fo2alt

// terms.cpp

#include "fo2alt/terms.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_map>

namespace fo2alt {

TermPtr OmegaTerm::one() {
  return std::make_shared<OmegaTerm>(OmegaTerm{Kind::One, "", nullptr, nullptr});
}
TermPtr OmegaTerm::variable(std::string name) {
  return std::make_shared<OmegaTerm>(OmegaTerm{Kind::Variable, std::move(name), nullptr, nullptr});
}
TermPtr OmegaTerm::product(TermPtr a, TermPtr b) {
  return std::make_shared<OmegaTerm>(OmegaTerm{Kind::Product, "", std::move(a), std::move(b)});
}
TermPtr OmegaTerm::omega_power(TermPtr a) {
  return std::make_shared<OmegaTerm>(OmegaTerm{Kind::OmegaPower, "", std::move(a), nullptr});
}

namespace {

void collect_vars(const TermPtr& t, std::set<std::string>& out) {
  switch (t->kind) {
    case OmegaTerm::Kind::One: return;
    case OmegaTerm::Kind::Variable: out.insert(t->var); return;
    case OmegaTerm::Kind::Product:
      collect_vars(t->left, out);
      collect_vars(t->right, out);
      return;
    case OmegaTerm::Kind::OmegaPower: collect_vars(t->left, out); return;
  }
}

}  // namespace

std::vector<std::string> term_variables(const TermPtr& t) {
  std::set<std::string> s;
  collect_vars(t, s);
  return {s.begin(), s.end()};
}

std::vector<std::string> Identity::variables() const {
  std::set<std::string> s;
  collect_vars(lhs, s);
  collect_vars(rhs, s);
  return {s.begin(), s.end()};
}

std::string term_to_string(const TermPtr& t) {
  switch (t->kind) {
    case OmegaTerm::Kind::One: return "1";
    case OmegaTerm::Kind::Variable: return t->var;
    case OmegaTerm::Kind::Product: {
      auto wrap = [](const TermPtr& c) {
        std::string s = term_to_string(c);
        if (c->kind == OmegaTerm::Kind::Product) return s;  // '*' associates
        return s;
      };
      return wrap(t->left) + "*" + wrap(t->right);
    }
    case OmegaTerm::Kind::OmegaPower: {
      std::string inner = term_to_string(t->left);
      if (t->left->kind == OmegaTerm::Kind::Product) inner = "(" + inner + ")";
      else if (t->left->kind == OmegaTerm::Kind::OmegaPower) inner = "(" + inner + ")";
      return inner + "^w";
    }
  }
  return "?";
}

namespace {

struct TermParser {
  const std::string& text;
  size_t pos = 0;

  explicit TermParser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw input_error("term syntax error at offset " + std::to_string(pos) + ": " + what);
  }

  TermPtr parse_product() {
    TermPtr acc = parse_power();
    while (true) {
      skip_ws();
      if (eat('*')) {
        acc = OmegaTerm::product(acc, parse_power());
      } else {
        return acc;
      }
    }
  }

  TermPtr parse_power() {
    TermPtr base = parse_primary();
    while (true) {
      skip_ws();
      if (pos + 1 < text.size() && text[pos] == '^' && text[pos + 1] == 'w') {
        pos += 2;
        base = OmegaTerm::omega_power(base);
      } else {
        return base;
      }
    }
  }

  TermPtr parse_primary() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    const char c = text[pos];
    if (c == '(') {
      ++pos;
      TermPtr t = parse_product();
      if (!eat(')')) fail("expected ')'");
      return t;
    }
    if (c == '1') {
      ++pos;
      return OmegaTerm::one();
    }
    if (c >= 'a' && c <= 'z') {
      size_t start = pos++;
      while (pos < text.size() &&
             ((text[pos] >= 'a' && text[pos] <= 'z') || (text[pos] >= '0' && text[pos] <= '9')))
        ++pos;
      return OmegaTerm::variable(text.substr(start, pos - start));
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

TermPtr parse_term(const std::string& text) {
  TermParser p(text);
  TermPtr t = p.parse_product();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return t;
}

Identity parse_identity(const std::string& text) {
  // Split on the top-level relation symbol.
  size_t at = text.find("<=");
  Identity::Kind kind = Identity::Kind::LessEq;
  size_t rel_len = 2;
  if (at == std::string::npos) {
    at = text.find('=');
    kind = Identity::Kind::Equal;
    rel_len = 1;
  }
  if (at == std::string::npos)
    throw input_error("identity must contain '<=' or '='");
  Identity id;
  id.kind = kind;
  id.lhs = parse_term(text.substr(0, at));
  id.rhs = parse_term(text.substr(at + rel_len));
  return id;
}

std::string identity_to_string(const Identity& id) {
  return term_to_string(id.lhs) + (id.kind == Identity::Kind::LessEq ? " <= " : " = ") +
         term_to_string(id.rhs);
}

namespace {

int eval_memo(const OmegaTerm* t, const Interpretation& itp, const OrderedMonoid& m,
              std::unordered_map<const OmegaTerm*, int>& memo) {
  auto it = memo.find(t);
  if (it != memo.end()) return it->second;
  int v = 0;
  switch (t->kind) {
    case OmegaTerm::Kind::One: v = m.neutral; break;
    case OmegaTerm::Kind::Variable: {
      auto vi = itp.find(t->var);
      if (vi == itp.end()) throw input_error("unknown variable '" + t->var + "'");
      v = vi->second;
      break;
    }
    case OmegaTerm::Kind::Product:
      v = m.prod(eval_memo(t->left.get(), itp, m, memo), eval_memo(t->right.get(), itp, m, memo));
      break;
    case OmegaTerm::Kind::OmegaPower:
      v = idempotent_power(m, eval_memo(t->left.get(), itp, m, memo));
      break;
  }
  memo.emplace(t, v);
  return v;
}

}  // namespace

int eval_term(const TermPtr& t, const Interpretation& itp, const OrderedMonoid& m) {
  std::unordered_map<const OmegaTerm*, int> memo;
  return eval_memo(t.get(), itp, m, memo);
}

IdentityCheck satisfies_identity(const OrderedMonoid& m, const Identity& id,
                                 const IdentityBudget& budget) {
  const std::vector<std::string> vars = id.variables();
  const int k = static_cast<int>(vars.size());
  if (k > budget.max_variables && m.size > budget.large_monoid)
    throw resource_error("identity with " + std::to_string(k) + " variables on a monoid of size " +
                         std::to_string(m.size) + " exceeds the variable budget");
  long long total = 1;
  for (int i = 0; i < k; ++i) {
    if (total > budget.max_interpretations / m.size)
      throw resource_error("identity check would need more than " +
                           std::to_string(budget.max_interpretations) + " interpretations");
    total *= m.size;
  }

  Interpretation itp;
  std::vector<int> assign(k, 0);
  IdentityCheck result;
  while (true) {
    for (int i = 0; i < k; ++i) itp[vars[i]] = assign[i];
    const int l = eval_term(id.lhs, itp, m);
    const int r = eval_term(id.rhs, itp, m);
    const bool ok = id.kind == Identity::Kind::LessEq ? m.less_eq(l, r) : l == r;
    if (!ok) {
      result.holds = false;
      result.counterexample = itp;
      return result;
    }
    int i = k - 1;
    for (; i >= 0; --i) {
      if (++assign[i] < m.size) break;
      assign[i] = 0;
    }
    if (i < 0) break;
  }
  return result;
}

}  // namespace fo2alt

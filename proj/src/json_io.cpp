// json_io.cpp

#include "fo2alt/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>

namespace fo2alt {

namespace {

const nlohmann::json& field(const nlohmann::json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw input_error(std::string("missing field \"") + name + "\"");
  return *it;
}

int int_field(const nlohmann::json& j, const char* name) {
  const nlohmann::json& f = field(j, name);
  if (!f.is_number_integer()) throw input_error(std::string("field \"") + name + "\" must be an integer");
  return f.get<int>();
}

std::string state_name(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw input_error("state names must be strings or integers");
}

char letter_of(const nlohmann::json& v, const char* what) {
  if (!v.is_string() || v.get<std::string>().size() != 1)
    throw input_error(std::string(what) + " must be single-character strings");
  return v.get<std::string>()[0];
}

}  // namespace

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

OrderedMonoid monoid_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw input_error("monoid file must be a JSON object");
  OrderedMonoid m;
  m.size = int_field(j, "size");
  if (m.size <= 0) throw input_error("field \"size\" must be positive");
  m.neutral = int_field(j, "neutral");
  const nlohmann::json& mul = field(j, "mul");
  if (!mul.is_array() || static_cast<int>(mul.size()) != m.size)
    throw input_error("field \"mul\" must be a size x size array");
  m.mul.reserve(static_cast<size_t>(m.size) * m.size);
  for (const auto& row : mul) {
    if (!row.is_array() || static_cast<int>(row.size()) != m.size)
      throw input_error("field \"mul\" must be a size x size array");
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw input_error("\"mul\" entries must be integers");
      const int e = v.get<int>();
      if (e < 0 || e >= m.size) throw input_error("\"mul\" entry out of range");
      m.mul.push_back(e);
    }
  }

  m.leq = BitMatrix(m.size, m.size);
  if (auto it = j.find("order"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) throw input_error("field \"order\" must be an array of pairs");
    for (const auto& pr : *it) {
      if (!pr.is_array() || pr.size() != 2 || !pr[0].is_number_integer() ||
          !pr[1].is_number_integer())
        throw input_error("\"order\" entries must be pairs [s,t]");
      const int s = pr[0].get<int>(), t = pr[1].get<int>();
      if (s < 0 || s >= m.size || t < 0 || t >= m.size)
        throw input_error("\"order\" pair out of range");
      m.leq.set(s, t);
    }
  }
  m.leq.transitive_closure();
  for (int s = 0; s < m.size; ++s)
    for (int t = s + 1; t < m.size; ++t)
      if (m.leq.at(s, t) && m.leq.at(t, s))
        throw input_error("\"order\" closure is not antisymmetric (elements " +
                          std::to_string(s) + " and " + std::to_string(t) + ")");

  if (auto it = j.find("letters"); it != j.end() && !it->is_null()) {
    if (!it->is_object()) throw input_error("field \"letters\" must be an object");
    for (auto kv = it->begin(); kv != it->end(); ++kv) {
      if (kv.key().size() != 1) throw input_error("letters must be single characters");
      if (!kv.value().is_number_integer())
        throw input_error("letter images must be integers");
      const int e = kv.value().get<int>();
      if (e < 0 || e >= m.size) throw input_error("letter image out of range");
      m.letters[kv.key()[0]] = e;
    }
  }
  return m;
}

ojson monoid_to_json(const OrderedMonoid& m) {
  ojson j;
  j["size"] = m.size;
  j["neutral"] = m.neutral;
  ojson mul = ojson::array();
  for (int a = 0; a < m.size; ++a) {
    ojson row = ojson::array();
    for (int b = 0; b < m.size; ++b) row.push_back(m.prod(a, b));
    mul.push_back(std::move(row));
  }
  j["mul"] = std::move(mul);
  ojson order = ojson::array();
  for (int s = 0; s < m.size; ++s)
    for (int t = 0; t < m.size; ++t)
      if (s != t && m.less_eq(s, t)) order.push_back(ojson::array({s, t}));
  j["order"] = std::move(order);
  ojson letters = ojson::object();
  for (auto& [c, img] : m.letters) letters[std::string(1, c)] = img;
  j["letters"] = std::move(letters);
  return j;
}

namespace {

void base_from_json(const nlohmann::json& j, AutomatonBase& a, const char* accept_key,
                    std::vector<bool>& accept_out) {
  if (!j.is_object()) throw input_error("automaton must be a JSON object");
  const nlohmann::json& states = field(j, "states");
  if (!states.is_array() || states.empty())
    throw input_error("field \"states\" must be a nonempty array");
  std::map<std::string, int> index;
  for (const auto& s : states) {
    const std::string name = state_name(s);
    if (!index.emplace(name, static_cast<int>(a.state_names.size())).second)
      throw input_error("duplicate state \"" + name + "\"");
    a.state_names.push_back(name);
  }
  const nlohmann::json& alphabet = field(j, "alphabet");
  if (!alphabet.is_array() || alphabet.empty())
    throw input_error("field \"alphabet\" must be a nonempty array");
  for (const auto& c : alphabet) a.alphabet.push_back(letter_of(c, "alphabet entries"));
  std::sort(a.alphabet.begin(), a.alphabet.end());
  if (std::adjacent_find(a.alphabet.begin(), a.alphabet.end()) != a.alphabet.end())
    throw input_error("duplicate letter in \"alphabet\"");

  const int n = a.num_states();
  a.delta.assign(n, std::vector<std::vector<int>>(a.alphabet.size()));
  a.initial.assign(n, false);

  auto state_of = [&](const nlohmann::json& v, const char* what) {
    const std::string name = state_name(v);
    auto it = index.find(name);
    if (it == index.end())
      throw input_error(std::string(what) + " references undeclared state \"" + name + "\"");
    return it->second;
  };

  for (const auto& q : field(j, "initial")) a.initial[state_of(q, "\"initial\"")] = true;
  const nlohmann::json& trans = field(j, "transitions");
  if (!trans.is_array()) throw input_error("field \"transitions\" must be an array");
  for (const auto& t : trans) {
    if (!t.is_array() || t.size() != 3)
      throw input_error("transitions must be triples [q, \"a\", q']");
    const int p = state_of(t[0], "\"transitions\"");
    const char c = letter_of(t[1], "transition letters");
    const int q = state_of(t[2], "\"transitions\"");
    a.delta[p][a.letter_index(c)].push_back(q);
  }
  for (auto& row : a.delta)
    for (auto& succ : row) {
      std::sort(succ.begin(), succ.end());
      succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    }

  accept_out.assign(n, false);
  const nlohmann::json* acc = nullptr;
  if (auto it = j.find(accept_key); it != j.end()) acc = &*it;
  else if (auto it2 = j.find(accept_key == std::string("final") ? "accepting" : "final");
           it2 != j.end())
    acc = &*it2;
  else
    throw input_error(std::string("missing field \"") + accept_key + "\"");
  for (const auto& q : *acc) accept_out[state_of(q, "accepting states")] = true;
}

ojson base_to_json(const AutomatonBase& a, const char* accept_key,
                   const std::vector<bool>& accept) {
  ojson j;
  j["states"] = a.state_names;
  ojson alpha = ojson::array();
  for (char c : a.alphabet) alpha.push_back(std::string(1, c));
  j["alphabet"] = std::move(alpha);
  ojson init = ojson::array();
  for (int q = 0; q < a.num_states(); ++q)
    if (a.initial[q]) init.push_back(a.state_names[q]);
  j["initial"] = std::move(init);
  ojson trans = ojson::array();
  for (int p = 0; p < a.num_states(); ++p)
    for (size_t l = 0; l < a.alphabet.size(); ++l)
      for (int q : a.delta[p][l])
        trans.push_back(ojson::array(
            {a.state_names[p], std::string(1, a.alphabet[l]), a.state_names[q]}));
  j["transitions"] = std::move(trans);
  ojson acc = ojson::array();
  for (int q = 0; q < a.num_states(); ++q)
    if (accept[q]) acc.push_back(a.state_names[q]);
  j[accept_key] = std::move(acc);
  return j;
}

}  // namespace

Nfa nfa_from_json(const nlohmann::json& j) {
  Nfa a;
  base_from_json(j, a, "final", a.final);
  validate_automaton(a);
  return a;
}

BuchiAutomaton buchi_from_json(const nlohmann::json& j) {
  BuchiAutomaton a;
  base_from_json(j, a, "accepting", a.accepting);
  validate_automaton(a);
  return a;
}

ojson nfa_to_json(const Nfa& a) { return base_to_json(a, "final", a.final); }
ojson buchi_to_json(const BuchiAutomaton& a) { return base_to_json(a, "accepting", a.accepting); }

LanguageInput language_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw input_error("language file must be a JSON object");
  LanguageInput li;
  if (auto it = j.find("finite"); it != j.end() && !it->is_null())
    li.nfa = nfa_from_json(*it);
  if (auto it = j.find("infinite"); it != j.end() && !it->is_null())
    li.buchi = buchi_from_json(*it);
  if (!li.nfa && !li.buchi)
    throw input_error("language file needs a \"finite\" or \"infinite\" part");
  return li;
}

}  // namespace fo2alt

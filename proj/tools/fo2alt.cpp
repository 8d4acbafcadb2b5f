// fo2alt.cpp
// * Command line front end: validation, algebra, topology, classification,
//   synthesis, membership and EF games over the JSON file formats.

#include <algorithm>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "fo2alt/classifier.hpp"
#include "fo2alt/json_io.hpp"
#include "fo2alt/language.hpp"
#include "fo2alt/logic.hpp"
#include "fo2alt/topology.hpp"
#include "fo2alt/varieties.hpp"

namespace {

using fo2alt::ojson;

constexpr const char* kSchemaHelp = R"(File formats:
  monoid.json   {"size": 2, "neutral": 0, "mul": [[0,1],[1,1]],
                 "order": [[1,0]], "letters": {"a": 1}}
                "order" lists pairs s <= t; reflexive pairs may be omitted
                (the transitive closure is applied, antisymmetry re-checked).
  automaton     {"states": ["q0","q1"], "alphabet": ["a","b"],
                 "initial": ["q0"], "transitions": [["q0","a","q1"]],
                 "final": ["q1"]}        (NFA; Buchi uses "accepting")
  language.json {"finite": <nfa or null>, "infinite": <buchi or null>}

Word syntax:    finite word `ab`, ultimately periodic word `ab(ba)^w`,
                `eps` for the empty word.
Identity syntax: terms over `1`, variables [a-z][a-z0-9]*, `*`, `^w`,
                e.g. `(x*y*z)^w * y * (x*y*z)^w = (x*y*z)^w` or `1 <= z`.
Formula syntax: `E x (a(x) & E y (x<y & b(y)))`, `!` for negation.

Exit codes: 0 decided, 1 input error, 2 resource cap exceeded, 3 internal.)";

struct Options {
  std::string format = "json";
  int cap = 5000;
  uint64_t seed = 1;
};

void emit(const Options& opt, const ojson& report, const std::string& text) {
  if (opt.format == "json")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

ojson pair_json(const fo2alt::LinkedPair& p) { return ojson::array({p.s, p.e}); }

ojson witness_json(const std::optional<std::pair<fo2alt::LinkedPair, fo2alt::LinkedPair>>& w) {
  if (!w) return nullptr;
  return ojson::array({pair_json(w->first), pair_json(w->second)});
}

fo2alt::RecognizedLanguage load_language(const std::string& path, int cap) {
  const fo2alt::LanguageInput li = fo2alt::language_from_json(fo2alt::load_json_file(path));
  return fo2alt::combine_infty(li.nfa, li.buchi, {cap});
}

fo2alt::Universe parse_universe(const std::string& u) {
  if (u == "infty") return fo2alt::Universe::Infty;
  if (u == "omega") return fo2alt::Universe::Omega;
  if (u == "star") return fo2alt::Universe::Star;
  throw fo2alt::input_error("--universe must be one of infty, omega, star");
}

ojson report_json(const fo2alt::ValidationReport& rep) {
  ojson issues = ojson::array();
  for (const auto& issue : rep.issues) {
    ojson o;
    o["kind"] = issue.kind;
    o["witness"] = issue.witness;
    o["detail"] = issue.detail;
    issues.push_back(std::move(o));
  }
  ojson j;
  j["valid"] = rep.valid();
  j["issues"] = std::move(issues);
  return j;
}

std::string report_text(const fo2alt::ValidationReport& rep) {
  if (rep.valid()) return "valid";
  std::string out = "invalid";
  for (const auto& issue : rep.issues) {
    out += "\n  " + issue.kind + ": " + issue.detail + " (witness:";
    for (int w : issue.witness) out += " " + std::to_string(w);
    out += ")";
  }
  return out;
}

int run_validate(const Options& opt, const std::string& path, int samples) {
  const nlohmann::json j = fo2alt::load_json_file(path);
  fo2alt::ValidationReport rep;
  if (j.contains("mul") || j.contains("size")) {
    rep = fo2alt::validate(fo2alt::monoid_from_json(j));
  } else {
    // Language file: structural invariants plus the sampled cross-check of
    // monoid membership against the automaton oracle (advisory, seeded).
    rep = fo2alt::validate_recognition(load_language(path, opt.cap), samples, opt.seed);
  }
  emit(opt, report_json(rep), report_text(rep));
  return 0;
}

int run_green(const Options& opt, const std::string& path) {
  const fo2alt::OrderedMonoid m = fo2alt::monoid_from_json(fo2alt::load_json_file(path));
  if (auto rep = fo2alt::validate(m); !rep.valid())
    throw fo2alt::input_error("monoid invalid: " + rep.issues.front().detail);
  const fo2alt::GreenData g = fo2alt::green(m);
  auto classes = [&](const std::vector<int>& of) {
    const int k = *std::max_element(of.begin(), of.end()) + 1;
    std::vector<std::vector<int>> cls(k);
    for (int e = 0; e < m.size; ++e) cls[of[e]].push_back(e);
    return cls;
  };
  ojson j;
  j["rclasses"] = classes(g.r_class_of);
  j["lclasses"] = classes(g.l_class_of);
  j["jclasses"] = classes(g.j_class_of);
  std::string text = "R-classes: " + std::to_string(j["rclasses"].size()) +
                     ", L-classes: " + std::to_string(j["lclasses"].size()) +
                     ", J-classes: " + std::to_string(j["jclasses"].size());
  emit(opt, j, text);
  return 0;
}

int run_identity(const Options& opt, const std::string& path, const std::string& identity) {
  const fo2alt::OrderedMonoid m = fo2alt::monoid_from_json(fo2alt::load_json_file(path));
  if (auto rep = fo2alt::validate(m); !rep.valid())
    throw fo2alt::input_error("monoid invalid: " + rep.issues.front().detail);
  const fo2alt::Identity id = fo2alt::parse_identity(identity);
  const fo2alt::IdentityCheck chk = fo2alt::satisfies_identity(m, id);
  ojson j;
  j["identity"] = fo2alt::identity_to_string(id);
  j["holds"] = chk.holds;
  if (chk.counterexample) {
    ojson ce = ojson::object();
    for (auto& [var, val] : *chk.counterexample) ce[var] = val;
    j["counterexample"] = std::move(ce);
  } else {
    j["counterexample"] = nullptr;
  }
  std::string text = chk.holds ? "holds" : "fails";
  if (chk.counterexample) {
    text += " at";
    for (auto& [var, val] : *chk.counterexample)
      text += " " + var + "=" + std::to_string(val);
  }
  emit(opt, j, text);
  return 0;
}

int run_kd_quotient(const Options& opt, const std::string& path) {
  const fo2alt::OrderedMonoid m = fo2alt::monoid_from_json(fo2alt::load_json_file(path));
  if (auto rep = fo2alt::validate(m); !rep.valid())
    throw fo2alt::input_error("monoid invalid: " + rep.issues.front().detail);
  const fo2alt::KdQuotient q = fo2alt::kd_quotient(m);
  ojson j;
  j["monoid"] = fo2alt::monoid_to_json(q.monoid);
  j["projection"] = q.projection;
  emit(opt, j, "quotient size " + std::to_string(q.monoid.size));
  return 0;
}

int run_level(const Options& opt, const std::string& path) {
  const fo2alt::OrderedMonoid m = fo2alt::monoid_from_json(fo2alt::load_json_file(path));
  if (auto rep = fo2alt::validate(m); !rep.valid())
    throw fo2alt::input_error("monoid invalid: " + rep.issues.front().detail);
  const fo2alt::MinLevelResult r = fo2alt::min_level(m);
  ojson j;
  j["level"] = r.level ? ojson(*r.level) : ojson(nullptr);
  j["diagnostic"] = r.diagnostic;
  j["chain_length"] = r.chain_length;
  emit(opt, j, r.level ? std::to_string(*r.level) : "none (" + r.diagnostic + ")");
  return 0;
}

int run_syntactic(const Options& opt, const std::string& path) {
  const fo2alt::RecognizedLanguage syn =
      fo2alt::syntactic_quotient(load_language(path, opt.cap));
  ojson j;
  j["monoid"] = fo2alt::monoid_to_json(syn.monoid);
  ojson acc = ojson::array();
  for (const auto& p : syn.accept_pairs()) acc.push_back(pair_json(p));
  j["accept"] = std::move(acc);
  emit(opt, j, "syntactic monoid size " + std::to_string(syn.monoid.size));
  return 0;
}

int run_classify(const Options& opt, const std::string& path, const std::string& universe) {
  const fo2alt::Classification c =
      fo2alt::classify(load_language(path, opt.cap), parse_universe(universe));
  ojson evidence;
  evidence["syntactic_size"] = c.syntactic_size;
  evidence["min_level"] = c.monoid_min_level ? ojson(*c.monoid_min_level) : ojson(nullptr);
  if (c.cantor_open) {
    evidence["cantor_open"] = *c.cantor_open;
    evidence["cantor_witness"] = witness_json(c.cantor_witness);
  }
  if (c.alphabetic_open) {
    evidence["alphabetic_open"] = *c.alphabetic_open;
    evidence["alphabetic_witness"] = witness_json(c.alphabetic_witness);
  }
  if (!c.diagnostic.empty()) evidence["diagnostic"] = c.diagnostic;
  ojson j;
  j["universe"] = fo2alt::universe_name(c.universe);
  j["fo2"] = c.fo2_definable;
  j["level"] = c.level ? ojson(*c.level) : ojson(nullptr);
  j["evidence"] = std::move(evidence);
  std::string text = c.level ? "level " + std::to_string(*c.level)
                             : (c.fo2_definable ? "fo2-definable, no level (" + c.diagnostic + ")"
                                                : "not fo2-definable");
  emit(opt, j, text);
  return 0;
}

int run_open(const Options& opt, const std::string& path, const std::string& topology,
             const std::string& universe) {
  fo2alt::TopologyKind kind;
  const bool omega = universe == "omega";
  if (!omega && universe != "infty")
    throw fo2alt::input_error("--universe must be infty or omega for openness");
  if (topology == "cantor")
    kind = omega ? fo2alt::TopologyKind::CantorOmega : fo2alt::TopologyKind::CantorInfty;
  else if (topology == "alphabetic")
    kind = omega ? fo2alt::TopologyKind::AlphabeticOmega : fo2alt::TopologyKind::AlphabeticInfty;
  else
    throw fo2alt::input_error("--topology must be cantor or alphabetic");

  const fo2alt::RecognizedLanguage l = load_language(path, opt.cap);
  const fo2alt::OpenResult r = fo2alt::is_open(l, kind);
  ojson j;
  j["topology"] = fo2alt::topology_kind_name(kind);
  j["open"] = r.open;
  j["witness"] = witness_json(r.witness);
  emit(opt, j, r.open ? "open" : "not open");
  return 0;
}

int run_member(const Options& opt, const std::string& path, const std::string& word) {
  const fo2alt::LanguageInput li = fo2alt::language_from_json(fo2alt::load_json_file(path));
  const fo2alt::RecognizedLanguage l = fo2alt::combine_infty(li.nfa, li.buchi, {opt.cap});
  const fo2alt::UpWord w = fo2alt::parse_up_word(word);
  const bool via_monoid = fo2alt::member_up_monoid(l, w);
  const bool via_automaton = fo2alt::member_up_automaton(li.nfa, li.buchi, w);
  if (via_monoid != via_automaton)
    throw fo2alt::invariant_error("monoid and automaton membership disagree on " + w.to_string());
  ojson j;
  j["word"] = w.to_string();
  j["member"] = via_monoid;
  emit(opt, j, via_monoid ? "member" : "not a member");
  return 0;
}

int run_ef(const Options& opt, int m, int n, const std::string& u_raw,
           const std::string& v_raw) {
  const std::string u = u_raw == "eps" ? "" : u_raw;
  const std::string v = v_raw == "eps" ? "" : v_raw;
  const fo2alt::GameConfig cfg{m, n};
  const bool dup = fo2alt::ef_duplicator_wins(u, v, cfg);
  ojson j;
  j["m"] = m;
  j["n"] = n;
  j["winner"] = dup ? "duplicator" : "spoiler";
  std::string text = dup ? "duplicator wins" : "spoiler wins";
  if (!dup) {
    const auto move = fo2alt::ef_spoiler_winning_move(u, v, cfg);
    if (move) {
      ojson mv;
      mv["word"] = move->on_right ? "right" : "left";
      mv["pebble"] = std::string(1, fo2alt::var_name(move->pebble));
      mv["position"] = move->position;
      j["winning_move"] = std::move(mv);
      text += "; first move: pebble " + std::string(1, fo2alt::var_name(move->pebble)) + " at " +
              (move->on_right ? "right" : "left") + ":" + std::to_string(move->position);
    }
  } else if (n > 0 && !u.empty()) {
    // Sample exchange: Duplicator's reply to Spoiler opening with x on the
    // first position of the left word.
    const fo2alt::EfMove opening{false, fo2alt::Var::X, 1};
    if (auto reply = fo2alt::ef_duplicator_reply(u, v, cfg, opening)) {
      ojson ex;
      ex["spoiler"] = "x at left:1";
      ex["duplicator"] = "x at right:" + std::to_string(*reply);
      j["sample_exchange"] = std::move(ex);
      text += "; e.g. x at left:1 -> x at right:" + std::to_string(*reply);
    }
  }
  emit(opt, j, text);
  return 0;
}

int run_synth(const Options& opt, const std::string& path) {
  const fo2alt::SynthesisResult r =
      fo2alt::synthesize_sigma21_formula(load_language(path, opt.cap));
  const fo2alt::FragmentIndex frag = fo2alt::fragment_of(r.formula);
  ojson j;
  j["formula"] = fo2alt::formula_to_string(r.formula);
  j["minimal_words"] = r.minimal_words;
  j["fragment"] = ojson{{"m", frag.m}, {"n", frag.n}};
  emit(opt, j, fo2alt::formula_to_string(r.formula));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("fo2alt - alternation levels of two-variable first-order logic "
                           "over finite and infinite words\n\n") +
               kSchemaHelp};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "Output format: json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--cap", opt.cap, "Element cap for transition monoids")->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for sampled validation suites")
      ->capture_default_str();

  std::string path, identity, universe = "infty", topology = "cantor", word, u, v;
  int m = 1, n = 0, samples = 1000;

  auto* validate = app.add_subcommand(
      "validate", "Check monoid invariants, or a language file's recognition invariants "
                  "(with a seeded sampled oracle cross-check)");
  validate->add_option("file", path)->required();
  validate->add_option("--samples", samples, "Sample count for the oracle cross-check")
      ->capture_default_str();

  auto* greenc = app.add_subcommand("green", "Green's relation classes of a monoid");
  greenc->add_option("file", path)->required();

  auto* identityc = app.add_subcommand("identity", "Check an omega-identity on a monoid");
  identityc->add_option("file", path)->required();
  identityc->add_option("identity", identity, "e.g. \"1 <= z\"")->required();

  auto* kdc = app.add_subcommand("kd-quotient", "KD quotient of an ordered monoid");
  kdc->add_option("file", path)->required();

  auto* levelc = app.add_subcommand("level", "Minimal hierarchy level of an ordered monoid");
  levelc->add_option("file", path)->required();

  auto* sync = app.add_subcommand("syntactic", "Syntactic ordered monoid of a language");
  sync->add_option("file", path)->required();

  auto* classifyc = app.add_subcommand("classify", "Minimal definability level of a language");
  classifyc->add_option("file", path)->required();
  classifyc->add_option("--universe", universe, "infty, omega or star")->capture_default_str();

  auto* openc = app.add_subcommand("open", "Topological openness of a language");
  openc->add_option("file", path)->required();
  openc->add_option("--topology", topology, "cantor or alphabetic")->capture_default_str();
  openc->add_option("--universe", universe, "infty or omega")->capture_default_str();

  auto* memberc = app.add_subcommand("member", "Ultimately periodic membership");
  memberc->add_option("file", path)->required();
  memberc->add_option("word", word, "e.g. ab, ab(ba)^w, eps")->required();

  auto* efc = app.add_subcommand("ef", "Solve the EF game on two finite words");
  efc->add_option("--m", m, "Alternation budget (Spoiler switches at most m-1 times)")
      ->required();
  efc->add_option("--n", n, "Number of rounds")->required();
  efc->add_option("u", u, "Left word (eps for empty)")->required();
  efc->add_option("v", v, "Right word (eps for empty)")->required();

  auto* synthc = app.add_subcommand("synth", "Synthesize a level-1 formula for a language");
  synthc->add_option("file", path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return run_validate(opt, path, samples);
    if (*greenc) return run_green(opt, path);
    if (*identityc) return run_identity(opt, path, identity);
    if (*kdc) return run_kd_quotient(opt, path);
    if (*levelc) return run_level(opt, path);
    if (*sync) return run_syntactic(opt, path);
    if (*classifyc) return run_classify(opt, path, universe);
    if (*openc) return run_open(opt, path, topology, universe);
    if (*memberc) return run_member(opt, path, word);
    if (*efc) return run_ef(opt, m, n, u, v);
    if (*synthc) return run_synth(opt, path);
  } catch (const fo2alt::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const fo2alt::resource_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 2;
  } catch (const fo2alt::invariant_error& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

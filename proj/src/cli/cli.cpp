#include "prefl/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "prefl/defaults.hpp"
#include "prefl/deontic.hpp"
#include "prefl/error.hpp"
#include "prefl/parser.hpp"
#include "prefl/representation.hpp"
#include "prefl/semantics.hpp"
#include "prefl/structure.hpp"
#include "prefl/text_io.hpp"

namespace prefl::cli {

namespace {

struct Options {
  std::string theory;
  std::string query;
  std::string structure;
  std::string defaults;
  std::vector<std::string> given;
  std::string obligations;
  std::string selection;
  std::string emit;
  std::string atoms;
  std::string format = "text";
  bool count = false;
};

/// Atom handling shared by every subcommand: either collect atoms from the
/// inputs or check them against an alphabet given with --atoms.
class AlphabetSource {
 public:
  explicit AlphabetSource(const std::string& atoms) {
    if (atoms.empty()) return;
    std::vector<std::string> names;
    std::stringstream ss(atoms);
    for (std::string name; std::getline(ss, name, ',');) {
      if (!is_atom_name(name)) throw Error("invalid atom name '" + name + "' in --atoms");
      names.push_back(name);
    }
    fixed_.emplace(std::move(names));
  }

  AtomScope scope() { return fixed_ ? AtomScope::strict(*fixed_) : AtomScope::building(builder_); }

  Alphabet finish() { return fixed_ ? *fixed_ : builder_.freeze(); }
  bool fixed() const { return fixed_.has_value(); }
  const std::set<std::string, std::less<>>& collected() const { return builder_.names(); }

 private:
  std::optional<Alphabet> fixed_;
  AlphabetBuilder builder_;
};

class Report {
 public:
  Report(std::ostream& out, bool tsv) : out_(out), tsv_(tsv) {}

  void answer(bool yes) { out_ << (yes ? "YES" : "NO") << '\n'; }

  void models(const Alphabet& alphabet, const ModelSet& set) {
    set.for_each([&](Model m) {
      if (tsv_) {
        out_ << m.index << '\t' << alphabet.bits(m) << '\t' << alphabet.render(m) << '\n';
      } else {
        out_ << alphabet.bits(m) << "  " << alphabet.render(m) << '\n';
      }
    });
  }

  void witness(const ViolationWitness& w) {
    if (!tsv_) {
      out_ << to_string(w) << '\n';
      return;
    }
    if (w.kind == ViolationWitness::Kind::Subset) {
      out_ << "subset\t" << w.set.to_string() << "\t\t" << w.model.index << '\n';
    } else {
      out_ << "pr\t" << w.set.to_string() << '\t' << w.subset.to_string() << '\t' << w.model.index
           << '\n';
    }
  }

  void copies(std::uint32_t model, std::size_t n) {
    if (tsv_) {
      out_ << "copies\t" << model << '\t' << n << '\n';
    } else {
      out_ << "model " << model << ": " << n << (n == 1 ? " copy" : " copies") << '\n';
    }
  }

  std::ostream& raw() { return out_; }

 private:
  std::ostream& out_;
  bool tsv_;
};

Formula parse_query(const std::string& text, AtomScope scope) {
  return parse_formula(text, scope, SourcePos{"<query>", 1, 1});
}

int cmd_models(const Options& o, Report& r) {
  AlphabetSource src(o.atoms);
  const Theory t = parse_theory(read_file(o.theory), o.theory, src.scope());
  const Alphabet alphabet = src.finish();
  const ModelSet models = models_of(t, alphabet);
  r.models(alphabet, models);
  return models.empty() ? kNegative : kPositive;
}

int cmd_entail(const Options& o, Report& r) {
  AlphabetSource src(o.atoms);
  const Theory t = parse_theory(read_file(o.theory), o.theory, src.scope());
  const Formula q = parse_query(o.query, src.scope());
  const Alphabet alphabet = src.finish();
  const bool yes = classical_entails(t, q, alphabet);
  r.answer(yes);
  return yes ? kPositive : kNegative;
}

int cmd_nml_entail(const Options& o, Report& r) {
  AlphabetSource src(o.atoms);
  const Theory t = parse_theory(read_file(o.theory), o.theory, src.scope());
  const Formula q = parse_query(o.query, src.scope());
  const Alphabet alphabet = src.finish();
  const auto s = parse_structure(read_file(o.structure), o.structure, alphabet.model_count());
  const ModelSet minimal = mu_of_structure(s, models_of(t, alphabet));
  const bool yes = minimal.is_subset_of(models_of(q, alphabet));
  r.answer(yes);
  r.models(alphabet, minimal);
  return yes ? kPositive : kNegative;
}

int cmd_defaults(const Options& o, Report& r) {
  // Abnormality atoms are not user atoms, so parse openly and split afterwards.
  const DefaultsFile file = parse_defaults(read_file(o.defaults), o.defaults);
  Theory given;
  if (!o.theory.empty()) given = parse_theory(read_file(o.theory), o.theory);
  for (const auto& g : o.given) given.add(parse_formula(g, {}, SourcePos{"<given>", 1, 1}));
  const Formula q = parse_query(o.query, {});

  std::set<std::string> atoms;
  collect_atoms(file.facts, atoms);
  for (const auto& [pre, post] : file.rules) {
    collect_atoms(pre, atoms);
    collect_atoms(post, atoms);
  }
  collect_atoms(given, atoms);
  collect_atoms(q, atoms);
  std::vector<std::string> user;
  for (const auto& a : atoms) {
    if (!is_abnormality_atom(a)) user.push_back(a);
  }
  AlphabetSource src(o.atoms);
  if (src.fixed()) {
    const Alphabet fixed = src.finish();
    for (const auto& a : user) {
      if (!fixed.contains(a)) throw Error("atom '" + a + "' is not in --atoms");
    }
    user = fixed.atoms();
  }

  DefaultTheory dt(Alphabet(std::move(user)), file.facts);
  for (const auto& [pre, post] : file.rules) dt.add_rule(pre, post);
  const CompiledDefaults compiled = compile_defaults(dt);
  const bool yes = compiled.entails(given, q);
  r.answer(yes);
  r.models(compiled.alphabet, compiled.minimal_models(given));
  return yes ? kPositive : kNegative;
}

int cmd_deontic(const Options& o, Report& r) {
  AlphabetSource src(o.atoms);
  const ObligationSet obs = parse_obligations(read_file(o.obligations), o.obligations, src.scope());
  const Theory facts = parse_theory(read_file(o.theory), o.theory, src.scope());
  std::optional<Formula> q;
  if (!o.query.empty()) q = parse_query(o.query, src.scope());
  const Alphabet alphabet = src.finish();
  const auto order = o.count ? ViolationOrder::Count : ViolationOrder::Subset;
  const ModelSet ideal = ideal_worlds(facts, obs, alphabet, order);
  int code = ideal.empty() ? kNegative : kPositive;
  if (q) {
    const bool yes = ideal.is_subset_of(models_of(*q, alphabet));
    r.answer(yes);
    code = yes ? kPositive : kNegative;
  }
  r.models(alphabet, ideal);
  return code;
}

int cmd_check_mu(const Options& o, Report& r) {
  const SelectionFunction sel = parse_selection(read_file(o.selection), o.selection);
  if (auto w = check_properties(sel)) {
    r.witness(*w);
    return kNegative;
  }
  r.raw() << "OK\n";
  return kPositive;
}

int cmd_synthesize(const Options& o, Report& r) {
  const SelectionFunction sel = parse_selection(read_file(o.selection), o.selection);
  auto result = synthesize_structure(sel);
  if (auto* w = std::get_if<ViolationWitness>(&result)) {
    r.witness(*w);
    return kNegative;
  }
  const auto& report = std::get<SynthesisReport>(result);
  r.raw() << (report.verified ? "VERIFIED" : "UNVERIFIED") << '\n';
  for (const auto& [model, n] : report.copies_per_model) r.copies(model, n);
  if (!o.emit.empty()) {
    std::ofstream file(o.emit, std::ios::binary);
    if (!(file << write_structure(report.structure))) {
      throw Error("cannot write structure to '" + o.emit + "'");
    }
  }
  return report.verified ? kPositive : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Preferential (minimal-model) reasoning over propositional theories", "prefl"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "tsv"}))
      ->capture_default_str();
  app.add_option("--atoms", o.atoms, "Comma-separated alphabet; unknown atoms become errors");

  auto* models = app.add_subcommand("models", "List the models of a theory");
  models->add_option("-t,--theory", o.theory, "Theory file")->required();

  auto* entail = app.add_subcommand("entail", "Classical entailment");
  entail->add_option("-t,--theory", o.theory, "Theory file")->required();
  entail->add_option("-q,--query", o.query, "Query formula")->required();

  auto* nml = app.add_subcommand("nml-entail", "Preferential entailment over a structure");
  nml->add_option("-t,--theory", o.theory, "Theory file")->required();
  nml->add_option("-s,--structure", o.structure, "Structure file")->required();
  nml->add_option("-q,--query", o.query, "Query formula")->required();

  auto* defaults = app.add_subcommand("defaults", "Default reasoning with exceptions");
  defaults->add_option("-d,--defaults", o.defaults, "Defaults file")->required();
  defaults->add_option("-q,--query", o.query, "Query formula")->required();
  defaults->add_option("-t,--theory", o.theory, "Situation theory file");
  defaults->add_option("-g,--given", o.given, "Situation formula (repeatable)");

  auto* deontic = app.add_subcommand("deontic", "Ideal worlds under obligations");
  deontic->add_option("-o,--obligations", o.obligations, "Obligations file")->required();
  deontic->add_option("-t,--theory", o.theory, "Facts file")->required();
  deontic->add_option("-q,--query", o.query, "Formula to test for obligation");
  deontic->add_flag("--count", o.count, "Compare worlds by number of violations");

  auto* check = app.add_subcommand("check-mu", "Check a selection function for (mu-subset) and (mu-PR)");
  check->add_option("-m,--mu", o.selection, "Selection file")->required();

  auto* synth = app.add_subcommand("synthesize", "Build a structure realizing a selection function");
  synth->add_option("-m,--mu", o.selection, "Selection file")->required();
  synth->add_option("--emit", o.emit, "Write the structure to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPositive : kUsage;
  }

  Report report(out, o.format == "tsv");
  try {
    if (*models) return cmd_models(o, report);
    if (*entail) return cmd_entail(o, report);
    if (*nml) return cmd_nml_entail(o, report);
    if (*defaults) return cmd_defaults(o, report);
    if (*deontic) return cmd_deontic(o, report);
    if (*check) return cmd_check_mu(o, report);
    if (*synth) return cmd_synthesize(o, report);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace prefl::cli

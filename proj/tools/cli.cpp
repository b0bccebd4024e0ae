#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "skewhopf/chain.hpp"
#include "skewhopf/comodule.hpp"
#include "skewhopf/error.hpp"
#include "skewhopf/hopf.hpp"
#include "skewhopf/io.hpp"
#include "skewhopf/rewrite.hpp"

namespace skewhopf::cli {

namespace {

using io::Json;

struct ChainSource {
  std::string file;
  std::string preset;
  std::optional<int> n, k, lo, hi;
};

struct Options {
  ChainSource source;
  bool pretty = false;
  std::string preset_name;
  std::string expr;
  std::string op = "delta";
  bool check = false;
  bool assert_confluent = false;
  unsigned parallel = 1;
  std::size_t max_degree = 4;
  std::size_t max_iters = 16;
  std::size_t max_len = 2;
  bool with_oracle = false;
  int level = 0;
  std::size_t component = 0;
  bool dual = false;
  std::optional<std::string> sub;
  std::optional<std::string> quotient;
};

void add_chain_options(CLI::App& app, Options& o) {
  app.add_option("chain", o.source.file, "chain spec JSON file");
  app.add_option("--preset", o.source.preset, "named preset instead of a file");
  app.add_option("--n", o.source.n, "preset parameter n");
  app.add_option("--k", o.source.k, "preset parameter k");
  app.add_option("--lo", o.source.lo, "preset window low end");
  app.add_option("--hi", o.source.hi, "preset window high end");
  app.add_flag("--pretty", o.pretty, "human-readable output");
}

PresetParams preset_params(const ChainSource& s) { return PresetParams{s.n, s.k, s.lo, s.hi}; }

std::shared_ptr<const ValidatedChain> load_chain(const ChainSource& s) {
  const bool has_params = s.n || s.k || s.lo || s.hi;
  if (!s.file.empty() && !s.preset.empty()) {
    throw Error(ErrorCode::BadParams, "give either a chain file or --preset, not both");
  }
  if (!s.preset.empty()) return std::make_shared<const ValidatedChain>(validate(preset(s.preset, preset_params(s))));
  if (s.file.empty()) throw Error(ErrorCode::BadParams, "a chain file or --preset is required");
  if (has_params) throw Error(ErrorCode::BadParams, "--n/--k/--lo/--hi only apply to --preset");
  return std::make_shared<const ValidatedChain>(validate(io::load_chain_file(s.file)));
}

Json big_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return v.str();
}

std::string letters_text(const std::vector<Letter>& letters, const ValidatedChain& chain) {
  std::string out;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k > 0) out += " ";
    out += io::format_letter(letters[k], chain);
  }
  return out.empty() ? "-" : out;
}

std::string set_text(const comodule::BlockSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(s[k]);
  }
  return out + "}";
}

std::string lattice_text(const comodule::SubspaceLattice& l) {
  std::string out;
  for (std::size_t k = 0; k < l.elements.size(); ++k) {
    if (k > 0) out += " ";
    out += set_text(l.elements[k]);
  }
  return out;
}

comodule::BlockSet parse_block_set(const std::string& text) {
  comodule::BlockSet out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty()) continue;
    if (!std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }) || item.size() > 9) {
      throw Error(ErrorCode::BadParams, "block ids must be non-negative integers, got '" + item + "'");
    }
    out.push_back(std::stoul(item));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Every element of `inner` is an element of `outer`.
bool lattice_within(const comodule::SubspaceLattice& inner, const comodule::SubspaceLattice& outer) {
  return std::all_of(inner.elements.begin(), inner.elements.end(),
                     [&](const comodule::BlockSet& s) { return outer.contains(s); });
}

struct Result {
  Json json;
  std::string text;
  int code = kOk;
};

Result do_validate(const Options& o) {
  const auto chain = load_chain(o.source);
  Result res;
  Json sup = Json::array();
  for (const auto& cls : chain->sup_partition().classes) {
    Json names = Json::array();
    for (auto id : cls) names.push_back(chain->name(id));
    sup.push_back(std::move(names));
  }
  Json warnings = Json::array();
  std::ostringstream text;
  text << "valid chain: " << chain->index_count() << " indices, " << chain->component_count()
       << " components, window [" << chain->lo() << ", " << chain->hi() << "]\n";
  text << "supremum partition min class size: " << chain->sup_partition().min_class_size << "\n";
  for (const auto& w : chain->warnings()) {
    warnings.push_back(Json{{"code", std::string(warning_code_name(w.code))}, {"message", w.message}});
    text << "warning " << warning_code_name(w.code) << ": " << w.message << "\n";
  }
  res.json = Json{{"valid", true},
                  {"indices", chain->index_count()},
                  {"components", chain->component_count()},
                  {"window", Json{{"lo", chain->lo()}, {"hi", chain->hi()}}},
                  {"supPartition", std::move(sup)},
                  {"supOK", chain->sup_ok()},
                  {"warnings", std::move(warnings)}};
  res.text = text.str();
  return res;
}

Result do_preset(const Options& o) {
  const auto spec = preset(o.preset_name, preset_params(o.source));
  validate(spec);
  Result res;
  res.json = io::chain_to_json(spec);
  res.text = io::dump(res.json);
  return res;
}

Result do_rules(const Options& o) {
  const auto chain = load_chain(o.source);
  const auto rules = rewrite::derive_rules(*chain);
  Result res;
  res.json = io::rules_json(rules);
  std::ostringstream text;
  for (const auto& [lhs, rule] : rules.rules()) {
    text << io::format_word(lhs, *chain) << " -> " << io::format_poly(rule.rhs, *chain) << "  ["
         << rewrite::family_name(rule.family) << "]\n";
  }
  text << rules.size() << " rules\n";
  res.text = text.str();
  return res;
}

Result do_normalize(const Options& o) {
  const auto chain = load_chain(o.source);
  const auto rules = rewrite::derive_rules(*chain);
  const auto p = io::parse_expr(o.expr, *chain);
  const auto nf = rewrite::normal_form(rules, p);
  Result res;
  res.json = Json{{"input", io::format_poly(p, *chain)},
                  {"normalForm", io::poly_json(nf, *chain)},
                  {"text", io::format_poly(nf, *chain)}};
  res.text = io::format_poly(p, *chain) + "\n  = " + io::format_poly(nf, *chain) + "\n";
  return res;
}

Result do_confluence(const Options& o) {
  const auto chain = load_chain(o.source);
  const auto rules = rewrite::derive_rules(*chain);
  const auto report = rewrite::check_confluence(rules, std::max(1u, o.parallel));
  Result res;
  res.json = io::confluence_json(report, *chain);
  std::ostringstream text;
  text << report.ambiguity_count << " ambiguities, " << report.resolved << " resolved, " << report.unresolved.size()
       << " unresolved\n";
  for (const auto& u : report.unresolved) {
    text << "  " << io::format_word(u.ambiguity.word, *chain) << ": " << io::format_poly(u.residual, *chain) << "\n";
  }
  text << (report.confluent() ? "confluent\n" : "not confluent\n");
  res.text = text.str();
  if (o.assert_confluent && !report.confluent()) res.code = kCheckFailed;
  return res;
}

Result do_complete(const Options& o) {
  const auto chain = load_chain(o.source);
  const auto rules = rewrite::derive_rules(*chain);
  const auto result = rewrite::complete(rules, o.max_degree, o.max_iters);
  Result res;
  res.json = io::completion_json(result);
  std::ostringstream text;
  text << "iterations: " << result.iterations << "\nfixpoint: " << std::boolalpha << result.fixpoint
       << "\ndegree cap hit: " << result.degree_cap_hit << "\niteration cap hit: " << result.iteration_cap_hit
       << "\ncollapsed: " << result.collapsed << "\nrules: " << result.rules.size() << "\n";
  for (const auto& p : result.derived) text << "  derived: " << io::format_poly(p, *chain) << "\n";
  res.text = text.str();
  return res;
}

Result do_basis_count(const Options& o) {
  const auto chain = load_chain(o.source);
  const auto rules = rewrite::derive_rules(*chain);
  const auto counts = rewrite::count_reduced_words(rules, o.max_len);
  Result res;
  Json by_length = Json::array();
  Json cumulative = Json::array();
  BigInt total = 0;
  std::ostringstream text;
  text << "length  count  cumulative\n";
  for (std::size_t len = 0; len < counts.size(); ++len) {
    total += counts[len];
    by_length.push_back(big_json(counts[len]));
    cumulative.push_back(big_json(total));
    text << std::setw(6) << len << "  " << counts[len] << "  " << total << "\n";
  }
  res.json = Json{{"maxLen", o.max_len}, {"counts", std::move(by_length)}, {"cumulative", std::move(cumulative)}};
  if (o.with_oracle) {
    const auto dim = rewrite::oracle_dimension(*chain, o.max_len);
    const bool match = BigInt(dim) == total;
    res.json["oracle"] = dim;
    res.json["match"] = match;
    text << "oracle: " << dim << (match ? " (match)" : " (MISMATCH)") << "\n";
    if (!match) res.code = kCheckFailed;
  }
  res.text = text.str();
  return res;
}

Result do_oracle(const Options& o) {
  const auto chain = load_chain(o.source);
  const auto dim = rewrite::oracle_dimension(*chain, o.max_len);
  Result res;
  res.json = Json{{"maxLen", o.max_len}, {"dimension", dim}};
  res.text = "dimension up to length " + std::to_string(o.max_len) + ": " + std::to_string(dim) + "\n";
  return res;
}

Result do_hopf(const Options& o) {
  const auto chain = load_chain(o.source);
  const auto rules = rewrite::derive_rules(*chain);
  const auto p = io::parse_expr(o.expr, *chain);
  const auto nf = rewrite::normal_form(rules, p);
  Result res;
  std::ostringstream text;
  Json checks = Json::object();
  const NCPoly unit_image = NCPoly::constant(hopf::counit(nf));
  if (o.op == "delta") {
    const auto delta = hopf::comultiply(rules, p);
    res.json = Json{{"op", "delta"}, {"result", io::tensor_json(delta, *chain)}};
    text << "delta = " << io::format_tensor(delta, *chain) << "\n";
    if (o.check) {
      checks["coassociative"] =
          hopf::comultiply_left_leg(rules, delta) == hopf::comultiply_right_leg(rules, delta);
    }
  } else if (o.op == "counit") {
    const auto value = hopf::counit(nf);
    res.json = Json{{"op", "counit"}, {"result", value.to_string()}};
    text << "counit = " << value.to_string() << "\n";
    if (o.check) {
      const auto delta = hopf::comultiply(rules, p);
      checks["counitLeft"] = hopf::counit_left_leg(delta) == nf;
      checks["counitRight"] = hopf::counit_right_leg(delta) == nf;
    }
  } else if (o.op == "antipode") {
    const auto s = hopf::antipode(rules, p);
    res.json = Json{{"op", "antipode"}, {"result", io::poly_json(s, *chain)}};
    text << "S = " << io::format_poly(s, *chain) << "\n";
    if (o.check) {
      checks["convolutionLeft"] = hopf::convolve_antipode_left(rules, p) == unit_image;
      checks["convolutionRight"] = hopf::convolve_antipode_right(rules, p) == unit_image;
    }
  } else if (o.op == "convolution") {
    const auto left = hopf::convolve_antipode_left(rules, p);
    const auto right = hopf::convolve_antipode_right(rules, p);
    res.json = Json{{"op", "convolution"},
                    {"left", io::poly_json(left, *chain)},
                    {"right", io::poly_json(right, *chain)},
                    {"counitTimesOne", io::poly_json(unit_image, *chain)}};
    text << "m(S (x) id)delta = " << io::format_poly(left, *chain) << "\nm(id (x) S)delta = "
         << io::format_poly(right, *chain) << "\nepsilon 1 = " << io::format_poly(unit_image, *chain) << "\n";
    if (o.check) {
      checks["convolutionLeft"] = left == unit_image;
      checks["convolutionRight"] = right == unit_image;
    }
  } else {
    throw Error(ErrorCode::BadParams, "unknown --op '" + o.op + "'");
  }
  if (o.check) {
    bool all = true;
    for (const auto& [name, ok] : checks.items()) {
      all = all && ok.get<bool>();
      text << name << ": " << (ok.get<bool>() ? "ok" : "FAILED") << "\n";
    }
    res.json["checks"] = std::move(checks);
    if (!all) res.code = kCheckFailed;
  }
  res.text = text.str();
  return res;
}

Result do_rank(const Options& o) {
  const auto chain = load_chain(o.source);
  const auto rules = rewrite::derive_rules(*chain);
  const auto tuple = hopf::rank(rules, io::parse_expr(o.expr, *chain));
  Result res;
  res.json = Json{{"rank", tuple}};
  std::string text = "rank = (";
  for (std::size_t k = 0; k < tuple.size(); ++k) text += (k ? "," : "") + std::to_string(tuple[k]);
  res.text = text + ")\n";
  return res;
}

Result do_span_dim(const Options& o) {
  const auto chain = load_chain(o.source);
  const auto rules = rewrite::derive_rules(*chain);
  const auto dim = hopf::right_span_dim(rules, io::parse_expr(o.expr, *chain));
  Result res;
  res.json = Json{{"rightSpanDim", dim}};
  res.text = "right span dimension = " + std::to_string(dim) + "\n";
  return res;
}

Result do_coradical(const Options& o) {
  const auto chain = load_chain(o.source);
  const auto split = hopf::asymptotic_coradical(*chain);
  Result res;
  res.json = io::coradical_json(split, *chain);
  std::ostringstream text;
  for (const auto& level : split.levels) {
    text << "r = " << level.r << "\n  coradical: " << letters_text(level.diagonal, *chain)
         << "\n  complement: " << letters_text(level.off_diagonal, *chain) << "\n";
  }
  res.text = text.str();
  return res;
}

comodule::ComoduleStructure selected_comodule(const ValidatedChain& chain, const Options& o) {
  auto s = comodule::natural_comodule(chain, o.level, o.component);
  if (o.dual) s = comodule::dual_comodule(chain, s);
  return s;
}

Result do_comodule(const Options& o) {
  const auto chain = load_chain(o.source);
  const auto s = selected_comodule(*chain, o);
  Result res;
  res.json = io::comodule_json(s, *chain);
  std::ostringstream text;
  text << (o.dual ? "dual comodule" : "comodule") << " at level " << s.level << ", component " << s.component
       << "\n";
  for (std::size_t a = 0; a < s.basis.size(); ++a) {
    for (std::size_t b = 0; b < s.basis.size(); ++b) {
      text << std::setw(14) << (s.coaction[a][b] ? io::format_letter(*s.coaction[a][b], *chain) : ".");
    }
    text << "\n";
  }
  if (o.sub) {
    const auto sub = parse_block_set(*o.sub);
    std::optional<comodule::BlockSet> quotient;
    if (o.quotient) quotient = parse_block_set(*o.quotient);
    const auto letters = comodule::coefficient_coalgebra(*chain, s, sub, quotient);
    Json coalgebra = Json::array();
    for (const auto& l : letters) coalgebra.push_back(io::letter_json(l, *chain));
    res.json["coefficientCoalgebra"] = std::move(coalgebra);
    res.json["coefficientDim"] = letters.size();
    text << "coefficient coalgebra (" << letters.size() << "): " << letters_text(letters, *chain) << "\n";
  } else if (o.quotient) {
    throw Error(ErrorCode::BadParams, "--quotient requires --sub");
  }
  res.text = text.str();
  return res;
}

Result do_lattice(const Options& o) {
  const auto chain = load_chain(o.source);
  const auto natural = comodule::natural_comodule(*chain, o.level, o.component);
  const auto s = o.dual ? comodule::dual_comodule(*chain, natural) : natural;
  const auto lattice = comodule::submodule_lattice(*chain, s);
  const auto expected = comodule::expected_lattice(*chain, s.level, s.component);
  Result res;
  bool ok = lattice == expected;
  res.json = Json{{"level", s.level},
                  {"component", s.component},
                  {"lattice", io::lattice_json(lattice)},
                  {"expected", io::lattice_json(expected)},
                  {"equal", lattice == expected}};
  std::ostringstream text;
  text << "level " << s.level << ", component " << s.component << (o.dual ? " (dual)" : "") << "\n  lattice:  "
       << lattice_text(lattice) << "\n  expected: " << lattice_text(expected) << "\n";
  if (o.dual) {
    const auto image = comodule::annihilator_image(*chain, comodule::submodule_lattice(*chain, natural));
    res.json["annihilators"] = io::lattice_json(image);
    res.json["annihilatorsContained"] = lattice_within(image, lattice);
    ok = ok && lattice_within(image, lattice);
    text << "  annihilators: " << lattice_text(image) << "\n";
  }
  text << (ok ? "match\n" : "MISMATCH\n");
  res.text = text.str();
  if (!ok) res.code = kCheckFailed;
  return res;
}

Result do_report(const Options& o) {
  const auto chain = load_chain(o.source);
  Result res;
  bool ok = true;
  Json levels = Json::array();
  std::ostringstream text;
  text << "   r  comp  lattice  dual  annihilators\n";
  for (int r = chain->lo(); r <= chain->hi(); ++r) {
    for (std::size_t c = 0; c < chain->component_count(); ++c) {
      const auto natural = comodule::natural_comodule(*chain, r, c);
      const auto lattice = comodule::submodule_lattice(*chain, natural);
      const bool lattice_ok = lattice == comodule::expected_lattice(*chain, r, c);
      Json entry{{"r", r}, {"component", c}, {"lattice", io::lattice_json(lattice)}, {"latticeOK", lattice_ok}};
      ok = ok && lattice_ok;
      std::string dual_cell = "-", ann_cell = "-";
      if (r < chain->hi()) {
        const auto dual = comodule::dual_comodule(*chain, natural);
        const bool dual_ok = dual == comodule::natural_comodule(*chain, r + 1, c);
        const bool ann_ok = lattice_within(comodule::annihilator_image(*chain, lattice),
                                           comodule::submodule_lattice(*chain, dual));
        entry["dualOK"] = dual_ok;
        entry["annihilatorsOK"] = ann_ok;
        ok = ok && dual_ok && ann_ok;
        dual_cell = dual_ok ? "ok" : "FAIL";
        ann_cell = ann_ok ? "ok" : "FAIL";
      } else {
        entry["dualOK"] = nullptr;
        entry["annihilatorsOK"] = nullptr;
      }
      text << std::setw(4) << r << std::setw(6) << c << std::setw(9) << (lattice_ok ? "ok" : "FAIL") << std::setw(6)
           << dual_cell << std::setw(14) << ann_cell << "\n";
      levels.push_back(std::move(entry));
    }
  }
  const auto growth = comodule::growth_report(*chain);
  text << "\n   r  minSimpleDim  supOK\n";
  for (const auto& row : growth.rows) {
    text << std::setw(4) << row.r << std::setw(14) << row.min_simple_dim << std::setw(7) << (row.sup_ok ? "yes" : "no")
         << "\n";
  }
  text << "verdict: " << comodule::verdict_name(growth.verdict) << "\n" << growth.note << "\n"
       << (ok ? "all checks passed\n" : "CHECKS FAILED\n");
  res.json = Json{{"ok", ok},
                  {"levels", std::move(levels)},
                  {"growth", io::growth_json(growth)},
                  {"verdict", std::string(comodule::verdict_name(growth.verdict))},
                  {"trendStart", growth.trend_start},
                  {"note", growth.note}};
  res.text = text.str();
  if (!ok) res.code = kCheckFailed;
  return res;
}

void error_json(std::ostream& err, const std::string& code, const std::string& message) {
  err << io::dump(Json{{"error", code}, {"message", message}});
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free Hopf algebras on triangular skew coalgebra chains", "skewhopf"};
  app.require_subcommand(1);
  Options o;

  auto* validate_cmd = app.add_subcommand("validate", "check a chain spec and report its supremum partition");
  add_chain_options(*validate_cmd, o);

  auto* preset_cmd = app.add_subcommand("preset", "print a named chain spec as JSON");
  preset_cmd->add_option("name", o.preset_name, "preset name")->required();
  preset_cmd->add_option("--n", o.source.n, "preset parameter n");
  preset_cmd->add_option("--k", o.source.k, "preset parameter k");
  preset_cmd->add_option("--lo", o.source.lo, "window low end");
  preset_cmd->add_option("--hi", o.source.hi, "window high end");
  preset_cmd->add_flag("--pretty", o.pretty, "human-readable output");

  auto* rules_cmd = app.add_subcommand("rules", "derive the rewriting system");
  add_chain_options(*rules_cmd, o);

  auto* normalize_cmd = app.add_subcommand("normalize", "normal form of an expression");
  add_chain_options(*normalize_cmd, o);
  normalize_cmd->add_option("--expr", o.expr, "expression")->required();

  auto* confluence_cmd = app.add_subcommand("confluence", "resolve all ambiguities of the derived rules");
  add_chain_options(*confluence_cmd, o);
  confluence_cmd->add_flag("--assert-confluent", o.assert_confluent, "exit 3 unless confluent");
  confluence_cmd->add_option("--parallel", o.parallel, "worker threads")->check(CLI::Range(1u, 256u));

  auto* complete_cmd = app.add_subcommand("complete", "bounded Knuth-Bendix completion");
  add_chain_options(*complete_cmd, o);
  complete_cmd->add_option("--max-degree", o.max_degree, "largest rule length considered");
  complete_cmd->add_option("--max-iters", o.max_iters, "iteration cap");

  auto* count_cmd = app.add_subcommand("basis-count", "count reduced words by length");
  add_chain_options(*count_cmd, o);
  count_cmd->add_option("--max-len", o.max_len, "longest word length");
  count_cmd->add_flag("--oracle", o.with_oracle, "compare with the linear-algebra oracle");

  auto* oracle_cmd = app.add_subcommand("oracle", "quotient dimension by exact elimination");
  add_chain_options(*oracle_cmd, o);
  oracle_cmd->add_option("--max-len", o.max_len, "longest word length");

  auto* hopf_cmd = app.add_subcommand("hopf", "coproduct, counit, antipode and convolution");
  add_chain_options(*hopf_cmd, o);
  hopf_cmd->add_option("--expr", o.expr, "expression")->required();
  hopf_cmd->add_option("--op", o.op, "delta | counit | antipode | convolution")
      ->check(CLI::IsMember({"delta", "counit", "antipode", "convolution"}));
  hopf_cmd->add_flag("--check", o.check, "verify the matching Hopf identities");

  auto* rank_cmd = app.add_subcommand("rank", "superscript tuple of the longest support word");
  add_chain_options(*rank_cmd, o);
  rank_cmd->add_option("--expr", o.expr, "expression")->required();

  auto* span_cmd = app.add_subcommand("span-dim", "dimension of the right coefficient span");
  add_chain_options(*span_cmd, o);
  span_cmd->add_option("--expr", o.expr, "expression")->required();

  auto* coradical_cmd = app.add_subcommand("coradical", "asymptotic coradical split per level");
  add_chain_options(*coradical_cmd, o);

  auto* comodule_cmd = app.add_subcommand("comodule", "natural comodule of a component");
  add_chain_options(*comodule_cmd, o);
  comodule_cmd->add_option("--level", o.level, "level")->required();
  comodule_cmd->add_option("--component", o.component, "component number");
  comodule_cmd->add_flag("--dual", o.dual, "use the dual comodule");
  comodule_cmd->add_option("--sub", o.sub, "comma-separated block ids of a subcomodule");
  comodule_cmd->add_option("--quotient", o.quotient, "block ids of the subcomodule to divide by");

  auto* lattice_cmd = app.add_subcommand("lattice", "subcomodule lattice against the block order");
  add_chain_options(*lattice_cmd, o);
  lattice_cmd->add_option("--level", o.level, "level")->required();
  lattice_cmd->add_option("--component", o.component, "component number");
  lattice_cmd->add_flag("--dual", o.dual, "use the dual comodule");

  auto* report_cmd = app.add_subcommand("report", "lattice, duality and growth checks at every level");
  add_chain_options(*report_cmd, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    error_json(err, "USAGE", e.what());
    return kInputError;
  }

  const auto* cmd = app.get_subcommands().front();
  const std::string verb = cmd->get_name();
  try {
    Result res;
    if (verb == "validate") res = do_validate(o);
    else if (verb == "preset") res = do_preset(o);
    else if (verb == "rules") res = do_rules(o);
    else if (verb == "normalize") res = do_normalize(o);
    else if (verb == "confluence") res = do_confluence(o);
    else if (verb == "complete") res = do_complete(o);
    else if (verb == "basis-count") res = do_basis_count(o);
    else if (verb == "oracle") res = do_oracle(o);
    else if (verb == "hopf") res = do_hopf(o);
    else if (verb == "rank") res = do_rank(o);
    else if (verb == "span-dim") res = do_span_dim(o);
    else if (verb == "coradical") res = do_coradical(o);
    else if (verb == "comodule") res = do_comodule(o);
    else if (verb == "lattice") res = do_lattice(o);
    else res = do_report(o);
    out << (o.pretty ? res.text : io::dump(res.json));
    return res.code;
  } catch (const Error& e) {
    error_json(err, std::string(error_code_name(e.code())), e.what());
    return is_input_error(e.code()) ? kInputError : kComputationError;
  } catch (const std::exception& e) {
    error_json(err, "INTERNAL", e.what());
    return kComputationError;
  }
}

}  // namespace skewhopf::cli

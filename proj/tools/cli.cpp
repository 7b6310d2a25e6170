#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>

#include "chartlab/census.hpp"
#include "chartlab/chart_ops.hpp"
#include "chartlab/errors.hpp"
#include "chartlab/genus.hpp"
#include "chartlab/notation.hpp"
#include "chartlab/symmetry.hpp"
#include "chartlab/words.hpp"

namespace chartlab::cli {

using json = nlohmann::ordered_json;

namespace {

struct Outcome {
  json result;
  std::string verification = "none";  // "passed", "failed" or "none"
};

json exact(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  if (v < 0 && v >= std::numeric_limits<std::int64_t>::min()) return v.convert_to<std::int64_t>();
  return to_string(v);
}

json group_json(const CyclicSubgroup& g) {
  return {{"modulus", g.modulus}, {"order", g.order}, {"generator", g.generator}};
}

json report_json(const GenusReport& r) {
  json j = {{"n", r.n},         {"vertices", r.vertices}, {"edges", r.edges},
            {"faces", r.faces}, {"genus_euler", r.genus_euler}};
  if (r.genus_rank) j["genus_rank"] = *r.genus_rank;
  if (r.genus_gf2) j["genus_gf2"] = *r.genus_gf2;
  return j;
}

json word_json(const SignedWord& w) {
  return {{"word", format_word(w)}, {"n", w.size()}, {"subset", w.subset()},
          {"full", is_full(w)},     {"odd", is_odd(w)}};
}

json semichart_json(const Semichart& s) {
  return {{"semichart", format_semichart(s)},
          {"n", s.size()},
          {"v", format_permutation(s.permutation())},
          {"subset", s.subset()}};
}

json census_json(const CensusResult& r) {
  json by_order = json::object();
  for (const auto& [order, count] : r.classes_by_aut_order) by_order[std::to_string(order)] = count;
  return {{"profile", r.profile.to_string()},
          {"n", r.profile.n()},
          {"kind", std::string(to_string(r.kind))},
          {"class", std::string(to_string(r.curve_class))},
          {"raw_count", r.raw_count},
          {"class_count", r.class_count},
          {"weighted_sum", to_string(r.weighted_sum)},
          {"predicted_weighted", to_string(r.predicted_weighted)},
          {"predicted_raw", exact(r.predicted_raw)},
          {"classes_by_aut_order", by_order},
          {"burnside_balanced", r.burnside_balanced()},
          {"verified", r.verified()}};
}

// Integers echo as numbers, everything else verbatim.
json echo_value(const std::string& text) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (!text.empty() && ec == std::errc{} && ptr == text.data() + text.size()) return value;
  return text;
}

std::string error_type(const Error& e) {
  if (dynamic_cast<const InvalidMap*>(&e)) return "InvalidMap";
  if (dynamic_cast<const NotAChart*>(&e)) return "NotAChart";
  if (dynamic_cast<const InvalidSemichart*>(&e)) return "InvalidSemichart";
  if (dynamic_cast<const NotStraight*>(&e)) return "NotStraight";
  if (dynamic_cast<const NotFullWord*>(&e)) return "NotFullWord";
  if (dynamic_cast<const NotOddWord*>(&e)) return "NotOddWord";
  if (dynamic_cast<const NotRealizable*>(&e)) return "NotRealizable";
  if (dynamic_cast<const SPresent*>(&e)) return "SPresent";
  if (dynamic_cast<const NotCoprime*>(&e)) return "NotCoprime";
  if (dynamic_cast<const UnknownOrbit*>(&e)) return "UnknownOrbit";
  if (dynamic_cast<const BoundExceeded*>(&e)) return "BoundExceeded";
  if (dynamic_cast<const SyntaxError*>(&e)) return "SyntaxError";
  if (dynamic_cast<const InternalInvariant*>(&e)) return "InternalInvariant";
  return "Error";
}

void print_human(const json& value, std::ostream& out, const std::string& indent = "") {
  for (const auto& [key, item] : value.items()) {
    if (item.is_object()) {
      out << indent << key << ":\n";
      print_human(item, out, indent + "  ");
    } else if (item.is_string()) {
      out << indent << key << ": " << item.get<std::string>() << "\n";
    } else {
      out << indent << key << ": " << item.dump() << "\n";
    }
  }
}

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

 private:
  std::string read_input(const std::string& text) {
    if (text != "-") return text;
    std::string all((std::istreambuf_iterator<char>(in_)), std::istreambuf_iterator<char>());
    while (!all.empty() && (all.back() == '\n' || all.back() == '\r')) all.pop_back();
    return all;
  }
  Chart chart(const std::string& text) { return validate_chart(parse_cycles(read_input(text), n_)); }
  Semichart semichart(const std::string& text) { return parse_semichart(read_input(text), n_); }
  SignedWord word(const std::string& text) { return parse_word(read_input(text)); }

  Outcome validate(const std::string& text);
  Outcome genus(const std::string& chart_text, const std::string& word_text);
  Outcome aut(const std::string& chart_text, const std::string& semi_text, const std::string& word_text);
  Outcome classify(const std::string& chart_text, const std::string& semi_text);
  Outcome realize(const std::string& text, bool coherent, bool unsigned_route);
  Outcome census_cmd();

  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  std::optional<int> n_;
  bool json_ = false;

  std::string profile_text_;
  std::string kind_text_ = "charts";
  std::string class_text_ = "all";
  bool verify_ = false;
  int threads_ = 1;
  std::optional<int> max_n_;
};

Outcome Runner::validate(const std::string& text) {
  const Chart c = chart(text);
  return {{{"valid", true},
           {"chart", format_cycles(c)},
           {"n", c.size()},
           {"profile", profile(c).to_string()},
           {"straight", is_straight(c)}}};
}

Outcome Runner::genus(const std::string& chart_text, const std::string& word_text) {
  if (!word_text.empty()) {
    const SignedWord w = word(word_text);
    if (!is_full(w)) throw NotFullWord();
    if (!is_odd(w)) throw NotOddWord();
    const Chart c = semichart_to_chart(realize_coherent(w));
    json result = report_json(genus_report(c));
    result["word"] = format_word(w);
    result["route"] = "word";
    return {result};
  }
  const Chart c = chart(chart_text);
  json result = report_json(genus_report(c));
  result["chart"] = format_cycles(c);
  result["route"] = "chart";
  return {result};
}

Outcome Runner::aut(const std::string& chart_text, const std::string& semi_text, const std::string& word_text) {
  if (!word_text.empty()) {
    const SignedWord w = word(word_text);
    const WordAutomorphismGroup g = aut_word(w);
    json result = group_json(g.image);
    json elements = json::array();
    for (const auto& e : g.elements) elements.push_back({{"shift", e.shift}, {"psi", e.psi}});
    result["elements"] = elements;
    result["word"] = format_word(w);
    return {result};
  }
  if (!semi_text.empty()) {
    const Semichart s = semichart(semi_text);
    json result = group_json(aut_semichart(s));
    result["semichart"] = format_semichart(s);
    return {result};
  }
  const Chart c = chart(chart_text);
  json result = group_json(aut_chart(c));
  result["chart"] = format_cycles(c);
  return {result};
}

Outcome Runner::classify(const std::string& chart_text, const std::string& semi_text) {
  auto semichart_flags = [](const Semichart& s) {
    return json{{"generic", is_generic(s)},
                {"alternating", is_alternating(s)},
                {"beaming", is_beaming(s)},
                {"coherent", is_coherent(s)},
                {"perfect", is_perfect(s)}};
  };
  if (!semi_text.empty()) {
    const Semichart s = semichart(semi_text);
    json result = {{"semichart", format_semichart(s)}};
    result.update(semichart_flags(s));
    return {result};
  }
  const Chart c = chart(chart_text);
  json result = {{"chart", format_cycles(c)},
                 {"straight", is_straight(c)},
                 {"generic", is_generic(c)},
                 {"alternating", is_alternating(c)},
                 {"beaming", is_beaming(c)}};
  if (is_straight(c)) {
    const Semichart s = chart_to_semichart(c);
    result["semichart"] = format_semichart(s);
    result["coherent"] = is_coherent(s);
    result["perfect"] = is_perfect(s);
  }
  return {result};
}

Outcome Runner::realize(const std::string& text, bool coherent, bool unsigned_route) {
  const SignedWord w = word(text);
  if (coherent) {
    const Semichart s = realize_coherent(w);
    json result = semichart_json(s);
    result["chart"] = format_cycles(semichart_to_chart(s));
    result["route"] = "coherent";
    return {result};
  }
  const Chart c = unsigned_route ? realize_unsigned(w) : realize_word(w);
  json result = {{"chart", format_cycles(c)},
                 {"n", c.size()},
                 {"word_of_chart", format_word(word_of_chart(c))},
                 {"route", unsigned_route ? "unsigned" : "general"}};
  return {result};
}

Outcome Runner::census_cmd() {
  const Profile p = Profile::parse(profile_text_);
  const CensusKind kind = parse_census_kind(kind_text_);
  const CurveClass cls = parse_curve_class(class_text_);
  CensusOptions options;
  options.threads = threads_;
  options.max_n = max_n_;
  const CensusResult r = class_census(p, kind, cls, options);
  Outcome outcome{census_json(r)};
  bool ok = r.verified();
  if (verify_ && cls == CurveClass::all) {
    const bool corollary = gcd_corollary_applies(p, kind);
    outcome.result["gcd_corollary_applies"] = corollary;
    if (corollary) {
      const bool trivial = r.classes_by_aut_order.size() == 1 && r.classes_by_aut_order.count(1) == 1;
      ok = ok && trivial && Rational(BigInt(r.class_count)) == r.predicted_weighted;
    }
  }
  outcome.verification = ok ? "passed" : "failed";
  return outcome;
}

int Runner::run(const std::vector<std::string>& args) {
  CLI::App app{"chartlab: charts, semicharts and signed words of curves on surfaces", "chartlab"};
  app.require_subcommand(1);
  app.add_flag("--json", json_, "Emit the JSON envelope");
  app.add_option("--n", n_, "Size of the signed index set when parsing charts and semicharts");
  app.set_version_flag("--version", kVersion);

  std::string chart_a;
  std::string chart_b;
  std::string word_text;
  std::string semi_text;
  bool coherent = false;
  bool unsigned_route = false;
  int p = 0;
  int q = 0;

  auto* validate_cmd = app.add_subcommand("validate", "Check the chart condition");
  validate_cmd->add_option("chart", chart_a, "Chart in cycle notation, or - for stdin")->required();
  auto* canon_cmd = app.add_subcommand("canon", "Canonical form under circular conjugation");
  canon_cmd->add_option("chart", chart_a)->required();
  auto* homeo_cmd = app.add_subcommand("homeo", "Decide whether two charts are homeomorphic");
  homeo_cmd->add_option("first", chart_a)->required();
  homeo_cmd->add_option("second", chart_b)->required();
  auto* genus_cmd = app.add_subcommand("genus", "Genus report of a chart or of an odd full word");
  genus_cmd->add_option("chart", chart_a);
  genus_cmd->add_option("--word", word_text, "Use the word route");
  auto* aut_cmd = app.add_subcommand("aut", "Automorphism group");
  aut_cmd->add_option("chart", chart_a);
  aut_cmd->add_option("--semichart", semi_text);
  aut_cmd->add_option("--word", word_text);
  auto* classify_cmd = app.add_subcommand("classify", "Curve class predicates");
  classify_cmd->add_option("chart", chart_a);
  classify_cmd->add_option("--semichart", semi_text);
  auto* word_cmd = app.add_subcommand("word", "Word of a chart");
  word_cmd->add_option("chart", chart_a)->required();
  auto* realize_cmd = app.add_subcommand("realize", "Realize a full word by a chart");
  realize_cmd->add_option("word", word_text)->required();
  auto* coherent_flag = realize_cmd->add_flag("--coherent", coherent, "Coherent semichart of an odd full word");
  realize_cmd->add_flag("--unsigned", unsigned_route, "Unsigned word realization")->excludes(coherent_flag);
  auto* christoffel_cmd = app.add_subcommand("christoffel", "Christoffel word of a coprime pair");
  christoffel_cmd->add_option("p", p)->required();
  christoffel_cmd->add_option("n", q)->required();
  auto* census_sub = app.add_subcommand("census", "Count charts or semicharts of a crossing profile");
  census_sub->add_option("--profile", profile_text_, "e.g. k1=1,k2=2")->required();
  census_sub->add_option("--kind", kind_text_)->check(CLI::IsMember({"charts", "semicharts"}));
  census_sub->add_option("--class", class_text_)
      ->check(CLI::IsMember({"all", "straight", "generic", "alternating", "beaming", "coherent", "perfect"}));
  census_sub->add_flag("--verify", verify_, "Also check the gcd corollaries");
  census_sub->add_option("--threads", threads_)->check(CLI::Range(1, 256));
  census_sub->add_option("--max-n", max_n_, "Override the size bound");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out_ << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out_ << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out_ << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err_ << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  json input = json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    const auto& results = opt->results();
    std::string key = opt->get_name();
    key.erase(0, key.find_first_not_of('-'));
    if (opt->get_expected_min() == 0) {
      input[key] = true;
      continue;
    }
    json values = json::array();
    for (const auto& r : results) values.push_back(echo_value(r));
    input[key] = values.size() == 1 ? values.front() : values;
  }
  if (n_) input["n"] = *n_;

  auto one_of = [&](std::initializer_list<const std::string*> values) {
    const auto given = std::ranges::count_if(values, [](const std::string* s) { return !s->empty(); });
    return given == 1;
  };

  Outcome outcome;
  try {
    if (command == "validate") {
      outcome = validate(chart_a);
    } else if (command == "canon") {
      const Chart c = chart(chart_a);
      outcome.result = {{"chart", format_cycles(c)}, {"canonical", format_cycles(canonical_form(c))}, {"n", c.size()}};
    } else if (command == "homeo") {
      const Chart a = chart(chart_a);
      const Chart b = chart(chart_b);
      outcome.result = {{"homeomorphic", homeomorphic(a, b)},
                        {"canonical_first", format_cycles(canonical_form(a))},
                        {"canonical_second", format_cycles(canonical_form(b))}};
    } else if (command == "genus") {
      if (!one_of({&chart_a, &word_text}) && !(chart_a.empty() && word_text.empty())) {
        err_ << "usage error: give either a chart or --word\n";
        return kUsageError;
      }
      outcome = genus(chart_a, word_text);
    } else if (command == "aut") {
      if (!one_of({&chart_a, &semi_text, &word_text}) && !(chart_a.empty() && semi_text.empty() && word_text.empty())) {
        err_ << "usage error: give exactly one of a chart, --semichart or --word\n";
        return kUsageError;
      }
      outcome = aut(chart_a, semi_text, word_text);
    } else if (command == "classify") {
      if (!chart_a.empty() && !semi_text.empty()) {
        err_ << "usage error: give either a chart or --semichart\n";
        return kUsageError;
      }
      outcome = classify(chart_a, semi_text);
    } else if (command == "word") {
      outcome.result = word_json(word_of_chart(chart(chart_a)));
    } else if (command == "realize") {
      outcome = realize(word_text, coherent, unsigned_route);
    } else if (command == "christoffel") {
      const SignedWord w = christoffel(p, q);
      outcome.result = word_json(w);
      outcome.result["p"] = p;
      outcome.result["n"] = q;
      if (is_odd(w)) outcome.result["genus"] = genus_word(w);
    } else if (command == "census") {
      outcome = census_cmd();
    }
  } catch (const Error& e) {
    json error = {{"type", error_type(e)}, {"message", e.what()}};
    if (const auto* witness = dynamic_cast<const NotAChart*>(&e)) error["witness"] = witness->witness();
    if (const auto* syntax = dynamic_cast<const SyntaxError*>(&e)) error["position"] = syntax->position();
    if (json_) {
      json envelope = {{"command", command}, {"input", input}, {"error", error}, {"version", kVersion}};
      out_ << envelope.dump(2) << "\n";
    }
    err_ << "error: " << e.what() << "\n";
    return kDomainError;
  }

  if (json_) {
    json envelope = {{"command", command},
                     {"input", input},
                     {"result", outcome.result},
                     {"version", kVersion},
                     {"verification", outcome.verification}};
    out_ << envelope.dump(2) << "\n";
  } else {
    print_human(outcome.result, out_);
    if (outcome.verification != "none") out_ << "verification: " << outcome.verification << "\n";
  }
  return outcome.verification == "failed" ? kVerificationFailed : kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Runner runner(in, out, err);
  return runner.run(args);
}

}  // namespace chartlab::cli

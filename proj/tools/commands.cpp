#include "commands.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "sturmian/sturmian.hpp"

namespace sturmian::cli {

using nlohmann::json;

namespace {

json params_json(const IetParams& p) {
  return {{"l0", format_quad(p.l0)},       {"l1", format_quad(p.l1)},
          {"rho", format_quad(p.rho)},     {"boundary", std::string(to_string(p.boundary))},
          {"gamma", format_quad(p.slope())}, {"delta", format_quad(p.intercept())}};
}

std::string params_text(const IetParams& p) {
  std::ostringstream out;
  out << "l0 = " << format_quad(p.l0) << "\nl1 = " << format_quad(p.l1) << "\nrho = " << format_quad(p.rho)
      << "\nboundary = " << to_string(p.boundary) << "\ngamma = " << format_quad(p.slope())
      << "\ndelta = " << format_quad(p.intercept());
  return out.str();
}

std::optional<char> parse_start(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s != "0" && s != "1") throw Error(ErrorKind::SyntaxError, "--start must be 0 or 1");
  return s[0];
}

json report_json(const DerivedWordReport& r) {
  json j{{"factor", r.factor},
         {"return_words", r.return_words},
         {"derived_prefix", r.derived_prefix},
         {"first_occurrence", r.first_occurrence},
         {"source_prefix_length", r.source_prefix_length}};
  j["matched_delta_power"] = r.matched_delta_power ? json(*r.matched_delta_power) : json(nullptr);
  return j;
}

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
  std::string name;
  std::vector<std::string> names;
  std::string word;
  std::size_t iterations = 1;
  std::size_t length = 0;
  std::string start;
  bool theta_form = false;
  std::string l0, l1, rho, boundary = "lower";
  std::string factor;
  std::size_t prefix_len = 0, derive_len = 0, max_factor_len = 0;
  std::string gamma, delta, theta;
};

}  // namespace

json CommandResult::to_json() const {
  return {{"status", ok ? "ok" : "error"}, {"payload", payload}, {"diagnostics", diagnostics}};
}

std::string CommandResult::render() const {
  if (json_output) return to_json().dump(2) + "\n";
  std::string out = text.empty() ? std::string() : text + "\n";
  for (const std::string& d : diagnostics) out += (ok ? "note: " : "error: ") + d + "\n";
  return out;
}

CommandResult dispatch(const std::vector<std::string>& args) {
  CommandResult result;
  Options o;
  CLI::App app{"Sturmian substitutions, derived words and closeability", "sturmctl"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Machine-readable JSON output");
  app.add_option("--seed", o.seed, "Seed for randomized helpers");
  std::function<void()> action;

  auto* normalize_cmd = app.add_subcommand("normalize", "Normalized name N(w)");
  normalize_cmd->add_option("NAME", o.name)->required();
  normalize_cmd->callback([&] {
    action = [&] {
      const MorphismWord w = MorphismWord::parse(o.name);
      const MorphismWord n = normalize(w);
      result.payload = {{"name", w.to_string()}, {"normalized", n.to_string()}};
      result.text = n.to_string();
    };
  });

  auto* delta_cmd = app.add_subcommand("delta", "Iterate the Delta operator");
  delta_cmd->add_option("NAME", o.name)->required();
  delta_cmd->add_option("--iterations", o.iterations, "Number of Delta steps")->capture_default_str();
  delta_cmd->callback([&] {
    action = [&] {
      MorphismWord w = normalize(MorphismWord::parse(o.name));
      json steps = json::array({w.to_string()});
      for (std::size_t i = 0; i < o.iterations; ++i) {
        w = delta(w);
        steps.push_back(w.to_string());
      }
      result.payload = {{"result", w.to_string()}, {"steps", steps}};
      result.text = w.to_string();
    };
  });

  auto* orbit_cmd = app.add_subcommand("delta-orbit", "Eventually periodic Delta orbit");
  orbit_cmd->add_option("NAME", o.name)->required();
  orbit_cmd->callback([&] {
    action = [&] {
      const DeltaOrbit orbit = delta_orbit(MorphismWord::parse(o.name));
      json words = json::array();
      std::ostringstream table;
      for (std::size_t i = 0; i < orbit.words.size(); ++i) {
        words.push_back(orbit.words[i].to_string());
        table << "Delta^" << i << "(w) = " << orbit.words[i].to_string() << "\n";
      }
      const std::size_t closing = orbit.preperiod + orbit.period;
      table << "Delta^" << closing << "(w) = " << orbit.words[orbit.preperiod].to_string() << " = Delta^"
            << orbit.preperiod << "(w)\npreperiod " << orbit.preperiod << ", period " << orbit.period;
      result.payload = {{"preperiod", orbit.preperiod}, {"period", orbit.period}, {"words", words}};
      result.text = table.str();
    };
  });

  auto* compose_cmd = app.add_subcommand("compose", "Concatenate names and realize the product");
  compose_cmd->add_option("NAMES", o.names)->required();
  compose_cmd->callback([&] {
    action = [&] {
      MorphismWord w;
      for (const std::string& n : o.names) w = w + MorphismWord::parse(n);
      const SturmianMorphism m = realize(w);
      result.payload = {{"name", w.to_string()},
                        {"normalized", normalize(w).to_string()},
                        {"image0", m.image0},
                        {"image1", m.image1}};
      result.text = w.to_string() + ": 0 -> " + m.image0 + ", 1 -> " + m.image1;
    };
  });

  auto* apply_cmd = app.add_subcommand("apply", "Apply phi_NAME to a binary word");
  apply_cmd->add_option("NAME", o.name)->required();
  apply_cmd->add_option("WORD", o.word)->required();
  apply_cmd->callback([&] {
    action = [&] {
      const std::string image = apply_morphism(realize(MorphismWord::parse(o.name)), o.word);
      result.payload = {{"image", image}};
      result.text = image;
    };
  });

  auto* fixed_cmd = app.add_subcommand("fixed-point", "Prefix of a fixed point");
  fixed_cmd->add_option("NAME", o.name)->required();
  fixed_cmd->add_option("--length", o.length)->required();
  fixed_cmd->add_option("--start", o.start, "First letter (0 or 1)");
  fixed_cmd->callback([&] {
    action = [&] {
      const std::string prefix = fixed_point_prefix(MorphismWord::parse(o.name), o.length, parse_start(o.start));
      result.payload = {{"prefix", prefix}};
      result.text = prefix;
    };
  });

  auto* params_cmd = app.add_subcommand("params", "Exact 2iet parameters of a fixed point");
  params_cmd->add_option("NAME", o.name)->required();
  params_cmd->add_option("--start", o.start, "First letter (0 or 1)");
  params_cmd->add_flag("--theta-form", o.theta_form, "Scale so that the longer interval has length 1");
  params_cmd->callback([&] {
    action = [&] {
      IetParams p = fixed_point_params(MorphismWord::parse(o.name), parse_start(o.start));
      if (o.theta_form) p = p.theta_form();
      result.payload = params_json(p);
      if (o.theta_form) result.payload["theta"] = format_quad(p.theta());
      result.text = params_text(p);
    };
  });

  auto* generate_cmd = app.add_subcommand("generate", "Coding of a two interval exchange");
  generate_cmd->add_option("--l0", o.l0)->required();
  generate_cmd->add_option("--l1", o.l1)->required();
  generate_cmd->add_option("--rho", o.rho)->required();
  generate_cmd->add_option("--boundary", o.boundary)->check(CLI::IsMember({"lower", "upper"}))->capture_default_str();
  generate_cmd->add_option("--length", o.length)->required();
  generate_cmd->callback([&] {
    action = [&] {
      const IetParams p{parse_quad(o.l0), parse_quad(o.l1), parse_quad(o.rho), parse_boundary(o.boundary)};
      const std::string word = generate(p, o.length);
      result.payload = {{"word", word}, {"params", params_json(p)}};
      result.text = word;
    };
  });

  auto* derive_cmd = app.add_subcommand("derive", "Derived word of a factor in a fixed point");
  derive_cmd->add_option("NAME", o.name)->required();
  derive_cmd->add_option("--factor", o.factor)->required();
  derive_cmd->add_option("--length", o.length)->required();
  derive_cmd->add_option("--start", o.start, "First letter (0 or 1)");
  derive_cmd->callback([&] {
    action = [&] {
      const MorphismWord w = MorphismWord::parse(o.name);
      const WordSource source = WordSource::fixed_point(w, parse_start(o.start));
      DerivedWordReport r = derived_word(source, o.factor, o.length);
      // Annotate with the Delta power when the factor is a prefix of the source.
      const std::string u = source.prefix(r.factor.size());
      if (u == r.factor && (w.contains(Gen::b) || w.contains(Gen::beta))) {
        const DeltaOrbit orbit = delta_orbit(w);
        for (std::size_t j = 0; j < orbit.words.size(); ++j) {
          if (equal_up_to_letter_permutation(r.derived_prefix, fixed_point_prefix(orbit.words[j], o.length))) {
            r.matched_delta_power = j;
            break;
          }
        }
      }
      result.payload = report_json(r);
      std::ostringstream text;
      text << "return words:";
      for (const std::string& rw : r.return_words) text << ' ' << rw;
      text << "\nderived prefix: " << r.derived_prefix;
      if (r.matched_delta_power) text << "\nfixed point of Delta^" << *r.matched_delta_power;
      result.text = text.str();
    };
  });

  auto* match_cmd = app.add_subcommand("match-delta", "Match derived words of prefixes to Delta powers");
  match_cmd->add_option("NAME", o.name)->required();
  match_cmd->add_option("--prefix-len", o.prefix_len)->required();
  match_cmd->add_option("--derive-len", o.derive_len)->required();
  match_cmd->callback([&] {
    action = [&] {
      const auto matches = match_derived_to_delta(MorphismWord::parse(o.name), o.prefix_len, o.derive_len);
      json list = json::array();
      std::ostringstream text;
      for (const DeltaMatch& m : matches) {
        list.push_back({{"prefix", m.prefix}, {"power", m.power}});
        text << (m.prefix.empty() ? "(empty)" : m.prefix) << " -> Delta^" << m.power << "\n";
      }
      result.payload = {{"matches", list}};
      result.text = text.str();
      if (!result.text.empty()) result.text.pop_back();
    };
  });

  auto* classify_cmd = app.add_subcommand("classify", "Closeable under derivation?");
  classify_cmd->add_option("NAME", o.name)->required();
  classify_cmd->callback([&] {
    action = [&] {
      const MorphismWord w = MorphismWord::parse(o.name);
      const Closeability c = is_closeable(w);
      const InterceptClassification ic = classify_by_intercept(w);
      json params = json::array();
      for (const IetParams& p : ic.params) params.push_back(params_json(p));
      result.payload = {{"closeable", c.closeable},
                        {"reason", c.reason},
                        {"delta_class", std::string(to_string(ic.delta_class))},
                        {"params", params}};
      if (c.closeable != ic.closeable) {
        result.diagnostics.push_back("intercept classification disagrees with the letter criterion");
      }
      result.text = std::string("closeable=") + (c.closeable ? "true" : "false") + "\nreason: " + c.reason +
                    "\ndelta class: " + std::string(to_string(ic.delta_class));
    };
  });

  auto* closed_cmd = app.add_subcommand("closed-set", "Witness set closed under derivation");
  closed_cmd->add_option("NAME", o.name)->required();
  closed_cmd->callback([&] {
    action = [&] {
      const ClosedSet set = closed_set(MorphismWord::parse(o.name));
      json members = json::array();
      std::ostringstream text;
      for (const auto& m : set.members) {
        members.push_back({{"name", m.name.to_string()}, {"provenance", m.provenance}});
        text << m.name.to_string() << "  [" << m.provenance << "]\n";
      }
      result.payload = {{"members", members}};
      result.text = text.str();
      if (!result.text.empty()) result.text.pop_back();
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "Empirically verify closure of the witness set");
  verify_cmd->add_option("NAME", o.name)->required();
  verify_cmd->add_option("--max-factor-len", o.max_factor_len)->required();
  verify_cmd->add_option("--derive-len", o.derive_len)->required();
  verify_cmd->callback([&] {
    action = [&] {
      const ClosedSet set = closed_set(MorphismWord::parse(o.name));
      const VerificationReport report = verify_closed_empirically(set, o.max_factor_len, o.derive_len);
      json checks = json::array();
      for (const FactorCheck& c : report.checks) {
        checks.push_back({{"member", c.member},
                          {"start", std::string(1, c.start)},
                          {"factor", c.factor},
                          {"category", c.category},
                          {"reduced", c.reduced},
                          {"return_words", c.return_words},
                          {"witness", c.witness ? json(*c.witness) : json(nullptr)},
                          {"witness_start", std::string(1, c.witness_start)},
                          {"pass", c.pass}});
      }
      result.payload = {{"checks", checks}, {"total", report.checks.size()}, {"failures", report.failures}};
      result.text = std::to_string(report.checks.size()) + " factor checks, " + std::to_string(report.failures) +
                    " failures";
      if (!report.passed()) {
        result.ok = false;
        result.exit_code = 1;
        result.diagnostics.push_back("closure verification failed");
      }
    };
  });

  auto* yasutomi_cmd = app.add_subcommand("yasutomi", "Is the coding fixed by a primitive morphism?");
  auto* gamma_opt = yasutomi_cmd->add_option("--gamma", o.gamma);
  auto* delta_opt = yasutomi_cmd->add_option("--delta", o.delta);
  auto* theta_opt = yasutomi_cmd->add_option("--theta", o.theta);
  auto* rho_opt = yasutomi_cmd->add_option("--rho", o.rho);
  gamma_opt->needs(delta_opt)->excludes(theta_opt)->excludes(rho_opt);
  delta_opt->needs(gamma_opt);
  theta_opt->needs(rho_opt);
  rho_opt->needs(theta_opt);
  yasutomi_cmd->callback([&] {
    if (o.gamma.empty() && o.theta.empty()) throw CLI::ValidationError("yasutomi", "give --gamma/--delta or --theta/--rho");
    action = [&] {
      bool fixed = false;
      if (!o.gamma.empty()) {
        fixed = yasutomi_gamma(parse_quad(o.gamma), parse_quad(o.delta));
        result.payload = {{"form", "gamma"}, {"gamma", o.gamma}, {"delta", o.delta}};
      } else {
        fixed = yasutomi_theta(parse_quad(o.theta), parse_quad(o.rho));
        result.payload = {{"form", "theta"}, {"theta", o.theta}, {"rho", o.rho}};
      }
      result.payload["fixed_by_primitive_morphism"] = fixed;
      result.text = fixed ? "true" : "false";
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.text = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.json_output = o.json;
    result.ok = false;
    result.exit_code = 2;
    result.diagnostics.push_back(std::string("UsageError: ") + e.what());
    const auto subcommands = app.get_subcommands();
    result.text = subcommands.empty() ? app.help() : subcommands.front()->help();
    return result;
  }
  result.json_output = o.json;
  if (o.seed != 0) result.diagnostics.push_back("seed " + std::to_string(o.seed));
  try {
    action();
  } catch (const Error& e) {
    result.ok = false;
    result.exit_code = 1;
    result.text.clear();
    result.diagnostics.push_back(e.what());
  }
  return result;
}

}  // namespace sturmian::cli

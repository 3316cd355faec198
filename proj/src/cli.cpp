#include "momentcf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "momentcf/askey_wilson.hpp"
#include "momentcf/cdh.hpp"
#include "momentcf/checks.hpp"
#include "momentcf/dumont_foata.hpp"
#include "momentcf/hahn.hpp"
#include "momentcf/sequences.hpp"
#include "momentcf/wilson.hpp"

namespace momentcf::cli {

namespace {

using Json = nlohmann::ordered_json;

const std::vector<std::string> kDfKeys{"alpha", "alpha_bar", "beta", "beta_bar", "gamma", "gamma_bar"};

bool df_symbolic(const std::string& family, const std::string& params) {
  return family == "dumont_foata" && (params.empty() || params == "symbolic");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

/// Moments mu_0..mu_n of a family at rational parameters.
std::vector<Rational> rational_sequence(const std::string& family, const std::string& text, std::size_t n) {
  const auto p = parse_params(family, text);
  const auto at = [&](const char* key) { return p.at(key); };
  if (family == "genocchi") {
    std::vector<Rational> out;
    for (std::size_t k = 0; k <= n; ++k) out.push_back(genocchi(static_cast<long>(2 * k + 2)));
    return out;
  }
  if (family == "median_genocchi") {
    std::vector<Rational> out;
    for (std::size_t k = 0; k <= n; ++k) out.push_back(median_genocchi(static_cast<long>(k)));
    return out;
  }
  if (family == "bernoulli") return bernoulli_numbers(static_cast<long>(n));
  if (family == "wilson") return wilson_moments({at("a"), at("b"), at("c"), at("d")}, n);
  if (family == "cdh") return cdh_moments(CdhParams<Rational>{at("a"), at("b"), at("c")}, n);
  if (family == "hahn") return hahn_moments({at("A"), at("B"), at("C")}, n);
  if (family == "aw") return aw_moments_series({at("q"), at("a"), at("b"), at("c"), at("d")}, n);
  if (family == "dumont_foata") {
    DumontFoataParams<Rational> d{at("alpha"), at("alpha_bar"), at("beta"), at("beta_bar"), at("gamma"),
                                  at("gamma_bar")};
    return dumont_foata(d, n + 1);
  }
  throw Error(Errc::kInvalidArgument, "unknown family '" + family + "'");
}

std::vector<MPoly> symbolic_df_sequence(std::size_t n) {
  return dumont_foata(DumontFoataParams<MPoly>::symbolic(), n + 1);
}

template <class R>
std::vector<std::string> strings(const std::vector<R>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(describe(v));
  return out;
}

template <class R>
std::vector<R> divided_by_factorials(std::vector<R> values) {
  for (std::size_t k = 0; k < values.size(); ++k) values[k] = values[k] * factorial(static_cast<long>(k)).inverse();
  return values;
}

std::string join(const std::vector<std::string>& values, const std::string& sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? sep : "") + values[i];
  return out;
}

std::string verification_listing() {
  std::ostringstream os;
  os << "Verification ids (verify --id ID):\n";
  for (const auto& info : check_registry()) os << "  " << info.id << "\n      " << info.description << "\n";
  os << "Families (--family): genocchi, median_genocchi, bernoulli, wilson{a,b,c,d}, cdh{a,b,c},\n"
        "  hahn{A,B,C}, aw{q,a,b,c,d}, dumont_foata{alpha,alpha_bar,beta,beta_bar,gamma,gamma_bar | symbolic}\n";
  return os.str();
}

struct Options {
  std::string family;
  std::string params;
  std::optional<std::size_t> n, depth, order;
  std::string format = "text";
  std::string kind = "j";
  std::string id;
  bool all = false;
  std::uint64_t seed = kDefaultSeed;
};

Json echo(const std::string& verb, const Options& o) {
  Json cmd;
  cmd["verb"] = verb;
  if (!o.family.empty()) cmd["family"] = o.family;
  if (!o.params.empty()) cmd["params"] = o.params;
  if (o.n) cmd["n"] = *o.n;
  if (o.depth) cmd["depth"] = *o.depth;
  if (o.order) cmd["order"] = *o.order;
  if (verb == "cf") cmd["kind"] = o.kind;
  if (!o.id.empty()) cmd["id"] = o.id;
  if (o.all) cmd["all"] = true;
  if (verb == "verify") cmd["seed"] = o.seed;
  return cmd;
}

void print_values(std::ostream& out, const std::string& verb, const Options& o, const std::vector<std::string>& values) {
  if (o.format == "json") {
    Json doc;
    doc["command"] = echo(verb, o);
    doc["values"] = values;
    out << doc.dump(2) << "\n";
  } else {
    out << join(values) << "\n";
  }
}

int run_verify(const Options& o, std::ostream& out, std::ostream& err) {
  CheckOptions co;
  co.seed = o.seed;
  co.n = o.n;
  co.depth = o.depth;
  co.order = o.order;
  std::vector<std::string> ids;
  if (o.all) {
    for (const auto& info : check_registry()) ids.push_back(info.id);
  } else {
    if (!find_check(o.id)) {
      err << "error: unknown verification id '" << o.id << "'\n" << verification_listing();
      return 2;
    }
    ids.push_back(o.id);
  }
  err << "# seed " << o.seed << "\n";
  Json results = Json::array();
  bool all_passed = true;
  for (const auto& id : ids) {
    const CheckReport report = run_check(id, co);
    all_passed = all_passed && report.passed;
    err << "# " << report.summary() << "\n";
    for (const auto& note : report.notes) err << "#   note: " << note << "\n";
    if (o.format == "json") {
      Json entry;
      entry["id"] = report.id;
      entry["passed"] = report.passed;
      entry["verdict"] = report.verdict();
      entry["cases"] = report.cases;
      if (report.seed) entry["seed"] = *report.seed;
      entry["notes"] = report.notes;
      if (report.counterexample) entry["counterexample"] = *report.counterexample;
      results.push_back(entry);
    } else if (o.all) {
      out << report.id << ": " << report.verdict() << "\n";
    } else {
      out << report.verdict() << "\n";
    }
  }
  if (o.format == "json") {
    Json doc;
    doc["command"] = echo("verify", o);
    doc["results"] = results;
    out << doc.dump(2) << "\n";
  }
  return all_passed ? 0 : 1;
}

}  // namespace

const std::map<std::string, std::vector<std::string>>& family_schemas() {
  static const std::map<std::string, std::vector<std::string>> schemas = {
      {"genocchi", {}},
      {"median_genocchi", {}},
      {"bernoulli", {}},
      {"wilson", {"a", "b", "c", "d"}},
      {"cdh", {"a", "b", "c"}},
      {"hahn", {"A", "B", "C"}},
      {"aw", {"q", "a", "b", "c", "d"}},
      {"dumont_foata", kDfKeys},
  };
  return schemas;
}

std::map<std::string, Rational> parse_params(const std::string& family, const std::string& text) {
  const auto schema = family_schemas().find(family);
  if (schema == family_schemas().end()) throw Error(Errc::kInvalidArgument, "unknown family '" + family + "'");
  std::map<std::string, Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(Errc::kParse, "parameter '" + item + "' is not of the form key=value");
    const std::string key = trim(item.substr(0, eq));
    const auto& keys = schema->second;
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw Error(Errc::kInvalidArgument, "family " + family + " has no parameter '" + key + "'");
    }
    if (out.count(key)) throw Error(Errc::kInvalidArgument, "parameter '" + key + "' given twice");
    out.emplace(key, Rational::parse(trim(item.substr(eq + 1))));
  }
  for (const auto& key : schema->second) {
    if (!out.count(key)) throw Error(Errc::kInvalidArgument, "family " + family + " needs parameter '" + key + "'");
  }
  return out;
}

std::vector<std::string> sequence(const std::string& family, const std::string& params, std::size_t n) {
  if (df_symbolic(family, params)) return strings(symbolic_df_sequence(n));
  return strings(rational_sequence(family, params, n));
}

std::vector<std::string> egf(const std::string& family, const std::string& params, std::size_t order) {
  if (df_symbolic(family, params)) return strings(divided_by_factorials(symbolic_df_sequence(order)));
  return strings(divided_by_factorials(rational_sequence(family, params, order)));
}

CfCoefficients continued_fraction(const std::string& family, const std::string& params, std::size_t depth, char kind) {
  if (depth == 0) throw Error(Errc::kInvalidArgument, "depth must be positive");
  CfCoefficients out;
  out.kind = kind;
  if (df_symbolic(family, params)) {
    if (kind != 'J') throw Error(Errc::kInvalidArgument, "symbolic Dumont-Foata fractions are J-fractions only");
    const auto j = df_jfrac(DumontFoataParams<MPoly>::symbolic(), depth);
    out.gammas = strings(j.gammas);
    out.betas = strings(j.betas);
    return out;
  }
  if (kind == 'J') {
    const auto moments = rational_sequence(family, params, 2 * depth - 1);
    const auto j = series_to_jfrac(MomentFunctional<Rational>{moments, "x"});
    out.gammas = strings(j.gammas);
    out.betas = strings(j.betas);
    out.terminates = j.terminates;
  } else {
    const auto moments = rational_sequence(family, params, depth);
    const auto s = series_to_sfrac(MomentFunctional<Rational>{moments, "x"});
    out.alphas = strings(s.alphas);
    out.terminates = s.terminates;
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact moments, continued fractions and identity checks for classical orthogonal polynomials",
               "momentcf"};
  app.require_subcommand(1);
  app.footer(verification_listing());
  Options o;

  const auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "sequence family")->required()->check(CLI::IsMember(family_schemas()));
    sub->add_option("--params", o.params, "parameters k=v[,k=v...] with rationals p/q");
  };
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
  };

  auto* seq = app.add_subcommand("seq", "print sequence values 0..n");
  add_family(seq);
  seq->add_option("--n", o.n, "last index (default 10)");
  add_format(seq);

  auto* cf = app.add_subcommand("cf", "print S- or J-fraction coefficients");
  add_family(cf);
  cf->add_option("--depth", o.depth, "number of levels (default 8)");
  cf->add_option("--kind", o.kind, "s or j (default j)")->check(CLI::IsMember({"s", "j", "S", "J"}));
  add_format(cf);

  auto* eg = app.add_subcommand("egf", "print coefficients mu_k/k! for k = 0..order");
  add_family(eg);
  eg->add_option("--order", o.order, "truncation order (default 16)");
  add_format(eg);

  auto* verify = app.add_subcommand("verify", "run a named verification and print PASS or FAIL");
  auto* id_opt = verify->add_option("--id", o.id, "verification id");
  auto* all_opt = verify->add_flag("--all", o.all, "run every verification");
  id_opt->excludes(all_opt);
  verify->add_option("--n", o.n, "size parameter of the check");
  verify->add_option("--depth", o.depth, "continued-fraction depth of the check");
  verify->add_option("--order", o.order, "series order of the check");
  verify->add_option("--seed", o.seed, "seed for random parameter points");
  add_format(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*seq) {
      print_values(out, "seq", o, sequence(o.family, o.params, o.n.value_or(kDefaultN)));
    } else if (*eg) {
      print_values(out, "egf", o, egf(o.family, o.params, o.order.value_or(kDefaultOrder)));
    } else if (*cf) {
      const char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(o.kind[0])));
      const auto c = continued_fraction(o.family, o.params, o.depth.value_or(kDefaultDepth), kind);
      if (o.format == "json") {
        Json doc;
        doc["command"] = echo("cf", o);
        if (kind == 'S') {
          doc["alphas"] = c.alphas;
        } else {
          doc["gammas"] = c.gammas;
          doc["betas"] = c.betas;
        }
        doc["terminates"] = c.terminates;
        out << doc.dump(2) << "\n";
      } else if (kind == 'S') {
        out << "alpha," << join(c.alphas) << "\n";
      } else {
        out << "gamma," << join(c.gammas) << "\n";
        out << "beta," << join(c.betas) << "\n";
      }
    } else if (*verify) {
      if (o.id.empty() && !o.all) {
        err << "error: verify needs --id ID or --all\n" << verification_listing();
        return 2;
      }
      return run_verify(o, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace momentcf::cli

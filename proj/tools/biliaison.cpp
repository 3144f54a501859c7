// Command-line front end: q-profiles, minimal families, admissibility of p, and the
// bundled examples.
//
// Exit codes: 0 success, 1 check failed, 2 parse error, 3 hypothesis not certified,
// 4 budget exhausted, 5 N dissociated.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "biliaison/families.hpp"
#include "biliaison/fixtures.hpp"
#include "biliaison/matrix_io.hpp"
#include "biliaison/modgb.hpp"
#include "json.hpp"

using namespace biliaison;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kParse = 2, kHypothesis = 3, kBudget = 4, kDissociated = 5 };

struct Config {
  std::string fixture;
  std::string input;
  std::string field;
  std::uint64_t seed = kDefaultSeed;
  std::string window;
  std::uint64_t minor_budget = kDefaultMinorBudget;
  std::string format = "table";
  bool assume_locally_free = false;
  bool assume_surjective = false;
  bool dump_matrix = false;
  bool perturb = false;
  std::string p;
  std::string export_format;
};

struct ExitError : std::runtime_error {
  ExitError(int c, const std::string& what) : std::runtime_error(what), code(c) {}
  int code;
};

void warn(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

template <Field K>
struct Loaded {
  GradedMatrix<K> matrix;
  ProfileOptions options;
  std::vector<std::string> warnings;
};

std::optional<std::pair<int, int>> parse_window(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ExitError(kParse, "--window expects min:max");
  try {
    return std::pair{std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw ExitError(kParse, "--window expects min:max");
  }
}

template <Field K>
Loaded<K> load(const K& field, const Config& cfg, const json* file) {
  Loaded<K> out{GradedMatrix<K>(field, {}, {}), {}, {}};
  out.options.seed = cfg.seed;
  out.options.minor_budget = cfg.minor_budget;
  out.options.assume_locally_free = cfg.assume_locally_free;
  out.options.window = parse_window(cfg.window);
  if (!cfg.fixture.empty()) {
    auto ex = example(field, cfg.fixture, cfg.perturb);
    out.matrix = ex.matrix;
    out.options.locally_free_by_construction = ex.locally_free_asserted && !cfg.perturb;
  } else {
    out.matrix = matrix_from_json(field, *file);
    if (out.matrix.cols() > 0) {
      if (!cfg.assume_surjective)
        throw ExitError(kHypothesis,
                        "surjectivity of L2 onto the sections of N cannot be certified; pass --assume-surjective");
      out.warnings.push_back("surjectivity of L2 onto the sections of N assumed, not certified");
    }
  }
  return out;
}

template <Field K>
QProfile profile_or_exit(const Loaded<K>& in, const Config& cfg) {
  try {
    return compute_q_profile(in.matrix, in.options);
  } catch (const ProfileIncomplete& e) {
    if (cfg.format == "json") {
      std::cout << e.profile.to_json().dump(2) << "\n";
    } else {
      for (const auto& r : e.profile.rows)
        std::cout << r.n << " | " << r.alpha << " | " << r.beta << " | " << r.q_sharp << "\n";
    }
    throw ExitError(kBudget, std::string("partial profile: ") + e.what());
  }
}

void print_profile_table(const QProfile& p) {
  std::cout << std::setw(4) << "n" << " | " << std::setw(5) << "alpha" << " | " << std::setw(5) << "beta" << " | "
            << std::setw(5) << "q#" << " | " << std::setw(5) << "q" << "\n";
  const auto q = p.q();
  for (const auto& r : p.rows)
    std::cout << std::setw(4) << r.n << " | " << std::setw(5) << r.alpha << " | " << std::setw(5) << r.beta << " | "
              << std::setw(5) << r.q_sharp << " | " << std::setw(5) << q(r.n) << "\n";
  std::cout << "b0 = " << p.b0_string() << "\n";
  std::cout << "r = " << p.stable_rank << "\n";
  std::cout << "locally free: " << p.locally_free << "\n";
  if (p.dissociated) std::cout << "N is dissociated\n";
}

template <Field K>
int cmd_qprofile(const K& field, const Config& cfg, const json* file) {
  auto in = load(field, cfg, file);
  if (cfg.dump_matrix) {
    std::cout << matrix_to_json(in.matrix).dump(2) << "\n";
    return kOk;
  }
  warn(in.warnings);
  auto p = profile_or_exit(in, cfg);
  warn(p.warnings);
  if (cfg.format == "json")
    std::cout << p.to_json().dump(2) << "\n";
  else
    print_profile_table(p);
  return kOk;
}

template <Field K>
int cmd_minimal_family(const K& field, const Config& cfg, const json* file) {
  auto in = load(field, cfg, file);
  if (cfg.dump_matrix) {
    std::cout << matrix_to_json(in.matrix).dump(2) << "\n";
    return kOk;
  }
  warn(in.warnings);
  auto p = profile_or_exit(in, cfg);
  warn(p.warnings);
  if (p.dissociated) throw ExitError(kDissociated, "N is dissociated; there is no minimal family");
  auto r = minimal_family(in.matrix, p, FamilyOptions{cfg.seed, kRetryCap});
  if (cfg.format == "json") {
    std::cout << r.to_json().dump(2) << "\n";
    return kOk;
  }
  std::cout << "q = " << r.q.to_string() << "\n";
  std::cout << "deg N = " << r.deg_n << "\n";
  std::cout << "h0 = " << r.h0 << "\n";
  std::cout << "d0 = " << r.d0 << "\n";
  std::cout << "g0 = " << r.g0.get_str() << "\n";
  std::cout << "Hilbert polynomial of J_C: " << r.ideal_sheaf.to_string() << "\n";
  std::cout << "certificate: " << r.certificate.summary() << ", attempt " << r.attempts << ", seed " << r.seed
            << ", conservation " << (r.family.conserved() ? "holds" : "FAILS") << "\n";
  return kOk;
}

CharFunction parse_p(const std::string& text) {
  try {
    auto j = json::parse(text);
    if (!j.is_object()) throw ExitError(kParse, "p must be a JSON object {degree: multiplicity}");
    CharFunction p;
    for (const auto& [key, value] : j.items()) {
      std::size_t used = 0;
      int n = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
      p.add(n, value.get<int>());
    }
    return p;
  } catch (const ExitError&) {
    throw;
  } catch (const std::exception& e) {
    throw ExitError(kParse, std::string("malformed p: ") + e.what());
  }
}

template <Field K>
int cmd_check_p(const K& field, const Config& cfg, const json* file) {
  const auto p = parse_p(cfg.p);
  auto in = load(field, cfg, file);
  warn(in.warnings);
  auto profile = profile_or_exit(in, cfg);
  warn(profile.warnings);
  Admissibility adm;
  try {
    adm = check_p_admissible(p, profile);
  } catch (const std::invalid_argument& e) {
    throw ExitError(kParse, e.what());
  }
  if (!adm.admissible) {
    std::cout << "not admissible: " << adm.reason;
    if (adm.witness) std::cout << " (degree " << *adm.witness << ")";
    std::cout << "\n";
    return kCheckFailed;
  }
  const long deg_n = sheaf_degree(in.matrix);
  std::cout << "admissible, shift " << p.weighted_sum() + deg_n << "\n";
  return kOk;
}

struct CheckLine {
  std::string example, check, expected, computed;
  bool pass;
};

template <Field K>
std::vector<CheckLine> run_example(const K& field, const std::string& name, const Config& cfg) {
  std::vector<CheckLine> out;
  auto add = [&](const std::string& check, const std::string& expected, const std::string& computed) {
    out.push_back({name, check, expected, computed, expected == computed});
  };
  try {
    auto ex = example(field, name, cfg.perturb);
    const auto& e = ex.expected;
    if (e.sigma2_columns)
      add("sigma2", "{3:" + std::to_string(*e.sigma2_columns) + "}", ex.sigma2.col_function().to_string());
    ProfileOptions opt;
    opt.seed = cfg.seed;
    opt.minor_budget = cfg.minor_budget;
    opt.locally_free_by_construction = ex.locally_free_asserted && !cfg.perturb;
    const auto p = compute_q_profile(ex.matrix, opt);
    for (auto [n, v] : e.alpha) add("alpha_" + std::to_string(n), std::to_string(v), std::to_string(p.alpha(n)));
    for (auto [n, v] : e.beta) add("beta_" + std::to_string(n), std::to_string(v), std::to_string(p.beta(n)));
    if (e.b0) {
      if (e.b0_is_lower_bound) {
        const bool ok = p.b0 >= *e.b0 && (!e.b0_below || p.b0 < *e.b0_below);
        std::string expected = ">= " + std::to_string(*e.b0) + (e.b0_below ? ", < " + std::to_string(*e.b0_below) : "");
        out.push_back({name, "b0", expected, p.b0_string(), ok});
      } else {
        add("b0", std::to_string(*e.b0), p.b0_string());
      }
    }
    add("q", CharFunction(e.q).to_string(), p.q().to_string());
    const auto r = minimal_family(ex.matrix, p, FamilyOptions{cfg.seed, kRetryCap});
    if (e.h0) add("h0", std::to_string(*e.h0), std::to_string(r.h0));
    add("(d0,g0)", "(" + std::to_string(e.d0) + "," + std::to_string(e.g0) + ")",
        "(" + std::to_string(r.d0) + "," + r.g0.get_str() + ")");
    add("conservation", "holds", r.family.conserved() ? "holds" : "fails");
  } catch (const std::exception& err) {
    out.push_back({name, "run", "completes", std::string("error: ") + err.what(), false});
  }
  return out;
}

template <Field K>
int cmd_examples(const K& field, const Config& cfg) {
  std::vector<CheckLine> lines;
  for (const auto& name : example_names()) {
    auto part = run_example(field, name, cfg);
    lines.insert(lines.end(), part.begin(), part.end());
  }
  bool all = true;
  for (const auto& l : lines) all = all && l.pass;
  if (cfg.export_format == "json") {
    json j = json::array();
    for (const auto& l : lines)
      j.push_back({{"example", l.example}, {"check", l.check}, {"expected", l.expected}, {"computed", l.computed},
                   {"pass", l.pass}});
    std::cout << json{{"results", j}, {"all_pass", all}}.dump(2) << "\n";
  } else {
    for (const auto& l : lines)
      std::cout << std::left << std::setw(5) << l.example << " " << std::setw(13) << l.check << " "
                << (l.pass ? "pass" : "FAIL") << "  expected " << l.expected << ", computed " << l.computed << "\n";
    std::cout << (all ? "all examples pass" : "mismatches found") << "\n";
  }
  return all ? kOk : kCheckFailed;
}

template <class F>
int with_field(const Config& cfg, bool needs_input, F&& body) {
  json file;
  FieldSpec spec = FieldSpec::prime();
  if (needs_input && !cfg.input.empty()) {
    std::ifstream in(cfg.input);
    if (!in) throw ExitError(kParse, "cannot open " + cfg.input);
    try {
      file = json::parse(in);
    } catch (const json::exception& e) {
      throw ExitError(kParse, std::string("invalid JSON: ") + e.what());
    }
    if (file.contains("field")) spec = field_spec_from_json(file.at("field"));
  }
  if (!cfg.field.empty()) spec = FieldSpec::parse(cfg.field);
  spec.validate();
  const json* fp = cfg.input.empty() ? nullptr : &file;
  if (spec.kind == FieldKind::rationals) return body(RationalField(), fp);
  return body(PrimeField(spec.characteristic), fp);
}

void add_common(CLI::App* sub, Config& cfg, bool with_input) {
  if (with_input) {
    auto* f = sub->add_option("--fixture", cfg.fixture, "Bundled example: 3.2, 3.3 or 3.4");
    auto* i = sub->add_option("--input", cfg.input, "Matrix file (JSON)");
    f->excludes(i);
    sub->add_flag("--dump-matrix", cfg.dump_matrix, "Print the input matrix as JSON and exit");
    sub->add_flag("--perturb", cfg.perturb)->group("");
    sub->add_option("--window", cfg.window, "Degree window min:max");
    sub->add_flag("--assume-locally-free", cfg.assume_locally_free, "Continue if the cokernel is not locally free");
    sub->add_flag("--assume-surjective", cfg.assume_surjective, "Trust that L2 maps onto the sections of N");
  } else {
    sub->add_flag("--perturb", cfg.perturb)->group("");
  }
  sub->add_option("--field", cfg.field, "rationals or prime:P");
  sub->add_option("--seed", cfg.seed, "Random seed");
  sub->add_option("--minor-budget", cfg.minor_budget, "Largest number of minors enumerated exhaustively");
  sub->add_option("--format", cfg.format, "table or json")->check(CLI::IsMember({"table", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal curve families in a biliaison class"};
  app.require_subcommand(1);
  Config cfg;
  auto* qp = app.add_subcommand("qprofile", "alpha, beta, b0 and the q function");
  auto* mf = app.add_subcommand("minimal-family", "h0, d0 and g0 of the minimal family");
  auto* cp = app.add_subcommand("check-p", "Admissibility of a characteristic function p");
  auto* ex = app.add_subcommand("examples", "Run the bundled examples against their expected values");
  add_common(qp, cfg, true);
  add_common(mf, cfg, true);
  add_common(cp, cfg, true);
  cp->add_option("--p", cfg.p, "p as JSON {\"degree\": multiplicity}")->required();
  add_common(ex, cfg, false);
  ex->add_option("--export", cfg.export_format, "json")->check(CLI::IsMember({"json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (!ex->parsed() && cfg.fixture.empty() && cfg.input.empty())
      throw ExitError(kParse, "exactly one of --fixture and --input is required");
    if (qp->parsed())
      return with_field(cfg, true, [&](const auto& k, const json* f) { return cmd_qprofile(k, cfg, f); });
    if (mf->parsed())
      return with_field(cfg, true, [&](const auto& k, const json* f) { return cmd_minimal_family(k, cfg, f); });
    if (cp->parsed())
      return with_field(cfg, true, [&](const auto& k, const json* f) { return cmd_check_p(k, cfg, f); });
    return with_field(cfg, false, [&](const auto& k, const json*) { return cmd_examples(k, cfg); });
  } catch (const ExitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const DegreeError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis error: " << e.what() << "\n";
    return kHypothesis;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const DissociatedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDissociated;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

#include "wordmeasure/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordmeasure/classify.hpp"
#include "wordmeasure/haar.hpp"
#include "wordmeasure/trace.hpp"
#include "wordmeasure/weingarten.hpp"

namespace wm::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string input;
  bool json = false;
  int depth = 2;
  int max_l = 1;
  int max_j = 3;
  int dim = 4;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  int threads = 1;
  int class_id = 0;
  int size = 0;
  std::string cycle_class;
  std::uint64_t budget = kDefaultBudget;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::string trace_text(const TraceResult& r) {
  if (r.value.is_zero()) return "0";
  return r.value.to_string() + "  (valid for n >= " + std::to_string(r.threshold) + ")";
}

CycleType parse_cycle_type(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument("");
      parts.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("cycle type must be comma-separated positive integers, e.g. \"2,1\"");
    }
  }
  if (parts.empty()) throw UsageError("empty cycle type");
  return CycleType(parts);
}

FreeWord single_word(const WordTuple& t) {
  if (t.words.size() + static_cast<size_t>(t.trivial) != 1) throw UsageError("expected a single word");
  return t.words.empty() ? FreeWord() : t.words.front();
}

int cmd_trace(const Options& o, std::ostream& out) {
  const WordTuple t = parse(o.input);
  const TraceResult r = trace_rational(t, o.budget);
  if (o.json)
    emit(out, {{"command", "trace"}, {"tuple", t.to_string()}, {"value", r.value.to_json()},
               {"text", r.value.to_string()}, {"threshold", r.threshold}});
  else
    out << trace_text(r) << "\n";
  return kExitOk;
}

int cmd_laurent(const Options& o, std::ostream& out) {
  if (o.depth < 1) throw UsageError("--depth must be at least 1");
  const WordTuple t = parse(o.input);
  const LaurentSeries s = trace_laurent(t, o.depth, o.budget);
  if (o.json)
    emit(out, {{"command", "laurent"}, {"tuple", t.to_string()}, {"depth", o.depth}, {"series", s.to_json()},
               {"text", s.to_string()}});
  else
    out << s.to_string() << "\n";
  return kExitOk;
}

int cmd_chimax(const Options& o, std::ostream& out) {
  const WordTuple t = parse(o.input);
  const auto chi = chi_max(t, o.budget);
  if (o.json)
    emit(out, {{"command", "chimax"}, {"tuple", t.to_string()}, {"chi_max", chi ? json(*chi) : json(nullptr)}});
  else
    out << (chi ? std::to_string(*chi) : "-inf") << "\n";
  return kExitOk;
}

int cmd_cl(const Options& o, std::ostream& out) {
  const FreeWord w = single_word(parse(o.input));
  const int cl = commutator_length(w, o.budget);
  if (o.json)
    emit(out, {{"command", "cl"}, {"word", w.to_string()}, {"cl", cl}});
  else
    out << cl << "\n";
  return kExitOk;
}

int cmd_scl(const Options& o, std::ostream& out) {
  const FreeWord w = single_word(parse(o.input));
  const Rational v = scl_upper(w, o.max_l, o.max_j, o.budget);
  if (o.json)
    emit(out, {{"command", "scl"}, {"word", w.to_string()}, {"max_l", o.max_l}, {"max_j", o.max_j},
               {"scl_upper", v.get_str()}});
  else
    out << v.get_str() << "\n";
  return kExitOk;
}

std::string profile_text(const IncompressibleClass& c) {
  std::string s;
  for (const auto& comp : c.profile) {
    if (!s.empty()) s += " ";
    s += "(g=" + std::to_string(comp.genus) + ",b=" + std::to_string(comp.boundaries) + ")";
  }
  return s;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const WordTuple t = parse(o.input);
  const auto classes = incompressible_classes(t, o.budget);
  if (o.json) {
    json arr = json::array();
    for (const auto& c : classes) arr.push_back(c.to_json());
    emit(out, {{"command", "classify"}, {"tuple", t.to_string()}, {"classes", arr}});
    return kExitOk;
  }
  out << std::left << std::setw(5) << "id" << std::setw(6) << "chi" << std::setw(10) << "vertices"
      << "components\n";
  for (const auto& c : classes)
    out << std::left << std::setw(5) << c.id << std::setw(6) << c.chi << std::setw(10) << c.vertices.size()
        << profile_text(c) << "\n";
  return kExitOk;
}

int cmd_l2euler(const Options& o, std::ostream& out) {
  const WordTuple t = parse(o.input);
  const auto classes = incompressible_classes(t, o.budget);
  if (o.class_id < 0 || o.class_id >= static_cast<int>(classes.size()))
    throw UsageError("--class must be between 0 and " + std::to_string(static_cast<int>(classes.size()) - 1));
  const auto& c = classes[static_cast<size_t>(o.class_id)];
  const Integer v = class_l2_euler(t, c, o.budget);
  if (o.json)
    emit(out, {{"command", "l2euler"}, {"tuple", t.to_string()}, {"class", c.id}, {"chi", c.chi},
               {"l2_euler", v.get_str()}});
  else
    out << v.get_str() << "\n";
  return kExitOk;
}

int cmd_wg(const Options& o, std::ostream& out) {
  std::vector<CycleType> classes;
  if (!o.cycle_class.empty()) {
    classes.push_back(parse_cycle_type(o.cycle_class));
    if (o.size > 0 && classes.front().size() != o.size)
      throw UsageError("--class " + o.cycle_class + " is not a partition of --size " + std::to_string(o.size));
  } else if (o.size > 0) {
    classes = partitions(o.size);
  } else {
    throw UsageError("wg needs --size L and/or --class, e.g. --size 3 --class 2,1");
  }
  json arr = json::array();
  for (const auto& mu : classes) {
    const RationalFunction v = wg(mu);
    const LeadingTerm lead = wg_leading(permutation_of_type(mu));
    if (o.json)
      arr.push_back({{"cycle_type", mu.parts()}, {"value", v.to_json()}, {"text", v.to_string()},
                     {"leading", {{"coefficient", lead.coefficient.get_str()}, {"exponent", lead.exponent}}}});
    else if (classes.size() == 1)
      out << v.to_string() << "\n";
    else
      out << std::left << std::setw(12) << mu.to_string() << v.to_string() << "\n";
  }
  if (o.json) emit(out, {{"command", "wg"}, {"values", arr}});
  return kExitOk;
}

int cmd_mc(const Options& o, std::ostream& out) {
  if (o.dim < 1) throw UsageError("--dim must be positive");
  if (o.samples < 2) throw UsageError("--samples must be at least 2");
  const WordTuple t = parse(o.input);
  const MCEstimate e = estimate(t, o.dim, o.samples, o.seed, o.threads);
  json j = {{"command", "mc"}, {"tuple", t.to_string()}, {"estimate", e.to_json()}};
  std::string exact_text;
  std::optional<double> z;
  try {
    const TraceResult r = trace_rational(t, o.budget);
    exact_text = r.value.to_string();
    j["exact"] = r.value.to_json();
    j["threshold"] = r.threshold;
    if (o.dim >= r.threshold) {
      z = compare(e, r.value);
      j["exact_value"] = r.value.evaluate(Rational(o.dim)).get_str();
      j["z"] = *z;
    }
  } catch (const BudgetExceeded&) {
    // exact value is optional here
  }
  if (o.json) {
    emit(out, j);
    return kExitOk;
  }
  out << std::setprecision(8) << "mean " << e.mean << "  stderr " << e.stderr_ << "  imag " << e.imag_residual << "\n";
  if (!exact_text.empty()) out << "exact " << exact_text;
  if (z) out << " = " << j["exact_value"].get<std::string>() << "  z " << *z;
  if (!exact_text.empty()) out << "\n";
  return kExitOk;
}


int cmd_selftest(std::ostream& out) {
  struct Golden {
    const char* tuple;
    RationalFunction value;
  };
  const auto n = RationalFunction::variable();
  const std::vector<Golden> table = {
      {"[x,y]", n.inverse()},
      {"[x^3,y]", RationalFunction(3) / n},
      {"[x,y]^2", RationalFunction(-4) / (n.pow(3) - n)},
      {"[x,y]^3", RationalFunction(9) * (n.pow(2) + 4) / (n.pow(5) - 5 * n.pow(3) + 4 * n)},
      {"[x,y][x,z]", RationalFunction(0)},
      {"[x,y][x,z][x,t]", RationalFunction(0)},
      {"x^2y^2,xy^-3x^-3y", RationalFunction(4) * (n.pow(2) - 5) / (n.pow(4) - 5 * n.pow(2) + 4)},
      {"x^2yxy^-1,(x^2yxy^-1)^-1", RationalFunction(1)},
      {"x^2y^2xy^-1,(x^2y^2xy^-1)^-1", (n.pow(4) - 5 * n.pow(2)) / (n.pow(4) - 5 * n.pow(2) + 4)},
  };
  int failures = 0;
  auto report = [&](const std::string& name, bool ok, const std::string& detail) {
    out << (ok ? "ok    " : "FAIL  ") << name;
    if (!ok) out << "  got " << detail;
    out << "\n";
    if (!ok) ++failures;
  };
  for (const auto& g : table) {
    const RationalFunction got = trace_rational(parse(g.tuple)).value;
    report(std::string("trace ") + g.tuple + " = " + g.value.to_string(), got == g.value, got.to_string());
  }
  const std::vector<std::pair<std::vector<int>, RationalFunction>> wg_golden = {
      {{1, 1}, (n.pow(2) - 1).inverse()},
      {{2}, RationalFunction(-1) / (n * (n.pow(2) - 1))},
      {{1, 1, 1}, (n.pow(2) - 2) / (n * (n.pow(2) - 1) * (n.pow(2) - 4))},
      {{2, 1}, RationalFunction(-1) / ((n.pow(2) - 1) * (n.pow(2) - 4))},
      {{3}, RationalFunction(2) / (n * (n.pow(2) - 1) * (n.pow(2) - 4))},
  };
  for (const auto& [parts, value] : wg_golden) {
    const RationalFunction got = wg(CycleType(parts));
    std::string name = "wg(";
    for (size_t i = 0; i < parts.size(); ++i) name += (i ? "," : "") + std::to_string(parts[i]);
    report(name + ") = " + value.to_string(), got == value, got.to_string());
  }
  for (int size = 1; size <= 3; ++size) {
    const GroupRingElement inv = wg_table(size);
    bool ok = true;
    for (const auto& p : all_permutations(size)) ok = ok && inv[p] == wg(p);
    report("wg characters = group-ring inverse, L = " + std::to_string(size), ok, "mismatch");
  }
  out << (failures == 0 ? "selftest passed" : std::to_string(failures) + " selftest failure(s)") << "\n";
  return failures == 0 ? kExitOk : kExitMismatch;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv(kBudgetEnv)) {
    try {
      size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(kBudgetEnv) + " must be a positive integer");
  }
  return kDefaultBudget;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact moments of word measures on U(n)", "wordmeasure"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string active;
  auto add = [&](const std::string& name, const std::string& desc, const std::string& what) {
    CLI::App* sub = app.add_subcommand(name, desc);
    if (!what.empty()) sub->add_option(what, o.input, what)->required();
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_option("--budget", o.budget, "cap on visited matchings")->check(CLI::PositiveNumber);
    sub->callback([&active, name] { active = name; });
    return sub;
  };
  add("trace", "exact rational function Tr(n)", "tuple");
  add("laurent", "direct Laurent enumeration", "tuple")->add_option("--depth", o.depth, "chi levels")->check(CLI::PositiveNumber);
  add("chimax", "maximal Euler characteristic", "tuple");
  add("cl", "commutator length", "word");
  auto* scl = add("scl", "upper bound on stable commutator length", "word");
  scl->add_option("--max-l", o.max_l, "longest power tuple")->check(CLI::PositiveNumber);
  scl->add_option("--max-j", o.max_j, "largest power")->check(CLI::PositiveNumber);
  add("classify", "incompressible classes", "tuple");
  add("l2euler", "L2-Euler characteristic of a class", "tuple")->add_option("--class", o.class_id, "class id");
  auto* wgc = add("wg", "Weingarten function Wg_L on a conjugacy class", "");
  wgc->add_option("--size", o.size, "L")->check(CLI::PositiveNumber);
  wgc->add_option("--class", o.cycle_class, "cycle type, e.g. 2,1");
  auto* mc = add("mc", "Monte-Carlo estimate", "tuple");
  mc->add_option("--dim", o.dim, "matrix size n")->check(CLI::PositiveNumber);
  mc->add_option("--samples", o.samples, "sample count")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));
  mc->add_option("--seed", o.seed, "master seed");
  mc->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  add("selftest", "golden-value suite", "");

  try {
    o.budget = default_budget();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << grammar_help() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (active == "trace") return cmd_trace(o, out);
    if (active == "laurent") return cmd_laurent(o, out);
    if (active == "chimax") return cmd_chimax(o, out);
    if (active == "cl") return cmd_cl(o, out);
    if (active == "scl") return cmd_scl(o, out);
    if (active == "classify") return cmd_classify(o, out);
    if (active == "l2euler") return cmd_l2euler(o, out);
    if (active == "wg") return cmd_wg(o, out);
    if (active == "mc") return cmd_mc(o, out);
    if (active == "selftest") return cmd_selftest(out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const CapExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n" << grammar_help() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n" << grammar_help() << "\n";
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace wm::cli

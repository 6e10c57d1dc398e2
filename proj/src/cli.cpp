#include "sumprod/cli.hpp"

#include "sumprod/classes.hpp"
#include "sumprod/iterated.hpp"
#include "sumprod/oracle.hpp"
#include "sumprod/progressions.hpp"
#include "sumprod/witness.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace sumprod::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Parsed {
  std::string verb;
  std::vector<std::string> positional;
  bool json = false;
  bool trace = false;
  std::map<std::string, std::string> options;  // --cap, --m-max, --window, --bound
};

const std::vector<std::string> kValueOptions{"--cap", "--m-max", "--window", "--bound"};

Parsed parse_args(const std::vector<std::string>& args) {
  Parsed p;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--json") {
      p.json = true;
    } else if (a == "--trace") {
      p.trace = true;
    } else if (std::find(kValueOptions.begin(), kValueOptions.end(), a) != kValueOptions.end()) {
      if (i + 1 == args.size()) throw UsageError("missing value for " + a);
      p.options[a] = args[++i];
    } else if (a.size() > 1 && a[0] == '-' && !(a[1] >= '0' && a[1] <= '9')) {
      throw UsageError("unknown option " + a);
    } else if (p.verb.empty()) {
      p.verb = a;
    } else {
      p.positional.push_back(a);
    }
  }
  if (p.verb.empty()) throw UsageError("missing command");
  return p;
}

Int parse_arg(const std::string& text) {
  try {
    return parse_int(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<Int> take_ints(const Parsed& p, std::size_t count) {
  if (p.positional.size() != count)
    throw UsageError(p.verb + " expects " + std::to_string(count) + " integers, got " +
                     std::to_string(p.positional.size()));
  std::vector<Int> out;
  for (const auto& s : p.positional) out.push_back(parse_arg(s));
  return out;
}

std::optional<Int> option_int(const Parsed& p, const std::string& name) {
  auto it = p.options.find(name);
  if (it == p.options.end()) return std::nullopt;
  return parse_arg(it->second);
}

int small_int(const Int& v, const std::string& name) {
  if (!v.fits_sint_p()) throw UsageError(name + " out of range");
  return static_cast<int>(v.get_si());
}

std::string str(const Int& v) { return to_string(v); }

Json json_ints(const std::vector<Int>& values) {
  Json arr = Json::array();
  for (const Int& v : values) arr.push_back(str(v));
  return arr;
}

Json instance_json(const Instance& inst) {
  return {{"a", str(inst.a)}, {"b", str(inst.b)}, {"c", str(inst.c)},
          {"d", str(inst.d)}, {"m", str(inst.m)}, {"N", str(inst.N)}};
}

Json witness_json(const Witness& w) {
  return {{"a_prime", str(w.a_prime)}, {"b_prime", str(w.b_prime)},
          {"c_prime", str(w.c_prime)}, {"d_prime", str(w.d_prime)}};
}

Json trace_json(const WitnessTrace& t) {
  Json j{{"a", str(t.a)},   {"b", str(t.b)},   {"c", str(t.c)},   {"d", str(t.d)},
         {"m", str(t.m)},   {"N", str(t.N)},   {"m_prime", str(t.m_prime)},
         {"k", str(t.k)},   {"x", str(t.x)},   {"y", str(t.y)},   {"z", str(t.z)},
         {"x_prime", str(t.x_prime)},          {"y_prime", str(t.y_prime)},
         {"q_x", str(t.q_x)},                  {"q_y", str(t.q_y)},
         {"a0", str(t.a0)}, {"c0", str(t.c0)}, {"P1", json_ints(t.P1)},
         {"P2", json_ints(t.P2)},              {"u", str(t.u)},
         {"a1", str(t.a1)}, {"c1", str(t.c1)}, {"P3", json_ints(t.P3)},
         {"v", str(t.v)},   {"a_prime", str(t.a_prime)}, {"c_prime", str(t.c_prime)}};
  if (t.lifted) {
    j["ell"] = str(t.ell);
    j["r"] = str(t.r);
    j["s"] = str(t.s);
    j["b_prime"] = str(t.b_prime);
    j["d_prime"] = str(t.d_prime);
  }
  return j;
}

std::string witness_line(const Witness& w) {
  return "a'=" + str(w.a_prime) + " b'=" + str(w.b_prime) + " c'=" + str(w.c_prime) +
         " d'=" + str(w.d_prime);
}

Instance instance_from(const std::vector<Int>& v) {
  if (v[4] < 1) throw UsageError("m must be >= 1");
  return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

int cmd_witness(const Parsed& p, std::ostream& out) {
  const Instance inst = instance_from(take_ints(p, 6));
  auto sol = solve_dilated(inst);
  if (p.json) {
    Json j{{"command", "witness"}, {"outcome", sol ? "witness" : "not-member"},
           {"instance", instance_json(inst)}};
    if (sol) {
      j["delta"] = str(sol->delta);
      j["witness"] = witness_json(sol->witness);
      if (p.trace) j["trace"] = trace_json(sol->trace);
    }
    out << j.dump() << '\n';
  } else if (sol) {
    out << "witness delta=" << sol->delta << '\n' << witness_line(sol->witness) << '\n';
    if (p.trace) out << "trace:\n" << describe(sol->trace);
  } else {
    out << "not-member\n";
  }
  return sol ? kSuccess : kNegative;
}

int cmd_check(const Parsed& p, std::ostream& out) {
  const auto v = take_ints(p, 10);
  const Instance inst = instance_from(v);
  const Witness w{v[6], v[7], v[8], v[9]};
  const bool ok = verify_witness(inst, w);
  if (p.json) {
    out << Json{{"command", "check"}, {"valid", ok}, {"instance", instance_json(inst)},
                {"witness", witness_json(w)}}
               .dump()
        << '\n';
  } else {
    out << (ok ? "valid" : "invalid") << '\n';
  }
  return ok ? kSuccess : kNegative;
}

Json threshold_json(const ThresholdReport& r) {
  return {{"N0", str(r.N0)}, {"a_hi", str(r.a_hi)}, {"c_hi", str(r.c_hi)},
          {"instance", {{"a", str(r.a)}, {"b", str(r.b)}, {"c", str(r.c)},
                        {"d", str(r.d)}, {"m", str(r.m)}}}};
}

int cmd_threshold(const Parsed& p, std::ostream& out) {
  const auto v = take_ints(p, 5);
  const ThresholdReport r = threshold_N0(v[0], v[1], v[2], v[3], v[4]);
  if (p.json) {
    Json j{{"command", "threshold"}};
    j.update(threshold_json(r));
    out << j.dump() << '\n';
  } else {
    out << "N0=" << r.N0 << " a_hi=" << r.a_hi << " c_hi=" << r.c_hi << '\n';
  }
  return kSuccess;
}

int cmd_progression(const Parsed& p, std::ostream& out) {
  const Instance inst = instance_from(take_ints(p, 6));
  const ProgressionOutcome r = solve_progression(inst);
  if (p.json) {
    Json j{{"command", "progression"}, {"outcome", to_string(r.status)},
           {"instance", instance_json(inst)}, {"N0", str(r.threshold.N0)}};
    if (r.witness) j["witness"] = witness_json(*r.witness);
    if (p.trace && r.trace) j["trace"] = trace_json(*r.trace);
    out << j.dump() << '\n';
  } else {
    out << to_string(r.status) << " N0=" << r.threshold.N0 << '\n';
    if (r.witness) out << witness_line(*r.witness) << '\n';
    if (p.trace && r.trace) out << "trace:\n" << describe(*r.trace);
  }
  return r.status == ProgressionStatus::witness ? kSuccess : kNegative;
}

int cmd_subgroup(const Parsed& p, std::ostream& out) {
  const auto v = take_ints(p, 6);
  if (v[4] < 1) throw UsageError("m must be >= 1");
  auto sw = subgroup_witness(v[0], v[1], v[2], v[3], v[4], v[5]);
  if (p.json) {
    Json j{{"command", "subgroup"}, {"outcome", sw ? "witness" : "not-member"}};
    if (sw)
      j["witness"] = {{"w", str(sw->w)}, {"x", str(sw->x)}, {"y", str(sw->y)},
                      {"z", str(sw->z)}, {"t", str(sw->t)}};
    out << j.dump() << '\n';
  } else if (sw) {
    out << "w=" << sw->w << " x=" << sw->x << " y=" << sw->y << " z=" << sw->z
        << " t=" << sw->t << '\n';
  } else {
    out << "not-member\n";
  }
  return sw ? kSuccess : kNegative;
}

// "k:a1,...,ak"
std::vector<Int> parse_term(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("term descriptor needs k:a1,...: " + text);
  const Int k = parse_arg(text.substr(0, colon));
  std::vector<Int> values;
  std::string rest = text.substr(colon + 1);
  std::size_t start = 0;
  while (true) {
    const auto comma = rest.find(',', start);
    values.push_back(parse_arg(rest.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (k != Int(static_cast<unsigned long>(values.size())))
    throw UsageError("term descriptor length mismatch: " + text);
  return values;
}

int cmd_iterate(const Parsed& p, std::ostream& out) {
  if (p.positional.size() < 4) throw UsageError("iterate expects m N and at least two terms");
  const Int m = parse_arg(p.positional[0]);
  const Int N = parse_arg(p.positional[1]);
  std::vector<std::vector<Int>> terms;
  for (std::size_t i = 2; i < p.positional.size(); ++i) terms.push_back(parse_term(p.positional[i]));
  std::optional<IteratedSpec> spec;
  try {
    spec.emplace(m, std::move(terms));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const IteratedOutcome r = solve_iterated(*spec, N);
  if (p.json) {
    Json j{{"command", "iterate"}, {"outcome", to_string(r.status)}};
    if (r.witness) {
      Json values = Json::array();
      for (const auto& term : r.witness->values) values.push_back(json_ints(term));
      j["values"] = values;
    }
    out << j.dump() << '\n';
  } else {
    out << to_string(r.status) << '\n';
    if (r.witness) {
      for (const auto& term : r.witness->values) {
        for (std::size_t j = 0; j < term.size(); ++j) out << (j ? "," : "") << term[j];
        out << '\n';
      }
    }
  }
  return r.status == IteratedStatus::witness ? kSuccess : kNegative;
}

int cmd_exceptions(const Parsed& p, std::ostream& out) {
  const auto v = take_ints(p, 5);
  const ThresholdReport th = threshold_N0(v[0], v[1], v[2], v[3], v[4]);
  const Int cap = option_int(p, "--cap").value_or(th.N0);
  const auto list = exceptional_set(v[0], v[1], v[2], v[3], v[4], cap);
  if (p.json) {
    out << Json{{"command", "exceptions"}, {"cap", str(cap)}, {"N0", str(th.N0)},
                {"exceptions", json_ints(list)}}
               .dump()
        << '\n';
  } else {
    out << "exceptions count=" << list.size() << " cap=" << cap << " N0=" << th.N0 << '\n';
    for (std::size_t i = 0; i < list.size(); ++i) out << (i ? " " : "") << list[i];
    out << '\n';
  }
  return kSuccess;
}

int cmd_grid(const Parsed& p, std::ostream& out) {
  if (!p.positional.empty()) throw UsageError("grid takes only --m-max and --window");
  GridOptions opt;
  if (auto v = option_int(p, "--m-max")) opt.m_max = small_int(*v, "--m-max");
  if (auto v = option_int(p, "--window")) opt.window = small_int(*v, "--window");
  const GridReport r = grid_verify_theorem(opt);
  if (p.json) {
    Json d = Json::array();
    for (const auto& x : r.discrepancies)
      d.push_back({{"kind", x.kind}, {"instance", instance_json(x.instance)}, {"detail", x.detail}});
    out << Json{{"command", "grid"},        {"m_max", r.m_max},
                {"window", r.window},       {"tuples", r.tuples},
                {"targets", r.targets},     {"members", r.members},
                {"non_members", r.non_members}, {"discrepancies", d}}
               .dump()
        << '\n';
  } else {
    out << "grid m_max=" << r.m_max << " window=" << r.window << " tuples=" << r.tuples
        << " targets=" << r.targets << " members=" << r.members
        << " non_members=" << r.non_members << " discrepancies=" << r.discrepancies.size()
        << '\n';
    for (const auto& x : r.discrepancies) {
      const Instance& i = x.instance;
      out << x.kind << ": a=" << i.a << " b=" << i.b << " c=" << i.c << " d=" << i.d
          << " m=" << i.m << " N=" << i.N << " " << x.detail << '\n';
    }
  }
  return r.discrepancies.empty() ? kSuccess : kNegative;
}

int cmd_demo(const Parsed& p, std::ostream& out) {
  if (!p.positional.empty()) throw UsageError("demo takes only --bound");
  const Int bound = option_int(p, "--bound").value_or(Int(1000));
  const StrictnessReport r = strictness_demo(bound);
  if (p.json) {
    out << Json{{"command", "demo"},
                {"n", "53"},
                {"class_member", r.class_member},
                {"product_member", r.product_member},
                {"bound", str(r.bound)},
                {"exceptions", json_ints(r.exceptions)},
                {"prime_exceptions", json_ints(r.prime_exceptions)}}
               .dump()
        << '\n';
  } else {
    auto yes = [](bool b) { return b ? "true" : "false"; };
    out << "53 in R_19(15): " << yes(r.class_member) << '\n';
    out << "53 in R_19(3)R_19(5): " << yes(r.product_member) << '\n';
    out << "P_19(15) \\ P_19(3)P_19(5) up to " << r.bound << ": " << r.exceptions.size()
        << " elements, " << r.prime_exceptions.size() << " prime\n";
    for (std::size_t i = 0; i < r.exceptions.size(); ++i) out << (i ? " " : "") << r.exceptions[i];
    out << '\n';
  }
  return kSuccess;
}

}  // namespace

std::string usage() {
  return "usage: sumprod [--json] <command> ...\n"
         "  witness a b c d m N [--trace]\n"
         "  check a b c d m N a' b' c' d'\n"
         "  threshold a b c d m\n"
         "  progression a b c d m N [--trace]\n"
         "  subgroup a b c d m t\n"
         "  iterate m N k1:a11,... k2:a21,... ...\n"
         "  exceptions a b c d m [--cap C]\n"
         "  grid [--m-max M] [--window W]\n"
         "  demo [--bound B]\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, std::function<int(const Parsed&, std::ostream&)>> commands{
      {"witness", cmd_witness},         {"check", cmd_check},
      {"threshold", cmd_threshold},     {"progression", cmd_progression},
      {"subgroup", cmd_subgroup},       {"iterate", cmd_iterate},
      {"exceptions", cmd_exceptions},   {"grid", cmd_grid},
      {"demo", cmd_demo}};
  try {
    if (!args.empty() && (args[0] == "--help" || args[0] == "-h")) {
      out << usage();
      return kSuccess;
    }
    const Parsed p = parse_args(args);
    auto it = commands.find(p.verb);
    if (it == commands.end()) throw UsageError("unknown command " + p.verb);
    return it->second(p, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << usage();
    return kUsage;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << '\n' << e.dump();
    return kInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace sumprod::cli

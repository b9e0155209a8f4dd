// negdim: command-line front end.
//
//   negdim <module> <verb> [flags]
//
// Exit status: 0 when every check holds, 1 on a failed check, 2 on a usage
// error (bad flag, malformed partition or rational, out-of-range value).

#include "negdim/casimir.hpp"
#include "negdim/dims.hpp"
#include "negdim/jack.hpp"
#include "negdim/spaces.hpp"
#include "negdim/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

using namespace negdim;
using json = nlohmann::ordered_json;

namespace {

constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Flag values shared across subcommands.
struct Options {
  std::string lambda = "0";
  std::string group = "c";
  std::string family;
  std::string mode = "blocks";
  std::string k = "k";
  std::string label;
  std::string m, n;
  int order = 4;
  verify::Config cfg;
  bool json = false;
};

Partition parse_lambda(const std::string& s) {
  try {
    return Partition::parse(s);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--lambda: ") + e.what());
  }
}

RatFunc parse_k(const std::string& s) {
  if (s == jack::kK) return sym(jack::kK);
  try {
    return RatFunc(Rational::parse(s));
  } catch (const std::exception& e) {
    throw UsageError("--k: expected 'k' or a rational a/b, got '" + s + "'");
  }
}

int parse_rank(const std::string& s, const char* flag) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size() || v < 1) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + ": expected a positive integer, got '" + s + "'");
  }
}

casimir::Mode parse_mode(const Options& o) {
  if (o.mode == "blocks") return casimir::Mode::Blocks();
  if (o.mode == "rows") {
    if (o.n.empty()) throw UsageError("--mode rows needs --n");
    return casimir::Mode::Rows(parse_rank(o.n, "--n"));
  }
  throw UsageError("--mode: expected blocks|rows, got '" + o.mode + "'");
}

template <class F>
auto as_usage(F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int emit(const Options& o, const json& j, const std::string& text, bool ok) {
  if (o.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
  return ok ? 0 : 1;
}

std::string pass_fail(bool b) { return b ? "pass" : "fail"; }

// casimir ------------------------------------------------------------------

int casimir_gf_cmd(const Options& o) {
  auto spec = as_usage([&] { return casimir::group_spec(casimir::parse_family(o.group)); });
  Partition l = parse_lambda(o.lambda);
  auto r = as_usage([&] { return casimir::casimir_gf(spec, l, parse_mode(o)); });
  json j{{"group", casimir::family_name(spec.family)}, {"lambda", l.str()}, {"mode", o.mode},
         {"gf", r.gf.str()}, {"pi", r.pi.str()}};
  return emit(o, j, r.gf.str() + "\n", true);
}

int casimir_coeffs_cmd(const Options& o) {
  if (o.order < 0) throw UsageError("--order must be >= 0");
  auto spec = as_usage([&] { return casimir::group_spec(casimir::parse_family(o.group)); });
  Partition l = parse_lambda(o.lambda);
  auto c = as_usage([&] { return casimir::casimir_coeffs(spec, l, o.order, parse_mode(o)); });
  json arr = json::array();
  std::string text;
  for (std::size_t p = 0; p < c.size(); ++p) {
    arr.push_back(c[p].str());
    text += "C_" + std::to_string(p) + " = " + c[p].str() + "\n";
  }
  json j{{"group", casimir::family_name(spec.family)}, {"lambda", l.str()}, {"coefficients", arr}};
  return emit(o, j, text, true);
}

int casimir_duality_cmd(const Options& o) {
  json cases = json::array();
  std::string text;
  bool ok = true;
  const bool sp_so = o.group == "c" || o.group == "d" || o.group == "sp-so";
  if (!sp_so && o.group != "u") throw UsageError("--group: expected sp-so|c|d|u for verify-duality");
  for (const auto& l : partitions_up_to(o.cfg.max_weight)) {
    auto c = sp_so ? casimir::check_sp_so_duality(l) : casimir::check_u_selfduality(l);
    ok = ok && c.holds;
    cases.push_back({{"lambda", l.str()}, {"holds", c.holds}, {"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}});
    text += pass_fail(c.holds) + "  " + l.str() + "\n";
  }
  json j{{"duality", sp_so ? "sp-so" : "u"}, {"max_weight", o.cfg.max_weight}, {"cases", cases}};
  return emit(o, j, text, ok);
}

// jack ---------------------------------------------------------------------

int jack_compute_cmd(const Options& o) {
  Partition l = parse_lambda(o.lambda);
  RatFunc k = parse_k(o.k);
  jack::JackFunction f = [&] {
    try {
      return jack::jack(l, k);
    } catch (const jack::SingularJack& e) {
      throw UsageError(e.what());
    }
  }();
  json j{{"lambda", l.str()},
         {"k", k.str()},
         {"m", f.m_expansion.str()},
         {"p", f.p_expansion.str()},
         {"eigenvalue", f.eigenvalue.str()}};
  return emit(o, j, "m: " + f.m_expansion.str() + "\np: " + f.p_expansion.str() + "\n", true);
}

int jack_duality_cmd(const Options& o) {
  json cases = json::array();
  std::string text;
  bool ok = true;
  auto one = [&](const Partition& l) {
    try {
      RatFunc c = jack::macdonald_duality(l, sym(jack::kK));
      cases.push_back({{"lambda", l.str()}, {"holds", true}, {"c", c.str()}});
      text += "pass  " + l.str() + "  c = " + c.str() + "\n";
    } catch (const std::logic_error& e) {
      ok = false;
      cases.push_back({{"lambda", l.str()}, {"holds", false}, {"error", e.what()}});
      text += "fail  " + l.str() + "  " + e.what() + "\n";
    }
  };
  if (o.lambda != "0")
    one(parse_lambda(o.lambda));
  else
    for (const auto& l : partitions_up_to(o.cfg.max_weight))
      if (!l.empty()) one(l);
  return emit(o, json{{"cases", cases}}, text, ok);
}

int jack_diagram_cmd(const Options& o) {
  json cases = json::array();
  std::string text;
  bool ok = true;
  for (int w = 1; w <= o.cfg.max_weight; ++w)
    for (const auto& mu : partitions_of(w))
      for (int n = 1; n <= o.cfg.max_n; ++n) {
        auto c = jack::check_diagram(mu, sym(jack::kK), n);
        ok = ok && c.holds;
        cases.push_back({{"mu", mu.str()}, {"N", n}, {"holds", c.holds}});
        text += pass_fail(c.holds) + "  " + mu.str() + "  N=" + std::to_string(n) + "\n";
      }
  return emit(o, json{{"cases", cases}}, text, ok);
}

// spaces -------------------------------------------------------------------

json kpq_json(const spaces::KPQ& x) {
  json j{{"k", x.k.str()}};
  if (x.p) j["p"] = x.p->str();
  if (x.q) j["q"] = x.q->str();
  j["N"] = x.n.str();
  return j;
}

spaces::KPQ bind_sizes(const spaces::KPQ& x, const Options& o) {
  std::map<std::string, RatFunc> b;
  if (!o.m.empty()) b[spaces::kSizeM] = RatFunc(parse_rank(o.m, "--m"));
  if (!o.n.empty()) b[spaces::kSizeNn] = RatFunc(parse_rank(o.n, "--n"));
  if (b.empty()) return x;
  spaces::KPQ out = x;
  if (out.p) out.p = out.p->substitute(b);
  if (out.q) out.q = out.q->substitute(b);
  return out;
}

int spaces_table_cmd(const Options& o) {
  json rows = json::array(), pairs = json::array();
  std::string text = "space       multiplicities (alpha, beta, 2beta)        kpq\n";
  for (const auto& s : spaces::catalogue()) {
    auto kpq = spaces::to_kpq(s);
    std::string m = s.mults.alpha.str();
    if (s.mults.beta) m += ", " + s.mults.beta->str() + ", " + s.mults.beta2->str();
    rows.push_back({{"label", s.label}, {"name", s.name}, {"root_system", s.root_system}, {"mults", m},
                    {"kpq", kpq_json(kpq)}});
    text += s.label + "  " + s.name + "  " + s.root_system + "  (" + m + ")  " + kpq.str() + "\n";
  }
  text += "\ndual pairs\n";
  for (const auto& row : spaces::printed_pairs()) {
    auto r = spaces::dual_space(row.source);
    pairs.push_back({{"space", row.source}, {"partner", row.partner}, {"dual_kpq", kpq_json(r.dual_kpq)},
                     {"catalogue_partner", r.partner.value_or("")}, {"reproduced", r.pairing_reproduced()}});
    text += row.source + " -> " + row.partner + "  " + r.dual_kpq.str() + "  " +
            (r.pairing_reproduced() ? "reproduced" : "NOT reproduced") + "\n";
  }
  return emit(o, json{{"spaces", rows}, {"pairs", pairs}}, text, true);
}

int spaces_dual_cmd(const Options& o) {
  if (o.label.empty()) throw UsageError("spaces dual needs --label");
  auto r = as_usage([&] { return spaces::dual_space(o.label); });
  json disc = json::array();
  std::string text = "space: " + r.space + "\nkpq: " + bind_sizes(r.kpq, o).str() +
                     "\nprinted kpq: " + bind_sizes(r.printed_kpq, o).str() +
                     "\ndual kpq: " + bind_sizes(r.dual_kpq, o).str() + "\npartner: " + r.partner.value_or("none") +
                     " (relabel " + spaces::relabel_name(r.relabel) + ")\nprinted partner: " + r.printed_partner +
                     "\nprinted pair reproduced: " + (r.printed_pair_reproduced ? "yes" : "no") + " (relabel " +
                     spaces::relabel_name(r.printed_relabel) + ")\n";
  bool ok = r.pairing_reproduced();
  for (const auto& d : r.discrepancies) {
    bool expected = d.id == spaces::kBdiDiscrepancyId;
    ok = ok && expected;
    disc.push_back({{"id", d.id}, {"status", expected ? "expected-discrepancy" : "fail"}, {"detail", d.detail}});
    text += "discrepancy " + d.id + (expected ? " (expected)" : "") + ": " + d.detail + "\n";
  }
  json j{{"space", r.space},
         {"kpq", kpq_json(bind_sizes(r.kpq, o))},
         {"dual_kpq", kpq_json(bind_sizes(r.dual_kpq, o))},
         {"matched", r.pairing_reproduced()},
         {"partner", r.printed_partner},
         {"discrepancies", disc}};
  return emit(o, j, text, ok);
}

// dims ---------------------------------------------------------------------

int dims_king_cmd(const Options& o) {
  json cases = json::array();
  std::string text;
  bool ok = true;
  for (const auto& l : partitions_up_to(o.cfg.max_weight)) {
    auto r = dims::king_check(l);
    ok = ok && r.holds;
    cases.push_back({{"lambda", l.str()}, {"holds", r.holds}, {"holds_unsigned", r.holds_unsigned},
                     {"dim_C", r.lhs.str()}, {"dim_D_dual_at_minus_N", r.rhs.str()}});
    text += pass_fail(r.holds) + "  " + l.str() + "  " + r.lhs.str() + "  |  " + r.rhs.str() + "\n";
  }
  return emit(o, json{{"cases", cases}}, text, ok);
}

int dims_poly_cmd(const Options& o) {
  auto f = as_usage([&] { return dims::parse_family(o.family.empty() ? "a" : o.family); });
  Partition l = parse_lambda(o.lambda);
  auto d = dims::dim_poly(f, l);
  json j{{"family", dims::family_name(f)}, {"lambda", l.str()}, {"poly", d.poly.str()}};
  return emit(o, j, d.poly.str() + "\n", true);
}

int dims_vogel_cmd(const Options& o) {
  std::vector<dims::VogelFamily> fams;
  if (o.family.empty())
    fams = {dims::VogelFamily::Sp2n, dims::VogelFamily::Sln, dims::VogelFamily::Son};
  else
    fams = {as_usage([&] { return dims::parse_vogel_family(o.family); })};
  json cases = json::array();
  std::string text;
  bool ok = true;
  for (auto f : fams) {
    auto t = dims::vogel_classical(f);
    RatFunc d = dims::vogel_dim(t);
    bool holds = d == dims::classical_dimension(f);
    ok = ok && holds;
    cases.push_back({{"family", dims::vogel_family_name(f)}, {"triple", dims::triple_str(t)}, {"dim", d.str()},
                     {"holds", holds}});
    text += pass_fail(holds) + "  " + dims::vogel_family_name(f) + "  " + dims::triple_str(t) + "  dim = " +
            d.str() + "\n";
  }
  return emit(o, json{{"cases", cases}}, text, ok);
}

int dims_vogel_sp_so_cmd(const Options& o) {
  auto r = dims::vogel_sp_so();
  json j{{"scaled_sp", dims::triple_str(r.scaled_sp)}, {"so_minus_2n", dims::triple_str(r.so_minus)},
         {"holds", r.holds}};
  return emit(o, j,
              pass_fail(r.holds) + "  " + dims::triple_str(r.scaled_sp) + " ~ " + dims::triple_str(r.so_minus) + "\n",
              r.holds);
}

// verify -------------------------------------------------------------------

int verify_all_cmd(const Options& o) {
  auto r = as_usage([&] { return verify::run_verify_all(o.cfg); });
  if (o.json)
    std::cout << verify::to_json(r).dump(2) << "\n";
  else
    verify::print_text(std::cout, r);
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of negative-dimension dualities"};
  app.require_subcommand(1);
  Options o;
  int (*action)(const Options&) = nullptr;

  auto verb = [&](CLI::App* module, const std::string& name, const std::string& help, int (*fn)(const Options&)) {
    auto* c = module->add_subcommand(name, help);
    c->add_flag("--json", o.json, "Machine-readable output");
    c->callback([&action, fn] { action = fn; });
    return c;
  };
  auto weight = [&](CLI::App* c) { c->add_option("--max-weight", o.cfg.max_weight)->check(CLI::PositiveNumber); };

  auto* cas = app.add_subcommand("casimir", "Casimir generating functions")->require_subcommand(1);
  for (auto* c : {verb(cas, "gf", "Generating function C(lambda, z)", casimir_gf_cmd),
                  verb(cas, "coeffs", "Casimir coefficients C_0..C_order", casimir_coeffs_cmd)}) {
    c->add_option("--group", o.group, "u|su|b|c|d");
    c->add_option("--lambda", o.lambda, "Partition, e.g. 2,1");
    c->add_option("--mode", o.mode, "blocks|rows");
    c->add_option("--n", o.n, "Rank for --mode rows");
    c->add_option("--order", o.order, "Highest coefficient");
  }
  {
    auto* c = verb(cas, "verify-duality", "Sp/SO or U duality sweep", casimir_duality_cmd);
    c->add_option("--group", o.group, "sp-so|u");
    weight(c);
  }

  auto* jk = app.add_subcommand("jack", "Jack functions and Macdonald duality")->require_subcommand(1);
  {
    auto* c = verb(jk, "compute", "Monic Jack function P(lambda, k)", jack_compute_cmd);
    c->add_option("--lambda", o.lambda);
    c->add_option("--k", o.k, "'k' (symbolic) or a rational");
    auto* d = verb(jk, "verify-duality", "theta P(lambda, k) = c P(lambda', 1/k)", jack_duality_cmd);
    d->add_option("--lambda", o.lambda);
    weight(d);
    auto* g = verb(jk, "verify-diagram", "phi_N L = L_N phi_N on p_mu", jack_diagram_cmd);
    weight(g);
    g->add_option("--max-n", o.cfg.max_n)->check(CLI::PositiveNumber);
  }

  auto* sp = app.add_subcommand("spaces", "Symmetric spaces and their dual pairs")->require_subcommand(1);
  verb(sp, "table", "Multiplicities, (k,p,q) and dual pairs", spaces_table_cmd);
  {
    auto* c = verb(sp, "dual", "Dual of one space", spaces_dual_cmd);
    c->add_option("--label", o.label, "AI, AIII, BDI, CI, group-A, group-D");
    c->add_option("--m", o.m);
    c->add_option("--n", o.n);
  }

  auto* dm = app.add_subcommand("dims", "Dimension polynomials and Vogel's formula")->require_subcommand(1);
  weight(verb(dm, "king", "King's transposition duality sweep", dims_king_cmd));
  {
    auto* c = verb(dm, "poly", "Dimension polynomial in N", dims_poly_cmd);
    c->add_option("--family", o.family, "a|b|c|d");
    c->add_option("--lambda", o.lambda);
    verb(dm, "vogel", "Vogel dimension of the classical triples", dims_vogel_cmd)
        ->add_option("--family", o.family, "sp2n|sln|son");
    verb(dm, "vogel-sp-so", "sp triple times -2 against so(-2n)", dims_vogel_sp_so_cmd);
  }

  auto* vf = app.add_subcommand("verify", "Run verification suites")->require_subcommand(1);
  {
    auto* c = verb(vf, "all", "Every check, sorted by id", verify_all_cmd);
    weight(c);
    c->add_option("--max-degree", o.cfg.max_degree)->check(CLI::PositiveNumber);
    c->add_option("--max-n", o.cfg.max_n)->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return action(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}

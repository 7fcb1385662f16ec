// Command line front end: load a Coxeter system and an orbit context, answer
// order queries, export interval diagrams, and run the verification suites.
//
// Exit codes: 0 success / verified / true, 1 negative query result,
// 2 usage or parse error, 3 internal invariant violation (a counterexample
// to a structural property; never expected).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "renner/chains.hpp"
#include "renner/coxeter.hpp"
#include "renner/orbit.hpp"
#include "renner/oracle.hpp"
#include "renner/transport.hpp"
#include "renner/verify.hpp"

namespace {

using namespace renner;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

struct Config {
  std::string matrix_path;
  std::string n_list, c_list;
  bool n_given = false, c_given = false;
  std::string sign = "++";
  std::string variant = "auto";
  int cap = 16;
  int jobs = 1;
};

struct Loaded {
  ContextFile file;
  std::unique_ptr<CoxeterSystem> sys;
  GenSet N, C;
};

Loaded load(const Config& cfg, bool need_matrix = true) {
  Loaded out;
  if (cfg.matrix_path.empty()) {
    if (need_matrix) throw ParseError("--matrix is required", 0);
    return out;
  }
  out.file = load_context_file(cfg.matrix_path);
  out.sys = std::make_unique<CoxeterSystem>(out.file.matrix);
  std::vector<int> n = out.file.has_N ? out.file.N : std::vector<int>{};
  std::vector<int> c = out.file.has_C ? out.file.C : std::vector<int>{};
  if (cfg.n_given) n = parse_word(cfg.n_list);
  if (cfg.c_given) c = parse_word(cfg.c_list);
  out.N = GenSet::of(n);
  out.C = GenSet::of(c);
  return out;
}

std::string finiteness_line(const CoxeterSystem& sys, const GenSet& J, int cap) {
  try {
    Elt w0 = sys.longest_element(J, cap);
    auto all = sys.enumerate(J, cap);
    return "finite: " + std::to_string(all.size()) + " elements, longest " + format_elt(w0) +
           " of length " + std::to_string(w0.length());
  } catch (const NotFiniteError&) {
    return "not finite at cap " + std::to_string(cap);
  }
}

int cmd_group(const Config& cfg, const std::string& mode) {
  Loaded l = load(cfg);
  const CoxeterSystem& sys = *l.sys;
  GenSet S = sys.all_generators();
  if (mode == "info") {
    std::cout << "rank: " << sys.rank() << "\n";
    std::cout << "W " << format_genset(S) << ": " << finiteness_line(sys, S, cfg.cap) << "\n";
    std::cout << "N = " << format_genset(l.N) << ", C = " << format_genset(l.C) << "\n";
    std::cout << "W_N: " << finiteness_line(sys, l.N, cfg.cap) << "\n";
    std::cout << "W_{N\\C}: " << finiteness_line(sys, l.N.minus(l.C), cfg.cap) << "\n";
    std::cout << "W_C: " << finiteness_line(sys, l.C, cfg.cap) << "\n";
    return kExitOk;
  }
  if (mode == "elements") {
    for (const Elt& x : sys.enumerate(S, cfg.cap)) std::cout << format_elt(x) << "\n";
    return kExitOk;
  }
  if (mode == "longest") {
    const std::pair<const char*, GenSet> subs[] = {
        {"W", S}, {"W_N", l.N}, {"W_{N\\C}", l.N.minus(l.C)}, {"W_C", l.C}};
    for (const auto& [name, J] : subs) {
      std::cout << name << " " << format_genset(J) << ": ";
      try {
        std::cout << format_elt(sys.longest_element(J, cfg.cap)) << "\n";
      } catch (const NotFiniteError&) {
        std::cout << "not finite at cap " << cfg.cap << "\n";
      }
    }
    return kExitOk;
  }
  throw ParseError("group mode must be info, elements or longest", 0);
}

int cmd_element(const Config& cfg, const std::string& literal) {
  Loaded l = load(cfg);
  const CoxeterSystem& sys = *l.sys;
  bool orbit_mode = literal.find('|') != std::string::npos ||
                    literal.find("raw") != std::string::npos;
  if (!orbit_mode) {
    Elt x = sys.normal_form(parse_word(literal));
    std::cout << "canonical: " << format_elt(x) << "\n";
    std::cout << "length: " << x.length() << "\n";
    std::cout << "left descents: " << format_genset(sys.descents(x, Side::left)) << "\n";
    std::cout << "right descents: " << format_genset(sys.descents(x, Side::right)) << "\n";
    return kExitOk;
  }
  OrbitContext ctx(sys, l.N, l.C);
  OrbitElt x = ctx.parse_orbit(literal);
  std::cout << "normal form III: " << ctx.format_orbit(x) << "\n";
  auto [a1, b1] = ctx.normal_form_I(x);
  auto [a2, b2] = ctx.normal_form_II(x);
  std::cout << "normal form I: " << format_elt(a1) << "|" << format_elt(b1) << "\n";
  std::cout << "normal form II: " << format_elt(a2) << "|" << format_elt(b2) << "\n";
  for (SignPair sign : kAllSigns)
    std::cout << "l" << format_sign(sign) << ": " << ctx.ext_length(x, sign) << "\n";
  std::cout << "involution: " << ctx.format_orbit(ctx.involution(x)) << "\n";
  return kExitOk;
}

int cmd_order(const Config& cfg, const std::string& xs, const std::string& ys) {
  Loaded l = load(cfg);
  OrbitContext ctx(*l.sys, l.N, l.C);
  SignPair sign = parse_sign(cfg.sign);
  Variant variant = parse_variant(cfg.variant);
  OrbitElt x = ctx.parse_orbit(xs), y = ctx.parse_orbit(ys);
  Variant search = (variant == Variant::auto_pick) ? Variant::i_prime : variant;
  std::optional<WitnessPair> w = ctx.ext_leq_witness(x, y, sign, search);
  bool leq = (variant == Variant::auto_pick) ? ctx.ext_leq(x, y, sign) : w.has_value();
  if (leq != w.has_value())
    throw InternalError("auto and witness-search characterizations disagree");
  std::cout << (leq ? "true" : "false") << "\n";
  if (w) {
    std::cout << "u = " << format_elt(w->u) << "\n";
    std::cout << "v = " << format_elt(w->v) << "\n";
  }
  std::cout << "l" << format_sign(sign) << "(x) = " << ctx.ext_length(x, sign) << "\n";
  std::cout << "l" << format_sign(sign) << "(y) = " << ctx.ext_length(y, sign) << "\n";
  return leq ? kExitOk : kExitNegative;
}

int cmd_interval(const Config& cfg, const std::string& xs, const std::string& ys,
                 const std::string& dot_path, bool text, bool show_chains,
                 std::size_t max_chains) {
  Loaded l = load(cfg);
  OrbitContext ctx(*l.sys, l.N, l.C);
  SignPair sign = parse_sign(cfg.sign);
  OrbitElt x = ctx.parse_orbit(xs), y = ctx.parse_orbit(ys);
  try {
    chains::CoverGraph g = chains::interval(ctx, x, y, sign, cfg.cap, cfg.jobs);
    if (!dot_path.empty()) {
      std::string dot = chains::export_dot(ctx, g);
      if (dot_path == "-") {
        std::cout << dot;
      } else {
        std::ofstream out(dot_path);
        if (!out) throw ParseError("cannot write DOT file: " + dot_path, 0);
        out << dot;
      }
    }
    if (text || dot_path.empty()) std::cout << chains::export_text(ctx, g);
    if (show_chains) {
      chains::ChainList ml = chains::maximal_chains(ctx, x, y, sign, cfg.cap, max_chains);
      int d = ctx.ext_length(y, sign) - ctx.ext_length(x, sign);
      std::cout << "maximal chains: " << ml.chains.size() << (ml.truncated ? "+ (truncated)" : "")
                << ", common length " << d << "\n";
      for (const chains::Chain& ch : ml.chains) {
        for (size_t i = 0; i < ch.size(); ++i)
          std::cout << (i ? " -> " : "") << ctx.format_orbit(ch[i]);
        std::cout << "\n";
      }
    }
    return kExitOk;
  } catch (const chains::NotComparableError& e) {
    std::cout << "false\n";
    std::cerr << e.what() << "\n";
    return kExitNegative;
  }
}

int cmd_transport(const Config& cfg, const std::string& as, const std::string& bs,
                  const std::string& ws) {
  Loaded l = load(cfg);
  const CoxeterSystem& sys = *l.sys;
  Elt a = sys.normal_form(parse_word(as));
  Elt b = sys.normal_form(parse_word(bs));
  Elt w = sys.normal_form(parse_word(ws));
  TransportWitnesses t = transport_witnesses(sys, a, b, w);
  std::cout << "w- = " << format_elt(t.w_minus) << "\n";
  std::cout << "w+ = " << format_elt(t.w_plus) << "\n";
  Elt awm = sys.multiply(a, t.w_minus), bwp = sys.multiply(b, t.w_plus);
  bool ok = sys.bruhat_leq(t.w_minus, w) && sys.bruhat_leq(t.w_plus, w) &&
            awm.length() == a.length() - t.w_minus.length() &&
            bwp.length() == b.length() + t.w_plus.length() &&
            sys.bruhat_leq(awm, sys.multiply(b, w)) &&
            sys.bruhat_leq(sys.multiply(a, w), bwp);
  std::cout << "postconditions: " << (ok ? "verified" : "VIOLATED") << "\n";
  return ok ? kExitOk : kExitInvariant;
}

void print_results(const std::vector<verify::CheckResult>& rs, bool* any_fail) {
  for (const auto& r : rs) {
    if (r.skipped)
      std::cout << "[SKIP] " << r.name << ": " << r.detail << "\n";
    else if (r.passed)
      std::cout << "[PASS] " << r.name << " (" << r.cases << " cases)\n";
    else {
      std::cout << "[FAIL] " << r.name << ": " << r.detail << "\n";
      *any_fail = true;
    }
  }
}

int cmd_verify(const Config& cfg, const std::string& suite) {
  Loaded l = load(cfg);
  verify::Options opts;
  opts.slice_cap = cfg.cap;
  opts.group_cap = std::min(cfg.cap, 8);
  opts.w_len_cap = std::min(cfg.cap, 4);
  opts.bfs_cap = std::max(cfg.cap, 24);
  opts.interval_cap = std::max(cfg.cap, 64);
  opts.jobs = cfg.jobs;

  bool any_fail = false;
  bool orbit_suites = suite == "all" || suite == "characterizations" || suite == "zlemma" ||
                      suite == "chains" || suite == "involution" || suite == "w0";
  if (suite == "all" || suite == "transport")
    print_results(verify::transport_checks(*l.sys, opts), &any_fail);
  if (orbit_suites) {
    OrbitContext ctx(*l.sys, l.N, l.C);
    if (suite == "all" || suite == "characterizations")
      print_results(verify::characterizations(ctx, opts), &any_fail);
    if (suite == "all" || suite == "zlemma") print_results(verify::zlemma(ctx, opts), &any_fail);
    if (suite == "all" || suite == "chains")
      print_results(verify::chain_checks(ctx, opts), &any_fail);
    if (suite == "all" || suite == "involution")
      print_results(verify::involution_checks(ctx, opts), &any_fail);
    if (suite == "all" || suite == "w0") print_results(verify::w0_checks(ctx, opts), &any_fail);
  } else if (suite != "transport") {
    throw ParseError("unknown verify suite: " + suite, 0);
  }
  return any_fail ? kExitInvariant : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  if (const char* env = std::getenv("RENNER_ORDER_CAP")) {
    try {
      cfg.cap = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring non-numeric RENNER_ORDER_CAP\n";
    }
  }

  CLI::App app{"Extended Bruhat orders on the W x W orbits of a Coxeter system"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--matrix", cfg.matrix_path, "Coxeter matrix or context file");
  app.add_option("--N", cfg.n_list, "generator indices of N, e.g. \"0 2\"")
      ->each([&cfg](const std::string&) { cfg.n_given = true; });
  app.add_option("--C", cfg.c_list, "generator indices of C")
      ->each([&cfg](const std::string&) { cfg.c_given = true; });
  app.add_option("--sign", cfg.sign, "sign pair: ++, +-, -+ or -- (use --sign=-+ forms)");
  app.add_option("--variant", cfg.variant, "order characterization: i..iv, i'..iv', auto");
  app.add_option("--cap", cfg.cap, "length / slice cap")->check(CLI::PositiveNumber);
  app.add_option("--jobs", cfg.jobs, "worker threads for graph construction")
      ->check(CLI::PositiveNumber);

  std::string group_mode, element_literal, x_lit, y_lit, a_lit, b_lit, w_lit, suite;
  std::string dot_path;
  bool text_flag = false, chains_flag = false;
  std::size_t max_chains = 10000;

  CLI::App* group = app.add_subcommand("group", "group information and element listings");
  group->add_option("mode", group_mode, "info | elements | longest")->required();

  CLI::App* element = app.add_subcommand("element", "inspect an element or orbit literal");
  element->add_option("literal", element_literal, "element or orbit literal")->required();

  CLI::App* order = app.add_subcommand("order", "compare two orbit elements");
  order->add_option("x", x_lit)->required();
  order->add_option("y", y_lit)->required();

  CLI::App* interval = app.add_subcommand("interval", "interval, covers and maximal chains");
  interval->add_option("x", x_lit)->required();
  interval->add_option("y", y_lit)->required();
  interval->add_option("--dot", dot_path, "write DOT to path ('-' for stdout)");
  interval->add_flag("--text", text_flag, "print the text export (default)");
  interval->add_flag("--chains", chains_flag, "list all maximal chains");
  interval->add_option("--max-chains", max_chains, "chain enumeration cap");

  CLI::App* transport = app.add_subcommand("transport", "transport witnesses w-, w+");
  transport->add_option("a", a_lit)->required();
  transport->add_option("b", b_lit)->required();
  transport->add_option("w", w_lit)->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a property suite");
  verify_cmd->add_option("suite", suite,
                         "characterizations | zlemma | chains | involution | w0 | transport | all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (group->parsed()) return cmd_group(cfg, group_mode);
    if (element->parsed()) return cmd_element(cfg, element_literal);
    if (order->parsed()) return cmd_order(cfg, x_lit, y_lit);
    if (interval->parsed())
      return cmd_interval(cfg, x_lit, y_lit, dot_path, text_flag, chains_flag, max_chains);
    if (transport->parsed()) return cmd_transport(cfg, a_lit, b_lit, w_lit);
    if (verify_cmd->parsed()) return cmd_verify(cfg, suite);
  } catch (const InternalError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const ParseError& e) {
    std::cerr << "error";
    if (e.line > 0) std::cerr << " (line " << e.line << ")";
    std::cerr << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const chains::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotFiniteError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

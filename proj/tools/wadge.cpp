// wadge -- command-line front end for the forest-degree library.
//
// Exit codes: 0 success; 1 relation-specific negative (not reducible,
// undetermined value); 2 malformed input or usage; 3 broken internal
// invariant (oracle disagreement, failed soundness fuzz) -- always a bug.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wadge/wadge.hpp"

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw wadge::ParseError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// `--q` accepts a builtin name or a Q-file path; `@path` forces the file.
wadge::QuasiOrder resolve_q(const std::string& spec) {
  if (!spec.empty() && spec[0] == '@')
    return wadge::QuasiOrder::from_text(slurp(spec.substr(1)));
  try {
    return wadge::QuasiOrder::builtin(spec);
  } catch (const wadge::UnknownBuiltin&) {
  }
  if (std::filesystem::exists(spec)) return wadge::QuasiOrder::from_text(slurp(spec));
  throw wadge::UnknownBuiltin("'" + spec + "' is neither a builtin nor a file");
}

// Term arguments are inline literals unless a file of that name exists;
// `@path` forces file semantics.
wadge::Term resolve_term(const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') return wadge::parse_term(slurp(spec.substr(1)));
  if (std::filesystem::exists(spec)) return wadge::parse_term(slurp(spec));
  return wadge::parse_term(spec);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw wadge::Error("cannot write file '" + path + "'");
  out << content;
}

int cmd_compare(const std::string& s_spec, const std::string& t_spec, const std::string& q_spec,
                const std::string& oracle, bool witness) {
  wadge::QuasiOrder q = resolve_q(q_spec);
  wadge::Term s = resolve_term(s_spec);
  wadge::Term t = resolve_term(t_spec);
  wadge::Comparator cmp(q);
  const bool st = cmp.leq(s, t);
  const bool ts = cmp.leq(t, s);

  auto crosscheck = [&](const std::string& name, auto&& fn) {
    const bool ost = fn(q, s, t);
    const bool ots = fn(q, t, s);
    if (ost != st || ots != ts) {
      std::cerr << "oracle disagreement (" << name << "): direct " << st << "/" << ts
                << ", oracle " << ost << "/" << ots << "\n";
      return false;
    }
    return true;
  };
  if (oracle == "hom" || oracle == "all")
    if (!crosscheck("hom", [](const auto& qq, const auto& a, const auto& b) {
          return wadge::hom_leq(qq, a, b);
        }))
      return kExitInternal;
  if (oracle == "game" || oracle == "all")
    if (!crosscheck("game", [](const auto& qq, const auto& a, const auto& b) {
          return wadge::game_leq(qq, a, b);
        }))
      return kExitInternal;

  std::cout << (st && ts ? "=" : st ? "<" : ts ? ">" : "||") << "\n";
  if (witness) {
    auto print_map = [&](const wadge::Term& a, const wadge::Term& b, const char* head) {
      auto w = wadge::hom_witness(q, a, b);
      if (!w) return;
      std::cout << head << "\n";
      for (const auto& [sp, tp] : *w) std::cout << "  " << sp << " => " << tp << "\n";
    };
    print_map(s, t, "witness S => T:");
    print_map(t, s, "witness T => S:");
  }
  return 0;
}

int cmd_canon(const std::string& t_spec, const std::string& q_spec) {
  wadge::QuasiOrder q = resolve_q(q_spec);
  std::cout << wadge::print_term(wadge::canon(q, resolve_term(t_spec))) << "\n";
  return 0;
}

int cmd_selfdual(const std::string& t_spec, const std::string& q_spec) {
  wadge::QuasiOrder q = resolve_q(q_spec);
  const bool sd = !wadge::is_join_irreducible(q, resolve_term(t_spec));
  std::cout << (sd ? "self-dual" : "non-self-dual") << "\n";
  return 0;
}

int cmd_eval(const std::string& t_spec, const std::string& q_spec, const std::string& input) {
  wadge::QuasiOrder q = resolve_q(q_spec);
  wadge::Value v = wadge::eval_omega(q, resolve_term(t_spec), wadge::parse_stream(input));
  if (!v.is_determined()) {
    std::cout << "undetermined\n";
    return kExitNegative;
  }
  std::cout << v.element() << "\n";
  return 0;
}

// Exhaustive short streams over the term's own alphabet (child markers,
// component selectors, pass), lengths ascending, capped at `count`.
std::vector<wadge::FinStream> fuzz_streams(const wadge::Term& s, std::size_t count) {
  std::size_t mc = 0, ms = 0;
  auto walk = [&](auto&& self, const wadge::Term& u) -> void {
    if (u.kind() == wadge::Term::Kind::sum) {
      ms = std::max(ms, u.components().size());
      for (const auto& c : u.components()) self(self, c);
      return;
    }
    mc = std::max(mc, u.tree_children().size());
    for (const auto& c : u.tree_children()) self(self, c);
  };
  walk(walk, s);
  std::vector<std::uint64_t> vals;
  for (std::size_t k = 0; k < mc; ++k) vals.push_back(2 * k + 1);
  for (std::size_t i = 0; i < ms; ++i) vals.push_back(i);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::vector<wadge::Symbol> alphabet{wadge::Symbol::pass()};
  for (auto v : vals) alphabet.push_back(wadge::Symbol::nat(v));

  std::vector<wadge::FinStream> out{{}};
  for (std::size_t start = 0; out.size() < count;) {
    const std::size_t end = out.size();
    if (start == end) break;
    for (std::size_t i = start; i < end && out.size() < count; ++i)
      for (wadge::Symbol a : alphabet) {
        wadge::FinStream x = out[i];
        x.push_back(a);
        out.push_back(std::move(x));
        if (out.size() == count) break;
      }
    start = end;
  }
  return out;
}

int cmd_reduce(const std::string& s_spec, const std::string& t_spec, const std::string& q_spec,
               const std::optional<std::string>& input, bool show_plan, std::size_t fuzz) {
  wadge::QuasiOrder q = resolve_q(q_spec);
  wadge::Term s = resolve_term(s_spec);
  wadge::Term t = resolve_term(t_spec);
  wadge::Plan plan = wadge::synth_reduction(q, s, t);
  if (show_plan) std::cout << wadge::print_plan(plan);
  if (input) {
    wadge::FinStream x = wadge::parse_stream(*input);
    std::cout << wadge::format_stream(wadge::run_transducer(plan, x)) << "\n";
  }
  if (fuzz > 0) {
    std::size_t passed = 0, total = 0;
    for (const wadge::FinStream& x : fuzz_streams(s, fuzz)) {
      ++total;
      wadge::Value vs = wadge::Value::undetermined();
      try {
        vs = wadge::eval_omega(q, s, x);
      } catch (const wadge::InvalidSelector&) {
        ++passed;  // input not meaningful for s: vacuous
        continue;
      }
      if (!vs.is_determined()) {
        ++passed;
        continue;
      }
      wadge::Value vt = wadge::eval_omega(q, t, wadge::run_transducer(plan, x));
      if (vt.is_determined() && q.le(vs.element(), vt.element())) {
        ++passed;
      } else {
        std::cerr << "soundness violation on input '" << wadge::format_stream(x) << "'\n";
      }
    }
    std::cout << "soundness: " << passed << "/" << total << "\n";
    if (passed != total) return kExitInternal;
  }
  return 0;
}

int cmd_enum(const std::string& q_spec, std::size_t max_nodes, const std::string& jumps,
             const std::string& dot_path, const std::string& matrix_path, bool report) {
  wadge::QuasiOrder q = resolve_q(q_spec);
  wadge::EnumOptions opt;
  opt.max_nodes = max_nodes;
  if (!jumps.empty()) {
    std::istringstream ss(jumps);
    std::string tok;
    while (std::getline(ss, tok, ',')) opt.jump_alphas.push_back(wadge::parse_ordinal(tok));
  }
  auto terms = wadge::enum_terms(q, opt);
  for (const auto& t : terms) std::cout << wadge::print_term(t) << "\n";
  if (!dot_path.empty()) write_file(dot_path, wadge::hasse_dot(q, terms));
  if (!matrix_path.empty()) write_file(matrix_path, wadge::comparison_tsv(q, terms));
  if (report) {
    auto rep = wadge::structure_report(q, terms);
    std::cout << "degrees: " << terms.size() << "\n";
    std::cout << "max antichain among irreducibles: " << rep.max_antichain_among_irreducibles
              << "\n";
    std::cout << "antichain witness:";
    for (const auto& t : rep.antichain_witness) std::cout << " " << wadge::print_term(t);
    std::cout << "\n";
    std::cout << "semi-linearly ordered: " << (rep.sl_ordered ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_ord_cmp(const std::string& a, const std::string& b) {
  auto c = wadge::Ordinal::cmp(wadge::parse_ordinal(a), wadge::parse_ordinal(b));
  std::cout << (c == std::strong_ordering::less      ? "<"
                : c == std::strong_ordering::greater ? ">"
                                                     : "=")
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic calculator for degrees of labeled-forest terms"};
  app.require_subcommand(1);

  std::string s_spec, t_spec, q_spec, oracle, input, jumps, dot_path, matrix_path, ord_a, ord_b;
  std::optional<std::string> reduce_input;
  bool witness = false, show_plan = false, report = false;
  std::size_t fuzz = 0, max_nodes = 3;

  auto* compare = app.add_subcommand("compare", "compare two terms: prints <, >, =, or ||");
  compare->add_option("S", s_spec)->required();
  compare->add_option("T", t_spec)->required();
  compare->add_option("--q", q_spec, "quasi-order: builtin or Q-file")->required();
  compare->add_option("--oracle", oracle, "cross-check with hom|game|all")
      ->check(CLI::IsMember({"hom", "game", "all"}));
  compare->add_flag("--witness", witness, "print hom maps for the directions that hold");

  auto* canon = app.add_subcommand("canon", "print the canonical form of a term");
  canon->add_option("T", t_spec)->required();
  canon->add_option("--q", q_spec)->required();

  auto* selfdual = app.add_subcommand("selfdual", "report self-duality of a term's degree");
  selfdual->add_option("T", t_spec)->required();
  selfdual->add_option("--q", q_spec)->required();

  auto* eval = app.add_subcommand("eval", "evaluate a term on a finite stream");
  eval->add_option("T", t_spec)->required();
  eval->add_option("--q", q_spec)->required();
  eval->add_option("--input", input, "stream literal, e.g. 2,p,4")->required();

  auto* reduce = app.add_subcommand("reduce", "synthesize a reduction transducer");
  reduce->add_option("S", s_spec)->required();
  reduce->add_option("T", t_spec)->required();
  reduce->add_option("--q", q_spec)->required();
  reduce->add_option("--input", reduce_input, "run the transducer on this stream");
  reduce->add_flag("--show-plan", show_plan, "print the synthesized plan");
  reduce->add_option("--fuzz", fuzz, "check soundness on N generated inputs");

  auto* enum_cmd = app.add_subcommand("enum", "enumerate canonical terms");
  enum_cmd->add_option("--q", q_spec)->required();
  enum_cmd->add_option("--max-nodes", max_nodes, "size bound")->required();
  enum_cmd->add_option("--jumps", jumps, "comma-separated jump heights, e.g. 0,1,w");
  enum_cmd->add_option("--dot", dot_path, "write the covering relation as DOT");
  enum_cmd->add_option("--matrix", matrix_path, "write the pairwise comparison TSV");
  enum_cmd->add_flag("--report", report, "print the structure report");

  auto* ord = app.add_subcommand("ord-cmp", "compare two ordinal notations");
  ord->add_option("a", ord_a)->required();
  ord->add_option("b", ord_b)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (compare->parsed()) return cmd_compare(s_spec, t_spec, q_spec, oracle, witness);
    if (canon->parsed()) return cmd_canon(t_spec, q_spec);
    if (selfdual->parsed()) return cmd_selfdual(t_spec, q_spec);
    if (eval->parsed()) return cmd_eval(t_spec, q_spec, input);
    if (reduce->parsed()) return cmd_reduce(s_spec, t_spec, q_spec, reduce_input, show_plan, fuzz);
    if (enum_cmd->parsed())
      return cmd_enum(q_spec, max_nodes, jumps, dot_path, matrix_path, report);
    if (ord->parsed()) return cmd_ord_cmp(ord_a, ord_b);
  } catch (const wadge::NotReducible& e) {
    std::cerr << "not reducible: " << e.what() << "\n";
    return kExitNegative;
  } catch (const wadge::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const wadge::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

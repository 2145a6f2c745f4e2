#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "quosyn/position.hpp"
#include "quosyn/suite.hpp"

namespace quosyn::cli {

namespace {

int run_check(const std::string& instance, std::uint64_t trials,
              std::uint64_t seed, std::size_t max_size, bool json,
              std::ostream& out) {
  std::vector<std::string> ids;
  if (instance == "all") {
    ids = harness::instance_ids();
  } else {
    ids.push_back(instance);
  }
  bool all_ok = true;
  bool first = true;
  if (json && ids.size() > 1) out << "[\n";
  for (const auto& id : ids) {
    harness::gen_config cfg{id, max_size, seed, trials};
    check_report rep = harness::run_suite(cfg);
    all_ok = all_ok && rep.all_passed();
    if (json) {
      if (!first) out << ",\n";
      out << rep.to_json();
    } else {
      out << rep.to_text();
    }
    first = false;
  }
  if (json && ids.size() > 1) out << "\n]";
  if (json) out << "\n";
  return all_ok ? 0 : 1;
}

void run_repl(std::uint64_t fuel, std::istream& in, std::ostream& out) {
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      lisp::sexpr e = lisp::read(line);
      auto v = lisp::interp_backquote(e, fuel);
      if (v) {
        out << lisp::show(*v) << "\n";
      } else {
        out << "\xE2\x8A\xA5\n";
      }
    } catch (const parse_error& pe) {
      out << "read error: " << pe.what() << "\n";
    }
  }
}

std::string position_label(const position& p) {
  return p.is_root() ? std::string("root") : p.text();
}

int run_qq(const std::string& text, std::uint64_t fuel, std::ostream& out) {
  lisp::sexpr e = lisp::read(text);
  marked_expr<lisp::sexpr> m = lisp::expand_backquote(e);
  out << "base:       " << lisp::show(m.base) << "\n";
  for (const auto& [p, s] : m.marks) {
    out << "mark " << position_label(p) << ": " << lisp::show(s) << "\n";
  }
  lisp::framework f(fuel);
  auto spliced = splice(f, m);
  if (!spliced) {
    out << "splice:     undefined\n";
    return 0;
  }
  out << "splice:     " << lisp::show(*spliced) << "\n";
  auto qq = quasiquote(f, m);
  out << "quasiquote: " << lisp::show(*qq) << "\n";
  auto v = lisp::interp(*qq, fuel);
  out << "value:      " << (v ? lisp::show(*v) : "\xE2\x8A\xA5") << "\n";
  return 0;
}

}  // namespace

int dispatch(std::vector<std::string> args, std::istream& in,
             std::ostream& out, std::ostream& err) {
  CLI::App app{"quotation, evaluation, and quasiquotation over interpreted languages"};
  app.name("quosyn");
  app.require_subcommand(1);

  // check
  std::string check_instance;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::size_t max_size = 20;
  bool json = false;
  auto* check = app.add_subcommand("check", "run an instance's axiom suite");
  check->add_option("instance", check_instance,
                    "prop | strlang | goedel | goedel-total | goedel-quote | "
                    "minilisp | lambda | ring | all")
      ->required();
  check->add_option("--trials", trials, "generated inputs per property");
  check->add_option("--seed", seed, "suite seed");
  check->add_option("--max-size", max_size, "node-count bound per input");
  check->add_flag("--json", json, "emit the report as JSON");

  // repl
  std::uint64_t fuel = lisp::default_fuel;
  auto* repl = app.add_subcommand(
      "repl", "read S-expressions line by line and print their values");
  repl->add_option("--fuel", fuel, "interpreter step budget");

  // prop eval
  std::string prop_formula;
  std::string assign_text;
  auto* prop_cmd = app.add_subcommand("prop", "propositional-logic instance");
  prop_cmd->require_subcommand(1);
  auto* prop_eval =
      prop_cmd->add_subcommand("eval", "parse, evaluate/simplify, print");
  prop_eval->add_option("formula", prop_formula, "formula text")->required();
  prop_eval->add_option("--assign", assign_text, "assignment, e.g. p=T,q=F");

  // str quote / eval
  std::string str_arg;
  auto* str_cmd = app.add_subcommand("str", "expressions-as-strings instance");
  str_cmd->require_subcommand(1);
  auto* str_quote =
      str_cmd->add_subcommand("quote", "print the cons chain of an expression");
  str_quote->add_option("expr", str_arg, "object expression")->required();
  auto* str_eval = str_cmd->add_subcommand(
      "eval", "evaluate a String-sorted term back to an expression");
  str_eval->add_option("term", str_arg, "term text")->required();

  // goedel encode / decode / table
  std::string goedel_arg;
  auto* goedel_cmd = app.add_subcommand("goedel", "Goedel-numbering instance");
  goedel_cmd->require_subcommand(1);
  auto* g_encode =
      goedel_cmd->add_subcommand("encode", "Goedel number of an expression");
  g_encode->add_option("expr", goedel_arg, "expression text")->required();
  auto* g_decode =
      goedel_cmd->add_subcommand("decode", "expression with a given number");
  g_decode->add_option("number", goedel_arg, "decimal code")->required();
  goedel_cmd->add_subcommand("table", "dump the symbol table");

  // lambda nf / rep / selfinterp
  std::string lambda_arg;
  std::uint64_t lambda_fuel = lam::default_fuel;
  auto* lambda_cmd = app.add_subcommand("lambda", "Mogensen instance");
  lambda_cmd->require_subcommand(1);
  auto* l_nf = lambda_cmd->add_subcommand("nf", "beta normal form");
  l_nf->add_option("term", lambda_arg, "lambda term")->required();
  l_nf->add_option("--fuel", lambda_fuel, "beta-step budget");
  auto* l_rep = lambda_cmd->add_subcommand("rep", "representation <term>");
  l_rep->add_option("term", lambda_arg, "lambda term")->required();
  auto* l_si = lambda_cmd->add_subcommand(
      "selfinterp", "normal form of E <term> via the self-interpreter");
  l_si->add_option("term", lambda_arg, "lambda term")->required();
  l_si->add_option("--fuel", lambda_fuel, "beta-step budget");

  // ring normalize
  std::string ring_arg;
  auto* ring_cmd = app.add_subcommand("ring", "ring-normalization instance");
  ring_cmd->require_subcommand(1);
  auto* r_norm = ring_cmd->add_subcommand(
      "normalize", "ordered monomial sum of a ring expression");
  r_norm->add_option("expr", ring_arg, "infix expression over x0..xN")
      ->required();

  // qq
  std::string qq_arg;
  std::uint64_t qq_fuel = lisp::default_fuel;
  auto* qq_cmd = app.add_subcommand(
      "qq", "expand a backquote into a marked expression and quasiquote it");
  qq_cmd->add_option("expr", qq_arg, "backquoted S-expression")->required();
  qq_cmd->add_option("--fuel", qq_fuel, "interpreter step budget");

  try {
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) {
      const auto& ids = harness::instance_ids();
      if (check_instance != "all" &&
          std::find(ids.begin(), ids.end(), check_instance) == ids.end()) {
        err << "usage error: unknown instance '" << check_instance << "'\n";
        return 2;
      }
      return run_check(check_instance, trials, seed, max_size, json, out);
    }
    if (repl->parsed()) {
      run_repl(fuel, in, out);
      return 0;
    }
    if (prop_eval->parsed()) {
      prop::assignment phi;
      if (!assign_text.empty()) phi = prop::assignment::parse_text(assign_text);
      out << prop::interpret(prop_formula, phi) << "\n";
      return 0;
    }
    if (str_quote->parsed()) {
      auto e = strlang::parse_object(str_arg);
      if (!e) {
        err << "input error: not an object-language expression\n";
        return 2;
      }
      out << strlang::term_text(strlang::quote_str(*e)) << "\n";
      return 0;
    }
    if (str_eval->parsed()) {
      strlang::str_term t = strlang::parse_term(str_arg);
      auto e = strlang::eval_str(t);
      if (e) {
        out << strlang::framework{}.expr_text(*e) << "\n";
      } else {
        out << "undefined\n";
      }
      return 0;
    }
    if (g_encode->parsed()) {
      out << goedel::encode(goedel::parse_expr(goedel_arg)).str() << "\n";
      return 0;
    }
    if (g_decode->parsed()) {
      if (goedel_arg.empty() ||
          goedel_arg.find_first_not_of("0123456789") != std::string::npos) {
        err << "input error: expected a decimal natural number\n";
        return 2;
      }
      auto e = goedel::decode(goedel::bignat(goedel_arg));
      out << (e ? goedel::spell(*e) : "undefined") << "\n";
      return 0;
    }
    if (goedel_cmd->parsed() && goedel_cmd->get_subcommands().size() == 1 &&
        goedel_cmd->get_subcommands()[0]->get_name() == "table") {
      const std::string& table = goedel::symbol_table();
      for (std::size_t i = 0; i < table.size(); ++i) {
        out << (i + 1) << "  '" << table[i] << "'\n";
      }
      return 0;
    }
    if (l_nf->parsed()) {
      auto nf = lam::beta_nf(lam::parse_term(lambda_arg), lambda_fuel);
      out << (nf ? lam::show(nf->t) : "undefined") << "\n";
      return 0;
    }
    if (l_rep->parsed()) {
      out << lam::show(lam::rep(lam::parse_term(lambda_arg))) << "\n";
      return 0;
    }
    if (l_si->parsed()) {
      auto nf = lam::run_self_interp(lam::parse_term(lambda_arg), lambda_fuel);
      out << (nf ? lam::show(nf->t) : "undefined") << "\n";
      return 0;
    }
    if (r_norm->parsed()) {
      out << ring::show(ring::normalize(ring::pquote(ring::parse_ring(ring_arg))))
          << "\n";
      return 0;
    }
    if (qq_cmd->parsed()) {
      return run_qq(qq_arg, qq_fuel, out);
    }
  } catch (const parse_error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const input_error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const membership_error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  }
  err << "usage error: no command selected\n";
  return 2;
}

}  // namespace quosyn::cli

// Command-line surface.  Exit codes: 0 for decided queries, 2 for verdicts
// that exhausted a bound, 1 for usage errors.

#pragma once

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "opow/automata.hpp"
#include "opow/catalog.hpp"
#include "opow/mupi.hpp"
#include "opow/opower.hpp"
#include "opow/oracle.hpp"
#include "opow/words.hpp"

namespace opow::cli {

inline const std::vector<std::pair<std::string, std::string>>& ascii_aliases() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"~", "↢"}, {"al", "α"}, {"be", "β"}};
  return table;
}

// "~" -> eraser, "~3" -> indexed eraser, "al"/"be" -> alpha/beta.
inline std::string ascii_symbol_to_utf8(const std::string& tok) {
  for (const auto& [a, u] : ascii_aliases())
    if (tok == a)
      return u;
  if (tok.size() >= 2 && tok[0] == '~' &&
      tok.find_first_not_of("0123456789", 1) == std::string::npos)
    return "↢" + tok.substr(1);
  return tok;
}

inline std::string utf8_symbol_to_ascii(const std::string& sym) {
  for (const auto& [a, u] : ascii_aliases())
    if (sym == u)
      return a;
  if (sym.rfind("↢", 0) == 0)
    return "~" + sym.substr(std::string("↢").size());
  return sym;
}

inline word read_word(const alphabet& a, const std::string& text, bool ascii) {
  if (!ascii)
    return parse_word(a, text);
  if (text == "@")
    return word::empty(a);
  std::string utf8;
  if (text.find('.') != std::string::npos) {
    bool first = true;
    for (const auto& tok : detail::split_on(text, '.')) {
      if (!first)
        utf8 += '.';
      first = false;
      utf8 += ascii_symbol_to_utf8(tok);
    }
  } else {
    for (char c : text)
      utf8 += c == '~' ? std::string("↢") : std::string(1, c);
  }
  return parse_word(a, utf8);
}

inline std::string show_word(const word& w, bool ascii) {
  if (!ascii)
    return format_word(w);
  if (w.empty_word())
    return "@";
  std::vector<std::string> toks;
  bool juxta = true;
  for (std::size_t i = 0; i < w.size(); ++i) {
    toks.push_back(utf8_symbol_to_ascii(w.symbol_at(i)));
    juxta = juxta && toks.back().size() == 1;
  }
  std::string out;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (i && !juxta)
      out += '.';
    out += toks[i];
  }
  return out;
}

inline lasso_word read_lasso(const alphabet& a, const std::string& text, bool ascii) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("lasso must be written \"u:v\"");
  return lasso_word(read_word(a, text.substr(0, colon), ascii),
                    read_word(a, text.substr(colon + 1), ascii));
}

inline std::string registry_listing() {
  std::string s = "available languages:";
  for (const auto& e : catalog_entries())
    s += " " + e.name;
  s += " pn:<k>";
  return s;
}

inline language need_language(const std::string& name) {
  auto l = find_language(name);
  if (!l)
    throw CLI::ValidationError("unknown language '" + name + "'; " + registry_listing());
  return *l;
}

inline pda machine_by_name(const std::string& name) {
  if (name == "l3" || name == "automaton:l3")
    return automaton_l3(chars("ab"));
  if (name == "d" || name == "automaton:d")
    return automaton_d();
  if (name == "p2" || name == "automaton:p2")
    return automaton_p2();
  if (name == "gw" || name == "automaton:gw")
    return automaton_gw();
  throw CLI::ValidationError("unknown machine '" + name + "'; machines: l3, d, p2, gw");
}

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"laboratory for omega-powers of finitary languages"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_mode = false;
  bool ascii = false;
  app.add_flag("--json", json_mode, "machine-readable output");
  app.add_flag("--ascii", ascii, "ASCII symbol names (~, ~1, al, be)");

  int exit_code = 0;

  // member <lang> <word>
  std::string mem_lang, mem_word;
  auto* member = app.add_subcommand("member", "decide membership of a finite word");
  member->fallthrough();
  member->add_option("lang", mem_lang)->required();
  member->add_option("word", mem_word)->required();
  member->callback([&] {
    language L = need_language(mem_lang);
    word w = read_word(L.alpha, mem_word, ascii);
    bool verdict = L.decide(w);
    if (json_mode)
      out << nlohmann::json{{"verb", "member"},
                            {"language", mem_lang},
                            {"word", show_word(w, ascii)},
                            {"member", verdict}}
          << "\n";
    else
      out << (verdict ? "true" : "false") << "\n";
  });

  // omega-member --lang L --lasso u:v --bound B [--escalate]
  std::string om_lang, om_lasso;
  std::size_t om_bound = 8;
  bool om_escalate = false;
  auto* omega = app.add_subcommand("omega-member", "decide lasso membership in L^inf");
  omega->fallthrough();
  omega->add_option("--lang", om_lang)->required();
  omega->add_option("--lasso", om_lasso)->required();
  omega->add_option("--bound", om_bound, "block-length bound");
  omega->add_flag("--escalate", om_escalate, "try bounds 1,2,4,... up to --bound");
  omega->callback([&] {
    language L = need_language(om_lang);
    lasso_word x = read_lasso(L.alpha, om_lasso, ascii);
    std::optional<factorization_witness> witness;
    std::size_t bound = om_bound;
    if (om_escalate) {
      auto r = omega_member_escalating(L, x, om_bound);
      witness = r.witness;
      bound = r.bound_reached;
    } else {
      witness = omega_member_bounded(L, x, om_bound);
    }
    nlohmann::json j{{"verb", "omega-member"},
                     {"language", om_lang},
                     {"lasso", om_lasso},
                     {"bound", bound},
                     {"member", witness.has_value()}};
    if (witness) {
      std::vector<std::size_t> lead{0}, cyc;
      std::size_t pos = 0;
      for (const auto& e : witness->lead_in)
        lead.push_back(pos += e.length);
      for (const auto& e : witness->cycle)
        cyc.push_back(e.from);
      j["lead_cuts"] = lead;
      j["cycle_nodes"] = cyc;
      if (json_mode) {
        out << j << "\n";
      } else {
        out << "member (bound " << bound << "): cut@";
        for (std::size_t i = 0; i < lead.size(); ++i)
          out << (i ? "," : "") << lead[i];
        out << " cycle=[";
        for (std::size_t i = 0; i < cyc.size(); ++i)
          out << (i ? "," : "") << cyc[i];
        out << "]\n";
      }
    } else {
      if (json_mode)
        out << j << "\n";
      else
        out << "no <=" << om_bound << "-block factorization\n";
      exit_code = 2;
    }
  });

  // enumerate <lang> --max-len N
  std::string en_lang;
  std::size_t en_max = 4;
  auto* enumerate = app.add_subcommand("enumerate", "list member words up to a length");
  enumerate->fallthrough();
  enumerate->add_option("lang", en_lang)->required();
  enumerate->add_option("--max-len", en_max);
  enumerate->callback([&] {
    language L = need_language(en_lang);
    nlohmann::json arr = nlohmann::json::array();
    for_each_word(L.alpha, en_max, [&](const word& w) {
      if (!L.decide(w))
        return;
      if (json_mode)
        arr.push_back(show_word(w, ascii));
      else
        out << show_word(w, ascii) << "\n";
    });
    if (json_mode)
      out << nlohmann::json{{"verb", "enumerate"}, {"language", en_lang}, {"words", arr}} << "\n";
  });

  // crosscheck <langA> <langB> --max-len N [--report text|json]
  std::string cc_a, cc_b, cc_report = "text";
  std::size_t cc_max = 6;
  auto* cc = app.add_subcommand("crosscheck", "exhaustively compare two languages");
  cc->fallthrough();
  cc->add_option("langA", cc_a)->required();
  cc->add_option("langB", cc_b)->required();
  cc->add_option("--max-len", cc_max);
  cc->add_option("--report", cc_report)->check(CLI::IsMember({"text", "json"}));
  cc->callback([&] {
    language A = need_language(cc_a), B = need_language(cc_b);
    auto diffs = crosscheck(A, B, cc_max);
    std::size_t examined = 0;
    for_each_word(A.alpha, cc_max, [&](const word&) { ++examined; });
    if (cc_report == "json" || json_mode) {
      nlohmann::json jd = nlohmann::json::array();
      for (const auto& d : diffs)
        jd.push_back({{"word", show_word(d.w, ascii)},
                      {"left", d.left_verdict},
                      {"right", d.right_verdict}});
      out << nlohmann::json{{"verb", "crosscheck"},
                            {"left", cc_a},
                            {"right", cc_b},
                            {"max_len", cc_max},
                            {"examined", examined},
                            {"disagreements", jd}}
          << "\n";
    } else if (diffs.empty()) {
      out << "agree on all " << examined << " words of length <= " << cc_max << "\n";
    } else {
      for (const auto& d : diffs)
        out << "disagree on \"" << show_word(d.w, ascii) << "\": " << cc_a << "="
            << (d.left_verdict ? "true" : "false") << " " << cc_b << "="
            << (d.right_verdict ? "true" : "false") << "\n";
    }
  });

  // construct (automaton:<name> | <lang>)
  std::string con_target;
  auto* construct = app.add_subcommand("construct", "emit a machine or language description");
  construct->fallthrough();
  construct->add_option("target", con_target)->required();
  construct->callback([&] {
    if (con_target.rfind("automaton:", 0) == 0) {
      out << pda_to_json(machine_by_name(con_target)).dump(2) << "\n";
      return;
    }
    language L = need_language(con_target);
    out << nlohmann::json{{"verb", "construct"},
                          {"language", con_target},
                          {"alphabet", L.alpha.symbols()}}
               .dump(2)
        << "\n";
  });

  // export (automaton:<name> | --file f.json) [--dot | --json-format]
  std::string ex_target, ex_file;
  bool ex_dot = false;
  auto* exp = app.add_subcommand("export", "serialize a machine as JSON or DOT");
  exp->fallthrough();
  exp->add_option("target", ex_target, "automaton:<name>");
  exp->add_option("--file", ex_file, "read the machine from a JSON file");
  exp->add_flag("--dot", ex_dot, "emit DOT instead of JSON");
  exp->callback([&] {
    pda m = [&] {
      if (!ex_file.empty()) {
        std::ifstream in(ex_file);
        if (!in)
          throw CLI::ValidationError("cannot open '" + ex_file + "'");
        nlohmann::json j;
        in >> j;
        return pda_from_json(j);
      }
      if (ex_target.empty())
        throw CLI::ValidationError("export needs automaton:<name> or --file");
      return machine_by_name(ex_target);
    }();
    if (ex_dot)
      out << pda_to_dot(m);
    else
      out << pda_to_json(m).dump(2) << "\n";
  });

  // mupi <op> ...
  auto* mupi = app.add_subcommand("mupi", "coded transition-system combinatorics");
  mupi->fallthrough();
  mupi->require_subcommand(1);
  std::string mp_word, mp_tree = "full", mp_final = "left";
  std::size_t mp_j = 0;
  std::uint64_t mp_n = 0;
  auto tree_of = [&]() {
    if (mp_tree == "full")
      return tree_full();
    if (mp_tree == "diag")
      return tree_diag();
    throw CLI::ValidationError("unknown tree '" + mp_tree + "'; use full or diag");
  };
  auto conv_of = [&]() {
    return mp_final == "right" ? final_convention::right_component
                               : final_convention::left_component;
  };

  auto* pi_cmd = mupi->add_subcommand("pi-member", "membership in pi");
  pi_cmd->fallthrough();
  pi_cmd->add_option("word", mp_word)->required();
  pi_cmd->add_option("--tree", mp_tree)->check(CLI::IsMember({"full", "diag"}));
  pi_cmd->add_option("--final", mp_final)->check(CLI::IsMember({"left", "right"}));
  pi_cmd->callback([&] {
    word w = read_word(digits(4), mp_word, ascii);
    bool verdict = pi_member(w, tree_of(), conv_of());
    if (json_mode)
      out << nlohmann::json{{"verb", "pi-member"}, {"word", mp_word}, {"member", verdict}}
          << "\n";
    else
      out << (verdict ? "true" : "false") << "\n";
  });

  auto* a_cmd = mupi->add_subcommand("a-member", "membership in mu0 | mu1 | pi");
  a_cmd->fallthrough();
  a_cmd->add_option("word", mp_word)->required();
  a_cmd->add_option("--tree", mp_tree)->check(CLI::IsMember({"full", "diag"}));
  a_cmd->add_option("--final", mp_final)->check(CLI::IsMember({"left", "right"}));
  a_cmd->callback([&] {
    word w = read_word(digits(4), mp_word, ascii);
    nlohmann::json j{{"verb", "a-member"},
                     {"word", mp_word},
                     {"mu0", mu0_member(w)},
                     {"mu1", mu1_member(w)},
                     {"pi", pi_member(w, tree_of(), conv_of())}};
    j["member"] = j["mu0"].get<bool>() || j["mu1"].get<bool>() || j["pi"].get<bool>();
    if (json_mode)
      out << j << "\n";
    else
      out << (j["member"].get<bool>() ? "true" : "false") << "\n";
  });

  auto* mj_cmd = mupi->add_subcommand("m-index", "the milestone M_j");
  mj_cmd->fallthrough();
  mj_cmd->add_option("j", mp_j)->required();
  mj_cmd->callback([&] {
    if (json_mode)
      out << nlohmann::json{{"verb", "m-index"}, {"j", mp_j}, {"value", m_index(mp_j)}} << "\n";
    else
      out << m_index(mp_j) << "\n";
  });

  auto* st_cmd = mupi->add_subcommand("state", "the n-th state pair");
  st_cmd->fallthrough();
  st_cmd->add_option("n", mp_n)->required();
  st_cmd->callback([&] {
    state_pair q = state_pair_at(mp_n);
    if (json_mode)
      out << nlohmann::json{{"verb", "state"},
                            {"n", mp_n},
                            {"left", format_word(q.left)},
                            {"right", format_word(q.right)}}
          << "\n";
    else
      out << "(" << format_word(q.left) << ", " << format_word(q.right) << ")\n";
  });

  auto* runs_cmd = mupi->add_subcommand("runs", "all run prefixes on a binary input");
  runs_cmd->fallthrough();
  runs_cmd->add_option("input", mp_word)->required();
  runs_cmd->add_option("--tree", mp_tree)->check(CLI::IsMember({"full", "diag"}));
  runs_cmd->add_option("--final", mp_final)->check(CLI::IsMember({"left", "right"}));
  runs_cmd->callback([&] {
    word input = read_word(digits(2), mp_word, ascii);
    auto runs = run_prefixes(input);
    tree_predicate R = tree_of();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : runs) {
      if (json_mode) {
        arr.push_back(r);
      } else {
        for (std::size_t i = 0; i < r.size(); ++i)
          out << (i ? " -> " : "") << r[i];
        out << (is_final(state_pair_at(r.back()), R, conv_of()) ? "  (final)" : "") << "\n";
      }
    }
    if (json_mode)
      out << nlohmann::json{{"verb", "runs"}, {"input", mp_word}, {"runs", arr}} << "\n";
  });

  // catalog list
  auto* cat = app.add_subcommand("catalog", "the language registry");
  cat->fallthrough();
  auto* cat_list = cat->add_subcommand("list", "list registered languages");
  cat_list->fallthrough();
  cat->require_subcommand(1);
  cat_list->callback([&] {
    if (json_mode) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& e : catalog_entries())
        arr.push_back({{"name", e.name}, {"alphabet", e.lang.alpha.symbols()}, {"about", e.about}});
      out << nlohmann::json{{"verb", "catalog"}, {"languages", arr}} << "\n";
      return;
    }
    for (const auto& e : catalog_entries()) {
      out << e.name << "  over {";
      const auto& syms = e.lang.alpha.symbols();
      for (std::size_t i = 0; i < syms.size(); ++i)
        out << (i ? "," : "") << (ascii ? utf8_symbol_to_ascii(syms[i]) : syms[i]);
      out << "}  " << e.about << "\n";
    }
    out << "pn:<k>  over {0,1} plus k-2 erasers  iterated eraser lift of p2\n";
  });

  std::vector<const char*> argv;
  std::string prog = "opow";
  argv.push_back(prog.c_str());
  for (const auto& a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace opow::cli

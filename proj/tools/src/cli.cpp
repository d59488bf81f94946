// Copyright 2026 The scoringcg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "scoringcg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "scoringcg/comparison.hpp"
#include "scoringcg/errors.hpp"
#include "scoringcg/konane.hpp"
#include "scoringcg/notation.hpp"
#include "scoringcg/scores.hpp"
#include "scoringcg/universes.hpp"

namespace scoringcg::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

std::vector<Score> parse_score_list(const std::string& text) {
  std::vector<Score> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    out.push_back(Score::parse(item));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open board file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json envelope(std::string_view command) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

// Shared printing for boolean answers.
int answer(std::ostream& out, bool as_json, json j, bool value) {
  if (as_json) {
    j["result"] = value;
    out << j.dump() << '\n';
  } else {
    out << (value ? "true" : "false") << '\n';
  }
  return value ? kOk : kFalse;
}

struct PoolOptions {
  unsigned day = 1;
  std::string scores = "-1,0,1";
  std::string universe;
  std::size_t max_options = 0;
  std::size_t max_pool = UniverseFilter{}.max_pool;

  void attach(CLI::App* cmd, std::string_view day_flag, std::string_view default_universe) {
    universe = default_universe;
    cmd->add_option(std::string(day_flag), day, "Largest birthday to enumerate")
        ->capture_default_str();
    cmd->add_option("--scores", scores, "Comma-separated atom scores")->capture_default_str();
    cmd->add_option("--universe", universe, "all, guaranteed, stable, dicot or stewart")
        ->capture_default_str();
    cmd->add_option("--max-options", max_options, "Options per side (0 = unbounded)")
        ->capture_default_str();
    cmd->add_option("--max-pool", max_pool, "Abort when a day would exceed this many games")
        ->capture_default_str();
  }

  UniverseFilter filter() const {
    UniverseFilter f;
    auto pred = parse_predicate(universe);
    if (!pred) throw std::invalid_argument("unknown universe '" + universe + "'");
    f.predicate = *pred;
    f.score_set = parse_score_list(scores);
    f.max_day = day;
    f.day_ceiling = std::max(f.day_ceiling, day);
    f.max_options = max_options;
    f.max_pool = max_pool;
    return f;
  }
};

std::string witness_text(const Witness& w) {
  std::string k(score_kind_name(w.kind));
  return "witness X=" + format_scoring(w.x) + " " + k + "(G+X)=" + w.lhs_value.to_string() +
         " < " + k + "(H+X)=" + w.rhs_value.to_string();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scoring-play combinatorial game toolkit", "scoringcg"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Structured output (see docs/cli-json.md)");

  std::function<int()> action;
  std::vector<std::string> terms;

  auto game_args = [&](CLI::App* cmd) {
    cmd->add_option("game", terms, "Game expression; extra arguments are joined by spaces")
        ->required()
        ->expected(1, -1);
  };

  CLI::App* score_cmd = app.add_subcommand("score", "Left- and Right-scores");
  game_args(score_cmd);
  score_cmd->callback([&] {
    action = [&] {
      Game g = parse_scoring(join(terms));
      ScorePair s = scores(g);
      if (as_json) {
        json j = envelope("score");
        j["game"] = format_scoring(g);
        j["ls"] = s.ls.to_string();
        j["rs"] = s.rs.to_string();
        out << j.dump() << '\n';
      } else {
        out << "Ls=" << s.ls << " Rs=" << s.rs << '\n';
      }
      return kOk;
    };
  });

  CLI::App* sum_cmd = app.add_subcommand("sum", "Print the expanded game term");
  game_args(sum_cmd);
  sum_cmd->callback([&] {
    action = [&] {
      Game g = parse_scoring(join(terms));
      if (as_json) {
        json j = envelope("sum");
        j["value"] = format_scoring(g);
        j["birthday"] = g.birthday();
        out << j.dump() << '\n';
      } else {
        out << format_scoring(g) << '\n';
      }
      return kOk;
    };
  });

  CLI::App* pass_cmd = app.add_subcommand("passcore", "Pass-allowed scores");
  game_args(pass_cmd);
  pass_cmd->callback([&] {
    action = [&] {
      Game g = parse_scoring(join(terms));
      PassAllowedScore l = pass_allowed_left(g);
      PassAllowedScore r = pass_allowed_right(g);
      if (as_json) {
        json j = envelope("passcore");
        j["game"] = format_scoring(g);
        j["ls_pass"] = l.value.to_string();
        j["ls_pass_waiting_moves"] = l.waiting_moves;
        j["rs_pass"] = r.value.to_string();
        j["rs_pass_waiting_moves"] = r.waiting_moves;
        out << j.dump() << '\n';
      } else {
        out << "LsPass=" << l.value << " (n=" << l.waiting_moves << ") RsPass=" << r.value
            << " (n=" << r.waiting_moves << ")\n";
      }
      return kOk;
    };
  });

  std::string predicate;
  CLI::App* check_cmd = app.add_subcommand("check", "Universe membership");
  check_cmd->add_option("predicate", predicate, "guaranteed, stable, dicot or stewart")
      ->required()
      ->check(CLI::IsMember({"guaranteed", "stable", "dicot", "stewart"}));
  game_args(check_cmd);
  check_cmd->callback([&] {
    action = [&] {
      Game g = parse_scoring(join(terms));
      json j = envelope("check");
      j["predicate"] = predicate;
      j["game"] = format_scoring(g);
      return answer(out, as_json, j, satisfies(g, *parse_predicate(predicate)));
    };
  });

  std::string relation, threshold;
  std::string single_game;
  bool unchecked = false;
  CLI::App* cmp_cmd = app.add_subcommand("cmp-num", "Compare a guaranteed game with a number");
  cmp_cmd->add_option("game", single_game, "Game expression")->required();
  cmp_cmd->add_option("relation", relation, "ge, le or eq")
      ->required()
      ->check(CLI::IsMember({"ge", "le", "eq"}));
  cmp_cmd->add_option("number", threshold, "Rational threshold")->required();
  cmp_cmd->add_flag("--unchecked", unchecked,
                    "Run the protection test even if the game is not guaranteed");
  cmp_cmd->callback([&] {
    action = [&] {
      Game g = parse_scoring(single_game);
      Score s = Score::parse(threshold);
      bool value;
      if (unchecked) {
        bool ge = relation != "le" && left_protected(g, s);
        bool le = relation != "ge" && right_protected(g, s);
        value = relation == "ge" ? ge : relation == "le" ? le : ge && le;
      } else {
        value = relation == "ge" ? ge_number(g, s) : relation == "le" ? le_number(g, s)
                                                                      : eq_number(g, s);
      }
      json j = envelope("cmp-num");
      j["game"] = format_scoring(g);
      j["relation"] = relation;
      j["number"] = s.to_string();
      j["checked"] = !unchecked;
      return answer(out, as_json, j, value);
    };
  });

  CLI::App* zero_cmd = app.add_subcommand("eqzero", "Test a guaranteed game for equality with 0");
  zero_cmd->add_option("game", single_game, "Game expression")->required();
  zero_cmd->add_flag("--unchecked", unchecked,
                     "Run the protection test even if the game is not guaranteed");
  zero_cmd->callback([&] {
    action = [&] {
      Game g = parse_scoring(single_game);
      bool value = unchecked ? left_protected(g, 0) && right_protected(g, 0) : eq_zero(g);
      json j = envelope("eqzero");
      j["game"] = format_scoring(g);
      j["checked"] = !unchecked;
      return answer(out, as_json, j, value);
    };
  });

  std::string np_text;
  CLI::App* embed_cmd = app.add_subcommand("embed", "Image of a Normal-play game");
  embed_cmd->add_option("np", np_text, "Normal-play expression, e.g. '{*|*}'")->required();
  embed_cmd->callback([&] {
    action = [&] {
      NpGame h = parse_np(np_text);
      Game g = zeta(h);
      if (as_json) {
        json j = envelope("embed");
        j["np"] = format_np(h);
        j["value"] = format_scoring(g);
        j["outcome"] = outcome_name(np_outcome(h));
        out << j.dump() << '\n';
      } else {
        out << format_scoring(g) << '\n';
      }
      return kOk;
    };
  });

  std::string lhs_text, rhs_text;
  PoolOptions falsify_pool;
  CLI::App* falsify_cmd =
      app.add_subcommand("falsify", "Search for a game X refuting G >= H");
  falsify_cmd->add_option("G", lhs_text, "Left-hand game")->required();
  falsify_cmd->add_option("H", rhs_text, "Right-hand game")->required();
  falsify_pool.attach(falsify_cmd, "--pool-day", "guaranteed");
  falsify_cmd->callback([&] {
    action = [&] {
      Game g = parse_scoring(lhs_text);
      Game h = parse_scoring(rhs_text);
      FalsificationResult r = falsify_ge(g, h, falsify_pool.filter());
      if (as_json) {
        json j = envelope("falsify");
        j["g"] = format_scoring(g);
        j["h"] = format_scoring(h);
        j["examined"] = r.examined;
        if (r.witness) {
          j["witness"] = {{"x", format_scoring(r.witness->x)},
                          {"kind", score_kind_name(r.witness->kind)},
                          {"lhs", r.witness->lhs_value.to_string()},
                          {"rhs", r.witness->rhs_value.to_string()}};
        } else {
          j["witness"] = nullptr;
        }
        out << j.dump() << '\n';
      } else if (r.witness) {
        out << witness_text(*r.witness) << '\n';
      } else {
        out << "no witness among " << r.examined << " games (not a proof of G >= H)\n";
      }
      return kOk;
    };
  });

  PoolOptions enum_pool;
  bool count_only = false;
  CLI::App* enum_cmd = app.add_subcommand("enumerate", "List a small universe, one game per line");
  enum_pool.attach(enum_cmd, "--day", "all");
  enum_cmd->add_flag("--count", count_only, "Print only the number of games");
  enum_cmd->callback([&] {
    action = [&] {
      std::vector<Game> games = enumerate(enum_pool.filter());
      if (as_json) {
        json j = envelope("enumerate");
        j["count"] = games.size();
        if (!count_only) {
          json list = json::array();
          for (const Game& g : games) list.push_back(format_scoring(g));
          j["games"] = std::move(list);
        }
        out << j.dump() << '\n';
      } else if (count_only) {
        out << games.size() << '\n';
      } else {
        for (const Game& g : games) out << format_scoring(g) << '\n';
      }
      return kOk;
    };
  });

  std::string mode, rules_text, board_path;
  std::vector<std::string> players;
  CLI::App* konane_cmd = app.add_subcommand("konane", "Evaluate a konane-family position");
  konane_cmd->add_option("mode", mode, "analyze or offer")
      ->required()
      ->check(CLI::IsMember({"analyze", "offer"}));
  konane_cmd->add_option("--rules", rules_text, "konane_normal, scoring_konane or diskonnect")
      ->required()
      ->check(CLI::IsMember({"konane_normal", "scoring_konane", "diskonnect"}));
  konane_cmd->add_option("--board", board_path, "Board file: rows of x, o and .")->required();
  konane_cmd->add_option("--player", players, "Offer beneficiary: black or white (default both)")
      ->check(CLI::IsMember({"black", "white"}));
  konane_cmd->callback([&] {
    action = [&] {
      konane::Board board = konane::Board::parse(read_file(board_path));
      konane::Ruleset rules = *konane::parse_ruleset(rules_text);
      json j = envelope("konane");
      j["mode"] = mode;
      j["rules"] = rules_text;
      if (mode == "analyze") {
        if (rules == konane::Ruleset::kKonaneNormal) {
          NpGame g = konane::to_np(board);
          j["value"] = format_np(g);
          j["outcome"] = outcome_name(np_outcome(g));
          if (!as_json) {
            out << "value=" << format_np(g) << "\noutcome=" << outcome_name(np_outcome(g))
                << '\n';
          }
        } else {
          Game g = konane::to_game(board, rules);
          ScorePair s = scores(g);
          j["value"] = format_scoring(g);
          j["ls"] = s.ls.to_string();
          j["rs"] = s.rs.to_string();
          j["guaranteed"] = is_guaranteed(g);
          if (!as_json) {
            out << "value=" << format_scoring(g) << "\nLs=" << s.ls << " Rs=" << s.rs
                << "\nguaranteed=" << (is_guaranteed(g) ? "true" : "false") << '\n';
          }
        }
      } else {
        if (rules == konane::Ruleset::kKonaneNormal) {
          throw PreconditionError("the offer needs a scoring ruleset");
        }
        if (players.empty()) players = {"black", "white"};
        json offers = json::array();
        for (const std::string& name : players) {
          konane::Player p = *konane::parse_player(name);
          konane::OfferEvaluation e = konane::offer_eval(board, rules, p);
          konane::OfferVerdict v = konane::offer_verdict(e, p);
          std::string verdict = v.accept_is_better ? "accept"
                                : v.accept == v.decline ? "indifferent"
                                                        : "reject";
          std::string kind = p == konane::Player::kBlack ? "Ls" : "Rs";
          offers.push_back({{"player", name},
                            {"score", kind},
                            {"decline", v.decline.to_string()},
                            {"accept", v.accept.to_string()},
                            {"verdict", verdict}});
          if (!as_json) {
            out << name << " first: decline " << kind << "=" << v.decline << " accept " << kind
                << "=" << v.accept << " -> " << verdict << '\n';
          }
        }
        j["offers"] = std::move(offers);
      }
      if (as_json) out << j.dump() << '\n';
      return kOk;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    return action();
  } catch (const ResourceError& e) {
    err << e.what() << '\n';
    return kResource;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace scoringcg::cli

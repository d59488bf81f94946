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

#include "scoringcg/comparison.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "scoringcg/errors.hpp"
#include "scoringcg/memo.hpp"
#include "scoringcg/scores.hpp"

namespace scoringcg {

std::string_view score_kind_name(ScoreKind kind) {
  return kind == ScoreKind::kLeft ? "Ls" : "Rs";
}

namespace {

Score score_of(ScoreKind kind, const Game& g) {
  return kind == ScoreKind::kLeft ? left_score(g) : right_score(g);
}

struct ThresholdKey {
  std::uint64_t id;
  Score threshold;
  friend bool operator==(const ThresholdKey&, const ThresholdKey&) = default;
};

struct ThresholdKeyHash {
  std::size_t operator()(const ThresholdKey& k) const {
    return static_cast<std::size_t>(hash_combine(mix64(k.id), k.threshold.hash()));
  }
};

void require_guaranteed(const Game& g, std::string_view what) {
  if (!is_guaranteed(g)) {
    throw PreconditionError(std::string(what) + " requires a guaranteed game");
  }
}

}  // namespace

bool verify_witness(const Game& g, const Game& h, const Witness& w) {
  Score lhs = score_of(w.kind, g + w.x);
  Score rhs = score_of(w.kind, h + w.x);
  return lhs == w.lhs_value && rhs == w.rhs_value && lhs < rhs;
}

bool left_protected(const Game& g, const Score& l) {
  static MemoTable<ThresholdKey, bool, ThresholdKeyHash> memo;
  return memo.get_or_compute({g.id(), l}, [&] {
    if (pass_allowed_left_score(g) < l) return false;
    for (const Game& gr : g.right().options()) {
      auto replies = gr.left().options();
      bool answered = std::any_of(replies.begin(), replies.end(),
                                  [&](const Game& grl) { return left_protected(grl, l); });
      if (!answered) return false;
    }
    return true;
  });
}

bool right_protected(const Game& g, const Score& r) { return left_protected(conjugate(g), -r); }

bool ge_number(const Game& g, const Score& l) {
  require_guaranteed(g, "ge_number");
  return left_protected(g, l);
}

bool le_number(const Game& g, const Score& r) {
  require_guaranteed(g, "le_number");
  return right_protected(g, r);
}

bool eq_number(const Game& g, const Score& s) {
  require_guaranteed(g, "eq_number");
  return left_protected(g, s) && right_protected(g, s);
}

bool eq_zero(const Game& g) {
  require_guaranteed(g, "eq_zero");
  return left_protected(g, 0) && right_protected(g, 0);
}

namespace {

bool is_ettinger(const Game& g) { return is_dicot(g) && is_stewart(g); }

bool left_safe(const Game& g, const Score& r) {
  static MemoTable<ThresholdKey, bool, ThresholdKeyHash> memo;
  return memo.get_or_compute({g.id(), r}, [&] {
    if (left_score(g) < r) return false;
    for (const Game& gr : g.right().options()) {
      auto replies = gr.left().options();
      if (!std::any_of(replies.begin(), replies.end(),
                       [&](const Game& grl) { return left_safe(grl, r); })) {
        return false;
      }
    }
    return true;
  });
}

}  // namespace

bool ettinger_left_safe(const Game& g, const Score& r) {
  if (!is_ettinger(g)) throw PreconditionError("ettinger_left_safe requires an Ettinger dicot");
  return left_safe(g, r);
}

bool ettinger_right_safe(const Game& g, const Score& r) {
  if (!is_ettinger(g)) throw PreconditionError("ettinger_right_safe requires an Ettinger dicot");
  return left_safe(conjugate(g), -r);
}

Game np_witness(const NpGame& h) {
  Game zugzwang = Game::make(Side::of({Game::number(-1)}), Side::of({Game::number(1)}));
  return conjugate(zeta(h)) + zugzwang;
}

namespace {

// x = <^a | b + hat(-n)>
struct ProtectionForm {
  Score a;
  Score b;
  unsigned n;
};

Game realize(const ProtectionForm& f) {
  Game right = Game::number(f.b) + hat(-static_cast<int>(f.n));
  return Game::make(Side::atom(f.a), Side::of({right}));
}

ProtectionForm build_form(const Game& g, const Score& l) {
  // Pass-allowed score too small.
  PassAllowedScore pa = pass_allowed_left(g);
  if (pa.value < l) {
    Score a = midpoint(-l, -pa.value);
    return {a, a, pa.waiting_moves};
  }
  // A Right option leaving Left without a reply.
  for (const Game& gr : g.right().options()) {
    if (gr.left().is_atom()) {
      Score v = gr.left().score();
      return {std::min(-l, -v) - 1, -l + 1, 0};
    }
  }
  // A Right option all of whose Left replies are unprotected.
  for (const Game& gr : g.right().options()) {
    auto replies = gr.left().options();
    if (std::any_of(replies.begin(), replies.end(),
                    [&](const Game& grl) { return left_protected(grl, l); })) {
      continue;
    }
    std::optional<ProtectionForm> combined;
    for (const Game& grl : replies) {
      ProtectionForm f = build_form(grl, l);
      if (!combined) {
        combined = f;
      } else {
        combined->a = std::min(combined->a, f.a);
        combined->b = std::min(combined->b, f.b);
        combined->n = std::max(combined->n, f.n);
      }
    }
    return *combined;
  }
  throw std::logic_error("build_form called on a left-protected game");
}

}  // namespace

std::optional<Witness> protection_witness(const Game& g, const Score& l) {
  require_guaranteed(g, "protection_witness");
  if (left_protected(g, l)) return std::nullopt;
  Game x = realize(build_form(g, l));
  Witness w{x, ScoreKind::kRight, right_score(g + x), right_score(Game::number(l) + x)};
  if (!(w.lhs_value < 0 && 0 < w.rhs_value)) {
    throw std::logic_error("protection witness failed verification");
  }
  return w;
}

Witness stability_witness(const Game& g) {
  if (!g.left().is_atom() || !(g.left().score() > right_score(g))) {
    throw PreconditionError("stability_witness requires a non-stable Left-atomic game");
  }
  Score k = midpoint(g.left().score(), right_score(g));
  Game x = g + Game::number(-k);
  Witness w{x, ScoreKind::kLeft, left_score(hat(1) + x), left_score(x)};
  if (!(w.lhs_value < 0 && 0 < w.rhs_value)) {
    throw std::logic_error("stability witness failed verification");
  }
  return w;
}

std::vector<Game> special_distinguishers(const Game& g, const Game& h) {
  std::vector<Game> out;
  Game zugzwang = Game::make(Side::of({Game::number(-1)}), Side::of({Game::number(1)}));
  out.push_back(conjugate(h) + zugzwang);
  out.push_back(conjugate(g) + zugzwang);
  if (h.is_number() && is_guaranteed(g)) {
    if (auto w = protection_witness(g, h.left().score())) out.push_back(w->x);
  }
  if (g.is_number() && is_guaranteed(h)) {
    // h <= s fails iff ~h >= -s fails.
    if (auto w = protection_witness(conjugate(h), -g.left().score())) {
      out.push_back(conjugate(w->x));
    }
  }
  for (const Game& f : {g, h}) {
    if (f.left().is_atom() && f.left().score() > right_score(f)) {
      out.push_back(stability_witness(f).x);
    }
    if (f.right().is_atom() && left_score(f) > f.right().score()) {
      out.push_back(conjugate(stability_witness(conjugate(f)).x));
    }
  }
  return out;
}

namespace {

std::optional<Witness> try_candidate(const Game& g, const Game& h, const Game& x) {
  Game gx = g + x;
  Game hx = h + x;
  Score gl = left_score(gx), hl = left_score(hx);
  if (gl < hl) return Witness{x, ScoreKind::kLeft, gl, hl};
  Score gr = right_score(gx), hr = right_score(hx);
  if (gr < hr) return Witness{x, ScoreKind::kRight, gr, hr};
  return std::nullopt;
}

FalsificationResult scan(const Game& g, const Game& h,
                         std::initializer_list<std::span<const Game>> lists) {
  FalsificationResult result;
  for (std::span<const Game> list : lists) {
    for (const Game& x : list) {
      ++result.examined;
      if (auto w = try_candidate(g, h, x)) {
        result.witness = w;
        return result;
      }
    }
  }
  return result;
}

}  // namespace

FalsificationResult falsify_ge(const Game& g, const Game& h, const UniverseFilter& pool,
                               std::span<const Game> extra) {
  std::vector<Game> games = enumerate(pool);
  std::vector<Game> specials = special_distinguishers(g, h);
  return scan(g, h, {games, extra, specials});
}

FalsificationResult falsify_ge_over(const Game& g, const Game& h,
                                    std::span<const Game> candidates) {
  std::vector<Game> specials = special_distinguishers(g, h);
  return scan(g, h, {candidates, specials});
}

}  // namespace scoringcg

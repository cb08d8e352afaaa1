// Copyright 2026 The photonsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "photonsim/postselect.hpp"

#include <cctype>
#include <climits>

#include "photonsim/errors.hpp"

namespace photonsim {
namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(what);
  }
  int integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > INT_MAX) fail("integer too large");
      ++pos_;
    }
    return static_cast<int>(v);
  }
  Comparator comparator() {
    char c = peek();
    if (c == '=') {
      ++pos_;
      if (pos_ >= text_.size() || text_[pos_] != '=') fail("expected '=='");
      ++pos_;
      return Comparator::Eq;
    }
    if (c == '<' || c == '>') {
      ++pos_;
      bool eq = pos_ < text_.size() && text_[pos_] == '=';
      if (eq) ++pos_;
      if (c == '<') return eq ? Comparator::Le : Comparator::Lt;
      return eq ? Comparator::Ge : Comparator::Gt;
    }
    fail("expected comparator");
  }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view op_text(Comparator op) {
  switch (op) {
    case Comparator::Eq: return "==";
    case Comparator::Lt: return "<";
    case Comparator::Gt: return ">";
    case Comparator::Le: return "<=";
    case Comparator::Ge: return ">=";
  }
  return "?";
}

bool compare(int lhs, Comparator op, int rhs) {
  switch (op) {
    case Comparator::Eq: return lhs == rhs;
    case Comparator::Lt: return lhs < rhs;
    case Comparator::Gt: return lhs > rhs;
    case Comparator::Le: return lhs <= rhs;
    case Comparator::Ge: return lhs >= rhs;
  }
  return false;
}

// Per-clause bookkeeping for the pruned enumeration.
struct Bound {
  std::vector<bool> member;  // by channel
  int last_channel = -1;
  Comparator op;
  int value;
  int sum = 0;
};

struct Search {
  std::vector<Bound> bounds;
  std::vector<int> occ;
  bool polarized;
  const std::function<void(const FockState&)>* visit;

  bool feasible(int pos, int left) const {
    for (const auto& b : bounds) {
      switch (b.op) {
        case Comparator::Eq:
        case Comparator::Le:
          if (b.sum > b.value) return false;
          break;
        case Comparator::Lt:
          if (b.sum >= b.value) return false;
          break;
        default:
          break;
      }
      const int reachable = b.sum + (b.last_channel > pos ? left : 0);
      int need = 0;
      if (b.op == Comparator::Eq || b.op == Comparator::Ge) need = b.value;
      if (b.op == Comparator::Gt) need = b.value + 1;
      if (reachable < need) return false;
    }
    return true;
  }

  void set(int pos, int n) {
    occ[pos] = n;
    for (auto& b : bounds) {
      if (b.member[pos]) b.sum += n;
    }
  }
  void unset(int pos) {
    for (auto& b : bounds) {
      if (b.member[pos]) b.sum -= occ[pos];
    }
    occ[pos] = 0;
  }

  void rec(int pos, int left) {
    const int last = static_cast<int>(occ.size()) - 1;
    if (pos == last) {
      set(pos, left);
      if (feasible(pos, 0)) (*visit)(FockState(occ, polarized));
      unset(pos);
      return;
    }
    for (int n = 0; n <= left; ++n) {
      set(pos, n);
      if (feasible(pos, left - n)) rec(pos + 1, left - n);
      unset(pos);
    }
  }
};

}  // namespace

PostSelect parse_postselect(std::string_view text) {
  Lexer lex(text);
  PostSelect out;
  do {
    Clause c;
    lex.expect('[', "expected '['");
    c.modes.push_back(lex.integer());
    while (lex.accept(',')) c.modes.push_back(lex.integer());
    lex.expect(']', "expected ',' or ']'");
    c.op = lex.comparator();
    c.value = lex.integer();
    out.clauses.push_back(std::move(c));
  } while (lex.accept('&'));
  if (!lex.at_end()) lex.fail("expected '&' or end of expression");
  return out;
}

std::string to_string(const PostSelect& p) {
  std::string out;
  for (std::size_t i = 0; i < p.clauses.size(); ++i) {
    const Clause& c = p.clauses[i];
    if (i > 0) out += " & ";
    out += '[';
    for (std::size_t k = 0; k < c.modes.size(); ++k) {
      if (k > 0) out += ',';
      out += std::to_string(c.modes[k]);
    }
    out += ']';
    out += op_text(c.op);
    out += std::to_string(c.value);
  }
  return out;
}

PostSelect operator&(PostSelect a, const PostSelect& b) {
  a.clauses.insert(a.clauses.end(), b.clauses.begin(), b.clauses.end());
  return a;
}

bool evaluate(const PostSelect& p, const FockState& state) {
  for (const auto& c : p.clauses) {
    int sum = 0;
    for (int m : c.modes) {
      if (m < 0 || m >= state.modes()) {
        throw EvalError("post-selection mode " + std::to_string(m) + " outside " +
                        std::to_string(state.modes()) + "-mode register");
      }
      sum += state.mode_count(m);
    }
    if (!compare(sum, c.op, c.value)) return false;
  }
  return true;
}

Processor::Processor(Circuit circuit_, StateVector input_, std::optional<PostSelect> postselect_,
                     int min_detected_photons_)
    : circuit(std::move(circuit_)),
      input(std::move(input_)),
      postselect(std::move(postselect_)),
      min_detected_photons(min_detected_photons_) {
  if (circuit.channels() != input.channels() || circuit.polarized() != input.polarized()) {
    throw RegisterMismatch("input state does not match the circuit register");
  }
}

StateVector RunResult::conditioned_state() const {
  if (success_probability <= 0.0) return StateVector(kept.channels(), kept.polarized());
  StateVector out = kept;
  out *= 1.0 / std::sqrt(success_probability);
  return out;
}

void for_each_selected_state(int channels, bool polarized, int photons,
                             const std::optional<PostSelect>& predicate, int min_photons,
                             const std::function<void(const FockState&)>& visit) {
  if (photons < min_photons || channels <= 0) return;
  Search s;
  s.occ.assign(channels, 0);
  s.polarized = polarized;
  s.visit = &visit;
  const int modes = polarized ? channels / 2 : channels;
  if (predicate) {
    for (const auto& c : predicate->clauses) {
      Bound b;
      b.member.assign(channels, false);
      b.op = c.op;
      b.value = c.value;
      for (int m : c.modes) {
        if (m < 0 || m >= modes) {
          throw EvalError("post-selection mode " + std::to_string(m) + " outside " +
                          std::to_string(modes) + "-mode register");
        }
        if (polarized) {
          b.member[2 * m] = b.member[2 * m + 1] = true;
          b.last_channel = std::max(b.last_channel, 2 * m + 1);
        } else {
          b.member[m] = true;
          b.last_channel = std::max(b.last_channel, m);
        }
      }
      s.bounds.push_back(std::move(b));
    }
  }
  s.rec(0, photons);
}

RunResult run(const Processor& processor, const SimulationOptions& options) {
  const Matrix u = compile(processor.circuit);
  const StateVector& input = processor.input;
  RunResult result{StateVector(input.channels(), input.polarized()), {}, 0.0};

  const std::optional<int> sector = input.photon_sector();
  if (sector) {
    const int n = *sector;
    if (n > options.permanent_cap) {
      throw TooLarge(std::to_string(n) + " photons exceed permanent cap " +
                     std::to_string(options.permanent_cap));
    }
    for_each_selected_state(
        input.channels(), input.polarized(), n, processor.postselect,
        processor.min_detected_photons, [&](const FockState& t) {
          Complex total = 0.0;
          for (const auto& [s, a] : input.terms()) total += a * amplitude(u, s, t, options);
          if (std::abs(total) >= kPruneTolerance) result.kept.add(t, total);
        });
  }
  for (const auto& [t, a] : result.kept.terms()) result.success_probability += std::norm(a);
  if (result.success_probability > 0.0) {
    for (const auto& [t, a] : result.kept.terms()) {
      result.conditioned[t] = std::norm(a) / result.success_probability;
    }
  }
  return result;
}

}  // namespace photonsim

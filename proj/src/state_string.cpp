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

#include "photonsim/state_string.hpp"

#include <cctype>

#include "photonsim/errors.hpp"

namespace photonsim {
namespace {

struct Entry {
  bool polarized = false;
  int bare = 0;
  int h = 0;
  int v = 0;
};

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  std::size_t pos() const { return pos_; }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  int integer() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) fail("integer too large");
      ++pos_;
    }
    return static_cast<int>(value);
  }

  Polarization polarization() {
    skip_ws();
    char c = peek();
    if (c != 'H' && c != 'V') fail("expected polarization H or V");
    ++pos_;
    return c == 'H' ? Polarization::H : Polarization::V;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

void add_pol(Entry& e, int count, Polarization p) {
  e.polarized = true;
  (p == Polarization::H ? e.h : e.v) += count;
}

// One polarized term: "k:P" or "{P:P}". Returns false if the entry turned out
// to be a bare count.
bool pol_term(Cursor& c, Entry& e, bool first) {
  if (c.accept('{')) {
    c.expect('P');
    c.expect(':');
    Polarization p = c.polarization();
    c.expect('}');
    add_pol(e, 1, p);
    return true;
  }
  int n = c.integer();
  if (c.accept(':')) {
    add_pol(e, n, c.polarization());
    return true;
  }
  if (!first) c.fail("expected ':' after count in polarized entry");
  e.bare = n;
  return false;
}

Entry entry(Cursor& c) {
  Entry e;
  if (!pol_term(c, e, true)) return e;
  while (c.accept('+')) pol_term(c, e, false);
  return e;
}

}  // namespace

FockState parse_state(std::string_view text) {
  Cursor c(text);
  c.expect('|');
  std::vector<Entry> entries;
  entries.push_back(entry(c));
  while (c.accept(',')) entries.push_back(entry(c));
  c.expect('>');
  c.skip_ws();
  if (!c.at_end()) c.fail("trailing characters");

  bool polarized = false;
  for (const auto& e : entries) polarized = polarized || e.polarized;
  std::vector<int> occ;
  for (const auto& e : entries) {
    if (!polarized) {
      occ.push_back(e.bare);
      continue;
    }
    if (!e.polarized && e.bare != 0) {
      throw MixedRegister("bare photon count in a polarized register");
    }
    occ.push_back(e.h);
    occ.push_back(e.v);
  }
  return FockState(std::move(occ), polarized);
}

std::string print_state(const FockState& state) {
  std::string out = "|";
  for (int m = 0; m < state.modes(); ++m) {
    if (m > 0) out += ',';
    if (!state.polarized()) {
      out += std::to_string(state[m]);
      continue;
    }
    int h = state[2 * m];
    int v = state[2 * m + 1];
    if (h == 0 && v == 0) {
      out += '0';
    } else if (v == 0) {
      out += std::to_string(h) + ":H";
    } else if (h == 0) {
      out += std::to_string(v) + ":V";
    } else {
      out += std::to_string(h) + ":H+" + std::to_string(v) + ":V";
    }
  }
  return out + ">";
}

}  // namespace photonsim

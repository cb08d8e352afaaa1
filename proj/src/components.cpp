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

#include "photonsim/components.hpp"

#include <sstream>

#include "photonsim/errors.hpp"

namespace photonsim {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

BsConvention parse_bs_convention(std::string_view name) {
  if (name == "BS1") return BsConvention::BS1;
  if (name == "BS2") return BsConvention::BS2;
  if (name == "BS3") return BsConvention::BS3;
  if (name == "H") return BsConvention::H;
  if (name == "Rx") return BsConvention::Rx;
  if (name == "Ry") return BsConvention::Ry;
  throw InvalidSpec("unknown beam splitter convention '" + std::string(name) + "'");
}

std::string_view to_string(BsConvention c) {
  switch (c) {
    case BsConvention::BS1: return "BS1";
    case BsConvention::BS2: return "BS2";
    case BsConvention::BS3: return "BS3";
    case BsConvention::H: return "H";
    case BsConvention::Rx: return "Rx";
    case BsConvention::Ry: return "Ry";
  }
  return "?";
}

bool uses_four_phases(BsConvention c) {
  return c == BsConvention::H || c == BsConvention::Rx || c == BsConvention::Ry;
}

int span(const Component& c) {
  return std::visit(
      Overloaded{
          [](const BeamSplitterSpec<>&) { return 2; },
          [](const PhaseShifterSpec<>&) { return 1; },
          [](const PermutationSpec& p) { return static_cast<int>(p.target.size()); },
          [](const WavePlateSpec<>&) { return 1; },
          [](const PolarizationRotatorSpec<>&) { return 1; },
          [](const PbsSpec&) { return 2; },
          [](const UnitarySpec& u) { return static_cast<int>(u.matrix.rows()); },
      },
      c);
}

bool acts_on_polarization(const Component& c) {
  return std::holds_alternative<WavePlateSpec<>>(c) ||
         std::holds_alternative<PolarizationRotatorSpec<>>(c) ||
         std::holds_alternative<PbsSpec>(c);
}

void validate(const Component& c) {
  if (const auto* p = std::get_if<PermutationSpec>(&c)) {
    const int n = static_cast<int>(p->target.size());
    if (n == 0) throw InvalidSpec("empty permutation");
    std::vector<bool> seen(n, false);
    for (int t : p->target) {
      if (t < 0 || t >= n || seen[t]) throw InvalidSpec("permutation is not a bijection");
      seen[t] = true;
    }
  } else if (const auto* u = std::get_if<UnitarySpec>(&c)) {
    if (u->matrix.rows() == 0) throw InvalidSpec("empty unitary");
    if (!is_unitary(u->matrix)) throw NotUnitary("explicit component matrix is not unitary");
  }
}

Matrix local_matrix(const Component& c) {
  return std::visit(
      Overloaded{
          [](const BeamSplitterSpec<>& s) -> Matrix { return bs_matrix(s); },
          [](const PhaseShifterSpec<>& s) -> Matrix { return ps_matrix(s); },
          [](const PermutationSpec& p) -> Matrix { return perm_matrix(p); },
          [](const WavePlateSpec<>& w) -> Matrix { return wave_plate_matrix(w); },
          [](const PolarizationRotatorSpec<>& r) -> Matrix { return rotator_matrix(r); },
          [](const PbsSpec&) -> Matrix { return pbs_matrix(); },
          [](const UnitarySpec& u) -> Matrix { return u.matrix; },
      },
      c);
}

std::string describe(const Component& c) {
  std::ostringstream out;
  std::visit(Overloaded{
                 [&](const BeamSplitterSpec<>& s) {
                   out << "BS." << to_string(s.convention) << "(theta=" << s.theta;
                   if (uses_four_phases(s.convention)) {
                     out << ", phi_tl=" << s.phi_tl << ", phi_bl=" << s.phi_bl
                         << ", phi_tr=" << s.phi_tr << ", phi_br=" << s.phi_br;
                   } else {
                     out << ", phi_r=" << s.phi_r << ", phi_t=" << s.phi_t
                         << ", phi_0=" << s.phi_0;
                   }
                   out << ")";
                 },
                 [&](const PhaseShifterSpec<>& s) { out << "PS(phi=" << s.phi << ")"; },
                 [&](const PermutationSpec& p) {
                   out << "PERM[";
                   for (std::size_t i = 0; i < p.target.size(); ++i) {
                     out << (i ? "," : "") << p.target[i];
                   }
                   out << "]";
                 },
                 [&](const WavePlateSpec<>& w) {
                   out << "WP(delta=" << w.delta << ", xi=" << w.xi << ")";
                 },
                 [&](const PolarizationRotatorSpec<>& r) { out << "PR(theta=" << r.theta << ")"; },
                 [&](const PbsSpec&) { out << "PBS"; },
                 [&](const UnitarySpec& u) { out << "Unitary(" << u.matrix.rows() << ")"; },
             },
             c);
  return out.str();
}

}  // namespace photonsim

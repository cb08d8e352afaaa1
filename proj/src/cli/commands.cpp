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

#include "photonsim/cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include <CLI11.hpp>
#include <json.hpp>

#include "photonsim/cli/circuit_file.hpp"
#include "photonsim/errors.hpp"
#include "photonsim/grover.hpp"
#include "photonsim/state_string.hpp"

namespace photonsim {
namespace {

using nlohmann::json;

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const EvalError& e) {
    err << "error: " << e.what() << "\n";
    return kExitEval;
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kExitEval;
  } catch (const MixedSector& e) {
    err << "error: " << e.what() << "\n";
    return kExitEval;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitEval;
  }
}

std::string label_for(const FockState& s, int qubits) {
  std::optional<std::vector<int>> bits;
  if (s.polarized()) {
    bits = decode_polarization(s);
  } else if (qubits > 0) {
    bits = decode_dual_rail(s, qubits);
  }
  return bits ? bits_to_string(*bits) : "-";
}

json json_complex(Complex z) { return json::array({z.real(), z.imag()}); }

struct Prepared {
  CircuitFile file;
  RunResult result;
  std::optional<PostSelect> postselect;
  FockState input;
  int qubits;
};

Prepared prepare(const SimulateArgs& args) {
  CircuitFile file = load_circuit_file(args.circuit);
  std::optional<std::string> input_text = args.input ? args.input : file.input;
  if (!input_text) throw InvalidSpec("no input state: pass --input or set 'input' in the file");
  FockState input = parse_state(*input_text);
  std::optional<PostSelect> ps;
  if (args.postselect) {
    ps = parse_postselect(*args.postselect);
  } else if (file.postselect) {
    ps = parse_postselect(*file.postselect);
  }
  SimulationOptions options;
  options.permanent_cap = args.permanent_cap;
  Processor proc(file.circuit, StateVector(input), ps, args.min_photons);
  RunResult result = run(proc, options);
  const int qubits = args.qubits.value_or(file.qubits);
  return {std::move(file), std::move(result), std::move(ps), std::move(input), qubits};
}

}  // namespace

std::string format_real(double x) {
  if (std::abs(x) < 1e-13) x = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string format_complex(Complex z) {
  double im = std::abs(z.imag()) < 1e-13 ? 0.0 : z.imag();
  return format_real(z.real()) + (im < 0 ? "-" : "+") + format_real(std::abs(im)) + "j";
}

int cmd_unitary(const UnitaryArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    CircuitFile file = load_circuit_file(args.circuit);
    Matrix u = compile(file.circuit);
    if (args.json) {
      json rows = json::array();
      for (Eigen::Index r = 0; r < u.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < u.cols(); ++c) row.push_back(json_complex(u(r, c)));
        rows.push_back(row);
      }
      json j{{"modes", file.circuit.modes()},
             {"polarized", file.circuit.polarized()},
             {"unitary", rows}};
      out << j.dump(2) << "\n";
      return kExitOk;
    }
    for (Eigen::Index r = 0; r < u.rows(); ++r) {
      for (Eigen::Index c = 0; c < u.cols(); ++c) {
        out << (c ? " " : "") << format_complex(u(r, c));
      }
      out << "\n";
    }
    return kExitOk;
  });
}

int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Prepared p = prepare(args);
    if (args.json) {
      json outcomes = json::array();
      if (args.renormalize) {
        for (const auto& [s, prob] : p.result.conditioned) {
          const std::string bits = label_for(s, p.qubits);
          outcomes.push_back({{"state", print_state(s)},
                              {"bits", bits == "-" ? json(nullptr) : json(bits)},
                              {"probability", prob}});
        }
      } else {
        for (const auto& [s, a] : p.result.kept.terms()) {
          const std::string bits = label_for(s, p.qubits);
          outcomes.push_back({{"state", print_state(s)},
                              {"bits", bits == "-" ? json(nullptr) : json(bits)},
                              {"amplitude", json_complex(a)}});
        }
      }
      json j{{"input", print_state(p.input)},
             {"postselect", p.postselect ? json(to_string(*p.postselect)) : json(nullptr)},
             {"success", p.result.success_probability},
             {"outcomes", outcomes}};
      out << j.dump(2) << "\n";
      return kExitOk;
    }
    if (args.renormalize) {
      for (const auto& [s, prob] : p.result.conditioned) {
        out << print_state(s) << " -> " << label_for(s, p.qubits) << " " << format_real(prob)
            << "\n";
      }
      out << "success=" << format_real(p.result.success_probability) << "\n";
      return kExitOk;
    }
    for (const auto& [s, a] : p.result.kept.terms()) {
      out << print_state(s) << " -> " << label_for(s, p.qubits) << " " << format_complex(a) << "\n";
    }
    return kExitOk;
  });
}

int cmd_sample(const SampleArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Prepared p = prepare(args.sim);
    const SampleCounts counts = sample(p.result.conditioned, args.shots, args.seed);
    if (args.sim.json) {
      json rows = json::array();
      for (const auto& [s, n] : counts) {
        const std::string bits = label_for(s, p.qubits);
        rows.push_back({{"state", print_state(s)},
                        {"bits", bits == "-" ? json(nullptr) : json(bits)},
                        {"count", n}});
      }
      json j{{"shots", args.shots}, {"seed", args.seed}, {"counts", rows}};
      out << j.dump(2) << "\n";
      return kExitOk;
    }
    for (const auto& [s, n] : counts) {
      out << print_state(s) << " -> " << label_for(s, p.qubits) << " " << n << "\n";
    }
    return kExitOk;
  });
}

int cmd_grover(const GroverArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GroverTarget target = parse_grover_target(args.target);
    if (args.encoding == "dual-rail") {
      if (target != GroverTarget::T01) {
        throw InvalidSpec("the dual-rail search circuit marks target 01 only");
      }
      DualRailGroverResult r = dual_rail_grover_3q(args.seed, args.shots);
      std::map<std::string, std::uint64_t> counts;
      for (const auto& [label, n] : r.counts) counts[label.substr(0, 2)] += n;
      if (args.json) {
        json probs = json::array(), cj = json::object();
        for (const auto& l : kGroverLabels) {
          probs.push_back(r.marginal.count(l) ? r.marginal.at(l) : 0.0);
          cj[l] = counts.count(l) ? counts.at(l) : 0;
        }
        json j{{"encoding", "dual-rail"}, {"target", args.target},
               {"labels", kGroverLabels},  {"probabilities", probs},
               {"success", r.success_probability}, {"shots", args.shots},
               {"seed", args.seed},         {"counts", cj}};
        out << j.dump(2) << "\n";
        return kExitOk;
      }
      out << "encoding=dual-rail target=" << args.target << "\n";
      for (const auto& l : kGroverLabels) {
        out << l << " " << format_real(r.marginal.count(l) ? r.marginal.at(l) : 0.0);
        if (args.shots > 0) out << " " << (counts.count(l) ? counts.at(l) : 0);
        out << "\n";
      }
      out << "success=" << format_real(r.success_probability) << "\n";
      return kExitOk;
    }
    if (args.encoding != "polarization") {
      throw InvalidSpec("encoding must be polarization or dual-rail");
    }
    const OracleVariant variant = parse_oracle_variant(args.variant);
    GroverResult r = run_grover(target, variant, args.shots, args.seed);
    if (args.json) {
      json probs = json::array(), cj = json::object();
      for (std::size_t i = 0; i < kGroverLabels.size(); ++i) {
        probs.push_back(r.probabilities[i]);
        const auto& l = kGroverLabels[i];
        cj[l] = r.counts.count(l) ? r.counts.at(l) : 0;
      }
      json j{{"encoding", "polarization"}, {"target", args.target},
             {"variant", args.variant},     {"labels", kGroverLabels},
             {"probabilities", probs},      {"shots", args.shots},
             {"seed", args.seed},           {"counts", cj}};
      out << j.dump(2) << "\n";
      return kExitOk;
    }
    out << "encoding=polarization target=" << args.target << " variant=" << args.variant << "\n";
    for (std::size_t i = 0; i < kGroverLabels.size(); ++i) {
      const auto& l = kGroverLabels[i];
      out << l << " " << format_real(r.probabilities[i]);
      if (args.shots > 0) out << " " << (r.counts.count(l) ? r.counts.at(l) : 0);
      out << "\n";
    }
    return kExitOk;
  });
}

int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact simulator for linear-optical circuits", "photonsim"};
  app.require_subcommand(1);

  UnitaryArgs unitary;
  auto* u = app.add_subcommand("unitary", "Print the compiled unitary of a circuit file");
  u->add_option("--circuit", unitary.circuit, "Circuit JSON file")->required();
  u->add_flag("--json", unitary.json, "JSON output");

  SimulateArgs sim;
  auto add_sim_options = [](CLI::App* cmd, SimulateArgs& a) {
    cmd->add_option("--circuit", a.circuit, "Circuit JSON file")->required();
    cmd->add_option("--input", a.input, "Input state, e.g. |1,0,1,0>");
    cmd->add_option("--postselect", a.postselect, "Post-selection, e.g. \"[0,1]==1 & [4]==0\"");
    cmd->add_option("--qubits", a.qubits, "Dual-rail qubits used to label outputs");
    cmd->add_option("--min-photons", a.min_photons, "Minimum detected photons");
    cmd->add_flag("--json", a.json, "JSON output");
  };
  auto* s = app.add_subcommand("simulate", "Output amplitudes or conditioned probabilities");
  add_sim_options(s, sim);
  s->add_flag("--renormalize", sim.renormalize, "Print conditioned probabilities and success");

  SampleArgs smp;
  auto* sa = app.add_subcommand("sample", "Sample detector outcomes");
  add_sim_options(sa, smp.sim);
  sa->add_option("--shots", smp.shots, "Number of samples");
  sa->add_option("--seed", smp.seed, "PRNG seed");

  GroverArgs gro;
  auto* g = app.add_subcommand("grover", "Two-qubit search");
  g->add_option("--target", gro.target, "Marked item: 00, 01, 10 or 11");
  g->add_option("--variant", gro.variant, "Oracle variant: per-mode or uniform");
  g->add_option("--encoding", gro.encoding, "polarization (one photon) or dual-rail (3 qubits)");
  g->add_option("--shots", gro.shots, "Number of samples");
  g->add_option("--seed", gro.seed, "PRNG seed");
  g->add_flag("--json", gro.json, "JSON output");

  std::vector<const char*> cargv;
  for (const auto& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  int cap = kDefaultPermanentCap;
  if (const char* env = std::getenv(kPermanentCapEnv)) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 30) {
      err << "error: " << kPermanentCapEnv << " must be an integer in 1..30\n";
      return kExitInput;
    }
    cap = static_cast<int>(v);
  }
  sim.permanent_cap = cap;
  smp.sim.permanent_cap = cap;

  if (*u) return cmd_unitary(unitary, out, err);
  if (*s) return cmd_simulate(sim, out, err);
  if (*sa) return cmd_sample(smp, out, err);
  return cmd_grover(gro, out, err);
}

}  // namespace photonsim

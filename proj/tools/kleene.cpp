//  Copyright 2026 The kleene-workbench Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.


// Command-line front end. Exit status: 0 when every check passes (or the
// consequent is valid), 1 when a check fails, 2 on bad input.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kleene/agreement.hpp"
#include "kleene/derivation.hpp"
#include "kleene/errors.hpp"
#include "kleene/io.hpp"
#include "kleene/perp.hpp"
#include "kleene/representation.hpp"
#include "kleene/roughsets.hpp"
#include "kleene/semantics.hpp"

namespace {

using namespace kleene;
using nlohmann::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kBadInput = 2;

struct Globals {
  bool machine = false;
  std::size_t max_size = 10;
  std::optional<std::uint64_t> seed;
};

// Either "key: value" for people or "key=value" for scripts.
class Printer {
 public:
  explicit Printer(bool machine) : machine_(machine) {}

  void field(const std::string& key, const std::string& value) const {
    std::cout << key << (machine_ ? "=" : ": ") << value << "\n";
  }
  void field(const std::string& key, bool value) const { field(key, std::string(value ? "true" : "false")); }
  void field(const std::string& key, std::size_t value) const { field(key, std::to_string(value)); }
  bool machine() const { return machine_; }

 private:
  bool machine_;
};

std::string yes_no(const Verdict& v, const DeMorganAlgebra& k) {
  return v.valid ? "yes" : "no (" + render(v, k).substr(std::string("INVALID ").size()) + ")";
}

std::string assignment_text(const Assignment& a, const DeMorganAlgebra& k) {
  std::string out;
  for (const auto& [name, value] : a) out += (out.empty() ? "" : ",") + name + "=" + k.label(value);
  return out;
}

// --- decide --------------------------------------------------------------------------------

int cmd_decide(const Globals& g, const std::string& text) {
  const Consequent c = parse_consequent(text);
  const Decision d = decide(c);
  const Printer out(g.machine);
  out.field("consequent", to_string(c));
  if (g.machine) {
    out.field("result", std::string(d.derivable() ? "VALID" : "INVALID"));
    out.field("t", d.t.valid);
    out.field("f", d.f.valid);
    if (!d.derivable()) out.field("witness", assignment_text(d.tf.witness, three()));
  } else {
    out.field("|=t", yes_no(d.t, three()));
    out.field("|=f", yes_no(d.f, three()));
    out.field("result", render(d.tf, three()));
  }
  return d.derivable() ? kPass : kFail;
}

// --- check-proof ---------------------------------------------------------------------------

int cmd_check_proof(const Globals& g, const std::string& path) {
  const Derivation d = parse_derivation(read_file(path));
  const DerivationReport r = check_derivation(d);
  const Printer out(g.machine);
  out.field("steps", d.steps.size());
  out.field("conclusion", to_string(d.steps.back().consequent));
  out.field("result", std::string(r.ok ? "ACCEPTED" : "REJECTED"));
  if (!r.ok) {
    out.field("step", r.step);
    out.field("reason", r.reason);
  }
  return r.ok ? kPass : kFail;
}

// --- algebra verify ------------------------------------------------------------------------

int cmd_algebra_verify(const Globals& g, const std::string& path) {
  const AlgebraDocument doc = parse_algebra(read_file(path));
  const AxiomReport report = check_kleene_axioms(doc.tables());
  const Printer out(g.machine);
  out.field("algebra", doc.name.empty() ? path : doc.name);
  out.field("size", doc.lattice.size());
  for (const auto& check : report.checks) {
    std::string value = check.passed ? "pass" : "FAIL";
    if (!check.passed) {
      std::string tuple;
      for (Elem e : check.witness) tuple += (tuple.empty() ? "" : ",") + doc.lattice.label(e);
      value += " witness (" + tuple + ")";
    }
    out.field("axiom." + check.axiom, value);
  }
  const bool kleene = report.all_passed();
  out.field("kleene", kleene);
  if (kleene) out.field("boolean", doc.kleene().is_boolean());
  return kleene ? kPass : kFail;
}

// --- represent -----------------------------------------------------------------------------

json pair_json(const ApproximationSpace& space, const RoughPair& p) {
  return json{{"lower", space.members(p.lower)}, {"upper", space.members(p.upper)}};
}

int verify_written(const Printer& out, const std::string& dir) {
  namespace fs = std::filesystem;
  const auto space = parse_space(read_file((fs::path(dir) / "space.json").string()));
  const json rep = json::parse(read_file((fs::path(dir) / "representation.json").string()));
  const KleeneAlgebra k = parse_algebra(rep.at("algebra").dump()).kleene();
  std::vector<RoughPair> images;
  for (Elem x = 0; x < k.size(); ++x) {
    const json& entry = rep.at("rough").at(k.label(x));
    images.push_back({space.set_of(entry.at("lower").get<std::vector<std::string>>()),
                      space.set_of(entry.at("upper").get<std::vector<std::string>>())});
  }
  const HomomorphismReport r = verify_rough_map(k, space, images);
  out.field("reload", std::string(r.ok ? "verified" : "FAILED at " + r.clause));
  return r.ok ? kPass : kFail;
}

int cmd_represent(const Globals& g, const std::string& path, const std::string& out_dir,
                  const std::string& verify_dir) {
  const Printer out(g.machine);
  if (!verify_dir.empty()) return verify_written(out, verify_dir);

  const AlgebraDocument doc = parse_algebra(read_file(path));
  const AxiomReport axioms = check_kleene_axioms(doc.tables());
  if (!axioms.all_passed()) {
    const AxiomCheck* bad = axioms.first_failure();
    std::string tuple;
    for (Elem e : bad->witness) tuple += (tuple.empty() ? "" : ",") + doc.lattice.label(e);
    out.field("error", "not a Kleene algebra: " + bad->axiom + " fails at (" + tuple + ")");
    return kFail;
  }
  const KleeneAlgebra k = doc.kleene();
  const RoughRepresentation rep = represent_as_rough_sets(k, g.max_size);
  const auto& interval = rep.embedding.interval();
  const auto& space = rep.saturation.space;

  out.field("algebra", doc.name.empty() ? path : doc.name);
  out.field("boolean_algebra", "2^" + std::to_string(rep.embedding.boolean().atoms().size()));
  out.field("space.universe", "{" + [&] {
    std::string s;
    for (const auto& n : space.names()) s += (s.empty() ? "" : ",") + n;
    return s;
  }() + "}");
  std::string blocks;
  for (SetMask b : space.blocks()) blocks += (blocks.empty() ? "" : " ") + space.render(b);
  out.field("space.blocks", blocks);

  json embedding = json::object();
  json rough = json::object();
  for (Elem x = 0; x < k.size(); ++x) {
    const std::string into = interval.algebra.label(rep.embedding.map[x]);
    const RoughPair& p = rep.saturated.pairs[rep.map[x]];
    embedding[k.label(x)] = into;
    rough[k.label(x)] = pair_json(space, p);
    out.field("map." + k.label(x), into + " -> " + render(space, p));
  }
  const bool ok = is_injective(rep.map) && verify_homomorphism(rep.map, k, rep.saturated.algebra).ok;
  out.field("verified", ok);

  if (!out_dir.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    const json rep_doc{{"algebra", json::parse(algebra_to_json(k))},
                       {"boolean_atoms", rep.embedding.boolean().atoms().size()},
                       {"embedding", embedding},
                       {"rough", rough}};
    write_file((fs::path(out_dir) / "space.json").string(), space_to_json(space));
    write_file((fs::path(out_dir) / "representation.json").string(), rep_doc.dump(2) + "\n");
    out.field("wrote", (fs::path(out_dir) / "space.json").string() + " " +
                           (fs::path(out_dir) / "representation.json").string());
    if (verify_written(out, out_dir) != kPass) return kFail;
  }
  return ok ? kPass : kFail;
}

// --- rough approx --------------------------------------------------------------------------

std::vector<std::string> split_names(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '{') body.erase(0, 1);
  if (!body.empty() && body.back() == '}') body.pop_back();
  std::vector<std::string> out;
  std::stringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

int cmd_rough_approx(const Globals& g, const std::string& path, const std::string& set_text) {
  const ApproximationSpace space = parse_space(read_file(path));
  const SetMask a = space.set_of(split_names(set_text));
  const RoughPair p = approximations(space, a);
  const Printer out(g.machine);
  out.field("set", space.render(a));
  out.field("lower", space.render(p.lower));
  out.field("upper", space.render(p.upper));
  out.field("rough_set", render(space, p));
  out.field("definable", space.is_definable(a));
  return kPass;
}

// --- frames --------------------------------------------------------------------------------

std::string worlds_text(const CompatibilityFrame& f, const std::vector<std::size_t>& ws) {
  std::string s;
  for (auto w : ws) s += (s.empty() ? "" : ",") + f.world(w);
  return s;
}

struct FrameRow {
  ConditionResult dni, dne, kleene;
  bool kleene_frame;
  bool valid_dni, valid_dne, valid_kalman;
};

FrameRow classify(const CompatibilityFrame& f) {
  FrameRow r{check_condition_dni(f), check_condition_dne(f), check_condition_kleene(f), false, false, false, false};
  r.kleene_frame = r.dni.holds && r.dne.holds && r.kleene.holds;
  r.valid_dni = frame_valid(f, parse_consequent("p |- ~~p")).valid;
  r.valid_dne = frame_valid(f, parse_consequent("~~p |- p")).valid;
  r.valid_kalman = frame_valid(f, parse_consequent("p & ~p |- q | ~q")).valid;
  return r;
}

std::string describe(const CompatibilityFrame& f) {
  std::string leq, c;
  for (std::size_t x = 0; x < f.size(); ++x)
    for (std::size_t y = 0; y < f.size(); ++y) {
      if (x != y && f.leq(x, y)) leq += (leq.empty() ? "" : " ") + f.world(x) + "<=" + f.world(y);
      if (f.compatible(x, y)) c += (c.empty() ? "" : " ") + f.world(x) + "C" + f.world(y);
    }
  return std::to_string(f.size()) + " worlds; " + (leq.empty() ? "discrete" : leq) + "; " +
         (c.empty() ? "C empty" : c);
}

// Checks the sound directions; returns false on a counterexample to them.
bool report_frame(const Printer& out, const CompatibilityFrame& f, const std::string& prefix) {
  const FrameRow r = classify(f);
  auto cond = [&](const std::string& key, const ConditionResult& c) {
    out.field(prefix + key, std::string(c.holds ? "true" : "false witness " + worlds_text(f, c.witness)));
  };
  cond("dni", r.dni);
  cond("dne", r.dne);
  cond("kleene", r.kleene);
  out.field(prefix + "kleene_frame", r.kleene_frame);
  out.field(prefix + "validates.dni", r.valid_dni);
  out.field(prefix + "validates.dne", r.valid_dne);
  out.field(prefix + "validates.kleene", r.valid_kalman);
  return (!r.dni.holds || r.valid_dni) && (!r.dne.holds || r.valid_dne) && r.kleene.holds == r.valid_kalman;
}

int cmd_frames(const Globals& g, const std::string& path, std::optional<std::size_t> enumerate) {
  const Printer out(g.machine);
  if (!enumerate) {
    const CompatibilityFrame f = parse_frame(read_file(path));
    out.field("frame", describe(f));
    return report_frame(out, f, "") ? kPass : kFail;
  }
  const auto frames = enumerate_frames(*enumerate);
  bool ok = true;
  std::size_t kleene = 0;
  if (!g.machine)
    std::cout << "  #  dni   dne   kleene  frame  |-~~p  ~~p|-  kalman  shape\n";
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const FrameRow r = classify(frames[i]);
    ok = ok && (!r.dni.holds || r.valid_dni) && (!r.dne.holds || r.valid_dne) && r.kleene.holds == r.valid_kalman;
    kleene += r.kleene_frame;
    auto b = [](bool v) { return std::string(v ? "true " : "false"); };
    if (g.machine) {
      std::cout << "frame=" << i << " dni=" << r.dni.holds << " dne=" << r.dne.holds
                << " kleene=" << r.kleene.holds << " kleene_frame=" << r.kleene_frame
                << " validates.dni=" << r.valid_dni << " validates.dne=" << r.valid_dne
                << " validates.kleene=" << r.valid_kalman << "\n";
    } else {
      std::printf("%3zu  %s %s %s   %s  %s  %s  %s   %s\n", i, b(r.dni.holds).c_str(), b(r.dne.holds).c_str(),
                  b(r.kleene.holds).c_str(), b(r.kleene_frame).c_str(), b(r.valid_dni).c_str(),
                  b(r.valid_dne).c_str(), b(r.valid_kalman).c_str(), describe(frames[i]).c_str());
    }
  }
  out.field("frames", frames.size());
  out.field("kleene_frames", kleene);
  out.field("conditions_consistent", ok);
  return ok ? kPass : kFail;
}

// --- fuzz ----------------------------------------------------------------------------------

int cmd_fuzz(const Globals& g, FuzzOptions options) {
  if (g.seed) options.seed = *g.seed;
  const FuzzReport report = run_fuzz(options);
  const Printer out(g.machine);
  out.field("seed", std::to_string(options.seed));
  out.field("formulas", options.formulas);
  out.field("depth", options.depth);
  out.field("variables", options.variables);
  out.field("mutant", options.inject_mutant);
  out.field("valid", report.valid);
  out.field("agreement", std::to_string(report.agreed) + "/" + std::to_string(options.formulas));
  for (const auto& d : report.disagreements)
    out.field("disagreement", "#" + std::to_string(d.index) + " " + d.consequent + " [" + d.source + "] " +
                                  d.detail + " (reproduce with --seed " + std::to_string(options.seed) + ")");
  return report.ok() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kleene algebras, rough sets and the three-valued logic of Kleene algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--machine", g.machine, "Print key=value records");
  app.add_option("--max-size", g.max_size, "Largest algebra to embed or enumerate")->check(CLI::Range(1, 4096));
  app.add_option("--seed", g.seed, "Seed for randomized commands");

  std::string consequent;
  auto* decide_cmd = app.add_subcommand("decide", "Decide a consequent in the three-valued logic");
  decide_cmd->add_option("consequent", consequent, "e.g. 'p & ~p |- q | ~q'")->required();

  std::string proof_path;
  auto* proof_cmd = app.add_subcommand("check-proof", "Check a derivation file");
  proof_cmd->add_option("file", proof_path)->required()->check(CLI::ExistingFile);

  std::string algebra_path;
  auto* algebra_cmd = app.add_subcommand("algebra", "Algebra utilities");
  algebra_cmd->require_subcommand(1);
  auto* verify_cmd = algebra_cmd->add_subcommand("verify", "Check the Kleene axioms on an algebra file");
  verify_cmd->add_option("file", algebra_path)->required()->check(CLI::ExistingFile);

  std::string represent_path, out_dir, verify_dir;
  auto* represent_cmd = app.add_subcommand("represent", "Represent a Kleene algebra by rough sets");
  represent_cmd->add_option("file", represent_path)->check(CLI::ExistingFile);
  represent_cmd->add_option("--out", out_dir, "Write space.json and representation.json here");
  represent_cmd->add_option("--verify", verify_dir, "Reload a written representation and re-verify it")
      ->check(CLI::ExistingDirectory);

  std::string space_path, set_text;
  auto* rough_cmd = app.add_subcommand("rough", "Rough set utilities");
  rough_cmd->require_subcommand(1);
  auto* approx_cmd = rough_cmd->add_subcommand("approx", "Lower and upper approximations of a set");
  approx_cmd->add_option("space", space_path)->required()->check(CLI::ExistingFile);
  approx_cmd->add_option("set", set_text, "e.g. '1,3' or '{1,3}'")->required();

  std::string frame_path;
  std::optional<std::size_t> enumerate;
  auto* frames_cmd = app.add_subcommand("frames", "Classify compatibility frames");
  auto* frame_file = frames_cmd->add_option("file", frame_path)->check(CLI::ExistingFile);
  auto* frame_enum = frames_cmd->add_option("--enumerate", enumerate, "All frames up to k worlds")
                         ->check(CLI::Range(1, 4));
  frame_file->excludes(frame_enum);

  FuzzOptions fuzz;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Cross-check every semantics on random consequents");
  fuzz_cmd->add_option("--formulas", fuzz.formulas)->check(CLI::Range(1, 1000000));
  fuzz_cmd->add_option("--depth", fuzz.depth)->check(CLI::Range(0, 12));
  fuzz_cmd->add_option("--variables", fuzz.variables)->check(CLI::Range(1, 3));
  fuzz_cmd->add_flag("--inject-mutant", fuzz.inject_mutant, "Add a corrupted algebra to the fleet");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kBadInput;
  }

  try {
    if (*decide_cmd) return cmd_decide(g, consequent);
    if (*proof_cmd) return cmd_check_proof(g, proof_path);
    if (*verify_cmd) return cmd_algebra_verify(g, algebra_path);
    if (*represent_cmd) {
      if (represent_path.empty() == verify_dir.empty()) {
        std::cerr << "represent: give an algebra file or --verify DIR\n";
        return kBadInput;
      }
      return cmd_represent(g, represent_path, out_dir, verify_dir);
    }
    if (*approx_cmd) return cmd_rough_approx(g, space_path, set_text);
    if (*frames_cmd) {
      if (frame_path.empty() && !enumerate) {
        std::cerr << "frames: give a frame file or --enumerate k\n";
        return kBadInput;
      }
      return cmd_frames(g, frame_path, enumerate);
    }
    if (*fuzz_cmd) return cmd_fuzz(g, fuzz);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}

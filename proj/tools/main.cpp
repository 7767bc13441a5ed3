// pointlike: batch CLI over the pointlike-core library.
//
// Commands: pointlikes | idempotent-pointlikes | witness | reduce-da |
// membership | syntactic | eval-term.  Reports are JSON on stdout,
// diagnostics and timing go to stderr.  Exit codes: 0 all requested
// verifications passed, 2 file/format errors, 3 subset not in the family,
// 4 reduction precondition falsified, 5 tower undetermined, 1 anything else.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pointlike/corpus.hpp"
#include "pointlike/da_reduction.hpp"
#include "pointlike/dfa.hpp"
#include "pointlike/errors.hpp"
#include "pointlike/json_io.hpp"
#include "pointlike/saturation.hpp"
#include "pointlike/variety.hpp"
#include "pointlike/witness.hpp"

namespace {

using nlohmann::json;
using namespace pointlike;

PrimeSet make_pi(std::string const& pi, std::string const& pi_complement) {
  if (!pi.empty() && !pi_complement.empty()) {
    throw Error("--pi and --pi-complement are mutually exclusive");
  }
  if (!pi_complement.empty()) {
    return PrimeSet::parse("all-except-" + pi_complement);
  }
  if (pi.empty()) {
    return PrimeSet::empty();
  }
  return PrimeSet::parse(pi);
}

Subset parse_subset(std::string const& text, unsigned order) {
  Subset mask = 0;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    unsigned x = static_cast<unsigned>(std::stoul(item));
    if (x >= order) {
      throw IoError("subset element " + item + " out of range");
    }
    mask |= singleton_subset(x);
  }
  if (mask == 0) {
    throw IoError("empty subset");
  }
  return mask;
}

json subset_json(Subset P) {
  json out = json::array();
  for (unsigned x : subset_elements(P)) {
    out.push_back(x);
  }
  return out;
}

json derivation_json(DerivationStep const& step) {
  json out;
  switch (step.kind) {
    case DerivationStep::Kind::singleton:
      out["kind"] = "singleton";
      out["element"] = step.element;
      break;
    case DerivationStep::Kind::subset_of:
      out["kind"] = "subset_of";
      out["parent"] = step.parent;
      break;
    case DerivationStep::Kind::product:
      out["kind"] = "product";
      out["left"] = step.left;
      out["right"] = step.right;
      break;
    case DerivationStep::Kind::omega_star:
      out["kind"] = "omega_star";
      out["base"] = step.base;
      out["k"] = step.k;
      break;
  }
  return out;
}

json input_json(std::string const& path, std::string const& bytes) {
  json out;
  out["path"] = path;
  out["digest"] = digest_hex(bytes);
  return out;
}

json family_json(SaturationResult const& result) {
  // members sorted by canonical integer encoding, ids preserved for the
  // derivation references
  std::vector<std::uint32_t> ids(result.members.size());
  for (std::uint32_t i = 0; i < ids.size(); ++i) {
    ids[i] = i;
  }
  std::sort(ids.begin(), ids.end(), [&](std::uint32_t a, std::uint32_t b) {
    return result.members[a] < result.members[b];
  });
  json family = json::array();
  for (std::uint32_t id : ids) {
    Subset P = result.members[id];
    json entry;
    entry["id"] = id;
    entry["elements"] = subset_json(P);
    entry["maximal"] = std::binary_search(result.maximal.begin(),
                                          result.maximal.end(), P);
    entry["derivation"] = derivation_json(result.steps[id]);
    family.push_back(std::move(entry));
  }
  return family;
}

Presentation require_presentation(SemigroupFile const& file) {
  if (!file.presentation) {
    throw IoError("this command needs \"alphabet\" and \"letter_map\"");
  }
  return *file.presentation;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  ~Timer() {
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    std::cerr << "elapsed: " << elapsed.count() << " ms\n";
  }
};

int run(int argc, char** argv) {
  CLI::App app{"finite-semigroup pointlike sets, term witnesses, DA reduction"};
  app.require_subcommand(1);

  std::string semigroup_path, terms_path, dfa_path;
  std::string pi_spec, pi_complement_spec;
  std::string subset_spec, variety_name, term_text;
  bool idempotent = false;
  std::size_t tower_cap = 64;

  auto add_pi = [&](CLI::App* cmd) {
    cmd->add_option("--pi", pi_spec, "prime set: 'empty', 'all' or a list '2,3'");
    cmd->add_option("--pi-complement", pi_complement_spec,
                    "complement of a prime list, e.g. '2'");
  };

  auto* cmd_pointlikes = app.add_subcommand("pointlikes", "saturation family");
  cmd_pointlikes->add_option("semigroup", semigroup_path)->required();
  add_pi(cmd_pointlikes);

  auto* cmd_ipl = app.add_subcommand("idempotent-pointlikes",
                                     "idempotent pointlike family");
  cmd_ipl->add_option("semigroup", semigroup_path)->required();
  add_pi(cmd_ipl);

  auto* cmd_witness = app.add_subcommand("witness", "term witness for a subset");
  cmd_witness->add_option("semigroup", semigroup_path)->required();
  cmd_witness->add_option("--subset", subset_spec, "element indices, e.g. '0,1'")
      ->required();
  cmd_witness->add_flag("--idempotent", idempotent,
                        "witness the subset as idempotent pointlike");
  add_pi(cmd_witness);

  auto* cmd_reduce = app.add_subcommand("reduce-da", "DA tuple reduction");
  cmd_reduce->add_option("semigroup", semigroup_path)->required();
  cmd_reduce->add_option("terms", terms_path)->required();
  cmd_reduce->add_flag("--idempotent", idempotent, "idempotent variant");
  cmd_reduce->add_option("--cap", tower_cap, "tower layer cap");

  auto* cmd_membership = app.add_subcommand("membership", "pseudovariety test");
  cmd_membership->add_option("semigroup", semigroup_path)->required();
  cmd_membership
      ->add_option("--variety", variety_name,
                   "A | G-pi-bar | DA | DO | DO-G-pi-bar")
      ->required();
  add_pi(cmd_membership);

  auto* cmd_syntactic = app.add_subcommand("syntactic", "transition semigroup of a DFA");
  cmd_syntactic->add_option("dfa", dfa_path)->required();

  auto* cmd_eval = app.add_subcommand("eval-term", "evaluate a term");
  cmd_eval->add_option("semigroup", semigroup_path)->required();
  cmd_eval->add_option("--term", term_text, "s-expression")->required();
  add_pi(cmd_eval);

  CLI11_PARSE(app, argc, argv);
  Timer timer;
  PrimeSet pi = make_pi(pi_spec, pi_complement_spec);
  json report;
  bool verified = true;

  if (app.got_subcommand(cmd_pointlikes) || app.got_subcommand(cmd_ipl)) {
    std::string bytes = read_file(semigroup_path);
    SemigroupFile file = parse_semigroup_json(bytes);
    SaturationResult result = saturate(file.semigroup, pi);
    report["inputs"]["semigroup"] = input_json(semigroup_path, bytes);
    report["order"] = result.order;
    report["pi"] = pi.to_string();
    report["engine"] = result.engine_used == SaturationEngine::dense
                           ? "dense"
                           : "representative";
    if (app.got_subcommand(cmd_pointlikes)) {
      report["command"] = "pointlikes";
      report["family"] = family_json(result);
      report["family_complete"] = result.family_complete;
      report["family_size"] = result.members.size();
      json maximal = json::array();
      for (Subset M : result.maximal) {
        maximal.push_back(subset_json(M));
      }
      report["maximal"] = std::move(maximal);
    } else {
      report["command"] = "idempotent-pointlikes";
      IdempotentPointlikes ipl = idempotent_pointlikes(file.semigroup, result);
      json members = json::array();
      for (Subset P : ipl.members) {
        members.push_back(subset_json(P));
      }
      report["family"] = std::move(members);
      report["family_complete"] = ipl.complete;
      report["family_size"] = ipl.members.size();
      json maximal = json::array();
      for (Subset M : ipl.maximal) {
        maximal.push_back(subset_json(M));
      }
      report["maximal"] = std::move(maximal);
    }
  } else if (app.got_subcommand(cmd_witness)) {
    std::string bytes = read_file(semigroup_path);
    SemigroupFile file = parse_semigroup_json(bytes);
    Presentation P = require_presentation(file);
    Subset target = parse_subset(subset_spec, file.semigroup.order());
    SaturationResult result = saturate(file.semigroup, pi);
    WitnessSynthesizer synth(P, pi, result);
    WitnessMap w = idempotent ? synth.synthesize_idempotent(target)
                              : synth.synthesize(target);
    Corpus corpus = generate_corpus(Variety::g_pi_bar(pi), 4);
    WitnessReport verification = verify_witness(P, pi, w, corpus);
    verified = verification.passed();

    report["command"] = "witness";
    report["inputs"]["semigroup"] = input_json(semigroup_path, bytes);
    report["pi"] = pi.to_string();
    report["idempotent"] = idempotent;
    report["subset"] = subset_json(target);
    json cert;
    cert["subset"] = subset_json(w.subset);
    cert["idempotent_projection"] = w.idempotent_projection;
    json terms = json::object();
    for (auto const& [x, t] : w.assignments) {
      terms[std::to_string(x)] = format_term(t);
    }
    cert["terms"] = std::move(terms);
    json trace = json::array();
    if (auto id = result.find(w.subset)) {
      // transitive closure of the derivation references; ids ascend, so the
      // sorted order is topological
      std::vector<std::uint32_t> stack{*id};
      std::set<std::uint32_t> reached;
      while (!stack.empty()) {
        std::uint32_t cur = stack.back();
        stack.pop_back();
        if (!reached.insert(cur).second) {
          continue;
        }
        DerivationStep const& step = result.steps[cur];
        if (step.kind == DerivationStep::Kind::subset_of) {
          stack.push_back(step.parent);
        } else if (step.kind == DerivationStep::Kind::product) {
          stack.push_back(step.left);
          stack.push_back(step.right);
        } else if (step.kind == DerivationStep::Kind::omega_star) {
          stack.push_back(step.base);
        }
      }
      for (std::uint32_t cur : reached) {
        json entry;
        entry["id"] = cur;
        entry["elements"] = subset_json(result.members[cur]);
        entry["step"] = derivation_json(result.steps[cur]);
        trace.push_back(std::move(entry));
      }
    }
    cert["derivation_trace"] = std::move(trace);
    report["certificate"] = std::move(cert);
    json verif;
    verif["phi_ok"] = verification.phi_ok;
    verif["projection_counterexample"] =
        verification.projection_counterexample
            ? json(verification.projection_counterexample->to_string())
            : json(nullptr);
    verif["idempotent_counterexample"] =
        verification.idempotent_counterexample
            ? json(verification.idempotent_counterexample->to_string())
            : json(nullptr);
    verif["passed"] = verification.passed();
    report["verification"] = std::move(verif);
  } else if (app.got_subcommand(cmd_reduce)) {
    std::string bytes = read_file(semigroup_path);
    std::string term_bytes = read_file(terms_path);
    SemigroupFile file = parse_semigroup_json(bytes);
    Presentation P = require_presentation(file);
    std::vector<Term> terms = parse_terms_json(term_bytes);
    ReduceOptions options;
    options.tower_cap = tower_cap;
    ReduceReport result = reduce_and_verify(P, terms, idempotent, options);
    verified = result.passed();

    report["command"] = "reduce-da";
    report["inputs"]["semigroup"] = input_json(semigroup_path, bytes);
    report["inputs"]["terms"] = input_json(terms_path, term_bytes);
    report["idempotent"] = idempotent;
    json inputs = json::array(), outputs = json::array(), images = json::array();
    for (auto const& t : terms) {
      inputs.push_back(format_term(t));
    }
    for (auto const& t : result.outputs) {
      outputs.push_back(format_term(t));
      images.push_back(eval_term(P, t, PrimeSet::empty()));
    }
    report["input_terms"] = std::move(inputs);
    report["outputs"] = std::move(outputs);
    report["phi_images"] = std::move(images);
    json checks;
    checks["phi_preserved"] = result.phi_preserved;
    checks["outputs_pure_omega"] = result.outputs_pure_omega;
    checks["corpus_counterexample"] =
        result.corpus_counterexample
            ? json(result.corpus_counterexample->to_string())
            : json(nullptr);
    checks["squared_counterexample"] =
        result.squared_counterexample
            ? json(result.squared_counterexample->to_string())
            : json(nullptr);
    checks["passed"] = result.passed();
    report["checks"] = std::move(checks);
  } else if (app.got_subcommand(cmd_membership)) {
    std::string bytes = read_file(semigroup_path);
    SemigroupFile file = parse_semigroup_json(bytes);
    Variety variety = Variety::parse(variety_name, pi);
    report["command"] = "membership";
    report["inputs"]["semigroup"] = input_json(semigroup_path, bytes);
    report["variety"] = variety_name;
    report["pi"] = pi.to_string();
    report["member"] = membership(file.semigroup, variety);
  } else if (app.got_subcommand(cmd_syntactic)) {
    std::string bytes = read_file(dfa_path);
    Dfa dfa = parse_dfa_json(bytes);
    Presentation P = syntactic_from_dfa(dfa);
    report["command"] = "syntactic";
    report["inputs"]["dfa"] = input_json(dfa_path, bytes);
    report["order"] = P.semigroup().order();
    report["semigroup"] = json::parse(serialize_presentation_json(P));
  } else if (app.got_subcommand(cmd_eval)) {
    std::string bytes = read_file(semigroup_path);
    SemigroupFile file = parse_semigroup_json(bytes);
    Presentation P = require_presentation(file);
    Term t = parse_term(term_text);
    report["command"] = "eval-term";
    report["inputs"]["semigroup"] = input_json(semigroup_path, bytes);
    report["term"] = format_term(t);
    report["pi"] = pi.to_string();
    report["element"] = eval_term(P, t, pi);
  }

  std::cout << report.dump(2) << "\n";
  return verified ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (NotInFamily const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (PreconditionFalsified const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (TowerUndetermined const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (NotIdempotentLike const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (IoError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (SyntaxError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (IncompleteAutomaton const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (AssociativityViolation const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (UnknownLetter const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

// cprforge: generate, glue and check permutation representation graphs.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cprforge/cprforge.hpp"

namespace {

using namespace cprforge;

struct FamilyArgs {
  std::optional<int> r, h, i, k;

  void attach(CLI::App* cmd) {
    cmd->add_option("--r", r, "rank parameter r");
    cmd->add_option("--h", h, "parameter h");
    cmd->add_option("--i", i, "parameter i");
    cmd->add_option("--k", k, "number of copies k");
  }

  FamilySpec spec(const std::string& name) const {
    FamilySpec s{name, {}};
    if (r) s.params["r"] = *r;
    if (h) s.params["h"] = *h;
    if (i) s.params["i"] = *i;
    if (k) s.params["k"] = *k;
    return s;
  }
};

void print_catalogue(std::ostream& os) {
  for (const auto& f : family_catalogue()) {
    os << "  " << f.name;
    for (const auto& p : f.params) os << " --" << p << " N";
    os << "\n      " << f.summary << "\n";
  }
}

std::string family_help(const std::string& name) {
  const auto canonical = canonical_family_name(name);
  for (const auto& f : family_catalogue())
    if (f.name == canonical) return f.name + ": " + f.summary;
  return "known families:\n" + [] {
    std::ostringstream os;
    print_catalogue(os);
    return os.str();
  }();
}

void write_graph(const LabeledGraph& g, const std::string& out) {
  if (out.empty() || out == "-")
    std::cout << serialize_prg(g);
  else
    write_prg_file(out, g);
}

std::string window_text(const LabeledGraph& g) {
  auto w = g.window();
  return w ? "[" + std::to_string(w->lo) + ", " + std::to_string(w->hi) + "]" : "(no labels)";
}

std::uint64_t default_cap() {
  if (const char* env = std::getenv("CPRFORGE_CAP")) {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring CPRFORGE_CAP='" << env << "' (expected a positive integer)\n";
  }
  return kDefaultIntersectionCap;
}

void print_summary(const Report& rep, std::ostream& os) {
  if (rep.error) {
    os << "error (" << rep.error->type << "): " << rep.error->message << "\n";
    if (rep.error->type == "IntersectionTooLarge") {
      os << "  while intersecting <";
      for (int l : rep.error->left) os << " " << l;
      os << " > and <";
      for (int l : rep.error->right) os << " " << l;
      os << " >; raise --cap or CPRFORGE_CAP\n";
    }
    return;
  }
  os << "degree " << rep.degree << ", window [" << rep.window->lo << ", " << rep.window->hi << "], rank " << rep.window->rank() << "\n";
  os << "group order " << rep.group_order << "\n";
  if (!rep.schlafli.empty()) {
    os << "schlafli {";
    for (std::size_t k = 0; k < rep.schlafli.size(); ++k) os << (k ? "," : "") << rep.schlafli[k];
    os << "}\n";
  }
  if (!rep.string_property.pass) {
    os << "string property fails: rho_" << rep.string_property.label_i << " and rho_" << rep.string_property.label_j
       << " do not commute\n";
  } else if (rep.certificate->pass) {
    os << "string C-group (" << to_string(rep.mode) << " check)\n";
  } else {
    const auto& c = *rep.certificate;
    auto list = [](const std::vector<int>& v) {
      std::string s = "{";
      for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
      return s + "}";
    };
    os << "intersection property fails (" << to_string(rep.mode) << " check): <" << list(c.left) << "> ∩ <" << list(c.right)
       << "> has order " << c.actual_order << ", expected " << c.expected_order << "\n";
    os << "witness " << to_cycle_string(*c.witness) << "\n";
  }
  if (rep.structure && rep.structure->named_match) os << "structure matches " << rep.structure->named_match->text() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation representation graphs and string C-groups"};
  app.set_help_flag("--help", "Print this help message and exit");  // -h would clash with the family parameter --h
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "write a graph family instance in PRG format");
  std::string gen_family, gen_out;
  bool gen_list = false;
  FamilyArgs gen_args;
  gen->add_option("family", gen_family, "family name (hyphens or underscores)");
  gen_args.attach(gen);
  gen->add_option("-o,--output", gen_out, "output file (default: stdout)");
  gen->add_flag("--list", gen_list, "list the families and their parameters");

  // check
  auto* check = app.add_subcommand("check", "decide whether a graph is a CPR graph");
  std::string check_path, check_family, json_out, mode_name = "recursive";
  FamilyArgs check_args;
  std::optional<std::uint64_t> cap;
  unsigned jobs = 1;
  bool any_failure = false, no_structure = false;
  check->add_option("path", check_path, "PRG file");
  check->add_option("--family", check_family, "check a generated family instead of a file");
  check_args.attach(check);
  check->add_option("--mode", mode_name, "intersection check: recursive or full")->check(CLI::IsMember({"recursive", "full"}));
  check->add_option("--cap", cap, "largest group enumerated when intersecting (default 5000000, or CPRFORGE_CAP)");
  check->add_option("--jobs", jobs, "threads for the full check")->check(CLI::PositiveNumber);
  check->add_flag("--any-failure", any_failure, "with --jobs, report whichever failure is found first");
  check->add_option("--json", json_out, "write the JSON report to this file ('-' for stdout)");
  check->add_flag("--no-structure", no_structure, "skip orbit and block analysis");

  // glue
  auto* glue = app.add_subcommand("glue", "glue graphs with one of the three constructions");
  std::string method, glue_out;
  std::vector<std::string> glue_inputs;
  std::optional<int> glue_i;
  glue->add_option("--method", method, "theorem1, pendant or conjecture")->required()->check(CLI::IsMember({"theorem1", "pendant", "conjecture"}));
  glue->add_option("inputs", glue_inputs, "input PRG files")->required();
  glue->add_option("--i", glue_i, "parameter i for the conjecture gluing");
  glue->add_option("-o,--output", glue_out, "output file (default: stdout)");

  // paper
  auto* paper = app.add_subcommand("paper", "run the reproduction suite");
  std::vector<std::string> case_names;
  bool paper_list = false, verbose = false;
  paper->add_option("--case", case_names, "run only these cases");
  paper->add_flag("--list", paper_list, "list the cases");
  paper->add_flag("-v,--verbose", verbose, "print every check, not just failures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : exit_error;  // usage errors share the validation exit code
  }

  try {
    if (*gen) {
      if (gen_list) {
        print_catalogue(std::cout);
        return 0;
      }
      if (gen_family.empty()) {
        std::cerr << "gen: a family name is required; known families:\n";
        print_catalogue(std::cerr);
        return exit_error;
      }
      LabeledGraph g;
      try {
        g = make_family(gen_args.spec(gen_family));
      } catch (const ParameterRange& e) {
        std::cerr << "gen: " << e.what() << "\n" << family_help(gen_family) << "\n";
        return exit_error;
      }
      write_graph(g, gen_out);
      return 0;
    }

    if (*check) {
      if (check_path.empty() == check_family.empty()) {
        std::cerr << "check: give either a PRG file or --family\n";
        return exit_error;
      }
      InputDescriptor input;
      LabeledGraph g;
      Report rep;
      bool loaded = false;
      try {
        if (!check_family.empty()) {
          input.family = check_args.spec(check_family);
          g = make_family(*input.family);
        } else {
          input.path = check_path;
          g = read_prg_file(check_path);
        }
        loaded = true;
      } catch (const Error& e) {
        rep.input = input;
        rep.error = Report::ErrorInfo{"InputError", e.what(), {}, {}};
        rep.exit_code = exit_error;
      }
      if (loaded) {
        CheckOptions options;
        options.mode = mode_name == "full" ? IpMode::full : IpMode::recursive;
        options.ip.cap = cap ? *cap : default_cap();
        options.ip.jobs = jobs;
        options.ip.any_failure = any_failure;
        options.structure = !no_structure;
        rep = check_graph(g, input, options);
      }
      if (json_out == "-") {
        std::cout << to_json(rep).dump(2) << "\n";
      } else {
        print_summary(rep, rep.error ? std::cerr : std::cout);
        if (!json_out.empty()) {
          std::ofstream out(json_out);
          if (!out) {
            std::cerr << "check: cannot write " << json_out << "\n";
            return exit_error;
          }
          out << to_json(rep).dump(2) << "\n";
        }
      }
      return rep.exit_code;
    }

    if (*glue) {
      std::vector<LabeledGraph> graphs;
      for (const auto& path : glue_inputs) graphs.push_back(read_prg_file(path));
      LabeledGraph out;
      if (method == "theorem1") {
        if (graphs.size() != 2) throw std::invalid_argument("theorem1 gluing takes two input graphs");
        out = glue_theorem1(graphs[0], graphs[1]);
      } else {
        if (graphs.size() != 1) throw std::invalid_argument(method + " gluing takes one input graph");
        if (method == "pendant") {
          out = pendant_minus_one(graphs[0]);
        } else {
          if (!glue_i) throw std::invalid_argument("conjecture gluing needs --i");
          out = conjecture_glue(graphs[0], *glue_i);
        }
      }
      write_graph(out, glue_out);
      (glue_out.empty() || glue_out == "-" ? std::cerr : std::cout) << "label window " << window_text(out) << "\n";
      return 0;
    }

    if (*paper) {
      const auto& all = reproduction::cases();
      if (paper_list) {
        for (const auto& c : all) std::cout << c.name << "  " << c.summary << "\n";
        return 0;
      }
      for (const auto& name : case_names)
        if (std::none_of(all.begin(), all.end(), [&](const reproduction::Case& c) { return c.name == name; })) {
          std::cerr << "paper: unknown case '" << name << "' (see --list)\n";
          return exit_error;
        }
      bool all_pass = true;
      for (const auto& c : all) {
        if (!case_names.empty() && std::find(case_names.begin(), case_names.end(), c.name) == case_names.end()) continue;
        auto res = c.run();
        all_pass = all_pass && res.pass;
        std::cout << (res.pass ? "PASS " : "FAIL ") << c.name << "\n";
        for (const auto& line : res.lines)
          if (verbose || line.rfind("FAIL", 0) == 0) std::cout << "    " << line << "\n";
      }
      return all_pass ? 0 : exit_error;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_error;
  }
  return 0;
}

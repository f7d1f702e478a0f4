#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cprforge/analysis.hpp"
#include "cprforge/constructions.hpp"
#include "cprforge/errors.hpp"
#include "cprforge/labeled_graph.hpp"
#include "cprforge/sggi.hpp"

namespace cprforge {

inline constexpr const char* kReportSchema = "cprforge-report/1";

enum ExitCode : int { exit_c_group = 0, exit_error = 1, exit_ip_fails = 2, exit_sp_fails = 3 };

/// Where the graph came from; exactly one of `path` or `family` is set.
struct InputDescriptor {
  std::optional<std::string> path;
  std::optional<FamilySpec> family;
};

struct CheckOptions {
  IpMode mode = IpMode::recursive;
  IpOptions ip;
  bool structure = true;  // compute the fingerprint
};

/// Everything `check` learns about one graph. Timings are the only nondeterministic part.
struct Report {
  InputDescriptor input;
  std::size_t degree = 0;
  std::optional<LabelWindow> window;
  bool sggi = false;
  StringPropertyVerdict string_property;
  std::vector<std::uint64_t> schlafli;
  std::uint64_t group_order = 0;
  bool string_c_group = false;
  IpMode mode = IpMode::recursive;
  std::optional<IpCertificate> certificate;
  std::optional<Fingerprint> structure;
  std::map<std::string, double> timings_ms;
  int exit_code = exit_error;

  struct ErrorInfo {
    std::string type;
    std::string message;
    std::vector<int> left, right;  // only for IntersectionTooLarge
  };
  std::optional<ErrorInfo> error;
};

namespace detail {

class PhaseTimer {
 public:
  explicit PhaseTimer(std::map<std::string, double>& sink) : sink_(sink), start_(std::chrono::steady_clock::now()) {}
  void lap(const std::string& phase) {
    auto now = std::chrono::steady_clock::now();
    sink_[phase] = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
  }

 private:
  std::map<std::string, double>& sink_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

inline Report check_graph(const LabeledGraph& g, const InputDescriptor& input, const CheckOptions& options = {}) {
  Report rep;
  rep.input = input;
  rep.degree = g.vertex_count();
  rep.window = g.window();
  rep.mode = options.mode;
  detail::PhaseTimer timer(rep.timings_ms);
  try {
    const Sggi s = Sggi::from_graph(g);
    rep.group_order = s.group()->order();
    timer.lap("group");
    rep.string_property = check_string_property(s);
    rep.sggi = rep.string_property.pass;
    if (s.rank() >= 2) rep.schlafli = schlafli_type(s);
    timer.lap("string_property");
    if (rep.sggi) {
      rep.certificate = options.mode == IpMode::recursive ? check_ip_recursive(s, options.ip.cap) : check_ip_full(s, options.ip);
      rep.string_c_group = rep.certificate->pass;
      timer.lap("intersection");
    }
    if (options.structure) {
      rep.structure = fingerprint(*s.group());
      timer.lap("structure");
    }
    rep.exit_code = !rep.sggi ? exit_sp_fails : rep.string_c_group ? exit_c_group : exit_ip_fails;
  } catch (const IntersectionTooLarge& e) {
    rep.error = Report::ErrorInfo{"IntersectionTooLarge", e.what(), e.left_labels, e.right_labels};
    rep.exit_code = exit_error;
  } catch (const Error& e) {
    rep.error = Report::ErrorInfo{"ValidationError", e.what(), {}, {}};
    rep.exit_code = exit_error;
  }
  return rep;
}

inline std::string named_kind_id(NamedKind kind) {
  switch (kind) {
    case NamedKind::symmetric: return "S_n";
    case NamedKind::product_of_symmetric: return "S_a x S_b";
    case NamedKind::c2_wr_s: return "C2 wr S_r";
    case NamedKind::s_wr_c2: return "S_r wr C2";
    case NamedKind::s_times_h: return "S_t x H";
  }
  return {};
}

inline nlohmann::json to_json(const Fingerprint& fp) {
  nlohmann::json j;
  j["orbit_sizes"] = fp.orbit_sizes;
  j["orbit_orders"] = fp.orbit_orders;
  j["transitive"] = fp.transitive;
  j["primitive"] = fp.primitive ? nlohmann::json(*fp.primitive) : nlohmann::json(nullptr);
  j["orbit_primitive"] = fp.orbit_primitive;
  j["group_order"] = fp.group_order;
  j["factorization_check"] = fp.factorization_check;
  nlohmann::json shapes = nlohmann::json::array();
  for (auto [count, size] : fp.block_shapes) shapes.push_back({{"blocks", count}, {"size", size}});
  j["block_systems"] = shapes;
  if (fp.named_match)
    j["named_match"] = {{"kind", named_kind_id(fp.named_match->kind)},
                        {"params", fp.named_match->params},
                        {"text", fp.named_match->text()}};
  else
    j["named_match"] = nullptr;
  return j;
}

inline nlohmann::json to_json(const IpCertificate& c) {
  return {{"status", c.pass ? "pass" : "fail"},
          {"I", c.left},
          {"J", c.right},
          {"expected_order", c.expected_order},
          {"actual_order", c.actual_order},
          {"witness", c.witness ? nlohmann::json(to_cycle_string(*c.witness)) : nlohmann::json(nullptr)}};
}

inline nlohmann::json to_json(const Report& rep, bool include_timings = true) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  if (rep.input.family) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : rep.input.family->params) params[k] = v;
    j["input"] = {{"kind", "family"}, {"family", canonical_family_name(rep.input.family->name)}, {"params", params}};
  } else {
    j["input"] = {{"kind", "file"}, {"path", rep.input.path.value_or("")}};
  }
  j["degree"] = rep.degree;
  j["label_window"] = rep.window ? nlohmann::json{{"lo", rep.window->lo}, {"hi", rep.window->hi}, {"rank", rep.window->rank()}}
                                 : nlohmann::json(nullptr);
  j["mode"] = to_string(rep.mode);
  j["exit_code"] = rep.exit_code;
  if (rep.error) {
    j["error"] = {{"type", rep.error->type}, {"message", rep.error->message}};
    if (rep.error->type == "IntersectionTooLarge") {
      j["error"]["I"] = rep.error->left;
      j["error"]["J"] = rep.error->right;
    }
  } else {
    j["error"] = nullptr;
  }
  j["sggi"] = rep.sggi;
  j["string_property"] = {{"pass", rep.string_property.pass},
                          {"failing_pair", rep.string_property.pass ? nlohmann::json(nullptr)
                                                                    : nlohmann::json{rep.string_property.label_i, rep.string_property.label_j}}};
  j["schlafli"] = rep.schlafli;
  j["group_order"] = rep.group_order;
  j["string_c_group"] = rep.string_c_group;
  j["certificate"] = rep.certificate ? to_json(*rep.certificate) : nlohmann::json(nullptr);
  j["structure"] = rep.structure ? to_json(*rep.structure) : nlohmann::json(nullptr);
  if (include_timings) {
    nlohmann::json t = nlohmann::json::object();
    for (const auto& [k, v] : rep.timings_ms) t[k] = v;
    j["timings_ms"] = t;
  }
  return j;
}

}  // namespace cprforge

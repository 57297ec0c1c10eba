#include "lam/trace_io.hpp"

#include <map>
#include <set>
#include <tuple>

#include <json.hpp>

#include "lam/parser.hpp"

namespace lam {

namespace {

std::string show(const TermPtr& t, const RenderOptions& options) {
  return pretty_print(options.canon ? canonicalize(t) : t, options.sugar);
}

const char* dir_name(Dir d) {
  switch (d) {
    case Dir::Func: return "func";
    case Dir::Arg: return "arg";
    case Dir::Body: return "body";
  }
  return "?";
}

}  // namespace

std::string render_text(const Trace& trace, const RenderOptions& options) {
  std::string out = show(trace.initial, options) + "\n";
  for (const ReductionStep& step : trace.steps) {
    out += "→ " + show(step.after, options) + "\n";
  }
  if (const auto* limit = std::get_if<StepLimit>(&trace.outcome)) {
    out += "-- step limit " + std::to_string(limit->limit) + " reached\n";
  }
  return out;
}

std::string render_json(const Trace& trace, const RenderOptions& options) {
  nlohmann::ordered_json doc;
  doc["version"] = "1";
  doc["initial"] = show(trace.initial, options);
  doc["steps"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const ReductionStep& step = trace.steps[i];
    nlohmann::ordered_json entry;
    entry["index"] = i;
    entry["redex_path"] = nlohmann::ordered_json::array();
    for (Dir d : step.path) entry["redex_path"].push_back(dir_name(d));
    entry["substitution"] = {{"var", step.target},
                             {"replacement", show(step.replacement, options)}};
    entry["renames"] = nlohmann::ordered_json::array();
    for (const Rename& r : step.renames) {
      entry["renames"].push_back({{"old", r.from}, {"new", r.to}});
    }
    entry["result"] = show(step.after, options);
    doc["steps"].push_back(std::move(entry));
  }
  if (const auto* nf = std::get_if<NormalForm>(&trace.outcome)) {
    doc["outcome"] = {{"kind", "normal_form"}, {"steps_used", nf->steps_used}};
  } else {
    doc["outcome"] = {{"kind", "step_limit"},
                      {"limit", std::get<StepLimit>(trace.outcome).limit}};
  }
  return doc.dump(2) + "\n";
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string render_dot(const Trace& trace, const RenderOptions& options) {
  // Merge nodes with identical labels so a looping reduction draws a cycle.
  std::map<std::string, std::size_t> ids;
  std::vector<std::string> labels;
  auto node = [&](const TermPtr& t) {
    std::string label = show(t, options);
    auto [it, inserted] = ids.emplace(label, labels.size());
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::size_t from = node(trace.initial);
  std::set<std::tuple<std::size_t, std::size_t, std::string>> seen;
  std::vector<std::string> edges;
  for (const ReductionStep& step : trace.steps) {
    std::size_t to = node(step.after);
    std::string label = "[" + show(step.replacement, options) + "/" + step.target + "]";
    if (seen.emplace(from, to, label).second) {
      edges.push_back("  n" + std::to_string(from) + " -> n" + std::to_string(to) +
                      " [label=\"" + dot_escape(label) + "\"];\n");
    }
    from = to;
  }

  std::string out = "digraph trace {\n  rankdir=LR;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + dot_escape(labels[i]) + "\"];\n";
  }
  for (const std::string& edge : edges) out += edge;
  out += "}\n";
  return out;
}

}  // namespace lam

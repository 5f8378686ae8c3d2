#pragma once

// Command-line front end. run_cli() does all the work and returns the text it
// would print, so the binary is a thin wrapper and tests can drive it
// in-process.

#include "argon/error.hpp"
#include "argon/extensions.hpp"
#include "argon/io/parse.hpp"
#include "argon/io/serialize.hpp"
#include "argon/labellings.hpp"
#include "argon/meta/registry.hpp"

#include <CLI11.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace argon::cli {

enum class TaskKind { SE, EE, DC, DS, LE };

struct Task {
  TaskKind kind;
  SemanticsId semantics;
};

inline std::optional<Task> parse_task(std::string_view text) {
  const auto dash = text.find('-');
  if (dash == std::string_view::npos)
    return std::nullopt;
  const auto kind = text.substr(0, dash);
  const auto sem = parse_semantics(text.substr(dash + 1));
  if (!sem)
    return std::nullopt;
  static constexpr std::pair<std::string_view, TaskKind> kinds[] = {
      {"SE", TaskKind::SE}, {"EE", TaskKind::EE}, {"DC", TaskKind::DC}, {"DS", TaskKind::DS}, {"LE", TaskKind::LE}};
  for (const auto& [name, k] : kinds)
    if (name == kind)
      return Task{k, *sem};
  return std::nullopt;
}

inline constexpr bool needs_argument(TaskKind k) { return k == TaskKind::DC || k == TaskKind::DS; }

struct Result {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_input = 2;

inline std::string solve(const Framework& af, const Task& task, std::optional<std::size_t> arg,
                         const EnumerationOptions& opts) {
  std::string out;
  switch (task.kind) {
  case TaskKind::SE:
    if (task.semantics == SemanticsId::Grounded)
      return io::serialize_extension(af, grounded_extension(af)) + "\n";
    {
      const auto exts = enumerate_extensions(af, task.semantics, opts);
      std::optional<ArgSet> first;
      if (!exts.empty())
        first = exts.front();
      return io::serialize_extension(af, first) + "\n";
    }
  case TaskKind::EE: {
    const auto exts = enumerate_extensions(af, task.semantics, opts);
    for (const auto& e : exts)
      out += io::serialize_extension(af, e) + "\n";
    return out + "# " + std::to_string(exts.size()) + "\n";
  }
  case TaskKind::DC: return credulous(af, task.semantics, *arg, opts) ? "YES\n" : "NO\n";
  case TaskKind::DS: return skeptical(af, task.semantics, *arg, opts) ? "YES\n" : "NO\n";
  case TaskKind::LE:
    for (const auto& l : enumerate_labellings(af, task.semantics, opts))
      out += io::serialize_labelling(af, l) + "\n";
    return out;
  }
  return out;
}

inline std::string run_meta(const std::string& which, const meta::CheckOptions& opts, std::string& err) {
  std::vector<const meta::Property*> props;
  if (which == "all") {
    for (const auto& p : meta::builtin_properties())
      props.push_back(&p);
  } else if (const auto* p = meta::find_property(which)) {
    props.push_back(p);
  } else {
    err = "unknown property '" + which + "'";
    return {};
  }
  const auto verdicts = meta::check_properties(props, opts);
  std::string out;
  std::size_t unexpected = 0;
  for (std::size_t i = 0; i < props.size(); ++i) {
    out += meta::format_verdict(*props[i], verdicts[i]);
    if (!meta::meets_expectation(*props[i], verdicts[i]))
      ++unexpected;
  }
  return out + "# " + std::to_string(props.size()) + " properties, " + std::to_string(unexpected) + " unexpected\n";
}

/// `args` excludes the program name.
inline Result run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Abstract argumentation solver and property checker", "argon"};
  std::string file, format, task_text, arg_name, meta_id, strategy = "pruned";
  std::size_t max_n = 3, threads = 0;
  std::uint64_t samples = 0, seed = 0x5eed;
  bool dedup = false;

  app.add_option("--file,-f", file, "Input framework");
  app.add_option("--format", format, "apx, tgf or af (default: from the file extension)");
  app.add_option("--task,-p", task_text, "<SE|EE|DC|DS|LE>-<CF|AD|CO|GR|PR|ST|SST|STG|IDS|ID>");
  app.add_option("--arg,-a", arg_name, "Query argument for DC and DS");
  app.add_option("--strategy", strategy, "naive or pruned")->capture_default_str();
  app.add_option("--threads", threads, "Worker threads (0: ARGON_THREADS or hardware)");
  app.add_option("--meta", meta_id, "Check a property id, or all of them");
  app.add_option("--max-n", max_n, "Largest framework size for --meta")->capture_default_str();
  app.add_flag("--dedup", dedup, "One framework per isomorphism class");
  app.add_option("--samples", samples, "Random frameworks per size beyond 4 arguments");
  app.add_option("--seed", seed, "Seed for --samples");

  std::ostringstream out, err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? exit_ok : exit_usage, out.str(), err.str()};
  }

  auto usage = [&](const std::string& msg) { return Result{exit_usage, "", "error: " + msg + "\n"}; };

  if (!meta_id.empty()) {
    if (!task_text.empty() || !file.empty())
      return usage("--meta cannot be combined with --task or --file");
    meta::CheckOptions opts;
    opts.max_n = max_n;
    opts.dedup = dedup;
    opts.samples = samples;
    opts.seed = seed;
    opts.threads = threads;
    std::string e;
    try {
      std::string text = run_meta(meta_id, opts, e);
      if (!e.empty())
        return usage(e);
      return {exit_ok, std::move(text), ""};
    } catch (const BudgetError& b) {
      return usage(b.what());
    }
  }

  if (task_text.empty())
    return usage("one of --task or --meta is required");
  const auto task = parse_task(task_text);
  if (!task)
    return usage("unknown task '" + task_text + "'");
  if (needs_argument(task->kind) && arg_name.empty())
    return usage("task " + task_text + " requires --arg");
  if (!needs_argument(task->kind) && !arg_name.empty())
    return usage("task " + task_text + " does not take --arg");
  if (file.empty())
    return usage("--file is required");

  std::optional<io::InputFormat> fmt = format.empty() ? io::detect_format(file) : io::parse_format(format);
  if (!fmt)
    return usage(format.empty() ? "cannot infer the format of '" + file + "'; pass --format"
                                : "unknown format '" + format + "'");

  EnumerationOptions opts;
  opts.threads = threads;
  if (strategy == "naive")
    opts.strategy = Strategy::Naive;
  else if (strategy == "pruned")
    opts.strategy = Strategy::Pruned;
  else
    return usage("unknown strategy '" + strategy + "'");

  std::optional<Framework> af;
  try {
    af = io::parse(io::read_file(file), *fmt);
  } catch (const std::exception& e) {
    return {exit_input, "", file + ": " + e.what() + "\n"};
  }

  std::optional<std::size_t> arg;
  if (!arg_name.empty()) {
    arg = af->find(arg_name);
    if (!arg)
      return usage("argument '" + arg_name + "' is not in the framework");
  }

  try {
    return {exit_ok, solve(*af, *task, arg, opts), ""};
  } catch (const BudgetError& e) {
    return usage(e.what());
  }
}

} // namespace argon::cli

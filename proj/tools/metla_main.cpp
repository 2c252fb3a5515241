// metla: command-line front end. Exit codes: 0 analysis completed,
// 1 invalid input, 2 internal invariant violation.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "metla/errors.hpp"
#include "metla/report.hpp"

namespace fs = std::filesystem;
using namespace metla;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kInternal = 2;

struct Outcome {
  int code = kOk;
  std::string output;
  std::string errors;
};

// Maps library exceptions onto exit codes. Precondition failures raised while
// building from user parameters count as invalid input.
template <class F>
Outcome guarded(F&& f) {
  Outcome o;
  try {
    o.output = f();
  } catch (const InvalidInput& e) {
    o.code = kInvalid;
    for (const auto& d : e.diagnostics()) o.errors += "error: " + d + "\n";
  } catch (const ConfigurationError& e) {
    o.code = kInvalid;
    o.errors = std::string("error: ") + e.what() + "\n";
  } catch (const ContractViolation& e) {
    o.code = kInvalid;
    o.errors = std::string("error: ") + e.what() + "\n";
  } catch (const DivisionByZero& e) {
    o.code = kInvalid;
    o.errors = std::string("error: ") + e.what() + "\n";
  } catch (const InvariantViolation& e) {
    o.code = kInternal;
    o.errors = std::string("internal invariant violation: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    o.code = kInternal;
    o.errors = std::string("internal error: ") + e.what() + "\n";
  }
  return o;
}

int finish(const Outcome& o) {
  std::cout << o.output;
  std::cerr << o.errors;
  return o.code;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string render(const Report& r, bool json) { return json ? report_json(r) : report_text(r); }

std::string analyze_text(const std::string& bytes, const std::string& source, bool json) {
  LoadedAlgebra a = [&] {
    try {
      return parse_algebra(bytes);
    } catch (const InvalidInput& e) {
      std::vector<std::string> d;
      for (const auto& x : e.diagnostics()) d.push_back(source + ": " + x);
      throw InvalidInput(d);
    }
  }();
  return render(analyze(a, bytes), json);
}

std::map<std::string, ParamValue> parse_overrides(const std::string& key, const std::vector<std::string>& args) {
  const CatalogEntry& entry = catalog_entry(key);
  std::map<std::string, ParamValue> out;
  std::vector<std::string> diag;
  for (const auto& a : args) {
    auto eq = a.find('=');
    if (eq == std::string::npos) {
      diag.push_back("parameter '" + a + "' is not of the form name=value");
      continue;
    }
    std::string name = a.substr(0, eq);
    auto it = std::find_if(entry.params.begin(), entry.params.end(), [&](const auto& p) { return p.name == name; });
    if (it == entry.params.end()) {
      diag.push_back("catalog entry '" + key + "' has no parameter '" + name + "'");
      continue;
    }
    try {
      out[name] = parse_param(*it, a.substr(eq + 1));
    } catch (const InvalidInput& e) {
      diag.insert(diag.end(), e.diagnostics().begin(), e.diagnostics().end());
    }
  }
  if (!diag.empty()) throw InvalidInput(diag);
  return out;
}

std::string catalog_list() {
  std::ostringstream os;
  for (const auto& e : catalog_entries()) {
    os << e.key << ": " << e.description << "\n";
    for (const auto& p : e.params)
      os << "    " << p.name << " = " << param_to_string(p.default_value) << "  (" << p.description << ")\n";
  }
  return os.str();
}

Outcome batch_file(const fs::path& file, bool json, const std::optional<fs::path>& out_dir) {
  Outcome o = guarded([&] { return analyze_text(read_file(file.string()), file.string(), json); });
  if (o.code != kOk || !out_dir) return o;
  fs::path target = *out_dir / (file.stem().string() + (json ? ".report.json" : ".report.txt"));
  std::ofstream out(target, std::ios::binary);
  if (!out) {
    o.code = kInvalid;
    o.errors = "error: cannot write " + target.string() + "\n";
    return o;
  }
  out << o.output;
  o.output = "wrote " + target.string() + "\n";
  return o;
}

int run_batch(const std::string& dir, bool parallel, bool json, const std::string& out_dir_arg) {
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  if (ec) {
    std::cerr << "error: " << dir << ": " << ec.message() << "\n";
    return kInvalid;
  }
  std::sort(files.begin(), files.end());
  std::optional<fs::path> out_dir;
  if (!out_dir_arg.empty()) {
    out_dir = fs::path(out_dir_arg);
    fs::create_directories(*out_dir, ec);
    if (ec) {
      std::cerr << "error: " << out_dir_arg << ": " << ec.message() << "\n";
      return kInvalid;
    }
  }

  std::vector<Outcome> results(files.size());
  if (parallel) {
    // Each analysis is independent; results are printed in file order so the
    // output does not depend on scheduling.
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t start = 0; start < files.size(); start += workers) {
      std::vector<std::future<Outcome>> jobs;
      for (std::size_t i = start; i < std::min(files.size(), start + workers); ++i)
        jobs.push_back(std::async(std::launch::async, batch_file, files[i], json, out_dir));
      for (std::size_t i = 0; i < jobs.size(); ++i) results[start + i] = jobs[i].get();
    }
  } else {
    for (std::size_t i = 0; i < files.size(); ++i) results[i] = batch_file(files[i], json, out_dir);
  }

  int code = kOk;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!out_dir && results[i].code == kOk) std::cout << "== " << files[i].filename().string() << "\n";
    std::cout << results[i].output;
    std::cerr << results[i].errors;
    code = std::max(code, results[i].code);
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conformal-Einstein analysis of metric Lie algebras"};
  app.require_subcommand(1);

  std::string file;
  bool as_json = false, as_text = false;

  auto* validate = app.add_subcommand("validate", "Parse and validate an algebra file");
  validate->add_option("file", file, "Algebra JSON file")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze an algebra file");
  analyze_cmd->add_option("file", file, "Algebra JSON file")->required();
  auto* json_flag = analyze_cmd->add_flag("--json", as_json, "JSON report");
  analyze_cmd->add_flag("--text", as_text, "Text report (default)")->excludes(json_flag);

  auto* catalog = app.add_subcommand("catalog", "Built-in algebras");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "List catalog keys and parameters");
  std::string key;
  std::vector<std::string> overrides;
  auto* cat_analyze = catalog->add_subcommand("analyze", "Analyze a catalog entry");
  cat_analyze->add_option("key", key, "Catalog key")->required();
  cat_analyze->add_option("params", overrides, "Overrides name=value; matrices as a,b;c,d");
  auto* cat_json = cat_analyze->add_flag("--json", as_json, "JSON report");
  cat_analyze->add_flag("--text", as_text, "Text report (default)")->excludes(cat_json);
  std::string export_path;
  auto* cat_export = catalog->add_subcommand("export", "Write a catalog entry as an algebra file");
  cat_export->add_option("key", key, "Catalog key")->required();
  cat_export->add_option("params", overrides, "Overrides name=value");
  cat_export->add_option("-o,--output", export_path, "Output file (default stdout)");

  std::string dir, out_dir;
  bool parallel = false;
  auto* batch = app.add_subcommand("batch", "Analyze every .json file in a directory");
  batch->add_option("dir", dir, "Input directory")->required();
  batch->add_flag("--parallel", parallel, "Analyze files concurrently");
  batch->add_option("--output-dir", out_dir, "Write one report per input here instead of stdout");
  auto* batch_json = batch->add_flag("--json", as_json, "JSON reports (default)");
  batch->add_flag("--text", as_text, "Text reports")->excludes(batch_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  if (*validate) {
    return finish(guarded([&] {
      LoadedAlgebra a = load_algebra_file(file);
      return "ok: " + a.name + " (dimension " + std::to_string(a.instance.algebra.dim()) + ")\n";
    }));
  }
  if (*analyze_cmd) {
    return finish(guarded([&] { return analyze_text(read_file(file), file, as_json); }));
  }
  if (*catalog) {
    if (catalog->got_subcommand("list")) return finish(guarded(catalog_list));
    if (*cat_analyze) {
      return finish(guarded([&] {
        AlgebraInstance inst = catalog_build(key, parse_overrides(key, overrides));
        std::string doc = emit_algebra(key, inst.algebra);
        return render(analyze(LoadedAlgebra{key, std::move(inst)}, doc), as_json);
      }));
    }
    if (*cat_export) {
      Outcome o = guarded([&] { return emit_algebra(key, catalog_build(key, parse_overrides(key, overrides)).algebra); });
      if (o.code == kOk && !export_path.empty()) {
        std::ofstream out(export_path, std::ios::binary);
        if (!out) return finish({kInvalid, "", "error: cannot write " + export_path + "\n"});
        out << o.output;
        o.output.clear();
      }
      return finish(o);
    }
  }
  if (*batch) return run_batch(dir, parallel, !as_text, out_dir);
  return kInvalid;
}

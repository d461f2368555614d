#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "kodaira/model_io.hpp"

namespace fs = std::filesystem;
using namespace kodaira;

namespace {

enum Exit { kPass = 0, kIo = 1, kSchema = 2, kIdentity = 3, kNonIsolated = 4 };

struct AnalyzeOptions {
  bool text = false;
  bool variant_rprime = false;
  bool timestamp = true;
};

struct Outcome {
  int code = kPass;
  std::string output;
  std::string error;
};

Outcome analyze_file(const std::string& path, const AnalyzeOptions& opts) {
  Outcome o;
  std::ifstream in(path);
  if (!in) {
    o.code = kIo;
    o.error = "cannot read " + path;
    return o;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    FibrationModel model = model_from_string(buffer.str());
    if (opts.variant_rprime) model.options.variant_rprime = true;
    SpectrumReport report = analyze(model);
    if (opts.text) {
      o.output = report_to_text(report);
    } else {
      auto ts = opts.timestamp ? std::optional<std::string>(utc_timestamp()) : std::nullopt;
      o.output = report_to_json(report, ts).dump(2) + "\n";
    }
    o.code = report.passes() ? kPass : kIdentity;
  } catch (const NonIsolatedError& e) {
    o.code = kNonIsolated;
    o.error = path + ": " + e.what();
  } catch (const Error& e) {
    o.code = kSchema;
    o.error = path + ": " + e.what();
  }
  return o;
}

int cmd_milnor(const std::string& poly, const std::string& vars) {
  std::vector<std::string> names;
  std::stringstream ss(vars);
  for (std::string v; std::getline(ss, v, ',');)
    if (!v.empty()) names.push_back(v);
  try {
    Polynomial f = parse_polynomial(poly, names);
    require_germ(f);
    auto mu = milnor_number(f);
    if (mu.infinite) {
      std::cout << "mu = infinite\n";
      return kNonIsolated;
    }
    auto tau = tyurina_number(f);
    std::cout << "mu = " << mu.value << "\ntau = " << tau.value << "\n";
    if (auto w = weighted_homogeneous_weights(f)) {
      std::cout << "weighted homogeneous: yes, weights";
      for (const auto& x : *w) std::cout << " " << to_string(x);
      std::cout << "\n";
    } else {
      std::cout << "weighted homogeneous: no\n";
    }
    return kPass;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSchema;
  }
}

int cmd_table(const std::string& selector) {
  try {
    TableRow row = table_select(selector);
    std::array<std::optional<Rational>, 4> recomputed{adjoint_charged_dim(row.algebra), entry_charged_dim(row.rho0),
                                                      entry_charged_dim(row.rho_q1), entry_charged_dim(row.rho_q2)};
    bool match = true;
    for (int c = 0; c < 4; ++c) {
      const auto& t = row.transcribed[c];
      if (t.kind == TableValue::Kind::Number)
        match = match && recomputed[c] && *recomputed[c] == t.value;
      else
        match = match && !recomputed[c];
    }
    auto cell = [](const std::optional<Rational>& v, const TableValue& t) {
      if (t.kind == TableValue::Kind::NonMinimal) return std::string("NM");
      return v ? to_string(*v) : std::string("-");
    };
    std::cout << "row " << row.row << "  " << row.type.to_string() << "  " << row.algebra_name() << "\n";
    std::cout << "  rho_0    " << row.rho0.to_string() << "\n";
    std::cout << "  rho_Q1   " << row.rho_q1.to_string() << "\n";
    std::cout << "  rho_Q2   " << row.rho_q2.to_string() << "\n";
    std::cout << "  (dim adj)_ch, (dim rho_0)_ch, (dim rho_Q1)_ch, (dim rho_Q2)_ch: (";
    for (int c = 0; c < 4; ++c) std::cout << (c ? ", " : "") << cell(recomputed[c], row.transcribed[c]);
    std::cout << ")\n  transcribed: (";
    for (int c = 0; c < 4; ++c) {
      auto s = row.transcribed[c].to_string();
      std::cout << (c ? ", " : "") << (s.empty() ? "-" : s);
    }
    std::cout << ")\n  " << (match ? "match" : "MISMATCH") << "\n";
    return match ? kPass : kIdentity;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSchema;
  }
}

int cmd_batch(const std::string& dir, const AnalyzeOptions& opts) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    std::cerr << "error: " << dir << " is not a directory\n";
    return kIo;
  }
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  std::vector<std::future<Outcome>> jobs;
  for (const auto& f : files) jobs.push_back(std::async(std::launch::async, analyze_file, f, opts));
  int worst = kPass;
  for (std::size_t i = 0; i < files.size(); ++i) {
    Outcome o = jobs[i].get();
    std::cout << files[i] << ": " << (o.code == kPass ? "pass" : "exit " + std::to_string(o.code));
    if (!o.error.empty()) std::cout << " (" << o.error << ")";
    std::cout << "\n";
    worst = std::max(worst, o.code);
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Singular elliptic threefold spectra and anomaly checks"};
  app.require_subcommand(0, 1);

  AnalyzeOptions opts;
  std::string batch_dir;
  app.add_option("--batch", batch_dir, "Analyze every .json model in a directory");

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a model file");
  std::string model_path;
  analyze_cmd->add_option("file", model_path, "Model JSON file")->required();
  auto* json_flag = analyze_cmd->add_flag("--json", "JSON report (default)");
  analyze_cmd->add_flag("--text", opts.text, "Text report")->excludes(json_flag);
  analyze_cmd->add_flag("--variant-rprime", opts.variant_rprime, "Compare the right-hand side with R'");
  bool no_timestamp = false;
  analyze_cmd->add_flag("--no-timestamp", no_timestamp, "Omit the generation timestamp");

  auto* milnor_cmd = app.add_subcommand("milnor", "Milnor and Tyurina numbers of a germ at the origin");
  std::string vars = "x,y,z,w", poly;
  milnor_cmd->add_option("--vars", vars, "Comma-separated variable names");
  milnor_cmd->add_option("polynomial", poly, "Polynomial")->required();

  auto* table_cmd = app.add_subcommand("table", "Print a row of the classification table");
  std::string selector;
  table_cmd->add_option("selector", selector, "Selector such as I5:sp2 or II*")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kSchema;
  }
  opts.timestamp = !no_timestamp;

  if (*analyze_cmd) {
    Outcome o = analyze_file(model_path, opts);
    std::cout << o.output;
    if (!o.error.empty()) std::cerr << "error: " << o.error << "\n";
    return o.code;
  }
  if (*milnor_cmd) return cmd_milnor(poly, vars);
  if (*table_cmd) return cmd_table(selector);
  if (!batch_dir.empty()) return cmd_batch(batch_dir, opts);
  std::cout << app.help();
  return kSchema;
}

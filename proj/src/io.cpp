#include "siso/io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace siso {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail_at(const std::string& path, int line, const std::string& message) {
  throw std::invalid_argument(path + ":" + std::to_string(line) + ": " + message);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) {
    // Trim surrounding whitespace.
    size_t a = field.find_first_not_of(" \t\r");
    size_t b = field.find_last_not_of(" \t\r");
    fields.push_back(a == std::string::npos ? "" : field.substr(a, b - a + 1));
  }
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

double parse_double(const std::string& s, const std::string& path, int line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    fail_at(path, line, "expected a number, got '" + s + "'");
  return value;
}

long parse_long(const std::string& s, const std::string& path, int line) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    fail_at(path, line, "expected an integer, got '" + s + "'");
  return value;
}

std::ifstream open_or_fail(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  return in;
}

// Reads `x1..xd[,y]` CSVs; with_label selects the dataset vs points form.
std::pair<Matrix, std::vector<double>> read_table(const std::string& path, bool with_label) {
  std::ifstream in = open_or_fail(path);
  std::string line;
  int lineno = 0;

  if (!std::getline(in, line)) fail_at(path, 1, "empty file");
  lineno++;
  auto header = split_csv_line(line);
  int d = static_cast<int>(header.size()) - (with_label ? 1 : 0);
  if (d < 1) fail_at(path, 1, "header must list at least one feature column");
  for (int k = 0; k < d; ++k)
    if (header[k] != "x" + std::to_string(k + 1))
      fail_at(path, 1, "expected header column 'x" + std::to_string(k + 1) + "', got '" + header[k] + "'");
  if (with_label && header.back() != "y") fail_at(path, 1, "expected final header column 'y'");

  std::vector<double> values;
  std::vector<double> labels;
  int rows = 0;
  while (std::getline(in, line)) {
    lineno++;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv_line(line);
    if (static_cast<int>(fields.size()) != d + (with_label ? 1 : 0))
      fail_at(path, lineno, "expected " + std::to_string(d + (with_label ? 1 : 0)) + " fields, got " +
                                std::to_string(fields.size()));
    for (int k = 0; k < d; ++k) values.push_back(parse_double(fields[k], path, lineno));
    if (with_label) labels.push_back(parse_double(fields.back(), path, lineno));
    rows++;
  }
  if (rows == 0) fail_at(path, lineno, "no data rows");

  Matrix m(rows, d);
  m.data = std::move(values);
  return {std::move(m), std::move(labels)};
}

}  // namespace

Dataset read_dataset_csv(const std::string& path, NoiseModel model) {
  auto [features, labels] = read_table(path, true);
  try {
    return Dataset(std::move(features), std::move(labels), model);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_dataset_csv(const std::string& path, const Dataset& dataset) {
  std::string out;
  for (int k = 0; k < dataset.d(); ++k) out += "x" + std::to_string(k + 1) + ",";
  out += "y\n";
  char buf[32];
  for (int i = 0; i < dataset.n(); ++i) {
    for (int k = 0; k < dataset.d(); ++k) {
      snprintf(buf, sizeof(buf), "%.17g", dataset.x(i, k));
      out += buf;
      out += ',';
    }
    snprintf(buf, sizeof(buf), "%.17g", dataset.y(i));
    out += buf;
    out += '\n';
  }
  write_file_atomic(path, out);
}

Matrix read_points_csv(const std::string& path) { return read_table(path, false).first; }

std::vector<std::pair<int, int>> read_exclusions_csv(const std::string& path, int dimension) {
  std::ifstream in = open_or_fail(path);
  std::string line;
  int lineno = 1;
  if (!std::getline(in, line)) fail_at(path, 1, "empty file");
  auto header = split_csv_line(line);
  if (header.size() != 2 || header[0] != "i" || header[1] != "j")
    fail_at(path, 1, "expected header 'i,j'");
  std::vector<std::pair<int, int>> pairs;
  while (std::getline(in, line)) {
    lineno++;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv_line(line);
    if (fields.size() != 2) fail_at(path, lineno, "expected two fields");
    long a = parse_long(fields[0], path, lineno);
    long b = parse_long(fields[1], path, lineno);
    if (a < 1 || b < 1 || a > dimension || b > dimension)
      fail_at(path, lineno, "coordinate index out of range 1..d");
    if (a == b) fail_at(path, lineno, "exclusion pair must join two distinct coordinates");
    int lo = static_cast<int>(std::min(a, b)) - 1, hi = static_cast<int>(std::max(a, b)) - 1;
    pairs.emplace_back(lo, hi);
  }
  return pairs;
}

std::string fit_to_json(const SparseFit& fit) {
  ordered_json j;
  j["active_indices"] = fit.fit.active.one_based();
  j["fitted_values"] = fit.fit.fitted;
  j["rule"] = to_string(fit.rule);
  j["objective"] = fit.fit.objective;
  std::vector<std::vector<double>> rows;
  rows.reserve(fit.n());
  for (int i = 0; i < fit.n(); ++i)
    rows.emplace_back(fit.features.row(i), fit.features.row(i) + fit.d());
  j["features"] = rows;
  return j.dump(2) + "\n";
}

SparseFit fit_from_json_file(const std::string& path) {
  std::ifstream in = open_or_fail(path);
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument(path + ": invalid JSON: " + e.what());
  }
  try {
    auto rows = j.at("features").get<std::vector<std::vector<double>>>();
    if (rows.empty() || rows[0].empty()) throw std::invalid_argument("empty features");
    Matrix features(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows[0].size()) throw std::invalid_argument("ragged features");
      for (size_t k = 0; k < rows[i].size(); ++k)
        features(static_cast<int>(i), static_cast<int>(k)) = rows[i][k];
    }
    SparseFit fit{
        FitResult{j.at("fitted_values").get<std::vector<double>>(),
                  j.at("objective").get<double>(),
                  ActiveSet::from_one_based(j.at("active_indices").get<std::vector<int>>(),
                                            features.cols)},
        interpolation_rule_from_string(j.at("rule").get<std::string>()), std::move(features)};
    if (static_cast<int>(fit.fit.fitted.size()) != fit.n())
      throw std::invalid_argument("fitted_values length does not match features");
    return fit;
  } catch (const ordered_json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_predictions_csv(const std::string& path, const std::vector<double>& predictions) {
  std::string out = "prediction\n";
  char buf[32];
  for (double v : predictions) {
    snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
    out += '\n';
  }
  write_file_atomic(path, out);
}

ExperimentConfig read_experiment_config(const std::string& path) {
  std::ifstream in = open_or_fail(path);
  ExperimentConfig config;
  config.ns.clear();
  config.ds.clear();
  config.methods.clear();
  std::string line;
  int lineno = 0;
  bool saw_methods = false;
  while (std::getline(in, line)) {
    lineno++;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        fail_at(path, lineno, "expected 'key = value'");
      continue;
    }
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t\r");
      size_t b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    auto parse_int_list = [&](const std::string& v) {
      std::vector<int> out;
      for (const auto& item : split_csv_line(v)) out.push_back(static_cast<int>(parse_long(item, path, lineno)));
      return out;
    };
    if (key == "n") {
      config.ns = parse_int_list(value);
    } else if (key == "d") {
      config.ds = parse_int_list(value);
    } else if (key == "s") {
      config.s = static_cast<int>(parse_long(value, path, lineno));
    } else if (key == "r") {
      config.r = static_cast<int>(parse_long(value, path, lineno));
    } else if (key == "sigma") {
      config.sigma = parse_double(value, path, lineno);
    } else if (key == "trials") {
      config.trials = static_cast<int>(parse_long(value, path, lineno));
    } else if (key == "seed") {
      config.seed = static_cast<uint64_t>(parse_long(value, path, lineno));
    } else if (key == "methods") {
      saw_methods = true;
      for (const auto& item : split_csv_line(value)) {
        if (item == "ipir")
          config.methods.push_back(RecoveryMethod::Ipir);
        else if (item == "lpsr")
          config.methods.push_back(RecoveryMethod::Lpsr);
        else if (item == "slpsr")
          config.methods.push_back(RecoveryMethod::Slpsr);
        else
          fail_at(path, lineno, "unknown method '" + item + "'");
      }
    } else {
      fail_at(path, lineno, "unknown config key '" + key + "'");
    }
  }
  if (!saw_methods)
    config.methods = {RecoveryMethod::Ipir, RecoveryMethod::Lpsr, RecoveryMethod::Slpsr};
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return config;
}

std::string recovery_table_to_csv(const RecoveryTable& table) {
  std::string out = "n";
  for (RecoveryMethod m : table.config.methods)
    for (int d : table.config.ds) out += "," + to_string(m) + "_d" + std::to_string(d);
  out += "\n";
  char buf[32];
  for (int n : table.config.ns) {
    out += std::to_string(n);
    for (RecoveryMethod m : table.config.methods) {
      for (int d : table.config.ds) {
        snprintf(buf, sizeof(buf), "%.17g", table.cell(m, n, d).percent());
        out += ",";
        out += buf;
      }
    }
    out += "\n";
  }
  return out;
}

std::string recovery_table_to_json(const RecoveryTable& table) {
  ordered_json j;
  ordered_json cfg;
  cfg["n"] = table.config.ns;
  cfg["d"] = table.config.ds;
  cfg["s"] = table.config.s;
  cfg["r"] = table.config.r;
  cfg["sigma"] = table.config.sigma;
  cfg["trials"] = table.config.trials;
  cfg["seed"] = table.config.seed;
  std::vector<std::string> methods;
  for (RecoveryMethod m : table.config.methods) methods.push_back(to_string(m));
  cfg["methods"] = methods;
  j["config"] = cfg;
  ordered_json cells = ordered_json::array();
  for (const auto& cell : table.cells) {
    ordered_json c;
    c["method"] = to_string(cell.method);
    c["n"] = cell.n;
    c["d"] = cell.d;
    c["successes"] = cell.successes;
    c["trials"] = cell.trials;
    c["percent"] = cell.percent();
    ordered_json detail = ordered_json::array();
    for (const auto& rec : cell.detail) {
      ordered_json r;
      r["trial"] = rec.trial;
      r["stream"] = rec.stream;
      r["success"] = rec.success;
      std::vector<int> one_based;
      for (int k : rec.selected) one_based.push_back(k + 1);
      r["selected"] = one_based;
      detail.push_back(std::move(r));
    }
    c["trial_detail"] = std::move(detail);
    cells.push_back(std::move(c));
  }
  j["cells"] = std::move(cells);
  return j.dump(2) + "\n";
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write file: " + tmp.string());
    out << content;
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace siso

#include "mogp/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace mogp {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// bound values come from short decimal grids; %g keeps ids and metadata
// readable without losing them
std::string fmt_bound(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::string fmt_lbss(const std::optional<double>& lbss) {
  return lbss ? fmt_bound(*lbss) : "none";
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// [section] key = value file; returns section -> key -> value
using IniData = std::map<std::string, std::map<std::string, std::string>>;

IniData parse_ini(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  IniData data;
  std::string section, line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(line_no) + ": expected key = value");
    data[section][trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return data;
}

double to_double(const std::string& v, const std::string& key) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("bad numeric value for '" + key + "': " + v);
  }
}

std::uint64_t to_u64(const std::string& v, const std::string& key) {
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw ConfigError("bad integer value for '" + key + "': " + v);
  }
}

void apply_variation_key(VariationConfig& var, const std::string& key,
                         const std::string& value) {
  if (key == "crossover_rate") var.crossover_rate = to_double(value, key);
  else if (key == "mutation_rate") var.mutation_rate = to_double(value, key);
  else if (key == "tournament_size") var.tournament_size = static_cast<int>(to_u64(value, key));
  else if (key == "internal_node_bias") var.internal_node_bias = to_double(value, key);
  else if (key == "init_depth_min") var.init_depth_min = static_cast<int>(to_u64(value, key));
  else if (key == "init_depth_max") var.init_depth_max = static_cast<int>(to_u64(value, key));
  else if (key == "max_depth") var.max_depth = static_cast<int>(to_u64(value, key));
  else if (key == "max_length") var.max_length = static_cast<int>(to_u64(value, key));
  else if (key == "mutation_subtree_depth") var.mutation_subtree_depth = static_cast<int>(to_u64(value, key));
  else if (key == "ssc_max_trials") var.ssc_max_trials = static_cast<int>(to_u64(value, key));
  else throw ConfigError("unknown [variation] key: " + key);
}

}  // namespace

void ExperimentConfig::validate() const {
  if (runs < 1) throw ConfigError("runs must be >= 1");
  if (population < 2) throw ConfigError("population must be >= 2");
  if (data_path.empty()) throw ConfigError("dataset path missing");
  const bool needs_bounds = method != Method::Canonical;
  if (!needs_bounds && lbss)
    throw ConfigError("canonical method takes no semantic bounds");
  variation.validate();
  if (lbss && (*lbss <= 0.0 || *lbss >= ubss))
    throw ConfigError("require 0 < lbss < ubss");
}

std::string ExperimentConfig::cell_id() const {
  std::string id = dataset + "_" + algorithm_name(algorithm) + "_" + method_name(method);
  if (method != Method::Canonical)
    id += "_L" + fmt_lbss(lbss) + "_U" + fmt_bound(ubss);
  return id;
}

EngineConfig ExperimentConfig::engine_config() const {
  EngineConfig e;
  e.algorithm = algorithm;
  e.method = method;
  e.population = population;
  e.bounds = SemanticBounds{lbss, ubss};
  e.variation = variation;
  e.variation.lbss = lbss;
  e.variation.ubss = ubss;
  return e;
}

ExperimentConfig parse_config_file(const std::string& path) {
  const auto ini = parse_ini(path);
  ExperimentConfig cfg;
  std::string manifest_path;

  for (const auto& [section, kv] : ini) {
    if (section == "experiment") {
      for (const auto& [key, value] : kv) {
        if (key == "dataset") cfg.dataset = value;
        else if (key == "manifest") manifest_path = value;
        else if (key == "data_path") cfg.data_path = value;
        else if (key == "label_column") cfg.label_column = value;
        else if (key == "positive_label") cfg.positive_label = value;
        else if (key == "normalize") cfg.normalize = value == "true" || value == "1";
        else if (key == "algorithm") cfg.algorithm = algorithm_from_name(value);
        else if (key == "method") cfg.method = method_from_name(value);
        else if (key == "population") cfg.population = to_u64(value, key);
        else if (key == "generations") cfg.generations = to_u64(value, key);
        else if (key == "runs") cfg.runs = to_u64(value, key);
        else if (key == "base_seed") cfg.base_seed = to_u64(value, key);
        else if (key == "output_dir") cfg.output_dir = value;
        else throw ConfigError("unknown [experiment] key: " + key);
      }
    } else if (section == "variation") {
      for (const auto& [key, value] : kv) apply_variation_key(cfg.variation, key, value);
    } else if (section == "bounds") {
      for (const auto& [key, value] : kv) {
        if (key == "lbss") {
          if (value != "none" && value != "-") cfg.lbss = to_double(value, key);
        } else if (key == "ubss") {
          cfg.ubss = to_double(value, key);
        } else {
          throw ConfigError("unknown [bounds] key: " + key);
        }
      }
    } else {
      throw ConfigError("unknown config section: [" + section + "]");
    }
  }

  if (!manifest_path.empty() && !cfg.dataset.empty()) {
    const auto manifest = load_dataset_manifest(manifest_path);
    const auto it = manifest.find(cfg.dataset);
    if (it == manifest.end())
      throw ConfigError("dataset '" + cfg.dataset + "' not in manifest " + manifest_path);
    apply_dataset_entry(cfg, it->second);
  }
  if (const char* env = std::getenv("MOGP_OUTPUT_DIR")) cfg.output_dir = env;
  cfg.validate();
  return cfg;
}

std::map<std::string, DatasetEntry> load_dataset_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open dataset manifest: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("bad dataset manifest " + path + ": " + e.what());
  }
  std::map<std::string, DatasetEntry> out;
  const fs::path base = fs::path(path).parent_path();
  for (const auto& [name, entry] : j.items()) {
    DatasetEntry e;
    e.path = (base / entry.at("path").get<std::string>()).string();
    e.label_column = entry.at("label_column").get<std::string>();
    e.positive_label = entry.at("positive_label").get<std::string>();
    out[name] = std::move(e);
  }
  return out;
}

void apply_dataset_entry(ExperimentConfig& cfg, const DatasetEntry& e) {
  cfg.data_path = e.path;
  cfg.label_column = e.label_column;
  cfg.positive_label = e.positive_label;
}

RunResult execute_run(const ExperimentConfig& cfg, const Dataset& full,
                      std::size_t run_index) {
  const auto t0 = std::chrono::steady_clock::now();
  RunResult r;
  r.seed = cfg.base_seed + run_index;
  r.run_id = cfg.cell_id() + "_r" + std::to_string(run_index);

  Rng rng = make_rng(r.seed);
  auto [train, test] = stratified_split(full, rng);

  const EngineConfig engine = cfg.engine_config();
  EvolutionState state = init_state(engine, train, rng);

  auto train_front_hv = [&] {
    std::vector<std::pair<double, double>> pts;
    for (const Individual* ind : current_front(state, engine))
      pts.emplace_back(ind->objectives[0], ind->objectives[1]);
    return hypervolume_trapezoid(make_front_snapshot(std::move(pts)));
  };

  r.hv_trace.push_back(train_front_hv());
  for (std::size_t g = 0; g < cfg.generations; ++g) {
    step_generation(state, engine, train, rng);
    r.hv_trace.push_back(train_front_hv());
  }

  // final front re-evaluated on the held-out half; keep one program per
  // surviving point
  std::vector<std::pair<double, double>> pts;
  std::vector<std::string> progs;
  for (const Individual* ind : current_front(state, engine)) {
    pts.push_back(objectives(ind->program, test));
    progs.push_back(ind->program.to_sexpr());
  }
  const auto snapshot = make_front_snapshot(pts);
  for (const auto& pt : snapshot.points) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i] == pt) {
        r.front_programs.push_back(progs[i]);
        break;
      }
    }
  }
  r.test_front = snapshot;
  r.final_hv = hypervolume_trapezoid(r.test_front);
  r.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

void save_run_file(const fs::path& file, const ExperimentConfig& cfg,
                   const RunResult& r) {
  const fs::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write result file: " + file.string());
    out << "run_id,seed,algorithm,method,lbss,ubss,dataset,final_hv\n";
    out << r.run_id << ',' << r.seed << ',' << algorithm_name(cfg.algorithm) << ','
        << method_name(cfg.method) << ',' << fmt_lbss(cfg.lbss) << ','
        << fmt_bound(cfg.ubss) << ',' << cfg.dataset << ',' << fmt_double(r.final_hv)
        << '\n';
    out << "[trace]\ngeneration,train_front_hv\n";
    for (std::size_t g = 0; g < r.hv_trace.size(); ++g)
      out << g << ',' << fmt_double(r.hv_trace[g]) << '\n';
    out << "[front]\ntpr,tnr,program\n";
    for (std::size_t i = 0; i < r.test_front.points.size(); ++i)
      out << fmt_double(r.test_front.points[i].first) << ','
          << fmt_double(r.test_front.points[i].second) << ',' << r.front_programs[i]
          << '\n';
  }
  fs::rename(tmp, file);
}

RunResult load_run_file(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open result file: " + file.string());
  RunResult r;
  std::string line;
  std::getline(in, line);  // header
  std::getline(in, line);
  {
    const auto cells = split_list(line);
    if (cells.size() != 8)
      throw std::runtime_error("malformed result file: " + file.string());
    r.run_id = cells[0];
    r.seed = std::stoull(cells[1]);
    r.final_hv = std::stod(cells[7]);
  }
  std::getline(in, line);  // [trace]
  std::getline(in, line);  // trace header
  while (std::getline(in, line) && line != "[front]") {
    const auto eq = line.find(',');
    r.hv_trace.push_back(std::stod(line.substr(eq + 1)));
  }
  std::getline(in, line);  // front header
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    r.test_front.points.emplace_back(std::stod(line.substr(0, c1)),
                                     std::stod(line.substr(c1 + 1, c2 - c1 - 1)));
    r.front_programs.push_back(line.substr(c2 + 1));
  }
  return r;
}

std::vector<RunResult> run_experiment(const ExperimentConfig& cfg, unsigned jobs) {
  cfg.validate();
  const Dataset full = [&] {
    Dataset d = load_csv(cfg.data_path, cfg.label_column, cfg.positive_label);
    d.name = cfg.dataset.empty() ? d.name : cfg.dataset;
    if (cfg.normalize) minmax_normalize(d);
    return d;
  }();

  const fs::path cell_dir = fs::path(cfg.output_dir) / cfg.cell_id();
  fs::create_directories(cell_dir);

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(cfg.runs));

  std::vector<RunResult> results(cfg.runs);
  std::vector<std::string> errors(cfg.runs);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (;;) {
      const std::size_t r = next.fetch_add(1);
      if (r >= cfg.runs) return;
      const fs::path file = cell_dir / ("run_" + std::to_string(r) + ".csv");
      try {
        if (fs::exists(file)) {
          results[r] = load_run_file(file);  // resume: skip completed runs
        } else {
          results[r] = execute_run(cfg, full, r);
          save_run_file(file, cfg, results[r]);
        }
      } catch (const std::exception& e) {
        errors[r] = e.what();
      }
    }
  };

  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<RunResult> ok;
  for (std::size_t r = 0; r < cfg.runs; ++r) {
    if (!errors[r].empty()) {
      std::ofstream err(cell_dir / ("run_" + std::to_string(r) + ".error"));
      err << errors[r] << '\n';
      std::fprintf(stderr, "run %zu of %s failed: %s\n", r, cfg.cell_id().c_str(),
                   errors[r].c_str());
    } else {
      ok.push_back(std::move(results[r]));
    }
  }
  return ok;
}

SweepGrid parse_sweep_file(const std::string& path) {
  const auto ini = parse_ini(path);
  SweepGrid grid;
  for (const auto& [section, kv] : ini) {
    if (section == "sweep") {
      for (const auto& [key, value] : kv) {
        if (key == "manifest") grid.manifest_path = value;
        else if (key == "datasets") grid.datasets = split_list(value);
        else if (key == "algorithms") {
          for (const auto& a : split_list(value))
            grid.algorithms.push_back(algorithm_from_name(a));
        } else if (key == "methods") {
          for (const auto& m : split_list(value))
            grid.methods.push_back(method_from_name(m));
        } else if (key == "lbss") {
          for (const auto& v : split_list(value)) {
            if (v == "none" || v == "-")
              grid.lbss_values.push_back(std::nullopt);
            else
              grid.lbss_values.push_back(to_double(v, key));
          }
        } else if (key == "ubss") {
          for (const auto& v : split_list(value))
            grid.ubss_values.push_back(to_double(v, key));
        } else if (key == "population") grid.population = to_u64(value, key);
        else if (key == "generations") grid.generations = to_u64(value, key);
        else if (key == "runs") grid.runs = to_u64(value, key);
        else if (key == "base_seed") grid.base_seed = to_u64(value, key);
        else if (key == "output_dir") grid.output_dir = value;
        else if (key == "normalize") grid.normalize = value == "true" || value == "1";
        else throw ConfigError("unknown [sweep] key: " + key);
      }
    } else if (section == "variation") {
      for (const auto& [key, value] : kv) apply_variation_key(grid.variation, key, value);
    } else {
      throw ConfigError("unknown sweep section: [" + section + "]");
    }
  }
  if (grid.datasets.empty() || grid.algorithms.empty() || grid.methods.empty())
    throw ConfigError("sweep needs datasets, algorithms and methods");
  if (const char* env = std::getenv("MOGP_OUTPUT_DIR")) grid.output_dir = env;
  return grid;
}

std::vector<ExperimentConfig> enumerate_cells(const SweepGrid& grid) {
  const auto manifest = load_dataset_manifest(grid.manifest_path);
  std::vector<ExperimentConfig> cells;
  std::set<std::string> seen;

  auto add = [&](ExperimentConfig cfg) {
    if (!seen.insert(cfg.cell_id()).second)
      throw ConfigError("duplicate sweep cell: " + cfg.cell_id());
    cfg.validate();
    cells.push_back(std::move(cfg));
  };

  for (const auto& ds : grid.datasets) {
    const auto it = manifest.find(ds);
    if (it == manifest.end())
      throw ConfigError("dataset '" + ds + "' not in manifest " + grid.manifest_path);
    for (const Algorithm alg : grid.algorithms) {
      for (const Method method : grid.methods) {
        ExperimentConfig base;
        base.dataset = ds;
        apply_dataset_entry(base, it->second);
        base.normalize = grid.normalize;
        base.algorithm = alg;
        base.method = method;
        base.population = grid.population;
        base.generations = grid.generations;
        base.runs = grid.runs;
        base.base_seed = grid.base_seed;
        base.output_dir = grid.output_dir;
        base.variation = grid.variation;
        if (method == Method::Canonical) {
          add(base);
          continue;
        }
        for (const auto& lb : grid.lbss_values) {
          for (const double ub : grid.ubss_values) {
            ExperimentConfig cfg = base;
            cfg.lbss = lb;
            cfg.ubss = ub;
            add(cfg);
          }
        }
      }
    }
  }
  return cells;
}

SweepOutcome sweep(const SweepGrid& grid, unsigned jobs) {
  const auto cells = enumerate_cells(grid);
  fs::create_directories(grid.output_dir);

  SweepOutcome outcome;
  json manifest;
  manifest["alpha"] = 0.05;
  manifest["bonferroni_m"] = 16;
  manifest["cells"] = json::array();

  for (const auto& cfg : cells) {
    outcome.scheduled_runs += cfg.runs;
    outcome.completed_runs += run_experiment(cfg, jobs).size();
    json cell;
    cell["cell_id"] = cfg.cell_id();
    cell["dataset"] = cfg.dataset;
    cell["algorithm"] = algorithm_name(cfg.algorithm);
    cell["method"] = method_name(cfg.method);
    const bool canonical = cfg.method == Method::Canonical;
    cell["lbss"] = canonical ? "n/a" : fmt_lbss(cfg.lbss);
    cell["ubss"] = canonical ? "n/a" : fmt_bound(cfg.ubss);
    cell["runs"] = cfg.runs;
    cell["base_seed"] = cfg.base_seed;
    cell["dir"] = cfg.cell_id();
    json files = json::array();
    for (std::size_t r = 0; r < cfg.runs; ++r)
      files.push_back(cfg.cell_id() + "/run_" + std::to_string(r) + ".csv");
    cell["files"] = std::move(files);
    manifest["cells"].push_back(std::move(cell));
  }

  const fs::path out = fs::path(grid.output_dir) / "campaign.json";
  std::ofstream f(out);
  f << manifest.dump(2) << '\n';
  outcome.manifest_path = out.string();
  return outcome;
}

namespace {

struct CellData {
  std::string cell_id, dataset, algorithm, method, lbss, ubss;
  std::vector<double> hvs;
  std::vector<FrontSnapshot> fronts;
  std::vector<std::string> missing;
};

}  // namespace

void report(const std::string& campaign_manifest_path) {
  std::ifstream in(campaign_manifest_path);
  if (!in) throw ConfigError("cannot open campaign manifest: " + campaign_manifest_path);
  json manifest;
  in >> manifest;

  const fs::path base = fs::path(campaign_manifest_path).parent_path();
  std::vector<CellData> cells;
  std::vector<std::string> all_missing;

  for (const auto& jc : manifest.at("cells")) {
    CellData c;
    c.cell_id = jc.at("cell_id");
    c.dataset = jc.at("dataset");
    c.algorithm = jc.at("algorithm");
    c.method = jc.at("method");
    c.lbss = jc.at("lbss");
    c.ubss = jc.at("ubss");
    for (const auto& file : jc.at("files")) {
      const fs::path p = base / file.get<std::string>();
      if (!fs::exists(p)) {
        c.missing.push_back(file.get<std::string>());
        all_missing.push_back(file.get<std::string>());
        continue;
      }
      const RunResult r = load_run_file(p);
      c.hvs.push_back(r.final_hv);
      c.fronts.push_back(r.test_front);
    }
    cells.push_back(std::move(c));
  }

  const double threshold =
      bonferroni_threshold(manifest.value("alpha", 0.05), manifest.value("bonferroni_m", 16));

  // canonical baselines per (dataset, algorithm)
  std::map<std::pair<std::string, std::string>, const CellData*> canonical;
  for (const auto& c : cells)
    if (c.method == "canonical") canonical[{c.dataset, c.algorithm}] = &c;

  fs::create_directories(base / "fronts");
  json out;
  out["partial"] = !all_missing.empty();
  out["missing"] = all_missing;
  out["bonferroni_threshold"] = threshold;
  out["cells"] = json::array();

  std::ofstream cells_csv(base / "report_cells.csv");
  cells_csv << "cell_id,dataset,algorithm,method,lbss,ubss,runs,mean_hv,std_hv,"
               "po_front_hv,p_vs_canonical,flag\n";

  for (const auto& c : cells) {
    const FrontSnapshot po = accumulate_po_front(c.fronts);
    const double po_hv = hypervolume_trapezoid(po);
    const double m = c.hvs.empty() ? 0.0 : mean(c.hvs);
    const double sd = stddev(c.hvs);

    std::string p_str = "n/a", flag_str = "n/a";
    double p_value = -1.0;
    const auto it = canonical.find({c.dataset, c.algorithm});
    if (c.method != "canonical" && it != canonical.end() && !c.hvs.empty() &&
        !it->second->hvs.empty()) {
      p_value = wilcoxon_rank_sum(c.hvs, it->second->hvs);
      p_str = fmt_double(p_value);
      flag_str = flag_symbol(classify_outcome(p_value, c.hvs, it->second->hvs, threshold));
    }

    cells_csv << c.cell_id << ',' << c.dataset << ',' << c.algorithm << ',' << c.method
              << ',' << c.lbss << ',' << c.ubss << ',' << c.hvs.size() << ','
              << fmt_double(m) << ',' << fmt_double(sd) << ',' << fmt_double(po_hv) << ','
              << p_str << ',' << flag_str << '\n';

    std::ofstream front_csv(base / "fronts" / (c.cell_id + "_front.csv"));
    front_csv << "tpr,tnr\n";
    for (const auto& [x, y] : po.points)
      front_csv << fmt_double(x) << ',' << fmt_double(y) << '\n';

    json jc;
    jc["cell_id"] = c.cell_id;
    jc["dataset"] = c.dataset;
    jc["algorithm"] = c.algorithm;
    jc["method"] = c.method;
    jc["lbss"] = c.lbss;
    jc["ubss"] = c.ubss;
    jc["runs"] = c.hvs.size();
    jc["mean_hv"] = m;
    jc["std_hv"] = sd;
    jc["po_front_hv"] = po_hv;
    if (p_value >= 0.0) {
      jc["p_vs_canonical"] = p_value;
      jc["flag"] = flag_str;
    }
    if (!c.missing.empty()) jc["missing"] = c.missing;
    out["cells"].push_back(std::move(jc));
  }

  // payoff matrices: per (dataset, algorithm), directed wins over the
  // lbss x ubss grid (canonical contributes its single sample to each cell)
  std::ofstream payoff_csv(base / "payoff.csv");
  payoff_csv << "dataset,algorithm,row_method,col_method,wins\n";
  out["payoff"] = json::array();

  std::set<std::pair<std::string, std::string>> groups;
  for (const auto& c : cells) groups.insert({c.dataset, c.algorithm});

  for (const auto& [ds, alg] : groups) {
    std::set<std::string> methods;
    for (const auto& c : cells)
      if (c.dataset == ds && c.algorithm == alg) methods.insert(c.method);

    auto cells_of = [&](const std::string& method) {
      std::map<std::pair<std::string, std::string>, const CellData*> grid;
      for (const auto& c : cells)
        if (c.dataset == ds && c.algorithm == alg && c.method == method)
          grid[{c.lbss, c.ubss}] = &c;
      return grid;
    };

    for (const auto& ma : methods) {
      for (const auto& mb : methods) {
        if (ma == mb) continue;  // diagonal omitted
        std::vector<std::pair<std::vector<double>, std::vector<double>>> pairs;
        bool complete = true;
        const auto ga = cells_of(ma);
        const auto gb = cells_of(mb);
        const auto& keys = ma != "canonical" ? ga : gb;
        for (const auto& [key, cell] : keys) {
          const CellData* a = ma == "canonical" ? ga.begin()->second : cell;
          const CellData* b = mb == "canonical"
                                  ? gb.begin()->second
                                  : (gb.count(key) ? gb.at(key) : nullptr);
          if (ma != "canonical" && mb != "canonical" && b == nullptr) {
            complete = false;
            continue;
          }
          if (a->hvs.empty() || b->hvs.empty()) {
            complete = false;
            continue;
          }
          pairs.emplace_back(a->hvs, b->hvs);
        }
        const int wins = payoff_wins(pairs, threshold);
        payoff_csv << ds << ',' << alg << ',' << ma << ',' << mb << ',' << wins
                   << (complete ? "" : " (partial)") << '\n';
        json jp;
        jp["dataset"] = ds;
        jp["algorithm"] = alg;
        jp["row_method"] = ma;
        jp["col_method"] = mb;
        jp["wins"] = wins;
        jp["complete"] = complete;
        out["payoff"].push_back(std::move(jp));
      }
    }
  }

  std::ofstream summary(base / "report_summary.json");
  summary << out.dump(2) << '\n';

  if (!all_missing.empty()) {
    std::fprintf(stderr, "report is partial; %zu result files missing\n",
                 all_missing.size());
    for (const auto& m : all_missing) std::fprintf(stderr, "  missing: %s\n", m.c_str());
  }
}

}  // namespace mogp

#include "cli.hpp"

#include "svg.hpp"

#include "speclust/cuts.hpp"
#include "speclust/data.hpp"
#include "speclust/diagnostics.hpp"
#include "speclust/graph.hpp"
#include "speclust/io.hpp"
#include "speclust/randomwalk.hpp"
#include "speclust/similarity.hpp"
#include "speclust/spectral.hpp"
#include "speclust/spectrum.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

namespace speclust::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GraphFlags {
  std::string input;
  std::string load_graph;
  std::string save_graph;
  std::string graph = "knn";
  Index knn_k = 0;
  bool mutual = false;
  double eps = 0.0;
  double sigma = 0.0;
  std::string kernel = "gaussian";

  CLI::Option* input_opt = nullptr;
  CLI::Option* load_opt = nullptr;
  CLI::Option* graph_opt = nullptr;
  CLI::Option* knn_opt = nullptr;
  CLI::Option* mutual_opt = nullptr;
  CLI::Option* eps_opt = nullptr;
  CLI::Option* sigma_opt = nullptr;
  CLI::Option* kernel_opt = nullptr;

  void attach(CLI::App& app, bool allow_save = true) {
    input_opt = app.add_option("--input", input, "Points CSV (one point per row)")->check(CLI::ExistingFile);
    load_opt = app.add_option("--load-graph", load_graph, "Edge-list graph instead of points")->check(CLI::ExistingFile);
    graph_opt = app.add_option("--graph", graph, "Similarity graph: knn, eps or full")
                    ->check(CLI::IsMember({"knn", "eps", "full"}));
    knn_opt = app.add_option("--knn-k", knn_k, "Neighbors per vertex (default ceil(ln n))");
    mutual_opt = app.add_flag("--mutual", mutual, "Mutual k-nearest-neighbor graph");
    eps_opt = app.add_option("--eps", eps, "Neighborhood radius for the eps graph");
    sigma_opt = app.add_option("--sigma", sigma, "Gaussian kernel width (default from kNN distances)");
    kernel_opt = app.add_option("--kernel", kernel, "Similarity kernel name");
    if (allow_save) app.add_option("--save-graph", save_graph, "Write the graph as an edge list");
  }

  bool has_input() const { return input_opt->count() > 0; }
  bool has_graph() const { return load_opt->count() > 0; }

  void validate(bool required = true) const {
    if (has_input() && has_graph()) throw UsageError("--input and --load-graph are mutually exclusive");
    if (required && !has_input() && !has_graph()) throw UsageError("one of --input or --load-graph is required");
    if (has_graph()) {
      for (const CLI::Option* o : {graph_opt, knn_opt, mutual_opt, eps_opt, sigma_opt, kernel_opt}) {
        if (o->count() > 0) throw UsageError(o->get_name() + " only applies when building a graph from --input");
      }
      return;
    }
    if (graph == "eps" && eps_opt->count() == 0) throw UsageError("--graph eps requires --eps");
    if (graph != "eps" && eps_opt->count() > 0) throw UsageError("--eps requires --graph eps");
    if (graph != "knn" && knn_opt->count() > 0) throw UsageError("--knn-k requires --graph knn");
    if (graph != "knn" && mutual_opt->count() > 0) throw UsageError("--mutual requires --graph knn");
    if (graph == "eps" && (sigma_opt->count() > 0 || kernel_opt->count() > 0)) {
      throw UsageError("the eps graph is unweighted; --sigma/--kernel do not apply");
    }
    if (eps_opt->count() > 0 && !(eps > 0.0)) throw UsageError("--eps must be positive");
    if (sigma_opt->count() > 0 && !(sigma > 0.0)) throw UsageError("--sigma must be positive");
    if (knn_opt->count() > 0 && knn_k < 1) throw UsageError("--knn-k must be at least 1");
    if (!KernelRegistry::instance().contains(kernel)) throw UsageError("unknown --kernel " + kernel);
  }
};

struct LoadedGraph {
  SimilarityGraph graph;
  std::optional<PointSet> points;
  Json info;
};

LoadedGraph load_graph(const GraphFlags& flags) {
  LoadedGraph out;
  out.info = Json{{"type", "edge-list"}, {"knn_k", nullptr}, {"mutual", nullptr}, {"eps", nullptr},
                  {"kernel", nullptr}, {"sigma", nullptr}};
  if (flags.has_graph()) {
    out.graph = load_edge_list(flags.load_graph);
  } else {
    PointSet points = read_points_csv(flags.input);
    const Index n = points.size();
    const Matrix distances = euclidean_distances(points);
    out.info["type"] = flags.graph;
    if (flags.graph == "eps") {
      out.graph = build_eps_graph(distances, flags.eps);
      out.info["eps"] = flags.eps;
    } else {
      if (n < 2) throw Error(ErrorKind::InvalidInput, "a similarity graph needs at least two points");
      const double sigma = flags.sigma_opt->count() > 0 ? flags.sigma : suggest_sigma(distances);
      const Matrix similarities = KernelRegistry::instance().get(flags.kernel)(distances, sigma);
      if (flags.graph == "knn") {
        const Index k = flags.knn_opt->count() > 0 ? flags.knn_k : suggest_knn_k(n);
        out.graph = build_knn_graph(distances, similarities, k, flags.mutual);
        out.info["knn_k"] = k;
        out.info["mutual"] = flags.mutual;
      } else {
        out.graph = build_full_graph(similarities);
      }
      out.info["kernel"] = flags.kernel;
      out.info["sigma"] = sigma;
    }
    out.points = std::move(points);
  }
  out.info["vertices"] = out.graph.size();
  out.info["edges"] = out.graph.edge_count();
  out.info["components"] = connected_components(out.graph).k();
  if (!flags.save_graph.empty()) save_edge_list(flags.save_graph, out.graph);
  return out;
}

void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json cuts_json(const CutReport& r) {
  Json j;
  j["cut"] = r.cut;
  j["ratiocut"] = r.ratiocut;
  j["ncut"] = r.ncut;
  j["minmaxcut"] = r.minmaxcut ? Json(*r.minmaxcut) : Json(nullptr);
  return j;
}

std::vector<double> head_values(const Vector& v, Index count) {
  count = std::min(count, v.size());
  return std::vector<double>(v.data(), v.data() + count);
}

void emit_spectrum_svgs(const std::string& prefix, const Decomposition& spectrum, LaplacianKind kind,
                        const std::optional<PointSet>& points, Index vectors, std::optional<double> min_degree) {
  const Index shown = std::min<Index>(spectrum.size(), 10);
  Plot eig;
  eig.title = "Eigenvalues of " + std::string(to_string(kind));
  eig.x_label = "index";
  eig.y_label = "eigenvalue";
  for (Index i = 0; i < shown; ++i) {
    eig.series.x.push_back(static_cast<double>(i + 1));
    eig.series.y.push_back(spectrum.eigenvalues(i));
    if (min_degree) eig.series.highlight.push_back(spectrum.eigenvalues(i) < *min_degree);
  }
  eig.reference_line = min_degree;
  save_svg(prefix + "_eigenvalues.svg", eig);

  const bool one_d = points && points->dim() == 1;
  for (Index j = 0; j < std::min(vectors, spectrum.eigenvectors.cols()); ++j) {
    Plot vec;
    vec.title = "Eigenvector " + std::to_string(j + 1);
    vec.x_label = one_d ? "x" : "vertex";
    vec.y_label = "u_" + std::to_string(j + 1);
    for (Index i = 0; i < spectrum.eigenvectors.rows(); ++i) {
      vec.series.x.push_back(one_d ? points->points()(i, 0) : static_cast<double>(i + 1));
      vec.series.y.push_back(spectrum.eigenvectors(i, j));
    }
    save_svg(prefix + "_eigvec_" + std::to_string(j + 1) + ".svg", vec);
  }
}

Index default_k_max(Index n) { return std::min<Index>(10, n - 1); }

struct GenFlags {
  std::string dataset;
  Index n = 200;
  std::vector<double> means{0.0, 4.0, 8.0, 12.0};
  double std_dev = 0.5;
  std::vector<Index> counts{100, 150, 50};
  double noise = 0.05;
  Index cockroach_k = 4;
  std::uint64_t seed = 0;
  std::string out;
  std::string labels_out;
  CLI::Option* n_opt = nullptr;
  CLI::Option* means_opt = nullptr;
  CLI::Option* std_opt = nullptr;
  CLI::Option* counts_opt = nullptr;
  CLI::Option* noise_opt = nullptr;
  CLI::Option* cockroach_opt = nullptr;
  CLI::Option* labels_opt = nullptr;
};

int run_gen(const GenFlags& f, std::ostream& out) {
  auto reject = [&](std::initializer_list<const CLI::Option*> opts) {
    for (const CLI::Option* o : opts) {
      if (o->count() > 0) throw UsageError(o->get_name() + " does not apply to --dataset " + f.dataset);
    }
  };
  if (f.dataset == "cockroach") {
    reject({f.n_opt, f.means_opt, f.std_opt, f.counts_opt, f.noise_opt, f.labels_opt});
    std::ostringstream text;
    write_edge_list(text, gen_cockroach_graph(f.cockroach_k));
    write_text(f.out, text.str(), out);
    return kExitOk;
  }
  LabeledSample sample;
  if (f.dataset == "gaussians") {
    reject({f.counts_opt, f.noise_opt, f.cockroach_opt});
    sample = gen_gaussian_mixture_1d(f.n, f.means, f.std_dev, f.seed);
  } else {
    reject({f.n_opt, f.means_opt, f.std_opt, f.cockroach_opt});
    if (f.counts.size() != 3) throw UsageError("--counts needs three values (top moon, bottom moon, blob)");
    sample = gen_moons_and_gaussian({f.counts[0], f.counts[1], f.counts[2]}, f.noise, f.seed);
  }
  std::ostringstream text;
  write_points_csv(text, sample.points);
  write_text(f.out, text.str(), out);
  if (!f.labels_out.empty()) save_labels_csv(f.labels_out, Partition::from_labels(sample.labels));
  return kExitOk;
}

struct ClusterFlags {
  GraphFlags graph;
  std::string laplacian = "rw";
  Index k = 0;
  Index k_max = 0;
  std::uint64_t seed = 0;
  int restarts = 10;
  int max_iters = 300;
  std::string out;
  std::string report;
  std::string svg;
  bool timing = false;
  CLI::Option* k_opt = nullptr;
  CLI::Option* k_max_opt = nullptr;
};

int run_cluster(const ClusterFlags& f, std::ostream& out) {
  f.graph.validate();
  if (f.k_opt->count() > 0 && f.k < 1) throw UsageError("--k must be at least 1");
  if (f.k_opt->count() > 0 && f.k_max_opt->count() > 0) throw UsageError("--k-max only applies when --k is absent");
  if (f.restarts < 1 || f.max_iters < 1) throw UsageError("--restarts and --max-iters must be at least 1");
  const LaplacianKind kind = parse_laplacian_kind(f.laplacian);

  const auto start = std::chrono::steady_clock::now();
  const LoadedGraph loaded = load_graph(f.graph);
  const SimilarityGraph& g = loaded.graph;
  const Index n = g.size();

  const Decomposition spectrum = laplacian_spectrum(build_laplacian(g, kind));
  Index k = f.k;
  std::string k_source = "flag";
  if (f.k_opt->count() == 0) {
    if (n < 3) throw Error(ErrorKind::InvalidInput, "choosing k by eigengap needs at least three vertices");
    const Index k_max = f.k_max_opt->count() > 0 ? f.k_max : default_k_max(n);
    if (k_max < 2 || k_max > n - 1) throw UsageError("--k-max must lie in 2..n-1");
    k = choose_k_eigengap(spectrum.eigenvalues, k_max);
    k_source = "eigengap";
  }
  if (k > n) throw Error(ErrorKind::InvalidParameter, "--k exceeds the number of vertices");

  SpectralConfig cfg{kind, k, f.seed, f.restarts, f.max_iters};
  const Partition partition = cluster_embedding(embedding_from_spectrum(spectrum, kind, k), cfg);
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::ostringstream labels;
  write_labels_csv(labels, partition);
  write_text(f.out, labels.str(), out);

  if (!f.report.empty()) {
    Json report;
    report["command"] = "cluster";
    report["n"] = n;
    report["k"] = k;
    report["k_source"] = k_source;
    report["laplacian"] = to_string(kind);
    report["seed"] = f.seed;
    report["graph"] = loaded.info;
    report["eigenvalues"] = head_values(spectrum.eigenvalues, std::max<Index>(k + 1, 10));
    std::vector<std::size_t> sizes = partition.cluster_sizes();
    report["cluster_sizes"] = sizes;
    try {
      report["cuts"] = cuts_json(evaluate_cuts(g, partition));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UndefinedObjective) throw;
      report["cuts"] = nullptr;
    }
    report["runtime_ms"] = f.timing ? Json(elapsed) : Json(nullptr);
    write_text(f.report, dump(report), out);
  }
  if (!f.svg.empty()) emit_spectrum_svgs(f.svg, spectrum, kind, loaded.points, k, std::nullopt);
  return kExitOk;
}

struct DiagnoseFlags {
  GraphFlags graph;
  std::string laplacian = "rw";
  Index k_max = 0;
  double rho = kReliabilityRatio;
  std::string out;
  std::string table;
  std::string svg;
  CLI::Option* k_max_opt = nullptr;
};

int run_diagnose(const DiagnoseFlags& f, std::ostream& out) {
  f.graph.validate();
  if (!(f.rho > 0.0)) throw UsageError("--rho must be positive");
  const LaplacianKind kind = parse_laplacian_kind(f.laplacian);
  const LoadedGraph loaded = load_graph(f.graph);
  const SimilarityGraph& g = loaded.graph;
  const Index n = g.size();
  if (n < 3) throw Error(ErrorKind::InvalidInput, "diagnostics need at least three vertices");
  const Index k_max = f.k_max_opt->count() > 0 ? f.k_max : default_k_max(n);
  if (k_max < 2 || k_max > n - 1) throw UsageError("--k-max must lie in 2..n-1");

  const DiagnosticsReport r = diagnose(g, kind, k_max, f.rho);
  Json report;
  report["laplacian"] = to_string(kind);
  report["suggested_k"] = r.suggested_k;
  report["eigenvalues"] = r.eigenvalues;
  report["eigengaps"] = r.eigengaps;
  report["unreliable_eigenvalue_indices"] = r.unreliable_eigenvalue_indices;
  report["min_degree"] = r.min_degree;
  report["reliability_ratio"] = f.rho;
  write_text(f.out, dump(report), out);

  if (!f.table.empty()) {
    std::ostringstream tsv;
    tsv << "index\tlambda\treliable\n";
    for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
      const auto idx = static_cast<Index>(i + 1);
      std::string reliable = "na";
      if (kind == LaplacianKind::Unnormalized) {
        const auto& bad = r.unreliable_eigenvalue_indices;
        reliable = std::find(bad.begin(), bad.end(), idx) == bad.end() ? "true" : "false";
      }
      tsv << idx << '\t' << format_real(r.eigenvalues[i]) << '\t' << reliable << '\n';
    }
    write_text(f.table, tsv.str(), out);
  }
  if (!f.svg.empty()) {
    const Decomposition spectrum = laplacian_spectrum(build_laplacian(g, kind));
    std::optional<double> line;
    if (kind == LaplacianKind::Unnormalized) line = r.min_degree;
    emit_spectrum_svgs(f.svg, spectrum, kind, loaded.points, r.suggested_k, line);
  }
  return kExitOk;
}

struct BenchFlags {
  GraphFlags graph;
  Index cockroach = 0;
  std::string objective = "ratiocut";
  std::uint64_t seed = 0;
  std::string out;
  CLI::Option* cockroach_opt = nullptr;
};

int run_bench(const BenchFlags& f, std::ostream& out) {
  const bool roach = f.cockroach_opt->count() > 0;
  f.graph.validate(!roach);
  if (roach && (f.graph.has_input() || f.graph.has_graph())) {
    throw UsageError("--cockroach excludes --input and --load-graph");
  }
  if (roach && f.cockroach < 1) throw UsageError("--cockroach must be at least 1");
  const CutObjective objective = parse_cut_objective(f.objective);
  if (objective == CutObjective::Cut) throw UsageError("bench compares ratiocut or ncut; cut has no spectral relaxation");

  const SimilarityGraph g = roach ? gen_cockroach_graph(f.cockroach) : load_graph(f.graph).graph;
  if (!f.graph.save_graph.empty() && roach) save_edge_list(f.graph.save_graph, g);
  SpectralConfig cfg;
  cfg.laplacian = objective == CutObjective::RatioCut ? LaplacianKind::Unnormalized : LaplacianKind::RandomWalk;
  cfg.seed = f.seed;
  const GapReport r = relaxation_gap_report(g, cfg);
  Json report;
  report["objective"] = to_string(r.objective);
  report["spectral_value"] = r.spectral_value;
  report["exact_value"] = r.exact_value;
  report["ratio"] = std::isfinite(r.ratio) ? Json(r.ratio) : Json(nullptr);
  write_text(f.out, dump(report), out);
  return kExitOk;
}

struct CommuteFlags {
  GraphFlags graph;
  std::string out;
};

int run_commute(const CommuteFlags& f, std::ostream& out) {
  f.graph.validate();
  const LoadedGraph loaded = load_graph(f.graph);
  const CommuteKernel kernel = commute_kernel(loaded.graph);
  std::ostringstream csv;
  csv << "i,j,distance\n";
  for (Index i = 0; i < kernel.size(); ++i) {
    for (Index j = i + 1; j < kernel.size(); ++j) {
      csv << (i + 1) << ',' << (j + 1) << ',' << format_real(commute_distance(kernel, i, j)) << '\n';
    }
  }
  write_text(f.out, csv.str(), out);
  return kExitOk;
}

std::string error_json(const Error& e) {
  Json j;
  j["error"] = to_string(e.kind());
  j["message"] = e.what();
  return j.dump();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral clustering toolkit", "speclust"};
  app.require_subcommand(1);

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate toy datasets");
  gen_cmd->add_option("--dataset", gen.dataset, "gaussians, moons or cockroach")
      ->required()
      ->check(CLI::IsMember({"gaussians", "moons", "cockroach"}));
  gen.n_opt = gen_cmd->add_option("--n", gen.n, "Sample size (gaussians)");
  gen.means_opt = gen_cmd->add_option("--means", gen.means, "Component means (gaussians)")->delimiter(',');
  gen.std_opt = gen_cmd->add_option("--std", gen.std_dev, "Component standard deviation (gaussians)");
  gen.counts_opt = gen_cmd->add_option("--counts", gen.counts, "Top moon, bottom moon, blob sizes")->delimiter(',');
  gen.noise_opt = gen_cmd->add_option("--noise", gen.noise, "Moon noise; the blob spreads 10x this");
  gen.cockroach_opt = gen_cmd->add_option("--cockroach-k", gen.cockroach_k, "Cockroach graph parameter");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");
  gen.labels_opt = gen_cmd->add_option("--labels-out", gen.labels_out, "Ground-truth labels CSV");

  GraphFlags graph_flags;
  std::string graph_out;
  auto* graph_cmd = app.add_subcommand("graph", "Build a similarity graph from points");
  graph_flags.attach(*graph_cmd, false);
  graph_cmd->add_option("--out", graph_out, "Edge-list output (default stdout)");

  ClusterFlags cluster;
  auto* cluster_cmd = app.add_subcommand("cluster", "Spectral clustering");
  cluster.graph.attach(*cluster_cmd);
  cluster_cmd->add_option("--laplacian", cluster.laplacian, "unnormalized, sym or rw")
      ->check(CLI::IsMember({"unnormalized", "sym", "rw"}));
  cluster.k_opt = cluster_cmd->add_option("--k", cluster.k, "Number of clusters (default: eigengap)");
  cluster.k_max_opt = cluster_cmd->add_option("--k-max", cluster.k_max, "Largest k the eigengap search considers");
  cluster_cmd->add_option("--seed", cluster.seed, "k-means seed");
  cluster_cmd->add_option("--restarts", cluster.restarts, "k-means restarts");
  cluster_cmd->add_option("--max-iters", cluster.max_iters, "k-means iteration cap");
  cluster_cmd->add_option("--out", cluster.out, "Labels CSV (default stdout)");
  cluster_cmd->add_option("--report", cluster.report, "JSON report path");
  cluster_cmd->add_option("--svg", cluster.svg, "Prefix for eigenvalue/eigenvector SVG plots");
  cluster_cmd->add_flag("--timing", cluster.timing, "Include runtime in the report");

  DiagnoseFlags diag;
  auto* diag_cmd = app.add_subcommand("diagnose", "Eigengap and reliability diagnostics");
  diag.graph.attach(*diag_cmd);
  diag_cmd->add_option("--laplacian", diag.laplacian, "unnormalized, sym or rw")
      ->check(CLI::IsMember({"unnormalized", "sym", "rw"}));
  diag.k_max_opt = diag_cmd->add_option("--k-max", diag.k_max, "Largest k considered");
  diag_cmd->add_option("--rho", diag.rho, "Reliability ratio against the minimum degree");
  diag_cmd->add_option("--out", diag.out, "JSON report (default stdout)");
  diag_cmd->add_option("--table", diag.table, "Eigenvalue TSV table");
  diag_cmd->add_option("--svg", diag.svg, "Prefix for SVG plots");

  BenchFlags bench;
  auto* bench_cmd = app.add_subcommand("bench", "Spectral vs exact two-way cut");
  bench.graph.attach(*bench_cmd);
  bench.cockroach_opt = bench_cmd->add_option("--cockroach", bench.cockroach, "Use the cockroach graph with this k");
  bench_cmd->add_option("--objective", bench.objective, "ratiocut or ncut")->check(CLI::IsMember({"cut", "ratiocut", "ncut"}));
  bench_cmd->add_option("--seed", bench.seed, "k-means seed");
  bench_cmd->add_option("--out", bench.out, "JSON output (default stdout)");

  CommuteFlags commute;
  auto* commute_cmd = app.add_subcommand("commute", "Pairwise commute distances");
  commute.graph.attach(*commute_cmd);
  commute_cmd->add_option("--out", commute.out, "CSV output (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "speclust: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen, out);
    if (graph_cmd->parsed()) {
      graph_flags.validate();
      if (graph_flags.has_graph()) throw UsageError("graph builds from --input points");
      std::ostringstream text;
      write_edge_list(text, load_graph(graph_flags).graph);
      write_text(graph_out, text.str(), out);
      return kExitOk;
    }
    if (cluster_cmd->parsed()) return run_cluster(cluster, out);
    if (diag_cmd->parsed()) return run_diagnose(diag, out);
    if (bench_cmd->parsed()) return run_bench(bench, out);
    if (commute_cmd->parsed()) return run_commute(commute, out);
  } catch (const UsageError& e) {
    err << "speclust: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << error_json(e) << '\n';
    return kExitCompute;
  }
  return kExitUsage;
}

}  // namespace speclust::cli

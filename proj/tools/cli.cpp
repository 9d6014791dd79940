#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bkneser/bounds.hpp"
#include "bkneser/closed_form.hpp"
#include "bkneser/errors.hpp"
#include "bkneser/hochster.hpp"
#include "bkneser/kneser.hpp"

namespace bkneser::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

class Mismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(raw).size() || v == 0)
    throw DomainError(std::string(name) + " must be a positive integer, got '" + raw + "'");
  return v;
}

void require_kneser(const RunConfig& cfg) {
  if (cfg.k < 1 || cfg.m < 2 * cfg.k)
    throw DomainError("need k >= 1 and m >= 2k, got m=" + std::to_string(cfg.m) + " k=" + std::to_string(cfg.k));
  if (2 * binom(cfg.m, cfg.k) > BigNat(4096))
    throw DomainError("H(" + std::to_string(cfg.m) + "," + std::to_string(cfg.k) +
                      ") has too many vertices to build; formula commands still work");
}

void require_params(const RunConfig& cfg) {
  if (cfg.k < 1 || cfg.m < 2 * cfg.k)
    throw DomainError("need k >= 1 and m >= 2k, got m=" + std::to_string(cfg.m) + " k=" + std::to_string(cfg.k));
}

OracleGuards oracle_guards(const RunConfig& cfg) {
  return {cfg.guards.max_subsets, cfg.guards.max_faces, cfg.guards.max_matrix_cells};
}

CertifyOptions certify_options(const RunConfig& cfg, bool exhaustive) {
  CertifyOptions o;
  o.matching_guard.max_nodes = cfg.guards.max_search_nodes;
  o.domination_guard.max_nodes = cfg.guards.max_search_nodes;
  o.exhaustive = exhaustive;
  return o;
}

SubsetCode parse_subset(int m, const std::string& text) {
  std::vector<int> elems;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || v < 1 || v > m)
      throw DomainError("subset element '" + token + "' is not in [1," + std::to_string(m) + "]");
    elems.push_back(v);
  }
  return SubsetCode::of(m, elems);
}

SubsetCode range_subset(int m, int first, int last) {
  std::vector<int> elems;
  for (int v = first; v <= last; ++v) elems.push_back(v);
  return SubsetCode::of(m, elems);
}

std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::kText: return "text";
    case OutputFormat::kJson: return "json";
    case OutputFormat::kCsv: return "csv";
    case OutputFormat::kDot: return "dot";
    case OutputFormat::kM2: return "m2";
    case OutputFormat::kSingular: return "singular";
  }
  return "text";
}

std::string variable_name(const KneserGraph& h, Vertex v) {
  return h.is_left(v) ? "xL" + std::to_string(v) : "xR" + std::to_string(v - h.side_size());
}

std::optional<ResultCache> open_cache(const RunConfig& cfg) {
  if (!cfg.cache_dir) return std::nullopt;
  return ResultCache(*cfg.cache_dir);
}

// ---- commands ----

void cmd_info(const RunConfig& cfg, std::ostream& out) {
  require_params(cfg);
  const BigNat side = binom(cfg.m, cfg.k);
  const BigNat degree = binom(cfg.m - cfg.k, cfg.k);
  const BigNat vertices = BigNat(2) * side;
  const BigNat edges = side * degree;
  const bool ladder = cfg.m == 2 * cfg.k;
  if (cfg.format == OutputFormat::kJson) {
    ordered_json doc;
    doc["m"] = cfg.m;
    doc["k"] = cfg.k;
    doc["vertices"] = vertices.to_string();
    doc["edges"] = edges.to_string();
    doc["degree"] = degree.to_string();
    doc["side"] = side.to_string();
    doc["ladder_rung"] = ladder;
    out << doc.dump(2) << '\n';
  } else if (cfg.format == OutputFormat::kCsv) {
    out << "m,k,vertices,edges,degree,side,ladder_rung\n"
        << cfg.m << ',' << cfg.k << ',' << vertices << ',' << edges << ',' << degree << ',' << side << ','
        << (ladder ? "true" : "false") << '\n';
  } else {
    out << "H(" << cfg.m << "," << cfg.k << ")\n"
        << "vertices: " << vertices << '\n'
        << "edges: " << edges << '\n'
        << "degree: " << degree << '\n'
        << "side: " << side << '\n'
        << "ladder_rung: " << (ladder ? "yes (LR_" + side.to_string() + ")" : "no") << '\n';
  }
}

void cmd_betti_linear(const RunConfig& cfg, std::optional<int> i_max_opt, bool verify, std::ostream& out) {
  require_params(cfg);
  const BigNat vertices = BigNat(2) * binom(cfg.m, cfg.k);
  int i_max = 0;
  if (i_max_opt) {
    i_max = *i_max_opt;
  } else {
    if (vertices > BigNat(512)) throw DomainError("pass --i-max explicitly for graphs with more than 512 vertices");
    i_max = static_cast<int>(vertices.to_u64());
  }
  if (i_max < 1) throw DomainError("--i-max must be >= 1");

  const auto strand = linear_strand(cfg.m, cfg.k, i_max);
  std::vector<BigNat> oracle;
  if (verify) {
    require_kneser(cfg);
    const auto h = KneserGraph::build(cfg.m, cfg.k);
    for (int i = 1; i <= i_max; ++i)
      oracle.push_back(i + 1 > h.graph().order() ? BigNat{}
                                                  : linear_strand_oracle(h.graph(), i, oracle_guards(cfg), cfg.threads));
  }
  bool all_ok = true;
  for (int i = 0; i < i_max && verify; ++i) all_ok = all_ok && oracle[i] == strand.values[i];

  if (cfg.format == OutputFormat::kJson) {
    ordered_json doc;
    doc["m"] = cfg.m;
    doc["k"] = cfg.k;
    doc["rows"] = ordered_json::array();
    for (int i = 1; i <= i_max; ++i) {
      ordered_json row;
      row["i"] = i;
      row["beta"] = strand.values[i - 1].to_string();
      if (verify) {
        row["oracle"] = oracle[i - 1].to_string();
        row["match"] = oracle[i - 1] == strand.values[i - 1];
      }
      doc["rows"].push_back(row);
    }
    if (verify) doc["verified"] = all_ok;
    out << doc.dump(2) << '\n';
  } else if (cfg.format == OutputFormat::kCsv) {
    out << (verify ? "i,beta,oracle,match\n" : "i,beta\n");
    for (int i = 1; i <= i_max; ++i) {
      out << i << ',' << strand.values[i - 1];
      if (verify) out << ',' << oracle[i - 1] << ',' << (oracle[i - 1] == strand.values[i - 1] ? "OK" : "MISMATCH");
      out << '\n';
    }
  } else {
    out << "linear strand of H(" << cfg.m << "," << cfg.k << "), beta_{i,i+1}\n";
    out << std::setw(4) << "i" << "  " << std::setw(12) << "formula";
    if (verify) out << "  " << std::setw(12) << "oracle" << "  match";
    out << '\n';
    for (int i = 1; i <= i_max; ++i) {
      out << std::setw(4) << i << "  " << std::setw(12) << strand.values[i - 1].to_string();
      if (verify)
        out << "  " << std::setw(12) << oracle[i - 1].to_string() << "  "
            << (oracle[i - 1] == strand.values[i - 1] ? "OK" : "MISMATCH");
      out << '\n';
    }
  }
  if (!all_ok) throw Mismatch("closed form disagrees with the homology oracle");
}

void cmd_betti_table(const RunConfig& cfg, int field_char, std::ostream& out) {
  require_kneser(cfg);
  if (field_char < 0) throw DomainError("--char must be 0 or a prime");
  const auto cache = open_cache(cfg);
  const std::string key = ResultCache::key(cfg.m, cfg.k, "betti-table", "char=" + std::to_string(field_char));
  std::optional<BettiTable> table;
  if (cache)
    if (auto hit = cache->load(key)) table = BettiTable::from_json(*hit);
  if (!table) {
    const auto h = KneserGraph::build(cfg.m, cfg.k);
    table = full_betti_oracle(h.graph(), field_char, oracle_guards(cfg), cfg.threads);
    if (cache) cache->store(key, table->to_json());
  }
  if (cfg.format == OutputFormat::kJson) {
    auto doc = ordered_json::parse(table->to_json());
    doc["pd"] = table->pd();
    doc["reg"] = table->reg();
    out << doc.dump(2) << '\n';
  } else if (cfg.format == OutputFormat::kCsv) {
    out << "i,j,beta\n";
    for (const auto& [ij, v] : table->entries()) out << ij.first << ',' << ij.second << ',' << v << '\n';
  } else {
    out << table->to_text() << "pd: " << table->pd() << "\nreg: " << table->reg() << '\n';
  }
}

void emit_report(const RunConfig& cfg, const BoundReport& r, const Graph* host, std::ostream& out) {
  if (cfg.format == OutputFormat::kJson)
    out << r.to_json(host) << '\n';
  else if (cfg.format == OutputFormat::kText)
    out << r.to_text(host);
  else
    throw DomainError("reports support --format text or json, not " + format_name(cfg.format));
}

void cmd_bounds(const RunConfig& cfg, const std::string& invariant, int p, std::ostream& out) {
  require_params(cfg);
  if (invariant == "reg")
    emit_report(cfg, reg_bounds(cfg.m, cfg.k), nullptr, out);
  else if (invariant == "pd")
    emit_report(cfg, pd_bounds(cfg.m, cfg.k), nullptr, out);
  else
    emit_report(cfg, reg_power_bounds(cfg.m, cfg.k, p), nullptr, out);
}

struct CertifyArgs {
  std::string kind;
  std::optional<std::string> s;
  std::optional<std::string> q;
  std::optional<int> j;
  std::optional<std::string> variant;
  bool no_search = false;
};

void cmd_certify(const RunConfig& cfg, const CertifyArgs& a, std::ostream& out) {
  require_kneser(cfg);
  const int m = cfg.m;
  const int k = cfg.k;
  std::ostringstream digest;
  digest << "kind=" << a.kind << ";s=" << a.s.value_or("-") << ";q=" << a.q.value_or("-")
         << ";j=" << (a.j ? std::to_string(*a.j) : "-") << ";variant=" << a.variant.value_or("-")
         << ";search=" << !a.no_search << ";format=" << format_name(cfg.format);
  const auto cache = open_cache(cfg);
  const std::string key = ResultCache::key(m, k, "certify", digest.str());
  if (cache)
    if (auto hit = cache->load(key)) {
      out << *hit;
      return;
    }

  const auto h = KneserGraph::build(m, k);
  const auto opts = certify_options(cfg, !a.no_search);
  BoundReport r;
  if (a.kind == "matching") {
    r = certify_induced_matching(m, k, a.s ? parse_subset(m, *a.s) : canonical_s(h), opts);
  } else if (a.kind == "cochord") {
    const std::string v = a.variant.value_or(m == 2 * k + 1 ? "double-stars" : "stars");
    r = certify_cochordal_cover(m, k, v == "stars" ? CoverVariant::kStars : CoverVariant::kDoubleStars, opts);
  } else if (a.kind == "domination") {
    SubsetCode s = a.s ? parse_subset(m, *a.s) : canonical_s(h);
    int j = 0;
    if (a.j) {
      j = *a.j;
    } else if (m > 2 * k) {
      for (j = 1; s.contains(j); ++j) {
      }
    }
    r = certify_domination(m, k, s, j, opts);
  } else if (a.kind == "gamma") {
    const SubsetCode q = a.q ? parse_subset(m, *a.q) : range_subset(m, 1, k - 1);
    const SubsetCode s = a.s ? parse_subset(m, *a.s) : range_subset(m, k, 2 * k);
    r = certify_gamma(m, k, q, s, opts);
  } else {
    r = certify_regularity(m, k, opts);
  }
  std::ostringstream rendered;
  emit_report(cfg, r, &h.graph(), rendered);
  if (cache) cache->store(key, rendered.str());
  out << rendered.str();
}

std::string graph_json(const KneserGraph& h) {
  ordered_json doc;
  doc["m"] = h.m();
  doc["k"] = h.k();
  doc["vertices"] = ordered_json::array();
  for (Vertex v = 0; v < h.graph().order(); ++v)
    doc["vertices"].push_back(
        {{"id", v}, {"name", variable_name(h, v)}, {"side", h.is_left(v) ? "L" : "R"}, {"subset", h.subset(v).to_string()}});
  doc["edges"] = ordered_json::array();
  for (const auto& e : h.graph().edges().edges) doc["edges"].push_back({e.u, e.v});
  return doc.dump(2) + "\n";
}

}  // namespace

RunConfig config_from_environment() {
  RunConfig cfg;
  cfg.guards.max_subsets = env_u64("BKNESER_MAX_SUBSETS", cfg.guards.max_subsets);
  cfg.guards.max_faces = env_u64("BKNESER_MAX_FACES", cfg.guards.max_faces);
  cfg.guards.max_matrix_cells = env_u64("BKNESER_MAX_MATRIX_CELLS", cfg.guards.max_matrix_cells);
  cfg.guards.max_search_nodes = env_u64("BKNESER_MAX_SEARCH_NODES", cfg.guards.max_search_nodes);
  if (const char* dir = std::getenv("BKNESER_CACHE_DIR"); dir && *dir) cfg.cache_dir = dir;
  return cfg;
}

std::string export_script(int m, int k, OutputFormat format) {
  RunConfig cfg;
  cfg.m = m;
  cfg.k = k;
  require_kneser(cfg);
  const auto h = KneserGraph::build(m, k);
  const Graph& g = h.graph();

  std::vector<std::string> vars;
  for (Vertex v = 0; v < g.order(); ++v) vars.push_back(variable_name(h, v));
  // edges run left id < right id, so the sorted edge list is ordered by (left rank, right rank)
  std::vector<std::string> gens;
  for (const auto& e : g.edges().edges) gens.push_back(vars[e.u] + "*" + vars[e.v]);

  auto join = [](const std::vector<std::string>& xs, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
    return s;
  };

  std::ostringstream os;
  switch (format) {
    case OutputFormat::kM2:
      os << "-- edge ideal of H(" << m << "," << k << ")\n"
         << "R = QQ[" << join(vars, ",") << "];\n"
         << "I = monomialIdeal(" << join(gens, ", ") << ");\n"
         << "betti res I\n";
      break;
    case OutputFormat::kSingular:
      os << "// edge ideal of H(" << m << "," << k << ")\n"
         << "ring r = 0,(" << join(vars, ",") << "),dp;\n"
         << "ideal I = " << join(gens, ", ") << ";\n"
         << "resolution rs = res(I,0);\n"
         << "print(betti(rs),\"betti\");\n";
      break;
    case OutputFormat::kDot:
      os << to_dot(g, "H_" + std::to_string(m) + "_" + std::to_string(k));
      break;
    case OutputFormat::kJson:
      os << graph_json(h);
      break;
    default:
      throw DomainError("unsupported export format " + format_name(format));
  }
  return os.str();
}

std::uint64_t ResultCache::fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string ResultCache::key(int m, int k, const std::string& command, const std::string& digest) {
  return "m=" + std::to_string(m) + "|k=" + std::to_string(k) + "|" + command + "|" + digest;
}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
  std::ostringstream name;
  name << std::hex << std::setw(16) << std::setfill('0') << fnv1a(key) << ".json";
  return dir_ / name.str();
}

std::optional<std::string> ResultCache::load(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    const auto doc = nlohmann::json::parse(in);
    if (doc.at("key").get<std::string>() != key) return std::nullopt;
    return doc.at("payload").get<std::string>();
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void ResultCache::store(const std::string& key, const std::string& payload) const {
  std::filesystem::create_directories(dir_);
  const auto target = path_for(key);
  const auto tmp = target.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::trunc);
    os << ordered_json{{"key", key}, {"payload", payload}}.dump() << '\n';
  }
  std::filesystem::rename(tmp, target);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = config_from_environment();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kParameterError;
  }

  CLI::App app{"Edge ideals of bipartite Kneser graphs H(m,k)", "bkneser"};
  app.require_subcommand(1);
  app.fallthrough();

  const std::map<std::string, OutputFormat> report_formats{
      {"text", OutputFormat::kText}, {"json", OutputFormat::kJson}, {"csv", OutputFormat::kCsv}};
  const std::map<std::string, OutputFormat> export_formats{{"m2", OutputFormat::kM2},
                                                           {"singular", OutputFormat::kSingular},
                                                           {"dot", OutputFormat::kDot},
                                                           {"json", OutputFormat::kJson}};

  std::string cache_dir;
  app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1, 1024));
  app.add_option("--cache-dir", cache_dir, "cache directory for tables and certificates");
  app.add_option("--max-subsets", cfg.guards.max_subsets)->check(CLI::PositiveNumber);
  app.add_option("--max-faces", cfg.guards.max_faces)->check(CLI::PositiveNumber);
  app.add_option("--max-matrix-cells", cfg.guards.max_matrix_cells)->check(CLI::PositiveNumber);
  app.add_option("--max-search-nodes", cfg.guards.max_search_nodes)->check(CLI::PositiveNumber);

  auto add_mk = [&](CLI::App* sub) {
    sub->add_option("--m", cfg.m, "ground set size")->required();
    sub->add_option("--k", cfg.k, "subset size")->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text, json or csv")
        ->transform(CLI::CheckedTransformer(report_formats, CLI::ignore_case));
  };

  auto* info = app.add_subcommand("info", "vertex, edge and degree counts");
  add_mk(info);
  add_format(info);

  std::optional<int> i_max;
  bool verify = false;
  auto* linear = app.add_subcommand("betti-linear", "closed-form linear strand");
  add_mk(linear);
  add_format(linear);
  linear->add_option("--i-max", i_max, "largest homological degree");
  linear->add_flag("--verify", verify, "compare against the homology oracle");

  int field_char = 0;
  auto* table = app.add_subcommand("betti-table", "full Betti table by Hochster's formula");
  add_mk(table);
  add_format(table);
  table->add_option("--char", field_char, "coefficient field characteristic (0 or a prime)");

  std::string invariant = "reg";
  int power = 1;
  auto* bounds = app.add_subcommand("bounds", "regularity and projective dimension bounds");
  add_mk(bounds);
  add_format(bounds);
  bounds->add_option("--invariant", invariant)->check(CLI::IsMember({"reg", "pd", "reg-power"}));
  bounds->add_option("--p", power, "power of the edge ideal")->check(CLI::PositiveNumber);

  CertifyArgs cert;
  auto* certify = app.add_subcommand("certify", "build and check a combinatorial certificate");
  add_mk(certify);
  add_format(certify);
  certify->add_option("--kind", cert.kind)
      ->required()
      ->check(CLI::IsMember({"matching", "cochord", "domination", "gamma", "regularity"}));
  certify->add_option("--s", cert.s, "subset S as a comma list, e.g. 1,2");
  certify->add_option("--q", cert.q, "subset Q for --kind gamma");
  certify->add_option("--j", cert.j, "extra element for --kind domination");
  certify->add_option("--variant", cert.variant)->check(CLI::IsMember({"stars", "double-stars"}));
  certify->add_flag("--no-search", cert.no_search, "skip exhaustive searches");

  OutputFormat export_format = OutputFormat::kM2;
  auto* exp = app.add_subcommand("export", "write the edge ideal for a computer algebra system");
  add_mk(exp);
  exp->add_option("--format", export_format, "m2, singular, dot or json")
      ->transform(CLI::CheckedTransformer(export_formats, CLI::ignore_case));

  std::vector<const char*> argv{"bkneser"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParameterError;
  }
  if (!cache_dir.empty()) cfg.cache_dir = cache_dir;

  try {
    if (info->parsed()) {
      cmd_info(cfg, out);
    } else if (linear->parsed()) {
      cmd_betti_linear(cfg, i_max, verify, out);
    } else if (table->parsed()) {
      cmd_betti_table(cfg, field_char, out);
    } else if (bounds->parsed()) {
      cmd_bounds(cfg, invariant, power, out);
    } else if (certify->parsed()) {
      cmd_certify(cfg, cert, out);
    } else if (exp->parsed()) {
      out << export_script(cfg.m, cfg.k, export_format);
    }
  } catch (const Mismatch& e) {
    err << "error: " << e.what() << '\n';
    return kMismatch;
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kGuardExceeded;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kParameterError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kParameterError;
  }
  return kOk;
}

}  // namespace bkneser::cli

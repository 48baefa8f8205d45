#include "qlsmodcat/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "qlsmodcat/errors.hpp"
#include "qlsmodcat/filtration.hpp"
#include "qlsmodcat/report.hpp"

namespace qlsmodcat {

namespace fs = std::filesystem;

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<CycloNumber> parse_sample(const std::string& text) {
  static const std::regex rat("^-?[0-9]+(/[0-9]+)?$");
  static const std::regex root("^(-?)z([0-9]+)(\\^(-?[0-9]+))?$");
  std::vector<CycloNumber> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    std::smatch m;
    if (std::regex_match(tok, rat)) {
      Rational q(tok);
      q.canonicalize();
      out.emplace_back(q);
    } else if (std::regex_match(tok, m, root)) {
      const int L = std::stoi(m[2]);
      if (L < 1) throw Error(ErrorKind::ParseError, "--sample: bad conductor in '" + tok + "'");
      CycloNumber z = root_of_unity(L, m[4].matched ? std::stol(m[4]) : 1);
      out.push_back(m[1].length() ? -z : z);
    } else {
      throw Error(ErrorKind::ParseError, "--sample: cannot read '" + tok + "'");
    }
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, "--sample is empty");
  return out;
}

namespace {

struct Options {
  std::string input;
  std::string output;
  std::string format = "text";
  std::string sample = "0,1";
  int max_group_order = kDefaultMaxGroupOrder;
  int conductor = 0;
  std::uint32_t seed = 1;
  bool no_cache = false;
  bool strict_cocycle = false;
};

// A command fills a JSON report and the matching text lines.
struct Report {
  Json json = Json::object();
  std::vector<std::string> lines;
  int code = kExitOk;

  void put(const std::string& key, Json value, const std::string& text) {
    json[key] = std::move(value);
    lines.push_back(text);
  }
  void check(const std::string& name, bool ok, const std::string& detail = "") {
    json["checks"][name] = ok;
    lines.push_back(std::string(ok ? "pass  " : "FAIL  ") + name + (detail.empty() ? "" : ": " + detail));
    if (!ok) code = kExitVerification;
  }
  void axioms(const AxiomReport& r) {
    for (const auto& c : r.checks) check(c.name, c.pass, c.witness);
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_artifact(const std::string& path, const Json& j) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << j.dump(1) << "\n";
}

std::string hex(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

fs::path cache_dir() {
  if (const char* d = std::getenv("QLSMODCAT_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "qlsmodcat";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "qlsmodcat";
  return fs::temp_directory_path() / "qlsmodcat";
}

// Hopf algebra tables keyed by a content hash of the datum; a hit is used
// only when the stored key and the payload checksum both match.
std::shared_ptr<const HopfAlgebraRep> cached_hopf(const std::string& key, bool use_cache,
                                                  const std::function<HopfAlgebraRep()>& build) {
  if (!use_cache) return std::make_shared<HopfAlgebraRep>(build());
  const fs::path file = cache_dir() / (hex(fnv1a(key)) + ".json");
  std::error_code ec;
  if (fs::exists(file, ec)) {
    try {
      const Json j = Json::parse(read_file(file.string()));
      const std::string payload = j.at("payload").dump();
      if (j.at("key") == key && j.at("checksum") == hex(fnv1a(payload)))
        return std::make_shared<HopfAlgebraRep>(hopf_from_json(j.at("payload")));
    } catch (const std::exception&) {
      // unreadable entries are rebuilt below
    }
  }
  auto h = std::make_shared<HopfAlgebraRep>(build());
  fs::create_directories(file.parent_path(), ec);
  if (!ec) {
    const Json payload = hopf_to_json(*h);
    const Json entry{{"key", key}, {"checksum", hex(fnv1a(payload.dump()))}, {"payload", payload}};
    const fs::path tmp = file.string() + ".tmp" + std::to_string(fnv1a(key + std::to_string(std::rand())));
    {
      std::ofstream out(tmp, std::ios::binary);
      out << entry.dump();
    }
    fs::rename(tmp, file, ec);
  }
  return h;
}

std::shared_ptr<const QlsContext> context_for(const QlsDatum& d, bool use_cache) {
  auto U = cached_hopf("bosonization " + datum_to_json(d).dump(), use_cache, [&] { return build_bosonization(d); });
  return std::make_shared<const QlsContext>(QlsContext{d, std::move(U)});
}

std::string ns_string(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

int default_conductor(const Options& o, const QlsDatum& d) { return o.conductor > 0 ? o.conductor : d.exponent(); }

void report_validation(Report& r, const std::string& what, const ValidationReport& v) {
  r.json[what] = v.ok ? "valid" : v.summary();
  r.lines.push_back(what + ": " + (v.ok ? "valid" : v.summary()));
  if (!v.ok) r.code = kExitInvalid;
}

Report cmd_validate(const InputDocument& doc) {
  Report r;
  const auto v = validate_datum(doc.datum);
  r.json["datum"] = v.ok ? "valid" : v.summary();
  r.json["N"] = doc.datum.Ns();
  r.lines.push_back(v.ok ? "valid, N=" + ns_string(doc.datum.Ns()) : v.summary());
  if (!v.ok) r.code = kExitInvalid;
  if (doc.lifting) report_validation(r, "lifting", validate_lifting(doc.datum, *doc.lifting));
  if (doc.modcat) report_validation(r, "modcat", validate_modcat_datum(*make_context(doc.datum), *doc.modcat));
  return r;
}

void require_valid(const QlsDatum& d) {
  const auto v = validate_datum(d);
  if (!v.ok) throw Error(ErrorKind::ValidationFailed, v.summary());
}

std::size_t expected_dim(const QlsDatum& d) {
  std::size_t n = static_cast<std::size_t>(d.group().order());
  for (int N : d.Ns()) n *= static_cast<std::size_t>(N);
  return n;
}

Report cmd_build_hopf(const InputDocument& doc, const Options& o, Json& artifact, bool lifting) {
  Report r;
  const QlsDatum& d = doc.datum;
  require_valid(d);
  std::shared_ptr<const HopfAlgebraRep> H;
  if (lifting) {
    if (!doc.lifting) throw Error(ErrorKind::ValidationFailed, "input has no lifting datum");
    const auto v = validate_lifting(d, *doc.lifting);
    if (!v.ok) throw Error(ErrorKind::ValidationFailed, v.summary());
    const std::string key = "lifting " + datum_to_json(d).dump() + " " + lifting_to_json(*doc.lifting).dump();
    H = cached_hopf(key, !o.no_cache, [&] { return build_lifting(d, *doc.lifting); });
  } else {
    H = context_for(d, !o.no_cache)->U;
  }
  r.put("name", H->name, (lifting ? "lifting " : "bosonization ") + H->name);
  r.put("dim", H->dim(), "dim " + std::to_string(H->dim()) + " (|Gamma| prod N_i = " + std::to_string(expected_dim(d)) + ")");
  r.check("dimension law", H->dim() == expected_dim(d));
  r.axioms(verify_hopf_axioms(*H));
  const auto grading = check_coradical_grading(*H, !lifting);
  r.check(lifting ? "filtered by a-degree" : "graded by x-degree", !grading, grading.value_or(""));
  if (lifting) {
    const auto U = context_for(d, !o.no_cache)->U;
    std::vector<int> a(H->top_degree() + 1), b(U->top_degree() + 1);
    for (int x : H->degree) ++a[x];
    for (int x : U->degree) ++b[x];
    r.check("graded dimensions match U", a == b, ns_string(a) + " vs " + ns_string(b));
  }
  artifact = hopf_to_json(*H);
  return r;
}

Report cmd_build_algebra(const InputDocument& doc, const Options& o, Json& artifact) {
  Report r;
  if (!doc.modcat) throw Error(ErrorKind::ValidationFailed, "input has no modcat datum");
  require_valid(doc.datum);
  const auto ctx = context_for(doc.datum, !o.no_cache);
  const ModCatDatum& m = *doc.modcat;
  const auto v = validate_modcat_datum(*ctx, m);
  if (!v.ok) throw Error(ErrorKind::ValidationFailed, v.summary());
  const ComoduleAlgebraRep A = build_A(*ctx, m);
  const WBasisInfo info = analyze_W(*ctx, m.F(), m.W);
  std::size_t expect = static_cast<std::size_t>(m.F().size());
  for (int h : info.height) expect *= static_cast<std::size_t>(h);
  r.put("datum", params_to_string(m), "A(W,F,psi,xi,alpha) with F = " + m.F().to_string() + ", W = " +
                                          W_to_string(m.W) + ", " + params_to_string(m));
  r.put("dim", A.dim(), "dim " + std::to_string(A.dim()) + " (|F| prod N'_w = " + std::to_string(expect) + ")");
  r.check("dimension law", A.dim() == expect);
  r.axioms(verify_comodule_algebra(A));
  const auto loewy = loewy_filtration(A);
  const auto why = compare_filtrations(loewy, monomial_filtration(A));
  r.put("loewy", loewy.dims(), "Loewy dims " + [&] {
    std::vector<int> d;
    for (auto x : loewy.dims()) d.push_back(static_cast<int>(x));
    return ns_string(d);
  }());
  r.check("Loewy filtration = monomial filtration", !why, why.value_or(""));
  try {
    check_graded_model(*ctx, m, associated_graded(A, loewy));
    r.check("gr A = K(W,psi,F)", true);
  } catch (const Error& e) {
    r.check("gr A = K(W,psi,F)", false, e.what());
  }
  const auto co = coinvariants(A);
  r.check("coinvariants = k1", co.size() == 1, "dim " + std::to_string(co.size()));
  const auto g = galois_map(A);
  r.put("galois_rank", g.rank, "Galois map rank " + std::to_string(g.rank) + " of " + std::to_string(g.rows));
  if (m.F().size() == doc.datum.group().order() && m.W.size() == static_cast<std::size_t>(doc.datum.theta()))
    r.check("Galois map bijective", g.bijective());
  const int L = default_conductor(o, doc.datum);
  const auto s = check_simplicity(A, L, o.seed);
  r.put("simplicity", to_string(s.verdict), "simplicity: " + to_string(s.verdict) + (s.note.empty() ? "" : " (" + s.note + ")"));
  const auto sm = simple_modules(A.alg, L, o.seed);
  r.put("simple_modules", Json({{"radical", sm.dim_radical}, {"split", sm.split}, {"blocks", sm.blocks}}),
        "simple modules: " + blocks_to_string(sm) + (sm.advice.empty() ? "" : " (" + sm.advice + ")"));
  artifact = comodule_to_json(A);
  return r;
}

Report cmd_classify(const InputDocument& doc, const Options& o, Json& artifact) {
  require_valid(doc.datum);
  ClassificationOptions opt;
  opt.sample = parse_sample(o.sample);
  opt.max_group_order = o.max_group_order;
  opt.conductor = default_conductor(o, doc.datum);
  opt.seed = o.seed;
  opt.strict_cocycle = o.strict_cocycle;
  opt.extra_W = doc.extra_W;
  const auto rep = classification_report(doc.datum, opt);
  Report r;
  r.json = classification_to_json(rep);
  std::istringstream text(classification_to_text(rep));
  for (std::string line; std::getline(text, line);) r.lines.push_back(line);
  artifact = r.json;
  return r;
}

Report cmd_transport(const InputDocument& doc, const Options& o, Json& artifact) {
  if (!doc.lifting || !doc.modcat) throw Error(ErrorKind::ValidationFailed, "transport needs a lifting and a modcat datum");
  require_valid(doc.datum);
  const auto v = validate_lifting(doc.datum, *doc.lifting);
  if (!v.ok) throw Error(ErrorKind::ValidationFailed, v.summary());
  const auto ctx = context_for(doc.datum, !o.no_cache);
  const auto mv = validate_modcat_datum(*ctx, *doc.modcat);
  if (!mv.ok) throw Error(ErrorKind::ValidationFailed, mv.summary());
  Report r;
  const auto B = build_bigalois(doc.datum, *doc.lifting);
  r.axioms(verify_bigalois(B));
  const ComoduleAlgebraRep A = build_A(*ctx, *doc.modcat);
  const TransportResult T = transport(doc.datum, *doc.lifting, *doc.modcat);
  r.put("dim", T.algebra.dim(), "transported algebra over " + T.algebra.hopf->name + ", dim " + std::to_string(T.algebra.dim()));
  r.axioms(T.checks);
  const int L = default_conductor(o, doc.datum);
  const auto s1 = check_simplicity(A, L, o.seed), s2 = check_simplicity(T.algebra, L, o.seed);
  r.put("simplicity", Json({to_string(s1.verdict), to_string(s2.verdict)}),
        "simplicity " + to_string(s1.verdict) + " -> " + to_string(s2.verdict));
  r.check("simplicity preserved", s1.verdict == s2.verdict || s1.verdict != Simplicity::SplitSimple);
  const auto co = coinvariants(T.algebra);
  r.check("coinvariants = k1", co.size() == 1, "dim " + std::to_string(co.size()));
  const auto m1 = simple_modules(A.alg, L, o.seed), m2 = simple_modules(T.algebra.alg, L, o.seed);
  const bool same = m1.dim_radical == m2.dim_radical && m1.split == m2.split && m1.blocks == m2.blocks;
  r.put("block_data", Json({{"before", blocks_to_string(m1)}, {"after", blocks_to_string(m2)}, {"equal", same}}),
        "block data " + blocks_to_string(m1) + " -> " + blocks_to_string(m2) + (same ? "" : " (changed)"));
  artifact = comodule_to_json(T.algebra);
  return r;
}

Report cmd_verify(const std::string& text) {
  const Json j = parse_json_text(text);
  const std::string kind = j.value("kind", std::string());
  Report r;
  r.json["kind"] = kind;
  r.lines.push_back("verifying " + kind);
  if (kind == "hopf") {
    r.axioms(verify_hopf_axioms(hopf_from_json(j)));
  } else if (kind == "comodule_algebra") {
    const auto a = comodule_from_json(j);
    r.axioms(verify_hopf_axioms(*a.hopf));
    r.axioms(verify_comodule_algebra(a));
  } else if (kind == "bigalois") {
    const auto b = bigalois_from_json(j);
    r.axioms(verify_hopf_axioms(*b.alg.hopf));
    r.axioms(verify_hopf_axioms(*b.right_hopf));
    r.axioms(verify_bigalois(b));
  } else if (kind == "classification") {
    r.check("classification report has rows", j.contains("rows"));
  } else {
    throw Error(ErrorKind::ParseError, "/kind: unknown artifact kind '" + kind + "'");
  }
  return r;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::ConfluenceFailure:
    case ErrorKind::IsoCheckFailed:
    case ErrorKind::NotClosed:
    case ErrorKind::DivisionByZero:
      return kExitVerification;
    default:
      return kExitInvalid;
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Module categories over quantum linear spaces"};
  app.require_subcommand(1);
  Options o;
  app.add_option("-o,--output", o.output, "write the JSON artifact here");
  app.add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--sample", o.sample, "scalar sample for xi and alpha, e.g. 0,1,z4^1");
  app.add_option("--max-group-order", o.max_group_order, "refuse larger groups")->check(CLI::PositiveNumber);
  app.add_option("--conductor", o.conductor, "field Q(zeta_L) for splitting (default: exponent of Gamma)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", o.seed, "seed for the randomized searches");
  app.add_flag("--no-cache", o.no_cache, "ignore the structure-constant cache");
  app.add_flag("--strict-cocycle", o.strict_cocycle, "dedupe by raw cocycle tables instead of classes");
  const std::vector<std::pair<std::string, std::string>> names{
      {"validate", "check a datum (and optional lifting / modcat)"},
      {"build-hopf", "build and verify the bosonization U"},
      {"build-lifting", "build and verify the lifting H"},
      {"build-algebra", "build and analyse A(W,F,psi,xi,alpha)"},
      {"classify", "classification table"},
      {"transport", "carry A to the lifting through the biGalois object"},
      {"verify", "re-run the axiom sweeps on a dump"}};
  for (const auto& [n, help] : names) {
    auto* sub = app.add_subcommand(n, help);
    sub->add_option("input", o.input, "JSON file")->required();
    sub->fallthrough();
  }

  std::vector<std::string> storage{"qlsmodcat"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  try {
    Report r;
    Json artifact;
    const std::string text = read_file(o.input);
    if (cmd == "verify") {
      r = cmd_verify(text);
    } else {
      const InputDocument doc = parse_input(text);
      if (doc.datum.group().order() > o.max_group_order)
        throw Error(ErrorKind::SizeBound, "|Gamma| = " + std::to_string(doc.datum.group().order()) + " exceeds " +
                                              std::to_string(o.max_group_order));
      if (cmd == "validate") r = cmd_validate(doc);
      else if (cmd == "build-hopf") r = cmd_build_hopf(doc, o, artifact, false);
      else if (cmd == "build-lifting") r = cmd_build_hopf(doc, o, artifact, true);
      else if (cmd == "build-algebra") r = cmd_build_algebra(doc, o, artifact);
      else if (cmd == "classify") r = cmd_classify(doc, o, artifact);
      else r = cmd_transport(doc, o, artifact);
    }
    if (!artifact.is_null()) write_artifact(o.output, artifact);
    if (o.format == "json") {
      Json j{{"command", cmd}, {"exit", r.code}};
      for (const auto& [k, v] : r.json.items()) j[k] = v;
      out << j.dump(1) << "\n";
    } else {
      for (const auto& l : r.lines) out << l << "\n";
    }
    return r.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerification;
  }
}

}  // namespace qlsmodcat

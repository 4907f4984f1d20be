#include "fiberlab/cli/cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "fiberlab/error.hpp"

namespace fiberlab::cli {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CheckRecord record(std::string name, CheckStatus status, std::string anchor) {
  CheckRecord r;
  r.name = std::move(name);
  r.status = status;
  r.anchor = std::move(anchor);
  return r;
}

std::string dims_text(const std::vector<size_t>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + ")";
}

std::string chars_text(const CentralShape& shape, const std::vector<CentralCharacter>& chars) {
  std::string out = "{";
  for (size_t i = 0; i < chars.size(); ++i) out += (i ? "; " : "") + label(shape, chars[i]);
  return out + "}";
}

std::string class_text(LocusClass c, const std::string& fallback) {
  switch (c) {
    case LocusClass::Empty:
      return "∅";
    case LocusClass::Identity:
      return "{m_ε}";
    case LocusClass::All:
      return "maxSpec C";
    case LocusClass::Other:
      return fallback;
  }
  return fallback;
}

Scalar parse_scalar(const std::string& text) {
  static const std::regex zeta(R"(\s*zeta\(\s*(\d+)\s*,\s*(-?\d+)\s*\)\s*)");
  std::smatch m;
  if (std::regex_match(text, m, zeta)) return Scalar::root_of_unity(std::stoi(m[1]), std::stol(m[2]));
  try {
    Rational q(text);
    q.canonicalize();
    return Scalar(q);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::InvalidArgument, "not a scalar: " + text);
  }
}

// ------------------------------------------------------------------ commands

Report validate(const RunConfig&, const std::string& text) {
  Report r;
  HopfPresentation pres;
  try {
    pres = parse_presentation(text);
  } catch (const Error& e) {
    auto c = record("parse", CheckStatus::Fail, "plumbing");
    c.data.emplace_back("error", e.what());
    r.checks.push_back(std::move(c));
    return r;
  }
  auto parse = record("parse", CheckStatus::Pass, "plumbing");
  std::string central;
  for (const auto& s : pres.central->symbols)
    central += (central.empty() ? "" : ", ") + s.name + " " + to_string(s.kind) + (s.order ? " " + std::to_string(s.order) : "");
  parse.data.emplace_back("generators", std::to_string(pres.generators.size()));
  parse.data.emplace_back("rules", std::to_string(pres.rewriting.rules().size()));
  parse.data.emplace_back("central", central.empty() ? "none" : central);
  parse.data.emplace_back("basis_size", std::to_string(pres.dim()));
  r.checks.push_back(std::move(parse));

  size_t max_lhs = 1;
  for (const auto& rule : pres.rewriting.rules()) max_lhs = std::max(max_lhs, rule.lhs.size());
  const auto pairs = critical_pairs_check(pres.rewriting, 2 * max_lhs);
  auto cp = record("critical_pairs", pairs.empty() ? CheckStatus::Pass : CheckStatus::Fail, "plumbing");
  cp.data.emplace_back("overlap_bound", std::to_string(2 * max_lhs));
  cp.data.emplace_back("unresolved", std::to_string(pairs.size()));
  if (!pairs.empty()) {
    const auto& p = pairs.front();
    cp.data.emplace_back("witness", pres.format(p.overlap) + ": " + pres.format(p.left) + " vs " + pres.format(p.right));
  }
  r.checks.push_back(std::move(cp));
  return r;
}

Report analyze(const RunConfig& cfg, const std::string& text) {
  Report r;
  const Study s = run_study(parse_presentation(text), cfg.seed, cfg.samples);
  for (const auto& f : s.fibers) {
    auto c = record("fiber " + label(*s.pres.central, f.chi), CheckStatus::Pass, "square dimension function");
    c.data.emplace_back("dim", std::to_string(f.algebra.dim));
    c.data.emplace_back("sd", std::to_string(f.analysis.sd));
    c.data.emplace_back("irr_count", std::to_string(f.analysis.irr_count));
    c.data.emplace_back("block_dims", dims_text(f.irrep_dims));
    c.data.emplace_back("one_dim_count", std::to_string(f.analysis.one_dim_count));
    c.data.emplace_back("semisimple", f.analysis.sd == f.algebra.dim ? "true" : "false");
    r.checks.push_back(std::move(c));
  }
  return r;
}

struct DiscRun {
  HopfPresentation pres;
  TraceData td;
  DiscTable table;
};

DiscRun disc_run(const RunConfig& cfg, const std::string& text) {
  DiscRun d{parse_presentation(text), {}, {}};
  d.td = regular_trace_over_C(d.pres);
  const SdProfile profile = sd_profile(d.pres, d.td.algebra, cfg.samples);
  const size_t k_min = cfg.k_min.value_or(1);
  const size_t k_max = cfg.k_max.value_or(d.td.algebra.dim + 1);
  if (k_min < 1 || k_max < k_min) throw Error(ErrorKind::InvalidArgument, "need 1 <= k-min <= k-max");
  d.table = discriminant_table(d.td, profile, k_min, k_max);
  return d;
}

Report disc(const RunConfig& cfg, const std::string& text) {
  Report r;
  const DiscRun d = disc_run(cfg, text);
  const CentralShape& shape = *d.pres.central;
  auto base = record("base", CheckStatus::Pass, "discriminant ideals");
  base.data.emplace_back("kind", to_string(d.td.base.kind));
  base.data.emplace_back("rank", std::to_string(d.td.algebra.dim));
  r.checks.push_back(std::move(base));
  for (const auto& row : d.table.rows) {
    const bool agree = row.symbolic_class == row.sd_class;
    auto c = record("k=" + std::to_string(row.k), row.sandwich && agree ? CheckStatus::Pass : CheckStatus::Fail,
                    "discriminant ideals");
    c.data.emplace_back("MD_k", row.md.to_string());
    c.data.emplace_back("D_k_sub", row.sub.to_string());
    c.data.emplace_back("zero_locus", row.locus.describe(d.td.base));
    c.data.emplace_back("sd_locus", chars_text(shape, row.sd_locus));
    c.data.emplace_back("sandwich", row.sandwich ? "certified" : "not certified");
    c.data.emplace_back("class", to_string(row.symbolic_class));
    c.data.emplace_back("sd_class", to_string(row.sd_class));
    r.checks.push_back(std::move(c));
  }
  auto chain = record("ideal_chain", d.table.chain_ok ? CheckStatus::Pass : CheckStatus::Fail, "discriminant ideals");
  r.checks.push_back(std::move(chain));
  auto ell = record("lowest_level", CheckStatus::Pass, "lowest discriminant level");
  ell.data.emplace_back("level", std::to_string(d.table.lowest_level));
  r.checks.push_back(std::move(ell));
  auto delta = record("discriminant", CheckStatus::Pass, "discriminant");
  delta.data.emplace_back("value", d.table.discriminant.to_string());
  r.checks.push_back(std::move(delta));
  return r;
}

Report theorems(const RunConfig& cfg, const std::string& text, const std::string& input) {
  Report r;
  const Study s = run_study(parse_presentation(text), cfg.seed, cfg.samples);
  r.checks = theorem_checks(s, expected_negatives(input));
  auto ch = record("cayley_hamilton", CheckStatus::Skipped, "Cayley-Hamilton degree");
  if (s.trace) {
    const auto rep = verify_cayley_hamilton(s.pres, *s.trace, s.algebra.dim, cfg.ch_samples, cfg.seed);
    ch.status = CheckStatus::Pass;
    ch.data.emplace_back("degree", std::to_string(rep.degree));
    ch.data.emplace_back("elements", std::to_string(rep.elements_checked));
  } else {
    ch.data.emplace_back("reason", s.trace_unsupported);
  }
  r.checks.insert(r.checks.begin(), std::move(ch));
  return r;
}

/// Consecutive k with the same class merged into one range.
CheckRecord paper_table(const RunConfig& cfg, const std::string& name, const std::string& text) {
  RunConfig c = cfg;
  c.k_min = 1;
  c.k_max.reset();
  const DiscRun d = disc_run(c, text);
  auto rec = record("table " + name, CheckStatus::Pass, "discriminant zero loci");
  const auto& rows = d.table.rows;
  size_t start = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].symbolic_class != rows[i].sd_class) rec.status = CheckStatus::Fail;
    const bool last = i + 1 == rows.size();
    if (!last && rows[i + 1].symbolic_class == rows[start].symbolic_class) continue;
    const size_t a = rows[start].k;
    const size_t b = rows[i].k;
    std::string range;
    if (last && rows[i].symbolic_class == LocusClass::All)
      range = "k ≥ " + std::to_string(a);
    else if (a == b)
      range = "k = " + std::to_string(a);
    else
      range = std::to_string(a) + " ≤ k ≤ " + std::to_string(b);
    rec.data.emplace_back(range, class_text(rows[start].symbolic_class, rows[start].locus.describe(d.td.base)));
    start = i + 1;
  }
  rec.data.emplace_back("lowest_level", std::to_string(d.table.lowest_level));
  rec.data.emplace_back("discriminant", d.table.discriminant.to_string());
  return rec;
}

Report paper_tables(const RunConfig& cfg, const std::string& dir) {
  Report r;
  for (const auto* name : {"q8_central", "ex3_2", "taft_inf_2", "taft_inf_3"})
    r.checks.push_back(paper_table(cfg, name, read_file((fs::path(dir) / (std::string(name) + ".hopf")).string())));
  return r;
}

// ------------------------------------------------------------------ rendering

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char ch : s) out += ch == '|' ? std::string("\\|") : std::string(1, ch);
  return out;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownSymbol:
    case ErrorKind::BasisNotClosed:
    case ErrorKind::HopfMapInconsistent:
    case ErrorKind::StepCapExceeded:
    case ErrorKind::InvalidArgument:
      return kExitValidation;
    case ErrorKind::UnsupportedCentralShape:
    case ErrorKind::UnrecognizedRoot:
      return kExitUnsupported;
    default:
      return kExitInternal;
  }
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorKind::InvalidArgument, "SHA-256 failed");
  std::ostringstream ss;
  for (unsigned int i = 0; i < len; ++i) ss << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return ss.str();
}

std::set<std::string> expected_negatives(const std::string& input_path) {
  const fs::path p(input_path);
  const fs::path file = p.parent_path() / "expectations.json";
  if (!fs::exists(file)) return {};
  const auto j = nlohmann::json::parse(read_file(file.string()));
  const std::string key = p.filename().string();
  if (!j.contains(key)) return {};
  return j.at(key).get<std::set<std::string>>();
}

std::vector<std::string> corpus_files(const std::string& dir) {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".hopf") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

Report run_command(const RunConfig& cfg, const std::string& command, const std::string& input) {
  Report r;
  if (command == "report-paper-tables") {
    std::string all;
    for (const auto& f : corpus_files(input)) all += read_file(f);
    r = paper_tables(cfg, input);
    r.input = fs::path(input).filename().string();
    r.input_digest = sha256_hex(all);
    r.command = command;
    return r;
  }
  const std::string text = read_file(input);
  if (command == "validate")
    r = validate(cfg, text);
  else if (command == "analyze")
    r = analyze(cfg, text);
  else if (command == "disc")
    r = disc(cfg, text);
  else if (command == "theorems")
    r = theorems(cfg, text, input);
  else
    throw Error(ErrorKind::InvalidArgument, "unknown command " + command);
  r.input = fs::path(input).filename().string();
  r.input_digest = sha256_hex(text);
  r.command = command;
  return r;
}

std::string render(const std::vector<Report>& reports, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Json: {
      ordered_json arr = ordered_json::array();
      for (const auto& r : reports) {
        ordered_json j;
        j["version"] = kVersion;
        j["input"] = r.input;
        j["input_digest"] = r.input_digest;
        j["command"] = r.command;
        j["checks"] = ordered_json::array();
        for (const auto& c : r.checks) {
          ordered_json data = ordered_json::object();
          for (const auto& [k, v] : c.data) data[k] = v;
          j["checks"].push_back({{"name", c.name}, {"status", to_string(c.status)}, {"data", data}, {"anchor", c.anchor}});
        }
        arr.push_back(std::move(j));
      }
      out << (reports.size() == 1 ? arr.front() : arr).dump(2) << "\n";
      break;
    }
    case Format::Csv:
      out << "input,command,check,status,anchor,key,value\n";
      for (const auto& r : reports)
        for (const auto& c : r.checks) {
          const std::string head = csv_field(r.input) + "," + csv_field(r.command) + "," + csv_field(c.name) + "," +
                                   to_string(c.status) + "," + csv_field(c.anchor) + ",";
          if (c.data.empty()) out << head << ",\n";
          for (const auto& [k, v] : c.data) out << head << csv_field(k) << "," << csv_field(v) << "\n";
        }
      break;
    case Format::Markdown:
      for (const auto& r : reports) {
        out << "## " << r.command << " " << r.input << "\n\n";
        out << "version " << kVersion << ", input sha256 `" << r.input_digest << "`\n\n";
        for (const auto& c : r.checks) {
          out << "### " << c.name << " (" << to_string(c.status) << ")\n\n";
          if (!c.data.empty()) {
            out << "| key | value |\n|---|---|\n";
            for (const auto& [k, v] : c.data) out << "| " << md_cell(k) << " | " << md_cell(v) << " |\n";
            out << "\n";
          }
          out << "anchor: " << c.anchor << "\n\n";
        }
      }
      break;
  }
  return out.str();
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fiber algebras, square dimensions and discriminant ideals of Hopf algebras over central subalgebras",
               "fiberlab"};
  RunConfig cfg;
  std::string samples_text;
  std::string format_text = "json";
  size_t k_min = 0, k_max = 0;
  cfg.corpus_dir = FIBERLAB_CORPUS_DIR;
  app.add_option("command", cfg.command, "validate | analyze | disc | theorems | report-paper-tables")
      ->check(CLI::IsMember({"validate", "analyze", "disc", "theorems", "report-paper-tables"}));
  app.add_option("file", cfg.input, "input .hopf file (a corpus directory for report-paper-tables)");
  app.add_option("--seed", cfg.seed, "seed for the numeric certification paths");
  app.add_option("--samples", samples_text, "comma-separated values for free central parameters");
  app.add_option("--format", format_text, "json | csv | markdown")->check(CLI::IsMember({"json", "csv", "markdown"}));
  auto* kmin_opt = app.add_option("--k-min", k_min, "first discriminant level");
  auto* kmax_opt = app.add_option("--k-max", k_max, "last discriminant level");
  app.add_flag("--corpus", cfg.corpus, "run over every corpus file");
  app.add_option("--corpus-dir", cfg.corpus_dir, "corpus directory");
  app.add_option("--ch-samples", cfg.ch_samples, "random elements for the Cayley-Hamilton check");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitValidation;
  }
  if (*kmin_opt) cfg.k_min = k_min;
  if (*kmax_opt) cfg.k_max = k_max;
  cfg.format = format_text == "csv" ? Format::Csv : format_text == "markdown" ? Format::Markdown : Format::Json;

  std::vector<Report> reports;
  try {
    if (!samples_text.empty()) {
      std::vector<Scalar> v;
      std::stringstream ss(samples_text);
      std::string item;
      while (std::getline(ss, item, ',')) v.push_back(parse_scalar(item));
      cfg.samples = v;
    }
    if (cfg.corpus) {
      const std::vector<std::string> commands =
          cfg.command.empty() ? std::vector<std::string>{"validate", "analyze", "disc", "theorems"}
                              : std::vector<std::string>{cfg.command};
      for (const auto& cmd : commands) {
        if (cmd == "report-paper-tables") continue;
        for (const auto& f : corpus_files(cfg.corpus_dir)) reports.push_back(run_command(cfg, cmd, f));
      }
      if (cfg.command.empty() || cfg.command == "report-paper-tables")
        reports.push_back(run_command(cfg, "report-paper-tables", cfg.corpus_dir));
    } else {
      if (cfg.command.empty()) throw Error(ErrorKind::InvalidArgument, "a command is required without --corpus");
      if (cfg.input.empty()) {
        if (cfg.command != "report-paper-tables") throw Error(ErrorKind::InvalidArgument, "an input file is required");
        cfg.input = cfg.corpus_dir;
      }
      reports.push_back(run_command(cfg, cfg.command, cfg.input));
    }
  } catch (const Error& e) {
    err << "fiberlab: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "fiberlab: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  out << render(reports, cfg.format);
  for (const auto& r : reports)
    for (const auto& c : r.checks)
      if (c.status == CheckStatus::Fail) return kExitValidation;
  return kExitPass;
}

}  // namespace fiberlab::cli

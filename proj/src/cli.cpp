#include "lehmerlab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "lehmerlab/abelian_aut.hpp"
#include "lehmerlab/catalog_verify.hpp"
#include "lehmerlab/group_engine.hpp"
#include "lehmerlab/group_spec.hpp"
#include "lehmerlab/lehmer_search.hpp"
#include "lehmerlab/report.hpp"

namespace lehmerlab::cli {

namespace {

constexpr std::size_t kCrossCheckMaxOrder = 128;

struct CommandOutcome {
  std::string text;
  int code = kExitOk;
};

struct CommonOptions {
  std::string format = "text";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--format", o.format, "Output format: text, json or csv");
  cmd->add_option("--out", o.out_path, "Write the report to FILE instead of standard output");
}

struct ScanOptions {
  CommonOptions common;
  std::uint64_t min = 2;
  std::uint64_t max = 0;
  std::uint64_t segment = lehmer::kDefaultSegmentLength;
  unsigned workers = 1;
  bool carmichael = false;
  bool timing = false;
};

struct AutOptions {
  CommonOptions common;
  std::string abelian;
  std::string table;
  bool cross_check = false;
};

struct CatalogOptions {
  CommonOptions common;
  std::size_t max_order = 0;
  std::vector<std::string> extra_tables;
};

struct PhiOptions {
  CommonOptions common;
  std::string group;
  std::string table;
};

CommandOutcome lehmer_scan(const ScanOptions& o) {
  const auto format = report::parse_format(o.common.format);
  lehmer::ScanConfig config;
  config.lo = o.min;
  config.hi = o.max;
  config.segment_length = o.segment;
  config.worker_count = o.workers;
  config.collect_carmichael = o.carmichael;
  const auto r = lehmer::scan_range(config);
  return {report::render_scan(r, format, o.timing),
          r.lehmer_candidates.empty() ? kExitOk : kExitLehmerCandidate};
}

CommandOutcome aut(const AutOptions& o) {
  const auto format = report::parse_format(o.common.format);
  if (o.abelian.empty() == o.table.empty()) {
    throw std::invalid_argument("aut needs exactly one of --abelian or --table");
  }
  report::AutResult result;
  result.cross_check_requested = o.cross_check;
  result.cross_check = o.cross_check ? "skipped" : "not requested";

  std::optional<groups::CayleyGroup> table_group;
  std::optional<abelian::AbelianSpec> spec;
  if (!o.abelian.empty()) {
    spec = abelian::parse_abelian_spec(o.abelian);
    result.input_kind = "abelian";
    result.input = o.abelian;
    result.group_name = abelian::display_name(*spec);
    result.group_order = abelian::group_order(*spec);
    result.formula = abelian::aut_order(*spec);
    if (o.cross_check && result.group_order <= kCrossCheckMaxOrder) table_group = groups::make_abelian(*spec);
  } else {
    table_group = groups::load_cayley_table_file(o.table);
    result.input_kind = "table";
    result.input = o.table;
    result.group_name = table_group->name();
    result.group_order = to_big(table_group->order());
    if (o.cross_check && table_group->order() <= kCrossCheckMaxOrder) spec = groups::identify_abelian(*table_group);
  }

  if (table_group) result.bruteforce = groups::aut_order_bruteforce(*table_group);
  if (!o.table.empty() && spec) result.formula = abelian::aut_order(*spec);

  int code = kExitOk;
  if (o.cross_check && result.formula && result.bruteforce) {
    const bool agree = *result.formula == *result.bruteforce;
    result.cross_check = agree ? "agree" : "disagree";
    if (!agree) code = kExitDisagreement;
  }
  return {report::render_aut(result, format), code};
}

std::vector<groups::CayleyGroup> load_extras(const std::vector<std::string>& paths) {
  std::vector<groups::CayleyGroup> extras;
  for (const auto& p : paths) extras.push_back(groups::load_cayley_table_file(p));
  return extras;
}

void check_max_order(std::size_t max_order) {
  const std::size_t cap = groups::max_table_order();
  if (max_order < 2 || max_order > cap) {
    throw std::invalid_argument("--max-order must be in [2, " + std::to_string(cap) + "]");
  }
}

CommandOutcome verify_theorem1(const CatalogOptions& o) {
  const auto format = report::parse_format(o.common.format);
  check_max_order(o.max_order);
  const auto extras = load_extras(o.extra_tables);
  const auto cat = catalog::build_catalog(o.max_order, extras);
  const auto records = catalog::verify_theorem1(cat);
  const bool ok = std::all_of(records.begin(), records.end(), catalog::record_consistent);
  return {report::render_verify({o.max_order, o.extra_tables}, records, format), ok ? kExitOk : kExitDisagreement};
}

CommandOutcome relation2(const CatalogOptions& o) {
  const auto format = report::parse_format(o.common.format);
  check_max_order(o.max_order);
  const auto extras = load_extras(o.extra_tables);
  const auto cat = catalog::build_catalog(o.max_order, extras);
  return {report::render_relation2({o.max_order, o.extra_tables}, catalog::scan_relation2(cat), format), kExitOk};
}

CommandOutcome phi_g(const PhiOptions& o) {
  const auto format = report::parse_format(o.common.format);
  if (o.group.empty() == o.table.empty()) throw std::invalid_argument("phi-g needs exactly one of --group or --table");
  const auto g = o.group.empty() ? groups::load_cayley_table_file(o.table) : groups::parse_group_spec(o.group);
  report::PhiGResult r;
  r.input = o.group.empty() ? o.table : o.group;
  r.group_name = g.name();
  r.order = g.order();
  r.exponent = groups::exponent(g);
  r.verdict = groups::check_condition2(g);
  return {report::render_phi_g(r, format), kExitOk};
}

int emit(const CommandOutcome& outcome, const CommonOptions& common, std::ostream& out, std::ostream& err) {
  if (common.out_path.empty()) {
    out << outcome.text;
    out.flush();
    return outcome.code;
  }
  std::ofstream file(common.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot write " << common.out_path << "\n";
    return kExitBadArguments;
  }
  file << outcome.text;
  return outcome.code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lehmer totient and group automorphism laboratory", "lehmerlab"};
  app.require_subcommand(1);

  ScanOptions scan;
  auto* scan_cmd = app.add_subcommand("lehmer-scan", "Search [min, max] for composite n with phi(n) | n - 1");
  scan_cmd->add_option("--min", scan.min, "Range start (>= 2)");
  scan_cmd->add_option("--max", scan.max, "Range end (<= 2^63 - 1)")->required();
  scan_cmd->add_option("--segment", scan.segment, "Sieve segment length");
  scan_cmd->add_option("--workers", scan.workers, "Worker threads");
  scan_cmd->add_flag("--carmichael", scan.carmichael, "Also list Carmichael numbers in range");
  scan_cmd->add_flag("--timing", scan.timing, "Include elapsed time in the report");
  add_common(scan_cmd, scan.common);

  AutOptions aut_opts;
  auto* aut_cmd = app.add_subcommand("aut", "Order of the automorphism group");
  aut_cmd->add_option("--abelian", aut_opts.abelian, "Abelian group as p^e1,e2;q^f1");
  aut_cmd->add_option("--table", aut_opts.table, "Cayley table file");
  aut_cmd->add_flag("--cross-check", aut_opts.cross_check, "Compare closed formula and brute force (order <= 128)");
  add_common(aut_cmd, aut_opts.common);

  CatalogOptions verify_opts;
  verify_opts.max_order = 64;
  auto* verify_cmd = app.add_subcommand("verify-theorem1", "Check |G| - 1 = 0 mod |Aut(G)| over the group catalog");
  verify_cmd->add_option("--max-order", verify_opts.max_order, "Largest catalog group order");
  verify_cmd->add_option("--extra-table", verify_opts.extra_tables, "Additional Cayley table files");
  add_common(verify_cmd, verify_opts.common);

  CatalogOptions rel_opts;
  rel_opts.max_order = 81;
  auto* rel_cmd = app.add_subcommand("relation2", "Scan |G| - 1 = 0 mod phi(G) over the group catalog");
  rel_cmd->add_option("--max-order", rel_opts.max_order, "Largest catalog group order");
  rel_cmd->add_option("--extra-table", rel_opts.extra_tables, "Additional Cayley table files");
  add_common(rel_cmd, rel_opts.common);

  PhiOptions phi_opts;
  auto* phi_cmd = app.add_subcommand("phi-g", "Exponent and generalized totient of a group");
  phi_cmd->add_option("--group", phi_opts.group, "Group spec, e.g. cyclic:12, sym:3, product:(cyclic:2)x(sym:3)");
  phi_cmd->add_option("--table", phi_opts.table, "Cayley table file");
  add_common(phi_cmd, phi_opts.common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadArguments;
  }

  try {
    if (scan_cmd->parsed()) return emit(lehmer_scan(scan), scan.common, out, err);
    if (aut_cmd->parsed()) return emit(aut(aut_opts), aut_opts.common, out, err);
    if (verify_cmd->parsed()) return emit(verify_theorem1(verify_opts), verify_opts.common, out, err);
    if (rel_cmd->parsed()) return emit(relation2(rel_opts), rel_opts.common, out, err);
    if (phi_cmd->parsed()) return emit(phi_g(phi_opts), phi_opts.common, out, err);
  } catch (const groups::TableParseError& e) {
    err << "error: invalid table: " << e.what() << "\n";
    return kExitInvalidTable;
  } catch (const groups::GroupAxiomError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidTable;
  } catch (const groups::OrderCapError& e) {
    err << "error: " << e.what() << " (set LEHMERLAB_MAX_TABLE_ORDER to raise it";
    err << "; abelian groups can use --abelian)\n";
    return kExitCapExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadArguments;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadArguments;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitBadArguments;
}

}  // namespace lehmerlab::cli

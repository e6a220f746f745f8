#include "lehmerlab/report.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lehmerlab::report {

namespace {

using Json = nlohmann::ordered_json;

const char* const kLiteratureNotes[] = {
    "literature (not assumed by this scan): a Lehmer number must be odd, squarefree, "
    "greater than 10^30 and divisible by at least 15 distinct primes",
    "literature (not assumed by this scan): a Lehmer number must be a Carmichael number",
};

const char* const kUndefinedPolicy =
    "groups with phi(G) = 0 have no element of order exp(G); relation (2) is not evaluated for them "
    "and they are listed separately";

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

Json verdict_json(const groups::Condition2Verdict& v) {
  Json j;
  j["status"] = std::string(groups::to_string(v.status));
  j["phi"] = v.phi_value;
  j["remainder"] = v.remainder ? Json(*v.remainder) : Json(nullptr);
  return j;
}

std::string certificate_line(const lehmer::ScanReport& r) {
  std::ostringstream s;
  if (r.lehmer_candidates.empty()) {
    s << "no composite n in [" << r.lo << ", " << r.hi << "] satisfies phi(n) | n - 1";
  } else {
    s << r.lehmer_candidates.size() << " composite n in [" << r.lo << ", " << r.hi
      << "] satisfy phi(n) | n - 1 (independently re-verified)";
  }
  return s.str();
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected text, json or csv)");
}

std::string render_scan(const lehmer::ScanReport& r, OutputFormat format, bool include_timing) {
  switch (format) {
    case OutputFormat::json: {
      Json j;
      j["kind"] = "lehmer-scan";
      j["params"] = {{"min", r.lo}, {"max", r.hi}, {"carmichael", r.carmichael_found.has_value()}};
      Json records = Json::array();
      for (auto n : r.lehmer_candidates) records.push_back({{"type", "lehmer_candidate"}, {"n", n}});
      if (r.carmichael_found) {
        for (auto n : *r.carmichael_found) records.push_back({{"type", "carmichael"}, {"n", n}});
      }
      j["records"] = records;
      Json summary;
      summary["candidates"] = r.lehmer_candidates.size();
      summary["composites_tested"] = r.composites_tested;
      if (r.carmichael_found) summary["carmichael_count"] = r.carmichael_found->size();
      summary["certificate"] = certificate_line(r);
      summary["annotations"] = Json::array({kLiteratureNotes[0], kLiteratureNotes[1]});
      j["summary"] = summary;
      if (include_timing) j["timing"] = {{"elapsed_ms", r.elapsed_ms}};
      return dump(j);
    }
    case OutputFormat::csv: {
      std::string out = "type,n\n";
      for (auto n : r.lehmer_candidates) out += "lehmer_candidate," + std::to_string(n) + "\n";
      if (r.carmichael_found) {
        for (auto n : *r.carmichael_found) out += "carmichael," + std::to_string(n) + "\n";
      }
      return out;
    }
    case OutputFormat::text: {
      std::ostringstream s;
      s << "Lehmer scan over [" << r.lo << ", " << r.hi << "]\n";
      s << "composites tested: " << r.composites_tested << "\n";
      s << "candidates: " << r.lehmer_candidates.size() << "\n";
      for (auto n : r.lehmer_candidates) s << "  " << n << "\n";
      if (r.carmichael_found) {
        s << "carmichael numbers: " << r.carmichael_found->size() << "\n";
        for (auto n : *r.carmichael_found) s << "  " << n << "\n";
      }
      s << "certificate: " << certificate_line(r) << "\n";
      for (const char* note : kLiteratureNotes) s << "note: " << note << "\n";
      if (include_timing) s << "elapsed: " << r.elapsed_ms << " ms\n";
      return s.str();
    }
  }
  return {};
}

std::string render_aut(const AutResult& a, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: {
      Json j;
      j["kind"] = "aut";
      j["params"] = {{"input_kind", a.input_kind}, {"input", a.input}, {"cross_check", a.cross_check_requested}};
      Json records = Json::array();
      if (a.formula) records.push_back({{"method", "formula"}, {"aut_order", to_decimal(*a.formula)}});
      if (a.bruteforce) records.push_back({{"method", "bruteforce"}, {"aut_order", to_decimal(*a.bruteforce)}});
      j["records"] = records;
      j["summary"] = {{"group", a.group_name},
                      {"order", to_decimal(a.group_order)},
                      {"aut_order", to_decimal(a.aut_order())},
                      {"cross_check", a.cross_check}};
      return dump(j);
    }
    case OutputFormat::csv: {
      std::string out = "method,group,order,aut_order\n";
      if (a.formula) {
        out += "formula," + csv_field(a.group_name) + "," + to_decimal(a.group_order) + "," + to_decimal(*a.formula) + "\n";
      }
      if (a.bruteforce) {
        out += "bruteforce," + csv_field(a.group_name) + "," + to_decimal(a.group_order) + "," +
               to_decimal(*a.bruteforce) + "\n";
      }
      return out;
    }
    case OutputFormat::text: {
      std::string out = to_decimal(a.aut_order()) + "\n";
      if (a.cross_check_requested) {
        out += "cross-check: " + a.cross_check;
        if (a.formula && a.bruteforce) {
          out += " (formula " + to_decimal(*a.formula) + ", brute force " + to_decimal(*a.bruteforce) + ")";
        }
        out += "\n";
      }
      return out;
    }
  }
  return {};
}

std::string render_verify(const VerifyParams& params, std::span<const catalog::VerifyRecord> records,
                          OutputFormat format) {
  std::size_t disagreements = 0;
  std::vector<std::string> holds;
  for (const auto& r : records) {
    if (!catalog::record_consistent(r)) ++disagreements;
    if (r.condition1) holds.push_back(r.name);
  }
  switch (format) {
    case OutputFormat::json: {
      Json j;
      j["kind"] = "verify-theorem1";
      j["params"] = {{"max_order", params.max_order}, {"extra_tables", params.extra_tables}};
      Json rows = Json::array();
      for (const auto& r : records) {
        Json row;
        row["name"] = r.name;
        row["order"] = r.order;
        row["is_abelian"] = r.is_abelian;
        row["is_cyclic"] = r.is_cyclic;
        row["aut_order"] = to_decimal(r.aut_order);
        row["aut_method"] = r.aut_method;
        row["aut_cross_check"] = r.aut_cross_check ? Json(*r.aut_cross_check) : Json(nullptr);
        row["condition1"] = r.condition1;
        row["expected1"] = r.expected1;
        row["exponent"] = r.exponent;
        row["phi_G"] = r.phi_G;
        row["condition2"] = verdict_json(r.condition2);
        row["agrees"] = r.agrees;
        rows.push_back(std::move(row));
      }
      j["records"] = rows;
      j["summary"] = {{"groups", records.size()},
                      {"disagreements", disagreements},
                      {"condition1_holds", holds},
                      {"note", std::string(catalog::kCatalogNote)}};
      return dump(j);
    }
    case OutputFormat::csv: {
      std::string out =
          "name,order,is_abelian,is_cyclic,aut_order,aut_method,condition1,expected1,exponent,phi_G,condition2,"
          "agrees\n";
      for (const auto& r : records) {
        out += csv_field(r.name) + "," + std::to_string(r.order) + "," + yes_no(r.is_abelian) + "," +
               yes_no(r.is_cyclic) + "," + to_decimal(r.aut_order) + "," + r.aut_method + "," +
               yes_no(r.condition1) + "," + yes_no(r.expected1) + "," + std::to_string(r.exponent) + "," +
               std::to_string(r.phi_G) + "," + std::string(groups::to_string(r.condition2.status)) + "," +
               yes_no(r.agrees) + "\n";
      }
      return out;
    }
    case OutputFormat::text: {
      std::ostringstream s;
      s << "Condition (1) harness, groups of order <= " << params.max_order << " (" << catalog::kCatalogNote
        << ")\n";
      for (const auto& r : records) {
        s << "  " << r.name << "  order " << r.order << "  |Aut| " << to_decimal(r.aut_order) << " ("
          << r.aut_method << ")  condition1 " << yes_no(r.condition1) << "  expected " << yes_no(r.expected1)
          << (catalog::record_consistent(r) ? "" : "  DISAGREES") << "\n";
      }
      s << "groups: " << records.size() << ", disagreements: " << disagreements << "\n";
      s << "condition (1) holds for:";
      for (const auto& h : holds) s << " " << h;
      s << "\n";
      return s.str();
    }
  }
  return {};
}

std::string render_relation2(const VerifyParams& params, const catalog::Relation2Buckets& b, OutputFormat format) {
  const std::pair<const char*, const std::vector<catalog::Relation2Record>*> buckets[] = {
      {"holds", &b.holds}, {"fails", &b.fails}, {"undefined_zero_phi", &b.undefined_zero_phi}};
  switch (format) {
    case OutputFormat::json: {
      Json j;
      j["kind"] = "relation2";
      j["params"] = {{"max_order", params.max_order}, {"extra_tables", params.extra_tables}};
      Json rows = Json::array();
      for (const auto& [bucket, list] : buckets) {
        for (const auto& r : *list) {
          rows.push_back({{"bucket", bucket},
                          {"name", r.name},
                          {"order", r.order},
                          {"is_abelian", r.is_abelian},
                          {"is_cyclic", r.is_cyclic},
                          {"exponent", r.exponent},
                          {"phi_G", r.verdict.phi_value},
                          {"remainder", r.verdict.remainder ? Json(*r.verdict.remainder) : Json(nullptr)}});
        }
      }
      j["records"] = rows;
      j["summary"] = {{"holds", b.holds.size()},
                      {"fails", b.fails.size()},
                      {"undefined_zero_phi", b.undefined_zero_phi.size()},
                      {"note", std::string(catalog::kCatalogNote)},
                      {"undefined_policy", kUndefinedPolicy}};
      return dump(j);
    }
    case OutputFormat::csv: {
      std::string out = "bucket,name,order,exponent,phi_G,remainder\n";
      for (const auto& [bucket, list] : buckets) {
        for (const auto& r : *list) {
          out += std::string(bucket) + "," + csv_field(r.name) + "," + std::to_string(r.order) + "," +
                 std::to_string(r.exponent) + "," + std::to_string(r.verdict.phi_value) + "," +
                 (r.verdict.remainder ? std::to_string(*r.verdict.remainder) : std::string()) + "\n";
        }
      }
      return out;
    }
    case OutputFormat::text: {
      std::ostringstream s;
      s << "Relation (2) scan, groups of order <= " << params.max_order << " (" << catalog::kCatalogNote << ")\n";
      for (const auto& [bucket, list] : buckets) {
        s << bucket << " (" << list->size() << "):\n";
        for (const auto& r : *list) {
          s << "  " << r.name << "  order " << r.order << "  exp " << r.exponent << "  phi " << r.verdict.phi_value;
          if (r.verdict.remainder) s << "  remainder " << *r.verdict.remainder;
          s << "\n";
        }
      }
      s << "note: " << kUndefinedPolicy << "\n";
      return s.str();
    }
  }
  return {};
}

std::string render_phi_g(const PhiGResult& p, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: {
      Json j;
      j["kind"] = "phi-g";
      j["params"] = {{"input", p.input}};
      j["records"] = Json::array(
          {{{"name", p.group_name}, {"order", p.order}, {"exponent", p.exponent}, {"phi_G", p.verdict.phi_value}}});
      j["summary"] = {{"condition2", verdict_json(p.verdict)}};
      return dump(j);
    }
    case OutputFormat::csv:
      return "name,order,exponent,phi_G,condition2\n" + csv_field(p.group_name) + "," + std::to_string(p.order) +
             "," + std::to_string(p.exponent) + "," + std::to_string(p.verdict.phi_value) + "," +
             std::string(groups::to_string(p.verdict.status)) + "\n";
    case OutputFormat::text: {
      std::ostringstream s;
      s << p.group_name << "  order " << p.order << "\n";
      s << "exp " << p.exponent << "\n";
      s << "phi " << p.verdict.phi_value << "\n";
      s << "relation (2): " << groups::to_string(p.verdict.status);
      if (p.verdict.remainder) s << " (remainder " << *p.verdict.remainder << ")";
      s << "\n";
      return s.str();
    }
  }
  return {};
}

}  // namespace lehmerlab::report

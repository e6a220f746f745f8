#pragma once

// Rendering of scan and verification results as text, JSON or CSV.
//
// JSON reports share one envelope: {"kind", "params", "records", "summary"},
// plus an optional "timing" object that is only emitted on request so that
// repeated runs stay byte-identical. Automorphism counts and group orders
// that may exceed 64 bits are written as decimal strings.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lehmerlab/bigint.hpp"
#include "lehmerlab/catalog_verify.hpp"
#include "lehmerlab/group_engine.hpp"
#include "lehmerlab/lehmer_search.hpp"

namespace lehmerlab::report {

enum class OutputFormat { text, json, csv };

/// Throws std::invalid_argument for anything but text, json or csv.
OutputFormat parse_format(std::string_view name);

std::string render_scan(const lehmer::ScanReport& report, OutputFormat format, bool include_timing = false);

struct AutResult {
  std::string input_kind;  // "abelian" or "table"
  std::string input;       // spec text or table path
  std::string group_name;
  BigInt group_order;
  std::optional<BigInt> formula;
  std::optional<BigInt> bruteforce;
  bool cross_check_requested = false;
  std::string cross_check;  // "agree", "disagree", "skipped", "not requested"

  const BigInt& aut_order() const { return formula ? *formula : *bruteforce; }
};

std::string render_aut(const AutResult& result, OutputFormat format);

struct VerifyParams {
  std::size_t max_order = 0;
  std::vector<std::string> extra_tables;
};

std::string render_verify(const VerifyParams& params, std::span<const catalog::VerifyRecord> records,
                          OutputFormat format);

std::string render_relation2(const VerifyParams& params, const catalog::Relation2Buckets& buckets,
                             OutputFormat format);

struct PhiGResult {
  std::string input;
  std::string group_name;
  std::size_t order = 0;
  std::uint64_t exponent = 0;
  groups::Condition2Verdict verdict;
};

std::string render_phi_g(const PhiGResult& result, OutputFormat format);

}  // namespace lehmerlab::report

#include "lehmerlab/abelian_aut.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "lehmerlab/arith.hpp"

namespace lehmerlab::abelian {

namespace {

constexpr unsigned kMaxPart = 1u << 16;

BigInt power(std::uint64_t p, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), to_big(p).get_mpz_t(), e);
  return r;
}

void check_partition(std::span<const unsigned> partition) {
  if (partition.empty()) throw std::invalid_argument("partition must be nonempty");
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (partition[i] == 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && partition[i - 1] > partition[i]) throw std::invalid_argument("partition must be ascending");
  }
}

void check_position(std::span<const unsigned> partition, std::size_t r) {
  check_partition(partition);
  if (r < 1 || r > partition.size()) throw std::out_of_range("partition index out of range");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_number(std::string_view token, std::string_view what) {
  token = trim(token);
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw std::invalid_argument("invalid " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

void append_partitions(unsigned remaining, unsigned min_part, std::vector<unsigned>& current,
                       std::vector<std::vector<unsigned>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (unsigned part = min_part; part <= remaining; ++part) {
    if (remaining - part != 0 && remaining - part < part) continue;
    current.push_back(part);
    append_partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

PrimaryComponent::PrimaryComponent(std::uint64_t p, std::vector<unsigned> partition)
    : prime_(p), partition_(std::move(partition)) {
  if (!arith::is_prime(prime_)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (partition_.empty()) throw std::invalid_argument("partition must be nonempty");
  for (unsigned n : partition_) {
    if (n == 0) throw std::invalid_argument("partition parts must be positive");
    if (n > kMaxPart) throw std::invalid_argument("partition part too large");
  }
  std::sort(partition_.begin(), partition_.end());
}

unsigned PrimaryComponent::exponent_sum() const {
  unsigned s = 0;
  for (unsigned n : partition_) s += n;
  return s;
}

BigInt PrimaryComponent::order() const { return power(prime_, exponent_sum()); }

AbelianSpec::AbelianSpec(std::vector<PrimaryComponent> components) : components_(std::move(components)) {
  std::sort(components_.begin(), components_.end(),
            [](const auto& a, const auto& b) { return a.prime() < b.prime(); });
  for (std::size_t i = 1; i < components_.size(); ++i) {
    if (components_[i - 1].prime() == components_[i].prime()) {
      throw std::invalid_argument("prime " + std::to_string(components_[i].prime()) + " listed twice");
    }
  }
}

bool AbelianSpec::is_cyclic() const {
  return std::all_of(components_.begin(), components_.end(), [](const auto& c) { return c.rank() == 1; });
}

std::size_t a_index(std::span<const unsigned> partition, std::size_t r) {
  check_position(partition, r);
  std::size_t s = r;
  while (s < partition.size() && partition[s] == partition[r - 1]) ++s;
  return s;
}

std::size_t b_index(std::span<const unsigned> partition, std::size_t r) {
  check_position(partition, r);
  std::size_t s = r;
  while (s > 1 && partition[s - 2] == partition[r - 1]) --s;
  return s;
}

BigInt aut_order_primary(const PrimaryComponent& c) {
  const auto& n = c.partition();
  const std::uint64_t p = c.prime();
  const std::size_t k = n.size();

  BigInt first = 1;
  unsigned long exponent = 0;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::size_t a = a_index(n, i);
    const std::size_t b = b_index(n, i);
    first *= power(p, a) - power(p, i - 1);
    exponent += static_cast<unsigned long>(n[i - 1]) * (k - a);
    exponent += static_cast<unsigned long>(n[i - 1] - 1) * (k - b + 1);
  }
  return first * power(p, exponent);
}

BigInt aut_order(const AbelianSpec& spec) {
  BigInt r = 1;
  for (const auto& c : spec.components()) r *= aut_order_primary(c);
  return r;
}

BigInt group_order(const AbelianSpec& spec) {
  BigInt r = 1;
  for (const auto& c : spec.components()) r *= c.order();
  return r;
}

AbelianSpec decompose_cyclic(std::uint64_t n) {
  std::vector<PrimaryComponent> parts;
  for (const auto& [p, e] : arith::factorize(n).factors) parts.emplace_back(p, std::vector<unsigned>{e});
  return AbelianSpec(std::move(parts));
}

bool satisfies_condition1(const AbelianSpec& spec) {
  if (spec.is_trivial()) throw std::domain_error("condition (1) needs a group of order at least 2");
  const BigInt rem = (group_order(spec) - 1) % aut_order(spec);
  return rem == 0;
}

AbelianSpec parse_abelian_spec(std::string_view text) {
  text = trim(text);
  if (text.empty() || text == "1") return {};
  std::vector<PrimaryComponent> parts;
  while (true) {
    const auto semi = text.find(';');
    const std::string_view item = trim(text.substr(0, semi));
    const auto caret = item.find('^');
    if (caret == std::string_view::npos) {
      throw std::invalid_argument("expected 'p^e1,e2,...' but got '" + std::string(item) + "'");
    }
    const auto p = parse_number<std::uint64_t>(item.substr(0, caret), "prime");
    std::vector<unsigned> partition;
    std::string_view exps = item.substr(caret + 1);
    while (true) {
      const auto comma = exps.find(',');
      partition.push_back(parse_number<unsigned>(exps.substr(0, comma), "exponent"));
      if (comma == std::string_view::npos) break;
      exps.remove_prefix(comma + 1);
    }
    parts.emplace_back(p, std::move(partition));
    if (semi == std::string_view::npos) break;
    text.remove_prefix(semi + 1);
  }
  return AbelianSpec(std::move(parts));
}

std::string to_spec_string(const AbelianSpec& spec) {
  if (spec.is_trivial()) return "1";
  std::string out;
  for (const auto& c : spec.components()) {
    if (!out.empty()) out += ';';
    out += std::to_string(c.prime()) + '^';
    for (std::size_t i = 0; i < c.rank(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(c.partition()[i]);
    }
  }
  return out;
}

std::string display_name(const AbelianSpec& spec) {
  if (spec.is_cyclic()) return "Z_" + to_decimal(group_order(spec));
  std::string out;
  for (const auto& c : spec.components()) {
    const auto& n = c.partition();
    for (std::size_t i = 0; i < n.size();) {
      std::size_t j = i;
      while (j < n.size() && n[j] == n[i]) ++j;
      if (!out.empty()) out += " x ";
      out += "Z_" + to_decimal(power(c.prime(), n[i]));
      if (j - i > 1) out += '^' + std::to_string(j - i);
      i = j;
    }
  }
  return out;
}

std::vector<std::vector<unsigned>> partitions_of(unsigned total) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current;
  if (total == 0) return {{}};
  append_partitions(total, 1, current, out);
  return out;
}

std::vector<AbelianSpec> abelian_groups_of_order(std::uint64_t n) {
  const auto f = arith::factorize(n);
  std::vector<std::vector<PrimaryComponent>> acc{{}};
  for (const auto& [p, e] : f.factors) {
    std::vector<std::vector<PrimaryComponent>> next;
    for (const auto& prefix : acc) {
      for (auto& part : partitions_of(e)) {
        auto extended = prefix;
        extended.emplace_back(p, std::move(part));
        next.push_back(std::move(extended));
      }
    }
    acc = std::move(next);
  }
  std::vector<AbelianSpec> out;
  out.reserve(acc.size());
  for (auto& parts : acc) out.emplace_back(std::move(parts));
  return out;
}

}  // namespace lehmerlab::abelian

#include "lehmerlab/group_spec.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <string>

namespace lehmerlab::groups {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_parameter(std::string_view s, std::string_view family) {
  s = trim(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad parameter '" + std::string(s) + "' for " + std::string(family));
  }
  return v;
}

// Splits "(A)x(B)" into A and B, respecting nested parentheses.
std::pair<std::string_view, std::string_view> split_product(std::string_view s) {
  s = trim(s);
  if (s.empty() || s.front() != '(') throw std::invalid_argument("product must look like (SPEC)x(SPEC)");
  int depth = 0;
  std::size_t close = std::string_view::npos;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0) {
      close = i;
      break;
    }
  }
  if (close == std::string_view::npos) throw std::invalid_argument("unbalanced parentheses in product");
  std::string_view left = s.substr(1, close - 1);
  std::string_view rest = trim(s.substr(close + 1));
  if (rest.empty() || (rest.front() != 'x' && rest.front() != 'X')) {
    throw std::invalid_argument("product must look like (SPEC)x(SPEC)");
  }
  rest = trim(rest.substr(1));
  if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') {
    throw std::invalid_argument("product must look like (SPEC)x(SPEC)");
  }
  return {left, rest.substr(1, rest.size() - 2)};
}

}  // namespace

CayleyGroup parse_group_spec(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("group spec needs 'family:parameter'");
  const std::string_view family = trim(text.substr(0, colon));
  const std::string_view arg = text.substr(colon + 1);

  if (family == "cyclic") return make_cyclic(parse_parameter(arg, family));
  if (family == "abelian") return make_abelian(abelian::parse_abelian_spec(arg));
  if (family == "dihedral") return make_dihedral(parse_parameter(arg, family));
  if (family == "dicyclic") return make_dicyclic(parse_parameter(arg, family));
  if (family == "sym") return make_symmetric(parse_parameter(arg, family));
  if (family == "alt") return make_alternating(parse_parameter(arg, family));
  if (family == "heisenberg") return make_heisenberg(parse_parameter(arg, family));
  if (family == "product") {
    const auto [left, right] = split_product(arg);
    return direct_product(parse_group_spec(left), parse_group_spec(right));
  }
  throw std::invalid_argument("unknown group family '" + std::string(family) + "'");
}

}  // namespace lehmerlab::groups

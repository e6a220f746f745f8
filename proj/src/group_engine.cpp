#include "lehmerlab/group_engine.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "lehmerlab/arith.hpp"

namespace lehmerlab::groups {

namespace {

constexpr std::size_t kMaxViolations = 10;

void check_cap(std::size_t order, std::size_t cap) {
  if (order > cap) throw OrderCapError(order, cap);
}

// Collects axiom violations, stopping after the first ten.
class ViolationLog {
 public:
  bool full() const { return messages_.size() >= kMaxViolations; }
  bool empty() const { return messages_.empty(); }
  void add(std::string message) {
    if (!full()) messages_.push_back(std::move(message));
  }
  std::vector<std::string> take() { return std::move(messages_); }

 private:
  std::vector<std::string> messages_;
};

// Elements reachable from `gens` by right multiplication; the table need not be
// a group yet.
std::vector<bool> magma_closure(std::size_t m, const std::vector<Element>& table, const std::vector<Element>& gens) {
  std::vector<bool> seen(m, false);
  std::vector<Element> queue;
  for (Element g : gens) {
    if (!seen[g]) {
      seen[g] = true;
      queue.push_back(g);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element x = queue[head];
    for (Element g : gens) {
      const Element y = table[std::size_t{x} * m + g];
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return seen;
}

void validate_table(std::size_t m, const std::vector<Element>& table, ViolationLog& log) {
  if (m == 0) {
    log.add("group order must be positive");
    return;
  }
  if (table.size() != m * m) {
    log.add("table has " + std::to_string(table.size()) + " entries, expected " + std::to_string(m * m));
    return;
  }
  bool in_range = true;
  for (std::size_t i = 0; i < m && !log.full(); ++i) {
    for (std::size_t j = 0; j < m && !log.full(); ++j) {
      if (table[i * m + j] >= m) {
        log.add("entry (" + std::to_string(i) + ", " + std::to_string(j) + ") = " +
                std::to_string(table[i * m + j]) + " is out of range");
        in_range = false;
      }
    }
  }
  if (!in_range) return;

  for (std::size_t j = 0; j < m && !log.full(); ++j) {
    if (table[j] != j) log.add("identity: 0*" + std::to_string(j) + " = " + std::to_string(table[j]));
    if (table[j * m] != j) log.add("identity: " + std::to_string(j) + "*0 = " + std::to_string(table[j * m]));
  }
  bool latin = true;
  for (std::size_t i = 0; i < m && !log.full(); ++i) {
    std::vector<bool> row_seen(m, false), col_seen(m, false);
    for (std::size_t j = 0; j < m; ++j) {
      row_seen[table[i * m + j]] = true;
      col_seen[table[j * m + i]] = true;
    }
    if (!row_seen[0]) log.add("element " + std::to_string(i) + " has no right inverse");
    if (!col_seen[0]) log.add("element " + std::to_string(i) + " has no left inverse");
    if (std::find(row_seen.begin(), row_seen.end(), false) != row_seen.end()) {
      log.add("row " + std::to_string(i) + " repeats an element");
      latin = false;
    }
    if (std::find(col_seen.begin(), col_seen.end(), false) != col_seen.end()) {
      log.add("column " + std::to_string(i) + " repeats an element");
      latin = false;
    }
  }
  if (!latin || log.full()) return;

  // Light's test: (x g) y = x (g y) for every generator g implies associativity.
  std::vector<Element> gens;
  std::vector<bool> covered(m, false);
  for (std::size_t x = 0; x < m; ++x) {
    if (covered[x]) continue;
    gens.push_back(static_cast<Element>(x));
    covered = magma_closure(m, table, gens);
  }
  for (Element g : gens) {
    for (std::size_t x = 0; x < m && !log.full(); ++x) {
      const std::size_t xg = table[x * m + g];
      for (std::size_t y = 0; y < m && !log.full(); ++y) {
        const Element lhs = table[xg * m + y];
        const Element rhs = table[x * m + table[std::size_t{g} * m + y]];
        if (lhs != rhs) {
          log.add("associativity fails for (" + std::to_string(x) + ", " + std::to_string(g) + ", " +
                  std::to_string(y) + "): (x*y)*z = " + std::to_string(lhs) + " but x*(y*z) = " +
                  std::to_string(rhs));
        }
      }
    }
  }
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

Element power(const CayleyGroup& g, Element x, std::uint64_t e) {
  Element result = 0;
  Element base = x;
  while (e > 0) {
    if (e & 1) result = g.mul(result, base);
    base = g.mul(base, base);
    e >>= 1;
  }
  return result;
}

std::size_t subgroup_size(const CayleyGroup& g, const std::vector<Element>& gens, std::vector<bool>& seen,
                          std::vector<Element>& queue) {
  std::fill(seen.begin(), seen.end(), false);
  queue.clear();
  seen[0] = true;
  queue.push_back(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Element s : gens) {
      const Element y = g.mul(queue[head], s);
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return queue.size();
}

// Automorphism-invariant class of each element: order, centralizer size and,
// for each prime p dividing |G|, the number of p-th roots.
std::vector<std::size_t> element_classes(const CayleyGroup& g) {
  const std::size_t m = g.order();
  const auto orders = element_orders(g);
  std::vector<std::vector<std::uint64_t>> profile(m);
  for (std::size_t x = 0; x < m; ++x) {
    std::uint64_t centralizer = 0;
    for (std::size_t y = 0; y < m; ++y) {
      if (g.mul(static_cast<Element>(x), static_cast<Element>(y)) ==
          g.mul(static_cast<Element>(y), static_cast<Element>(x))) {
        ++centralizer;
      }
    }
    profile[x] = {orders[x], centralizer};
  }
  for (const auto& [p, e] : arith::factorize(m).factors) {
    std::vector<std::uint64_t> roots(m, 0);
    for (std::size_t y = 0; y < m; ++y) ++roots[power(g, static_cast<Element>(y), p)];
    for (std::size_t x = 0; x < m; ++x) profile[x].push_back(roots[x]);
  }
  std::map<std::vector<std::uint64_t>, std::size_t> ids;
  std::vector<std::size_t> cls(m);
  for (std::size_t x = 0; x < m; ++x) cls[x] = ids.emplace(profile[x], ids.size()).first->second;
  return cls;
}

// A partial homomorphism defined on the subgroup generated by the first
// `depth` generators.
struct PartialMap {
  std::vector<std::int32_t> image;  // -1 where undefined
  std::vector<bool> used;
  std::vector<Element> domain;
};

class AutSearch {
 public:
  explicit AutSearch(const CayleyGroup& g) : g_(g), m_(g.order()) {
    gens_ = generating_set(g);
    const auto cls = element_classes(g);
    for (Element s : gens_) {
      std::vector<Element> cands;
      for (std::size_t x = 0; x < m_; ++x) {
        if (cls[x] == cls[s]) cands.push_back(static_cast<Element>(x));
      }
      candidates_.push_back(std::move(cands));
    }
    gen_images_.assign(gens_.size(), 0);
  }

  PartialMap identity_prefix(std::size_t depth) {
    PartialMap pm = empty_map();
    for (std::size_t j = 0; j < depth; ++j) {
      if (!extend(pm, j, gens_[j])) throw std::logic_error("identity map failed to extend");
    }
    return pm;
  }

  PartialMap empty_map() const {
    PartialMap pm;
    pm.image.assign(m_, -1);
    pm.used.assign(m_, false);
    pm.image[0] = 0;
    pm.used[0] = true;
    pm.domain.push_back(0);
    return pm;
  }

  // Maps generator j to h and closes the domain under all assigned generators.
  bool extend(PartialMap& pm, std::size_t j, Element h) {
    gen_images_[j] = h;
    for (std::size_t head = 0; head < pm.domain.size(); ++head) {
      const Element x = pm.domain[head];
      const auto ix = static_cast<Element>(pm.image[x]);
      for (std::size_t t = 0; t <= j; ++t) {
        const Element y = g_.mul(x, gens_[t]);
        const Element iy = g_.mul(ix, gen_images_[t]);
        if (pm.image[y] < 0) {
          if (pm.used[iy]) return false;
          pm.image[y] = iy;
          pm.used[iy] = true;
          pm.domain.push_back(y);
        } else if (pm.image[y] != iy) {
          return false;
        }
      }
    }
    return true;
  }

  // Depth-first search for any completion of `pm` (generators < j assigned).
  std::optional<std::vector<Element>> complete(const PartialMap& pm, std::size_t j) {
    if (j == gens_.size()) {
      if (pm.domain.size() != m_) return std::nullopt;
      std::vector<Element> perm(m_);
      for (std::size_t x = 0; x < m_; ++x) perm[x] = static_cast<Element>(pm.image[x]);
      return perm;
    }
    for (Element h : candidates_[j]) {
      if (pm.used[h]) continue;
      PartialMap next = pm;
      if (!extend(next, j, h)) continue;
      if (auto done = complete(next, j + 1)) return done;
    }
    return std::nullopt;
  }

  std::uint64_t count_all(const PartialMap& pm, std::size_t j, std::uint64_t limit, std::uint64_t found) {
    if (j == gens_.size()) {
      if (pm.domain.size() != m_) return found;
      if (found + 1 > limit) throw std::length_error("automorphism count exceeds limit");
      return found + 1;
    }
    for (Element h : candidates_[j]) {
      if (pm.used[h]) continue;
      PartialMap next = pm;
      if (!extend(next, j, h)) continue;
      found = count_all(next, j + 1, limit, found);
    }
    return found;
  }

  std::size_t orbit_size(std::size_t level) {
    const PartialMap prefix = identity_prefix(level);
    const Element start = gens_[level];
    std::vector<bool> in_orbit(m_, false);
    std::vector<Element> orbit{start};
    in_orbit[start] = true;
    std::vector<std::vector<Element>> autos;

    auto absorb = [&](std::vector<Element> sigma) {
      autos.push_back(std::move(sigma));
      for (std::size_t head = 0; head < orbit.size(); ++head) {
        for (const auto& a : autos) {
          const Element y = a[orbit[head]];
          if (!in_orbit[y]) {
            in_orbit[y] = true;
            orbit.push_back(y);
          }
        }
      }
    };

    for (Element h : candidates_[level]) {
      if (in_orbit[h] || prefix.used[h]) continue;
      PartialMap pm = prefix;
      if (!extend(pm, level, h)) continue;
      if (auto sigma = complete(pm, level + 1)) absorb(std::move(*sigma));
    }
    return orbit.size();
  }

  std::size_t generator_count() const { return gens_.size(); }

 private:
  const CayleyGroup& g_;
  std::size_t m_;
  std::vector<Element> gens_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> gen_images_;
};

std::vector<std::vector<std::uint8_t>> permutations_of(std::size_t n, bool even_only) {
  std::vector<std::uint8_t> p(n);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  std::vector<std::vector<std::uint8_t>> out;
  do {
    if (even_only) {
      std::size_t inversions = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
      if (inversions % 2) continue;
    }
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

CayleyGroup permutation_group(std::string name, std::size_t n, bool even_only) {
  if (n < 1 || n > 5) throw std::invalid_argument("permutation degree must be in [1, 5]");
  const auto perms = permutations_of(n, even_only);
  std::map<std::vector<std::uint8_t>, Element> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<Element>(i);
  const std::size_t m = perms.size();
  check_cap(m, max_table_order());
  std::vector<Element> table(m * m);
  std::vector<std::uint8_t> composed(n);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t x = 0; x < n; ++x) composed[x] = perms[a][perms[b][x]];
      table[a * m + b] = index.at(composed);
    }
  }
  return CayleyGroup::from_table(std::move(name), m, std::move(table));
}

}  // namespace

std::size_t max_table_order() {
  if (const char* env = std::getenv("LEHMERLAB_MAX_TABLE_ORDER")) {
    std::size_t v = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc{} && ptr == s.data() + s.size() && v > 0) return std::min(v, kHardMaxOrder);
  }
  return kDefaultMaxOrder;
}

OrderCapError::OrderCapError(std::size_t order, std::size_t cap)
    : std::runtime_error("group order " + std::to_string(order) + " exceeds the table cap " + std::to_string(cap)),
      order_(order),
      cap_(cap) {}

namespace {
std::string join_violations(const std::vector<std::string>& v) {
  std::string out = "not a group:";
  for (const auto& s : v) out += "\n  " + s;
  return out;
}
}  // namespace

GroupAxiomError::GroupAxiomError(std::vector<std::string> violations)
    : std::runtime_error(join_violations(violations)), violations_(std::move(violations)) {}

TableParseError::TableParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

CayleyGroup CayleyGroup::from_table(std::string name, std::size_t order, std::vector<Element> table,
                                    std::size_t max_order) {
  check_cap(order, std::min(max_order, kHardMaxOrder));
  ViolationLog log;
  validate_table(order, table, log);
  if (!log.empty()) throw GroupAxiomError(log.take());

  CayleyGroup g;
  g.name_ = std::move(name);
  g.order_ = order;
  g.table_ = std::move(table);
  g.inverse_.resize(order);
  for (std::size_t a = 0; a < order; ++a) {
    const auto r = g.row(static_cast<Element>(a));
    g.inverse_[a] = static_cast<Element>(std::find(r.begin(), r.end(), Element{0}) - r.begin());
  }
  return g;
}

bool CayleyGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (table_[a * order_ + b] != table_[b * order_ + a]) return false;
  return true;
}

CayleyGroup CayleyGroup::renamed(std::string name) const {
  CayleyGroup g = *this;
  g.name_ = std::move(name);
  return g;
}

CayleyGroup make_cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
  check_cap(n, max_table_order());
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>((a + b) % n);
  return CayleyGroup::from_table("Z_" + std::to_string(n), n, std::move(table));
}

CayleyGroup make_abelian(const abelian::AbelianSpec& spec) {
  const BigInt big_order = abelian::group_order(spec);
  const std::size_t cap = max_table_order();
  if (big_order > to_big(cap)) throw OrderCapError(big_order.fits_ulong_p() ? big_order.get_ui() : SIZE_MAX, cap);
  const std::size_t m = big_order.get_ui();

  std::vector<std::size_t> moduli;
  for (const auto& c : spec.components()) {
    for (unsigned e : c.partition()) {
      std::size_t q = 1;
      for (unsigned i = 0; i < e; ++i) q *= c.prime();
      moduli.push_back(q);
    }
  }
  std::vector<std::size_t> digits_a(moduli.size()), digits_b(moduli.size());
  auto decode = [&](std::size_t x, std::vector<std::size_t>& d) {
    for (std::size_t i = moduli.size(); i-- > 0;) {
      d[i] = x % moduli[i];
      x /= moduli[i];
    }
  };
  std::vector<Element> table(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    decode(a, digits_a);
    for (std::size_t b = 0; b < m; ++b) {
      decode(b, digits_b);
      std::size_t x = 0;
      for (std::size_t i = 0; i < moduli.size(); ++i) x = x * moduli[i] + (digits_a[i] + digits_b[i]) % moduli[i];
      table[a * m + b] = static_cast<Element>(x);
    }
  }
  return CayleyGroup::from_table(abelian::display_name(spec), m, std::move(table));
}

CayleyGroup make_dihedral(std::size_t n) {
  if (n < 3) throw std::invalid_argument("dihedral group needs n >= 3");
  const std::size_t m = 2 * n;
  check_cap(m, max_table_order());
  // r^i -> i, s r^i -> n + i
  std::vector<Element> table(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const std::size_t i = a % n, j = b % n;
      const bool sa = a >= n, sb = b >= n;
      std::size_t r;
      if (!sa && !sb) r = (i + j) % n;
      else if (!sa && sb) r = n + (j + n - i) % n;
      else if (sa && !sb) r = n + (i + j) % n;
      else r = (j + n - i) % n;
      table[a * m + b] = static_cast<Element>(r);
    }
  }
  return CayleyGroup::from_table("D_" + std::to_string(n), m, std::move(table));
}

CayleyGroup make_dicyclic(std::size_t n) {
  if (n < 2) throw std::invalid_argument("dicyclic group needs n >= 2");
  const std::size_t m = 4 * n, half = 2 * n;
  check_cap(m, max_table_order());
  // a^k -> k, a^k x -> 2n + k
  std::vector<Element> table(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const std::size_t i = a % half, j = b % half;
      const bool xa = a >= half, xb = b >= half;
      std::size_t r;
      if (!xa && !xb) r = (i + j) % half;
      else if (!xa && xb) r = half + (i + j) % half;
      else if (xa && !xb) r = half + (i + half - j) % half;
      else r = (i + half - j + n) % half;
      table[a * m + b] = static_cast<Element>(r);
    }
  }
  return CayleyGroup::from_table(n == 2 ? "Q_8" : "Dic_" + std::to_string(n), m, std::move(table));
}

CayleyGroup make_symmetric(std::size_t n) { return permutation_group("S_" + std::to_string(n), n, false); }

CayleyGroup make_alternating(std::size_t n) { return permutation_group("A_" + std::to_string(n), n, true); }

CayleyGroup make_heisenberg(std::uint64_t p) {
  if (p == 2 || !arith::is_prime(p)) throw std::invalid_argument("Heisenberg group needs an odd prime");
  if (p > 2000) throw OrderCapError(SIZE_MAX, max_table_order());
  const std::size_t m = p * p * p;
  check_cap(m, max_table_order());
  std::vector<Element> table(m * m);
  for (std::size_t x = 0; x < m; ++x) {
    const std::size_t a1 = x / (p * p), b1 = x / p % p, c1 = x % p;
    for (std::size_t y = 0; y < m; ++y) {
      const std::size_t a2 = y / (p * p), b2 = y / p % p, c2 = y % p;
      const std::size_t a = (a1 + a2) % p, b = (b1 + b2) % p, c = (c1 + c2 + a1 * b2) % p;
      table[x * m + y] = static_cast<Element>(a * p * p + b * p + c);
    }
  }
  return CayleyGroup::from_table("Heisenberg(" + std::to_string(p) + ")", m, std::move(table));
}

CayleyGroup direct_product(const CayleyGroup& g, const CayleyGroup& h) {
  const std::size_t gm = g.order(), hm = h.order(), m = gm * hm;
  check_cap(m, max_table_order());
  std::vector<Element> table(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const auto ga = static_cast<Element>(a / hm), ha = static_cast<Element>(a % hm);
      const auto gb = static_cast<Element>(b / hm), hb = static_cast<Element>(b % hm);
      table[a * m + b] = static_cast<Element>(std::size_t{g.mul(ga, gb)} * hm + h.mul(ha, hb));
    }
  }
  return CayleyGroup::from_table(g.name() + " x " + h.name(), m, std::move(table));
}

std::uint64_t element_order(const CayleyGroup& g, std::size_t x) {
  if (x >= g.order()) throw std::out_of_range("element index out of range");
  std::uint64_t t = 1;
  for (Element y = static_cast<Element>(x); y != 0; y = g.mul(y, static_cast<Element>(x))) ++t;
  return t;
}

std::vector<std::uint64_t> element_orders(const CayleyGroup& g) {
  std::vector<std::uint64_t> out(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) out[x] = element_order(g, x);
  return out;
}

std::uint64_t exponent(const CayleyGroup& g) {
  std::uint64_t e = 1;
  for (std::uint64_t o : element_orders(g)) e = lcm_u64(e, o);
  return e;
}

bool is_cyclic(const CayleyGroup& g) {
  const auto orders = element_orders(g);
  return std::find(orders.begin(), orders.end(), g.order()) != orders.end();
}

std::uint64_t phi_G(const CayleyGroup& g) {
  const auto orders = element_orders(g);
  std::uint64_t e = 1;
  for (std::uint64_t o : orders) e = lcm_u64(e, o);
  return static_cast<std::uint64_t>(std::count(orders.begin(), orders.end(), e));
}

std::vector<Element> center(const CayleyGroup& g) {
  std::vector<Element> z;
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool central = true;
    for (std::size_t y = 0; y < g.order() && central; ++y) {
      central = g.mul(static_cast<Element>(x), static_cast<Element>(y)) ==
                g.mul(static_cast<Element>(y), static_cast<Element>(x));
    }
    if (central) z.push_back(static_cast<Element>(x));
  }
  return z;
}

std::uint64_t inn_order(const CayleyGroup& g) { return g.order() / center(g).size(); }

std::optional<abelian::AbelianSpec> identify_abelian(const CayleyGroup& g) {
  if (!g.is_abelian()) return std::nullopt;
  std::vector<abelian::PrimaryComponent> parts;
  for (const auto& [p, e] : arith::factorize(g.order()).factors) {
    // log_count[j] = log_p of the number of x with x^(p^j) = 1
    std::vector<unsigned> log_count(e + 1, 0);
    std::uint64_t q = 1;
    for (unsigned j = 1; j <= e; ++j) {
      q *= p;
      std::uint64_t count = 0;
      for (std::size_t x = 0; x < g.order(); ++x) count += power(g, static_cast<Element>(x), q) == 0;
      unsigned l = 0;
      while (count % p == 0 && count > 1) {
        count /= p;
        ++l;
      }
      log_count[j] = l;
    }
    // rank_at_least[j] = number of cyclic factors of order >= p^j
    std::vector<unsigned> rank_at_least(e + 2, 0);
    for (unsigned j = 1; j <= e; ++j) rank_at_least[j] = log_count[j] - log_count[j - 1];
    std::vector<unsigned> partition;
    for (unsigned j = 1; j <= e; ++j) {
      for (unsigned c = rank_at_least[j + 1]; c < rank_at_least[j]; ++c) partition.push_back(j);
    }
    parts.emplace_back(p, std::move(partition));
  }
  return abelian::AbelianSpec(std::move(parts));
}

std::vector<Element> generating_set(const CayleyGroup& g) {
  const std::size_t m = g.order();
  std::vector<Element> gens;
  std::vector<bool> seen(m), in_current(m, false);
  std::vector<Element> queue;
  std::size_t current = subgroup_size(g, gens, seen, queue);
  in_current = seen;
  while (current < m) {
    std::size_t best_size = 0;
    Element best = 0;
    for (std::size_t x = 1; x < m; ++x) {
      if (in_current[x]) continue;
      gens.push_back(static_cast<Element>(x));
      const std::size_t size = subgroup_size(g, gens, seen, queue);
      gens.pop_back();
      if (size > best_size) {
        best_size = size;
        best = static_cast<Element>(x);
      }
    }
    gens.push_back(best);
    current = subgroup_size(g, gens, seen, queue);
    in_current = seen;
  }
  return gens;
}

BigInt aut_order_bruteforce(const CayleyGroup& g, const AutSearchOptions& options) {
  check_cap(g.order(), options.max_order);
  AutSearch search(g);
  BigInt total = 1;
  for (std::size_t level = 0; level < search.generator_count(); ++level) {
    total *= static_cast<unsigned long>(search.orbit_size(level));
  }
  return total;
}

std::uint64_t aut_order_enumerate(const CayleyGroup& g, std::uint64_t limit) {
  AutSearch search(g);
  return search.count_all(search.empty_map(), 0, limit, 0);
}

bool satisfies_condition1(const CayleyGroup& g, const AutSearchOptions& options) {
  if (g.order() < 2) throw std::domain_error("condition (1) needs a group of order at least 2");
  const BigInt aut = aut_order_bruteforce(g, options);
  return (to_big(g.order() - 1) % aut) == 0;
}

std::string_view to_string(Condition2Status status) {
  switch (status) {
    case Condition2Status::holds: return "holds";
    case Condition2Status::fails: return "fails";
    case Condition2Status::undefined_zero_phi: return "undefined_zero_phi";
  }
  return "?";
}

Condition2Verdict check_condition2(const CayleyGroup& g) {
  if (g.order() < 2) throw std::domain_error("relation (2) needs a group of order at least 2");
  Condition2Verdict v;
  v.phi_value = phi_G(g);
  if (v.phi_value == 0) {
    v.status = Condition2Status::undefined_zero_phi;
    return v;
  }
  v.remainder = (g.order() - 1) % v.phi_value;
  v.status = *v.remainder == 0 ? Condition2Status::holds : Condition2Status::fails;
  return v;
}

Fingerprint fingerprint(const CayleyGroup& g) {
  Fingerprint f;
  f.order = g.order();
  f.abelian = g.is_abelian();
  f.order_multiset = element_orders(g);
  std::sort(f.order_multiset.begin(), f.order_multiset.end());
  f.center_size = center(g).size();
  return f;
}

CayleyGroup load_cayley_table(std::istream& in, std::string name, std::size_t max_order) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t m = 0;
  bool have_order = false;
  std::vector<Element> table;
  std::size_t rows = 0;

  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::vector<std::pair<std::size_t, std::uint64_t>> tokens;  // (column, value)
    std::size_t pos = first;
    while (pos < line.size()) {
      const std::size_t start = line.find_first_not_of(" \t\r", pos);
      if (start == std::string::npos) break;
      std::size_t end = line.find_first_of(" \t\r", start);
      if (end == std::string::npos) end = line.size();
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + start, line.data() + end, value);
      if (ec != std::errc{} || ptr != line.data() + end) {
        throw TableParseError(line_no, start + 1, "expected a nonnegative integer, got '" +
                                                      line.substr(start, end - start) + "'");
      }
      tokens.emplace_back(start + 1, value);
      pos = end;
    }

    if (!have_order) {
      if (tokens.size() != 1) throw TableParseError(line_no, tokens[1].first, "first line must hold only the order");
      if (tokens[0].second == 0) throw TableParseError(line_no, tokens[0].first, "order must be positive");
      if (tokens[0].second > std::min(max_order, kHardMaxOrder)) {
        throw OrderCapError(static_cast<std::size_t>(std::min<std::uint64_t>(tokens[0].second, SIZE_MAX)), max_order);
      }
      m = static_cast<std::size_t>(tokens[0].second);
      have_order = true;
      table.reserve(m * m);
      continue;
    }
    if (rows == m) throw TableParseError(line_no, first + 1, "unexpected data after " + std::to_string(m) + " rows");
    if (tokens.size() != m) {
      const std::size_t col = tokens.size() > m ? tokens[m].first : line.size() + 1;
      throw TableParseError(line_no, col,
                            "row has " + std::to_string(tokens.size()) + " entries, expected " + std::to_string(m));
    }
    for (const auto& [col, value] : tokens) {
      if (value >= m) {
        throw TableParseError(line_no, col, "entry " + std::to_string(value) + " is not below the order " +
                                                std::to_string(m));
      }
      table.push_back(static_cast<Element>(value));
    }
    ++rows;
  }
  if (!have_order) throw TableParseError(line_no + 1, 1, "missing group order");
  if (rows != m) {
    throw TableParseError(line_no + 1, 1, "expected " + std::to_string(m) + " rows, found " + std::to_string(rows));
  }
  return CayleyGroup::from_table(std::move(name), m, std::move(table), max_order);
}

CayleyGroup load_cayley_table_file(const std::filesystem::path& path, std::size_t max_order) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open table file " + path.string());
  return load_cayley_table(in, path.stem().string(), max_order);
}

void write_cayley_table(const CayleyGroup& g, std::ostream& out) {
  out << "# " << g.name() << '\n' << g.order() << '\n';
  for (std::size_t a = 0; a < g.order(); ++a) {
    const auto r = g.row(static_cast<Element>(a));
    for (std::size_t b = 0; b < r.size(); ++b) out << (b ? " " : "") << r[b];
    out << '\n';
  }
}

}  // namespace lehmerlab::groups

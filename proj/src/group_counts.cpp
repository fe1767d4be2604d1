#include "zmn/group_counts.hpp"

#include <numeric>
#include <unordered_set>
#include <vector>

#include "zmn/errors.hpp"

namespace zmn {

namespace {

void require_args(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw DomainError("group counts: m and n must be >= 1");
}

std::int64_t s_f1(std::int64_t m, std::int64_t n, const ArithTables& t) {
  std::int64_t sum = 0;
  const auto dm = t.divisors(m);
  const auto dn = t.divisors(n);
  for (auto a : dm)
    for (auto b : dn) sum = checked_add(sum, std::gcd(a, b));
  return sum;
}

std::int64_t s_f2(std::int64_t m, std::int64_t n, const ArithTables& t) {
  std::int64_t sum = 0;
  for (auto d : t.divisors(std::gcd(m, n)))
    sum = checked_add(sum, checked_mul(t.phi(d), checked_mul(t.tau(m / d), t.tau(n / d))));
  return sum;
}

// tau(mn/d^2) without forming mn when it would overflow: mn/d^2 = (m/d)(n/d).
std::int64_t tau_of_reduced_product(std::int64_t m, std::int64_t n, std::int64_t d,
                                    const ArithTables& t) {
  return t.tau(checked_mul(m / d, n / d));
}

std::int64_t s_f3(std::int64_t m, std::int64_t n, const ArithTables& t) {
  std::int64_t sum = 0;
  for (auto d : t.divisors(std::gcd(m, n)))
    sum = checked_add(sum, checked_mul(d, tau_of_reduced_product(m, n, d, t)));
  return sum;
}

std::int64_t c_c1(std::int64_t m, std::int64_t n, const ArithTables& t) {
  std::int64_t sum = 0;
  const auto dm = t.divisors(m);
  const auto dn = t.divisors(n);
  for (auto a : dm)
    for (auto b : dn)
      if (std::gcd(m / a, n / b) == 1) sum = checked_add(sum, std::gcd(a, b));
  return sum;
}

std::int64_t c_c2(std::int64_t m, std::int64_t n, const ArithTables& t) {
  std::int64_t sum = 0;
  const auto dm = t.divisors(m);
  const auto dn = t.divisors(n);
  for (auto a : dm)
    for (auto b : dn) sum = checked_add(sum, t.phi(std::gcd(a, b)));
  return sum;
}

std::int64_t c_c3(std::int64_t m, std::int64_t n, const ArithTables& t) {
  std::int64_t sum = 0;
  for (auto d : t.divisors(std::gcd(m, n)))
    sum = checked_add(sum, checked_mul(mu_conv_phi(d, t), checked_mul(t.tau(m / d), t.tau(n / d))));
  return sum;
}

std::int64_t c_c4(std::int64_t m, std::int64_t n, const ArithTables& t) {
  std::int64_t sum = 0;
  for (auto d : t.divisors(std::gcd(m, n)))
    sum = checked_add(sum, checked_mul(t.phi(d), tau_of_reduced_product(m, n, d, t)));
  return sum;
}

// Element sets of Z_m x Z_n as bitsets over the index a*n + b.
class ElementSet {
 public:
  explicit ElementSet(std::size_t size) : words_((size + 63) / 64, 0) {}
  bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  const std::vector<std::uint64_t>& words() const { return words_; }
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto w : s.words()) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

struct Subgroup {
  ElementSet members;
  std::vector<std::uint32_t> elements;
  std::uint32_t generator;
};

}  // namespace

std::int64_t mu_conv_phi(std::int64_t d, const ArithTables& tables) {
  std::int64_t sum = 0;
  for (auto e : tables.divisors(d)) sum = checked_add(sum, checked_mul(tables.mu(e), tables.phi(d / e)));
  return sum;
}

std::int64_t s_count(std::int64_t m, std::int64_t n, SFormula formula, const ArithTables& tables) {
  require_args(m, n);
  switch (formula) {
    case SFormula::F1: return s_f1(m, n, tables);
    case SFormula::F2: return s_f2(m, n, tables);
    case SFormula::F3: return s_f3(m, n, tables);
  }
  throw DomainError("s_count: unknown formula");
}

std::int64_t c_count(std::int64_t m, std::int64_t n, CFormula formula, const ArithTables& tables) {
  require_args(m, n);
  switch (formula) {
    case CFormula::C1: return c_c1(m, n, tables);
    case CFormula::C2: return c_c2(m, n, tables);
    case CFormula::C3: return c_c3(m, n, tables);
    case CFormula::C4: return c_c4(m, n, tables);
  }
  throw DomainError("c_count: unknown formula");
}

GroupCountRecord count_record(std::int64_t m, std::int64_t n, SFormula sf, CFormula cf,
                              const ArithTables& tables) {
  return {m, n, s_count(m, n, sf, tables), c_count(m, n, cf, tables), to_string(sf) + "/" + to_string(cf)};
}

SubgroupCounts enumerate_subgroups(std::int64_t m, std::int64_t n, std::int64_t cap) {
  require_args(m, n);
  if (m > cap / n || m * n > std::int64_t{1} << 31)
    throw SizeError("enumerate_subgroups: m*n exceeds oracle cap " + std::to_string(cap));

  const auto um = static_cast<std::uint32_t>(m);
  const auto un = static_cast<std::uint32_t>(n);
  const std::uint32_t size = um * un;
  auto add = [um, un](std::uint32_t x, std::uint32_t y) {
    std::uint32_t a = x / un + y / un;
    std::uint32_t b = x % un + y % un;
    if (a >= um) a -= um;
    if (b >= un) b -= un;
    return a * un + b;
  };

  // Cyclic subgroups. Once <g> is listed, its generators k*g with gcd(k, |g|) = 1
  // are skipped since they span the same subgroup.
  std::vector<Subgroup> cyclic;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<char> covered(size, 0);
  for (std::uint32_t g = 0; g < size; ++g) {
    if (covered[g]) continue;
    Subgroup sub{ElementSet(size), {}, g};
    std::uint32_t x = 0;
    do {
      sub.elements.push_back(x);
      sub.members.insert(x);
      x = add(x, g);
    } while (x != 0);
    const auto order = static_cast<std::uint32_t>(sub.elements.size());
    for (std::uint32_t k = 1; k < order; ++k)
      if (std::gcd(k, order) == 1) covered[sub.elements[k]] = 1;
    covered[g] = 1;
    if (seen.insert(sub.members).second) cyclic.push_back(std::move(sub));
  }
  const auto cyclic_count = static_cast<std::int64_t>(seen.size());

  // Two-generator closures <g, h> = <g> + <h>.
  for (std::size_t i = 0; i < cyclic.size(); ++i) {
    const Subgroup& base = cyclic[i];
    for (std::size_t j = i + 1; j < cyclic.size(); ++j) {
      const std::uint32_t h = cyclic[j].generator;
      if (base.members.contains(h)) continue;
      if (cyclic[j].members.contains(base.generator)) continue;
      ElementSet closure = base.members;
      // Cosets base + t*h are disjoint until t*h falls back into base.
      std::uint32_t shift = h;
      while (!base.members.contains(shift)) {
        for (auto e : base.elements) closure.insert(add(e, shift));
        shift = add(shift, h);
      }
      seen.insert(std::move(closure));
    }
  }
  return {static_cast<std::int64_t>(seen.size()), cyclic_count};
}

std::string to_string(SFormula f) {
  switch (f) {
    case SFormula::F1: return "F1";
    case SFormula::F2: return "F2";
    case SFormula::F3: return "F3";
  }
  return "?";
}

std::string to_string(CFormula f) {
  switch (f) {
    case CFormula::C1: return "C1";
    case CFormula::C2: return "C2";
    case CFormula::C3: return "C3";
    case CFormula::C4: return "C4";
  }
  return "?";
}

}  // namespace zmn

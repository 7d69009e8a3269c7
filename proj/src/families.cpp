#include "cyclofact/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cyclofact/formulas.hpp"

namespace cyclofact {

namespace {

void check_capacity(unsigned long long order, const GroupConfig& cfg) {
  if (order > cfg.max_order)
    throw CapacityError("group order " + std::to_string(order) +
                        " exceeds the configured maximum " +
                        std::to_string(cfg.max_order));
}

void require_relation(bool ok, const std::string& what) {
  if (!ok) throw ConsistencyError("defining relation failed: " + what);
}

template <typename Op>
FiniteGroup table_group(std::string name, unsigned order, Op&& op,
                        const GroupConfig& cfg) {
  std::vector<ElementId> t(std::size_t(order) * order);
  for (unsigned a = 0; a < order; ++a)
    for (unsigned b = 0; b < order; ++b)
      t[std::size_t(a) * order + b] = ElementId(op(a, b));
  return FiniteGroup::from_table(std::move(name), order, std::move(t), cfg);
}

unsigned long long checked_pow(unsigned long long base, unsigned exp) {
  unsigned long long r = 1;
  while (exp--) {
    if (base != 0 && r > (1ull << 62) / base)
      throw ValidationError("parameter too large");
    r *= base;
  }
  return r;
}

unsigned long long factorial(unsigned n) {
  if (n > 20) throw ValidationError("parameter too large");
  unsigned long long r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

std::vector<ElementId> dicyclic_table(unsigned n) {
  unsigned m = 2 * n, order = 4 * n;
  std::vector<ElementId> t(std::size_t(order) * order);
  for (unsigned a = 0; a < order; ++a)
    for (unsigned b = 0; b < order; ++b) {
      unsigned i1 = a % m, j1 = a / m, i2 = b % m, j2 = b / m;
      unsigned i, j;
      if (j1 == 0) {
        i = (i1 + i2) % m;
        j = j2;
      } else if (j2 == 0) {
        i = (i1 + m - i2) % m;
        j = 1;
      } else {
        i = (i1 + m - i2 + n) % m;
        j = 0;
      }
      t[std::size_t(a) * order + b] = ElementId(j * m + i);
    }
  return t;
}

void check_dicyclic_relations(const FiniteGroup& g, unsigned n) {
  unsigned m = 2 * n;
  ElementId x = g.order() > 1 ? ElementId(1) : ElementId(0);
  ElementId y = ElementId(m);
  require_relation(g.element_order(x) == (n == 0 ? 1u : m), "x has order 2n");
  require_relation(g.mul(y, y) == g.power(x, n), "y^2 = x^n");
  require_relation(g.mul(g.mul(y, x), g.inverse(y)) == g.inverse(x),
                   "y x y^-1 = x^-1");
}

bool perm_is_even(const std::vector<unsigned char>& p) {
  unsigned inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0;
}

FiniteGroup permutation_group(std::string name, unsigned n, bool even_only,
                              const GroupConfig& cfg) {
  std::vector<std::vector<unsigned char>> perms;
  std::vector<unsigned char> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (!even_only || perm_is_even(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  unsigned order = unsigned(perms.size());
  std::map<std::vector<unsigned char>, unsigned> rank;
  for (unsigned i = 0; i < order; ++i) rank[perms[i]] = i;

  std::vector<ElementId> t(std::size_t(order) * order);
  std::vector<unsigned char> c(n);
  for (unsigned a = 0; a < order; ++a)
    for (unsigned b = 0; b < order; ++b) {
      for (unsigned i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      t[std::size_t(a) * order + b] = ElementId(rank.at(c));
    }
  FiniteGroup g =
      FiniteGroup::from_table(std::move(name), order, std::move(t), cfg);

  // The rank map is the easy place to get composition wrong, so re-derive
  // the group from standard generators and insist the closure is everything.
  std::vector<ElementId> gens;
  auto rank_of = [&](const std::vector<unsigned char>& q) {
    return ElementId(rank.at(q));
  };
  if (!even_only && n >= 2) {
    std::vector<unsigned char> q(n);
    std::iota(q.begin(), q.end(), 0);
    std::swap(q[0], q[1]);
    gens.push_back(rank_of(q));  // the transposition (0 1)
    std::iota(q.begin(), q.end(), 0);
    std::rotate(q.begin(), q.begin() + 1, q.end());
    gens.push_back(rank_of(q));  // the n-cycle
  }
  if (even_only && n >= 3) {
    for (unsigned i = 0; i + 2 < n; ++i) {
      std::vector<unsigned char> q(n);
      std::iota(q.begin(), q.end(), 0);
      q[i] = (unsigned char)(i + 1);
      q[i + 1] = (unsigned char)(i + 2);
      q[i + 2] = (unsigned char)(i);
      gens.push_back(rank_of(q));  // consecutive 3-cycles
    }
  }
  if (!gens.empty())
    require_relation(
        generated_subgroup(g, std::span<const ElementId>(gens)).order == order,
        "standard generators span the group");
  return g;
}

}  // namespace

const char* gamma2_token(Gamma2Choice c) {
  switch (c) {
    case Gamma2Choice::a_half: return "ahalf";
    case Gamma2Choice::b: return "b";
    case Gamma2Choice::a_half_b: return "ahalfb";
  }
  return "?";
}

FiniteGroup build_cyclic(unsigned long long n, const GroupConfig& cfg) {
  if (n == 0) throw ValidationError("cyclic: n must be positive");
  check_capacity(n, cfg);
  unsigned order = unsigned(n);
  FiniteGroup g = table_group("cyclic:" + std::to_string(n), order,
                              [&](unsigned a, unsigned b) {
                                return (a + b) % order;
                              },
                              cfg);
  if (order > 1)
    require_relation(g.element_order(1) == order, "generator has order n");
  return g;
}

FiniteGroup build_abelian(
    std::span<const std::pair<long long, long long>> prime_powers,
    const GroupConfig& cfg) {
  if (prime_powers.empty())
    throw ValidationError("abelian: at least one factor required");
  std::vector<unsigned long long> radix;
  unsigned long long order = 1;
  std::string name = "abelian:";
  for (std::size_t i = 0; i < prime_powers.size(); ++i) {
    auto [p, a] = prime_powers[i];
    if (p < 2 || !is_prime(static_cast<unsigned long long>(p)))
      throw ValidationError("abelian: " + std::to_string(p) +
                            " is not prime");
    if (a < 1) throw ValidationError("abelian: exponent must be positive");
    unsigned long long m =
        checked_pow(static_cast<unsigned long long>(p), unsigned(a));
    radix.push_back(m);
    if (order > (1ull << 62) / m) throw ValidationError("parameter too large");
    order *= m;
    if (i) name += ',';
    name += std::to_string(p) + "^" + std::to_string(a);
  }
  check_capacity(order, cfg);

  unsigned k = unsigned(radix.size());
  auto decode = [&](unsigned id, std::vector<unsigned>& out) {
    for (unsigned i = k; i-- > 0;) {
      out[i] = id % unsigned(radix[i]);
      id /= unsigned(radix[i]);
    }
  };
  std::vector<unsigned> ta(k), tb(k);
  FiniteGroup g = table_group(
      std::move(name), unsigned(order),
      [&](unsigned a, unsigned b) {
        decode(a, ta);
        decode(b, tb);
        unsigned id = 0;
        for (unsigned i = 0; i < k; ++i)
          id = id * unsigned(radix[i]) +
               (ta[i] + tb[i]) % unsigned(radix[i]);
        return id;
      },
      cfg);

  require_relation(g.is_abelian(), "group is abelian");
  unsigned long long stride = order;
  for (unsigned i = 0; i < k; ++i) {
    stride /= radix[i];
    require_relation(g.element_order(ElementId(stride)) == radix[i],
                     "factor generator has the factor's order");
  }
  return g;
}

FiniteGroup build_dihedral(unsigned n, const GroupConfig& cfg) {
  if (n < 3) throw ValidationError("dihedral: n must be at least 3");
  check_capacity(2ull * n, cfg);
  unsigned order = 2 * n;
  FiniteGroup g = table_group(
      "dihedral:" + std::to_string(n), order,
      [&](unsigned a, unsigned b) {
        unsigned r1 = a % n, f1 = a / n, r2 = b % n, f2 = b / n;
        unsigned r = f1 ? (r1 + n - r2) % n : (r1 + r2) % n;
        return (f1 ^ f2) * n + r;
      },
      cfg);
  require_relation(g.element_order(1) == n, "rotation has order n");
  require_relation(g.element_order(ElementId(n)) == 2,
                   "reflection has order 2");
  require_relation(g.mul(g.mul(ElementId(n), 1), ElementId(n)) ==
                       g.inverse(1),
                   "y x y = x^-1");
  return g;
}

FiniteGroup build_dicyclic(unsigned n, const GroupConfig& cfg) {
  if (n == 0) throw ValidationError("dicyclic: n must be positive");
  check_capacity(4ull * n, cfg);
  FiniteGroup g = FiniteGroup::from_table("dicyclic:" + std::to_string(n),
                                          4 * n, dicyclic_table(n), cfg);
  check_dicyclic_relations(g, n);
  return g;
}

FiniteGroup build_generalized_quaternion(unsigned n, const GroupConfig& cfg) {
  if (n < 3) throw ValidationError("quaternion: n must be at least 3");
  if (n >= 32) throw ValidationError("parameter too large");
  unsigned long long order = 1ull << n;
  check_capacity(order, cfg);
  unsigned m = unsigned(order / 4);  // 2^(n-2)
  FiniteGroup g = FiniteGroup::from_table("quaternion:" + std::to_string(n),
                                          unsigned(order), dicyclic_table(m),
                                          cfg);
  check_dicyclic_relations(g, m);
  return g;
}

FiniteGroup build_semidihedral(unsigned n, const GroupConfig& cfg) {
  if (n < 4) throw ValidationError("semidihedral: n must be at least 4");
  if (n >= 32) throw ValidationError("parameter too large");
  unsigned long long order = 1ull << n;
  check_capacity(order, cfg);
  unsigned m = unsigned(order / 2);  // order of x
  unsigned t = m / 2 - 1;            // 2^(n-2) - 1, an involution mod m
  FiniteGroup g = table_group(
      "semidihedral:" + std::to_string(n), unsigned(order),
      [&](unsigned a, unsigned b) {
        unsigned i1 = a % m, j1 = a / m, i2 = b % m, j2 = b / m;
        unsigned long long i =
            (i1 + static_cast<unsigned long long>(i2) * (j1 ? t : 1)) % m;
        return unsigned((j1 ^ j2) * m + i);
      },
      cfg);
  require_relation(g.element_order(1) == m, "x has order 2^(n-1)");
  require_relation(g.element_order(ElementId(m)) == 2, "y has order 2");
  require_relation(g.mul(g.mul(ElementId(m), 1), ElementId(m)) ==
                       g.power(1, t),
                   "y x y = x^(2^(n-2)-1)");
  return g;
}

FiniteGroup build_modular_p(unsigned long long p, unsigned n,
                            const GroupConfig& cfg) {
  if (!is_prime(p)) throw ValidationError("modular: p must be prime");
  if (n < 3) throw ValidationError("modular: n must be at least 3");
  unsigned long long order = checked_pow(p, n);
  check_capacity(order, cfg);
  unsigned long long m = order / p;  // p^(n-1), order of x
  unsigned long long t = m / p + 1;  // p^(n-2) + 1; t^p = 1 mod m

  std::vector<unsigned long long> tpow(p);  // t^j mod m for j = 0..p-1
  tpow[0] = 1;
  for (unsigned long long j = 1; j < p; ++j) tpow[j] = tpow[j - 1] * t % m;

  FiniteGroup g = table_group(
      "modular:" + std::to_string(p) + "," + std::to_string(n),
      unsigned(order),
      [&](unsigned a, unsigned b) {
        unsigned long long i1 = a % m, j1 = a / m, i2 = b % m, j2 = b / m;
        unsigned long long i = (i1 + i2 * tpow[j1]) % m;
        return unsigned(((j1 + j2) % p) * m + i);
      },
      cfg);
  require_relation(g.element_order(1) == m, "x has order p^(n-1)");
  require_relation(g.element_order(ElementId(m)) == p, "y has order p");
  require_relation(g.mul(g.mul(ElementId(m), 1), g.inverse(ElementId(m))) ==
                       g.power(1, t),
                   "y x y^-1 = x^(p^(n-2)+1)");
  return g;
}

FiniteGroup build_generalized_dicyclic(unsigned n, Gamma2Choice gamma2,
                                       const GroupConfig& cfg) {
  if (n == 0) throw ValidationError("gendicyclic: n must be positive");
  if (n % 2 != 0 && gamma2 != Gamma2Choice::b)
    throw ValidationError(
        "gendicyclic: gamma^2 involving a^(n/2) requires even n");
  check_capacity(4ull * n, cfg);
  unsigned an = 2 * n;  // |A|, A = Z_n x Z_2 with pair (i, j) at 2i + j
  unsigned c;           // A-id of gamma^2
  switch (gamma2) {
    case Gamma2Choice::a_half: c = n; break;          // (n/2, 0) -> 2*(n/2)
    case Gamma2Choice::b: c = 1; break;               // (0, 1)
    case Gamma2Choice::a_half_b: c = n + 1; break;    // (n/2, 1)
  }
  auto a_add = [&](unsigned u, unsigned v) {
    return ((u / 2 + v / 2) % n) * 2 + ((u ^ v) & 1);
  };
  auto a_neg = [&](unsigned u) { return ((n - u / 2) % n) * 2 + (u & 1); };

  FiniteGroup g = table_group(
      "gendicyclic:" + std::to_string(n) + "," + gamma2_token(gamma2), 4 * n,
      [&](unsigned x, unsigned y) {
        unsigned u = x % an, k1 = x / an, v = y % an, k2 = y / an;
        unsigned w = a_add(u, k1 ? a_neg(v) : v);
        if (k1 & k2) w = a_add(w, c);
        return (k1 ^ k2) * an + w;
      },
      cfg);

  ElementId gamma = ElementId(an);
  require_relation(g.mul(gamma, gamma) == ElementId(c), "gamma^2 as chosen");
  for (unsigned u = 0; u < an; ++u)
    require_relation(g.mul(g.mul(gamma, ElementId(u)), g.inverse(gamma)) ==
                         g.inverse(ElementId(u)),
                     "gamma inverts A");
  if (n >= 2) {
    require_relation(g.element_order(2) == n, "a has order n");
    require_relation(g.element_order(1) == 2, "b has order 2");
  }
  return g;
}

FiniteGroup build_symmetric(unsigned n, const GroupConfig& cfg) {
  if (n == 0) throw ValidationError("symmetric: n must be positive");
  check_capacity(factorial(n), cfg);
  return permutation_group("symmetric:" + std::to_string(n), n, false, cfg);
}

FiniteGroup build_alternating(unsigned n, const GroupConfig& cfg) {
  if (n == 0) throw ValidationError("alternating: n must be positive");
  check_capacity(n >= 2 ? factorial(n) / 2 : 1, cfg);
  return permutation_group("alternating:" + std::to_string(n), n, true, cfg);
}

std::string GroupSpec::text() const {
  switch (family) {
    case Family::cyclic: return "cyclic:" + std::to_string(params[0]);
    case Family::abelian: {
      std::string s = "abelian:";
      for (std::size_t i = 0; i < prime_powers.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(prime_powers[i].first) + "^" +
             std::to_string(prime_powers[i].second);
      }
      return s;
    }
    case Family::dihedral: return "dihedral:" + std::to_string(params[0]);
    case Family::quaternion: return "quaternion:" + std::to_string(params[0]);
    case Family::semidihedral:
      return "semidihedral:" + std::to_string(params[0]);
    case Family::modular_p:
      return "modular:" + std::to_string(params[0]) + "," +
             std::to_string(params[1]);
    case Family::dicyclic: return "dicyclic:" + std::to_string(params[0]);
    case Family::gen_dicyclic:
      return "gendicyclic:" + std::to_string(params[0]) + "," +
             gamma2_token(gamma2);
    case Family::symmetric: return "symmetric:" + std::to_string(params[0]);
    case Family::alternating:
      return "alternating:" + std::to_string(params[0]);
    case Family::product: {
      std::string s = "product:";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += '*';
        s += "(" + factors[i].text() + ")";
      }
      return s;
    }
  }
  return "?";
}

unsigned long long GroupSpec::order() const {
  switch (family) {
    case Family::cyclic: return static_cast<unsigned long long>(params[0]);
    case Family::abelian: {
      unsigned long long o = 1;
      for (auto [p, a] : prime_powers)
        o *= checked_pow(static_cast<unsigned long long>(p), unsigned(a));
      return o;
    }
    case Family::dihedral: return 2ull * params[0];
    case Family::quaternion:
    case Family::semidihedral: return 1ull << params[0];
    case Family::modular_p:
      return checked_pow(static_cast<unsigned long long>(params[0]),
                         unsigned(params[1]));
    case Family::dicyclic:
    case Family::gen_dicyclic: return 4ull * params[0];
    case Family::symmetric: return factorial(unsigned(params[0]));
    case Family::alternating:
      return params[0] >= 2 ? factorial(unsigned(params[0])) / 2 : 1;
    case Family::product: {
      unsigned long long o = 1;
      for (const auto& f : factors) o *= f.order();
      return o;
    }
  }
  return 0;
}

namespace {

struct Parser {
  std::string_view s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(pos, expected);
  }
  bool eof() const { return pos >= s.size(); }
  char peek() const { return eof() ? '\0' : s[pos]; }
  void expect(char c) {
    if (peek() != c) fail(std::string("'") + c + "'");
    ++pos;
  }
  std::string word() {
    std::size_t start = pos;
    while (!eof() && s[pos] >= 'a' && s[pos] <= 'z') ++pos;
    if (pos == start) fail("family name");
    return std::string(s.substr(start, pos - start));
  }
  long long number() {
    if (peek() < '0' || peek() > '9') fail("number");
    unsigned long long v = 0;
    while (!eof() && s[pos] >= '0' && s[pos] <= '9') {
      v = v * 10 + unsigned(s[pos] - '0');
      if (v > 1'000'000'000'000ull) fail("smaller number");
      ++pos;
    }
    return static_cast<long long>(v);
  }

  GroupSpec spec() {
    using Family = GroupSpec::Family;
    GroupSpec g;
    std::size_t at = pos;
    std::string fam = word();
    expect(':');
    if (fam == "cyclic") {
      g.family = Family::cyclic;
      g.params = {number()};
      if (g.params[0] < 1)
        throw ValidationError("cyclic: n must be positive");
    } else if (fam == "abelian") {
      g.family = Family::abelian;
      for (;;) {
        long long p = number();
        expect('^');
        long long a = number();
        if (!is_prime(static_cast<unsigned long long>(p)))
          throw ValidationError("abelian: " + std::to_string(p) +
                                " is not prime");
        if (a < 1)
          throw ValidationError("abelian: exponent must be positive");
        g.prime_powers.emplace_back(p, a);
        if (peek() != ',') break;
        ++pos;
      }
    } else if (fam == "dihedral") {
      g.family = Family::dihedral;
      g.params = {number()};
      if (g.params[0] < 3)
        throw ValidationError("dihedral: n must be at least 3");
    } else if (fam == "quaternion") {
      g.family = Family::quaternion;
      g.params = {number()};
      if (g.params[0] < 3)
        throw ValidationError("quaternion: n must be at least 3");
      if (g.params[0] >= 32) throw ValidationError("parameter too large");
    } else if (fam == "semidihedral") {
      g.family = Family::semidihedral;
      g.params = {number()};
      if (g.params[0] < 4)
        throw ValidationError("semidihedral: n must be at least 4");
      if (g.params[0] >= 32) throw ValidationError("parameter too large");
    } else if (fam == "modular") {
      g.family = Family::modular_p;
      long long p = number();
      expect(',');
      long long n = number();
      if (!is_prime(static_cast<unsigned long long>(p)))
        throw ValidationError("modular: p must be prime");
      if (n < 3) throw ValidationError("modular: n must be at least 3");
      g.params = {p, n};
    } else if (fam == "dicyclic") {
      g.family = Family::dicyclic;
      g.params = {number()};
      if (g.params[0] < 1)
        throw ValidationError("dicyclic: n must be positive");
    } else if (fam == "gendicyclic") {
      g.family = Family::gen_dicyclic;
      g.params = {number()};
      expect(',');
      std::string tok = word();
      if (tok == "ahalf")
        g.gamma2 = Gamma2Choice::a_half;
      else if (tok == "b")
        g.gamma2 = Gamma2Choice::b;
      else if (tok == "ahalfb")
        g.gamma2 = Gamma2Choice::a_half_b;
      else
        fail("one of ahalf, b, ahalfb");
      if (g.params[0] < 1)
        throw ValidationError("gendicyclic: n must be positive");
      if (g.params[0] % 2 != 0 && g.gamma2 != Gamma2Choice::b)
        throw ValidationError(
            "gendicyclic: gamma^2 involving a^(n/2) requires even n");
    } else if (fam == "symmetric" || fam == "alternating") {
      g.family = fam == "symmetric" ? Family::symmetric : Family::alternating;
      g.params = {number()};
      if (g.params[0] < 1 || g.params[0] > 20)
        throw ValidationError(fam + ": n must be between 1 and 20");
    } else if (fam == "product") {
      g.family = Family::product;
      for (;;) {
        expect('(');
        g.factors.push_back(spec());
        expect(')');
        if (peek() != '*') break;
        ++pos;
      }
      if (g.factors.size() < 2) fail("at least two product factors");
    } else {
      pos = at;
      fail("a known family name");
    }
    return g;
  }
};

FiniteGroup build_product(const GroupSpec& spec, const GroupConfig& cfg) {
  unsigned long long order = spec.order();
  check_capacity(order, cfg);
  FiniteGroup g = build_group(spec.factors[0], cfg);
  for (std::size_t i = 1; i < spec.factors.size(); ++i) {
    FiniteGroup h = build_group(spec.factors[i], cfg);
    g = direct_product(g, h, cfg);
  }
  return g;
}

}  // namespace

GroupSpec parse_group_spec(std::string_view s) {
  Parser p{s};
  GroupSpec g = p.spec();
  if (!p.eof()) p.fail("end of input");
  return g;
}

FiniteGroup build_group(const GroupSpec& spec, const GroupConfig& cfg) {
  using Family = GroupSpec::Family;
  switch (spec.family) {
    case Family::cyclic:
      return build_cyclic(static_cast<unsigned long long>(spec.params[0]),
                          cfg);
    case Family::abelian:
      return build_abelian(spec.prime_powers, cfg);
    case Family::dihedral:
      return build_dihedral(unsigned(spec.params[0]), cfg);
    case Family::quaternion:
      return build_generalized_quaternion(unsigned(spec.params[0]), cfg);
    case Family::semidihedral:
      return build_semidihedral(unsigned(spec.params[0]), cfg);
    case Family::modular_p:
      return build_modular_p(static_cast<unsigned long long>(spec.params[0]),
                             unsigned(spec.params[1]), cfg);
    case Family::dicyclic:
      return build_dicyclic(unsigned(spec.params[0]), cfg);
    case Family::gen_dicyclic:
      return build_generalized_dicyclic(unsigned(spec.params[0]), spec.gamma2,
                                        cfg);
    case Family::symmetric:
      return build_symmetric(unsigned(spec.params[0]), cfg);
    case Family::alternating:
      return build_alternating(unsigned(spec.params[0]), cfg);
    case Family::product:
      return build_product(spec, cfg);
  }
  throw ValidationError("unknown family");
}

}  // namespace cyclofact

#include "qutrit/mcs.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace qutrit {

const char* class_code(EntanglementClass c) {
  switch (c) {
    case EntanglementClass::separable: return "S";
    case EntanglementClass::bell: return "B";
    case EntanglementClass::partially_entangled: return "SB";
    case EntanglementClass::ghz: return "G";
  }
  return "?";
}

EntanglementClass class_from_code(std::string_view code) {
  if (code == "S") return EntanglementClass::separable;
  if (code == "B") return EntanglementClass::bell;
  if (code == "SB") return EntanglementClass::partially_entangled;
  if (code == "G") return EntanglementClass::ghz;
  throw std::invalid_argument("unknown class code '" + std::string(code) + "'");
}

bool Mcs::contains(const PauliOp& a) const {
  if (a.n != n) return false;
  return std::binary_search(member_codes.begin(), member_codes.end(),
                            op_code(a));
}

bool Mcs::disjoint_from(const Mcs& o) const {
  auto i = member_codes.begin();
  auto j = o.member_codes.begin();
  while (i != member_codes.end() && j != o.member_codes.end()) {
    if (*i == *j) return false;
    (*i < *j) ? ++i : ++j;
  }
  return true;
}

namespace {

int pow3(int n) {
  int r = 1;
  while (n-- > 0) r *= 3;
  return r;
}

int pow9(int n) { return pow3(n) * pow3(n); }

// Digitwise tables over the per-slot code k = x*3 + z.
struct SlotTables {
  std::array<std::array<int, 9>, 9> add;
  std::array<std::array<int, 9>, 9> symp;
  SlotTables() {
    for (int k1 = 0; k1 < 9; ++k1)
      for (int k2 = 0; k2 < 9; ++k2) {
        int x1 = k1 / 3, z1 = k1 % 3, x2 = k2 / 3, z2 = k2 % 3;
        add[k1][k2] = ((x1 + x2) % 3) * 3 + (z1 + z2) % 3;
        symp[k1][k2] = ((z1 * x2 - x1 * z2) % 3 + 3) % 3;
      }
  }
};

const SlotTables& slot_tables() {
  static const SlotTables t;
  return t;
}

int code_add(int n, int a, int b) {
  const auto& t = slot_tables();
  int r = 0, m = 1;
  for (int i = 0; i < n; ++i) {
    r += t.add[a % 9][b % 9] * m;
    a /= 9;
    b /= 9;
    m *= 9;
  }
  return r;
}

int code_symp(int n, int a, int b) {
  const auto& t = slot_tables();
  int s = 0;
  for (int i = 0; i < n; ++i) {
    s += t.symp[a % 9][b % 9];
    a /= 9;
    b /= 9;
  }
  return s % 3;
}

std::vector<int> body_profile(int n, const std::vector<PauliOp>& members) {
  std::vector<int> profile(n, 0);
  for (const PauliOp& m : members) ++profile[body_count(m) - 1];
  return profile;
}

Mcs make_mcs(int n, std::vector<int> generator_codes,
             std::vector<int> member_codes) {
  Mcs m;
  m.n = n;
  std::sort(member_codes.begin(), member_codes.end());
  m.member_codes = std::move(member_codes);
  m.members.reserve(m.member_codes.size());
  for (int c : m.member_codes) m.members.push_back(op_from_code(n, c));
  for (int g : generator_codes) m.generators.push_back(op_from_code(n, g));
  m.profile = body_profile(n, m.members);
  m.cls = classify_profile(n, m.profile);
  return m;
}

}  // namespace

EntanglementClass classify_profile(int n, const std::vector<int>& profile) {
  auto is = [&](std::vector<int> p) { return profile == p; };
  switch (n) {
    case 1:
      if (is({2})) return EntanglementClass::separable;
      break;
    case 2:
      if (is({4, 4})) return EntanglementClass::separable;
      if (is({0, 8})) return EntanglementClass::bell;
      break;
    case 3:
      if (is({6, 12, 8})) return EntanglementClass::separable;
      if (is({2, 8, 16})) return EntanglementClass::partially_entangled;
      if (is({0, 6, 20})) return EntanglementClass::ghz;
      break;
    default:
      throw std::invalid_argument("classify_profile: n out of range");
  }
  std::string p;
  for (int k : profile) p += std::to_string(k) + ",";
  throw theorem_violation(
      "commuting subset with body profile (" + p +
      ") matches no known class; the class census is falsified");
}

Mcs span(const std::vector<PauliOp>& generators) {
  if (generators.empty())
    throw std::invalid_argument("span: no generators given");
  const int n = generators[0].n;
  if (static_cast<int>(generators.size()) != n)
    throw std::invalid_argument("span: need exactly n generators for n qutrits");
  std::vector<int> gen_codes;
  for (const PauliOp& g : generators) {
    if (g.n != n) throw std::invalid_argument("span: mixed qutrit counts");
    if (!g.is_canonical())
      throw std::invalid_argument("span: generator " + format_op(g) +
                                  " is not canonical (nonzero phase)");
    if (g.is_identity_vec())
      throw std::invalid_argument("span: identity cannot generate");
    gen_codes.push_back(op_code(g));
  }
  for (size_t i = 0; i < generators.size(); ++i)
    for (size_t j = i + 1; j < generators.size(); ++j) {
      Trit t = symplectic_form(generators[i], generators[j]);
      if (t != 0)
        throw std::invalid_argument(
            "span: generators " + format_op(generators[i]) + " and " +
            format_op(generators[j]) + " do not commute (symplectic form " +
            std::to_string(int(t)) + ")");
    }

  // All nontrivial Z_3 combinations of the generator exponent vectors.
  std::set<int> codes;
  const int tuples = pow3(n);
  for (int t = 1; t < tuples; ++t) {
    int c = 0, tt = t;
    for (int i = 0; i < n; ++i) {
      int coef = tt % 3;
      tt /= 3;
      for (int k = 0; k < coef; ++k) c = code_add(n, c, gen_codes[i]);
    }
    codes.insert(c);
  }
  if (static_cast<int>(codes.size()) != tuples - 1)
    throw std::invalid_argument("span: dependent generators");
  return make_mcs(n, gen_codes,
                  std::vector<int>(codes.begin(), codes.end()));
}

std::vector<Mcs> enumerate_all_mcs(int n) {
  if (n < 1 || n > 3)
    throw std::invalid_argument("enumerate_all_mcs: n must be 1..3");
  const int space = pow9(n);

  std::vector<Mcs> out;
  std::set<std::vector<int>> seen;

  std::vector<int> gens;
  std::vector<int> span_list{0};
  std::vector<char> in_span(space, 0);
  in_span[0] = 1;

  // Depth-first extension with the canonical-minimum rule: a new generator v
  // must be exactly the smallest vector its step adds, so each subspace is
  // produced by its unique increasing minimal generating sequence.
  auto dfs = [&](auto&& self, int vstart) -> void {
    if (static_cast<int>(gens.size()) == n) {
      std::vector<int> key(span_list.begin() + 1, span_list.end());
      std::sort(key.begin(), key.end());
      if (seen.insert(key).second)
        out.push_back(make_mcs(n, gens, std::move(key)));
      return;
    }
    for (int v = vstart; v < space; ++v) {
      if (in_span[v]) continue;
      bool ok = true;
      for (int g : gens)
        if (code_symp(n, v, g) != 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      // New cosets s+v and s+2v; the minimum of the added vectors must be v.
      std::vector<int> added;
      added.reserve(span_list.size() * 2);
      for (int s : span_list) {
        int s1 = code_add(n, s, v);
        added.push_back(s1);
        added.push_back(code_add(n, s1, v));
      }
      for (int w : added)
        if (w < v) {
          ok = false;
          break;
        }
      if (!ok) continue;

      gens.push_back(v);
      for (int w : added) {
        in_span[w] = 1;
        span_list.push_back(w);
      }
      self(self, v + 1);
      for (int w : added) in_span[w] = 0;
      span_list.resize(span_list.size() - added.size());
      gens.pop_back();
    }
  };
  dfs(dfs, 1);

  int expected = 1;
  for (int i = 1; i <= n; ++i) expected *= pow3(i) + 1;
  if (static_cast<int>(out.size()) != expected)
    throw theorem_violation("enumerate_all_mcs: found " +
                            std::to_string(out.size()) + " subspaces, expected " +
                            std::to_string(expected));

  std::sort(out.begin(), out.end(), [](const Mcs& a, const Mcs& b) {
    return a.member_codes < b.member_codes;
  });
  return out;
}

std::vector<Mcs> mcs_containing(const PauliOp& a) {
  PauliOp c = a.canonical();
  if (c.is_identity_vec())
    throw std::invalid_argument("mcs_containing: identity belongs to every subset");
  std::vector<Mcs> out;
  for (Mcs& m : enumerate_all_mcs(a.n))
    if (m.contains(c)) out.push_back(std::move(m));
  return out;
}

}  // namespace qutrit
